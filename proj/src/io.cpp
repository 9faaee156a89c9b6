#include "lexshell/io.hpp"

#include <fstream>
#include <sstream>

namespace lexshell {

using nlohmann::json;

namespace {

json must_parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::parse_error, "malformed JSON");
  return j;
}

ParsedInstance parse_poset(const json& j) {
  ParsedInstance out;
  if (!j.contains("elements") || !j["elements"].is_array())
    fail(Errc::parse_error, "poset instance needs an 'elements' array");
  if (!j.contains("covers") || !j["covers"].is_array())
    fail(Errc::parse_error, "poset instance needs a 'covers' array");
  std::vector<std::string> elements;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) fail(Errc::parse_error, "element identifiers must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j["covers"]) {
    if (!c.is_array() || c.size() < 2 || c.size() > 3 || !c[0].is_string() || !c[1].is_string())
      fail(Errc::parse_error, "covers must be [src, dst] or [src, dst, label]");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    if (c.size() == 3) {
      if (!c[2].is_number_integer()) fail(Errc::parse_error, "cover labels must be integers");
      out.labels.push_back(c[2].get<long>());
    } else {
      out.labels.push_back(std::nullopt);
    }
    out.label_keys.push_back(covers.back().first + "<" + covers.back().second);
  }
  out.value = Poset::build(std::move(elements), covers);
  return out;
}

ParsedInstance parse_category(const json& j) {
  ParsedInstance out;
  if (!j.contains("objects") || !j["objects"].is_array())
    fail(Errc::parse_error, "category instance needs an 'objects' array");
  if (!j.contains("generators") || !j["generators"].is_array())
    fail(Errc::parse_error, "category instance needs a 'generators' array");
  std::vector<std::string> objects;
  for (const auto& o : j["objects"]) {
    if (!o.is_string()) fail(Errc::parse_error, "object identifiers must be strings");
    objects.push_back(o.get<std::string>());
  }
  std::vector<GeneratorSpec> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_object() || !g.contains("id") || !g.contains("dom") || !g.contains("cod"))
      fail(Errc::parse_error, "generators must be {id, dom, cod, label?}");
    gens.push_back({g["id"].get<std::string>(), g["dom"].get<std::string>(),
                    g["cod"].get<std::string>()});
    if (g.contains("label")) {
      if (!g["label"].is_number_integer())
        fail(Errc::parse_error, "generator labels must be integers");
      out.labels.push_back(g["label"].get<long>());
    } else {
      out.labels.push_back(std::nullopt);
    }
    out.label_keys.push_back(gens.back().id);
  }
  std::vector<std::pair<GenPath, GenPath>> relations;
  if (j.contains("relations")) {
    for (const auto& r : j["relations"]) {
      if (!r.is_array() || r.size() != 2)
        fail(Errc::parse_error, "relations must be pairs of generator-id sequences");
      GenPath lhs, rhs;
      for (const auto& id : r[0]) lhs.push_back(id.get<std::string>());
      for (const auto& id : r[1]) rhs.push_back(id.get<std::string>());
      relations.emplace_back(std::move(lhs), std::move(rhs));
    }
  }
  out.value = AcyclicCategory::build(std::move(objects), std::move(gens), relations);
  return out;
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
  json j = must_parse(text);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail(Errc::parse_error, "instance needs a 'kind' of \"poset\" or \"category\"");
  std::string kind = j["kind"].get<std::string>();
  ParsedInstance out;
  if (kind == "poset")
    out = parse_poset(j);
  else if (kind == "category")
    out = parse_category(j);
  else
    fail(Errc::parse_error, "unknown kind '" + kind + "'");
  out.digest = digest_of(j.dump());
  return out;
}

ParsedInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::usage_error, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

PathTable ParsedInstance::make_table() const {
  if (is_poset()) return PathTable(poset());
  return PathTable(category());
}

bool ParsedInstance::has_labelling() const {
  if (labels.empty()) return false;
  for (const auto& l : labels)
    if (l.has_value()) return true;
  return false;
}

EdgeLabelling ParsedInstance::labelling_for(const PathTable& t) const {
  std::vector<long> by_edge(t.edge_count());
  std::vector<char> seen(t.edge_count(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].has_value()) continue;
    int e;
    try {
      e = t.edge_index(label_keys[i]);
    } catch (const Error&) {
      continue;  // label on a relation that was reduced away
    }
    by_edge[e] = *labels[i];
    seen[e] = 1;
  }
  for (int e = 0; e < t.edge_count(); ++e)
    if (!seen[e])
      fail(Errc::validation_error,
           "no label for edge '" + t.edge_name(e) + "' (labelling must be total)");
  return EdgeLabelling(std::move(by_edge));
}

std::string instance_to_json(const PathTable& t, const EdgeLabelling* lab) {
  json j;
  if (t.mode() == PathTable::Mode::poset) {
    const Poset& p = t.poset();
    j["kind"] = "poset";
    j["elements"] = p.elements();
    json covers = json::array();
    for (int e = 0; e < t.edge_count(); ++e) {
      json c = json::array({p.name(t.edge(e).dom), p.name(t.edge(e).cod)});
      if (lab) c.push_back(lab->label(e));
      covers.push_back(std::move(c));
    }
    j["covers"] = std::move(covers);
  } else {
    const AcyclicCategory& c = t.category();
    j["kind"] = "category";
    j["objects"] = c.objects();
    json gens = json::array();
    for (int g = 0; g < c.generator_count(); ++g) {
      json spec;
      spec["id"] = c.generator_id(g);
      spec["dom"] = c.object_name(c.generator(g).dom);
      spec["cod"] = c.object_name(c.generator(g).cod);
      if (lab) spec["label"] = lab->label(g);
      gens.push_back(std::move(spec));
    }
    j["generators"] = std::move(gens);
    json rels = json::array();
    for (ClassId cls = c.object_count(); cls < (int)c.morphisms().size(); ++cls) {
      const auto& m = c.morphisms()[cls];
      if (m.decompositions.size() < 2) continue;
      const auto& rep = c.path(m.decompositions.front());
      auto ids = [&](const detail::RawPath& p) {
        json arr = json::array();
        for (int e : p.edges) arr.push_back(c.generator_id(e));
        return arr;
      };
      for (std::size_t i = 1; i < m.decompositions.size(); ++i)
        rels.push_back(json::array({ids(rep), ids(c.path(m.decompositions[i]))}));
    }
    j["relations"] = std::move(rels);
  }
  return j.dump(2);
}

json render_element(const PathTable& t, const AlgebraElement& f) {
  json terms = json::array();
  for (const auto& [p, c] : f.terms()) {
    json term;
    term["coef"] = c.str();
    term["path"] = t.path_display(p);
    terms.push_back(std::move(term));
  }
  json out;
  out["terms"] = std::move(terms);
  return out;
}

json render_basis(const PathTable& t, const GroebnerBasis& g) {
  json out;
  json elems = json::array();
  for (const auto& f : g.elements) elems.push_back(render_element(t, f));
  out["elements"] = std::move(elems);
  json lts = json::array();
  for (PathId p : g.initial_terms) lts.push_back(t.path_display(p));
  out["initial_terms"] = std::move(lts);
  out["reduced"] = g.reduced;
  if (t.mode() == PathTable::Mode::category)
    out["product_convention"] =
        "paths are written diagrammatically; composition symbols read in reverse";
  return out;
}

json render_complex(const Complex& k) {
  json out;
  json dims = json::array();
  for (int d = 0; d <= k.dim(); ++d) {
    json faces = json::array();
    for (int i = 0; i < k.face_count(d); ++i) {
      const auto& f = k.face({d, i});
      json jf;
      jf["label"] = f.label;
      jf["boundary"] = f.boundary;
      faces.push_back(std::move(jf));
    }
    dims.push_back(std::move(faces));
  }
  out["faces"] = std::move(dims);
  json facets = json::array();
  for (const auto& r : k.facets())
    facets.push_back(json::array({r.dim, r.idx}));
  out["facets"] = std::move(facets);
  return out;
}

std::vector<AlgebraElement> parse_basis_file(const std::string& text, const PathTable& t) {
  json j = must_parse(text);
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    fail(Errc::parse_error, "basis file needs an 'elements' array");
  std::vector<AlgebraElement> out;
  for (const auto& e : j["elements"]) {
    if (!e.is_object() || !e.contains("terms"))
      fail(Errc::parse_error, "basis elements need a 'terms' array");
    AlgebraElement f;
    for (const auto& term : e["terms"]) {
      if (!term.contains("coef") || !term.contains("path"))
        fail(Errc::parse_error, "terms are {coef, path}");
      long coef = term["coef"].get<long>();
      const auto& path = term["path"];
      PathId p;
      if (t.mode() == PathTable::Mode::poset) {
        std::string display;
        for (const auto& v : path) {
          if (!display.empty()) display += "-";
          display += v.get<std::string>();
        }
        p = t.parse_path(display);
      } else {
        std::string display;
        for (const auto& g : path) {
          if (!display.empty()) display += ".";
          display += g.get<std::string>();
        }
        p = t.parse_path(display);
      }
      f.add_term(p, Rat(coef));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::string digest_of(const std::string& canonical_text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical_text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
  return std::string(buf);
}

}  // namespace lexshell
