#include "lexshell/path_table.hpp"

#include <algorithm>

namespace lexshell {

std::string PathTable::key(std::span<const int> edges) {
  std::string k;
  for (int e : edges) {
    k += std::to_string(e);
    k += ',';
  }
  return k;
}

PathTable::PathTable(Poset p) : mode_(Mode::poset), source_(std::move(p)) {
  const Poset& ps = poset();
  vertex_names_ = ps.elements();
  for (const auto& [x, y] : ps.covers()) {
    edges_.push_back({x, y});
    edge_names_.push_back(ps.name(x) + "<" + ps.name(y));
  }
  paths_ = detail::enumerate_paths(vertex_count(), edges_, detail::path_enumeration_bound());

  // Classes are the closed intervals, in (bottom, top) canonical order.
  std::vector<std::vector<int>> interval_id(vertex_count(), std::vector<int>(vertex_count(), -1));
  int classes = 0;
  for (int x = 0; x < vertex_count(); ++x)
    for (int y = 0; y < vertex_count(); ++y)
      if (ps.leq(x, y)) interval_id[x][y] = classes++;
  class_members_.resize(classes);
  class_of_.resize(paths_.size());
  for (PathId p = 0; p < (int)paths_.size(); ++p) {
    class_of_[p] = interval_id[paths_[p].dom][paths_[p].cod];
    class_members_[class_of_[p]].push_back(p);
  }
  index_paths();
}

PathTable::PathTable(AcyclicCategory c) : mode_(Mode::category), source_(std::move(c)) {
  const AcyclicCategory& cat = category();
  vertex_names_ = cat.objects();
  for (int g = 0; g < cat.generator_count(); ++g) {
    edges_.push_back(cat.generator(g));
    edge_names_.push_back(cat.generator_id(g));
  }
  paths_ = detail::enumerate_paths(vertex_count(), edges_, detail::path_enumeration_bound());

  // Classes mirror the morphism list: identities first, then congruence classes.
  class_members_.resize(cat.morphisms().size());
  class_of_.resize(paths_.size());
  for (PathId p = 0; p < (int)paths_.size(); ++p) {
    const auto& rp = paths_[p];
    int m = rp.length() == 0 ? cat.identity(rp.dom)
                             : cat.morphism_of_path(cat.find_path(rp.edges));
    class_of_[p] = m;
    class_members_[m].push_back(p);
  }
  index_paths();
}

void PathTable::index_paths() {
  trivial_.assign(vertex_count(), -1);
  into_.assign(vertex_count(), {});
  from_.assign(vertex_count(), {});
  for (int e = 0; e < edge_count(); ++e) edge_name_index_.emplace(edge_names_[e], e);
  std::vector<char> source_vertex(vertex_count(), 1), sink_vertex(vertex_count(), 1);
  for (const auto& e : edges_) {
    source_vertex[e.cod] = 0;
    sink_vertex[e.dom] = 0;
  }
  for (PathId p = 0; p < (int)paths_.size(); ++p) {
    const auto& rp = paths_[p];
    if (rp.length() == 0) {
      trivial_[rp.dom] = p;
      if (source_vertex[rp.dom] && sink_vertex[rp.dom]) maximal_.push_back(p);  // isolated vertex
    } else {
      into_[rp.cod].push_back(p);
      from_[rp.dom].push_back(p);
      if (source_vertex[rp.dom] && sink_vertex[rp.cod]) maximal_.push_back(p);
    }
    path_index_.emplace(key(rp.edges), p);
  }
}

const Poset& PathTable::poset() const {
  if (mode_ != Mode::poset) fail(Errc::validation_error, "not a poset instance");
  return std::get<Poset>(source_);
}

const AcyclicCategory& PathTable::category() const {
  if (mode_ != Mode::category) fail(Errc::validation_error, "not a category instance");
  return std::get<AcyclicCategory>(source_);
}

int PathTable::vertex_index(std::string_view name) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (vertex_names_[v] == name) return v;
  fail(Errc::unknown_element, "unknown vertex '" + std::string(name) + "'");
}

int PathTable::edge_index(std::string_view name) const {
  auto it = edge_name_index_.find(std::string(name));
  if (it == edge_name_index_.end())
    fail(Errc::unknown_element, "unknown edge '" + std::string(name) + "'");
  return it->second;
}

PathId PathTable::find_path(std::span<const int> edges) const {
  auto it = path_index_.find(key(edges));
  return it == path_index_.end() ? -1 : it->second;
}

PathId PathTable::subpath(PathId p, int first_edge, int count) const {
  const auto& rp = paths_[p];
  if (count == 0) {
    int v = first_edge == 0 ? rp.dom : edges_[rp.edges[first_edge - 1]].cod;
    return trivial_[v];
  }
  return find_path(std::span<const int>(rp.edges).subspan(first_edge, count));
}

PathId PathTable::concat(PathId a, PathId b) const {
  if (cod(a) != dom(b)) return -1;
  if (degree(a) == 0) return b;
  if (degree(b) == 0) return a;
  std::vector<int> edges = paths_[a].edges;
  edges.insert(edges.end(), paths_[b].edges.begin(), paths_[b].edges.end());
  return find_path(edges);
}

std::pair<int, int> PathTable::class_endpoints(ClassId c) const {
  PathId p = class_members_[c].front();
  return {dom(p), cod(p)};
}

std::string PathTable::class_display(ClassId c) const {
  auto [x, y] = class_endpoints(c);
  if (mode_ == Mode::poset) return "[" + vertex_name(x) + "," + vertex_name(y) + "]";
  const auto& m = category().morphisms()[c];
  return m.id + " (" + vertex_name(x) + " -> " + vertex_name(y) + ")";
}

bool PathTable::is_maximal(PathId p) const {
  return std::find(maximal_.begin(), maximal_.end(), p) != maximal_.end();
}

bool PathTable::divides(PathId w, PathId m) const {
  const auto& a = paths_[w].edges;
  const auto& b = paths_[m].edges;
  if (a.empty()) return false;
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i + a.size() <= b.size(); ++i)
    if (std::equal(a.begin(), a.end(), b.begin() + i)) return true;
  return false;
}

std::vector<int> PathTable::occurrences(PathId w, PathId m) const {
  std::vector<int> out;
  const auto& a = paths_[w].edges;
  const auto& b = paths_[m].edges;
  if (a.empty() || a.size() > b.size()) return out;
  for (std::size_t i = 0; i + a.size() <= b.size(); ++i)
    if (std::equal(a.begin(), a.end(), b.begin() + i)) out.push_back((int)i);
  return out;
}

bool PathTable::vertex_leq(int x, int y) const {
  if (mode_ == Mode::poset) return poset().leq(x, y);
  return category().hom_nonempty(x, y);
}

std::string PathTable::path_display(PathId p) const {
  const auto& rp = paths_[p];
  if (mode_ == Mode::poset) {
    std::string out = vertex_name(rp.dom);
    int at = rp.dom;
    for (int e : rp.edges) {
      at = edges_[e].cod;
      out += "-" + vertex_name(at);
    }
    return out;
  }
  if (rp.length() == 0) return "id:" + vertex_name(rp.dom);
  std::string out;
  for (int e : rp.edges) {
    if (!out.empty()) out += ".";
    out += edge_names_[e];
  }
  return out;
}

PathId PathTable::parse_path(std::string_view text) const {
  auto split = [](std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
      auto pos = s.find(sep, start);
      if (pos == std::string_view::npos) {
        parts.emplace_back(s.substr(start));
        break;
      }
      parts.emplace_back(s.substr(start, pos - start));
      start = pos + 1;
    }
    return parts;
  };
  if (mode_ == Mode::poset) {
    auto names = split(text, '-');
    if (names.empty()) fail(Errc::parse_error, "empty path");
    std::vector<int> verts;
    for (const auto& nm : names) verts.push_back(vertex_index(nm));
    if (verts.size() == 1) return trivial_[verts[0]];
    std::vector<int> edges;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
      int e = -1;
      for (int g = 0; g < edge_count(); ++g)
        if (edges_[g].dom == verts[i] && edges_[g].cod == verts[i + 1]) e = g;
      if (e < 0)
        fail(Errc::parse_error, "'" + vertex_name(verts[i]) + "-" + vertex_name(verts[i + 1]) +
                                    "' is not a cover relation");
      edges.push_back(e);
    }
    PathId p = find_path(edges);
    if (p < 0) fail(Errc::parse_error, "path not found: '" + std::string(text) + "'");
    return p;
  }
  if (text.rfind("id:", 0) == 0) return trivial_[vertex_index(text.substr(3))];
  std::vector<int> edges;
  for (const auto& id : split(text, '.')) edges.push_back(edge_index(id));
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges_[edges[i - 1]].cod != edges_[edges[i]].dom)
      fail(Errc::parse_error, "generators are not composable in '" + std::string(text) + "'");
  PathId p = find_path(edges);
  if (p < 0) fail(Errc::parse_error, "path not found: '" + std::string(text) + "'");
  return p;
}

}  // namespace lexshell
