#include "lexshell/category.hpp"

#include <algorithm>
#include <numeric>

namespace lexshell {

namespace {

// Union-find over path indices.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);  // keep smallest index as root
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::string AcyclicCategory::path_key(const std::vector<int>& edges) {
  std::string key;
  for (int e : edges) {
    key += std::to_string(e);
    key += ',';
  }
  return key;
}

AcyclicCategory AcyclicCategory::build(
    std::vector<std::string> objects, std::vector<GeneratorSpec> generators,
    const std::vector<std::pair<GenPath, GenPath>>& relations) {
  AcyclicCategory c;
  c.objects_ = std::move(objects);
  for (int i = 0; i < (int)c.objects_.size(); ++i) {
    auto [it, fresh] = c.object_index_.emplace(c.objects_[i], i);
    if (!fresh) fail(Errc::duplicate_element, "duplicate object '" + c.objects_[i] + "'");
  }
  c.generators_ = std::move(generators);
  for (int g = 0; g < (int)c.generators_.size(); ++g) {
    const auto& spec = c.generators_[g];
    auto [it, fresh] = c.generator_index_.emplace(spec.id, g);
    if (!fresh) fail(Errc::duplicate_element, "duplicate generator '" + spec.id + "'");
    c.edges_.push_back({c.object_index(spec.dom), c.object_index(spec.cod)});
  }
  detail::require_acyclic(c.object_count(), c.edges_, c.objects_);

  auto all = detail::enumerate_paths(c.object_count(), c.edges_, detail::path_enumeration_bound());
  for (auto& p : all)
    if (p.length() > 0) c.paths_.push_back(std::move(p));
  for (int i = 0; i < (int)c.paths_.size(); ++i) c.path_index_.emplace(path_key(c.paths_[i].edges), i);

  // Congruence closure: union the stated relations, then keep extending
  // related pairs by single generators on both sides until stable.
  UnionFind uf(c.path_count());
  for (const auto& [lhs, rhs] : relations) {
    auto a = c.resolve_relation_side(lhs);
    auto b = c.resolve_relation_side(rhs);
    int pa = c.find_path(a), pb = c.find_path(b);
    const auto& A = c.paths_[pa];
    const auto& B = c.paths_[pb];
    if (A.dom != B.dom || A.cod != B.cod)
      fail(Errc::relation_endpoint_mismatch, "relation sides have different endpoints");
    uf.unite(pa, pb);
  }
  c.relations_ = relations;
  std::vector<std::vector<int>> in_edges(c.object_count()), out_edges(c.object_count());
  for (int g = 0; g < c.generator_count(); ++g) {
    out_edges[c.edges_[g].dom].push_back(g);
    in_edges[c.edges_[g].cod].push_back(g);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 0; p < c.path_count(); ++p) {
      int r = uf.find(p);
      if (r == p) continue;
      const auto& pp = c.paths_[p];
      for (int g : in_edges[pp.dom]) {
        std::vector<int> pe{g}, re{g};
        pe.insert(pe.end(), c.paths_[p].edges.begin(), c.paths_[p].edges.end());
        re.insert(re.end(), c.paths_[r].edges.begin(), c.paths_[r].edges.end());
        changed |= uf.unite(c.find_path(pe), c.find_path(re));
      }
      for (int g : out_edges[pp.cod]) {
        auto pe = c.paths_[p].edges;
        auto re = c.paths_[r].edges;
        pe.push_back(g);
        re.push_back(g);
        changed |= uf.unite(c.find_path(pe), c.find_path(re));
      }
    }
  }

  // Classes in canonical order of their smallest member.
  std::vector<int> root_to_class(c.path_count(), -1);
  c.class_of_.assign(c.path_count(), -1);
  int class_count = 0;
  for (int p = 0; p < c.path_count(); ++p) {
    int r = uf.find(p);
    if (root_to_class[r] < 0) root_to_class[r] = class_count++;
    c.class_of_[p] = root_to_class[r];
  }
  std::vector<std::vector<int>> members(class_count);
  for (int p = 0; p < c.path_count(); ++p) members[c.class_of_[p]].push_back(p);
  for (int g = 0; g < c.generator_count(); ++g) {
    // Generators are single-edge paths; their class must not contain longer ones.
    int cls = c.class_of_[c.find_path({g})];
    for (int m : members[cls])
      if (c.paths_[m].length() > 1)
        fail(Errc::generator_decomposable,
             "generator '" + c.generators_[g].id + "' equals a composite path");
  }

  for (int v = 0; v < c.object_count(); ++v) {
    Morphism id;
    id.id = "id:" + c.objects_[v];
    id.dom = id.cod = v;
    id.identity = true;
    c.morphisms_.push_back(std::move(id));
  }
  for (int cls = 0; cls < class_count; ++cls) {
    Morphism m;
    const auto& rep = c.paths_[members[cls].front()];
    std::string label;
    for (int e : rep.edges) {
      if (!label.empty()) label += "*";
      label += c.generators_[e].id;
    }
    m.id = label;
    m.dom = rep.dom;
    m.cod = rep.cod;
    m.decompositions = members[cls];
    c.morphisms_.push_back(std::move(m));
  }

  c.reach_.assign(c.object_count(), std::vector<char>(c.object_count(), 0));
  for (int v = 0; v < c.object_count(); ++v) c.reach_[v][v] = 1;
  for (const auto& e : c.edges_) c.reach_[e.dom][e.cod] = 1;
  for (int k = 0; k < c.object_count(); ++k)
    for (int i = 0; i < c.object_count(); ++i)
      if (c.reach_[i][k])
        for (int j = 0; j < c.object_count(); ++j)
          if (c.reach_[k][j]) c.reach_[i][j] = 1;
  return c;
}

std::vector<int> AcyclicCategory::resolve_relation_side(const GenPath& side) const {
  if (side.empty()) fail(Errc::validation_error, "empty relation side");
  std::vector<int> edges;
  for (const auto& id : side) edges.push_back(generator_index(id));
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges_[edges[i - 1]].cod != edges_[edges[i]].dom)
      fail(Errc::relation_endpoint_mismatch, "relation side is not composable at '" + side[i] + "'");
  return edges;
}

int AcyclicCategory::object_index(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end())
    fail(Errc::unknown_element, "unknown object '" + std::string(name) + "'");
  return it->second;
}

int AcyclicCategory::generator_index(std::string_view id) const {
  auto it = generator_index_.find(std::string(id));
  if (it == generator_index_.end())
    fail(Errc::unknown_element, "unknown generator '" + std::string(id) + "'");
  return it->second;
}

int AcyclicCategory::find_path(const std::vector<int>& edges) const {
  auto it = path_index_.find(path_key(edges));
  return it == path_index_.end() ? -1 : it->second;
}

std::optional<int> AcyclicCategory::compose(int m1, int m2) const {
  const auto& a = morphisms_[m1];
  const auto& b = morphisms_[m2];
  if (a.cod != b.dom) return std::nullopt;
  if (a.identity) return m2;
  if (b.identity) return m1;
  auto edges = paths_[a.decompositions.front()].edges;
  const auto& tail = paths_[b.decompositions.front()].edges;
  edges.insert(edges.end(), tail.begin(), tail.end());
  return morphism_of_path(find_path(edges));
}

int AcyclicCategory::hom_size(int x, int y) const {
  int n = x == y ? 1 : 0;
  for (int m = object_count(); m < (int)morphisms_.size(); ++m)
    if (morphisms_[m].dom == x && morphisms_[m].cod == y) ++n;
  return n;
}

bool AcyclicCategory::is_augmented() const {
  if (object_count() == 0) return false;
  bool has_initial = false, has_terminal = false;
  for (int v = 0; v < object_count(); ++v) {
    bool initial = true, terminal = true;
    for (int w = 0; w < object_count(); ++w) {
      if (hom_size(v, w) != 1) initial = false;
      if (hom_size(w, v) != 1) terminal = false;
    }
    has_initial |= initial;
    has_terminal |= terminal;
  }
  return has_initial && has_terminal;
}

AcyclicCategory AcyclicCategory::augmented(bool force) const {
  if (!force && is_augmented()) return *this;
  auto fresh_object = [&](std::string base) {
    while (object_index_.count(base)) base += "_";
    return base;
  };
  std::string bot = fresh_object("0hat");
  std::string top = fresh_object("1hat");
  std::vector<std::string> objects;
  objects.push_back(bot);
  for (const auto& o : objects_) objects.push_back(o);
  objects.push_back(top);

  std::vector<GeneratorSpec> gens = generators_;
  auto fresh_gen = [&](std::string base) {
    while (generator_index_.count(base)) base += "_";
    return base;
  };
  std::vector<char> has_in(object_count(), 0), has_out(object_count(), 0);
  for (const auto& e : edges_) {
    has_in[e.cod] = 1;
    has_out[e.dom] = 1;
  }
  for (int v = 0; v < object_count(); ++v) {
    if (!has_in[v]) gens.push_back({fresh_gen("to:" + objects_[v]), bot, objects_[v]});
    if (!has_out[v]) gens.push_back({fresh_gen("from:" + objects_[v]), objects_[v], top});
  }
  if (object_count() == 0) gens.push_back({"to:top", bot, top});

  // Identify all parallel paths that begin at the new initial object or end
  // at the new terminal one; congruence closure keeps these classes from
  // touching existing hom-sets.
  std::vector<detail::RawEdge> raw;
  std::unordered_map<std::string, int> oidx;
  for (int i = 0; i < (int)objects.size(); ++i) oidx.emplace(objects[i], i);
  for (const auto& g : gens) raw.push_back({oidx.at(g.dom), oidx.at(g.cod)});
  auto paths = detail::enumerate_paths((int)objects.size(), raw, detail::path_enumeration_bound());
  auto relations = relations_;
  int bot_i = oidx.at(bot), top_i = oidx.at(top);
  std::unordered_map<long long, GenPath> first_seen;
  for (const auto& p : paths) {
    if (p.length() == 0 || (p.dom != bot_i && p.cod != top_i)) continue;
    GenPath ids;
    for (int e : p.edges) ids.push_back(gens[e].id);
    long long key = (long long)p.dom * (long long)objects.size() + p.cod;
    auto [it, fresh] = first_seen.emplace(key, ids);
    if (!fresh) relations.emplace_back(it->second, ids);
  }
  return build(std::move(objects), std::move(gens), relations);
}

AcyclicCategory AcyclicCategory::from_poset(const Poset& p) {
  std::vector<GeneratorSpec> gens;
  for (const auto& [x, y] : p.covers())
    gens.push_back({p.name(x) + "<" + p.name(y), p.name(x), p.name(y)});
  // Relate all parallel cover paths so every hom-set collapses to a point.
  std::vector<std::pair<GenPath, GenPath>> relations;
  std::vector<std::vector<std::vector<int>>> chains_by_pair;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (x == y || !p.leq(x, y)) continue;
      auto chains = p.maximal_chains(p.closed_interval(x, y));
      if (chains.size() < 2) continue;
      auto to_ids = [&](const Chain& c) {
        GenPath ids;
        for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i)
          ids.push_back(p.name(c.vertices[i]) + "<" + p.name(c.vertices[i + 1]));
        return ids;
      };
      for (std::size_t i = 1; i < chains.size(); ++i)
        relations.emplace_back(to_ids(chains[0]), to_ids(chains[i]));
    }
  return build(p.elements(), std::move(gens), relations);
}

Poset AcyclicCategory::to_poset() const {
  for (int x = 0; x < object_count(); ++x)
    for (int y = 0; y < object_count(); ++y)
      if (hom_size(x, y) > 1)
        fail(Errc::validation_error, "category is not poset-like: hom(" + objects_[x] + ", " +
                                         objects_[y] + ") has more than one morphism");
  std::vector<std::pair<std::string, std::string>> rel;
  for (int x = 0; x < object_count(); ++x)
    for (int y = 0; y < object_count(); ++y)
      if (x != y && hom_nonempty(x, y)) rel.emplace_back(objects_[x], objects_[y]);
  return Poset::build(objects_, rel);
}

bool operator==(const AcyclicCategory& a, const AcyclicCategory& b) {
  auto gens = [](const AcyclicCategory& c) {
    std::vector<std::tuple<std::string, std::string, std::string>> v;
    for (const auto& g : c.generators_) v.emplace_back(g.id, g.dom, g.cod);
    return v;
  };
  return a.objects_ == b.objects_ && gens(a) == gens(b) && a.class_of_ == b.class_of_;
}

}  // namespace lexshell
