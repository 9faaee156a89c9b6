#include "lexshell/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "lexshell/detail/digraph.hpp"

namespace lexshell {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

}  // namespace

void Complex::finalize() {
  while (!faces_.empty() && faces_.back().empty()) faces_.pop_back();
  std::vector<std::vector<char>> in_boundary(faces_.size());
  for (std::size_t d = 0; d < faces_.size(); ++d) in_boundary[d].assign(faces_[d].size(), 0);
  for (std::size_t d = 1; d < faces_.size(); ++d)
    for (const auto& f : faces_[d]) {
      if ((int)f.boundary.size() != (int)d + 1)
        fail(Errc::validation_error, "face of dimension " + std::to_string(d) +
                                         " with " + std::to_string(f.boundary.size()) +
                                         " boundary entries");
      for (int b : f.boundary) {
        if (b < 0 || b >= (int)faces_[d - 1].size())
          fail(Errc::validation_error, "dangling boundary reference");
        in_boundary[d - 1][b] = 1;
      }
    }
  for (int d = 0; d < (int)faces_.size(); ++d)
    for (int i = 0; i < (int)faces_[d].size(); ++i)
      if (!in_boundary[d][i]) facets_.push_back({d, i});
  std::sort(facets_.begin(), facets_.end());
}

Complex Complex::order_complex(const Poset& p) {
  Complex k;
  k.vertex_determined_ = true;
  const long bound = detail::path_enumeration_bound();
  long count = 0;
  // Chains enumerated as increasing element sequences, grouped by size.
  std::vector<std::vector<std::vector<int>>> chains;  // chains[d] = (d+1)-element chains
  chains.emplace_back();
  for (int v = 0; v < p.size(); ++v) chains[0].push_back({v});
  count = p.size();
  while (!chains.back().empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& c : chains.back())
      for (int z = 0; z < p.size(); ++z)
        if (p.less(c.back(), z)) {
          auto bigger = c;
          bigger.push_back(z);
          next.push_back(std::move(bigger));
          if (++count > bound)
            fail(Errc::path_bound_exceeded, "order complex exceeds the face bound");
        }
    chains.push_back(std::move(next));
  }
  chains.pop_back();

  std::map<std::vector<int>, int> index_of;
  for (int d = 0; d < (int)chains.size(); ++d) {
    k.faces_.emplace_back();
    std::map<std::vector<int>, int> this_dim;
    for (const auto& c : chains[d]) {
      Face f;
      f.chain = c;
      f.vertices = c;
      std::sort(f.vertices.begin(), f.vertices.end());
      std::vector<std::string> names;
      for (int v : c) names.push_back(p.name(v));
      f.label = join(names, "<");
      if (d > 0)
        for (int drop = 0; drop <= d; ++drop) {
          auto sub = c;
          sub.erase(sub.begin() + drop);
          f.boundary.push_back(index_of.at(sub));
        }
      this_dim.emplace(c, (int)k.faces_[d].size());
      k.faces_[d].push_back(std::move(f));
    }
    index_of = std::move(this_dim);
  }
  k.finalize();
  return k;
}

Complex Complex::nerve(const AcyclicCategory& c) {
  Complex k;
  k.vertex_determined_ = false;
  const long bound = detail::path_enumeration_bound();
  long count = 0;
  const auto& morphisms = c.morphisms();
  const int nobj = c.object_count();

  // k-faces are composable chains of non-identity morphisms, diagrammatic order.
  std::vector<std::vector<std::vector<int>>> chains;
  chains.emplace_back();  // dimension 1 seeds
  for (int m = nobj; m < (int)morphisms.size(); ++m) chains[0].push_back({m});
  count = nobj + (long)chains[0].size();
  while (!chains.back().empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& ch : chains.back())
      for (int m = nobj; m < (int)morphisms.size(); ++m)
        if (morphisms[ch.back()].cod == morphisms[m].dom) {
          auto bigger = ch;
          bigger.push_back(m);
          next.push_back(std::move(bigger));
          if (++count > bound) fail(Errc::path_bound_exceeded, "nerve exceeds the face bound");
        }
    chains.push_back(std::move(next));
  }
  chains.pop_back();

  k.faces_.emplace_back();
  for (int v = 0; v < nobj; ++v) {
    Face f;
    f.label = "id:" + c.object_name(v);
    f.vertices = {v};
    k.faces_[0].push_back(std::move(f));
  }
  std::map<std::vector<int>, int> index_of;
  for (int d = 0; d < (int)chains.size(); ++d) {
    k.faces_.emplace_back();
    std::map<std::vector<int>, int> this_dim;
    for (const auto& ch : chains[d]) {
      Face f;
      std::vector<std::string> names;
      std::set<int> verts;
      verts.insert(morphisms[ch.front()].dom);
      for (int m : ch) {
        names.push_back(morphisms[m].id);
        verts.insert(morphisms[m].cod);
      }
      f.label = join(names, "|");
      f.vertices.assign(verts.begin(), verts.end());
      if (d == 0) {
        f.boundary = {morphisms[ch[0]].dom, morphisms[ch[0]].cod};
      } else {
        // drop-first, compose each adjacent pair, drop-last
        f.boundary.push_back(index_of.at(std::vector<int>(ch.begin() + 1, ch.end())));
        for (int i = 0; i + 1 <= d; ++i) {
          auto merged = ch;
          merged[i] = *c.compose(ch[i], ch[i + 1]);
          merged.erase(merged.begin() + i + 1);
          f.boundary.push_back(index_of.at(merged));
        }
        f.boundary.push_back(index_of.at(std::vector<int>(ch.begin(), ch.end() - 1)));
      }
      this_dim.emplace(ch, (int)k.faces_[d + 1].size());
      k.faces_[d + 1].push_back(std::move(f));
    }
    index_of = std::move(this_dim);
  }
  k.finalize();
  return k;
}

std::vector<FaceRef> Complex::subface_closure(FaceRef r) const {
  std::set<FaceRef> seen;
  std::function<void(FaceRef)> walk = [&](FaceRef at) {
    if (!seen.insert(at).second) return;
    if (at.dim == 0) return;
    for (int b : face(at).boundary) walk({at.dim - 1, b});
  };
  walk(r);
  return {seen.begin(), seen.end()};
}

namespace {

using FaceSet = std::set<FaceRef>;

FaceSet closure_set(const Complex& k, FaceRef r) {
  auto v = k.subface_closure(r);
  return FaceSet(v.begin(), v.end());
}

FaceSet intersect(const FaceSet& a, const FaceSet& b) {
  FaceSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
  return out;
}

bool subset(const FaceSet& a, const FaceSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Subfaces of F avoiding one chosen vertex, for every vertex of F.
std::vector<FaceSet> deletions(const Complex& k, const FaceSet& closure, const Complex::Face& f) {
  std::vector<FaceSet> out;
  for (int x : f.vertices) {
    FaceSet del;
    for (const auto& r : closure) {
      const auto& verts = k.face(r).vertices;
      if (!std::binary_search(verts.begin(), verts.end(), x)) del.insert(r);
    }
    out.push_back(std::move(del));
  }
  return out;
}

struct ShellingScratch {
  std::vector<FaceSet> closures;
  std::vector<std::vector<FaceSet>> dels;
};

ShellingScratch prepare(const Complex& k, std::span<const FaceRef> facets) {
  ShellingScratch s;
  for (const auto& f : facets) {
    s.closures.push_back(closure_set(k, f));
    s.dels.push_back(deletions(k, s.closures.back(), k.face(f)));
  }
  return s;
}

// Condition for the pair (i, j) given positions 0..j are placed.
bool pair_ok(const ShellingScratch& s, const std::vector<int>& order, int i, int j) {
  auto common_ij = intersect(s.closures[order[i]], s.closures[order[j]]);
  for (int kk = 0; kk < j; ++kk) {
    auto common_kj = intersect(s.closures[order[kk]], s.closures[order[j]]);
    for (const auto& del : s.dels[order[j]])
      if (common_kj == del && subset(common_ij, common_kj)) return true;
  }
  return false;
}

}  // namespace

bool is_shelling(const Complex& k, const FacetOrdering& order) {
  auto facets = k.facets();
  std::vector<FaceRef> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (!std::equal(sorted.begin(), sorted.end(), facets.begin(), facets.end()))
    fail(Errc::incomplete_ordering, "ordering is not a permutation of the facet set");
  std::vector<int> pos(order.size());
  for (int i = 0; i < (int)order.size(); ++i) {
    auto it = std::lower_bound(facets.begin(), facets.end(), order[i]);
    pos[i] = (int)(it - facets.begin());
  }
  auto s = prepare(k, facets);
  for (int j = 1; j < (int)pos.size(); ++j)
    for (int i = 0; i < j; ++i)
      if (!pair_ok(s, pos, i, j)) return false;
  return true;
}

std::optional<FacetOrdering> find_shelling(const Complex& k, int facet_bound) {
  auto facets = k.facets();
  const int n = (int)facets.size();
  if (n > facet_bound)
    fail(Errc::search_bound_exceeded, std::to_string(n) + " facets exceeds the search bound " +
                                          std::to_string(facet_bound));
  if (n == 0) return FacetOrdering{};
  auto s = prepare(k, facets);
  std::vector<int> order;
  std::vector<char> used(n, 0);
  std::function<bool()> dfs = [&]() -> bool {
    if ((int)order.size() == n) return true;
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      order.push_back(cand);
      int j = (int)order.size() - 1;
      bool ok = true;
      for (int i = 0; i < j && ok; ++i) ok = pair_ok(s, order, i, j);
      if (ok) {
        used[cand] = 1;
        if (dfs()) return true;
        used[cand] = 0;
      }
      order.pop_back();
    }
    return false;
  };
  if (!dfs()) return std::nullopt;
  FacetOrdering out;
  for (int i : order) out.push_back(facets[i]);
  return out;
}

}  // namespace lexshell
