#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "lexshell/complex.hpp"
#include "lexshell/theorem_lab.hpp"
#include "helpers.hpp"

using namespace lexshell;
using namespace lexshell::test;

namespace {

// Independent chain counter: enumerate subsets and test total comparability.
std::vector<int> chain_counts_by_size(const Poset& p) {
  std::vector<int> counts;
  const int n = p.size();
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    std::vector<int> sel;
    for (int v = 0; v < n; ++v)
      if (mask & (1ull << v)) sel.push_back(v);
    bool chain = true;
    for (std::size_t i = 0; i < sel.size() && chain; ++i)
      for (std::size_t j = i + 1; j < sel.size() && chain; ++j)
        chain = p.leq(sel[i], sel[j]) || p.leq(sel[j], sel[i]);
    if (chain) {
      if ((int)counts.size() < (int)sel.size()) counts.resize(sel.size(), 0);
      ++counts[sel.size() - 1];
    }
  }
  return counts;
}

std::set<std::string> facet_labels(const Complex& k) {
  std::set<std::string> out;
  for (const auto& f : k.facets()) out.insert(k.face(f).label);
  return out;
}

// Vertex-set reading of the shelling condition, valid for complexes whose
// faces are determined by their vertices.
bool is_shelling_by_vertices(const Complex& k, const FacetOrdering& order) {
  auto verts = [&](FaceRef r) {
    const auto& v = k.face(r).vertices;
    return std::set<int>(v.begin(), v.end());
  };
  for (int j = 1; j < (int)order.size(); ++j) {
    auto vj = verts(order[j]);
    for (int i = 0; i < j; ++i) {
      auto vi = verts(order[i]);
      std::set<int> common;
      std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                            std::inserter(common, common.begin()));
      bool found = false;
      for (int kk = 0; kk < j && !found; ++kk) {
        auto vk = verts(order[kk]);
        std::set<int> ckj;
        std::set_intersection(vk.begin(), vk.end(), vj.begin(), vj.end(),
                              std::inserter(ckj, ckj.begin()));
        if (ckj.size() + 1 != vj.size()) continue;
        found = std::includes(ckj.begin(), ckj.end(), common.begin(), common.end());
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("order complex of a 3-chain is the full 2-simplex") {
  Complex k = Complex::order_complex(three_chain());
  CHECK(k.face_count(0) == 3);
  CHECK(k.face_count(1) == 3);
  CHECK(k.face_count(2) == 1);
  CHECK(k.facets().size() == 1);
}

TEST_CASE("figure-1 order complex") {
  auto inst = fig1();
  Complex k = Complex::order_complex(inst.poset());
  auto expected = chain_counts_by_size(inst.poset());
  REQUIRE((int)expected.size() == k.dim() + 1);
  for (int d = 0; d <= k.dim(); ++d) CHECK(k.face_count(d) == expected[d]);
  CHECK(k.face_count(0) == 7);
  CHECK(k.face_count(1) == 14);
  CHECK(k.face_count(3) == 3);
  CHECK(facet_labels(k) ==
        std::set<std::string>{"a<c<f<g", "a<b<f<g", "a<b<e<g", "a<d<g"});
}

TEST_CASE("order complex face counts match chain counts on random posets") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Poset p = random_poset(seed * 101, 2 + (int)(seed % 7), 0.4);
    Complex k = Complex::order_complex(p);
    auto expected = chain_counts_by_size(p);
    REQUIRE((int)expected.size() == k.dim() + 1);
    for (int d = 0; d <= k.dim(); ++d) CHECK(k.face_count(d) == expected[d]);
  }
}

TEST_CASE("antichain order complex is two isolated vertices") {
  Complex k = Complex::order_complex(Poset::build({"x", "y"}, {}));
  CHECK(k.dim() == 0);
  CHECK(k.face_count(0) == 2);
  CHECK(k.facets().size() == 2);
}

TEST_CASE("boundary arity") {
  auto inst = fig1();
  Complex k = Complex::order_complex(inst.poset());
  for (int d = 1; d <= k.dim(); ++d)
    for (int i = 0; i < k.face_count(d); ++i)
      CHECK((int)k.face({d, i}).boundary.size() == d + 1);
}

TEST_CASE("nerve of the exac category") {
  auto inst = exac();
  Complex k = Complex::nerve(inst.category());
  CHECK(k.face_count(0) == 3);
  CHECK(k.face_count(1) == 5);
  CHECK(k.face_count(2) == 2);
  CHECK_FALSE(k.vertex_determined());
  // The two triangles share the beta edge and the composite edge.
  REQUIRE(k.face_count(2) == 2);
  const auto& f0 = k.face({2, 0});
  const auto& f1 = k.face({2, 1});
  std::set<int> b0(f0.boundary.begin(), f0.boundary.end());
  std::set<int> b1(f1.boundary.begin(), f1.boundary.end());
  std::set<int> shared;
  std::set_intersection(b0.begin(), b0.end(), b1.begin(), b1.end(),
                        std::inserter(shared, shared.begin()));
  CHECK(shared.size() == 2);
  std::set<std::string> shared_labels;
  for (int b : shared) shared_labels.insert(k.face({1, b}).label);
  CHECK(shared_labels == std::set<std::string>{"beta", "alpha1*beta"});
  CHECK((int)f0.boundary.size() == 3);  // drop-first, compose, drop-last
}

TEST_CASE("nerve of a poset-as-category matches the order complex") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Poset p = random_poset(seed * 7, 2 + (int)(seed % 6), 0.45);
    Complex oc = Complex::order_complex(p);
    Complex nv = Complex::nerve(AcyclicCategory::from_poset(p));
    REQUIRE(oc.dim() == nv.dim());
    // Face-wise bijection by vertex sets, compatible with boundaries.
    for (int d = 0; d <= oc.dim(); ++d) {
      REQUIRE(oc.face_count(d) == nv.face_count(d));
      std::map<std::vector<int>, int> oc_index, nv_index;
      for (int i = 0; i < oc.face_count(d); ++i) oc_index[oc.face({d, i}).vertices] = i;
      for (int i = 0; i < nv.face_count(d); ++i) nv_index[nv.face({d, i}).vertices] = i;
      REQUIRE((int)oc_index.size() == oc.face_count(d));
      REQUIRE((int)nv_index.size() == nv.face_count(d));
      for (const auto& [verts, i] : oc_index) REQUIRE(nv_index.count(verts));
      if (d == 0) continue;
      for (const auto& [verts, i] : oc_index) {
        std::multiset<std::vector<int>> oc_bnd, nv_bnd;
        for (int b : oc.face({d, i}).boundary) oc_bnd.insert(oc.face({d - 1, b}).vertices);
        for (int b : nv.face({d, nv_index[verts]}).boundary)
          nv_bnd.insert(nv.face({d - 1, b}).vertices);
        CHECK(oc_bnd == nv_bnd);
      }
    }
  }
}

TEST_CASE("nerve of one lonely object") {
  Complex k = Complex::nerve(AcyclicCategory::build({"x"}, {}, {}));
  CHECK(k.dim() == 0);
  CHECK(k.face_count(0) == 1);
}

TEST_CASE("is_shelling basics") {
  // single facet: vacuously a shelling
  Complex simplex = Complex::order_complex(three_chain());
  FacetOrdering order(simplex.facets().begin(), simplex.facets().end());
  CHECK(is_shelling(simplex, order));

  // two disjoint edges: no order works
  Poset two_edges = Poset::build({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  Complex k = Complex::order_complex(two_edges);
  REQUIRE(k.facets().size() == 2);
  FacetOrdering fwd(k.facets().begin(), k.facets().end());
  FacetOrdering bwd(fwd.rbegin(), fwd.rend());
  CHECK_FALSE(is_shelling(k, fwd));
  CHECK_FALSE(is_shelling(k, bwd));
  CHECK_FALSE(find_shelling(k).has_value());

  try {
    is_shelling(k, FacetOrdering{fwd[0]});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::incomplete_ordering);
  }
}

TEST_CASE("figure-1 lex facet order is a shelling") {
  auto inst = fig1();
  Complex k = Complex::order_complex(inst.poset());
  std::map<std::string, FaceRef> by_label;
  for (const auto& f : k.facets()) by_label[k.face(f).label] = f;
  FacetOrdering order{by_label.at("a<c<f<g"), by_label.at("a<b<f<g"), by_label.at("a<b<e<g"),
                      by_label.at("a<d<g")};
  CHECK(is_shelling(k, order));
  CHECK(is_shelling_by_vertices(k, order));  // independent vertex-set reading agrees
  auto found = find_shelling(k);
  REQUIRE(found.has_value());
  CHECK(is_shelling(k, *found));
}

TEST_CASE("find_shelling agrees with is_shelling on random posets") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    Poset p = random_poset(seed * 13, 2 + (int)(seed % 6), 0.5);
    Complex k = Complex::order_complex(p);
    if ((int)k.facets().size() > 7) continue;
    auto found = find_shelling(k);
    std::vector<int> idx(k.facets().size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
    bool any = false;
    std::sort(idx.begin(), idx.end());
    do {
      FacetOrdering order;
      for (int i : idx) order.push_back(k.facets()[i]);
      if (is_shelling(k, order)) {
        any = true;
        CHECK(is_shelling_by_vertices(k, order));
        break;
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
    CHECK(found.has_value() == any);
    if (found) CHECK(is_shelling(k, *found));
  }
}

TEST_CASE("find_shelling bound") {
  std::vector<std::string> names;
  for (int i = 0; i < 10; ++i) names.push_back("v" + std::to_string(i));
  Complex k = Complex::order_complex(Poset::build(names, {}));
  try {
    find_shelling(k);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::search_bound_exceeded);
  }
  CHECK(find_shelling(k, 10).has_value());  // 0-dimensional complexes shell trivially
}
