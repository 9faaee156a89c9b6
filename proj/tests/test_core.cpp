#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lexshell/category.hpp"
#include "lexshell/poset.hpp"
#include "lexshell/theorem_lab.hpp"
#include "helpers.hpp"

using namespace lexshell;
using namespace lexshell::test;

static int leq_pairs(const Poset& p) {
  int n = 0;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) ++n;
  return n;
}

TEST_CASE("three-chain basics") {
  Poset p = three_chain();
  CHECK(p.size() == 3);
  CHECK(p.covers().size() == 2);
  CHECK(leq_pairs(p) == 6);
  CHECK(p.is_bounded());
  CHECK(p.is_graded());
}

TEST_CASE("figure-1 poset shape") {
  auto inst = fig1();
  const Poset& p = inst.poset();
  CHECK(p.size() == 7);
  CHECK(p.covers().size() == 9);
  CHECK(p.name(p.bottom()) == "a");
  CHECK(p.name(p.top()) == "g");
  CHECK_FALSE(p.is_graded());  // chains of length 3 and 2
}

TEST_CASE("transitive reduction is idempotent under closure input") {
  auto inst = fig1();
  const Poset& p = inst.poset();
  std::vector<std::pair<std::string, std::string>> closure;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.less(x, y)) closure.emplace_back(p.name(x), p.name(y));
  Poset q = Poset::build(p.elements(), closure);
  CHECK(p == q);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Poset r = random_poset(seed, 7, 0.4);
    std::vector<std::pair<std::string, std::string>> rel;
    for (int x = 0; x < r.size(); ++x)
      for (int y = 0; y < r.size(); ++y)
        if (r.less(x, y)) rel.emplace_back(r.name(x), r.name(y));
    CHECK(Poset::build(r.elements(), rel) == r);
  }
}

TEST_CASE("build errors") {
  try {
    Poset::build({"0", "1"}, {{"0", "1"}, {"1", "0"}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cycle_detected);
  }
  try {
    Poset::build({"0"}, {{"0", "9"}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_element);
  }
  try {
    Poset::build({"0", "0"}, {});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::duplicate_element);
  }
}

TEST_CASE("augment") {
  Poset antichain = Poset::build({"x", "y"}, {});
  Poset dia = antichain.augmented();
  CHECK(dia.size() == 4);
  CHECK(dia.is_bounded());
  CHECK(dia.covers().size() == 4);

  Poset chain = three_chain();
  CHECK(chain.augmented() == chain);                 // bounded, untouched by default
  CHECK(chain.augmented(true).size() == 5);          // forced: a 5-chain
  CHECK(chain.augmented(true).covers().size() == 4);

  auto inst = fig1();
  const Poset& p = inst.poset();
  CHECK(p.augmented() == p);
  Poset forced = p.augmented(true);
  CHECK(forced.size() == 9);
  CHECK(forced.is_cover(forced.index_of("0hat"), forced.index_of("a")));
  CHECK(forced.is_cover(forced.index_of("g"), forced.index_of("1hat")));
}

TEST_CASE("closed intervals") {
  auto inst = fig1();
  const Poset& p = inst.poset();
  Interval af = p.closed_interval(p.index_of("a"), p.index_of("f"));
  std::set<std::string> names;
  for (int z : af.members) names.insert(p.name(z));
  CHECK(names == std::set<std::string>{"a", "b", "c", "f"});

  Interval xx = p.closed_interval(p.index_of("d"), p.index_of("d"));
  CHECK(xx.members.size() == 1);

  try {
    p.closed_interval(p.index_of("d"), p.index_of("e"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_comparable);
  }
}

TEST_CASE("maximal chains") {
  auto inst = fig1();
  const Poset& p = inst.poset();
  auto chains = p.maximal_chains(p.full_interval());
  std::set<std::string> got;
  for (const auto& c : chains) {
    std::string s;
    for (int v : c.vertices) s += p.name(v);
    got.insert(s);
  }
  CHECK(got == std::set<std::string>{"acfg", "abfg", "abeg", "adg"});

  auto bg = p.maximal_chains(p.closed_interval(p.index_of("b"), p.index_of("g")));
  std::set<std::string> got_bg;
  for (const auto& c : bg) {
    std::string s;
    for (int v : c.vertices) s += p.name(v);
    got_bg.insert(s);
  }
  CHECK(got_bg == std::set<std::string>{"beg", "bfg"});

  auto single = p.maximal_chains(p.closed_interval(p.index_of("c"), p.index_of("c")));
  REQUIRE(single.size() == 1);
  CHECK(single[0].length() == 0);
}

TEST_CASE("gradedness") {
  CHECK(three_chain().is_graded());
  CHECK(diamond().is_graded());
  try {
    Poset::build({"x", "y"}, {}).is_graded();
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_bounded);
  }
}

TEST_CASE("maximal chains are saturated with the right endpoints") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Poset p = random_poset(seed * 31, 2 + (int)(seed % 9), 0.35);
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y) {
        if (!p.leq(x, y)) continue;
        for (const auto& c : p.maximal_chains(p.closed_interval(x, y))) {
          CHECK(c.vertices.front() == x);
          CHECK(c.vertices.back() == y);
          for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i)
            CHECK(p.is_cover(c.vertices[i], c.vertices[i + 1]));
        }
      }
  }
}

TEST_CASE("exac category structure") {
  auto inst = exac();
  const AcyclicCategory& c = inst.category();
  CHECK(c.object_count() == 3);
  CHECK(c.generator_count() == 4);
  CHECK(c.morphisms().size() == 8);  // 3 identities + alpha1, alpha2, beta, gamma, beta.alpha

  int a1 = c.morphism_of_path(c.find_path({c.generator_index("alpha1")}));
  int a2 = c.morphism_of_path(c.find_path({c.generator_index("alpha2")}));
  int beta = c.morphism_of_path(c.find_path({c.generator_index("beta")}));
  int gamma = c.morphism_of_path(c.find_path({c.generator_index("gamma")}));
  CHECK(a1 != a2);
  auto ba1 = c.compose(a1, beta);
  auto ba2 = c.compose(a2, beta);
  REQUIRE(ba1.has_value());
  CHECK(*ba1 == *ba2);
  CHECK(*ba1 != gamma);
  CHECK(c.hom_size(0, 2) == 2);  // gamma and the composite class
}

TEST_CASE("category build errors") {
  try {
    AcyclicCategory::build({"x", "y", "z"},
                           {{"f", "x", "y"}, {"g", "x", "z"}},
                           {{{"f"}, {"g"}}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::relation_endpoint_mismatch);
  }
  try {
    AcyclicCategory::build({"x", "y", "z"},
                           {{"f", "x", "y"}, {"g", "y", "z"}, {"h", "x", "z"}},
                           {{{"h"}, {"f", "g"}}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::generator_decomposable);
  }
  try {
    AcyclicCategory::build({"x", "y"}, {{"f", "x", "y"}, {"g", "y", "x"}}, {});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cycle_detected);
  }
}

TEST_CASE("congruence closes under pre/post composition") {
  auto check_congruence = [](const AcyclicCategory& c) {
    for (int p = 0; p < c.path_count(); ++p)
      for (int q = 0; q < c.path_count(); ++q) {
        if (c.class_of_path(p) != c.class_of_path(q)) continue;
        for (int g = 0; g < c.generator_count(); ++g) {
          if (c.generator(g).cod == c.path(p).dom) {
            std::vector<int> gp{g}, gq{g};
            gp.insert(gp.end(), c.path(p).edges.begin(), c.path(p).edges.end());
            gq.insert(gq.end(), c.path(q).edges.begin(), c.path(q).edges.end());
            CHECK(c.class_of_path(c.find_path(gp)) == c.class_of_path(c.find_path(gq)));
          }
          if (c.generator(g).dom == c.path(p).cod) {
            auto pg = c.path(p).edges;
            auto qg = c.path(q).edges;
            pg.push_back(g);
            qg.push_back(g);
            CHECK(c.class_of_path(c.find_path(pg)) == c.class_of_path(c.find_path(qg)));
          }
        }
      }
  };
  check_congruence(exac().category());
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    AcyclicCategory c = random_category(seed, 5, 0.5);
    if (c.generator_count() <= 6) check_congruence(c);
  }
}

TEST_CASE("poset-as-category round trip") {
  auto inst = fig1();
  const Poset& p = inst.poset();
  AcyclicCategory c = AcyclicCategory::from_poset(p);
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < c.object_count(); ++y)
      CHECK(c.hom_size(x, y) <= 1);
  CHECK(c.to_poset() == p);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Poset r = random_poset(seed * 17, 6, 0.4);
    CHECK(AcyclicCategory::from_poset(r).to_poset() == r);
  }
}

TEST_CASE("augment_category") {
  auto inst = exac();
  AcyclicCategory aug = inst.category().augmented();
  CHECK(aug.object_count() == 5);
  CHECK(aug.is_augmented());
  int bot = aug.object_index("0hat");
  int top = aug.object_index("1hat");
  for (int v = 0; v < aug.object_count(); ++v) {
    CHECK(aug.hom_size(bot, v) == 1);
    CHECK(aug.hom_size(v, top) == 1);
  }
  // gamma and the composite class stay distinct after augmentation
  CHECK(aug.hom_size(aug.object_index("x0"), aug.object_index("x2")) == 2);
  // idempotent by default
  CHECK(aug.augmented().object_count() == 5);

  AcyclicCategory empty = AcyclicCategory::build({}, {}, {});
  AcyclicCategory two = empty.augmented();
  CHECK(two.object_count() == 2);
  CHECK(two.morphisms().size() == 3);  // two identities + the unique arrow
}
