#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "lexshell/algebra.hpp"
#include "lexshell/monomial_order.hpp"
#include "lexshell/theorem_lab.hpp"
#include "helpers.hpp"

using namespace lexshell;
using namespace lexshell::test;

TEST_CASE("rationals") {
  CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
  CHECK((Rat(2, 4)) == Rat(1, 2));
  CHECK((Rat(1, -2)) == Rat(-1, 2));
  CHECK((Rat(3) / Rat(-3)).str() == "-1");
  CHECK(Rat(0).is_zero());
}

TEST_CASE("monomial multiplication") {
  auto inst = fig1();
  PathTable t = inst.make_table();
  auto mono = [&](const std::string& s) { return AlgebraElement::monomial(path_of(t, s)); };

  AlgebraElement ab_bf = multiply(t, mono("a-b"), mono("b-f"));
  REQUIRE(ab_bf.term_count() == 1);
  CHECK(t.path_display(ab_bf.terms()[0].first) == "a-b-f");

  CHECK(multiply(t, mono("a-b"), mono("c-f")).is_zero());

  // bilinearity: the a-d term dies against b-e
  AlgebraElement mixed = multiply(t, mono("a-b") - mono("a-d"), mono("b-e"));
  REQUIRE(mixed.term_count() == 1);
  CHECK(t.path_display(mixed.terms()[0].first) == "a-b-e");

  // trivial paths act as local identities
  AlgebraElement idx = multiply(t, mono("a"), mono("a-b"));
  REQUIRE(idx.term_count() == 1);
  CHECK(t.path_display(idx.terms()[0].first) == "a-b");
  CHECK(multiply(t, mono("b"), mono("a-b")).is_zero());
}

TEST_CASE("multiplication is associative and distributive") {
  auto inst = fig1();
  PathTable t = inst.make_table();
  REQUIRE(t.path_count() <= 50);
  for (PathId a = 0; a < t.path_count(); ++a)
    for (PathId b = 0; b < t.path_count(); ++b)
      for (PathId c = 0; c < t.path_count(); ++c) {
        AlgebraElement ea = AlgebraElement::monomial(a);
        AlgebraElement eb = AlgebraElement::monomial(b);
        AlgebraElement ec = AlgebraElement::monomial(c);
        CHECK(multiply(t, multiply(t, ea, eb), ec) == multiply(t, ea, multiply(t, eb, ec)));
      }

  std::mt19937_64 rng(2024);
  auto random_element = [&]() {
    AlgebraElement f;
    int terms = 1 + (int)(rng() % 3);
    for (int i = 0; i < terms; ++i)
      f.add_term((PathId)(rng() % t.path_count()), Rat((long long)(rng() % 5) - 2));
    return f;
  };
  for (int i = 0; i < 200; ++i) {
    AlgebraElement f = random_element(), g = random_element(), h = random_element();
    CHECK(multiply(t, f, g + h) == multiply(t, f, g) + multiply(t, f, h));
    CHECK(multiply(t, multiply(t, f, g), h) == multiply(t, f, multiply(t, g, h)));
  }
}

TEST_CASE("incidence product") {
  auto inst = fig1();
  const Poset& p = inst.poset();
  auto idx = [&](const char* s) { return p.index_of(s); };
  auto r = incidence_product(p, idx("a"), idx("b"), idx("b"), idx("g"));
  REQUIRE(r.has_value());
  CHECK(r->bottom == idx("a"));
  CHECK(r->top == idx("g"));
  CHECK_FALSE(incidence_product(p, idx("a"), idx("b"), idx("c"), idx("g")).has_value());
  auto degree_zero = incidence_product(p, idx("a"), idx("a"), idx("a"), idx("b"));
  REQUIRE(degree_zero.has_value());
  CHECK(degree_zero->top == idx("b"));
  try {
    incidence_product(p, idx("d"), idx("e"), idx("e"), idx("g"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_comparable);
  }
}

TEST_CASE("graded product") {
  auto inst = fig1();
  const Poset& p = inst.poset();
  auto idx = [&](const char* s) { return p.index_of(s); };
  // deg[a,b] + deg[b,g] = 1 + 2 = 3 = deg[a,g]
  CHECK(graded_product(p, idx("a"), idx("b"), idx("b"), idx("g")).has_value());
  // a-d-g is not of maximal length: 1 + 1 != 3
  CHECK_FALSE(graded_product(p, idx("a"), idx("d"), idx("d"), idx("g")).has_value());
  CHECK_FALSE(graded_product(p, idx("a"), idx("b"), idx("c"), idx("g")).has_value());
}

TEST_CASE("truncation") {
  auto inst = fig1();
  PathTable t = inst.make_table();
  auto mono = [&](const std::string& s) { return AlgebraElement::monomial(path_of(t, s)); };

  AlgebraElement paper_first = mono("a-d-g") - mono("a-b-e-g");
  CHECK(paper_first.truncated(t) == mono("a-d-g"));

  AlgebraElement homogeneous = mono("b-e-g") - mono("b-f-g");
  CHECK(homogeneous.truncated(t) == homogeneous);

  AlgebraElement mixed = mono("a-b-e") + mono("a-c-f") + mono("a-b-e-g");
  CHECK(mixed.truncated(t) == mono("a-b-e") + mono("a-c-f"));

  try {
    AlgebraElement{}.truncated(t);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_element);
  }
}

TEST_CASE("carriers on figure 1") {
  auto inst = fig1();
  PathTable t = inst.make_table();
  MonomialOrder ord(t, inst.labelling_for(t));

  CHECK(t.path_display(ord.carrier(path_of(t, "b-e"))) == "a-b-e-g");
  CHECK(t.path_display(ord.carrier(path_of(t, "a-b"))) == "a-b-f-g");  // (4,5,3) < (4,6,7)
  PathId full = path_of(t, "a-c-f-g");
  CHECK(ord.carrier(full) == full);

  // the concatenation route equals the first-dividing-chain route everywhere
  for (PathId p = 0; p < t.path_count(); ++p)
    if (t.degree(p) > 0) CHECK(ord.carrier(p) == ord.carrier_by_scan(p));
}

TEST_CASE("carrier routes agree on random instances") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Poset p = random_poset(seed * 271, 7, 0.4);
    PathTable t{p};
    std::vector<long> labels(t.edge_count());
    for (int e = 0; e < t.edge_count(); ++e) labels[e] = (long)((seed * 7 + e * 3) % 4 + 1);
    EdgeLabelling lab{labels};
    if (!check_prefix_condition(t, lab)) continue;
    MonomialOrder ord(t, lab);
    for (PathId q = 0; q < t.path_count(); ++q)
      if (t.degree(q) > 0) CHECK(ord.carrier(q) == ord.carrier_by_scan(q));
  }
}

TEST_CASE("order comparisons pinned by the running example") {
  auto inst = fig1();
  PathTable t = inst.make_table();
  MonomialOrder ord(t, inst.labelling_for(t));

  // the quadratic term beats the cubic one
  CHECK(ord.compare(path_of(t, "a-d-g"), path_of(t, "a-b-e-g")) > 0);
  auto explain = ord.compare_by_rules(path_of(t, "a-d-g"), path_of(t, "a-b-e-g"));
  CHECK(explain.result > 0);
  CHECK(explain.rule == OrderRule::degree);

  // (6,7) > (5,3) by labels
  CHECK(ord.compare(path_of(t, "b-e-g"), path_of(t, "b-f-g")) > 0);
  CHECK(ord.compare_by_rules(path_of(t, "b-e-g"), path_of(t, "b-f-g")).rule == OrderRule::labels);

  CHECK(ord.compare(path_of(t, "a-d-g"), path_of(t, "a-d-g")) == 0);
}

TEST_CASE("order is total and lawful on figure 1") {
  auto inst = fig1();
  PathTable t = inst.make_table();
  PairChecks checks;
  checks.shelling = false;
  auto v = analyze_pair(t, inst.labelling_for(t), checks);
  CHECK(v.order_laws_checked);
  CHECK(v.order_laws_ok);
}

TEST_CASE("carrier and domain tie-breaks on a repeated-label chain") {
  // both edges labelled 1; the two edges share the carrier, domain decides
  Poset chain = three_chain();
  PathTable t{chain};
  EdgeLabelling lab({1, 1});
  MonomialOrder ord(t, lab);
  PathId e01 = path_of(t, "0-1");
  PathId e12 = path_of(t, "1-2");
  auto explain = ord.compare_by_rules(e12, e01);
  CHECK(explain.result > 0);  // later domain is greater
  CHECK(explain.rule == OrderRule::domain);
}

TEST_CASE("order construction errors") {
  // unbounded poset
  PathTable t{Poset::build({"x", "y"}, {})};
  try {
    MonomialOrder ord(t, EdgeLabelling(std::vector<long>{}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_bounded);
  }
  // prefix violation: both chains labelled (1,2)
  PathTable td{diamond()};
  std::vector<long> dl(td.edge_count());
  for (int e = 0; e < td.edge_count(); ++e)
    dl[e] = (td.edge_name(e) == "0<x" || td.edge_name(e) == "0<y") ? 1 : 2;
  try {
    MonomialOrder ord(td, EdgeLabelling(dl));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::prefix_violation);
  }
  // two maximal category chains sharing a label sequence: shelling ambiguous
  AcyclicCategory c = AcyclicCategory::build(
      {"x", "y", "u", "v"}, {{"f", "x", "y"}, {"g", "u", "v"}}, {});
  PathTable tc{c};
  try {
    MonomialOrder ord(tc, EdgeLabelling({1, 1}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::order_not_total);
  }
  // degree-0 monomials are outside the order
  auto inst = fig1();
  PathTable tf = inst.make_table();
  MonomialOrder ord(tf, inst.labelling_for(tf));
  try {
    ord.compare(tf.trivial_path(0), path_of(tf, "a-b"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validation_error);
  }
}

TEST_CASE("parallel class census matches the quotient dimension") {
  auto inst = fig1();
  PathTable t = inst.make_table();
  CHECK(t.class_count() == 21);  // |Int(P)| for the figure-1 poset

  auto cat = exac();
  PathTable tc = cat.make_table();
  CHECK(tc.class_count() == 8);  // morphism count
}
