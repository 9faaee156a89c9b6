#include "lexshell/theorem_lab.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "lexshell/complex.hpp"
#include "lexshell/io.hpp"

namespace lexshell {

namespace {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int below(int n) { return (int)(eng() % (std::uint64_t)n); }
  bool chance(double p) { return ((eng() >> 11) * 0x1.0p-53) < p; }
};

std::string dump_pair(const PathTable& t, const EdgeLabelling& lab) {
  return instance_to_json(t, &lab);
}

}  // namespace

VerifyReport verify_forward(const PathTable& t, const EdgeLabelling& lab) {
  VerifyReport r;
  r.sbs_witness = find_sbs_violation(t, lab);
  r.sbs = !r.sbs_witness.has_value();
  if (!r.sbs) {
    r.applicable = false;
    return r;
  }
  MonomialOrder ord(t, lab);
  r.basis = buchberger(t, parallel_ideal_generators(t), ord);
  r.quadratic = is_quadratic(t, r.basis);
  r.dimensions = dimension_check(t, r.basis, ord);
  if (!r.quadratic)
    fail(Errc::theorem_violation,
         "SBS labelling produced a non-quadratic basis; instance:\n" + dump_pair(t, lab));
  return r;
}

VerifyReport verify_backward(const PathTable& t, const EdgeLabelling& lab) {
  VerifyReport r;
  MonomialOrder ord(t, lab);
  r.basis = buchberger(t, parallel_ideal_generators(t), ord);
  r.quadratic = is_quadratic(t, r.basis);
  r.dimensions = dimension_check(t, r.basis, ord);
  r.sbs_witness = find_sbs_violation(t, lab);
  r.sbs = !r.sbs_witness.has_value();
  if (r.quadratic && !r.sbs)
    fail(Errc::theorem_violation,
         "quadratic basis but the labelling fails SBS; instance:\n" + dump_pair(t, lab));
  if (!r.quadratic && r.sbs)
    fail(Errc::theorem_violation,
         "SBS labelling with a non-quadratic basis; instance:\n" + dump_pair(t, lab));
  return r;
}

Poset random_poset(std::uint64_t seed, int elements, double edge_density) {
  if (elements < 2) fail(Errc::validation_error, "random poset needs at least 2 elements");
  Rng rng(seed);
  std::vector<std::string> names;
  for (int i = 0; i < elements; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rel;
  const int inner = elements - 2;
  for (int i = 1; i <= inner; ++i)
    for (int j = i + 1; j <= inner; ++j)
      if (rng.chance(edge_density)) rel.emplace_back(names[i], names[j]);
  for (int i = 1; i <= inner; ++i) {
    rel.emplace_back(names[0], names[i]);
    rel.emplace_back(names[i], names[elements - 1]);
  }
  if (inner == 0) rel.emplace_back(names[0], names[1]);
  return Poset::build(std::move(names), rel);
}

AcyclicCategory random_category(std::uint64_t seed, int objects, double edge_density) {
  Rng rng(seed);
  Poset base = random_poset(seed ^ 0x9e3779b97f4a7c15ull, objects, edge_density);
  std::vector<GeneratorSpec> gens;
  for (const auto& [x, y] : base.covers()) {
    std::string stem = base.name(x) + ">" + base.name(y);
    gens.push_back({stem, base.name(x), base.name(y)});
    if (rng.chance(0.3)) gens.push_back({stem + "'", base.name(x), base.name(y)});
  }
  // Candidate relations between same-endpoint generator paths; pairs are kept
  // only when both sides are composite (or both single generators), which the
  // congruence provably cannot collapse onto a generator.
  std::vector<detail::RawEdge> raw;
  std::map<std::string, int> oidx;
  for (int i = 0; i < base.size(); ++i) oidx[base.name(i)] = i;
  for (const auto& g : gens) raw.push_back({oidx[g.dom], oidx[g.cod]});
  auto paths = detail::enumerate_paths(base.size(), raw, detail::path_enumeration_bound());
  std::map<std::pair<int, int>, std::vector<const detail::RawPath*>> groups;
  for (const auto& p : paths)
    if (p.length() > 0) groups[{p.dom, p.cod}].push_back(&p);
  std::vector<std::pair<GenPath, GenPath>> relations;
  auto ids = [&](const detail::RawPath& p) {
    GenPath v;
    for (int e : p.edges) v.push_back(gens[e].id);
    return v;
  };
  for (auto& [key, members] : groups) {
    if (members.size() < 2 || !rng.chance(0.5)) continue;
    int a = rng.below((int)members.size());
    int b = rng.below((int)members.size());
    if (a == b) continue;
    const auto& pa = *members[a];
    const auto& pb = *members[b];
    bool both_long = pa.length() >= 2 && pb.length() >= 2;
    bool both_gen = pa.length() == 1 && pb.length() == 1;
    if (both_long || both_gen) relations.emplace_back(ids(pa), ids(pb));
  }
  std::vector<std::string> objs = base.elements();
  return AcyclicCategory::build(std::move(objs), std::move(gens), relations);
}

std::vector<Poset> enumerate_bounded_posets(int max_elements) {
  std::vector<Poset> out;
  for (int n = 1; n <= max_elements; ++n) {
    if (n == 1) {
      out.push_back(Poset::build({"b"}, {}));
      continue;
    }
    const int inner = n - 2;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < inner; ++i)
      for (int j = i + 1; j < inner; ++j) slots.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
      std::vector<std::vector<char>> rel(inner, std::vector<char>(inner, 0));
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask & (1ull << s)) rel[slots[s].first][slots[s].second] = 1;
      bool transitive = true;
      for (int i = 0; i < inner && transitive; ++i)
        for (int j = 0; j < inner && transitive; ++j)
          for (int k = 0; k < inner && transitive; ++k)
            if (rel[i][j] && rel[j][k] && !rel[i][k]) transitive = false;
      if (!transitive) continue;
      std::vector<std::string> names;
      names.push_back("b");
      for (int i = 0; i < inner; ++i) names.push_back("m" + std::to_string(i));
      names.push_back("t");
      std::vector<std::pair<std::string, std::string>> covers;
      for (int i = 0; i < inner; ++i)
        for (int j = 0; j < inner; ++j)
          if (rel[i][j]) covers.emplace_back(names[i + 1], names[j + 1]);
      for (int i = 0; i < inner; ++i) {
        covers.emplace_back(names[0], names[i + 1]);
        covers.emplace_back(names[i + 1], names[n - 1]);
      }
      if (inner == 0) covers.emplace_back(names[0], names[n - 1]);
      out.push_back(Poset::build(std::move(names), covers));
    }
  }
  return out;
}

void for_each_labelling(int edge_count, int max_label,
                        const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> lab(edge_count, 1);
  while (true) {
    fn(lab);
    int i = edge_count - 1;
    while (i >= 0 && lab[i] == max_label) lab[i--] = 1;
    if (i < 0) break;
    ++lab[i];
  }
}

namespace {

void check_order_laws(const PathTable& t, const MonomialOrder& ord, PairVerdict& v) {
  v.order_laws_checked = true;
  std::vector<PathId> nontrivial;
  for (PathId p = 0; p < t.path_count(); ++p)
    if (t.degree(p) > 0) nontrivial.push_back(p);

  // Trichotomy: the literal four rules agree with the frozen rank on every
  // pair and never leave a tie unresolved.
  for (PathId a : nontrivial)
    for (PathId b : nontrivial) {
      int want = ord.compare(a, b);
      CompareExplain got;
      try {
        got = ord.compare_by_rules(a, b);
      } catch (const Error& e) {
        v.order_laws_ok = false;
        v.failures.push_back(std::string("order tie: ") + e.what());
        return;
      }
      int norm = got.result < 0 ? -1 : (got.result > 0 ? 1 : 0);
      if (norm != want) {
        v.order_laws_ok = false;
        v.failures.push_back("rule comparison disagrees with rank on " + t.path_display(a) +
                             " vs " + t.path_display(b));
        return;
      }
    }

  // Compatibility: w < u implies v.w.s < v.u.s whenever both products are
  // nonzero (forcing w and u to be parallel).
  std::map<std::pair<int, int>, std::vector<PathId>> by_endpoints;
  for (PathId p : nontrivial) by_endpoints[{t.dom(p), t.cod(p)}].push_back(p);
  for (const auto& [key, group] : by_endpoints) {
    if (group.size() < 2) continue;
    std::vector<PathId> prefixes{t.trivial_path(key.first)};
    for (PathId q : t.paths_into(key.first)) prefixes.push_back(q);
    std::vector<PathId> suffixes{t.trivial_path(key.second)};
    for (PathId q : t.paths_from(key.second)) suffixes.push_back(q);
    for (PathId w : group)
      for (PathId u : group) {
        if (w == u || ord.compare(w, u) >= 0) continue;
        for (PathId pre : prefixes)
          for (PathId suf : suffixes) {
            PathId vws = t.concat(t.concat(pre, w), suf);
            PathId vus = t.concat(t.concat(pre, u), suf);
            if (vws < 0 || vus < 0) continue;
            if (ord.compare(vws, vus) >= 0) {
              v.order_laws_ok = false;
              v.failures.push_back("multiplication does not respect the order at " +
                                   t.path_display(vws) + " vs " + t.path_display(vus));
              return;
            }
          }
      }
  }

  // Factor rule: a proper product v.w.s is smaller than w.
  for (PathId u : nontrivial) {
    int len = t.degree(u);
    for (int off = 0; off < len; ++off)
      for (int sub = 1; sub <= len - off; ++sub) {
        if (off == 0 && sub == len) continue;
        PathId w = t.subpath(u, off, sub);
        if (ord.compare(u, w) >= 0) {
          v.order_laws_ok = false;
          v.failures.push_back("proper factor " + t.path_display(w) + " is not above " +
                               t.path_display(u));
          return;
        }
      }
  }
}

// The facet order induced by the labelling: longer chains first, ties by
// label sequence, matching the shelling order on maximal chains.
bool lex_facet_order_shells(const PathTable& t, const EdgeLabelling& lab) {
  const Poset& p = t.poset();
  Complex k = Complex::order_complex(p);
  auto to_path = [&](const Complex::Face& f) {
    std::vector<int> edges;
    for (std::size_t i = 0; i + 1 < f.chain.size(); ++i) {
      int e = -1;
      for (int g = 0; g < t.edge_count(); ++g)
        if (t.edge(g).dom == f.chain[i] && t.edge(g).cod == f.chain[i + 1]) e = g;
      edges.push_back(e);
    }
    return t.find_path(edges);
  };
  std::vector<std::pair<PathId, FaceRef>> facets;
  for (const auto& r : k.facets()) facets.push_back({to_path(k.face(r)), r});
  std::sort(facets.begin(), facets.end(), [&](const auto& a, const auto& b) {
    int c = chain_compare(t, lab, a.first, b.first);
    return c != 0 ? c < 0 : a.second < b.second;
  });
  FacetOrdering order;
  for (const auto& [path, face] : facets) order.push_back(face);
  return is_shelling(k, order);
}

// Sub-poset on a closed interval, with the inherited labelling.
std::pair<Poset, EdgeLabelling> restrict_to_interval(const PathTable& t, const EdgeLabelling& lab,
                                                     int x, int y) {
  const Poset& p = t.poset();
  Interval iv = p.closed_interval(x, y);
  std::vector<char> member(p.size(), 0);
  for (int z : iv.members) member[z] = 1;
  std::vector<std::string> names;
  for (int z : iv.members) names.push_back(p.name(z));
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<long> labels;
  for (int e = 0; e < t.edge_count(); ++e) {
    int a = t.edge(e).dom, b = t.edge(e).cod;
    if (member[a] && member[b]) {
      covers.emplace_back(p.name(a), p.name(b));
      labels.push_back(lab.label(e));
    }
  }
  Poset sub = Poset::build(std::move(names), covers);
  // Cover order may differ after rebuilding; remap labels by name.
  PathTable tmp{sub};
  std::vector<long> by_edge(tmp.edge_count());
  for (std::size_t i = 0; i < covers.size(); ++i)
    by_edge[tmp.edge_index(covers[i].first + "<" + covers[i].second)] = labels[i];
  return {sub, EdgeLabelling(std::move(by_edge))};
}

}  // namespace

PairVerdict analyze_pair(const PathTable& t, const EdgeLabelling& lab, const PairChecks& checks) {
  PairVerdict v;
  const bool poset_mode = t.mode() == PathTable::Mode::poset;

  v.sbs = check_sbs_condition(t, lab);
  if (poset_mode) {
    v.lex = check_lex_condition(t, lab);
    if (v.lex != v.sbs)
      v.failures.push_back(std::string("LEX/SBS disagree: lex=") + (v.lex ? "true" : "false") +
                           " sbs=" + (v.sbs ? "true" : "false"));
  } else {
    v.lex = v.sbs;
  }

  MonomialOrder ord(t, lab);
  auto basis = buchberger(t, parallel_ideal_generators(t), ord);
  v.quadratic = is_quadratic(t, basis);
  if (v.quadratic != v.sbs)
    v.failures.push_back(std::string("theorem violated: quadratic=") +
                         (v.quadratic ? "true" : "false") + " sbs=" + (v.sbs ? "true" : "false"));

  auto oracle = initial_ideal_oracle(t, ord);
  auto minimal = divisibility_minimal(t, oracle);
  std::set<PathId> lts(basis.initial_terms.begin(), basis.initial_terms.end());
  v.oracle_match = lts == std::set<PathId>(minimal.begin(), minimal.end());
  if (v.oracle_match) {
    // The oracle set must be exactly the paths some initial term divides.
    std::vector<PathId> closure;
    for (PathId p = 0; p < t.path_count(); ++p)
      for (PathId lt : basis.initial_terms)
        if (t.divides(lt, p)) {
          closure.push_back(p);
          break;
        }
    v.oracle_match = closure == oracle;
  }
  if (!v.oracle_match) v.failures.push_back("initial ideal oracle mismatch");

  auto dims = dimension_check(t, basis, ord);
  v.dimension_ok = dims.ok && dims.truncated_ok;
  if (!v.dimension_ok)
    v.failures.push_back("dimension check failed: normal=" + std::to_string(dims.normal) +
                         " truncated=" + std::to_string(dims.truncated_normal) +
                         " expected=" + std::to_string(dims.expected));

  v.membership_ok = true;
  for (ClassId c = 0; c < t.class_count() && v.membership_ok; ++c) {
    auto members = t.class_members(c);
    for (std::size_t i = 0; i < members.size() && v.membership_ok; ++i)
      for (std::size_t j = i + 1; j < members.size() && v.membership_ok; ++j) {
        AlgebraElement diff =
            AlgebraElement::monomial(members[i]) - AlgebraElement::monomial(members[j]);
        if (!normal_form(t, diff, basis.elements, ord).is_zero()) {
          v.membership_ok = false;
          v.failures.push_back("parallel difference did not reduce to zero in " +
                               t.class_display(c));
        }
      }
  }

  if (checks.order_laws && t.path_count() <= checks.order_law_path_limit)
    check_order_laws(t, ord, v);

  if (checks.shelling && poset_mode && v.sbs) {
    Complex k = Complex::order_complex(t.poset());
    if ((int)k.facets().size() <= checks.shelling_facet_limit) {
      v.shelling_checked = true;
      v.shelling_ok = lex_facet_order_shells(t, lab);
      if (!v.shelling_ok)
        v.failures.push_back("SBS holds but the induced facet order is not a shelling");
    }
  }

  if (checks.restriction && poset_mode && v.quadratic) {
    v.restriction_checked = true;
    std::set<std::string> ambient_lts;
    for (PathId p : basis.initial_terms) ambient_lts.insert(t.path_display(p));
    for (ClassId c = 0; c < t.class_count() && v.restriction_ok; ++c) {
      auto [x, y] = t.class_endpoints(c);
      if (x == y || t.class_members(c).size() < 2) continue;
      auto [sub, sublab] = restrict_to_interval(t, lab, x, y);
      PathTable subt{sub};
      MonomialOrder subord(subt, sublab);
      auto subbasis = buchberger(subt, parallel_ideal_generators(subt), subord);
      if (!is_quadratic(subt, subbasis)) {
        v.restriction_ok = false;
        v.failures.push_back("interval " + t.class_display(c) + " has a non-quadratic basis");
        break;
      }
      for (PathId p : subbasis.initial_terms)
        if (!ambient_lts.count(subt.path_display(p))) {
          v.restriction_ok = false;
          v.failures.push_back("interval initial term " + subt.path_display(p) +
                               " missing from the ambient basis");
          break;
        }
    }
  }
  return v;
}

namespace {

struct SweepJob {
  std::variant<Poset, AcyclicCategory> instance;
  std::vector<std::vector<long>> fixed_labellings;  // random part; empty = exhaustive
};

void run_job(const SweepJob& job, const SweepConfig& config, SweepSummary& sum) {
  PathTable t = std::holds_alternative<Poset>(job.instance)
                    ? PathTable(std::get<Poset>(job.instance))
                    : PathTable(std::get<AcyclicCategory>(job.instance));
  ++sum.instances;
  PairChecks checks;
  checks.order_laws = true;
  checks.order_law_path_limit = config.order_law_path_limit;
  checks.shelling = true;
  checks.shelling_facet_limit = config.shelling_facet_limit;
  bool small_poset = t.mode() == PathTable::Mode::poset &&
                     t.vertex_count() <= config.restriction_element_limit;
  checks.restriction = config.check_restriction && small_poset;

  auto consider = [&](const std::vector<long>& labels) {
    ++sum.labellings_seen;
    EdgeLabelling lab{labels};
    if (!check_prefix_condition(t, lab)) return;
    ++sum.prefix_valid;
    PairVerdict v;
    try {
      v = analyze_pair(t, lab, checks);
    } catch (const Error& e) {
      sum.discrepancies.push_back({"exception", dump_pair(t, lab), e.what()});
      return;
    }
    if (v.sbs) ++sum.sbs_true;
    if (v.quadratic) ++sum.quadratic_true;
    if (v.order_laws_checked) ++sum.order_law_pairs;
    if (v.shelling_checked) ++sum.shelling_checks;
    if (v.restriction_checked) ++sum.restriction_checks;
    for (const auto& f : v.failures) sum.discrepancies.push_back({f, dump_pair(t, lab), ""});
  };

  if (!job.fixed_labellings.empty()) {
    for (const auto& labels : job.fixed_labellings) consider(labels);
  } else {
    for_each_labelling(t.edge_count(), config.max_label, consider);
  }
}

std::vector<std::vector<long>> random_labellings(Rng& rng, int edge_count,
                                                 const SweepConfig& config) {
  std::vector<std::vector<long>> out;
  std::vector<long> injective(edge_count);
  for (int i = 0; i < edge_count; ++i) injective[i] = i + 1;
  for (int i = edge_count - 1; i > 0; --i)
    std::swap(injective[i], injective[rng.below(i + 1)]);
  out.push_back(injective);
  for (int k = 0; k < config.random_labellings; ++k) {
    std::vector<long> lab(edge_count);
    for (int i = 0; i < edge_count; ++i) lab[i] = 1 + rng.below(config.max_label);
    out.push_back(std::move(lab));  // prefix filter happens in run_job
  }
  return out;
}

}  // namespace

SweepSummary equivalence_sweep(const SweepConfig& config) {
  std::vector<SweepJob> jobs;
  if (!config.categories) {
    for (auto& p : enumerate_bounded_posets(config.max_elements))
      jobs.push_back({std::move(p), {}});
    Rng rng(config.seed);
    for (int i = 0; i < config.random_count; ++i) {
      Poset p = random_poset(config.seed + 7919ull * (std::uint64_t)(i + 1),
                             config.random_elements, config.random_density);
      PathTable t{p};
      auto labs = random_labellings(rng, t.edge_count(), config);
      jobs.push_back({std::move(p), std::move(labs)});
    }
  } else {
    Rng rng(config.seed);
    for (int i = 0; i < config.random_count; ++i) {
      AcyclicCategory c = random_category(config.seed + 104729ull * (std::uint64_t)(i + 1),
                                          config.random_elements, config.random_density);
      PathTable t{c};
      auto labs = random_labellings(rng, t.edge_count(), config);
      jobs.push_back({std::move(c), std::move(labs)});
    }
  }

  const int jobs_n = (int)jobs.size();
  const int workers = std::max(1, std::min(config.jobs, jobs_n == 0 ? 1 : jobs_n));
  std::vector<SweepSummary> partial(workers);
  auto work = [&](int w) {
    for (int i = w; i < jobs_n; i += workers) run_job(jobs[i], config, partial[w]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  SweepSummary sum;
  for (const auto& p : partial) {
    sum.instances += p.instances;
    sum.labellings_seen += p.labellings_seen;
    sum.prefix_valid += p.prefix_valid;
    sum.sbs_true += p.sbs_true;
    sum.quadratic_true += p.quadratic_true;
    sum.order_law_pairs += p.order_law_pairs;
    sum.shelling_checks += p.shelling_checks;
    sum.restriction_checks += p.restriction_checks;
    for (const auto& d : p.discrepancies) sum.discrepancies.push_back(d);
  }
  std::sort(sum.discrepancies.begin(), sum.discrepancies.end(),
            [](const Discrepancy& a, const Discrepancy& b) {
              return std::tie(a.kind, a.instance_json, a.detail) <
                     std::tie(b.kind, b.instance_json, b.detail);
            });
  return sum;
}

}  // namespace lexshell
