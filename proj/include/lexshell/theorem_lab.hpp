#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lexshell/groebner.hpp"
#include "lexshell/labelling.hpp"

namespace lexshell {

struct VerifyReport {
  bool applicable = true;  // forward mode: SBS precondition held
  bool sbs = false;
  bool quadratic = false;
  std::optional<SbsWitness> sbs_witness;
  GroebnerBasis basis;
  DimensionReport dimensions;
};

/// Assumes SBS (reports not-applicable otherwise), builds the order, runs the
/// completion and asserts the basis is quadratic.
VerifyReport verify_forward(const PathTable& t, const EdgeLabelling& lab);

/// Runs the completion unconditionally and asserts quadratic == SBS in both
/// directions; a mismatch is a TheoremViolation.
VerifyReport verify_backward(const PathTable& t, const EdgeLabelling& lab);

Poset random_poset(std::uint64_t seed, int elements, double edge_density);
AcyclicCategory random_category(std::uint64_t seed, int objects, double edge_density);

/// Every bounded poset on at most max_elements elements (labeled enumeration:
/// each isomorphism class appears at least once).
std::vector<Poset> enumerate_bounded_posets(int max_elements);

void for_each_labelling(int edge_count, int max_label,
                        const std::function<void(const std::vector<long>&)>& fn);

struct SweepConfig {
  int max_elements = 6;       // exhaustive enumeration cutoff
  int max_label = 3;          // label alphabet for the exhaustive part
  int random_count = 500;     // seeded random posets past the cutoff
  int random_elements = 8;
  double random_density = 0.35;
  int random_labellings = 3;  // alphabet-bounded attempts per random instance
  std::uint64_t seed = 42;
  int jobs = 1;
  int order_law_path_limit = 200;
  int shelling_facet_limit = 9;
  bool check_restriction = true;
  int restriction_element_limit = 5;
  bool categories = false;  // sweep random categories instead of posets
};

struct PairVerdict {
  bool sbs = false;
  bool lex = false;
  bool quadratic = false;
  bool oracle_match = false;
  bool dimension_ok = false;
  bool membership_ok = false;
  bool order_laws_ok = true;      // when within the path limit
  bool order_laws_checked = false;
  bool shelling_ok = true;        // when SBS holds and facets are within bound
  bool shelling_checked = false;
  bool restriction_ok = true;
  bool restriction_checked = false;
  std::vector<std::string> failures;  // one line per violated criterion
  bool clean() const { return failures.empty(); }
};

struct PairChecks {
  bool order_laws = true;
  bool shelling = true;
  bool restriction = false;
  int order_law_path_limit = 200;
  int shelling_facet_limit = 9;
};

/// Full per-labelling verdict: SBS/LEX agreement, basis quadraticity vs SBS,
/// oracle vs completion initial terms, dimension counts, ideal membership,
/// monomial order laws, shelling linkage, interval restriction.
PairVerdict analyze_pair(const PathTable& t, const EdgeLabelling& lab, const PairChecks& checks);

struct Discrepancy {
  std::string kind;
  std::string instance_json;  // replayable fixture
  std::string detail;
};

struct SweepSummary {
  long instances = 0;
  long labellings_seen = 0;
  long prefix_valid = 0;
  long sbs_true = 0;
  long quadratic_true = 0;
  long order_law_pairs = 0;
  long shelling_checks = 0;
  long restriction_checks = 0;
  std::vector<Discrepancy> discrepancies;
  bool all_ok() const { return discrepancies.empty(); }
};

SweepSummary equivalence_sweep(const SweepConfig& config);

}  // namespace lexshell
