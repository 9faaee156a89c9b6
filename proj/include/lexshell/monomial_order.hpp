#pragma once

#include <span>
#include <string>
#include <vector>

#include "lexshell/labelling.hpp"
#include "lexshell/path_table.hpp"

namespace lexshell {

enum class OrderRule { degree, labels, carrier, domain, equal };

struct CompareExplain {
  int result = 0;  // <0: first is less, >0: greater
  OrderRule rule = OrderRule::equal;
};

/// The negative degree lexicographic monomial order induced by an edge
/// labelling: w > v iff deg w < deg v; else label sequences compare
/// lexicographically; else the carrier of w precedes the carrier of v in the
/// shelling; else the domain of w lies above the domain of v. Construction
/// enumerates the shelling (all inclusion-maximal chains, least first),
/// computes every monomial's carrier, and freezes a total rank.
class MonomialOrder {
 public:
  MonomialOrder(const PathTable& t, const EdgeLabelling& lab);

  const PathTable& table() const { return *table_; }
  const EdgeLabelling& labelling() const { return lab_; }

  /// Rank within the order; 0 is the least monomial. Degree-0 paths are not
  /// ordered (the ideal lives in the positive-degree part).
  int rank(PathId p) const;
  int compare(PathId a, PathId b) const;  // <0, 0, >0

  /// Rule-by-rule comparison, independent of the precomputed ranks; raises
  /// IncomparableTie if the four rules fail to separate distinct monomials.
  CompareExplain compare_by_rules(PathId a, PathId b) const;

  /// Maximal chains, least first.
  std::span<const PathId> shelling() const { return shelling_; }
  int shelling_index(PathId maximal_chain) const;

  /// Earliest shelling chain containing p as a contiguous factor. Computed
  /// via least-chain concatenation; carrier_by_scan is the definitional
  /// route used for cross-checking.
  PathId carrier(PathId p) const;
  PathId carrier_by_scan(PathId p) const;

  /// Least member of a parallel class under the order.
  PathId class_least(ClassId c) const { return class_least_[c]; }

 private:
  const PathTable* table_;
  EdgeLabelling lab_;
  std::vector<PathId> shelling_;
  std::vector<int> shelling_index_;  // by PathId; -1 for non-maximal
  std::vector<PathId> carrier_;      // by PathId; -1 for trivial paths
  std::vector<int> rank_;            // by PathId; -1 for trivial paths
  std::vector<PathId> class_least_;
  std::vector<int> carrier_position_;  // offset of p inside its carrier

  void require_degree(PathId p) const;
};

}  // namespace lexshell
