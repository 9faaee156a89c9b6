#pragma once

#include <optional>
#include <vector>

#include "lexshell/path_table.hpp"

namespace lexshell {

/// Total assignment of integer labels to the covers / indecomposable
/// generators of an instance.
class EdgeLabelling {
 public:
  EdgeLabelling() = default;
  explicit EdgeLabelling(std::vector<long> by_edge) : by_edge_(std::move(by_edge)) {}

  long label(int edge) const { return by_edge_[edge]; }
  int size() const { return (int)by_edge_.size(); }
  const std::vector<long>& labels() const { return by_edge_; }

  void require_total(const PathTable& t) const {
    if (size() != t.edge_count())
      fail(Errc::validation_error, "labelling does not cover every edge");
  }

  friend bool operator==(const EdgeLabelling&, const EdgeLabelling&) = default;

 private:
  std::vector<long> by_edge_;
};

std::vector<long> label_sequence(const PathTable& t, const EdgeLabelling& lab, PathId p);

/// Chain order used throughout: longer chains come first, ties broken by
/// lexicographic comparison of label sequences. This is the restriction of
/// the negative degree monomial order to parallel chains; "lexicographically
/// least" below always means least in this order.
/// Returns <0, 0, >0.
int chain_compare(const PathTable& t, const EdgeLabelling& lab, PathId a, PathId b);

struct PrefixWitness {
  ClassId cls = -1;
  PathId first = -1;
  PathId second = -1;  // label_sequence(first) is a prefix of label_sequence(second)
};

std::optional<PrefixWitness> find_prefix_violation(const PathTable& t, const EdgeLabelling& lab);
bool check_prefix_condition(const PathTable& t, const EdgeLabelling& lab);

/// Least chain of each class under chain_compare; index by ClassId.
/// Requires the prefix condition (PrefixViolation otherwise).
std::vector<PathId> least_chains(const PathTable& t, const EdgeLabelling& lab);

/// Least maximal chain of the class containing both endpoints.
PathId lex_least_chain(const PathTable& t, const EdgeLabelling& lab, ClassId cls);

struct LexWitness {
  ClassId cls = -1;
  PathId chain = -1;
  int s_pos = -1;  // positions of s and t along the chain's vertices
  int t_pos = -1;
};

/// LEX-condition: whenever a chain restricts to least chains on [x,t] and
/// [s,y] for interior s < t, it must itself be least on [x,y].
std::optional<LexWitness> find_lex_violation(const PathTable& t, const EdgeLabelling& lab);
bool check_lex_condition(const PathTable& t, const EdgeLabelling& lab);

struct SbsWitness {
  ClassId cls = -1;
  PathId chain = -1;  // non-least chain with no short bad subchain
};

/// SBS-condition: every non-least chain contains two consecutive edges whose
/// subchain is non-least in its own class.
std::optional<SbsWitness> find_sbs_violation(const PathTable& t, const EdgeLabelling& lab);
bool check_sbs_condition(const PathTable& t, const EdgeLabelling& lab);

/// Exhaustive search for a labelling into {1..max_label} satisfying prefix +
/// SBS; the first edge's label is fixed to 1 to cut symmetry. None if the
/// space is exhausted.
std::optional<EdgeLabelling> search_lex_labelling(const PathTable& t, int max_label,
                                                  int edge_bound = 12);

/// Unrestricted variant (no first-edge canonicalization); test oracle.
std::optional<EdgeLabelling> search_lex_labelling_full(const PathTable& t, int max_label,
                                                       int edge_bound = 12);

}  // namespace lexshell
