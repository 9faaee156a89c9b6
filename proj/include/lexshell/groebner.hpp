#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lexshell/algebra.hpp"
#include "lexshell/monomial_order.hpp"

namespace lexshell {

struct GroebnerBasis {
  std::vector<AlgebraElement> elements;  // monic, sorted by leading term, greatest first
  std::vector<PathId> initial_terms;     // leading monomials, same order
  bool reduced = false;
};

/// One binomial p - rep per non-representative member of each parallel class
/// with at least two members (representative = canonically first path).
std::vector<AlgebraElement> parallel_ideal_generators(const PathTable& t);

std::pair<PathId, Rat> leading_term(const AlgebraElement& f, const MonomialOrder& ord);

enum class ReduceStrategy { greatest_leftmost, least_rightmost };

/// Rewrites monomials u.in(g).v by u.(in(g) - g).v until none is divisible
/// by a leading term. Confluent whenever G is a Groebner basis.
AlgebraElement normal_form(const PathTable& t, AlgebraElement f,
                           std::span<const AlgebraElement> basis, const MonomialOrder& ord,
                           ReduceStrategy strategy = ReduceStrategy::greatest_leftmost);

/// Overlap/containment completion down to the reduced basis.
GroebnerBasis buchberger(const PathTable& t, std::vector<AlgebraElement> gens,
                         const MonomialOrder& ord);

/// True iff every parallel difference reduces to zero modulo the candidate
/// set. Raises NotInIdeal if a candidate is itself outside the parallel ideal.
bool is_groebner_basis(const PathTable& t, std::span<const AlgebraElement> candidate,
                       const MonomialOrder& ord);

/// Ground truth for the initial ideal: every path that is not the least
/// member of its parallel class. Sorted by path id.
std::vector<PathId> initial_ideal_oracle(const PathTable& t, const MonomialOrder& ord);

/// Elements of the set not properly divisible by another element.
std::vector<PathId> divisibility_minimal(const PathTable& t, std::span<const PathId> set);

/// Every element's truncation is homogeneous of degree 2 (equivalently all
/// initial terms are quadratic).
bool is_quadratic(const PathTable& t, const GroebnerBasis& g);

long count_normal_paths(const PathTable& t, std::span<const PathId> initial_terms);

struct DimensionReport {
  long normal = 0;
  long truncated_normal = 0;
  long expected = 0;  // |Int(P)| for posets, morphism count for categories
  bool ok = false;
  bool truncated_ok = false;
};

/// Normal monomials must biject with the quotient basis, both for the basis
/// itself and for the ideal generated by its truncations.
DimensionReport dimension_check(const PathTable& t, const GroebnerBasis& g,
                                const MonomialOrder& ord);

}  // namespace lexshell
