#pragma once

#include <optional>
#include <vector>

#include "lexshell/path_table.hpp"
#include "lexshell/rational.hpp"

namespace lexshell {

/// Finite rational combination of path monomials; zero coefficients are
/// never stored. Terms are kept sorted by PathId.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement monomial(PathId p, Rat c = Rat(1));

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return (int)terms_.size(); }
  const std::vector<std::pair<PathId, Rat>>& terms() const { return terms_; }
  Rat coefficient(PathId p) const;

  void add_term(PathId p, const Rat& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement scaled(const Rat& c) const;

  int min_degree(const PathTable& t) const;  // ZeroElement on zero
  /// Sum of the terms of least degree.
  AlgebraElement truncated(const PathTable& t) const;

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::vector<std::pair<PathId, Rat>> terms_;
};

/// Concatenation product, extended bilinearly; zero when endpoints mismatch.
AlgebraElement multiply(const PathTable& t, const AlgebraElement& a, const AlgebraElement& b);

/// Incidence-algebra product on interval symbols: [x,y]*[z,w] = [x,w] iff y == z.
std::optional<Interval> incidence_product(const Poset& p, int x, int y, int z, int w);

/// Associated-graded product: nonzero only when additionally the maximal
/// chain lengths add up.
std::optional<Interval> graded_product(const Poset& p, int x, int y, int w, int z);

}  // namespace lexshell
