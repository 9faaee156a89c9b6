#include "lexshell/algebra.hpp"

#include <algorithm>

namespace lexshell {

AlgebraElement AlgebraElement::monomial(PathId p, Rat c) {
  AlgebraElement e;
  e.add_term(p, c);
  return e;
}

Rat AlgebraElement::coefficient(PathId p) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const auto& t, PathId q) { return t.first < q; });
  if (it != terms_.end() && it->first == p) return it->second;
  return Rat(0);
}

void AlgebraElement::add_term(PathId p, const Rat& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const auto& t, PathId q) { return t.first < q; });
  if (it != terms_.end() && it->first == p) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {p, c});
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const Rat& c) const {
  AlgebraElement out;
  if (c.is_zero()) return out;
  for (const auto& [p, k] : terms_) out.terms_.emplace_back(p, k * c);
  return out;
}

int AlgebraElement::min_degree(const PathTable& t) const {
  if (is_zero()) fail(Errc::zero_element, "zero element has no degree");
  int best = t.degree(terms_.front().first);
  for (const auto& [p, c] : terms_) best = std::min(best, t.degree(p));
  return best;
}

AlgebraElement AlgebraElement::truncated(const PathTable& t) const {
  int d = min_degree(t);
  AlgebraElement out;
  for (const auto& [p, c] : terms_)
    if (t.degree(p) == d) out.add_term(p, c);
  return out;
}

AlgebraElement multiply(const PathTable& t, const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) {
      PathId pq = t.concat(p, q);
      if (pq >= 0) out.add_term(pq, cp * cq);
    }
  return out;
}

std::optional<Interval> incidence_product(const Poset& p, int x, int y, int z, int w) {
  if (!p.leq(x, y)) fail(Errc::not_comparable, "'" + p.name(x) + "' not below '" + p.name(y) + "'");
  if (!p.leq(z, w)) fail(Errc::not_comparable, "'" + p.name(z) + "' not below '" + p.name(w) + "'");
  if (y != z) return std::nullopt;
  return p.closed_interval(x, w);
}

std::optional<Interval> graded_product(const Poset& p, int x, int y, int w, int z) {
  if (!p.leq(x, y)) fail(Errc::not_comparable, "'" + p.name(x) + "' not below '" + p.name(y) + "'");
  if (!p.leq(w, z)) fail(Errc::not_comparable, "'" + p.name(w) + "' not below '" + p.name(z) + "'");
  if (y != w) return std::nullopt;
  if (p.interval_degree(x, y) + p.interval_degree(w, z) != p.interval_degree(x, z))
    return std::nullopt;
  return p.closed_interval(x, z);
}

}  // namespace lexshell
