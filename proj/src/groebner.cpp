#include "lexshell/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace lexshell {

std::vector<AlgebraElement> parallel_ideal_generators(const PathTable& t) {
  std::vector<AlgebraElement> gens;
  for (ClassId c = 0; c < t.class_count(); ++c) {
    auto members = t.class_members(c);
    if (members.size() < 2) continue;
    PathId rep = members.front();
    for (PathId p : members)
      if (p != rep) {
        AlgebraElement g = AlgebraElement::monomial(p) - AlgebraElement::monomial(rep);
        gens.push_back(std::move(g));
      }
  }
  return gens;
}

std::pair<PathId, Rat> leading_term(const AlgebraElement& f, const MonomialOrder& ord) {
  if (f.is_zero()) fail(Errc::zero_element, "zero element has no leading term");
  const auto& terms = f.terms();
  auto best = terms.begin();
  for (auto it = std::next(terms.begin()); it != terms.end(); ++it)
    if (ord.compare(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

namespace {

struct Redex {
  int term_index = -1;   // index into f.terms()
  int basis_index = -1;  // index into basis
  int offset = -1;       // occurrence offset within the monomial
};

// Find a reducible monomial of f under the given strategy; nullopt if f is
// in normal form.
std::optional<Redex> find_redex(const PathTable& t, const AlgebraElement& f,
                                std::span<const AlgebraElement> basis,
                                std::span<const PathId> lts, const MonomialOrder& ord,
                                ReduceStrategy strategy) {
  const auto& terms = f.terms();
  std::vector<int> by_rank;
  for (int i = 0; i < (int)terms.size(); ++i)
    if (t.degree(terms[i].first) > 0) by_rank.push_back(i);  // trivial paths are never redexes
  std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
    return ord.compare(terms[a].first, terms[b].first) > 0;
  });
  if (strategy == ReduceStrategy::least_rightmost)
    std::reverse(by_rank.begin(), by_rank.end());
  for (int ti : by_rank) {
    PathId m = terms[ti].first;
    if (strategy == ReduceStrategy::greatest_leftmost) {
      for (int bi = 0; bi < (int)basis.size(); ++bi) {
        auto occ = t.occurrences(lts[bi], m);
        if (!occ.empty()) return Redex{ti, bi, occ.front()};
      }
    } else {
      for (int bi = (int)basis.size() - 1; bi >= 0; --bi) {
        auto occ = t.occurrences(lts[bi], m);
        if (!occ.empty()) return Redex{ti, bi, occ.back()};
      }
    }
  }
  return std::nullopt;
}

AlgebraElement wrap(const PathTable& t, PathId left_trivial_or_path, const AlgebraElement& g,
                    PathId right) {
  return multiply(t, multiply(t, AlgebraElement::monomial(left_trivial_or_path), g),
                  AlgebraElement::monomial(right));
}

}  // namespace

AlgebraElement normal_form(const PathTable& t, AlgebraElement f,
                           std::span<const AlgebraElement> basis, const MonomialOrder& ord,
                           ReduceStrategy strategy) {
  std::vector<PathId> lts;
  std::vector<Rat> lcs;
  for (const auto& g : basis) {
    auto [lt, lc] = leading_term(g, ord);
    lts.push_back(lt);
    lcs.push_back(lc);
  }
  while (!f.is_zero()) {
    auto r = find_redex(t, f, basis, lts, ord, strategy);
    if (!r) break;
    PathId m = f.terms()[r->term_index].first;
    Rat c = f.terms()[r->term_index].second;
    const auto& medges = t.path(m).edges;
    int lt_len = t.degree(lts[r->basis_index]);
    PathId left = r->offset == 0 ? t.trivial_path(t.dom(m))
                                 : t.subpath(m, 0, r->offset);
    int tail_len = (int)medges.size() - r->offset - lt_len;
    PathId right = tail_len == 0 ? t.trivial_path(t.cod(m))
                                 : t.subpath(m, r->offset + lt_len, tail_len);
    AlgebraElement replaced = wrap(t, left, basis[r->basis_index], right);
    f -= replaced.scaled(c / lcs[r->basis_index]);
  }
  return f;
}

namespace {

struct PendingPair {
  int deg;        // degree of the common multiple
  int rank;       // order rank of the common multiple
  int f, g;       // basis indices
  int kind;       // 0 = suffix/prefix overlap, 1 = containment
  int offset;     // overlap length resp. containment offset
  auto key() const { return std::tuple(deg, rank, f, g, kind, offset); }
  bool operator<(const PendingPair& o) const { return key() < o.key(); }
};

// All S-element configurations between the leading terms of f and g.
void collect_pairs(const PathTable& t, const MonomialOrder& ord, const std::vector<PathId>& lts,
                   int fi, int gi, std::set<PendingPair>& queue) {
  if (fi == gi) return;  // paths in a DAG have no self-overlap
  PathId A = lts[fi], B = lts[gi];
  const auto& ea = t.path(A).edges;
  const auto& eb = t.path(B).edges;
  // in(f) = u.c, in(g) = c.v with c nonempty and both u, v proper
  for (int clen = 1; clen < (int)std::min(ea.size(), eb.size()); ++clen) {
    if (!std::equal(ea.end() - clen, ea.end(), eb.begin())) continue;
    std::vector<int> common(ea.begin(), ea.end());
    common.insert(common.end(), eb.begin() + clen, eb.end());
    PathId m = t.find_path(common);
    if (m < 0) continue;
    queue.insert({t.degree(m), ord.rank(m), fi, gi, 0, clen});
  }
  // in(g) = u.in(f).v, u or v nonempty
  if (ea.size() < eb.size())
    for (int off : t.occurrences(A, B)) queue.insert({t.degree(B), ord.rank(B), fi, gi, 1, off});
}

AlgebraElement s_element(const PathTable& t, const std::vector<AlgebraElement>& basis,
                         const std::vector<PathId>& lts, const PendingPair& pp) {
  PathId A = lts[pp.f], B = lts[pp.g];
  const auto& ea = t.path(A).edges;
  if (pp.kind == 0) {
    int clen = pp.offset;
    PathId u = clen == (int)ea.size() ? t.trivial_path(t.dom(A)) : t.subpath(A, 0, (int)ea.size() - clen);
    int blen = t.degree(B);
    PathId v = clen == blen ? t.trivial_path(t.cod(B)) : t.subpath(B, clen, blen - clen);
    // f.v - u.g cancels the common multiple u.c.v
    return multiply(t, basis[pp.f], AlgebraElement::monomial(v)) -
           multiply(t, AlgebraElement::monomial(u), basis[pp.g]);
  }
  int alen = t.degree(A), blen = t.degree(B);
  PathId u = pp.offset == 0 ? t.trivial_path(t.dom(B)) : t.subpath(B, 0, pp.offset);
  int tail = blen - pp.offset - alen;
  PathId v = tail == 0 ? t.trivial_path(t.cod(B)) : t.subpath(B, pp.offset + alen, tail);
  return basis[pp.g] - wrap(t, u, basis[pp.f], v);
}

AlgebraElement make_monic(const AlgebraElement& f, const MonomialOrder& ord) {
  auto [lt, lc] = leading_term(f, ord);
  return f.scaled(Rat(1) / lc);
}

}  // namespace

GroebnerBasis buchberger(const PathTable& t, std::vector<AlgebraElement> gens,
                         const MonomialOrder& ord) {
  std::vector<AlgebraElement> basis;
  std::vector<PathId> lts;
  std::set<PendingPair> queue;
  auto admit = [&](AlgebraElement f) {
    f = normal_form(t, std::move(f), basis, ord);
    if (f.is_zero()) return;
    f = make_monic(f, ord);
    int self = (int)basis.size();
    basis.push_back(std::move(f));
    lts.push_back(leading_term(basis.back(), ord).first);
    for (int other = 0; other < self; ++other) {
      collect_pairs(t, ord, lts, other, self, queue);
      collect_pairs(t, ord, lts, self, other, queue);
    }
  };
  for (auto& g : gens) admit(std::move(g));
  while (!queue.empty()) {
    PendingPair pp = *queue.begin();
    queue.erase(queue.begin());
    admit(s_element(t, basis, lts, pp));
  }

  // Minimalize: drop elements whose leading term another element divides.
  std::vector<char> keep(basis.size(), 1);
  for (int i = 0; i < (int)basis.size(); ++i)
    for (int j = 0; j < (int)basis.size() && keep[i]; ++j)
      if (i != j && keep[j] && t.divides(lts[j], lts[i])) keep[i] = 0;
  std::vector<AlgebraElement> kept;
  for (int i = 0; i < (int)basis.size(); ++i)
    if (keep[i]) kept.push_back(std::move(basis[i]));

  // Tail-reduce each element modulo the whole set (itself included: its own
  // leading term may occur inside a tail monomial) until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < (int)kept.size(); ++i) {
      auto [lt, lc] = leading_term(kept[i], ord);
      AlgebraElement tail = kept[i] - AlgebraElement::monomial(lt, lc);
      AlgebraElement reduced_tail = normal_form(t, tail, kept, ord);
      AlgebraElement updated = AlgebraElement::monomial(lt, lc) + reduced_tail;
      if (updated != kept[i]) {
        kept[i] = make_monic(updated, ord);
        changed = true;
      }
    }
  }

  GroebnerBasis out;
  std::sort(kept.begin(), kept.end(), [&](const AlgebraElement& a, const AlgebraElement& b) {
    return ord.compare(leading_term(a, ord).first, leading_term(b, ord).first) > 0;
  });
  for (auto& f : kept) {
    out.initial_terms.push_back(leading_term(f, ord).first);
    out.elements.push_back(std::move(f));
  }
  out.reduced = true;
  return out;
}

bool is_groebner_basis(const PathTable& t, std::span<const AlgebraElement> candidate,
                       const MonomialOrder& ord) {
  auto reference = buchberger(t, parallel_ideal_generators(t), ord);
  for (const auto& g : candidate) {
    if (g.is_zero()) continue;
    if (!normal_form(t, g, reference.elements, ord).is_zero())
      fail(Errc::not_in_ideal, "candidate element is not in the parallel ideal");
  }
  for (ClassId c = 0; c < t.class_count(); ++c) {
    auto members = t.class_members(c);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        AlgebraElement diff =
            AlgebraElement::monomial(members[i]) - AlgebraElement::monomial(members[j]);
        if (!normal_form(t, diff, candidate, ord).is_zero()) return false;
      }
  }
  return true;
}

std::vector<PathId> initial_ideal_oracle(const PathTable& t, const MonomialOrder& ord) {
  std::vector<PathId> out;
  for (ClassId c = 0; c < t.class_count(); ++c) {
    PathId least = ord.class_least(c);
    for (PathId p : t.class_members(c))
      if (p != least) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PathId> divisibility_minimal(const PathTable& t, std::span<const PathId> set) {
  std::vector<PathId> out;
  for (PathId m : set) {
    bool minimal = true;
    for (PathId w : set)
      if (w != m && t.divides(w, m)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  return out;
}

bool is_quadratic(const PathTable& t, const GroebnerBasis& g) {
  for (const auto& f : g.elements)
    if (f.truncated(t).min_degree(t) != 2) return false;
  return true;
}

long count_normal_paths(const PathTable& t, std::span<const PathId> initial_terms) {
  long n = 0;
  for (PathId p = 0; p < t.path_count(); ++p) {
    bool normal = true;
    for (PathId lt : initial_terms)
      if (t.divides(lt, p)) {
        normal = false;
        break;
      }
    if (normal) ++n;
  }
  return n;
}

DimensionReport dimension_check(const PathTable& t, const GroebnerBasis& g,
                                const MonomialOrder& ord) {
  DimensionReport r;
  r.expected = t.class_count();
  r.normal = count_normal_paths(t, g.initial_terms);
  std::vector<AlgebraElement> truncations;
  for (const auto& f : g.elements) truncations.push_back(f.truncated(t));
  auto graded = buchberger(t, std::move(truncations), ord);
  r.truncated_normal = count_normal_paths(t, graded.initial_terms);
  r.ok = r.normal == r.expected;
  r.truncated_ok = r.truncated_normal == r.expected;
  return r;
}

}  // namespace lexshell
