#include "lexshell/monomial_order.hpp"

#include <algorithm>
#include <numeric>

namespace lexshell {

MonomialOrder::MonomialOrder(const PathTable& t, const EdgeLabelling& lab)
    : table_(&t), lab_(lab) {
  lab_.require_total(t);
  if (auto w = find_prefix_violation(t, lab_))
    fail(Errc::prefix_violation, "label sequences of " + t.path_display(w->first) + " and " +
                                     t.path_display(w->second) + " collide in " +
                                     t.class_display(w->cls));
  if (t.mode() == PathTable::Mode::poset && !t.poset().is_bounded())
    fail(Errc::not_bounded, "the monomial order needs a bounded poset");

  // Shelling: maximal chains sorted least-first; equal label sequences on two
  // distinct maximal chains leave the order underdetermined.
  shelling_.assign(t.maximal_paths().begin(), t.maximal_paths().end());
  std::sort(shelling_.begin(), shelling_.end(), [&](PathId a, PathId b) {
    int c = chain_compare(t, lab_, a, b);
    return c != 0 ? c < 0 : a < b;
  });
  for (std::size_t i = 1; i < shelling_.size(); ++i)
    if (chain_compare(t, lab_, shelling_[i - 1], shelling_[i]) == 0)
      fail(Errc::order_not_total, "maximal chains " + t.path_display(shelling_[i - 1]) + " and " +
                                      t.path_display(shelling_[i]) +
                                      " share a label sequence; the shelling is ambiguous");
  shelling_index_.assign(t.path_count(), -1);
  for (int i = 0; i < (int)shelling_.size(); ++i) shelling_index_[shelling_[i]] = i;

  // Least inextensible chain into / out of each vertex; the carrier of p is
  // least_into(dom p) . p . least_from(cod p).
  std::vector<char> source(t.vertex_count(), 1), sink(t.vertex_count(), 1);
  for (int e = 0; e < t.edge_count(); ++e) {
    source[t.edge(e).cod] = 0;
    sink[t.edge(e).dom] = 0;
  }
  std::vector<PathId> least_into(t.vertex_count(), -1), least_from(t.vertex_count(), -1);
  auto consider = [&](std::vector<PathId>& slot, int v, PathId p) {
    if (slot[v] < 0 || chain_compare(t, lab_, p, slot[v]) < 0) slot[v] = p;
  };
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (source[v]) least_into[v] = t.trivial_path(v);
    if (sink[v]) least_from[v] = t.trivial_path(v);
  }
  for (PathId p = 0; p < t.path_count(); ++p) {
    if (t.degree(p) == 0) continue;
    if (source[t.dom(p)]) consider(least_into, t.cod(p), p);
    if (sink[t.cod(p)]) consider(least_from, t.dom(p), p);
  }

  carrier_.assign(t.path_count(), -1);
  carrier_position_.assign(t.path_count(), -1);
  for (PathId p = 0; p < t.path_count(); ++p) {
    if (t.degree(p) == 0) continue;
    PathId head = least_into[t.dom(p)];
    PathId tail = least_from[t.cod(p)];
    if (head < 0 || tail < 0) fail(Errc::no_carrier, "no maximal chain through " + t.path_display(p));
    PathId full = t.concat(t.concat(head, p), tail);
    if (full < 0 || shelling_index_[full] < 0)
      fail(Errc::no_carrier, "carrier construction failed for " + t.path_display(p));
    carrier_[p] = full;
    carrier_position_[p] = t.degree(head);
  }
  // Cross-check against the definitional route (first dividing chain in the
  // shelling) while the instance is small.
  if (t.path_count() <= 5000) {
    for (PathId p = 0; p < t.path_count(); ++p)
      if (t.degree(p) > 0 && carrier_by_scan(p) != carrier_[p])
        fail(Errc::no_carrier, "carrier mismatch for " + t.path_display(p));
  }

  // Total rank: degree first (higher degree = smaller monomial), then label
  // sequence, then carrier position in the shelling, then domain position
  // along the shared carrier.
  std::vector<PathId> order;
  for (PathId p = 0; p < t.path_count(); ++p)
    if (t.degree(p) > 0) order.push_back(p);
  std::vector<std::vector<long>> seqs(t.path_count());
  for (PathId p : order) seqs[p] = label_sequence(t, lab_, p);
  auto less_as_monomial = [&](PathId a, PathId b) {
    if (t.degree(a) != t.degree(b)) return t.degree(a) > t.degree(b);
    if (seqs[a] != seqs[b]) return seqs[a] < seqs[b];
    if (carrier_[a] != carrier_[b])
      return shelling_index_[carrier_[a]] > shelling_index_[carrier_[b]];
    return carrier_position_[a] < carrier_position_[b];
  };
  std::sort(order.begin(), order.end(), [&](PathId a, PathId b) {
    if (a == b) return false;
    if (less_as_monomial(a, b)) return true;
    if (less_as_monomial(b, a)) return false;
    fail(Errc::order_not_total, "monomials " + t.path_display(a) + " and " + t.path_display(b) +
                                    " are not separated by the order");
  });
  rank_.assign(t.path_count(), -1);
  for (int i = 0; i < (int)order.size(); ++i) rank_[order[i]] = i;

  class_least_.assign(t.class_count(), -1);
  for (ClassId c = 0; c < t.class_count(); ++c) {
    PathId best = -1;
    for (PathId p : t.class_members(c))
      if (t.degree(p) == 0) {
        best = p;  // trivial class
      } else if (best < 0 || rank_[p] < rank_[best]) {
        best = p;
      }
    class_least_[c] = best;
  }
}

void MonomialOrder::require_degree(PathId p) const {
  if (table_->degree(p) == 0)
    fail(Errc::validation_error,
         "degree-0 monomial " + table_->path_display(p) + " is not ordered");
}

int MonomialOrder::rank(PathId p) const {
  require_degree(p);
  return rank_[p];
}

int MonomialOrder::compare(PathId a, PathId b) const {
  if (a == b) return 0;
  require_degree(a);
  require_degree(b);
  return rank_[a] < rank_[b] ? -1 : 1;
}

int MonomialOrder::shelling_index(PathId chain) const {
  if (shelling_index_[chain] < 0)
    fail(Errc::validation_error, table_->path_display(chain) + " is not a maximal chain");
  return shelling_index_[chain];
}

PathId MonomialOrder::carrier(PathId p) const {
  require_degree(p);
  return carrier_[p];
}

PathId MonomialOrder::carrier_by_scan(PathId p) const {
  require_degree(p);
  for (PathId chain : shelling_)
    if (table_->divides(p, chain)) return chain;
  fail(Errc::no_carrier, "no maximal chain contains " + table_->path_display(p));
}

CompareExplain MonomialOrder::compare_by_rules(PathId a, PathId b) const {
  const PathTable& t = *table_;
  if (a == b) return {0, OrderRule::equal};
  require_degree(a);
  require_degree(b);
  if (t.degree(a) != t.degree(b))  // lower degree is greater
    return {t.degree(a) < t.degree(b) ? 1 : -1, OrderRule::degree};
  auto la = label_sequence(t, lab_, a);
  auto lb = label_sequence(t, lab_, b);
  if (la != lb) return {la > lb ? 1 : -1, OrderRule::labels};
  if (carrier_[a] != carrier_[b]) {
    int ia = shelling_index_[carrier_[a]], ib = shelling_index_[carrier_[b]];
    return {ia < ib ? 1 : -1, OrderRule::carrier};  // earlier carrier is greater
  }
  int x = t.dom(a), y = t.dom(b);
  if (t.mode() == PathTable::Mode::poset) {
    const Poset& p = t.poset();
    if (p.less(y, x)) return {1, OrderRule::domain};
    if (p.less(x, y)) return {-1, OrderRule::domain};
  } else {
    const AcyclicCategory& c = t.category();
    bool xy = x != y && c.hom_nonempty(x, y);
    bool yx = x != y && c.hom_nonempty(y, x);
    if (xy && !yx) return {1, OrderRule::domain};
    if (yx && !xy) return {-1, OrderRule::domain};
  }
  fail(Errc::incomparable_tie, "rules 1-4 do not separate " + t.path_display(a) + " and " +
                                   t.path_display(b));
}

}  // namespace lexshell
