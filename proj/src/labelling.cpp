#include "lexshell/labelling.hpp"

#include <algorithm>
#include <functional>

namespace lexshell {

std::vector<long> label_sequence(const PathTable& t, const EdgeLabelling& lab, PathId p) {
  std::vector<long> seq;
  seq.reserve(t.degree(p));
  for (int e : t.path(p).edges) seq.push_back(lab.label(e));
  return seq;
}

int chain_compare(const PathTable& t, const EdgeLabelling& lab, PathId a, PathId b) {
  if (a == b) return 0;
  int da = t.degree(a), db = t.degree(b);
  if (da != db) return da > db ? -1 : 1;  // longer chains order first
  const auto& ea = t.path(a).edges;
  const auto& eb = t.path(b).edges;
  for (int i = 0; i < da; ++i) {
    long la = lab.label(ea[i]), lb = lab.label(eb[i]);
    if (la != lb) return la < lb ? -1 : 1;
  }
  return 0;
}

std::optional<PrefixWitness> find_prefix_violation(const PathTable& t, const EdgeLabelling& lab) {
  lab.require_total(t);
  for (ClassId c = 0; c < t.class_count(); ++c) {
    auto members = t.class_members(c);
    if (members.size() < 2) continue;
    std::vector<std::vector<long>> seqs;
    seqs.reserve(members.size());
    for (PathId p : members) seqs.push_back(label_sequence(t, lab, p));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (i == j) continue;
        const auto& a = seqs[i];
        const auto& b = seqs[j];
        if (a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin()))
          return PrefixWitness{c, members[i], members[j]};
      }
  }
  return std::nullopt;
}

bool check_prefix_condition(const PathTable& t, const EdgeLabelling& lab) {
  return !find_prefix_violation(t, lab).has_value();
}

std::vector<PathId> least_chains(const PathTable& t, const EdgeLabelling& lab) {
  if (auto w = find_prefix_violation(t, lab))
    fail(Errc::prefix_violation, "label sequences of " + t.path_display(w->first) + " and " +
                                     t.path_display(w->second) + " collide in " +
                                     t.class_display(w->cls));
  std::vector<PathId> least(t.class_count(), -1);
  for (ClassId c = 0; c < t.class_count(); ++c) {
    PathId best = t.class_members(c).front();
    for (PathId p : t.class_members(c))
      if (chain_compare(t, lab, p, best) < 0) best = p;
    least[c] = best;
  }
  return least;
}

PathId lex_least_chain(const PathTable& t, const EdgeLabelling& lab, ClassId cls) {
  return least_chains(t, lab)[cls];
}

std::optional<LexWitness> find_lex_violation(const PathTable& t, const EdgeLabelling& lab) {
  auto least = least_chains(t, lab);
  for (ClassId c = 0; c < t.class_count(); ++c) {
    for (PathId chain : t.class_members(c)) {
      if (chain == least[c]) continue;
      int n = t.degree(chain);
      // interior vertex positions 1..n-1; need s strictly before t
      for (int i = 1; i + 1 <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j) {
          PathId head = t.subpath(chain, 0, j);      // chain restricted to [x, t]
          PathId tail = t.subpath(chain, i, n - i);  // chain restricted to [s, y]
          if (least[t.class_of(head)] == head && least[t.class_of(tail)] == tail)
            return LexWitness{c, chain, i, j};
        }
    }
  }
  return std::nullopt;
}

bool check_lex_condition(const PathTable& t, const EdgeLabelling& lab) {
  return !find_lex_violation(t, lab).has_value();
}

std::optional<SbsWitness> find_sbs_violation(const PathTable& t, const EdgeLabelling& lab) {
  auto least = least_chains(t, lab);
  for (ClassId c = 0; c < t.class_count(); ++c) {
    for (PathId chain : t.class_members(c)) {
      if (chain == least[c]) continue;
      int n = t.degree(chain);
      bool witnessed = false;
      for (int i = 0; i + 2 <= n && !witnessed; ++i) {
        PathId window = t.subpath(chain, i, 2);
        witnessed = least[t.class_of(window)] != window;
      }
      if (!witnessed) return SbsWitness{c, chain};
    }
  }
  return std::nullopt;
}

bool check_sbs_condition(const PathTable& t, const EdgeLabelling& lab) {
  return !find_sbs_violation(t, lab).has_value();
}

namespace {

std::optional<EdgeLabelling> search_impl(const PathTable& t, int max_label, int edge_bound,
                                         bool fix_first) {
  if (max_label < 1) fail(Errc::validation_error, "max_label must be positive");
  const int ne = t.edge_count();
  if (ne > edge_bound)
    fail(Errc::search_bound_exceeded,
         std::to_string(ne) + " edges exceeds the search bound " + std::to_string(edge_bound));
  if (ne == 0) {
    EdgeLabelling empty{std::vector<long>{}};
    return empty;  // vacuously prefix + SBS valid
  }
  // Classes whose last edge (max index over members' edges) is k can be
  // prefix-checked as soon as edges 0..k are assigned.
  std::vector<std::vector<ClassId>> complete_at(ne);
  for (ClassId c = 0; c < t.class_count(); ++c) {
    if (t.class_members(c).size() < 2) continue;
    int last = 0;
    for (PathId p : t.class_members(c))
      for (int e : t.path(p).edges) last = std::max(last, e);
    complete_at[last].push_back(c);
  }
  std::vector<long> assignment(ne, 0);
  EdgeLabelling lab;
  auto prefix_clash = [&](ClassId c) {
    auto members = t.class_members(c);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (i == j) continue;
        const auto& a = t.path(members[i]).edges;
        const auto& b = t.path(members[j]).edges;
        if (a.size() > b.size()) continue;
        bool pref = true;
        for (std::size_t k = 0; k < a.size() && pref; ++k)
          pref = assignment[a[k]] == assignment[b[k]];
        if (pref) return true;
      }
    return false;
  };
  std::function<bool(int)> dfs = [&](int e) -> bool {
    if (e == ne) {
      EdgeLabelling cand{assignment};
      return check_prefix_condition(t, cand) && check_sbs_condition(t, cand);
    }
    long first = 1, last = (fix_first && e == 0) ? 1 : max_label;
    for (long v = first; v <= last; ++v) {
      assignment[e] = v;
      bool ok = true;
      for (ClassId c : complete_at[e])
        if (prefix_clash(c)) {
          ok = false;
          break;
        }
      if (ok && dfs(e + 1)) return true;
    }
    assignment[e] = 0;
    return false;
  };
  if (dfs(0)) return EdgeLabelling{assignment};
  return std::nullopt;
}

}  // namespace

std::optional<EdgeLabelling> search_lex_labelling(const PathTable& t, int max_label,
                                                  int edge_bound) {
  return search_impl(t, max_label, edge_bound, true);
}

std::optional<EdgeLabelling> search_lex_labelling_full(const PathTable& t, int max_label,
                                                       int edge_bound) {
  return search_impl(t, max_label, edge_bound, false);
}

}  // namespace lexshell
