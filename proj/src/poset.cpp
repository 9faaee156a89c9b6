#include "lexshell/poset.hpp"

#include <algorithm>

namespace lexshell {

Poset Poset::build(std::vector<std::string> elements,
                   const std::vector<std::pair<std::string, std::string>>& covers) {
  Poset p;
  p.elements_ = std::move(elements);
  for (int i = 0; i < (int)p.elements_.size(); ++i) {
    auto [it, fresh] = p.index_.emplace(p.elements_[i], i);
    if (!fresh) fail(Errc::duplicate_element, "duplicate element '" + p.elements_[i] + "'");
  }
  const int n = p.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : covers) {
    int x = p.index_of(a), y = p.index_of(b);
    if (x == y) fail(Errc::cycle_detected, "self relation on '" + a + "'");
    rel[x][y] = 1;
  }
  // Reflexive-transitive closure (Floyd-Warshall on the boolean relation).
  for (int i = 0; i < n; ++i) rel[i][i] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rel[i][k])
        for (int j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rel[i][j] && rel[j][i])
        fail(Errc::cycle_detected,
             "cycle through '" + p.elements_[i] + "' and '" + p.elements_[j] + "'");
  p.leq_ = std::move(rel);
  // Transitive reduction: keep x < y with nothing strictly between.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !p.leq_[x][y]) continue;
      bool direct = true;
      for (int z = 0; z < n && direct; ++z)
        if (z != x && z != y && p.leq_[x][z] && p.leq_[z][y]) direct = false;
      if (direct) p.covers_.emplace_back(x, y);
    }
  std::sort(p.covers_.begin(), p.covers_.end());
  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (const auto& [x, y] : p.covers_) {
    p.up_[x].push_back(y);
    p.down_[y].push_back(x);
  }
  return p;
}

int Poset::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) fail(Errc::unknown_element, "unknown element '" + std::string(name) + "'");
  return it->second;
}

bool Poset::is_cover(int x, int y) const {
  return std::binary_search(covers_.begin(), covers_.end(), std::make_pair(x, y));
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (down_[v].empty()) out.push_back(v);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (up_[v].empty()) out.push_back(v);
  return out;
}

bool Poset::is_bounded() const {
  return size() > 0 && minimal_elements().size() == 1 && maximal_elements().size() == 1;
}

int Poset::bottom() const {
  auto mins = minimal_elements();
  if (size() == 0 || mins.size() != 1) fail(Errc::not_bounded, "poset has no unique minimum");
  return mins[0];
}

int Poset::top() const {
  auto maxs = maximal_elements();
  if (size() == 0 || maxs.size() != 1) fail(Errc::not_bounded, "poset has no unique maximum");
  return maxs[0];
}

Interval Poset::closed_interval(int x, int y) const {
  if (!leq(x, y))
    fail(Errc::not_comparable, "'" + name(x) + "' is not below '" + name(y) + "'");
  Interval iv;
  iv.bottom = x;
  iv.top = y;
  for (int z = 0; z < size(); ++z)
    if (leq(x, z) && leq(z, y)) iv.members.push_back(z);
  return iv;
}

Interval Poset::full_interval() const { return closed_interval(bottom(), top()); }

void Poset::chains_dfs(int at, int top, const std::vector<char>& in_members,
                       std::vector<int>& stack, std::vector<Chain>& out) const {
  stack.push_back(at);
  if (at == top) {
    out.push_back(Chain{stack});
  } else {
    for (int next : up_[at])
      if (in_members[next]) chains_dfs(next, top, in_members, stack, out);
  }
  stack.pop_back();
}

std::vector<Chain> Poset::maximal_chains(const Interval& iv) const {
  std::vector<char> in_members(size(), 0);
  for (int z : iv.members) in_members[z] = 1;
  std::vector<Chain> out;
  std::vector<int> stack;
  chains_dfs(iv.bottom, iv.top, in_members, stack, out);
  return out;
}

bool Poset::is_graded() const {
  auto chains = maximal_chains(full_interval());
  for (const auto& c : chains)
    if (c.length() != chains.front().length()) return false;
  return true;
}

int Poset::interval_degree(int x, int y) const {
  int best = 0;
  for (const auto& c : maximal_chains(closed_interval(x, y))) best = std::max(best, c.length());
  return best;
}

Poset Poset::augmented(bool force) const {
  if (!force && is_bounded()) return *this;
  auto fresh = [&](std::string base) {
    while (index_.count(base)) base += "_";
    return base;
  };
  std::string bot = fresh("0hat");
  std::string top_name = fresh(bot == "1hat" ? "1hat_" : "1hat");
  std::vector<std::string> elems;
  elems.push_back(bot);
  for (const auto& e : elements_) elems.push_back(e);
  elems.push_back(top_name);
  std::vector<std::pair<std::string, std::string>> cov;
  for (const auto& [x, y] : covers_) cov.emplace_back(name(x), name(y));
  for (int v : minimal_elements()) cov.emplace_back(bot, name(v));
  for (int v : maximal_elements()) cov.emplace_back(name(v), top_name);
  if (size() == 0) cov.emplace_back(bot, top_name);
  return build(std::move(elems), cov);
}

}  // namespace lexshell
