#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "lexshell/errors.hpp"

namespace lexshell::detail {

struct RawEdge {
  int dom = -1;
  int cod = -1;
};

/// A directed path as a sequence of edge indices; empty = trivial path at dom.
struct RawPath {
  int dom = -1;
  int cod = -1;
  std::vector<int> edges;
  int length() const { return (int)edges.size(); }
};

inline long path_enumeration_bound() {
  if (const char* env = std::getenv("LEXSHELL_PATH_BOUND")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 100000;
}

/// All directed paths of an acyclic multigraph, trivial paths included,
/// ordered by (length, lexicographic edge sequence). Throws
/// PathBoundExceeded past `bound` paths.
inline std::vector<RawPath> enumerate_paths(int vertex_count, const std::vector<RawEdge>& edges,
                                            long bound) {
  std::vector<std::vector<int>> out_edges(vertex_count);
  for (int e = 0; e < (int)edges.size(); ++e) out_edges[edges[e].dom].push_back(e);
  std::vector<RawPath> paths;
  auto push = [&](RawPath p) {
    if ((long)paths.size() >= bound)
      fail(Errc::path_bound_exceeded,
           "more than " + std::to_string(bound) + " paths (LEXSHELL_PATH_BOUND)");
    paths.push_back(std::move(p));
  };
  for (int v = 0; v < vertex_count; ++v) push(RawPath{v, v, {}});
  std::size_t level_begin = 0, level_end = paths.size();
  while (level_begin < level_end) {
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (int e : out_edges[paths[i].cod]) {
        RawPath ext = paths[i];
        ext.edges.push_back(e);
        ext.cod = edges[e].cod;
        push(std::move(ext));
      }
    level_begin = level_end;
    level_end = paths.size();
  }
  return paths;
}

/// Throws CycleDetected if the edge multigraph has a directed cycle.
inline void require_acyclic(int vertex_count, const std::vector<RawEdge>& edges,
                            const std::vector<std::string>& names) {
  std::vector<std::vector<int>> succ(vertex_count);
  std::vector<int> indeg(vertex_count, 0);
  for (const auto& e : edges) {
    if (e.dom == e.cod) fail(Errc::cycle_detected, "self loop on '" + names[e.dom] + "'");
    succ[e.dom].push_back(e.cod);
    ++indeg[e.cod];
  }
  std::vector<int> queue;
  for (int v = 0; v < vertex_count; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::size_t seen = 0;
  while (seen < queue.size()) {
    int v = queue[seen++];
    for (int w : succ[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  if ((int)queue.size() != vertex_count) fail(Errc::cycle_detected, "directed cycle in diagram");
}

}  // namespace lexshell::detail
