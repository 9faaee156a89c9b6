#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "lexshell/category.hpp"
#include "lexshell/detail/digraph.hpp"
#include "lexshell/poset.hpp"

namespace lexshell {

using PathId = int;
using ClassId = int;

/// Uniform view of a poset's Hasse diagram or a category's generator diagram:
/// every directed path is materialized and indexed, and each path carries its
/// parallel class (closed interval for posets, congruence class for
/// categories). Trivial paths occupy singleton classes, so class_count()
/// equals |Int(P)| resp. the morphism count.
class PathTable {
 public:
  enum class Mode { poset, category };

  explicit PathTable(Poset p);
  explicit PathTable(AcyclicCategory c);

  Mode mode() const { return mode_; }
  const Poset& poset() const;        // poset mode only
  const AcyclicCategory& category() const;

  int vertex_count() const { return (int)vertex_names_.size(); }
  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  int vertex_index(std::string_view name) const;
  int edge_count() const { return (int)edges_.size(); }
  const detail::RawEdge& edge(int e) const { return edges_[e]; }
  const std::string& edge_name(int e) const { return edge_names_[e]; }
  int edge_index(std::string_view name) const;

  int path_count() const { return (int)paths_.size(); }
  const detail::RawPath& path(PathId p) const { return paths_[p]; }
  int degree(PathId p) const { return paths_[p].length(); }
  int dom(PathId p) const { return paths_[p].dom; }
  int cod(PathId p) const { return paths_[p].cod; }
  PathId trivial_path(int v) const { return trivial_[v]; }
  PathId find_path(std::span<const int> edges) const;  // -1 if absent
  PathId subpath(PathId p, int first_edge, int count) const;
  PathId concat(PathId a, PathId b) const;  // -1 unless cod(a) == dom(b)

  int class_count() const { return (int)class_members_.size(); }
  ClassId class_of(PathId p) const { return class_of_[p]; }
  std::span<const PathId> class_members(ClassId c) const { return class_members_[c]; }
  std::pair<int, int> class_endpoints(ClassId c) const;
  std::string class_display(ClassId c) const;

  /// Paths that can be extended on neither side (for bounded posets: the
  /// maximal chains from bottom to top).
  std::span<const PathId> maximal_paths() const { return maximal_; }
  bool is_maximal(PathId p) const;

  std::span<const PathId> paths_into(int v) const { return into_[v]; }   // non-trivial
  std::span<const PathId> paths_from(int v) const { return from_[v]; }  // non-trivial

  bool divides(PathId w, PathId m) const;  // w a contiguous factor of m
  /// Positions where w occurs as a factor of m (offset into m's edges).
  std::vector<int> occurrences(PathId w, PathId m) const;

  /// Poset: order relation; category: some morphism x -> y exists.
  bool vertex_leq(int x, int y) const;

  std::string path_display(PathId p) const;    // "a-b-f-g" / "alpha1.beta"
  PathId parse_path(std::string_view text) const;  // inverse of path_display

 private:
  Mode mode_;
  std::variant<Poset, AcyclicCategory> source_;
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<detail::RawEdge> edges_;
  std::unordered_map<std::string, int> edge_name_index_;

  std::vector<detail::RawPath> paths_;
  std::vector<PathId> trivial_;
  std::unordered_map<std::string, PathId> path_index_;
  std::vector<ClassId> class_of_;
  std::vector<std::vector<PathId>> class_members_;
  std::vector<PathId> maximal_;
  std::vector<std::vector<PathId>> into_;
  std::vector<std::vector<PathId>> from_;

  void index_paths();
  static std::string key(std::span<const int> edges);
};

}  // namespace lexshell
