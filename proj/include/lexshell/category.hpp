#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexshell/detail/digraph.hpp"
#include "lexshell/errors.hpp"
#include "lexshell/poset.hpp"

namespace lexshell {

struct GeneratorSpec {
  std::string id;
  std::string dom;
  std::string cod;
};

/// One side of a relation: a composable sequence of generator ids, written
/// diagrammatically (left-to-right application order).
using GenPath = std::vector<std::string>;

struct Morphism {
  std::string id;
  int dom = -1;
  int cod = -1;
  bool identity = false;
  std::vector<int> decompositions;  // indices into paths(); empty for identities
};

/// Finite acyclic category presented by objects, indecomposable generators
/// and relations between parallel generator paths. The composition structure
/// is the congruence closure of the relations over the (finite) path set.
class AcyclicCategory {
 public:
  static AcyclicCategory build(std::vector<std::string> objects,
                               std::vector<GeneratorSpec> generators,
                               const std::vector<std::pair<GenPath, GenPath>>& relations);

  static AcyclicCategory from_poset(const Poset& p);
  Poset to_poset() const;  // ValidationError unless every hom-set has <= 1 element

  int object_count() const { return (int)objects_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const std::string& object_name(int v) const { return objects_[v]; }
  int object_index(std::string_view name) const;

  int generator_count() const { return (int)generators_.size(); }
  const detail::RawEdge& generator(int g) const { return edges_[g]; }
  const std::string& generator_id(int g) const { return generators_[g].id; }
  int generator_index(std::string_view id) const;

  /// Non-trivial generator paths in canonical (length, lex) order.
  int path_count() const { return (int)paths_.size(); }
  const detail::RawPath& path(int p) const { return paths_[p]; }
  int find_path(const std::vector<int>& edges) const;  // -1 if absent

  /// Congruence class of a non-trivial path; classes index morphisms_ tails.
  int class_of_path(int p) const { return class_of_[p]; }

  /// Identities first (one per object, in object order), then one morphism
  /// per congruence class in canonical order.
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  int morphism_of_path(int p) const { return object_count() + class_of_[p]; }
  int identity(int object) const { return object; }
  std::optional<int> compose(int m1, int m2) const;  // diagrammatic: m1 then m2
  bool hom_nonempty(int x, int y) const { return reach_[x][y] != 0; }
  int hom_size(int x, int y) const;

  /// Fresh initial/terminal objects wired to minimal/maximal objects, all new
  /// parallel paths identified. Already-augmented inputs are returned
  /// unchanged unless force is set.
  AcyclicCategory augmented(bool force = false) const;
  bool is_augmented() const;

  friend bool operator==(const AcyclicCategory& a, const AcyclicCategory& b);

 private:
  std::vector<std::string> objects_;
  std::vector<GeneratorSpec> generators_;
  std::vector<detail::RawEdge> edges_;
  std::unordered_map<std::string, int> object_index_;
  std::unordered_map<std::string, int> generator_index_;

  std::vector<detail::RawPath> paths_;  // non-trivial only
  std::unordered_map<std::string, int> path_index_;
  std::vector<int> class_of_;
  std::vector<Morphism> morphisms_;
  std::vector<std::vector<char>> reach_;
  std::vector<std::pair<GenPath, GenPath>> relations_;  // as given, validated

  static std::string path_key(const std::vector<int>& edges);
  std::vector<int> resolve_relation_side(const GenPath& side) const;
};

}  // namespace lexshell
