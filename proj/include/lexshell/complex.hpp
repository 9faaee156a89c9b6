#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexshell/category.hpp"
#include "lexshell/poset.hpp"

namespace lexshell {

struct FaceRef {
  int dim = -1;
  int idx = -1;
  friend bool operator==(const FaceRef&, const FaceRef&) = default;
  friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/// Generalised simplicial complex: faces per dimension, each k-face carrying
/// an ordered list of k+1 boundary references. Faces are identified by their
/// construction data (chains of elements / of morphisms), never reconstructed
/// from vertex sets.
class Complex {
 public:
  struct Face {
    std::string label;
    std::vector<int> boundary;  // indices into dimension dim-1
    std::vector<int> vertices;  // sorted vertex ids
    std::vector<int> chain;     // order complex: the chain, in poset order
  };

  static Complex order_complex(const Poset& p);
  static Complex nerve(const AcyclicCategory& c);

  int dim() const { return (int)faces_.size() - 1; }
  int face_count(int d) const {
    return d >= 0 && d < (int)faces_.size() ? (int)faces_[d].size() : 0;
  }
  const Face& face(FaceRef r) const { return faces_[r.dim][r.idx]; }
  const std::vector<std::vector<Face>>& faces() const { return faces_; }
  std::span<const FaceRef> facets() const { return facets_; }

  /// All subfaces reachable through boundaries, including the face itself.
  std::vector<FaceRef> subface_closure(FaceRef r) const;

  bool vertex_determined() const { return vertex_determined_; }

 private:
  std::vector<std::vector<Face>> faces_;
  std::vector<FaceRef> facets_;
  bool vertex_determined_ = true;

  void finalize();
};

using FacetOrdering = std::vector<FaceRef>;

/// Shelling test: for every i < j some k < j has common(F_k, F_j) equal to
/// the subfaces of F_j avoiding one vertex, containing common(F_i, F_j).
/// Intersections are sets of common subfaces, which for complexes built from
/// posets coincides with vertex-set intersection.
bool is_shelling(const Complex& k, const FacetOrdering& order);  // IncompleteOrdering

/// First shelling order in lexicographic facet-index order, or nullopt after
/// an exhaustive prefix-pruned search.
std::optional<FacetOrdering> find_shelling(const Complex& k, int facet_bound = 9);

}  // namespace lexshell
