#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pathideal/field.hpp"
#include "pathideal/linalg.hpp"

namespace pathideal {

/// Simplicial complex on vertices 1..n given by its facets (bitmasks, vertex v in bit v-1).
/// The void complex has no facets; the irrelevant complex {∅} has the single facet 0.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps only the inclusion-maximal members of `faces`, in canonical order.
  SimplicialComplex(int n, std::span<const std::uint32_t> faces);
  SimplicialComplex(int n, std::initializer_list<std::uint32_t> faces)
      : SimplicialComplex(n, std::span<const std::uint32_t>(faces.begin(), faces.size())) {}

  int vertex_count() const { return n_; }
  std::span<const std::uint32_t> facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// -1 for {∅}; throws std::logic_error for the void complex.
  int dimension() const;
  bool has_face(std::uint32_t face) const;
  /// Every face, grouped by increasing size and ascending mask within a size.
  std::vector<std::uint32_t> faces() const;
  /// Faces of exactly `size` vertices.
  std::vector<std::uint32_t> faces_of_size(int size) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint32_t> facets_;
};

/// Builds a facet list from vertex lists, e.g. {{1,2},{3,4}}.
SimplicialComplex complex_from_lists(int n, const std::vector<std::vector<int>>& facets);
/// "n=4; {1,3},{1,4},{2,4}".
std::string to_string(const SimplicialComplex& c);

/// Finite chain complex over Z whose entries are read in a field when ranks are taken.
/// dims[i] is the basis size in degree lowest_degree + i; boundaries[i] maps
/// degree lowest_degree + i + 1 into degree lowest_degree + i.
struct ChainComplex {
  int lowest_degree = 0;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> boundaries;

  /// homology(F)[i] = dim H in degree lowest_degree + i.
  std::vector<std::size_t> homology(const Field& field) const;
  /// Checks that consecutive boundaries compose to zero in `field`.
  bool composes_to_zero(const Field& field) const;
};

/// Augmented simplicial chain complex of a face list that is closed under
/// taking subsets (must contain the empty face). Lowest degree is -1.
ChainComplex augmented_chain_complex(std::span<const std::uint32_t> faces);

/// Reduced homology dims H̃_d for d = -1..dim; empty for the void complex.
/// A cone (some vertex in every facet) is acyclic and is answered without
/// building chains. Throws CapExceeded if the vertex count exceeds `vertex_cap`.
std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, const Field& field,
                                               int vertex_cap = 16);

/// Same, directly from a subset-closed face list containing ∅ (no cone shortcut).
std::vector<std::size_t> reduced_homology_of_faces(std::span<const std::uint32_t> faces, const Field& field);

}  // namespace pathideal
