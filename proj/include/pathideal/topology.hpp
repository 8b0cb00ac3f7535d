#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pathideal/field.hpp"
#include "pathideal/ideal.hpp"
#include "pathideal/path_ideal.hpp"
#include "pathideal/simplicial.hpp"

namespace pathideal {

/// Antichain of vertex subsets (edges) on vertices 1..n.
class Clutter {
 public:
  Clutter() = default;
  /// Drops edges that contain another edge; keeps canonical (lex) order.
  Clutter(int n, std::span<const std::uint32_t> edges);
  Clutter(int n, std::initializer_list<std::uint32_t> edges)
      : Clutter(n, std::span<const std::uint32_t>(edges.begin(), edges.size())) {}

  int vertex_count() const { return n_; }
  std::span<const std::uint32_t> edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }

  friend bool operator==(const Clutter&, const Clutter&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint32_t> edges_;
};

Clutter clutter_from_lists(int n, const std::vector<std::vector<int>>& edges);
/// "n=5; {1,2,3},{3,4,5}" (also used for complexes).
std::string to_string(const Clutter& c);
Clutter parse_clutter(std::string_view text);
SimplicialComplex parse_complex(std::string_view text);

/// Edges are the generator supports.
Clutter clutter_of(const MonomialIdeal& ideal);

/// All inclusion-minimal vertex sets meeting every edge, in lex order.
/// Computed by incremental transversal (one edge at a time).
std::vector<std::uint32_t> minimal_vertex_covers(const Clutter& c);

/// Facets are the complements of the minimal vertex covers.
SimplicialComplex cover_complex(const Clutter& c);

/// Order of facets satisfying the nonpure shelling condition: for all i < j there
/// are x ∈ F_j \ F_i and l < j with F_j \ F_l = {x}.
using ShellingOrder = std::vector<std::uint32_t>;

/// Complete backtracking search. Throws CapExceeded above `facet_cap` facets.
std::optional<ShellingOrder> find_shelling(const SimplicialComplex& complex, int facet_cap = 12);
/// Direct check of the shelling condition on a given order.
bool is_shelling_order(const SimplicialComplex& complex, std::span<const std::uint32_t> order);

/// Substitution x_v -> 0 on zero_set and x_v -> 1 on one_set (disjoint).
struct MinorAssignment {
  std::uint32_t zero_set = 0;
  std::uint32_t one_set = 0;
};

/// Applies an assignment; nullopt when the result is the zero ideal (no edge
/// survives) or the unit ideal (an edge shrinks to nothing).
std::optional<Clutter> apply_minor(const Clutter& c, MinorAssignment assignment);

/// Visits every proper nonzero minor (3^n assignments, including the empty one).
/// The visitor returns false to stop early. Throws CapExceeded above `vertex_cap`.
void for_each_minor(const Clutter& c, const std::function<bool(const MinorAssignment&, const Clutter&)>& visit,
                    int vertex_cap = 12);
/// Materialised form of for_each_minor.
std::vector<std::pair<MinorAssignment, Clutter>> minors(const Clutter& c, int vertex_cap = 12);

/// Smallest vertex lying in exactly one edge.
std::optional<int> has_free_vertex(const Clutter& c);

struct FreeVertexReport {
  bool holds = false;
  std::optional<Clutter> counterexample;  ///< a minor without a free vertex
  std::size_t minors_checked = 0;         ///< distinct edge families examined
};

/// Exhaustive check that every proper nonzero minor (C itself included) has a free vertex.
FreeVertexReport free_vertex_property(const Clutter& c, int vertex_cap = 12);

/// Free vertex of a minor of the path clutter C_{m,l,k} read off constructively:
/// the smallest vertex of the first surviving edge that was not set to 1.
/// nullopt if the assignment does not give a proper nonzero minor.
std::optional<int> path_minor_free_vertex(const PathParams& params, MinorAssignment assignment);

/// Faces of dimension exactly `dim` generate the pure skeleton.
SimplicialComplex pure_skeleton(const SimplicialComplex& complex, int dim);
/// Reisner: every link has vanishing reduced homology below its top dimension.
bool is_cohen_macaulay(const SimplicialComplex& complex, const Field& field);
/// Duval: every pure skeleton is Cohen–Macaulay. Throws CapExceeded above `vertex_cap`.
bool is_sequentially_cm(const SimplicialComplex& complex, const Field& field, int vertex_cap = 10);

/// {"free_vertex_property", "shelling", "seq_cm"}; entries that were not computed are null.
nlohmann::json certification_json(const std::optional<FreeVertexReport>& fvp,
                                  const std::optional<std::optional<ShellingOrder>>& shelling,
                                  const std::optional<bool>& seq_cm);

}  // namespace pathideal
