#include "pathideal/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "pathideal/errors.hpp"
#include "pathideal/ideal.hpp"

namespace pathideal {

namespace {

bool canonical_less(std::uint32_t a, std::uint32_t b) {
  return lex_less(Monomial::from_mask(a), Monomial::from_mask(b));
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n, std::span<const std::uint32_t> faces) : n_(n) {
  if (n < 0 || n > kMaxVariables) throw std::out_of_range("vertex count out of range");
  std::vector<std::uint32_t> sorted(faces.begin(), faces.end());
  for (std::uint32_t f : sorted) {
    if ((f & ~full_mask(n)) != 0) throw std::out_of_range("face uses a vertex outside 1..n");
  }
  std::sort(sorted.begin(), sorted.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::uint32_t f : sorted) {
    const bool covered = std::any_of(facets_.begin(), facets_.end(),
                                     [f](std::uint32_t g) { return (f & ~g) == 0; });
    if (!covered) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end(), canonical_less);
}

int SimplicialComplex::dimension() const {
  if (facets_.empty()) throw std::logic_error("the void complex has no dimension");
  int top = 0;
  for (std::uint32_t f : facets_) top = std::max(top, std::popcount(f));
  return top - 1;
}

bool SimplicialComplex::has_face(std::uint32_t face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](std::uint32_t g) { return (face & ~g) == 0; });
}

std::vector<std::uint32_t> SimplicialComplex::faces() const {
  std::vector<std::uint32_t> all;
  for (std::uint32_t f : facets_) {
    for (std::uint32_t sub = f;; sub = (sub - 1) & f) {
      all.push_back(sub);
      if (sub == 0) break;
    }
  }
  std::sort(all.begin(), all.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::vector<std::uint32_t> SimplicialComplex::faces_of_size(int size) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t f : faces()) {
    if (std::popcount(f) == size) out.push_back(f);
  }
  return out;
}

SimplicialComplex complex_from_lists(int n, const std::vector<std::vector<int>>& facets) {
  std::vector<std::uint32_t> masks;
  masks.reserve(facets.size());
  for (const auto& f : facets) masks.push_back(Monomial::from_indices(f).mask());
  return SimplicialComplex(n, masks);
}

std::string to_string(const SimplicialComplex& c) {
  std::string out = "n=" + std::to_string(c.vertex_count()) + ";";
  bool first = true;
  for (std::uint32_t f : c.facets()) {
    out += first ? " " : ",";
    out += to_compact_string(Monomial::from_mask(f));
    first = false;
  }
  return out;
}

std::vector<std::size_t> ChainComplex::homology(const Field& field) const {
  std::vector<std::size_t> ranks(boundaries.size());
  for (std::size_t i = 0; i < boundaries.size(); ++i) ranks[i] = rank(boundaries[i], field);
  std::vector<std::size_t> out(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    std::size_t h = dims[i];
    if (i > 0) h -= ranks[i - 1];             // rank of the map out of degree i
    if (i < boundaries.size()) h -= ranks[i];  // rank of the map into degree i
    out[i] = h;
  }
  return out;
}

bool ChainComplex::composes_to_zero(const Field& field) const {
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
    if (!is_zero_in(multiply(boundaries[i], boundaries[i + 1]), field)) return false;
  }
  return true;
}

ChainComplex augmented_chain_complex(std::span<const std::uint32_t> faces) {
  int top = -1;
  for (std::uint32_t f : faces) top = std::max(top, std::popcount(f));
  if (top < 0) throw std::invalid_argument("chain complex of the void complex");
  // by_size[s] holds faces with s vertices (degree s-1), ascending.
  std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(top) + 1);
  for (std::uint32_t f : faces) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  for (auto& level : by_size) std::sort(level.begin(), level.end());
  if (by_size[0].size() != 1) throw std::invalid_argument("face list must contain the empty face");

  ChainComplex cc;
  cc.lowest_degree = -1;
  for (const auto& level : by_size) cc.dims.push_back(level.size());
  for (std::size_t s = 1; s < by_size.size(); ++s) {
    const auto& lower = by_size[s - 1];
    const auto& upper = by_size[s];
    SparseMatrix d(lower.size(), upper.size());
    for (std::size_t c = 0; c < upper.size(); ++c) {
      const std::uint32_t face = upper[c];
      int position = 0;
      for (std::uint32_t rest = face; rest != 0; rest &= rest - 1, ++position) {
        const std::uint32_t facet = face & ~(rest & (~rest + 1));
        const auto it = std::lower_bound(lower.begin(), lower.end(), facet);
        if (it == lower.end() || *it != facet) {
          throw std::invalid_argument("face list is not closed under subsets");
        }
        d.columns[c].push_back({static_cast<std::uint32_t>(it - lower.begin()), (position % 2 == 0) ? 1 : -1});
      }
      std::sort(d.columns[c].begin(), d.columns[c].end(),
                [](const SparseMatrix::Entry& a, const SparseMatrix::Entry& b) { return a.row < b.row; });
    }
    cc.boundaries.push_back(std::move(d));
  }
  return cc;
}

std::vector<std::size_t> reduced_homology_of_faces(std::span<const std::uint32_t> faces, const Field& field) {
  return augmented_chain_complex(faces).homology(field);
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, const Field& field,
                                               int vertex_cap) {
  if (complex.vertex_count() > vertex_cap) {
    throw CapExceeded("complex has " + std::to_string(complex.vertex_count()) + " vertices, cap is " +
                      std::to_string(vertex_cap));
  }
  if (complex.is_void()) return {};
  const int dim = complex.dimension();
  std::uint32_t common = ~std::uint32_t{0};
  for (std::uint32_t f : complex.facets()) common &= f;
  if (common != 0) return std::vector<std::size_t>(static_cast<std::size_t>(dim) + 2, 0);
  const std::vector<std::uint32_t> faces = complex.faces();
  return reduced_homology_of_faces(faces, field);
}

}  // namespace pathideal
