#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "accumulate.hpp"
#include "pathideal/betti.hpp"
#include "pathideal/errors.hpp"

namespace pathideal {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("Betti table of the zero ideal");
  if (ideal.is_unit()) throw std::invalid_argument("Betti table of the unit ideal");
}

/// Contribution of the induced subcomplex Δ[W] to β_{*,|W|}.
void hochster_unit(std::uint32_t subset, std::span<const std::uint32_t> gens, const Field& field,
                   BettiTable& out) {
  if (subset == 0) return;  // Δ[∅] = {∅} only feeds β_{-1,0}, which belongs to R/I
  std::vector<std::uint32_t> inside;
  std::uint32_t covered = 0;
  for (std::uint32_t g : gens) {
    if ((g & ~subset) == 0) {
      inside.push_back(g);
      covered |= g;
    }
  }
  // A vertex of W outside every non-face in W is a cone point of Δ[W].
  if (covered != subset) return;

  std::vector<std::uint32_t> faces;
  for (std::uint32_t f = subset;; f = (f - 1) & subset) {
    const bool face = std::none_of(inside.begin(), inside.end(),
                                   [f](std::uint32_t g) { return (g & ~f) == 0; });
    if (face) faces.push_back(f);
    if (f == 0) break;
  }
  const std::vector<std::size_t> h = reduced_homology_of_faces(faces, field);
  const int j = std::popcount(subset);
  for (std::size_t idx = 0; idx < h.size(); ++idx) {
    if (h[idx] == 0) continue;
    const int d = static_cast<int>(idx) - 1;
    const int i = j - d - 2;
    if (i >= 0) out.add(i, j, h[idx]);
  }
}

}  // namespace

BettiTable betti_hochster(const MonomialIdeal& ideal, const BettiOptions& options) {
  require_proper_nonzero(ideal);
  const int n = ideal.ambient();
  if (n > options.cap_n) {
    throw CapExceeded("Hochster needs n <= " + std::to_string(options.cap_n) + " (n=" + std::to_string(n) + ")");
  }
  std::vector<std::uint32_t> gens;
  for (Monomial g : ideal.generators()) gens.push_back(g.mask());
  const std::size_t count = std::size_t{1} << n;
  return kernels::accumulate(options.policy, count, options.deadline,
                             [&](std::size_t w, BettiTable& out) {
                               hochster_unit(static_cast<std::uint32_t>(w), gens, options.field, out);
                             });
}

}  // namespace pathideal
