#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "accumulate.hpp"
#include "pathideal/betti.hpp"
#include "pathideal/errors.hpp"

namespace pathideal {

namespace {

/// lcm of every subset of generators, indexed by subset bitmask.
std::vector<std::uint32_t> subset_lcms(std::span<const Monomial> gens) {
  const std::size_t count = std::size_t{1} << gens.size();
  std::vector<std::uint32_t> lcm(count, 0);
  for (std::size_t s = 1; s < count; ++s) {
    const int low = std::countr_zero(s);
    lcm[s] = lcm[s & (s - 1)] | gens[static_cast<std::size_t>(low)].mask();
  }
  return lcm;
}

/// Subsets sharing one lcm, lowest degree first. Builds the complex whose
/// differential keeps S -> S \ {g} exactly when the lcm does not drop.
ChainComplex strand_complex(std::span<const std::uint32_t> subsets, std::span<const std::uint32_t> lcm,
                            std::uint32_t multidegree) {
  int top = 0;
  for (std::uint32_t s : subsets) top = std::max(top, std::popcount(s));
  std::vector<std::vector<std::uint32_t>> by_degree(static_cast<std::size_t>(top) + 1);
  for (std::uint32_t s : subsets) by_degree[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  for (auto& level : by_degree) std::sort(level.begin(), level.end());

  ChainComplex cc;
  cc.lowest_degree = 1;
  for (int q = 1; q <= top; ++q) cc.dims.push_back(by_degree[static_cast<std::size_t>(q)].size());
  for (int q = 2; q <= top; ++q) {
    const auto& lower = by_degree[static_cast<std::size_t>(q - 1)];
    const auto& upper = by_degree[static_cast<std::size_t>(q)];
    SparseMatrix d(lower.size(), upper.size());
    for (std::size_t c = 0; c < upper.size(); ++c) {
      const std::uint32_t s = upper[c];
      int position = 0;
      for (std::uint32_t rest = s; rest != 0; rest &= rest - 1, ++position) {
        const std::uint32_t face = s & ~(rest & (~rest + 1));
        if (lcm[face] != multidegree) continue;  // term is a non-unit after tensoring
        const auto it = std::lower_bound(lower.begin(), lower.end(), face);
        d.columns[c].push_back({static_cast<std::uint32_t>(it - lower.begin()), (position % 2 == 0) ? 1 : -1});
      }
      std::sort(d.columns[c].begin(), d.columns[c].end(),
                [](const SparseMatrix::Entry& a, const SparseMatrix::Entry& b) { return a.row < b.row; });
    }
    cc.boundaries.push_back(std::move(d));
  }
  return cc;
}

void check_taylor_input(const MonomialIdeal& ideal, int cap_k) {
  if (ideal.is_zero()) throw std::invalid_argument("Betti table of the zero ideal");
  if (ideal.is_unit()) throw std::invalid_argument("Betti table of the unit ideal");
  if (static_cast<int>(ideal.size()) > cap_k) {
    throw CapExceeded("Taylor-Tor needs k <= " + std::to_string(cap_k) + " (k=" + std::to_string(ideal.size()) + ")");
  }
}

}  // namespace

ChainComplex taylor_multidegree_complex(const MonomialIdeal& ideal, std::uint32_t multidegree) {
  check_taylor_input(ideal, 20);
  const std::vector<std::uint32_t> lcm = subset_lcms(ideal.generators());
  std::vector<std::uint32_t> subsets;
  for (std::size_t s = 1; s < lcm.size(); ++s) {
    if (lcm[s] == multidegree) subsets.push_back(static_cast<std::uint32_t>(s));
  }
  if (subsets.empty()) return ChainComplex{1, {}, {}};
  return strand_complex(subsets, lcm, multidegree);
}

BettiTable betti_taylor_tor(const MonomialIdeal& ideal, const BettiOptions& options) {
  check_taylor_input(ideal, options.cap_k);
  const std::vector<std::uint32_t> lcm = subset_lcms(ideal.generators());

  // Group nonempty subsets by lcm; each group is an independent multidegree.
  std::vector<std::uint32_t> order(lcm.size() - 1);
  for (std::size_t s = 1; s < lcm.size(); ++s) order[s - 1] = static_cast<std::uint32_t>(s);
  std::sort(order.begin(), order.end(), [&lcm](std::uint32_t a, std::uint32_t b) {
    return lcm[a] != lcm[b] ? lcm[a] < lcm[b] : a < b;
  });
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || lcm[order[i]] != lcm[order[i - 1]]) starts.push_back(i);
  }
  starts.push_back(order.size());

  return kernels::accumulate(
      options.policy, starts.size() - 1, options.deadline, [&](std::size_t g, BettiTable& out) {
        const std::span<const std::uint32_t> group(order.data() + starts[g], starts[g + 1] - starts[g]);
        const std::uint32_t multidegree = lcm[group.front()];
        const ChainComplex cc = strand_complex(group, lcm, multidegree);
        const std::vector<std::size_t> h = cc.homology(options.field);
        const int j = std::popcount(multidegree);
        for (std::size_t idx = 0; idx < h.size(); ++idx) {
          // Taylor degree q resolves R/I in position q, i.e. I in position q-1.
          if (h[idx] != 0) out.add(static_cast<int>(idx), j, h[idx]);
        }
      });
}

}  // namespace pathideal
