#pragma once

// Brute-force oracles and random generators shared by the test binaries.
// Nothing here calls into the library's homology or rank code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "pathideal/betti.hpp"
#include "pathideal/ideal.hpp"

namespace testing {

using pathideal::BettiTable;
using pathideal::Monomial;
using pathideal::MonomialIdeal;

inline bool divisible_by_some(const std::vector<std::uint32_t>& gens, std::uint32_t mask) {
  return std::any_of(gens.begin(), gens.end(), [&](std::uint32_t g) { return (g & ~mask) == 0; });
}

inline std::vector<std::uint32_t> masks(const MonomialIdeal& ideal) {
  std::vector<std::uint32_t> out;
  for (Monomial g : ideal.generators()) out.push_back(g.mask());
  return out;
}

/// Rank over GF(2) of a dense 0/1 matrix by textbook row reduction.
inline int naive_rank_gf2(std::vector<std::vector<int>> a) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][c] & 1) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r != rank && (a[r][c] & 1)) {
        for (int cc = 0; cc < cols; ++cc) a[r][cc] ^= a[rank][cc] & 1;
      }
    }
    ++rank;
  }
  return rank;
}

/// β_{i,j}(I) over GF(2) from Hochster's sum, written independently: faces of
/// Δ[W] are the submasks of W containing no generator, boundaries are dense.
inline BettiTable naive_betti_gf2(const MonomialIdeal& ideal) {
  const int n = ideal.ambient();
  const auto gens = masks(ideal);
  BettiTable table;
  for (std::uint32_t w = 1; w < (1u << n); ++w) {
    std::map<int, std::vector<std::uint32_t>> by_size;
    for (std::uint32_t f = w;; f = (f - 1) & w) {
      if (!divisible_by_some(gens, f)) by_size[std::popcount(f)].push_back(f);
      if (f == 0) break;
    }
    const int top = by_size.rbegin()->first;
    auto boundary_rank = [&](int size) {  // from faces of `size` to faces of `size - 1`
      if (size < 1 || !by_size.count(size) || !by_size.count(size - 1)) return 0;
      const auto& hi = by_size[size];
      const auto& lo = by_size[size - 1];
      std::vector<std::vector<int>> m(lo.size(), std::vector<int>(hi.size(), 0));
      for (std::size_t c = 0; c < hi.size(); ++c) {
        for (std::size_t r = 0; r < lo.size(); ++r) {
          if ((lo[r] & ~hi[c]) == 0) m[r][c] = 1;
        }
      }
      return naive_rank_gf2(m);
    };
    const int j = std::popcount(w);
    for (int size = 0; size <= top; ++size) {
      const int count = by_size.count(size) ? static_cast<int>(by_size[size].size()) : 0;
      const int h = count - boundary_rank(size) - boundary_rank(size + 1);
      const int d = size - 1;
      const int i = j - d - 2;
      if (h > 0 && i >= 0) table.add(i, j, static_cast<std::uint64_t>(h));
    }
  }
  return table;
}

/// Ideal with `gens` random generators of degree 1..max_degree on n variables.
inline MonomialIdeal random_ideal(std::mt19937& rng, int n, int gens, int max_degree) {
  std::uniform_int_distribution<int> degree(1, max_degree);
  std::vector<Monomial> raw;
  for (int g = 0; g < gens; ++g) {
    std::vector<int> vars(n);
    for (int v = 0; v < n; ++v) vars[v] = v + 1;
    std::shuffle(vars.begin(), vars.end(), rng);
    vars.resize(std::min(n, degree(rng)));
    raw.push_back(Monomial::from_indices(std::span<const int>(vars)));
  }
  return MonomialIdeal::from_generators(n, raw);
}

/// Like random_ideal but with no generator of degree one below `min_degree`.
inline MonomialIdeal random_ideal_min_degree(std::mt19937& rng, int n, int gens, int min_degree, int max_degree) {
  std::uniform_int_distribution<int> degree(min_degree, max_degree);
  std::vector<Monomial> raw;
  for (int g = 0; g < gens; ++g) {
    std::vector<int> vars(n);
    for (int v = 0; v < n; ++v) vars[v] = v + 1;
    std::shuffle(vars.begin(), vars.end(), rng);
    vars.resize(std::min(n, degree(rng)));
    raw.push_back(Monomial::from_indices(std::span<const int>(vars)));
  }
  return MonomialIdeal::from_generators(n, raw);
}

}  // namespace testing
