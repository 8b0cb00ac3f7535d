#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pathideal/field.hpp"

namespace pathideal {

/// Integer matrix stored column-wise; each column is sorted by row index and
/// holds no explicit zeros. Entries are read in the target field at rank time.
struct SparseMatrix {
  struct Entry {
    std::uint32_t row;
    std::int32_t value;
  };
  using Column = std::vector<Entry>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Column> columns;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  std::size_t nonzeros() const;
};

using BigInt = boost::multiprecision::cpp_int;
using DenseIntMatrix = std::vector<std::vector<BigInt>>;

std::size_t rank(const SparseMatrix& a, const Field& field);

/// Bit-packed Gaussian elimination.
std::size_t rank_gf2(const SparseMatrix& a);
/// Sparse column reduction modulo a prime.
std::size_t rank_mod_p(const SparseMatrix& a, std::uint32_t p);
/// Fraction-free sparse column reduction over the integers (= rank over Q).
/// Runs in 64-bit arithmetic and restarts with arbitrary precision on overflow.
std::size_t rank_rational(const SparseMatrix& a);

/// Dense Bareiss elimination over Z. Slow; kept as an independent reference.
std::size_t rank_bareiss(DenseIntMatrix a);
DenseIntMatrix to_dense(const SparseMatrix& a);

/// Integer product a*b; throws std::invalid_argument on shape mismatch.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
/// True when every entry of `a` vanishes in `field`.
bool is_zero_in(const SparseMatrix& a, const Field& field);

}  // namespace pathideal
