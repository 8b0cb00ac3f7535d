#include "pathideal/linalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pathideal {

std::size_t SparseMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& c : columns) total += c.size();
  return total;
}

std::size_t rank(const SparseMatrix& a, const Field& field) {
  switch (field.kind()) {
    case Field::Kind::GF2: return rank_gf2(a);
    case Field::Kind::GFp: return rank_mod_p(a, field.characteristic());
    case Field::Kind::Rational: return rank_rational(a);
  }
  return 0;
}

std::size_t rank_gf2(const SparseMatrix& a) {
  const std::size_t words = (a.rows + 63) / 64;
  if (words == 0) return 0;
  // pivots[r] holds a reduced column whose highest set bit is r.
  std::vector<std::vector<std::uint64_t>> pivots(a.rows);
  std::vector<std::uint64_t> v(words);
  std::size_t rk = 0;
  for (const auto& col : a.columns) {
    std::fill(v.begin(), v.end(), 0);
    for (const auto& e : col) {
      if ((e.value & 1) != 0) v[e.row / 64] ^= std::uint64_t{1} << (e.row % 64);
    }
    std::size_t top_word = words;
    while (true) {
      while (top_word > 0 && v[top_word - 1] == 0) --top_word;
      if (top_word == 0) break;
      const std::size_t low = (top_word - 1) * 64 + (63 - static_cast<std::size_t>(std::countl_zero(v[top_word - 1])));
      auto& piv = pivots[low];
      if (piv.empty()) {
        piv = v;
        ++rk;
        break;
      }
      for (std::size_t w = 0; w < top_word; ++w) v[w] ^= piv[w];
    }
  }
  return rk;
}

namespace {

using ModColumn = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::uint32_t pow_mod(std::uint64_t b, std::uint32_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e != 0) {
    if ((e & 1u) != 0) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

std::size_t rank_mod_p(const SparseMatrix& a, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p needs a prime modulus");
  std::vector<ModColumn> pivots(a.rows);
  std::size_t rk = 0;
  ModColumn v;
  ModColumn scratch;
  for (const auto& col : a.columns) {
    v.clear();
    for (const auto& e : col) {
      const std::int64_t r = ((static_cast<std::int64_t>(e.value) % p) + p) % p;
      if (r != 0) v.emplace_back(e.row, static_cast<std::uint32_t>(r));
    }
    while (!v.empty()) {
      const std::uint32_t low = v.back().first;
      auto& piv = pivots[low];
      if (piv.empty()) {
        // Normalise so the pivot entry is 1.
        const std::uint64_t inv = pow_mod(v.back().second, p - 2, p);
        for (auto& [row, val] : v) val = static_cast<std::uint32_t>(val * inv % p);
        piv = v;
        ++rk;
        break;
      }
      // v -= v_low * piv
      const std::uint64_t factor = v.back().second;
      scratch.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < v.size() || j < piv.size()) {
        if (j == piv.size() || (i < v.size() && v[i].first < piv[j].first)) {
          scratch.push_back(v[i++]);
        } else {
          const std::uint64_t sub = factor * piv[j].second % p;
          if (i < v.size() && v[i].first == piv[j].first) {
            const std::uint32_t val = static_cast<std::uint32_t>((v[i].second + p - sub) % p);
            if (val != 0) scratch.emplace_back(v[i].first, val);
            ++i;
          } else {
            const std::uint32_t val = static_cast<std::uint32_t>((p - sub) % p);
            if (val != 0) scratch.emplace_back(piv[j].first, val);
          }
          ++j;
        }
      }
      v.swap(scratch);
    }
  }
  return rk;
}

namespace {

struct Overflow {};

struct CheckedInt64 {
  using value_type = std::int64_t;
  static value_type mul(value_type a, value_type b) {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static value_type sub(value_type a, value_type b) {
    value_type r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static value_type gcd(value_type a, value_type b) {
    if (a == INT64_MIN || b == INT64_MIN) throw Overflow{};
    return std::gcd(a, b);
  }
  static value_type abs(value_type a) {
    if (a == INT64_MIN) throw Overflow{};
    return a < 0 ? -a : a;
  }
};

struct Unbounded {
  using value_type = BigInt;
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type gcd(const value_type& a, const value_type& b) { return boost::multiprecision::gcd(a, b); }
  static value_type abs(const value_type& a) { return a < 0 ? value_type(-a) : a; }
};

template <class Ops>
std::size_t fraction_free_rank(const SparseMatrix& a) {
  using Int = typename Ops::value_type;
  using Column = std::vector<std::pair<std::uint32_t, Int>>;
  std::vector<Column> pivots(a.rows);
  std::size_t rk = 0;
  Column v;
  Column scratch;
  for (const auto& col : a.columns) {
    v.clear();
    for (const auto& e : col) {
      if (e.value != 0) v.emplace_back(e.row, Int(e.value));
    }
    while (!v.empty()) {
      const std::uint32_t low = v.back().first;
      auto& piv = pivots[low];
      if (piv.empty()) {
        piv = v;
        ++rk;
        break;
      }
      // v <- piv_low * v - v_low * piv, then strip the content.
      const Int a_coef = piv.back().second;
      const Int b_coef = v.back().second;
      scratch.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < v.size() || j < piv.size()) {
        if (j == piv.size() || (i < v.size() && v[i].first < piv[j].first)) {
          scratch.emplace_back(v[i].first, Ops::mul(a_coef, v[i].second));
          ++i;
        } else if (i == v.size() || piv[j].first < v[i].first) {
          scratch.emplace_back(piv[j].first, Ops::sub(Int(0), Ops::mul(b_coef, piv[j].second)));
          ++j;
        } else {
          Int val = Ops::sub(Ops::mul(a_coef, v[i].second), Ops::mul(b_coef, piv[j].second));
          if (val != 0) scratch.emplace_back(v[i].first, std::move(val));
          ++i;
          ++j;
        }
      }
      Int content(0);
      for (const auto& [row, val] : scratch) {
        content = Ops::gcd(content, Ops::abs(val));
        if (content == 1) break;
      }
      if (content > 1) {
        for (auto& [row, val] : scratch) val /= content;
      }
      v.swap(scratch);
    }
  }
  return rk;
}

}  // namespace

std::size_t rank_rational(const SparseMatrix& a) {
  try {
    return fraction_free_rank<CheckedInt64>(a);
  } catch (const Overflow&) {
    return fraction_free_rank<Unbounded>(a);
  }
}

DenseIntMatrix to_dense(const SparseMatrix& a) {
  DenseIntMatrix d(a.rows, std::vector<BigInt>(a.cols, 0));
  for (std::size_t c = 0; c < a.cols; ++c) {
    for (const auto& e : a.columns[c]) d[e.row][c] = e.value;
  }
  return d;
}

std::size_t rank_bareiss(DenseIntMatrix a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a.front().size();
  BigInt prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t pivot = rk;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rk]);
    for (std::size_t r = rk + 1; r < rows; ++r) {
      for (std::size_t cc = c + 1; cc < cols; ++cc) {
        a[r][cc] = (a[rk][c] * a[r][cc] - a[r][c] * a[rk][cc]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("multiply: shape mismatch");
  SparseMatrix out(a.rows, b.cols);
  for (std::size_t c = 0; c < b.cols; ++c) {
    std::map<std::uint32_t, std::int64_t> acc;
    for (const auto& eb : b.columns[c]) {
      for (const auto& ea : a.columns[eb.row]) {
        acc[ea.row] += static_cast<std::int64_t>(ea.value) * eb.value;
      }
    }
    for (const auto& [row, val] : acc) {
      if (val != 0) out.columns[c].push_back({row, static_cast<std::int32_t>(val)});
    }
  }
  return out;
}

bool is_zero_in(const SparseMatrix& a, const Field& field) {
  const std::uint32_t p = field.characteristic();
  for (const auto& col : a.columns) {
    for (const auto& e : col) {
      if (p == 0 ? e.value != 0 : e.value % static_cast<std::int64_t>(p) != 0) return false;
    }
  }
  return true;
}

}  // namespace pathideal
