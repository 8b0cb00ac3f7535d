#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathideal {

/// Largest supported ambient variable count; monomials are 32-bit index sets.
inline constexpr int kMaxVariables = 32;

/// Mask with bits 0..n-1 set (variables x1..xn).
constexpr std::uint32_t full_mask(int n) {
  return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1u;
}

/// Squarefree monomial stored as a set of 1-based variable indices.
///
/// Variable x_i lives in bit i-1. The empty set is the monomial 1.
class Monomial {
 public:
  constexpr Monomial() = default;

  static constexpr Monomial from_mask(std::uint32_t mask) {
    Monomial m;
    m.bits_ = mask;
    return m;
  }
  /// Throws std::out_of_range if an index lies outside [1, kMaxVariables].
  static Monomial from_indices(std::span<const int> indices);
  static Monomial from_indices(std::initializer_list<int> indices) {
    return from_indices(std::span<const int>(indices.begin(), indices.size()));
  }
  /// x_first * x_{first+1} * ... * x_last.
  static Monomial interval(int first, int last);

  constexpr std::uint32_t mask() const { return bits_; }
  constexpr int degree() const { return std::popcount(bits_); }
  constexpr bool is_one() const { return bits_ == 0; }
  constexpr bool has(int var) const {
    return var >= 1 && var <= kMaxVariables && ((bits_ >> (var - 1)) & 1u) != 0;
  }
  constexpr bool divides(Monomial other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr Monomial lcm(Monomial other) const { return from_mask(bits_ | other.bits_); }
  constexpr bool fits(int n) const { return (bits_ & ~full_mask(n)) == 0; }

  std::vector<int> indices() const;

  friend constexpr bool operator==(Monomial a, Monomial b) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Lexicographic comparison of the sorted index lists ({1,2} < {1,2,3} < {1,3} < {2}).
bool lex_less(Monomial a, Monomial b);

/// Squarefree monomial ideal: ambient size plus its minimal generators in
/// canonical (lex) order. Structural equality is ideal equality.
class MonomialIdeal {
 public:
  /// The zero ideal of k[x1..xn].
  explicit MonomialIdeal(int n = 0);

  /// Minimal generating set of the ideal generated by `raw`.
  /// Throws std::out_of_range if a monomial does not fit the ambient ring.
  static MonomialIdeal from_generators(int n, std::span<const Monomial> raw);
  static MonomialIdeal from_generators(int n, std::initializer_list<Monomial> raw) {
    return from_generators(n, std::span<const Monomial>(raw.begin(), raw.size()));
  }

  int ambient() const { return n_; }
  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  /// Union of the supports of all generators.
  std::uint32_t support() const;

  bool contains(Monomial m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(int n, std::span<const Monomial> raw);
bool contains(const MonomialIdeal& ideal, Monomial m);

/// I + J. Throws std::invalid_argument on ambient mismatch.
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// I ∩ J, generated by pairwise lcms. Throws std::invalid_argument on ambient mismatch.
MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// I · J for ideals in disjoint sets of variables. Overlapping supports would
/// leave the squarefree world and are rejected with std::invalid_argument.
MonomialIdeal ideal_product_disjoint(const MonomialIdeal& a, const MonomialIdeal& b);

// Text forms: "x1*x2*x3", "{1,2,3}", "n=5; (x1*x2*x3, x3*x4*x5)".
std::string to_string(Monomial m);
std::string to_compact_string(Monomial m);
std::string to_string(const MonomialIdeal& ideal);

/// Accepts either "x1*x2" or "{1,2}"; "1" and "{}" denote the unit monomial.
/// Throws std::invalid_argument on malformed input.
Monomial parse_monomial(std::string_view text);
/// Accepts "n=5; (x1*x2*x3, x3*x4*x5)"; "n=5; (0)" or "n=5; ()" is the zero ideal.
MonomialIdeal parse_ideal(std::string_view text);

}  // namespace pathideal
