#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pathideal {

/// Coefficient field for homology: GF(2), GF(p) with p < 2^16, or the rationals.
class Field {
 public:
  enum class Kind { GF2, GFp, Rational };

  static Field gf2() { return Field(Kind::GF2, 2); }
  /// Throws std::invalid_argument unless p is a prime below 2^16.
  static Field gf(std::uint32_t p);
  static Field rationals() { return Field(Kind::Rational, 0); }
  /// "gf2", "gf<p>" or "rat".
  static Field parse(std::string_view text);

  Kind kind() const { return kind_; }
  /// Characteristic (0 for the rationals).
  std::uint32_t characteristic() const { return p_; }
  /// "GF(2)", "GF(p)" or "QQ".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

}  // namespace pathideal
