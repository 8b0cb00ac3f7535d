#include "pathideal/field.hpp"

#include <charconv>
#include <stdexcept>

namespace pathideal {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::gf(std::uint32_t p) {
  if (p >= (1u << 16) || !is_prime(p)) {
    throw std::invalid_argument("GF(p) needs a prime p < 65536 (got " + std::to_string(p) + ")");
  }
  return p == 2 ? gf2() : Field(Kind::GFp, p);
}

Field Field::parse(std::string_view text) {
  if (text == "rat" || text == "QQ" || text == "Q") return rationals();
  if (text.size() > 2 && (text.substr(0, 2) == "gf" || text.substr(0, 2) == "GF")) {
    std::uint32_t p = 0;
    const std::string_view digits = text.substr(2);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) return gf(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected gf2, gf<p> or rat)");
}

std::string Field::name() const {
  switch (kind_) {
    case Kind::GF2: return "GF(2)";
    case Kind::GFp: return "GF(" + std::to_string(p_) + ")";
    case Kind::Rational: return "QQ";
  }
  return "?";
}

}  // namespace pathideal
