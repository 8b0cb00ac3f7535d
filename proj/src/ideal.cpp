#include "pathideal/ideal.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace pathideal {

Monomial Monomial::from_indices(std::span<const int> indices) {
  std::uint32_t mask = 0;
  for (int v : indices) {
    if (v < 1 || v > kMaxVariables) {
      throw std::out_of_range("variable index " + std::to_string(v) + " outside [1, " +
                              std::to_string(kMaxVariables) + "]");
    }
    mask |= std::uint32_t{1} << (v - 1);
  }
  return from_mask(mask);
}

Monomial Monomial::interval(int first, int last) {
  if (first < 1 || last > kMaxVariables || first > last + 1) {
    throw std::out_of_range("bad variable interval [" + std::to_string(first) + ", " +
                            std::to_string(last) + "]");
  }
  std::uint32_t mask = 0;
  for (int v = first; v <= last; ++v) mask |= std::uint32_t{1} << (v - 1);
  return from_mask(mask);
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

bool lex_less(Monomial a, Monomial b) {
  std::uint32_t x = a.mask();
  std::uint32_t y = b.mask();
  while (x != 0 && y != 0) {
    const int lx = std::countr_zero(x);
    const int ly = std::countr_zero(y);
    if (lx != ly) return lx < ly;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

MonomialIdeal::MonomialIdeal(int n) : n_(n) {
  if (n < 0 || n > kMaxVariables) {
    throw std::out_of_range("ambient size " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxVariables) + "]");
  }
}

MonomialIdeal MonomialIdeal::from_generators(int n, std::span<const Monomial> raw) {
  MonomialIdeal ideal(n);
  std::vector<Monomial> sorted(raw.begin(), raw.end());
  for (Monomial m : sorted) {
    if (!m.fits(n)) {
      throw std::out_of_range("monomial " + to_string(m) + " does not fit n=" + std::to_string(n));
    }
  }
  // Increasing degree first: a monomial can only be divided by one of no larger degree.
  std::sort(sorted.begin(), sorted.end(), [](Monomial a, Monomial b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.mask() < b.mask();
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Monomial m : sorted) {
    const bool redundant = std::any_of(ideal.gens_.begin(), ideal.gens_.end(),
                                       [m](Monomial g) { return g.divides(m); });
    if (!redundant) ideal.gens_.push_back(m);
  }
  std::sort(ideal.gens_.begin(), ideal.gens_.end(), lex_less);
  return ideal;
}

std::uint32_t MonomialIdeal::support() const {
  std::uint32_t s = 0;
  for (Monomial g : gens_) s |= g.mask();
  return s;
}

bool MonomialIdeal::contains(Monomial m) const {
  if (!m.fits(n_)) throw std::out_of_range("monomial " + to_string(m) + " does not fit ambient ring");
  return std::any_of(gens_.begin(), gens_.end(), [m](Monomial g) { return g.divides(m); });
}

MonomialIdeal minimalize(int n, std::span<const Monomial> raw) {
  return MonomialIdeal::from_generators(n, raw);
}

bool contains(const MonomialIdeal& ideal, Monomial m) { return ideal.contains(m); }

namespace {

void require_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient()) {
    throw std::invalid_argument("ambient mismatch: n=" + std::to_string(a.ambient()) +
                                " vs n=" + std::to_string(b.ambient()));
  }
}

}  // namespace

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> all(a.generators().begin(), a.generators().end());
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.ambient(), all);
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  std::vector<Monomial> lcms;
  lcms.reserve(a.size() * b.size());
  for (Monomial g : a.generators()) {
    for (Monomial h : b.generators()) lcms.push_back(g.lcm(h));
  }
  return minimalize(a.ambient(), lcms);
}

MonomialIdeal ideal_product_disjoint(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a, b);
  if ((a.support() & b.support()) != 0) {
    throw std::invalid_argument("overlapping support: product would not be squarefree");
  }
  std::vector<Monomial> products;
  products.reserve(a.size() * b.size());
  for (Monomial g : a.generators()) {
    for (Monomial h : b.generators()) products.push_back(g.lcm(h));
  }
  return minimalize(a.ambient(), products);
}

std::string to_string(Monomial m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int v : m.indices()) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(v);
  }
  return out;
}

std::string to_compact_string(Monomial m) {
  std::string out = "{";
  bool first = true;
  for (int v : m.indices()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string to_string(const MonomialIdeal& ideal) {
  std::string out = "n=" + std::to_string(ideal.ambient()) + "; (";
  if (ideal.is_zero()) return out + "0)";
  bool first = true;
  for (Monomial g : ideal.generators()) {
    if (!first) out += ", ";
    out += to_string(g);
    first = false;
  }
  return out + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "' in " +
                                std::string(context));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

Monomial parse_monomial(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty monomial");
  if (s == "1") return Monomial{};
  std::vector<int> idx;
  if (s.front() == '{') {
    if (s.back() != '}') throw std::invalid_argument("unterminated monomial '" + std::string(s) + "'");
    const std::string_view body = trim(s.substr(1, s.size() - 2));
    if (body.empty()) return Monomial{};
    for (std::string_view part : split(body, ',')) idx.push_back(parse_int(part, s));
  } else {
    for (std::string_view part : split(s, '*')) {
      part = trim(part);
      if (part.size() < 2 || part.front() != 'x') {
        throw std::invalid_argument("malformed variable '" + std::string(part) + "'");
      }
      idx.push_back(parse_int(part.substr(1), s));
    }
  }
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) {
        throw std::invalid_argument("repeated variable in '" + std::string(s) +
                                    "': monomials are squarefree");
      }
    }
  }
  return Monomial::from_indices(idx);
}

MonomialIdeal parse_ideal(std::string_view text) {
  const std::string_view s = trim(text);
  const std::size_t semi = s.find(';');
  if (semi == std::string_view::npos) throw std::invalid_argument("ideal text needs 'n=<size>; (...)'");
  const std::string_view head = trim(s.substr(0, semi));
  if (head.size() < 3 || head.substr(0, 2) != "n=") {
    throw std::invalid_argument("ideal text must start with n=<size>");
  }
  const int n = parse_int(head.substr(2), s);
  const std::string_view body = trim(s.substr(semi + 1));
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw std::invalid_argument("generator list must be parenthesised");
  }
  const std::string_view inner = trim(body.substr(1, body.size() - 2));
  std::vector<Monomial> gens;
  if (!inner.empty() && inner != "0") {
    // Commas also separate indices inside {..}; split only at depth zero.
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
      if (i < inner.size() && inner[i] == '{') ++depth;
      if (i < inner.size() && inner[i] == '}') --depth;
      if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
        gens.push_back(parse_monomial(inner.substr(start, i - start)));
        start = i + 1;
      }
    }
  }
  return MonomialIdeal::from_generators(n, gens);
}

}  // namespace pathideal
