#include "pathideal/betti.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "pathideal/errors.hpp"

namespace pathideal {

void BettiTable::add(int i, int j, std::uint64_t count) {
  if (i < 0 || j < 0) throw std::out_of_range("Betti index must be nonnegative");
  if (count == 0) return;
  entries_[{i, j}] += count;
}

std::uint64_t BettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::merge(const BettiTable& other) {
  for (const auto& [key, value] : other.entries_) entries_[key] += value;
}

std::string BettiTable::to_golden() const {
  std::string out;
  for (const auto& [key, value] : entries_) {
    out += std::to_string(key.first) + ' ' + std::to_string(key.second) + ' ' + std::to_string(value) + '\n';
  }
  return out;
}

BettiTable BettiTable::from_golden(std::string_view text) {
  BettiTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    int i = 0;
    int j = 0;
    std::uint64_t beta = 0;
    std::string extra;
    if (!(fields >> i >> j >> beta) || (fields >> extra)) {
      throw std::invalid_argument("malformed golden line '" + line + "'");
    }
    table.add(i, j, beta);
  }
  return table;
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [key, value] : entries_) rows.push_back({key.first, key.second, value});
  return rows;
}

std::string BettiTable::digest() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : to_golden()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string_view method_label(Method m) {
  switch (m) {
    case Method::Hochster: return "hochster";
    case Method::Taylor: return "taylor";
    case Method::Auto: return "auto";
    case Method::Both: return "both";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  if (text == "hochster") return Method::Hochster;
  if (text == "taylor") return Method::Taylor;
  if (text == "auto") return Method::Auto;
  if (text == "both") return Method::Both;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal, int cap_n) {
  if (ideal.is_zero()) throw std::invalid_argument("Stanley-Reisner complex of the zero ideal");
  if (ideal.is_unit()) throw std::invalid_argument("Stanley-Reisner complex of the unit ideal");
  const int n = ideal.ambient();
  if (n > cap_n) throw CapExceeded("Stanley-Reisner complex needs n <= " + std::to_string(cap_n));
  std::vector<std::uint32_t> facets;
  const std::uint32_t all = full_mask(n);
  for (std::uint64_t w = 0; w <= all; ++w) {
    const auto face = static_cast<std::uint32_t>(w);
    if (ideal.contains(Monomial::from_mask(face))) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if ((face & bit) == 0 && !ideal.contains(Monomial::from_mask(face | bit))) maximal = false;
    }
    if (maximal) facets.push_back(face);
  }
  return SimplicialComplex(n, facets);
}

Method resolve_method(const MonomialIdeal& ideal, Method requested) {
  if (requested == Method::Hochster || requested == Method::Taylor) return requested;
  return ideal.ambient() <= static_cast<int>(ideal.size()) ? Method::Hochster : Method::Taylor;
}

OracleMismatch::OracleMismatch(BettiTable hochster, BettiTable taylor)
    : std::runtime_error("Hochster and Taylor-Tor tables disagree"),
      hochster_(std::move(hochster)),
      taylor_(std::move(taylor)) {}

BettiTable compute_betti(const MonomialIdeal& ideal, Method method, const BettiOptions& options) {
  if (method == Method::Both) {
    BettiTable h = betti_hochster(ideal, options);
    BettiTable t = betti_taylor_tor(ideal, options);
    if (!(h == t)) throw OracleMismatch(std::move(h), std::move(t));
    return h;
  }
  return resolve_method(ideal, method) == Method::Hochster ? betti_hochster(ideal, options)
                                                           : betti_taylor_tor(ideal, options);
}

Invariants invariants_of(const BettiTable& table) {
  if (table.empty()) throw std::invalid_argument("invariants of an empty Betti table");
  Invariants inv{0, 0};
  bool first = true;
  for (const auto& [key, value] : table.entries()) {
    const auto [i, j] = key;
    if (first || i > inv.pd) inv.pd = i;
    if (first || j - i > inv.reg) inv.reg = j - i;
    first = false;
  }
  return inv;
}

Depth depth_of(const MonomialIdeal& ideal, const BettiTable& table) {
  const int pd = invariants_of(table).pd;
  Depth d;
  d.depth_ideal = ideal.ambient() - pd;
  d.depth_quotient = d.depth_ideal - 1;
  return d;
}

nlohmann::json betti_report_json(const MonomialIdeal& ideal, const Field& field, const BettiTable& table) {
  const Invariants inv = invariants_of(table);
  const Depth depth = depth_of(ideal, table);
  return {{"ideal", to_string(ideal)},       {"field", field.name()},
          {"betti", table.to_json()},       {"pd", inv.pd},
          {"reg", inv.reg},                 {"depth_I", depth.depth_ideal},
          {"depth_RI", depth.depth_quotient}};
}

}  // namespace pathideal
