#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "pathideal/field.hpp"
#include "pathideal/ideal.hpp"
#include "pathideal/simplicial.hpp"

namespace pathideal {

/// Graded Betti numbers β_{i,j} of an ideal I (not R/I). Only nonzero entries are stored.
class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (homological index i, internal degree j)

  void add(int i, int j, std::uint64_t count);
  std::uint64_t at(int i, int j) const;
  bool empty() const { return entries_.empty(); }
  const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  void merge(const BettiTable& other);

  /// "i j beta" lines, lexicographic in (i, j).
  std::string to_golden() const;
  static BettiTable from_golden(std::string_view text);
  /// [[i, j, beta], ...]
  nlohmann::json to_json() const;
  /// FNV-1a of the golden text, as 16 hex digits.
  std::string digest() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<Key, std::uint64_t> entries_;
};

enum class ExecPolicy { Serial, Parallel };

enum class Method { Hochster, Taylor, Auto, Both };
std::string_view method_label(Method m);
/// "hochster", "taylor", "auto" or "both".
Method parse_method(std::string_view text);

struct BettiOptions {
  Field field = Field::gf2();
  ExecPolicy policy = ExecPolicy::Parallel;
  int cap_n = 16;  ///< Hochster sums over 2^n vertex subsets
  int cap_k = 18;  ///< Taylor–Tor walks 2^k generator subsets
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Complex whose faces are the squarefree monomials outside I.
/// Throws std::invalid_argument for the zero or unit ideal, CapExceeded above cap_n.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal, int cap_n = 16);

/// β_{i,j}(I) = Σ_{|W|=j} dim H̃_{j-i-2}(Δ[W]).
BettiTable betti_hochster(const MonomialIdeal& ideal, const BettiOptions& options = {});
/// Homology of the Taylor complex tensored with the residue field, one multidegree at a time.
BettiTable betti_taylor_tor(const MonomialIdeal& ideal, const BettiOptions& options = {});

/// Hochster when 2^n <= 2^k, Taylor–Tor otherwise. Never returns Auto or Both.
Method resolve_method(const MonomialIdeal& ideal, Method requested);

/// Raised by compute_betti(Method::Both) when the two methods disagree.
class OracleMismatch : public std::runtime_error {
 public:
  OracleMismatch(BettiTable hochster, BettiTable taylor);
  const BettiTable& hochster() const { return hochster_; }
  const BettiTable& taylor() const { return taylor_; }

 private:
  BettiTable hochster_;
  BettiTable taylor_;
};

BettiTable compute_betti(const MonomialIdeal& ideal, Method method, const BettiOptions& options = {});

struct Invariants {
  int pd = 0;
  int reg = 0;
};
/// pd = max i, reg = max j - i over stored entries. Throws std::invalid_argument on an empty table.
Invariants invariants_of(const BettiTable& table);

struct Depth {
  int depth_ideal = 0;     ///< n - pd(I)
  int depth_quotient = 0;  ///< depth_ideal - 1
};
Depth depth_of(const MonomialIdeal& ideal, const BettiTable& table);

/// The part of the tensored Taylor complex in squarefree multidegree `multidegree`
/// (lowest degree 1 = single generators). Exposed for complex sanity checks.
ChainComplex taylor_multidegree_complex(const MonomialIdeal& ideal, std::uint32_t multidegree);

/// {"ideal", "field", "betti", "pd", "reg", "depth_I", "depth_RI"}.
nlohmann::json betti_report_json(const MonomialIdeal& ideal, const Field& field, const BettiTable& table);

}  // namespace pathideal
