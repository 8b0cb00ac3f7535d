#pragma once

#include <optional>
#include <utility>

#include <nlohmann/json.hpp>

#include "pathideal/betti.hpp"
#include "pathideal/ideal.hpp"

namespace pathideal {

/// A candidate splitting I = J + K together with the four tables it is judged on.
struct SplitCase {
  MonomialIdeal whole;         // I
  MonomialIdeal first;         // J
  MonomialIdeal second;        // K
  MonomialIdeal intersection;  // J ∩ K
  BettiTable whole_table;
  BettiTable first_table;
  BettiTable second_table;
  BettiTable intersection_table;
  bool verdict = false;
  /// First (i, j) in lexicographic order where
  /// β_{i,j}(I) != β_{i,j}(J) + β_{i,j}(K) + β_{i-1,j}(J∩K).
  std::optional<std::pair<int, int>> witness;
};

struct SplitComputation {
  Method method = Method::Auto;
  BettiOptions betti;
};

/// True iff every generator has the same degree d and reg(J) = d.
/// Throws std::invalid_argument for the zero or unit ideal.
bool has_linear_resolution(const MonomialIdeal& ideal, const SplitComputation& how = {});

/// Throws std::invalid_argument unless gens(J) and gens(K) partition gens(I).
SplitCase is_betti_splitting(const MonomialIdeal& whole, const MonomialIdeal& first, const MonomialIdeal& second,
                             const SplitComputation& how = {});

struct FhtResult {
  MonomialIdeal divisible;  // J: generators divisible by the chosen variable
  MonomialIdeal rest;       // K
  bool applies = false;     // J has a linear resolution
  /// Present when `applies`; its verdict must then be true.
  std::optional<SplitCase> split;
};

/// Splits I by divisibility by x_var and tests whether the divisible part has a
/// linear resolution. Throws std::invalid_argument if all or none of the
/// generators are divisible.
FhtResult fht_condition(const MonomialIdeal& ideal, int var, const SplitComputation& how = {});

struct MaxFormulaCheck {
  bool pd_holds = false;   // pd(I) = max{pd(J), pd(K), pd(J∩K)+1}
  bool reg_holds = false;  // reg(I) = max{reg(J), reg(K), reg(J∩K)-1}
};
MaxFormulaCheck check_max_formulas(const SplitCase& split);

struct DisjointIdentityReport {
  int pd_first = 0;
  int pd_second = 0;
  int pd_sum = 0;
  int reg_first = 0;
  int reg_second = 0;
  int reg_sum = 0;
  int reg_product = 0;
  bool pd_sum_holds = false;   // pd(I+J) = pd(I)+pd(J)+1
  bool reg_sum_holds = false;  // reg(I+J) = reg(I)+reg(J)-1
  bool reg_product_holds = false;  // reg(IJ) = reg(I)+reg(J)
  bool all_hold() const { return pd_sum_holds && reg_sum_holds && reg_product_holds; }
};

/// For ideals in disjoint sets of variables of one ring. Throws std::invalid_argument
/// on overlapping supports.
DisjointIdentityReport verify_disjoint_identities(const MonomialIdeal& first, const MonomialIdeal& second,
                                                  const SplitComputation& how = {});

nlohmann::json to_json(const SplitCase& split);

}  // namespace pathideal
