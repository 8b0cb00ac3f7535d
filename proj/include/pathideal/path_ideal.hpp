#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "pathideal/ideal.hpp"

namespace pathideal {

/// Shape of a generalized path ideal: k generators of degree m, consecutive
/// supports overlapping in l variables, on n = k(m-l)+l variables.
struct PathParams {
  int m = 2;
  int l = 1;
  int k = 1;
  int n = 2;

  /// Validates m >= 2, 1 <= l <= m-1, k >= 1 and derives n.
  /// Throws std::invalid_argument otherwise.
  static PathParams make(int m, int l, int k);

  int step() const { return m - l; }

  friend bool operator==(const PathParams&, const PathParams&) = default;
};

/// Which closed form governs (m, l).
enum class Branch {
  SmallOverlap,      ///< l < ceil(m/2)
  DivisibleOverlap,  ///< l >= ceil(m/2) and (m-l) | m
  ResidueOverlap,    ///< l >= ceil(m/2) and m mod (m-l) = s >= 1
};

std::string_view branch_label(Branch b);

struct Regime {
  Branch branch = Branch::SmallOverlap;
  int s = 0;       ///< m mod (m-l)
  int period = 0;  ///< 2m-l-s outside the small-overlap branch, 0 inside it
  int p = 0;       ///< n = p * period + d; both 0 in the small-overlap branch
  int d = 0;
};

/// Requires m >= 2 and 1 <= l <= m-1 (std::invalid_argument otherwise).
Regime classify(int m, int l, int k = 1);
inline Regime classify(const PathParams& params) { return classify(params.m, params.l, params.k); }

struct FormulaResult {
  int pd = 0;
  std::optional<int> reg;  ///< empty where no closed form is known
  int depth_ideal = 0;     ///< depth of the module I
  int depth_quotient = 0;  ///< depth of R/I = depth_ideal - 1
};

/// I_{m,l,k} = (u_1..u_k), u_i = x_{(i-1)(m-l)+1} ... x_{(i-1)(m-l)+m}.
MonomialIdeal make_path_ideal(const PathParams& params);
/// The first `count` generators of I_{m,l,*}, placed in an ambient ring of size `ambient`.
MonomialIdeal make_path_ideal_in(int m, int l, int count, int ambient);
/// J_m(L_n): all paths of length m in the line graph on n vertices.
MonomialIdeal make_full_path_ideal(int m, int n);

int formula_pd(const PathParams& params);
std::optional<int> formula_reg(const PathParams& params);
/// Depth of the module I, evaluated through the ceil/floor closed forms.
int formula_depth(const PathParams& params);
FormulaResult formula_all(const PathParams& params);
/// Closed forms for J_m(L_n) with n = p(m+1)+d, 0 <= d <= m.
FormulaResult formula_jm(int m, int n);

/// Closed form of I_{m,l,k-1} ∩ (u_k) for k >= 2, as a product u_k · L with L in
/// variables disjoint from u_k.
MonomialIdeal last_split_intersection(const PathParams& params);

// "m=3,l=1,k=2" and {"m":3,"l":1,"k":2,"n":5}.
std::string to_string(const PathParams& params);
PathParams parse_params(std::string_view text);
nlohmann::json to_json(const PathParams& params);
PathParams params_from_json(const nlohmann::json& j);

}  // namespace pathideal
