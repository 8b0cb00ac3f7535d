#include "pathideal/splitting.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace pathideal {

namespace {

BettiTable table_of(const MonomialIdeal& ideal, const SplitComputation& how) {
  return compute_betti(ideal, how.method, how.betti);
}

}  // namespace

bool has_linear_resolution(const MonomialIdeal& ideal, const SplitComputation& how) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw std::invalid_argument("linear resolution test needs a nonzero proper ideal");
  }
  const int degree = ideal.generators().front().degree();
  for (Monomial g : ideal.generators()) {
    if (g.degree() != degree) return false;
  }
  return invariants_of(table_of(ideal, how)).reg == degree;
}

SplitCase is_betti_splitting(const MonomialIdeal& whole, const MonomialIdeal& first, const MonomialIdeal& second,
                             const SplitComputation& how) {
  if (whole.ambient() != first.ambient() || whole.ambient() != second.ambient()) {
    throw std::invalid_argument("split parts live in different rings");
  }
  if (first.is_zero() || second.is_zero()) throw std::invalid_argument("split parts must be nonzero");
  std::vector<std::uint32_t> parts;
  for (Monomial g : first.generators()) parts.push_back(g.mask());
  for (Monomial g : second.generators()) parts.push_back(g.mask());
  std::vector<std::uint32_t> gens;
  for (Monomial g : whole.generators()) gens.push_back(g.mask());
  std::sort(parts.begin(), parts.end());
  std::sort(gens.begin(), gens.end());
  if (parts != gens) {
    throw std::invalid_argument("generators of J and K do not partition the generators of I");
  }

  SplitCase sc;
  sc.whole = whole;
  sc.first = first;
  sc.second = second;
  sc.intersection = ideal_intersect(first, second);

  // The four tables are independent; the kernels already parallelise inside,
  // so they are computed one after another here.
  sc.whole_table = table_of(whole, how);
  sc.first_table = table_of(first, how);
  sc.second_table = table_of(second, how);
  sc.intersection_table = table_of(sc.intersection, how);

  std::set<BettiTable::Key> keys;
  for (const auto& [key, v] : sc.whole_table.entries()) keys.insert(key);
  for (const auto& [key, v] : sc.first_table.entries()) keys.insert(key);
  for (const auto& [key, v] : sc.second_table.entries()) keys.insert(key);
  for (const auto& [key, v] : sc.intersection_table.entries()) keys.insert({key.first + 1, key.second});

  sc.verdict = true;
  for (const auto& [i, j] : keys) {
    const std::uint64_t shifted = i == 0 ? 0 : sc.intersection_table.at(i - 1, j);
    const std::uint64_t rhs = sc.first_table.at(i, j) + sc.second_table.at(i, j) + shifted;
    if (sc.whole_table.at(i, j) != rhs) {
      sc.verdict = false;
      sc.witness = std::make_pair(i, j);
      break;
    }
  }
  return sc;
}

FhtResult fht_condition(const MonomialIdeal& ideal, int var, const SplitComputation& how) {
  if (var < 1 || var > ideal.ambient()) throw std::out_of_range("variable index outside the ring");
  std::vector<Monomial> divisible;
  std::vector<Monomial> rest;
  for (Monomial g : ideal.generators()) (g.has(var) ? divisible : rest).push_back(g);
  if (divisible.empty() || rest.empty()) {
    throw std::invalid_argument("x" + std::to_string(var) + " divides all or none of the generators");
  }
  FhtResult out;
  out.divisible = MonomialIdeal::from_generators(ideal.ambient(), divisible);
  out.rest = MonomialIdeal::from_generators(ideal.ambient(), rest);
  out.applies = has_linear_resolution(out.divisible, how);
  if (out.applies) out.split = is_betti_splitting(ideal, out.divisible, out.rest, how);
  return out;
}

MaxFormulaCheck check_max_formulas(const SplitCase& split) {
  const Invariants whole = invariants_of(split.whole_table);
  const Invariants first = invariants_of(split.first_table);
  const Invariants second = invariants_of(split.second_table);
  const Invariants meet = invariants_of(split.intersection_table);
  MaxFormulaCheck out;
  out.pd_holds = whole.pd == std::max({first.pd, second.pd, meet.pd + 1});
  out.reg_holds = whole.reg == std::max({first.reg, second.reg, meet.reg - 1});
  return out;
}

DisjointIdentityReport verify_disjoint_identities(const MonomialIdeal& first, const MonomialIdeal& second,
                                                  const SplitComputation& how) {
  if (first.ambient() != second.ambient()) throw std::invalid_argument("ideals live in different rings");
  if ((first.support() & second.support()) != 0) {
    throw std::invalid_argument("supports overlap; identities need disjoint variables");
  }
  const Invariants a = invariants_of(table_of(first, how));
  const Invariants b = invariants_of(table_of(second, how));
  const Invariants sum = invariants_of(table_of(ideal_sum(first, second), how));
  const Invariants product = invariants_of(table_of(ideal_product_disjoint(first, second), how));

  DisjointIdentityReport r;
  r.pd_first = a.pd;
  r.pd_second = b.pd;
  r.pd_sum = sum.pd;
  r.reg_first = a.reg;
  r.reg_second = b.reg;
  r.reg_sum = sum.reg;
  r.reg_product = product.reg;
  r.pd_sum_holds = sum.pd == a.pd + b.pd + 1;
  r.reg_sum_holds = sum.reg == a.reg + b.reg - 1;
  r.reg_product_holds = product.reg == a.reg + b.reg;
  return r;
}

nlohmann::json to_json(const SplitCase& split) {
  nlohmann::json j = {
      {"I", to_string(split.whole)},
      {"J", to_string(split.first)},
      {"K", to_string(split.second)},
      {"J_cap_K", to_string(split.intersection)},
      {"tables",
       {{"I", split.whole_table.to_json()},
        {"J", split.first_table.to_json()},
        {"K", split.second_table.to_json()},
        {"J_cap_K", split.intersection_table.to_json()}}},
      {"verdict", split.verdict},
  };
  j["witness"] = split.witness ? nlohmann::json::array({split.witness->first, split.witness->second})
                               : nlohmann::json(nullptr);
  return j;
}

}  // namespace pathideal
