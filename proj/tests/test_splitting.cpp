#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "pathideal/path_ideal.hpp"
#include "pathideal/splitting.hpp"
#include "support.hpp"

using namespace pathideal;

namespace {

Monomial mono(std::initializer_list<int> vars) { return Monomial::from_indices(vars); }

MonomialIdeal ideal(int n, std::initializer_list<Monomial> gens) { return MonomialIdeal::from_generators(n, gens); }

const MonomialIdeal kTriangle = ideal(3, {mono({1, 2}), mono({1, 3}), mono({2, 3})});

/// Shifts every generator of `i` up by `offset` variables inside an ambient ring of size n.
MonomialIdeal shifted(const MonomialIdeal& i, int offset, int n) {
  std::vector<Monomial> gens;
  for (Monomial g : i.generators()) gens.push_back(Monomial::from_mask(g.mask() << offset));
  return MonomialIdeal::from_generators(n, gens);
}

}  // namespace

TEST_CASE("linear resolution examples") {
  CHECK(has_linear_resolution(ideal(5, {mono({3, 4, 5})})));
  CHECK(has_linear_resolution(ideal(3, {mono({1, 2}), mono({2, 3})})));
  CHECK_FALSE(has_linear_resolution(ideal(4, {mono({1, 2}), mono({3, 4})})));
  CHECK_FALSE(has_linear_resolution(ideal(4, {mono({1, 2}), mono({2, 3, 4})})));
  CHECK(has_linear_resolution(kTriangle));
  CHECK_THROWS_AS(has_linear_resolution(MonomialIdeal(3)), std::invalid_argument);
}

TEST_CASE("Betti splitting examples") {
  const MonomialIdeal p = make_path_ideal(PathParams::make(3, 1, 2));
  const SplitCase a = is_betti_splitting(p, ideal(5, {mono({1, 2, 3})}), ideal(5, {mono({3, 4, 5})}));
  CHECK(a.verdict);
  CHECK_FALSE(a.witness.has_value());
  CHECK(a.intersection == ideal(5, {mono({1, 2, 3, 4, 5})}));

  const SplitCase b = is_betti_splitting(kTriangle, ideal(3, {mono({1, 2}), mono({1, 3})}), ideal(3, {mono({2, 3})}));
  CHECK(b.verdict);
  CHECK(b.intersection == ideal(3, {mono({1, 2, 3})}));

  const MonomialIdeal line = make_full_path_ideal(2, 4);
  const SplitCase c = is_betti_splitting(line, ideal(4, {mono({1, 2}), mono({3, 4})}), ideal(4, {mono({2, 3})}));
  CHECK_FALSE(c.verdict);
  REQUIRE(c.witness.has_value());
  CHECK(*c.witness == std::pair{1, 4});

  CHECK_THROWS_AS(is_betti_splitting(line, ideal(4, {mono({1, 2})}), ideal(4, {mono({2, 3})})), std::invalid_argument);
  CHECK_THROWS_AS(is_betti_splitting(line, ideal(4, {mono({1, 2}), mono({2, 3})}),
                                     ideal(4, {mono({2, 3}), mono({3, 4})})),
                  std::invalid_argument);
}

TEST_CASE("divisibility split examples") {
  const PathParams params = PathParams::make(3, 1, 3);
  const MonomialIdeal p = make_path_ideal(params);
  const FhtResult a = fht_condition(p, params.n);
  CHECK(a.divisible == ideal(params.n, {p.generators().back()}));
  CHECK(a.applies);
  REQUIRE(a.split.has_value());
  CHECK(a.split->verdict);

  const FhtResult b = fht_condition(kTriangle, 1);
  CHECK(b.divisible == ideal(3, {mono({1, 2}), mono({1, 3})}));
  CHECK(b.applies);
  CHECK(b.split->verdict);

  const FhtResult c = fht_condition(ideal(4, {mono({1, 2, 3}), mono({3, 4})}), 4);
  CHECK(c.divisible == ideal(4, {mono({3, 4})}));
  CHECK(c.applies);

  CHECK_THROWS_AS(fht_condition(kTriangle, 4), std::out_of_range);
  CHECK_THROWS_AS(fht_condition(ideal(4, {mono({1, 2}), mono({2, 3})}), 4), std::invalid_argument);
  CHECK_THROWS_AS(fht_condition(ideal(3, {mono({1, 2}), mono({1, 3})}), 1), std::invalid_argument);
}

TEST_CASE("disjoint identity examples") {
  const DisjointIdentityReport a = verify_disjoint_identities(ideal(4, {mono({1, 2})}), ideal(4, {mono({3, 4})}));
  CHECK(a.pd_sum == 1);
  CHECK(a.reg_sum == 3);
  CHECK(a.reg_product == 4);
  CHECK(a.all_hold());
  const DisjointIdentityReport b = verify_disjoint_identities(ideal(2, {mono({1})}), ideal(2, {mono({2})}));
  CHECK(b.pd_sum == 1);
  CHECK(b.reg_sum == 1);
  CHECK(b.reg_product == 2);
  CHECK(b.all_hold());
  const DisjointIdentityReport c =
      verify_disjoint_identities(make_path_ideal_in(2, 1, 2, 5), ideal(5, {mono({4, 5})}));
  CHECK(c.pd_sum == 2);
  CHECK(c.all_hold());
  CHECK_THROWS_AS(verify_disjoint_identities(ideal(3, {mono({1, 2})}), ideal(3, {mono({2, 3})})),
                  std::invalid_argument);
}

TEST_CASE("disjoint identities on random pairs") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int na = 2 + trial % 5;
    const int nb = 2 + (trial / 5) % 5;
    const MonomialIdeal a = testing::random_ideal(rng, na, 1 + trial % 4, 3);
    const MonomialIdeal b = testing::random_ideal(rng, nb, 1 + (trial + 1) % 4, 3);
    const DisjointIdentityReport r = verify_disjoint_identities(shifted(a, 0, na + nb), shifted(b, na, na + nb));
    INFO(to_string(a), " | ", to_string(b));
    CHECK(r.all_hold());
  }
}

TEST_CASE("linear divisible part implies a splitting") {
  std::mt19937 rng(42);
  int applied = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const MonomialIdeal i = testing::random_ideal_min_degree(rng, 7, 2 + trial % 6, 2, 4);
    const int var = 1 + trial % 7;
    const auto gens = i.generators();
    const auto divisible = std::count_if(gens.begin(), gens.end(), [&](Monomial g) { return g.has(var); });
    if (divisible == 0 || divisible == static_cast<long>(gens.size())) continue;
    const FhtResult r = fht_condition(i, var);
    if (!r.applies) continue;
    ++applied;
    REQUIRE(r.split.has_value());
    CHECK(r.split->verdict);
    const MaxFormulaCheck m = check_max_formulas(*r.split);
    CHECK(m.pd_holds);
    CHECK(m.reg_holds);
  }
  CHECK(applied > 20);
}

TEST_CASE("max formulas hold whenever a split is a Betti splitting") {
  std::mt19937 rng(43);
  int splits = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const MonomialIdeal i = testing::random_ideal(rng, 7, 2 + trial % 6, 4);
    const auto gens = i.generators();
    if (gens.size() < 2) continue;
    std::vector<Monomial> first;
    std::vector<Monomial> second;
    for (std::size_t g = 0; g < gens.size(); ++g) (((trial >> g) & 1) ? first : second).push_back(gens[g]);
    if (first.empty() || second.empty()) continue;
    const SplitCase s = is_betti_splitting(i, MonomialIdeal::from_generators(7, first),
                                           MonomialIdeal::from_generators(7, second));
    if (!s.verdict) {
      CHECK(s.witness.has_value());
      continue;
    }
    ++splits;
    const MaxFormulaCheck m = check_max_formulas(s);
    CHECK(m.pd_holds);
    CHECK(m.reg_holds);
  }
  CHECK(splits > 20);
}

TEST_CASE("split json") {
  const SplitCase s = is_betti_splitting(kTriangle, ideal(3, {mono({1, 2}), mono({1, 3})}), ideal(3, {mono({2, 3})}));
  const nlohmann::json j = to_json(s);
  CHECK(j["verdict"] == true);
  CHECK(j["witness"].is_null());
  CHECK(j["J_cap_K"] == "n=3; (x1*x2*x3)");
  CHECK(j.contains("tables"));
}
