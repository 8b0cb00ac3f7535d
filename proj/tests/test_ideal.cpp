#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "pathideal/ideal.hpp"
#include "pathideal/path_ideal.hpp"
#include "support.hpp"

using namespace pathideal;

namespace {

Monomial mono(std::initializer_list<int> vars) { return Monomial::from_indices(vars); }

MonomialIdeal ideal(int n, std::initializer_list<Monomial> gens) { return MonomialIdeal::from_generators(n, gens); }

}  // namespace

TEST_CASE("monomial basics") {
  const Monomial m = mono({3, 1, 2});
  CHECK(m.degree() == 3);
  CHECK(m.indices() == std::vector<int>{1, 2, 3});
  CHECK(mono({1, 2}).divides(m));
  CHECK_FALSE(m.divides(mono({1, 2})));
  CHECK(m.lcm(mono({5})) == mono({1, 2, 3, 5}));
  CHECK(Monomial::interval(3, 5) == mono({3, 4, 5}));
  CHECK(m.fits(3));
  CHECK_FALSE(m.fits(2));
  CHECK_THROWS_AS(mono({0}), std::out_of_range);
  CHECK_THROWS_AS(mono({33}), std::out_of_range);
}

TEST_CASE("lex order on index lists") {
  CHECK(lex_less(mono({1, 2}), mono({1, 2, 3})));
  CHECK(lex_less(mono({1, 2, 3}), mono({1, 3})));
  CHECK(lex_less(mono({1, 3}), mono({2})));
  CHECK_FALSE(lex_less(mono({2}), mono({2})));
}

TEST_CASE("minimalize examples") {
  CHECK(ideal(3, {mono({1, 2}), mono({1, 2, 3})}) == ideal(3, {mono({1, 2})}));
  CHECK(ideal(3, {mono({1, 2, 3})}).size() == 1);
  const MonomialIdeal i = ideal(3, {mono({1, 2}), mono({2, 3}), mono({1, 2, 3})});
  REQUIRE(i.size() == 2);
  CHECK(i.generators()[0] == mono({1, 2}));
  CHECK(i.generators()[1] == mono({2, 3}));
  CHECK_THROWS_AS(ideal(2, {mono({3})}), std::out_of_range);
}

TEST_CASE("membership examples") {
  CHECK(contains(ideal(3, {mono({1, 2})}), mono({1, 2, 3})));
  CHECK_FALSE(contains(ideal(3, {mono({1, 2})}), mono({1, 3})));
  CHECK_FALSE(contains(ideal(5, {mono({1, 2, 3}), mono({3, 4, 5})}), mono({3, 4})));
}

TEST_CASE("sum examples") {
  CHECK(ideal_sum(ideal(3, {mono({1, 2})}), ideal(3, {mono({2, 3})})) == ideal(3, {mono({1, 2}), mono({2, 3})}));
  CHECK(ideal_sum(ideal(3, {mono({1, 2})}), ideal(3, {mono({1, 2, 3})})) == ideal(3, {mono({1, 2})}));
  CHECK(ideal_sum(ideal(5, {mono({1, 2, 3})}), ideal(5, {mono({3, 4, 5})})) ==
        make_path_ideal(PathParams::make(3, 1, 2)));
  CHECK_THROWS_AS(ideal_sum(ideal(3, {mono({1})}), ideal(4, {mono({1})})), std::invalid_argument);
}

TEST_CASE("intersection examples") {
  CHECK(ideal_intersect(ideal(3, {mono({1, 2})}), ideal(3, {mono({2, 3})})) == ideal(3, {mono({1, 2, 3})}));
  CHECK(ideal_intersect(ideal(5, {mono({1, 2, 3})}), ideal(5, {mono({3, 4, 5})})) == ideal(5, {mono({1, 2, 3, 4, 5})}));
  const MonomialIdeal got = ideal_intersect(ideal(4, {mono({1, 2}), mono({3, 4})}), ideal(4, {mono({2, 3})}));
  CHECK(got == ideal(4, {mono({1, 2, 3}), mono({2, 3, 4})}));

  // Brute force: the minimal monomials lying in both ideals.
  std::vector<std::uint32_t> both;
  for (std::uint32_t m = 0; m < 16; ++m) {
    if (testing::divisible_by_some({0b0011, 0b1100}, m) && testing::divisible_by_some({0b0110}, m)) both.push_back(m);
  }
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t m : both) {
    bool is_min = std::none_of(both.begin(), both.end(), [&](std::uint32_t o) { return o != m && (o & ~m) == 0; });
    if (is_min) minimal.push_back(m);
  }
  std::vector<Monomial> expected;
  for (std::uint32_t m : minimal) expected.push_back(Monomial::from_mask(m));
  CHECK(got == MonomialIdeal::from_generators(4, expected));
}

TEST_CASE("disjoint product examples") {
  CHECK(ideal_product_disjoint(ideal(5, {mono({3, 4, 5})}), ideal(5, {mono({1, 2})})) ==
        ideal(5, {mono({1, 2, 3, 4, 5})}));
  CHECK(ideal_product_disjoint(ideal(3, {mono({1})}), ideal(3, {mono({2}), mono({3})})) ==
        ideal(3, {mono({1, 2}), mono({1, 3})}));
  CHECK_THROWS_AS(ideal_product_disjoint(ideal(3, {mono({1, 2})}), ideal(3, {mono({2, 3})})), std::invalid_argument);
}

TEST_CASE("text forms round trip") {
  const MonomialIdeal i = make_path_ideal(PathParams::make(3, 1, 2));
  CHECK(to_string(i) == "n=5; (x1*x2*x3, x3*x4*x5)");
  CHECK(parse_ideal(to_string(i)) == i);
  CHECK(to_string(mono({1, 2, 3})) == "x1*x2*x3");
  CHECK(to_compact_string(mono({1, 2, 3})) == "{1,2,3}");
  CHECK(parse_monomial("{1,2,3}") == mono({1, 2, 3}));
  CHECK(parse_monomial("x3*x1") == mono({1, 3}));
  CHECK(parse_monomial("1").is_one());
  CHECK(parse_ideal("n=4; (0)").is_zero());
  CHECK(to_string(MonomialIdeal(4)) == "n=4; (0)");
  CHECK_THROWS_AS(parse_ideal("n=3; (x4)"), std::out_of_range);
  CHECK_THROWS_AS(parse_monomial("x1**x2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ideal("(x1)"), std::invalid_argument);
}

TEST_CASE("minimalize is idempotent and order insensitive") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> any(0, (1u << 8) - 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Monomial> raw;
    for (int g = 0; g < 1 + trial % 9; ++g) raw.push_back(Monomial::from_mask(any(rng)));
    const MonomialIdeal once = minimalize(8, raw);
    const auto gens = once.generators();
    CHECK(minimalize(8, std::vector<Monomial>(gens.begin(), gens.end())) == once);
    std::shuffle(raw.begin(), raw.end(), rng);
    CHECK(minimalize(8, raw) == once);
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = 0; b < gens.size(); ++b) {
        if (a != b) CHECK_FALSE(gens[a].divides(gens[b]));
      }
      if (a + 1 < gens.size()) CHECK(lex_less(gens[a], gens[a + 1]));
    }
  }
}

TEST_CASE("sum and intersection membership on random monomials") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const MonomialIdeal a = testing::random_ideal(rng, 7, 1 + trial % 4, 4);
    const MonomialIdeal b = testing::random_ideal(rng, 7, 1 + trial % 3, 4);
    const MonomialIdeal sum = ideal_sum(a, b);
    const MonomialIdeal meet = ideal_intersect(a, b);
    for (std::uint32_t m = 0; m < (1u << 7); ++m) {
      const Monomial x = Monomial::from_mask(m);
      CHECK(contains(sum, x) == (contains(a, x) || contains(b, x)));
      CHECK(contains(meet, x) == (contains(a, x) && contains(b, x)));
    }
  }
}

TEST_CASE("sum and intersection are commutative and associative") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const MonomialIdeal a = testing::random_ideal(rng, 6, 1 + trial % 3, 3);
    const MonomialIdeal b = testing::random_ideal(rng, 6, 1 + trial % 4, 3);
    const MonomialIdeal c = testing::random_ideal(rng, 6, 2, 3);
    CHECK(ideal_sum(a, b) == ideal_sum(b, a));
    CHECK(ideal_intersect(a, b) == ideal_intersect(b, a));
    CHECK(ideal_sum(ideal_sum(a, b), c) == ideal_sum(a, ideal_sum(b, c)));
    CHECK(ideal_intersect(ideal_intersect(a, b), c) == ideal_intersect(a, ideal_intersect(b, c)));
  }
}

TEST_CASE("disjoint product membership") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    // First ideal on x1..x4, second on x5..x8.
    const MonomialIdeal a = testing::random_ideal(rng, 4, 1 + trial % 3, 3);
    const MonomialIdeal b0 = testing::random_ideal(rng, 4, 1 + trial % 4, 3);
    std::vector<Monomial> shifted;
    for (Monomial g : b0.generators()) shifted.push_back(Monomial::from_mask(g.mask() << 4));
    const MonomialIdeal a8 = MonomialIdeal::from_generators(8, std::vector<Monomial>(a.generators().begin(),
                                                                                      a.generators().end()));
    const MonomialIdeal b8 = MonomialIdeal::from_generators(8, shifted);
    const MonomialIdeal product = ideal_product_disjoint(a8, b8);
    for (std::uint32_t m = 0; m < (1u << 8); ++m) {
      bool expected = false;
      for (Monomial g : a8.generators()) {
        for (Monomial h : b8.generators()) expected = expected || (((g.mask() | h.mask()) & ~m) == 0);
      }
      CHECK(contains(product, Monomial::from_mask(m)) == expected);
    }
  }
}
