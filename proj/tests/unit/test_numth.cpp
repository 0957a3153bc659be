#include <gtest/gtest.h>

#include <set>

#include "hadalab/error.hpp"
#include "hadalab/numth.hpp"
#include "naive.hpp"

namespace nt = hadalab::numth;
using nt::u64;

TEST(Numth, Basics) {
  EXPECT_EQ(nt::inverse_mod(5, 24), 5U);
  EXPECT_EQ(nt::inverse_mod(3, 7), 5U);
  EXPECT_THROW(nt::inverse_mod(4, 8), hadalab::Error);
  EXPECT_EQ(nt::pow_mod(3, 200, 1000003), nt::pow_mod(nt::pow_mod(3, 100, 1000003), 2, 1000003));
  EXPECT_EQ(nt::factorize(360), (std::vector<std::pair<u64, unsigned>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_TRUE(nt::is_prime(97));
  EXPECT_FALSE(nt::is_prime(91));
  EXPECT_TRUE(nt::is_prime_power(49));
  EXPECT_TRUE(nt::is_prime_power(2));
  EXPECT_FALSE(nt::is_prime_power(1));
  EXPECT_FALSE(nt::is_prime_power(105));
  EXPECT_EQ(nt::totient(36), 12U);
  EXPECT_EQ(nt::isqrt(35), 5U);
  EXPECT_TRUE(nt::is_perfect_square(36));
  EXPECT_FALSE(nt::is_perfect_square(35));
}

TEST(UnitGroup, Examples) {
  const auto g8 = nt::unit_group(8);
  EXPECT_EQ(g8.units, (std::vector<u64>{1, 3, 5, 7}));
  EXPECT_EQ(g8.phi, 4U);
  for (u64 o : g8.orders) EXPECT_LE(o, 2U);
  EXPECT_EQ(nt::unit_group(36).order_of(13), 3U);
  EXPECT_EQ(nt::unit_group(668).order_of(9), 83U);
}

TEST(UnitGroup, AgainstNaive) {
  for (u64 n = 1; n <= 200; ++n) {
    const auto g = nt::unit_group(n);
    const auto units = naive::units(static_cast<long>(n));
    ASSERT_EQ(g.units.size(), units.size());
    EXPECT_EQ(g.phi, units.size());
    EXPECT_EQ(g.phi, nt::totient(n));
    for (std::size_t i = 0; i < units.size(); ++i) {
      EXPECT_EQ(g.units[i], static_cast<u64>(units[i]));
      EXPECT_EQ(g.orders[i], static_cast<u64>(naive::order(units[i], static_cast<long>(n))));
      EXPECT_EQ(g.exponent() % g.orders[i], 0U);
    }
  }
}

TEST(MultOrder, Examples) {
  EXPECT_EQ(nt::mult_order(5, 24), 2U);
  EXPECT_EQ(nt::mult_order(1, 17), 1U);
  EXPECT_EQ(nt::mult_order(13, 36), 3U);
  EXPECT_THROW(nt::mult_order(6, 36), hadalab::Error);
  for (u64 n = 2; n <= 120; ++n) {
    for (u64 a : nt::unit_group(n).units) EXPECT_EQ(nt::mult_order(a, n), nt::mult_order(nt::inverse_mod(a, n), n));
  }
}

TEST(Cosets, Examples) {
  const auto p = nt::cyclotomic_cosets(5, 8);
  EXPECT_EQ(p.cosets, (std::vector<std::vector<u64>>{{0}, {1, 5}, {2}, {3, 7}, {4}, {6}}));
  EXPECT_EQ(p.reps, (std::vector<u64>{0, 1, 2, 3, 4, 6}));
  EXPECT_EQ(nt::cyclotomic_cosets(1, 6).rank(), 6U);
  for (u64 n = 1; n <= 6; ++n) EXPECT_EQ(nt::cyclotomic_cosets(2 * n + 1, 4 * n).rank(), 3 * n);
  EXPECT_THROW(nt::cyclotomic_cosets(2, 8), hadalab::Error);
}

TEST(Cosets, PartitionInvariants) {
  for (u64 n = 1; n <= 60; ++n) {
    const auto g = nt::unit_group(n);
    for (u64 a : g.units) {
      const auto p = nt::cyclotomic_cosets(a, n);
      std::size_t total = 0;
      std::set<u64> seen;
      ASSERT_EQ(p.cosets.front(), std::vector<u64>{0});
      for (std::size_t j = 0; j < p.cosets.size(); ++j) {
        const auto& c = p.cosets[j];
        total += c.size();
        EXPECT_EQ(p.reps[j], c.front());
        EXPECT_EQ(nt::mult_order(a, n) % c.size(), 0U);
        for (u64 e : c) {
          EXPECT_TRUE(seen.insert(e).second);
          EXPECT_EQ(p.coset_of[e], j);
          EXPECT_TRUE(std::binary_search(c.begin(), c.end(), nt::mul_mod(e, a, n)));
        }
      }
      EXPECT_EQ(total, n);
      // Orbits of <a> as a set: any generator of the same subgroup gives the same partition.
      for (u64 b : g.units) {
        if (nt::cyclic_subgroup(b, n) == nt::cyclic_subgroup(a, n)) {
          EXPECT_EQ(nt::cyclotomic_cosets(b, n).cosets, p.cosets);
        }
      }
    }
  }
}

TEST(MuCount, ExamplesAndFormula) {
  EXPECT_EQ(nt::mu_count(8).by_enumeration, 4U);
  EXPECT_EQ(nt::mu_count(8).by_formula, 4U);
  EXPECT_EQ(nt::mu_count(24).by_enumeration, 8U);
  EXPECT_EQ(nt::mu_count(4).by_enumeration, 2U);
  EXPECT_EQ(nt::mu_count(4).by_formula, 2U);
  EXPECT_THROW(nt::mu_count(6), hadalab::Error);
  for (u64 N = 4; N <= 4096; N += 4) {
    const auto mu = nt::mu_count(N);
    u64 brute = 0;
    for (u64 x = 0; x < N; ++x) brute += (x * x) % N == 1;
    ASSERT_EQ(mu.by_enumeration, brute) << N;
    ASSERT_EQ(mu.by_formula, brute) << N;
  }
}

TEST(SolutionsXp, Examples) {
  const auto s36 = nt::solutions_xp(36, 3);
  EXPECT_TRUE(std::binary_search(s36.begin(), s36.end(), 13U));
  EXPECT_EQ(nt::solutions_xp(8, 3), std::vector<u64>{1});
  EXPECT_THROW(nt::solutions_xp(8, 4), hadalab::Error);
  for (u64 N = 4; N <= 200; N += 4) {
    for (u64 p : {2U, 3U, 5U, 7U}) {
      const auto s = nt::solutions_xp(N, p);
      EXPECT_EQ(s.front(), 1U);
      for (u64 x : s) EXPECT_EQ(nt::pow_mod(x, p, N), 1U);
    }
  }
}

TEST(Turyn, Examples) {
  EXPECT_FALSE(nt::turyn_admissible(16).admissible);
  EXPECT_FALSE(nt::turyn_admissible(16).m_odd);
  const auto t36 = nt::turyn_admissible(36);
  EXPECT_FALSE(t36.admissible);
  EXPECT_FALSE(t36.m_not_prime_power);
  const auto big = nt::turyn_admissible(44100);
  EXPECT_TRUE(big.admissible);
  EXPECT_EQ(big.m, 105U);
  EXPECT_TRUE(nt::turyn_admissible(4).known_order);
  EXPECT_FALSE(nt::turyn_admissible(20).is_4m2);
}
