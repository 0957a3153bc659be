#include <gtest/gtest.h>

#include <set>

#include "hadalab/error.hpp"
#include "hadalab/numth.hpp"
#include "hadalab/search.hpp"
#include "hadalab/sring.hpp"
#include "naive.hpp"

using hadalab::BinarySeq;
namespace hs = hadalab::search;

TEST(HadamardFull, OrderFour) {
  const auto r = hs::hadamard_full(4);
  ASSERT_EQ(r.hits.size(), 2U);
  EXPECT_EQ(r.hits[0], BinarySeq::parse("---+"));
  EXPECT_EQ(r.hits[1], BinarySeq::parse("-+++"));
  EXPECT_EQ(r.raw_count, 8U);
  hs::SearchOptions collapse;
  collapse.collapse_negation = true;
  EXPECT_EQ(hs::hadamard_full(4, collapse).hits.size(), 1U);
}

TEST(HadamardFull, AgreesWithRawEnumeration) {
  for (std::size_t n = 1; n <= 16; ++n) {
    std::set<naive::Seq> classes;
    std::uint64_t raw = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const naive::Seq y = naive::from_bits(m, n);
      if (naive::hadamard(y)) {
        ++raw;
        classes.insert(naive::canon(y));
      }
    }
    const auto r = hs::hadamard_full(n);
    EXPECT_EQ(r.raw_count, raw) << n;
    std::set<naive::Seq> got;
    for (const auto& h : r.hits) {
      EXPECT_TRUE(is_circulant_hadamard(h));
      got.insert(naive::of(h));
    }
    EXPECT_EQ(got, classes) << n;
  }
  EXPECT_THROW(hs::hadamard_full(40), hadalab::Error);
}

TEST(HadamardFull, DeterministicAcrossWorkers) {
  for (std::size_t n : {16U, 20U}) {
    hs::SearchOptions one;
    const auto base = hs::hadamard_full(n, one);
    for (unsigned w : {2U, 8U}) {
      hs::SearchOptions opts;
      opts.workers = w;
      const auto r = hs::hadamard_full(n, opts);
      EXPECT_EQ(r.hits, base.hits);
      EXPECT_EQ(r.raw_count, base.raw_count);
      EXPECT_EQ(r.nodes_explored, base.nodes_explored);
    }
  }
}

TEST(HadamardInvariant, Examples) {
  const auto r = hs::hadamard_in_invariant(4, 3);
  // -+++, ++-+ and their negations; two rotation classes.
  EXPECT_EQ(r.members.size(), 4U);
  EXPECT_EQ(r.hits.size(), 2U);
  for (std::size_t n : {8U, 12U, 16U, 20U, 24U}) {
    for (std::uint64_t a : hadalab::numth::unit_group(n).units) {
      EXPECT_TRUE(hs::hadamard_in_invariant(n, a).members.empty()) << n << " " << a;
    }
  }
  EXPECT_THROW(hs::hadamard_in_invariant(12, 2), hadalab::Error);
}

TEST(HadamardInvariant, MembersMatchBruteForce) {
  for (std::size_t n = 1; n <= 16; ++n) {
    for (long a : naive::units(static_cast<long>(n))) {
      std::vector<BinarySeq> expect;
      for (std::uint64_t m : naive::sorted_masks_fixed_by(n, a)) {
        if (naive::hadamard(naive::from_bits(m, n))) expect.push_back(BinarySeq::from_mask(n, m));
      }
      std::sort(expect.begin(), expect.end());
      EXPECT_EQ(hs::hadamard_in_invariant(n, static_cast<std::uint64_t>(a)).members, expect) << n << " " << a;
    }
  }
}

TEST(Barker, Examples) {
  const auto r13 = hs::barker(13);
  ASSERT_EQ(r13.hits.size(), 2U);
  EXPECT_TRUE(std::count(r13.hits.begin(), r13.hits.end(), BinarySeq::parse("+++++--++-+-+")));
  EXPECT_TRUE(hs::barker(6).hits.empty());
  EXPECT_THROW(hs::barker(40), hadalab::Error);
}

TEST(Barker, AgreesWithRawEnumeration) {
  for (std::size_t n = 1; n <= 16; ++n) {
    std::vector<naive::Seq> expect, expand;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const naive::Seq y = naive::from_bits(m, n);
      if (!naive::barker(y)) continue;
      expand.push_back(y);
      if (y[0] == 1) expect.push_back(y);
    }
    std::vector<naive::Seq> got, got_expanded;
    for (const auto& h : hs::barker(n).hits) got.push_back(naive::of(h));
    hs::SearchOptions opts;
    opts.expand_symmetries = true;
    for (const auto& h : hs::barker(n, opts).hits) got_expanded.push_back(naive::of(h));
    std::sort(expect.begin(), expect.end());
    std::sort(expand.begin(), expand.end());
    std::sort(got.begin(), got.end());
    std::sort(got_expanded.begin(), got_expanded.end());
    EXPECT_EQ(got, expect) << n;
    EXPECT_EQ(got_expanded, expand) << n;
  }
}

TEST(Barker, DeterministicAcrossWorkers) {
  const auto base = hs::barker(22);
  for (unsigned w : {2U, 8U}) {
    hs::SearchOptions opts;
    opts.workers = w;
    const auto r = hs::barker(22, opts);
    EXPECT_EQ(r.hits, base.hits);
    EXPECT_EQ(r.nodes_explored, base.nodes_explored);
  }
}

TEST(Orbit, Examples) {
  const auto o4 = hs::orbit_under_decimation(BinarySeq::parse("+++-"));
  EXPECT_EQ(o4.orbit.size(), 1U);
  EXPECT_TRUE(o4.reversal_hit);
  EXPECT_EQ(o4.group_order, 2U);
}

TEST(Orbit, OrbitStabilizerHolds) {
  std::mt19937_64 rng(12);
  for (int c = 0; c < 300; ++c) {
    const std::size_t n = 1 + rng() % 40;
    const BinarySeq y = naive::random_seq(rng, n);
    const auto r = hs::orbit_under_decimation(y);
    EXPECT_EQ(r.orbit.size() * r.stabilizer.size(), r.group_order);
    // Orbit computed by brute force over units.
    std::set<naive::Seq> brute;
    for (long a : naive::units(static_cast<long>(n))) brute.insert(naive::canon(naive::decimate(naive::of(y), a)));
    std::set<naive::Seq> got;
    for (const auto& cls : r.orbit) got.insert(naive::of(cls.rep));
    EXPECT_EQ(got, brute);
    EXPECT_EQ(r.reversal_hit, brute.count(naive::canon(naive::reverse(naive::of(y)))) == 1);
  }
}
