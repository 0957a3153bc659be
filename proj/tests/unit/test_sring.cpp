#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "hadalab/error.hpp"
#include "hadalab/numth.hpp"
#include "hadalab/sring.hpp"
#include "naive.hpp"

using hadalab::BinarySeq;
namespace sr = hadalab::sring;
using sr::SubwordTag;
using u64 = std::uint64_t;

namespace {

BinarySeq seq_with_support(std::size_t n, std::initializer_list<std::size_t> supp) {
  return BinarySeq::from_support(n, std::vector<std::size_t>(supp));
}

// Brute-force family as a sorted list of masks.
std::vector<u64> brute_family(std::size_t n, long a) { return naive::sorted_masks_fixed_by(n, a); }

}  // namespace

TEST(Member, Examples) {
  const sr::InvariantFamily fam(8, 3);
  EXPECT_TRUE(sr::member(seq_with_support(8, {1, 3}), fam));
  EXPECT_FALSE(sr::member(seq_with_support(8, {1}), fam));
  EXPECT_THROW(sr::member(BinarySeq(7), fam), hadalab::Error);
}

TEST(Member, EquivalentToDecimationFixedPoint) {
  for (std::size_t n = 1; n <= 16; ++n) {
    for (long a : naive::units(static_cast<long>(n))) {
      const sr::InvariantFamily fam(n, static_cast<u64>(a));
      const auto brute = brute_family(n, a);
      ASSERT_EQ(brute.size(), std::uint64_t{1} << fam.rank()) << n << " " << a;
      std::size_t hits = 0;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const BinarySeq y = BinarySeq::from_mask(n, m);
        const bool in = sr::member(y, fam);
        ASSERT_EQ(in, decimate(y, a) == y);
        hits += in;
      }
      EXPECT_EQ(hits, brute.size());
    }
  }
}

TEST(Enumerate, MatchesBruteForce) {
  for (std::size_t n = 1; n <= 16; ++n) {
    for (long a : naive::units(static_cast<long>(n))) {
      const sr::InvariantFamily fam(n, static_cast<u64>(a));
      std::vector<u64> got;
      for (const BinarySeq& y : sr::enumerate(fam)) {
        ASSERT_TRUE(sr::member(y, fam));
        got.push_back(y.mask());
      }
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, brute_family(n, a));
    }
  }
  EXPECT_THROW(sr::enumerate(sr::InvariantFamily(40, 1), 20), hadalab::Error);
}

TEST(Code, ExamplesAndSpan) {
  const auto c = sr::code(8, 5);
  ASSERT_EQ(c.size(), 6U);
  EXPECT_EQ(c[1].support(), (std::vector<std::size_t>{3, 7}));
  // Products of codewords reach exactly the family.
  for (std::size_t n = 1; n <= 14; ++n) {
    for (long a : naive::units(static_cast<long>(n))) {
      const auto words = sr::code(n, static_cast<u64>(a));
      std::vector<u64> span;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << words.size()); ++m) {
        BinarySeq y(n);
        for (std::size_t j = 0; j < words.size(); ++j) {
          if ((m >> j) & 1U) y = product(y, words[j]);
        }
        span.push_back(y.mask());
      }
      std::sort(span.begin(), span.end());
      ASSERT_EQ(std::unique(span.begin(), span.end()), span.end());
      EXPECT_EQ(span, brute_family(n, a));
    }
  }
}

TEST(Includes, Examples) {
  EXPECT_TRUE(sr::includes(36, 5, 17));
  EXPECT_TRUE(sr::includes(668, 3, 9));
  EXPECT_FALSE(sr::includes(8, 3, 5));
  for (u64 n = 2; n <= 50; ++n) {
    for (u64 a : hadalab::numth::unit_group(n).units) EXPECT_TRUE(sr::includes(n, a, 1));
  }
}

TEST(Includes, AgreesWithFamilySubset) {
  for (std::size_t n = 1; n <= 14; ++n) {
    const auto units = naive::units(static_cast<long>(n));
    std::map<long, std::vector<u64>> fams;
    for (long a : units) fams[a] = brute_family(n, a);
    for (long a : units) {
      for (long b : units) {
        const bool subset = std::includes(fams[b].begin(), fams[b].end(), fams[a].begin(), fams[a].end());
        ASSERT_EQ(sr::includes(n, static_cast<u64>(a), static_cast<u64>(b)), subset) << n << " " << a << " " << b;
        // Subgroup containment implies family inclusion.
        const auto ga = naive::subgroup(a, static_cast<long>(n));
        const auto gb = naive::subgroup(b, static_cast<long>(n));
        if (std::includes(ga.begin(), ga.end(), gb.begin(), gb.end())) EXPECT_TRUE(subset);
      }
    }
  }
}

TEST(Lattice, Examples) {
  const auto g8 = sr::lattice(8);
  EXPECT_EQ(g8.nodes.size(), 4U);
  EXPECT_EQ(g8.edges.size(), 3U);
  EXPECT_EQ(g8.nodes[g8.top].generator, 1U);
  EXPECT_THROW(sr::lattice(20000), hadalab::Error);

  const auto g36 = sr::lattice(36);
  std::set<u64> gens;
  for (const auto& node : g36.nodes) gens.insert(node.generator);
  EXPECT_TRUE(gens.count(13) && gens.count(19) && gens.count(35) && gens.count(1));
}

TEST(Lattice, EdgesAreTransitiveReductionOfInclusion) {
  for (u64 n = 1; n <= 60; ++n) {
    const auto g = sr::lattice(n);
    const std::size_t k = g.nodes.size();
    // Distinct cyclic subgroups, computed independently.
    std::set<std::vector<long>> groups;
    for (long a : naive::units(static_cast<long>(n))) groups.insert(naive::subgroup(a, static_cast<long>(n)));
    ASSERT_EQ(k, groups.size()) << n;

    std::vector<std::vector<bool>> inc(k, std::vector<bool>(k));
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_EQ(g.nodes[i].order, g.nodes[i].elements.size());
      EXPECT_EQ(g.nodes[i].generator, g.nodes[i].elements.empty() ? 0 : g.nodes[i].generator);
      for (std::size_t j = 0; j < k; ++j) {
        inc[i][j] = i != j && sr::includes(n, g.nodes[i].generator, g.nodes[j].generator);
      }
    }
    std::set<std::pair<std::size_t, std::size_t>> expected;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (!inc[i][j]) continue;
        bool covered = true;
        for (std::size_t m = 0; m < k && covered; ++m) covered = !(inc[i][m] && inc[m][j]);
        if (covered) expected.insert({i, j});
      }
    }
    EXPECT_EQ((std::set<std::pair<std::size_t, std::size_t>>(g.edges.begin(), g.edges.end())), expected) << n;
    EXPECT_EQ(g.nodes[g.top].order, 1U);
  }
}

TEST(Lattice, DotMentionsEveryEdge) {
  const auto g = sr::lattice(24);
  const std::string dot = sr::lattice_dot(g);
  EXPECT_EQ(dot.rfind("digraph", 0), 0U);
  std::size_t arrows = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++arrows;
  EXPECT_EQ(arrows, g.edges.size());
}

TEST(Classify, Examples) {
  const auto a = sr::classify_subwords(seq_with_support(12, {3}), 5);
  ASSERT_EQ(a.buckets.size(), 1U);
  EXPECT_EQ(a.buckets[0].tag, SubwordTag::A);
  EXPECT_EQ(a.counts.r, 1U);

  const auto e = sr::classify_subwords(seq_with_support(12, {1, 5, 7, 11}), 5);
  ASSERT_EQ(e.buckets.size(), 1U);
  EXPECT_EQ(e.buckets[0].tag, SubwordTag::E);
  EXPECT_EQ(e.buckets[0].partner, 7U);
  EXPECT_EQ(e.counts.u, 1U);

  const auto f = sr::classify_subwords(seq_with_support(12, {1, 7}), 7);
  ASSERT_EQ(f.buckets.size(), 1U);
  EXPECT_EQ(f.buckets[0].tag, SubwordTag::F);

  EXPECT_THROW(sr::classify_subwords(BinarySeq(10), 3), hadalab::Error);
  EXPECT_THROW(sr::classify_subwords(seq_with_support(12, {1}), 5), hadalab::Error);
}

TEST(Classify, CountIdentityAndPartition) {
  std::mt19937_64 rng(11);
  for (u64 n = 1; n <= 10; ++n) {
    const u64 n4 = 4 * n;
    for (long x : naive::units(static_cast<long>(n4))) {
      const long p = naive::order(x, static_cast<long>(n4));
      if (p != 1 && !hadalab::numth::is_prime(static_cast<u64>(p))) continue;
      const sr::InvariantFamily fam(n4, static_cast<u64>(x));
      for (int c = 0; c < 20; ++c) {
        const std::uint64_t mask = fam.rank() >= 64 ? rng() : rng() & ((std::uint64_t{1} << fam.rank()) - 1);
        const BinarySeq y = fam.member_from_mask(mask);
        const auto cl = sr::classify_subwords(y, static_cast<u64>(x));
        EXPECT_EQ(cl.support_size_from_counts(), y.minus_count());
        std::set<u64> covered;
        for (const auto& b : cl.buckets) {
          std::vector<u64> members = b.coset;
          if (b.tag == SubwordTag::B || b.tag == SubwordTag::E) {
            const auto& other = fam.partition().coset_containing(b.partner);
            members.insert(members.end(), other.begin(), other.end());
            EXPECT_EQ(other.front(), b.partner);
            EXPECT_TRUE(y.is_minus(static_cast<std::size_t>(b.partner)));
          }
          for (u64 e : members) EXPECT_TRUE(covered.insert(e).second);
          // Tag consistent with coset size and translate.
          const bool single = b.coset.size() == 1;
          std::set<u64> shifted;
          for (u64 e : b.coset) shifted.insert((e + 2 * n) % n4);
          const bool self = shifted == std::set<u64>(b.coset.begin(), b.coset.end());
          switch (b.tag) {
            case SubwordTag::A: EXPECT_TRUE(single); break;
            case SubwordTag::B: EXPECT_TRUE(single); break;
            case SubwordTag::D: EXPECT_FALSE(single); EXPECT_FALSE(self); break;
            case SubwordTag::E: EXPECT_FALSE(single); EXPECT_FALSE(self); break;
            case SubwordTag::F: EXPECT_FALSE(single); EXPECT_TRUE(self); break;
          }
        }
        const auto supp = y.support();
        EXPECT_EQ(covered, std::set<u64>(supp.begin(), supp.end()));
      }
    }
  }
}

TEST(Translate, HalfShiftMovesCodeword) {
  const auto t = sr::c2n_translate(sr::InvariantFamily(12, 5), 1);
  EXPECT_TRUE(t.holds);
  EXPECT_EQ(t.translated_rep, 7U);
  EXPECT_THROW(sr::c2n_translate(sr::InvariantFamily(9, 2), 1), hadalab::Error);
  for (u64 m = 1; m <= 30; ++m) {
    const u64 n = 2 * m;
    for (long a : naive::units(static_cast<long>(n))) {
      const sr::InvariantFamily fam(n, static_cast<u64>(a));
      for (u64 s = 0; s < n; ++s) {
        const auto chk = sr::c2n_translate(fam, s);
        ASSERT_TRUE(chk.holds) << n << " " << a << " " << s;
        EXPECT_EQ(chk.shifted, chk.expected);
      }
    }
  }
}
