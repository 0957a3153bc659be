#include <gtest/gtest.h>

#include "hadalab/error.hpp"
#include "hadalab/families.hpp"
#include "naive.hpp"

namespace fam = hadalab::families;
using hadalab::BinarySeq;
using hadalab::ErrorKind;

namespace {

ErrorKind kind_of(void (*fn)()) {
  try {
    fn();
  } catch (const hadalab::Error& e) {
    return e.kind();
  }
  return ErrorKind::ParseError;
}

}  // namespace

TEST(Legendre, Examples) {
  EXPECT_EQ(fam::legendre(7).seq.to_string(), "+++-+--");
  EXPECT_EQ(fam::legendre(7).offpeak, -1);
  EXPECT_EQ(fam::legendre(3).seq.to_string(), "++-");
  EXPECT_EQ(kind_of([] { fam::legendre(9); }), ErrorKind::NotPrime);
  EXPECT_EQ(kind_of([] { fam::legendre(2); }), ErrorKind::NotPrime);
}

TEST(Legendre, ResiduesAndAutocorrelation) {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 43, 47, 59, 67, 71, 79, 83}) {
    const auto t = fam::legendre(p);
    ASSERT_EQ(t.seq.size(), p);
    EXPECT_EQ(weight(t.seq), (p + 1) / 2);
    std::vector<bool> residue(p, false);
    for (std::uint64_t i = 1; i < p; ++i) residue[i * i % p] = true;
    for (std::uint64_t i = 1; i < p; ++i) EXPECT_EQ(t.seq[i] == 1, residue[i]);
    const auto values = naive::of(t.seq);
    if (p % 4 == 3) {
      for (std::size_t k = 1; k < p; ++k) EXPECT_EQ(naive::periodic(values, k), -1);
      EXPECT_EQ(fam::two_level_offpeak(t.seq), -1);
      EXPECT_EQ(t.offpeak, -1);
    } else {
      EXPECT_FALSE(t.offpeak.has_value());
    }
  }
}

TEST(Mseq, Examples) {
  for (unsigned d = 2; d <= 6; ++d) {
    const auto t = fam::mseq(d);
    const std::size_t n = (std::size_t{1} << d) - 1;
    ASSERT_EQ(t.seq.size(), n);
    EXPECT_EQ(t.offpeak, -1);
    EXPECT_EQ(t.seq.minus_count(), (n + 1) / 2);
    const auto values = naive::of(t.seq);
    for (std::size_t k = 1; k < n; ++k) EXPECT_EQ(naive::periodic(values, k), -1);
  }
  EXPECT_EQ(kind_of([] { fam::mseq(1); }), ErrorKind::UnsupportedDegree);
  EXPECT_EQ(kind_of([] { fam::mseq(7); }), ErrorKind::UnsupportedDegree);
}

TEST(TwoLevel, Detects) {
  EXPECT_EQ(fam::two_level_offpeak(BinarySeq::parse("+++-")), 0);
  EXPECT_EQ(fam::two_level_offpeak(BinarySeq(5)), 5);
  EXPECT_FALSE(fam::two_level_offpeak(BinarySeq::parse("++-+--")).has_value());
}
