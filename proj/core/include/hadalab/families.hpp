#pragma once

// Reference sequences with two-level periodic autocorrelation
// theta(Y) = (n, d, ..., d).

#include <cstdint>
#include <optional>

#include "hadalab/binary_seq.hpp"

namespace hadalab::families {

struct TwoLevelSeq {
  BinarySeq seq;
  std::size_t n = 0;
  // Empty when the autocorrelation is not two-level (Legendre, p = 1 mod 4).
  std::optional<int> offpeak;
};

// Off-peak level d when every P_Y(k), k != 0, equals d.
std::optional<int> two_level_offpeak(const BinarySeq& y);

// y_0 = +1, y_i = +1 iff i is a nonzero quadratic residue mod p.
// Two-level with offpeak -1 exactly when p = 3 mod 4. Throws NotPrime for
// p = 2 or composite p.
TwoLevelSeq legendre(std::uint64_t p);

// Maximal-length LFSR sequence of period 2^degree - 1, degree in [2, 6];
// output bit 1 maps to -1. Throws UnsupportedDegree.
TwoLevelSeq mseq(unsigned degree);

}  // namespace hadalab::families
