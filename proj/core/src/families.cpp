#include "hadalab/families.hpp"

#include <array>
#include <string>
#include <vector>

#include "hadalab/error.hpp"
#include "hadalab/numth.hpp"

namespace hadalab::families {

namespace {

// Feedback taps of x^d + ... + 1, bit i set for the x^i term (i < d).
struct Primitive {
  unsigned degree;
  std::uint32_t taps;
};

constexpr std::array<Primitive, 5> kPrimitive{{
    {2, 0b11},      // x^2 + x + 1
    {3, 0b011},     // x^3 + x + 1
    {4, 0b0011},    // x^4 + x + 1
    {5, 0b00101},   // x^5 + x^2 + 1
    {6, 0b000011},  // x^6 + x + 1
}};

TwoLevelSeq finish(BinarySeq seq, const char* family) {
  const auto d = two_level_offpeak(seq);
  if (!d) throw Error(ErrorKind::ConstructionFailed, std::string(family) + " sequence is not two-level");
  const std::size_t n = seq.size();
  return TwoLevelSeq{std::move(seq), n, *d};
}

}  // namespace

std::optional<int> two_level_offpeak(const BinarySeq& y) {
  const std::size_t n = y.size();
  if (n < 2) return std::nullopt;
  const int d = periodic_autocorr(y, 1);
  for (std::size_t k = 2; k < n; ++k) {
    if (periodic_autocorr(y, k) != d) return std::nullopt;
  }
  return d;
}

TwoLevelSeq legendre(std::uint64_t p) {
  if (p == 2 || !numth::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not an odd prime");
  std::vector<bool> residue(p, false);
  for (std::uint64_t i = 1; i < p; ++i) residue[numth::mul_mod(i, i, p)] = true;
  std::vector<std::size_t> support;
  for (std::uint64_t i = 1; i < p; ++i) {
    if (!residue[i]) support.push_back(static_cast<std::size_t>(i));
  }
  BinarySeq seq = BinarySeq::from_support(static_cast<std::size_t>(p), support);
  if (p % 4 == 3) return finish(std::move(seq), "Legendre");
  return TwoLevelSeq{std::move(seq), static_cast<std::size_t>(p), std::nullopt};
}

TwoLevelSeq mseq(unsigned degree) {
  const Primitive* poly = nullptr;
  for (const auto& candidate : kPrimitive) {
    if (candidate.degree == degree) poly = &candidate;
  }
  if (poly == nullptr) {
    throw Error(ErrorKind::UnsupportedDegree, "m-sequence degree " + std::to_string(degree) + " not in [2, 6]");
  }
  // s_{t+d} = sum of s_{t+i} over taps i, starting from state 0...01.
  const std::size_t period = (std::size_t{1} << degree) - 1;
  const std::uint32_t full = (1U << degree) - 1;
  std::uint32_t state = 1;
  std::vector<std::size_t> support;
  for (std::size_t t = 0; t < period; ++t) {
    if (state & 1U) support.push_back(t);
    const std::uint32_t feedback = static_cast<std::uint32_t>(__builtin_parity(state & poly->taps));
    state = ((state >> 1) | (feedback << (degree - 1))) & full;
    if (state == 1 && t + 1 < period) {
      throw Error(ErrorKind::ConstructionFailed, "feedback polynomial of degree " + std::to_string(degree) + " is not primitive");
    }
  }
  if (state != 1) {
    throw Error(ErrorKind::ConstructionFailed, "feedback polynomial of degree " + std::to_string(degree) + " is not primitive");
  }
  return finish(BinarySeq::from_support(period, support), "m-");
}

}  // namespace hadalab::families
