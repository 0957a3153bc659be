#pragma once

// Test-side reference implementations over plain +1/-1 vectors. Kept
// deliberately simple; nothing here touches the library's bit-packing.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hadalab/binary_seq.hpp"

namespace naive {

using Seq = std::vector<int>;

inline Seq from_bits(std::uint64_t m, std::size_t n) {
  Seq y(n);
  for (std::size_t t = 0; t < n; ++t) y[t] = ((m >> t) & 1U) ? -1 : 1;
  return y;
}

inline Seq from_string(const std::string& s) {
  Seq y;
  for (char c : s) y.push_back(c == '-' ? -1 : 1);
  return y;
}

inline std::string to_string(const Seq& y) {
  std::string s;
  for (int v : y) s += v < 0 ? '-' : '+';
  return s;
}

inline Seq of(const hadalab::BinarySeq& y) { return from_string(y.to_string()); }

inline Seq shift(const Seq& y, long i) {
  const long n = static_cast<long>(y.size());
  Seq z(y.size());
  for (long t = 0; t < n; ++t) z[t] = y[(((t + i) % n) + n) % n];
  return z;
}

inline Seq reverse(const Seq& y) { return Seq(y.rbegin(), y.rend()); }

inline Seq decimate(const Seq& y, long a) {
  const long n = static_cast<long>(y.size());
  Seq z(y.size());
  for (long t = 0; t < n; ++t) z[t] = y[(a * t) % n];
  return z;
}

inline int periodic(const Seq& y, std::size_t k) {
  const std::size_t n = y.size();
  int s = 0;
  for (std::size_t t = 0; t < n; ++t) s += y[t] * y[(t + k) % n];
  return s;
}

inline int aperiodic(const Seq& y, std::size_t k) {
  int s = 0;
  for (std::size_t t = 0; t + k < y.size(); ++t) s += y[t] * y[t + k];
  return s;
}

inline bool hadamard(const Seq& y) {
  for (std::size_t k = 1; k < y.size(); ++k) {
    if (periodic(y, k) != 0) return false;
  }
  return true;
}

inline bool barker(const Seq& y) {
  for (std::size_t k = 1; k < y.size(); ++k) {
    if (std::abs(aperiodic(y, k)) > 1) return false;
  }
  return true;
}

inline Seq canon(const Seq& y) {
  Seq best = y;
  for (std::size_t i = 1; i < y.size(); ++i) best = std::min(best, shift(y, static_cast<long>(i)));
  return best;
}

inline std::vector<long> units(long n) {
  if (n == 1) return {0};
  std::vector<long> u;
  for (long a = 1; a < n; ++a) {
    if (std::gcd(a, n) == 1) u.push_back(a);
  }
  return u;
}

inline long order(long a, long n) {
  if (n == 1) return 1;
  long x = a % n, k = 1;
  while (x != 1) {
    x = x * a % n;
    ++k;
  }
  return k;
}

inline std::vector<long> subgroup(long a, long n) {
  std::set<long> s;
  long x = 1 % n;
  do {
    s.insert(x);
    x = x * a % n;
  } while (x != 1 % n);
  return {s.begin(), s.end()};
}

inline std::vector<std::uint64_t> sorted_masks_fixed_by(std::size_t n, long a) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    const Seq y = from_bits(m, n);
    if (decimate(y, a) == y) out.push_back(m);
  }
  return out;
}

inline hadalab::BinarySeq random_seq(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> words((n + 63) / 64);
  for (auto& w : words) w = rng();
  return hadalab::BinarySeq::from_words(n, std::move(words));
}

inline long random_unit(std::mt19937_64& rng, long n) {
  const auto u = units(n);
  return u[rng() % u.size()];
}

}  // namespace naive
