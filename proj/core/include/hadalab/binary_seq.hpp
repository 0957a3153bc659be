#pragma once

// Binary sequences over {+1, -1} and the group actions on them: cyclic
// shift C, reversal R and decimation d_a, together with periodic and
// aperiodic autocorrelation.
//
// Storage is a bit-pack with bit i set iff y_i = -1, so the componentwise
// product of two sequences is XOR and P_Y(k) = n - 2 |Y xor C^k Y|.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hadalab {

class BinarySeq {
 public:
  // All +1 sequence of length n (n >= 1).
  explicit BinarySeq(std::size_t n);

  static BinarySeq parse(std::string_view text);
  static BinarySeq from_entries(std::span<const int> entries);
  static BinarySeq from_support(std::size_t n, std::span<const std::size_t> minus_positions);
  // Requires n <= 64; bit i of mask set iff y_i = -1.
  static BinarySeq from_mask(std::size_t n, std::uint64_t mask);
  static BinarySeq from_words(std::size_t n, std::vector<std::uint64_t> words);
  static BinarySeq all_minus(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  int operator[](std::size_t i) const noexcept { return is_minus(i) ? -1 : 1; }
  bool is_minus(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

  // Positions i with y_i = -1, ascending.
  std::vector<std::size_t> support() const;
  std::size_t minus_count() const noexcept;
  std::string to_string() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  // Low 64 entries as a mask; exact when size() <= 64.
  std::uint64_t mask() const noexcept { return words_[0]; }

  friend bool operator==(const BinarySeq&, const BinarySeq&) = default;
  // Lexicographic with -1 < +1; shorter sequences order first.
  friend std::strong_ordering operator<=>(const BinarySeq& lhs, const BinarySeq& rhs) noexcept;

 private:
  BinarySeq(std::size_t n, std::vector<std::uint64_t> words);
  void clear_tail() noexcept;

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

struct AutocorrVector {
  std::size_t n = 0;
  std::vector<int> values;  // P_Y(0), ..., P_Y(n-1)

  friend bool operator==(const AutocorrVector&, const AutocorrVector&) = default;
};

// Orbit of a sequence under C, named by its lexicographically minimal rotation.
struct CyclicClass {
  BinarySeq rep;

  std::size_t size() const noexcept { return rep.size(); }
  friend bool operator==(const CyclicClass&, const CyclicClass&) = default;
  friend auto operator<=>(const CyclicClass& a, const CyclicClass& b) noexcept { return a.rep <=> b.rep; }
};

// (C^i Y)_t = y_{(t+i) mod n}; i may be negative.
BinarySeq shift(const BinarySeq& y, std::int64_t i);
// (R Y)_t = y_{n-1-t}
BinarySeq reverse(const BinarySeq& y);
// (d_a Y)_t = y_{a t mod n}; throws NotAUnit unless gcd(a, n) = 1.
BinarySeq decimate(const BinarySeq& y, std::int64_t a);
// Componentwise product; throws LengthMismatch.
BinarySeq product(const BinarySeq& y, const BinarySeq& z);
// Number of +1 entries.
std::size_t weight(const BinarySeq& y) noexcept;

AutocorrVector autocorr_vector(const BinarySeq& y);
int periodic_autocorr(const BinarySeq& y, std::size_t k);
// Sum of a_i a_{i+k} over the n-k overlapping positions; 1 <= k <= n-1.
int aperiodic_autocorr(const BinarySeq& a, std::size_t k);

bool is_circulant_hadamard(const BinarySeq& y);
// y_k = y_{(n-k) mod n} for every k, i.e. the circulant matrix is symmetric.
bool is_symmetric(const BinarySeq& y);

CyclicClass canonical_rotation(const BinarySeq& y);

// The sequence X = -++...+ (single -1 at index 0).
BinarySeq base_word(std::size_t n);

namespace bits {

// Single-word kernels for n <= 64, used on the search hot paths.

constexpr std::uint64_t low_mask(std::size_t n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

// Mask of C^i Y for 0 <= i < n.
constexpr std::uint64_t rotate(std::uint64_t y, std::size_t n, std::size_t i) noexcept {
  if (i == 0) return y;
  return ((y >> i) | (y << (n - i))) & low_mask(n);
}

constexpr int autocorr(std::uint64_t y, std::size_t n, std::size_t k) noexcept {
  return static_cast<int>(n) - 2 * __builtin_popcountll(y ^ rotate(y, n, k));
}

// True when P(k) = 0 for 1 <= k <= n/2 (the rest follow from P(k) = P(n-k)).
constexpr bool is_hadamard(std::uint64_t y, std::size_t n) noexcept {
  for (std::size_t k = 1; k <= n / 2; ++k) {
    if (autocorr(y, n, k) != 0) return false;
  }
  return true;
}

// Minimal rotation under the order -1 < +1, i.e. the rotation whose first
// differing position carries the set bit.
std::uint64_t canonical(std::uint64_t y, std::size_t n) noexcept;

// Strict order matching BinarySeq::operator<=> for equal-length masks.
constexpr bool less(std::uint64_t a, std::uint64_t b) noexcept {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

std::uint64_t decimate(std::uint64_t y, std::size_t n, std::size_t a) noexcept;

}  // namespace bits

}  // namespace hadalab
