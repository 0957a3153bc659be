#include "hadalab/binary_seq.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "hadalab/error.hpp"

namespace hadalab {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

std::size_t wrap(std::int64_t i, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  std::int64_t r = i % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

void require_nonempty(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::ParseError, "sequence length must be at least 1");
}

}  // namespace

BinarySeq::BinarySeq(std::size_t n) : n_(n), words_(word_count(n), 0) { require_nonempty(n); }

BinarySeq::BinarySeq(std::size_t n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {
  require_nonempty(n);
  words_.resize(word_count(n), 0);
  clear_tail();
}

void BinarySeq::clear_tail() noexcept {
  const std::size_t rem = n_ & 63;
  if (rem != 0) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

BinarySeq BinarySeq::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty sequence");
  std::vector<std::uint64_t> words(word_count(text.size()), 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '-') {
      words[i >> 6] |= std::uint64_t{1} << (i & 63);
    } else if (c != '+') {
      throw Error(ErrorKind::ParseError, "unexpected character '" + std::string(1, c) + "' in sequence");
    }
  }
  return BinarySeq(text.size(), std::move(words));
}

BinarySeq BinarySeq::from_entries(std::span<const int> entries) {
  std::vector<std::uint64_t> words(word_count(entries.size()), 0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == -1) {
      words[i >> 6] |= std::uint64_t{1} << (i & 63);
    } else if (entries[i] != 1) {
      throw Error(ErrorKind::ParseError, "entries must be +1 or -1");
    }
  }
  return BinarySeq(entries.size(), std::move(words));
}

BinarySeq BinarySeq::from_support(std::size_t n, std::span<const std::size_t> minus_positions) {
  require_nonempty(n);
  std::vector<std::uint64_t> words(word_count(n), 0);
  for (std::size_t p : minus_positions) {
    if (p >= n) throw Error(ErrorKind::ShiftOutOfRange, "support position out of range");
    words[p >> 6] |= std::uint64_t{1} << (p & 63);
  }
  return BinarySeq(n, std::move(words));
}

BinarySeq BinarySeq::from_mask(std::size_t n, std::uint64_t mask) {
  if (n > 64) throw Error(ErrorKind::TooLarge, "from_mask requires n <= 64");
  return BinarySeq(n, std::vector<std::uint64_t>{mask});
}

BinarySeq BinarySeq::from_words(std::size_t n, std::vector<std::uint64_t> words) {
  return BinarySeq(n, std::move(words));
}

BinarySeq BinarySeq::all_minus(std::size_t n) {
  return BinarySeq(n, std::vector<std::uint64_t>(word_count(n), ~std::uint64_t{0}));
}

std::vector<std::size_t> BinarySeq::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::size_t BinarySeq::minus_count() const noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::string BinarySeq::to_string() const {
  std::string s(n_, '+');
  for (std::size_t i = 0; i < n_; ++i) {
    if (is_minus(i)) s[i] = '-';
  }
  return s;
}

std::strong_ordering operator<=>(const BinarySeq& lhs, const BinarySeq& rhs) noexcept {
  if (lhs.n_ != rhs.n_) return lhs.n_ <=> rhs.n_;
  for (std::size_t w = 0; w < lhs.words_.size(); ++w) {
    const std::uint64_t diff = lhs.words_[w] ^ rhs.words_[w];
    if (diff == 0) continue;
    const std::uint64_t lowest = diff & (~diff + 1);
    return (lhs.words_[w] & lowest) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

BinarySeq shift(const BinarySeq& y, std::int64_t i) {
  const std::size_t n = y.size();
  const std::size_t s = wrap(i, n);
  if (s == 0) return y;
  if (n <= 64) return BinarySeq::from_mask(n, bits::rotate(y.mask(), n, s));
  std::vector<std::uint64_t> out(y.words().size(), 0);
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t src = t + s;
    if (src >= n) src -= n;
    if (y.is_minus(src)) out[t >> 6] |= std::uint64_t{1} << (t & 63);
  }
  return BinarySeq::from_words(n, std::move(out));
}

BinarySeq reverse(const BinarySeq& y) {
  const std::size_t n = y.size();
  std::vector<std::uint64_t> out(y.words().size(), 0);
  for (std::size_t t = 0; t < n; ++t) {
    if (y.is_minus(n - 1 - t)) out[t >> 6] |= std::uint64_t{1} << (t & 63);
  }
  return BinarySeq::from_words(n, std::move(out));
}

BinarySeq decimate(const BinarySeq& y, std::int64_t a) {
  const std::size_t n = y.size();
  const std::size_t m = wrap(a, n);
  if (std::gcd(m, n) != 1) {
    throw Error(ErrorKind::NotAUnit, std::to_string(a) + " is not a unit modulo " + std::to_string(n));
  }
  if (n <= 64) return BinarySeq::from_mask(n, bits::decimate(y.mask(), n, m));
  std::vector<std::uint64_t> out(y.words().size(), 0);
  std::size_t src = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (y.is_minus(src)) out[t >> 6] |= std::uint64_t{1} << (t & 63);
    src += m;
    if (src >= n) src -= n;
  }
  return BinarySeq::from_words(n, std::move(out));
}

BinarySeq product(const BinarySeq& y, const BinarySeq& z) {
  if (y.size() != z.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "lengths " + std::to_string(y.size()) + " and " + std::to_string(z.size()) + " differ");
  }
  std::vector<std::uint64_t> out(y.words().begin(), y.words().end());
  for (std::size_t w = 0; w < out.size(); ++w) out[w] ^= z.words()[w];
  return BinarySeq::from_words(y.size(), std::move(out));
}

std::size_t weight(const BinarySeq& y) noexcept { return y.size() - y.minus_count(); }

int periodic_autocorr(const BinarySeq& y, std::size_t k) {
  const std::size_t n = y.size();
  k %= n;
  if (n <= 64) return bits::autocorr(y.mask(), n, k);
  const BinarySeq shifted = shift(y, static_cast<std::int64_t>(k));
  std::size_t differ = 0;
  for (std::size_t w = 0; w < y.words().size(); ++w) {
    differ += static_cast<std::size_t>(std::popcount(y.words()[w] ^ shifted.words()[w]));
  }
  return static_cast<int>(n) - 2 * static_cast<int>(differ);
}

AutocorrVector autocorr_vector(const BinarySeq& y) {
  AutocorrVector v{y.size(), std::vector<int>(y.size())};
  for (std::size_t k = 0; k < y.size(); ++k) v.values[k] = periodic_autocorr(y, k);
  return v;
}

int aperiodic_autocorr(const BinarySeq& a, std::size_t k) {
  const std::size_t n = a.size();
  if (k < 1 || k >= n) {
    throw Error(ErrorKind::ShiftOutOfRange,
                "shift " + std::to_string(k) + " outside [1, " + std::to_string(n - 1) + "]");
  }
  int sum = 0;
  for (std::size_t i = 0; i + k < n; ++i) sum += a[i] * a[i + k];
  return sum;
}

bool is_circulant_hadamard(const BinarySeq& y) {
  const std::size_t n = y.size();
  if (n <= 64) return bits::is_hadamard(y.mask(), n);
  for (std::size_t k = 1; k <= n / 2; ++k) {
    if (periodic_autocorr(y, k) != 0) return false;
  }
  return true;
}

bool is_symmetric(const BinarySeq& y) {
  const std::size_t n = y.size();
  for (std::size_t k = 1; k < n; ++k) {
    if (y.is_minus(k) != y.is_minus(n - k)) return false;
  }
  return true;
}

CyclicClass canonical_rotation(const BinarySeq& y) {
  const std::size_t n = y.size();
  if (n <= 64) return CyclicClass{BinarySeq::from_mask(n, bits::canonical(y.mask(), n))};
  BinarySeq best = y;
  for (std::size_t i = 1; i < n; ++i) {
    BinarySeq r = shift(y, static_cast<std::int64_t>(i));
    if (r < best) best = std::move(r);
  }
  return CyclicClass{std::move(best)};
}

BinarySeq base_word(std::size_t n) {
  const std::size_t zero = 0;
  return BinarySeq::from_support(n, std::span<const std::size_t>(&zero, 1));
}

namespace bits {

std::uint64_t canonical(std::uint64_t y, std::size_t n) noexcept {
  std::uint64_t best = y;
  for (std::size_t i = 1; i < n; ++i) {
    const std::uint64_t r = rotate(y, n, i);
    if (less(r, best)) best = r;
  }
  return best;
}

std::uint64_t decimate(std::uint64_t y, std::size_t n, std::size_t a) noexcept {
  std::uint64_t out = 0;
  std::size_t src = 0;
  for (std::size_t t = 0; t < n; ++t) {
    out |= ((y >> src) & 1U) << t;
    src += a;
    if (src >= n) src -= n;
  }
  return out;
}

}  // namespace bits

}  // namespace hadalab
