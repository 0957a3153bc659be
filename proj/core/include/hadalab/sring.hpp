#pragma once

// Decimation-invariant subgroups I_n(a) = { Y : d_a Y = Y }.
//
// A family is carried by the cyclotomic-coset partition of its multiplier:
// Y belongs to I_n(a) exactly when its support is a union of cosets, so
// |I_n(a)| = 2^rank with rank the number of cosets. Families are never
// materialized except through the bounded enumerator.

#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "hadalab/binary_seq.hpp"
#include "hadalab/numth.hpp"

namespace hadalab::sring {

using numth::u64;

inline constexpr std::size_t kDefaultMaxRank = 30;
inline constexpr u64 kDefaultLatticeBound = 10000;

class InvariantFamily {
 public:
  // Throws NotAUnit unless gcd(a, n) = 1.
  InvariantFamily(u64 n, u64 a);

  u64 n() const noexcept { return partition_.n; }
  u64 a() const noexcept { return partition_.a; }
  const numth::CosetPartition& partition() const noexcept { return partition_; }
  std::size_t rank() const noexcept { return partition_.rank(); }

  // Member whose support is the union of the cosets selected by mask
  // (bit j picks cosets[j]); requires rank() <= 64.
  BinarySeq member_from_mask(std::uint64_t mask) const;

 private:
  numth::CosetPartition partition_;
};

// Codeword C_s X: the product of C^e X over every e in the coset of s.
// Built by operator composition, so its support is the negated coset.
BinarySeq codeword(const InvariantFamily& fam, u64 s);

// {C_s X : s a coset representative}, in representative order; the {0}
// coset contributes X itself.
std::vector<BinarySeq> code(u64 n, u64 a);

// Support-constancy test; throws LengthMismatch.
bool member(const BinarySeq& y, const InvariantFamily& fam);

// Deterministic enumeration of I_n(a): the k-th member selects the cosets
// named by the bits of k.
class FamilyRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = BinarySeq;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const InvariantFamily* fam, std::uint64_t counter) : fam_(fam), counter_(counter) {}

    BinarySeq operator*() const { return fam_->member_from_mask(counter_); }
    iterator& operator++() {
      ++counter_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++counter_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept { return a.counter_ == b.counter_; }

   private:
    const InvariantFamily* fam_ = nullptr;
    std::uint64_t counter_ = 0;
  };

  explicit FamilyRange(const InvariantFamily& fam) : fam_(&fam) {}

  iterator begin() const { return iterator(fam_, 0); }
  iterator end() const { return iterator(fam_, std::uint64_t{1} << fam_->rank()); }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << fam_->rank(); }

 private:
  const InvariantFamily* fam_;
};

// Throws RankTooLarge when fam.rank() > max_rank. The family must outlive the range.
FamilyRange enumerate(const InvariantFamily& fam, std::size_t max_rank = kDefaultMaxRank);

// I_n(a) subset of I_n(b): every <b>-coset lies inside one <a>-coset.
bool includes(u64 n, u64 a, u64 b);
bool includes(const numth::CosetPartition& pa, const numth::CosetPartition& pb);

struct LatticeNode {
  u64 generator = 0;          // minimal generator of the cyclic subgroup
  u64 order = 0;              // subgroup order
  std::vector<u64> elements;  // sorted subgroup elements

  friend bool operator==(const LatticeNode&, const LatticeNode&) = default;
};

// Hasse diagram of { I_n(a) } under inclusion; one node per cyclic subgroup
// of Z_n^*. An edge {lower, upper} means I_lower is covered by I_upper.
struct LatticeGraph {
  u64 n = 0;
  std::vector<LatticeNode> nodes;  // ordered by (order descending, generator)
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted
  std::size_t top = 0;             // index of I_n(1)

  std::vector<std::size_t> covers_of(std::size_t node) const;

  friend bool operator==(const LatticeGraph&, const LatticeGraph&) = default;
};

// Throws TooLarge when n > bound.
LatticeGraph lattice(u64 n, u64 bound = kDefaultLatticeBound);

std::string lattice_table(const LatticeGraph& g);
std::string lattice_dot(const LatticeGraph& g);

enum class SubwordTag { A, B, D, E, F };

char tag_letter(SubwordTag tag) noexcept;

struct TaggedCoset {
  std::vector<u64> coset;  // sorted
  SubwordTag tag;
  // For B and E: representative of the 2n-translate partner coset, else equal to coset.front().
  u64 partner = 0;

  friend bool operator==(const TaggedCoset&, const TaggedCoset&) = default;
};

struct SubwordCounts {
  std::size_t r = 0;  // A: fixed singletons without translate partner
  std::size_t s = 0;  // B: pairs of fixed singletons {b, b+2n}
  std::size_t t = 0;  // D: order-p cosets without translate partner
  std::size_t u = 0;  // E: pairs of order-p cosets {C, C+2n}
  std::size_t v = 0;  // F: order-p cosets with C + 2n = C

  friend bool operator==(const SubwordCounts&, const SubwordCounts&) = default;
};

struct SubwordClassification {
  u64 n4 = 0;
  u64 x = 0;
  u64 order = 0;  // multiplicative order p of x, the non-trivial coset size
  std::vector<TaggedCoset> buckets;  // one per support coset, by representative
  SubwordCounts counts;

  // r + 2s + p t + 2p u + p v
  std::size_t support_size_from_counts() const noexcept;

  friend bool operator==(const SubwordClassification&, const SubwordClassification&) = default;
};

// Tags every support coset of Y in I_{4n}(x). Throws BadModulus unless
// 4 | |Y|, NotInvariant if d_x Y != Y and BadOrder if the order of x is
// neither 1, 2 nor a prime.
SubwordClassification classify_subwords(const BinarySeq& y, u64 x);

struct TranslateCheck {
  BinarySeq shifted;   // C^{n/2} C_s X
  BinarySeq expected;  // C_{s+n/2} X
  u64 translated_rep = 0;
  bool holds = false;
};

// Half-period translate of the codeword C_s X in I_{2m}(a).
TranslateCheck c2n_translate(const InvariantFamily& fam, u64 s);

}  // namespace hadalab::sring
