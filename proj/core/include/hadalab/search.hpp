#pragma once

// Exhaustive searches: circulant Hadamard sequences over the whole space or
// restricted to a family I_n(a), Barker sequences, and decimation orbits of
// cyclic classes.
//
// Every search splits its space into fixed prefixes, runs them as
// independent tasks and merges hits in canonical order, so results do not
// depend on the worker count.

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hadalab/binary_seq.hpp"

namespace hadalab::search {

enum class SearchKind { HadamardFull, HadamardInvariant, Barker };

std::string_view kind_name(SearchKind kind) noexcept;

inline constexpr std::size_t kHadamardFullMaxN = 32;
inline constexpr std::size_t kBarkerMaxN = 28;
inline constexpr std::size_t kInvariantMaxRank = 30;
// Hard limits of the single-word kernels.
inline constexpr std::size_t kHadamardFullHardLimit = 64;
inline constexpr std::size_t kBarkerHardLimit = 64;
inline constexpr std::size_t kInvariantHardRank = 40;

struct SearchOptions {
  unsigned workers = 1;
  std::size_t hadamard_max_n = kHadamardFullMaxN;
  std::size_t barker_max_n = kBarkerMaxN;
  std::size_t max_rank = kInvariantMaxRank;
  // Report a Hadamard class and its negation as one class (the smaller rep).
  bool collapse_negation = false;
  // Close Barker hits under negation and reversal.
  bool expand_symmetries = false;
};

struct SearchResult {
  SearchKind kind = SearchKind::HadamardFull;
  std::size_t n = 0;
  std::vector<std::pair<std::string, std::int64_t>> params;
  // Canonical rotations for Hadamard searches, sequences for Barker.
  std::vector<BinarySeq> hits;
  // Hadamard members of the family (invariant search only), sorted.
  std::vector<BinarySeq> members;
  // Raw sequences represented by the hits (all rotations for full search).
  std::uint64_t raw_count = 0;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

// All cyclic classes of circulant Hadamard sequences of length n.
// Throws TooLarge when n exceeds opts.hadamard_max_n.
SearchResult hadamard_full(std::size_t n, const SearchOptions& opts = {});

// Hadamard members of I_n(a). Throws NotAUnit, RankTooLarge.
SearchResult hadamard_in_invariant(std::size_t n, std::uint64_t a, const SearchOptions& opts = {});

// Barker sequences of length n with a_0 = +1 (unless expanded).
// Throws TooLarge when n exceeds opts.barker_max_n.
SearchResult barker(std::size_t n, const SearchOptions& opts = {});

struct OrbitReport {
  CyclicClass seed{BinarySeq(1)};
  std::vector<CyclicClass> orbit;         // sorted, distinct
  std::vector<std::uint64_t> stabilizer;  // units a with d_a(seed) in the seed class
  CyclicClass reversal{BinarySeq(1)};     // class of R(seed)
  bool reversal_hit = false;              // reversal lies in the orbit
  std::uint64_t group_order = 0;          // phi(n)
};

OrbitReport orbit_under_decimation(const BinarySeq& y);

}  // namespace hadalab::search
