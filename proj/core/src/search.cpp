#include "hadalab/search.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

#include "hadalab/error.hpp"
#include "hadalab/numth.hpp"
#include "hadalab/parallel.hpp"
#include "hadalab/sring.hpp"

namespace hadalab::search {

namespace {

using Clock = std::chrono::steady_clock;

void check_bound(std::size_t n, std::size_t bound, std::size_t hard, const char* what) {
  if (n == 0) throw Error(ErrorKind::TooLarge, std::string(what) + " length must be at least 1");
  if (n > std::min(bound, hard)) {
    throw Error(ErrorKind::TooLarge, std::string(what) + " length " + std::to_string(n) + " exceeds bound " +
                                         std::to_string(std::min(bound, hard)));
  }
}

// Numbers of -1 entries a circulant Hadamard sequence of length n may have:
// (sum of y)^2 = sum of P(k) = n, so n is a square r^2 and the -1 count is (n -+ r)/2.
std::vector<std::size_t> hadamard_minus_counts(std::size_t n) {
  if (n == 1) return {0, 1};
  if (!numth::is_perfect_square(n)) return {};
  const std::size_t r = numth::isqrt(n);
  return {(n - r) / 2, (n + r) / 2};
}

std::uint64_t rotation_count(std::uint64_t y, std::size_t n) {
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p == 0 && bits::rotate(y, n, p) == y) return p;
  }
  return n;
}

void sort_unique(std::vector<BinarySeq>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<BinarySeq> collapse_negations(const std::vector<BinarySeq>& reps) {
  std::vector<BinarySeq> out;
  out.reserve(reps.size());
  for (const auto& rep : reps) {
    BinarySeq neg = canonical_rotation(product(rep, BinarySeq::all_minus(rep.size()))).rep;
    out.push_back(std::min(rep, neg));
  }
  sort_unique(out);
  return out;
}

void verify_hadamard_hits(const std::vector<BinarySeq>& hits) {
  for (const auto& h : hits) {
    const AutocorrVector v = autocorr_vector(h);
    for (std::size_t k = 1; k < v.n; ++k) {
      if (v.values[k] != 0) throw Error(ErrorKind::ConstructionFailed, "emitted hit " + h.to_string() + " is not Hadamard");
    }
  }
}

struct TaskOutput {
  std::vector<std::uint64_t> hits;
  std::uint64_t nodes = 0;
};

}  // namespace

std::string_view kind_name(SearchKind kind) noexcept {
  switch (kind) {
    case SearchKind::HadamardFull: return "hadamard_full";
    case SearchKind::HadamardInvariant: return "hadamard_invariant";
    case SearchKind::Barker: return "barker";
  }
  return "unknown";
}

SearchResult hadamard_full(std::size_t n, const SearchOptions& opts) {
  check_bound(n, opts.hadamard_max_n, kHadamardFullHardLimit, "hadamard_full");
  const auto start = Clock::now();
  SearchResult result;
  result.kind = SearchKind::HadamardFull;
  result.n = n;
  result.params = {{"collapse_negation", opts.collapse_negation ? 1 : 0}};

  const std::vector<std::size_t> counts = hadamard_minus_counts(n);
  if (n == 1) {
    result.hits = {BinarySeq::parse("-"), BinarySeq::parse("+")};
    result.raw_count = 2;
    result.nodes_explored = 2;
  } else if (!counts.empty()) {
    // Every class with a -1 has a rotation starting with -1, and its canonical
    // rep is such a rotation, so y_0 = -1 is fixed and only masks equal to
    // their own canonical rotation are kept.
    const std::size_t prefix_bits = std::min<std::size_t>(n - 1, 10);
    const std::size_t tail_bits = n - 1 - prefix_bits;
    const std::size_t prefixes = std::size_t{1} << prefix_bits;
    std::vector<TaskOutput> out(counts.size() * prefixes);

    run_tasks(out.size(), opts.workers, [&](std::size_t task) {
      const std::size_t k = counts[task / prefixes];
      const std::uint64_t prefix = task % prefixes;
      const auto prefix_ones = static_cast<std::size_t>(__builtin_popcountll(prefix));
      if (k == 0 || prefix_ones + 1 > k || k - 1 - prefix_ones > tail_bits) return;
      const std::size_t need = k - 1 - prefix_ones;
      TaskOutput& slot = out[task];
      const std::uint64_t head = 1U | (prefix << 1);
      auto visit = [&](std::uint64_t tail) {
        const std::uint64_t y = head | (tail << (prefix_bits + 1));
        ++slot.nodes;
        if (bits::is_hadamard(y, n) && bits::canonical(y, n) == y) slot.hits.push_back(y);
      };
      if (need == 0) {
        visit(0);
        return;
      }
      // Gosper's hack over tail_bits-wide masks with `need` bits set.
      const std::uint64_t limit = tail_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail_bits);
      std::uint64_t x = (std::uint64_t{1} << need) - 1;
      while (x < limit) {
        visit(x);
        const std::uint64_t c = x & (~x + 1);
        const std::uint64_t r = x + c;
        if (r == 0) break;
        x = (((r ^ x) >> 2) / c) | r;
      }
    });

    for (const auto& slot : out) {
      result.nodes_explored += slot.nodes;
      for (std::uint64_t y : slot.hits) {
        result.hits.push_back(BinarySeq::from_mask(n, y));
        result.raw_count += rotation_count(y, n);
      }
    }
    sort_unique(result.hits);
  }

  verify_hadamard_hits(result.hits);
  if (opts.collapse_negation) result.hits = collapse_negations(result.hits);
  result.elapsed = Clock::now() - start;
  return result;
}

SearchResult hadamard_in_invariant(std::size_t n, std::uint64_t a, const SearchOptions& opts) {
  const auto start = Clock::now();
  const sring::InvariantFamily fam(n, a);
  const std::size_t bound = std::min(opts.max_rank, kInvariantHardRank);
  if (fam.rank() > bound) {
    throw Error(ErrorKind::RankTooLarge,
                "rank " + std::to_string(fam.rank()) + " of I_" + std::to_string(n) + "(" + std::to_string(a) +
                    ") exceeds bound " + std::to_string(bound));
  }
  SearchResult result;
  result.kind = SearchKind::HadamardInvariant;
  result.n = n;
  result.params = {{"a", static_cast<std::int64_t>(fam.a())}, {"rank", static_cast<std::int64_t>(fam.rank())}};

  const std::vector<std::size_t> counts = hadamard_minus_counts(n);
  if (!counts.empty()) {
    const auto& cosets = fam.partition().cosets;
    const std::size_t rank = cosets.size();
    const bool word = n <= 64;
    std::vector<std::size_t> sizes(rank);
    std::vector<std::uint64_t> masks(rank, 0);
    for (std::size_t j = 0; j < rank; ++j) {
      sizes[j] = cosets[j].size();
      if (word) {
        for (auto e : cosets[j]) masks[j] |= std::uint64_t{1} << e;
      }
    }
    // reach[j][s]: some subset of cosets j.. has total size s.
    std::vector<std::vector<char>> reach(rank + 1, std::vector<char>(n + 1, 0));
    reach[rank][0] = 1;
    for (std::size_t j = rank; j-- > 0;) {
      for (std::size_t s = 0; s <= n; ++s) {
        reach[j][s] = reach[j + 1][s] || (s >= sizes[j] && reach[j + 1][s - sizes[j]]);
      }
    }
    auto feasible = [&](std::size_t j, std::size_t sum) {
      for (std::size_t k : counts) {
        if (k >= sum && reach[j][k - sum]) return true;
      }
      return false;
    };

    struct InvariantTask {
      std::vector<std::uint64_t> selections;
      std::uint64_t nodes = 0;
    };
    const std::size_t prefix = std::min<std::size_t>(rank, 10);
    std::vector<InvariantTask> out(std::size_t{1} << prefix);

    run_tasks(out.size(), opts.workers, [&](std::size_t task) {
      InvariantTask& slot = out[task];
      std::size_t sum = 0;
      std::uint64_t y = 0;
      for (std::size_t j = 0; j < prefix; ++j) {
        if ((task >> j) & 1U) {
          sum += sizes[j];
          y |= masks[j];
        }
      }
      if (!feasible(prefix, sum)) return;
      // Depth-first over the remaining cosets with subset-sum pruning.
      auto dfs = [&](auto&& self, std::size_t j, std::size_t acc, std::uint64_t sel, std::uint64_t bitsy) -> void {
        if (j == rank) {
          if (std::find(counts.begin(), counts.end(), acc) == counts.end()) return;
          ++slot.nodes;
          const bool hit = word ? bits::is_hadamard(bitsy, n) : is_circulant_hadamard(fam.member_from_mask(sel));
          if (hit) slot.selections.push_back(sel);
          return;
        }
        if (!feasible(j, acc)) return;
        self(self, j + 1, acc, sel, bitsy);
        self(self, j + 1, acc + sizes[j], sel | (std::uint64_t{1} << j), bitsy | masks[j]);
      };
      dfs(dfs, prefix, sum, static_cast<std::uint64_t>(task), y);
    });

    for (const auto& slot : out) {
      result.nodes_explored += slot.nodes;
      for (std::uint64_t sel : slot.selections) result.members.push_back(fam.member_from_mask(sel));
    }
    sort_unique(result.members);
    for (const auto& m : result.members) {
      if (!sring::member(m, fam) || decimate(m, static_cast<std::int64_t>(fam.a())) != m) {
        throw Error(ErrorKind::ConstructionFailed, "emitted member " + m.to_string() + " is not invariant");
      }
      result.hits.push_back(canonical_rotation(m).rep);
    }
    result.raw_count = result.members.size();
    sort_unique(result.hits);
  }

  verify_hadamard_hits(result.members);
  if (opts.collapse_negation) result.hits = collapse_negations(result.hits);
  result.elapsed = Clock::now() - start;
  return result;
}

namespace {

// Two-ended branch and bound. Step j assigns a_j and a_{n-1-j}; afterwards
// shift n-1-j has all of its products and must satisfy |C(k)| <= 1. Partial
// sums per shift also give the cut |partial| - missing > 1.
class BarkerSearch {
 public:
  explicit BarkerSearch(std::size_t n) : n_(n), a_(n, 0), partial_(n, 0), assigned_pairs_(n, 0) {}

  std::size_t n() const noexcept { return n_; }

  // Assigns position pos; returns false (and leaves state untouched) if a
  // bound is violated.
  bool place(std::size_t pos, int value) {
    a_[pos] = value;
    touched_.clear();
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == pos || a_[i] == 0) continue;
      const std::size_t k = i > pos ? i - pos : pos - i;
      partial_[k] += a_[i] * value;
      ++assigned_pairs_[k];
      touched_.push_back(k);
    }
    for (std::size_t k : touched_) {
      const int missing = static_cast<int>(n_ - k - assigned_pairs_[k]);
      if (std::abs(partial_[k]) - missing > 1) {
        unplace(pos);
        return false;
      }
    }
    return true;
  }

  void unplace(std::size_t pos) {
    const int value = a_[pos];
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == pos || a_[i] == 0) continue;
      const std::size_t k = i > pos ? i - pos : pos - i;
      partial_[k] -= a_[i] * value;
      --assigned_pairs_[k];
    }
    a_[pos] = 0;
  }

  std::uint64_t mask() const noexcept {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (a_[i] < 0) m |= std::uint64_t{1} << i;
    }
    return m;
  }

  // Continue from step j (positions j and n-1-j unassigned).
  void run(std::size_t j, std::vector<std::uint64_t>& hits, std::uint64_t& nodes) {
    ++nodes;
    if (2 * j >= n_) {
      hits.push_back(mask());
      return;
    }
    const std::size_t left = j;
    const std::size_t right = n_ - 1 - j;
    for (int lv : {1, -1}) {
      if (left == 0 && lv < 0) continue;  // a_0 = +1
      if (!place(left, lv)) continue;
      if (left == right) {
        run(j + 1, hits, nodes);
      } else {
        for (int rv : {1, -1}) {
          if (!place(right, rv)) continue;
          run(j + 1, hits, nodes);
          unplace(right);
        }
      }
      unplace(left);
    }
  }

  // Applies the first `steps` steps from a prefix code; returns false if pruned.
  bool apply_prefix(std::size_t steps, std::uint64_t code) {
    for (std::size_t j = 0; j < steps; ++j) {
      const std::size_t left = j;
      const std::size_t right = n_ - 1 - j;
      const int lv = ((code >> (2 * j)) & 1U) ? -1 : 1;
      const int rv = ((code >> (2 * j + 1)) & 1U) ? -1 : 1;
      if (left == 0 && lv < 0) return false;
      if (!place(left, lv)) return false;
      if (left != right && !place(right, rv)) return false;
      if (left == right && rv < 0) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<int> a_;
  std::vector<int> partial_;
  std::vector<std::size_t> assigned_pairs_;
  std::vector<std::size_t> touched_;
};

}  // namespace

SearchResult barker(std::size_t n, const SearchOptions& opts) {
  check_bound(n, opts.barker_max_n, kBarkerHardLimit, "barker");
  const auto start = Clock::now();
  SearchResult result;
  result.kind = SearchKind::Barker;
  result.n = n;
  result.params = {{"expand_symmetries", opts.expand_symmetries ? 1 : 0}};

  const std::size_t steps = (n + 1) / 2;
  const std::size_t prefix_steps = std::min<std::size_t>(steps, 4);
  const std::size_t tasks = std::size_t{1} << (2 * prefix_steps);
  std::vector<TaskOutput> out(tasks);
  run_tasks(tasks, opts.workers, [&](std::size_t task) {
    BarkerSearch s(n);
    if (!s.apply_prefix(prefix_steps, task)) return;
    s.run(prefix_steps, out[task].hits, out[task].nodes);
  });

  for (const auto& slot : out) {
    result.nodes_explored += slot.nodes;
    for (std::uint64_t m : slot.hits) result.hits.push_back(BinarySeq::from_mask(n, m));
  }
  if (opts.expand_symmetries) {
    const std::size_t base = result.hits.size();
    for (std::size_t i = 0; i < base; ++i) {
      const BinarySeq neg = product(result.hits[i], BinarySeq::all_minus(n));
      result.hits.push_back(neg);
      result.hits.push_back(reverse(result.hits[i]));
      result.hits.push_back(reverse(neg));
    }
  }
  sort_unique(result.hits);
  for (const auto& h : result.hits) {
    for (std::size_t k = 1; k < n; ++k) {
      if (std::abs(aperiodic_autocorr(h, k)) > 1) {
        throw Error(ErrorKind::ConstructionFailed, "emitted hit " + h.to_string() + " is not Barker");
      }
    }
  }
  result.raw_count = result.hits.size();
  result.elapsed = Clock::now() - start;
  return result;
}

OrbitReport orbit_under_decimation(const BinarySeq& y) {
  const std::size_t n = y.size();
  OrbitReport report;
  report.seed = canonical_rotation(y);
  report.reversal = canonical_rotation(reverse(y));
  const numth::UnitGroupInfo units = numth::unit_group(n);
  report.group_order = units.phi;
  for (std::uint64_t a : units.units) {
    const CyclicClass image = n == 1 ? report.seed : canonical_rotation(decimate(report.seed.rep, static_cast<std::int64_t>(a)));
    if (image == report.seed) report.stabilizer.push_back(a);
    report.orbit.push_back(image);
  }
  std::sort(report.orbit.begin(), report.orbit.end());
  report.orbit.erase(std::unique(report.orbit.begin(), report.orbit.end()), report.orbit.end());
  report.reversal_hit = std::binary_search(report.orbit.begin(), report.orbit.end(), report.reversal);
  return report;
}

}  // namespace hadalab::search
