#include "hadalab/audit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "hadalab/error.hpp"
#include "hadalab/families.hpp"
#include "hadalab/numth.hpp"
#include "hadalab/parallel.hpp"
#include "hadalab/search.hpp"
#include "hadalab/sring.hpp"

namespace hadalab::audit {

namespace {

using numth::u64;
using json = nlohmann::ordered_json;

// Accumulates counters and witnesses for one claim.
class Tally {
 public:
  Tally(std::string id, std::size_t cap) : cap_(cap) { report_.claim_id = std::move(id); }

  void check() { ++report_.checked; }
  void held() { ++report_.hypothesis_held; }
  void fail(std::string witness) {
    failed_ = true;
    if (cap_ == 0 || report_.witnesses.size() < cap_) report_.witnesses.push_back(std::move(witness));
  }
  bool failed() const { return failed_; }

  AuditReport finish(std::string params, std::string notes = {}) {
    report_.params = std::move(params);
    report_.notes = std::move(notes);
    if (failed_) {
      report_.status = Status::Fail;
    } else if (report_.hypothesis_held == 0) {
      report_.status = Status::Vacuous;
    } else {
      report_.status = Status::Pass;
    }
    return std::move(report_);
  }

 private:
  AuditReport report_;
  std::size_t cap_;
  bool failed_ = false;
};

std::string seq_str(std::uint64_t mask, std::size_t n) { return BinarySeq::from_mask(n, mask).to_string(); }

std::string join(const std::vector<u64>& values, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::uint64_t reverse_mask(std::uint64_t y, std::size_t n) {
  std::uint64_t out = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if ((y >> t) & 1U) out |= std::uint64_t{1} << (n - 1 - t);
  }
  return out;
}

std::int64_t as_signed(u64 v) { return static_cast<std::int64_t>(v); }

BinarySeq random_seq(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint64_t> words((n + 63) / 64);
  for (auto& w : words) w = rng();
  return BinarySeq::from_words(n, std::move(words));
}

u64 random_unit(std::mt19937_64& rng, u64 n) {
  if (n == 1) return 0;
  for (;;) {
    const u64 r = rng() % n;
    if (numth::gcd(r, n) == 1) return r;
  }
}

// ---------------------------------------------------------------- algebra

// reverse-decimate: d_r R = R d_r C^{r-1}
// reverse-shift:    R C = C^{n-1} R
// shift-decimate:   C^i d_r = d_r C^{ir}
void check_commutations(Tally& tally, const Actions& act, const BinarySeq& y, u64 r, std::int64_t i) {
  const std::size_t n = y.size();
  const auto sr = as_signed(r);
  tally.check();
  tally.held();
  if (act.decimate(act.reverse(y), sr) != act.reverse(act.decimate(act.shift(y, sr - 1), sr))) {
    tally.fail("reverse-decimate n=" + std::to_string(n) + " r=" + std::to_string(r) + " Y=" + y.to_string());
  }
  if (act.reverse(act.shift(y, 1)) != act.shift(act.reverse(y), static_cast<std::int64_t>(n) - 1)) {
    tally.fail("reverse-shift n=" + std::to_string(n) + " Y=" + y.to_string());
  }
  const std::int64_t ir = static_cast<std::int64_t>(numth::mul_mod(static_cast<u64>(((i % as_signed(n)) + as_signed(n)) % as_signed(n)), r, n));
  if (act.shift(act.decimate(y, sr), i) != act.decimate(act.shift(y, ir), sr)) {
    tally.fail("shift-decimate n=" + std::to_string(n) + " r=" + std::to_string(r) + " i=" + std::to_string(i) + " Y=" + y.to_string());
  }
}

void check_autocorr_decimation(Tally& tally, const Actions& act, const BinarySeq& y, u64 r) {
  const std::size_t n = y.size();
  tally.check();
  tally.held();
  const AutocorrVector lhs = autocorr_vector(act.decimate(y, as_signed(r)));
  const AutocorrVector base = autocorr_vector(y);
  for (std::size_t k = 0; k < n; ++k) {
    if (lhs.values[k] != base.values[numth::mul_mod(k, r, n)]) {
      tally.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " k=" + std::to_string(k) + " Y=" + y.to_string());
      return;
    }
  }
}

std::string algebra_params(const AuditConfig& cfg) {
  return "n<=" + std::to_string(cfg.algebra_exhaustive_max) + " exhaustive; " + std::to_string(cfg.algebra_random_cases) +
         " random cases n<=" + std::to_string(cfg.algebra_random_max_n) + " seed=" + std::to_string(cfg.seed);
}

AuditReport claim_commutations(const AuditConfig& cfg, const Actions& act) {
  Tally tally("eq-commutations", cfg.witness_cap);
  for (std::size_t n = 1; n <= cfg.algebra_exhaustive_max; ++n) {
    const auto units = numth::unit_group(n).units;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const BinarySeq y = BinarySeq::from_mask(n, m);
      for (u64 r : units) {
        for (std::size_t i = 0; i < n; ++i) check_commutations(tally, act, y, r, static_cast<std::int64_t>(i));
      }
    }
  }
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t c = 0; c < cfg.algebra_random_cases; ++c) {
    const std::size_t n = 1 + rng() % cfg.algebra_random_max_n;
    const BinarySeq y = random_seq(rng, n);
    const u64 r = random_unit(rng, n);
    const std::int64_t i = static_cast<std::int64_t>(rng() % (3 * n)) - static_cast<std::int64_t>(n);
    check_commutations(tally, act, y, r, i);
  }
  return tally.finish(algebra_params(cfg), "relations reverse-decimate d_rR=Rd_rC^{r-1}, reverse-shift RC=C^{n-1}R, shift-decimate C^id_r=d_rC^{ir}");
}

AuditReport claim_autocorr_decimation(const AuditConfig& cfg, const Actions& act) {
  Tally tally("diagram-autocorr-decimation", cfg.witness_cap);
  for (std::size_t n = 1; n <= cfg.algebra_exhaustive_max; ++n) {
    const auto units = numth::unit_group(n).units;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      const BinarySeq y = BinarySeq::from_mask(n, m);
      for (u64 r : units) check_autocorr_decimation(tally, act, y, r);
    }
  }
  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t c = 0; c < cfg.algebra_random_cases; ++c) {
    const std::size_t n = 1 + rng() % cfg.algebra_random_max_n;
    const BinarySeq y = random_seq(rng, n);
    check_autocorr_decimation(tally, act, y, random_unit(rng, n));
  }
  return tally.finish(algebra_params(cfg), "P_{d_r Y}(k) = P_Y(rk)");
}

// ------------------------------------------------------------------ sring

std::size_t sring_cap(const AuditConfig& cfg) { return std::min<std::size_t>(cfg.sring_n_max, 40); }

AuditReport claim_decimation_code(const AuditConfig& cfg) {
  Tally tally("lemma-decimation-code", cfg.witness_cap);
  const std::size_t n_max = std::min(sring_cap(cfg), cfg.bruteforce_n_max);
  for (u64 n = 1; n <= n_max; ++n) {
    const auto units = numth::unit_group(n).units;
    for (u64 a : units) {
      const sring::InvariantFamily fam(n, a);
      for (u64 r : units) {
        const u64 r_inv = n == 1 ? 0 : numth::inverse_mod(r, n);
        for (u64 s : fam.partition().reps) {
          tally.check();
          tally.held();
          const BinarySeq lhs = decimate(sring::codeword(fam, s), as_signed(r));
          const BinarySeq rhs = sring::codeword(fam, numth::mul_mod(s, r_inv, n));
          if (lhs != rhs) {
            tally.fail("n=" + std::to_string(n) + " a=" + std::to_string(a) + " r=" + std::to_string(r) + " s=" +
                       std::to_string(s));
          }
        }
      }
    }
  }
  return tally.finish("n<=" + std::to_string(n_max) + ", all units a, r and coset reps s",
                      "d_r C_s X = C_{s r^{-1}} X");
}

// Exhaustive subset check: every member of I_n(a) is fixed by d_b.
bool brute_includes(const numth::CosetPartition& pa, u64 b) {
  const std::size_t n = pa.n;
  std::vector<std::uint64_t> coset_masks;
  for (const auto& c : pa.cosets) {
    std::uint64_t m = 0;
    for (u64 e : c) m |= std::uint64_t{1} << e;
    coset_masks.push_back(m);
  }
  const std::uint64_t total = std::uint64_t{1} << coset_masks.size();
  std::uint64_t member = 0;
  for (std::uint64_t k = 1; k < total; ++k) {
    member ^= coset_masks[static_cast<std::size_t>(__builtin_ctzll(k))];
    if (bits::decimate(member, n, b) != member) return false;
  }
  return true;
}

AuditReport claim_inclusion(const AuditConfig& cfg) {
  Tally tally("thm-inclusion", cfg.witness_cap);
  const std::size_t n_max = sring_cap(cfg);
  const std::size_t brute_max = std::min<std::size_t>({cfg.bruteforce_n_max, n_max, 63});
  std::uint64_t outside = 0;
  std::uint64_t converse = 0;
  std::uint64_t brute_pairs = 0;
  for (u64 n = 1; n <= n_max; ++n) {
    const auto units = numth::unit_group(n).units;
    std::vector<numth::CosetPartition> parts;
    std::vector<std::vector<u64>> groups;
    for (u64 a : units) {
      parts.push_back(numth::cyclotomic_cosets(a, n));
      groups.push_back(numth::cyclic_subgroup(a, n));
    }
    for (std::size_t i = 0; i < units.size(); ++i) {
      for (std::size_t j = 0; j < units.size(); ++j) {
        const u64 a = units[i];
        const u64 b = units[j];
        tally.check();
        const bool hyp = std::binary_search(groups[i].begin(), groups[i].end(), b);
        const bool fast = sring::includes(parts[i], parts[j]);
        const std::string where = "n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
        if (hyp) {
          tally.held();
          if (!fast) tally.fail(where + ": <b> <= <a> but I_n(a) not inside I_n(b)");
        } else {
          ++outside;
          if (fast) ++converse;
        }
        if (n <= brute_max) {
          ++brute_pairs;
          if (brute_includes(parts[i], b) != fast) tally.fail(where + ": refinement and subset enumeration disagree");
        }
      }
    }
  }
  std::string notes = "pairs with <b> not in <a>: " + std::to_string(outside) + " (hypothesis false, not asserted); of these " +
                      std::to_string(converse) + " still have I_n(a) inside I_n(b); " + std::to_string(brute_pairs) +
                      " pairs cross-checked by subset enumeration";
  return tally.finish("n<=" + std::to_string(n_max) + " all unit pairs; brute force n<=" + std::to_string(brute_max),
                      std::move(notes));
}

AuditReport claim_code_order(const AuditConfig& cfg) {
  Tally tally("code-order", cfg.witness_cap);
  const std::size_t n_max = std::min<std::size_t>(cfg.code_order_n_max, 24);
  for (u64 n = 1; n <= n_max; ++n) {
    for (u64 a : numth::unit_group(n).units) {
      const sring::InvariantFamily fam(n, a);
      tally.check();
      tally.held();
      std::vector<std::uint64_t> masks;
      bool invariant = true;
      for (const BinarySeq& y : sring::enumerate(fam, 64)) {
        if (decimate(y, as_signed(a)) != y) invariant = false;
        masks.push_back(y.mask());
      }
      std::sort(masks.begin(), masks.end());
      masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
      const std::uint64_t expected = std::uint64_t{1} << fam.rank();
      if (masks.size() != expected || !invariant) {
        tally.fail("n=" + std::to_string(n) + " a=" + std::to_string(a) + " distinct=" + std::to_string(masks.size()) +
                   " expected=" + std::to_string(expected));
      }
    }
  }
  return tally.finish("n<=" + std::to_string(n_max) + ", all units a",
                      "audited as |<code>| = 2^(number of cosets, the {0} coset included); the stated 2^{r+1} "
                      "matches only if r counts the nonzero cosets");
}

AuditReport claim_prop_size(const AuditConfig& cfg) {
  Tally tally("prop-2n+1-size", cfg.witness_cap);
  const std::size_t n_max = sring_cap(cfg) / 4;
  std::size_t enumerated_max = 0;
  for (u64 n = 1; n <= n_max; ++n) {
    const u64 N = 4 * n;
    const sring::InvariantFamily fam(N, 2 * n + 1);
    tally.check();
    tally.held();
    const std::string where = "4n=" + std::to_string(N) + " x=" + std::to_string(2 * n + 1);
    if (3 * n <= cfg.prop_enum_max_rank && N <= 64) {
      enumerated_max = static_cast<std::size_t>(n);
      std::vector<std::uint64_t> masks;
      for (const BinarySeq& y : sring::enumerate(fam, 64)) {
        if (decimate(y, as_signed(2 * n + 1)) != y) tally.fail(where + " non-invariant member " + y.to_string());
        masks.push_back(y.mask());
      }
      std::sort(masks.begin(), masks.end());
      masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
      if (masks.size() != (std::uint64_t{1} << (3 * n))) {
        tally.fail(where + " size=" + std::to_string(masks.size()) + " expected 2^" + std::to_string(3 * n));
      }
    } else if (fam.rank() != 3 * n) {
      tally.fail(where + " rank=" + std::to_string(fam.rank()) + " expected " + std::to_string(3 * n));
    }
  }
  return tally.finish("n=1.." + std::to_string(n_max),
                      "enumerated for n<=" + std::to_string(enumerated_max) + ", coset count beyond");
}

AuditReport claim_cn_translate(const AuditConfig& cfg) {
  Tally tally("lemma-cn-translate", cfg.witness_cap);
  const std::size_t n_max = sring_cap(cfg);
  for (u64 n = 2; n <= n_max; n += 2) {
    for (u64 a : numth::unit_group(n).units) {
      const sring::InvariantFamily fam(n, a);
      for (u64 s = 0; s < n; ++s) {
        tally.check();
        tally.held();
        if (!sring::c2n_translate(fam, s).holds) {
          tally.fail("n=" + std::to_string(n) + " a=" + std::to_string(a) + " s=" + std::to_string(s));
        }
      }
    }
  }
  return tally.finish("even n<=" + std::to_string(n_max) + ", all units a, all s",
                      "C^{n/2} C_s X = C_{s+n/2} X inside I_n(a)");
}

bool classifiable_order(u64 order) { return order == 1 || order == 2 || numth::is_prime(order); }

AuditReport claim_structure(const AuditConfig& cfg) {
  Tally tally("lemma-structure-preserved", cfg.witness_cap);
  const std::size_t n_max = std::min<std::size_t>(sring_cap(cfg), 64);
  std::mt19937_64 rng(cfg.seed ^ 0x5151);
  for (u64 N = 4; N <= n_max; N += 4) {
    const auto ug = numth::unit_group(N);
    for (std::size_t xi = 0; xi < ug.units.size(); ++xi) {
      const u64 x = ug.units[xi];
      const u64 order = ug.orders[xi];
      if (!classifiable_order(order)) continue;
      const sring::InvariantFamily fam(N, x);
      std::vector<std::uint64_t> picks;
      if (fam.rank() <= 12 && (std::uint64_t{1} << fam.rank()) <= cfg.structure_sample * 64) {
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << fam.rank()); ++k) picks.push_back(k);
      } else {
        for (std::size_t k = 0; k < cfg.structure_sample; ++k) picks.push_back(rng() & bits::low_mask(fam.rank()));
      }
      for (std::uint64_t pick : picks) {
        const BinarySeq y = fam.member_from_mask(pick);
        const sring::SubwordClassification base = sring::classify_subwords(y, x);
        if (base.support_size_from_counts() != y.minus_count()) {
          tally.fail("4n=" + std::to_string(N) + " x=" + std::to_string(x) + " Y=" + y.to_string() + " size identity");
        }
        std::map<u64, sring::SubwordTag> tag_of;
        for (const auto& b : base.buckets) tag_of[b.coset.front()] = b.tag;
        for (u64 p : ug.units) {
          tally.check();
          tally.held();
          const BinarySeq image = decimate(y, as_signed(p));
          const sring::SubwordClassification moved = sring::classify_subwords(image, x);
          bool same = moved.counts == base.counts;
          // supp(d_p Y) = p^{-1} supp(Y); each coset must keep its tag.
          const u64 p_inv = numth::inverse_mod(p, N);
          std::map<u64, sring::SubwordTag> moved_tag;
          // A B or E bucket also stands for its translate partner coset.
          for (const auto& b : moved.buckets) {
            moved_tag[b.coset.front()] = b.tag;
            moved_tag[b.partner] = b.tag;
          }
          for (const auto& b : base.buckets) {
            u64 rep = N;
            for (u64 e : b.coset) rep = std::min(rep, numth::mul_mod(e, p_inv, N));
            const auto it = moved_tag.find(rep);
            if (it == moved_tag.end() || it->second != b.tag) same = false;
          }
          if (!same) {
            tally.fail("4n=" + std::to_string(N) + " x=" + std::to_string(x) + " p=" + std::to_string(p) + " Y=" + y.to_string());
          }
        }
      }
    }
  }
  return tally.finish("4n<=" + std::to_string(n_max) + ", x of order 1, 2 or prime, all units p; families of rank<=12 "
                      "exhaustive, else " + std::to_string(cfg.structure_sample) + " sampled members",
                      "tags A,B,D,E,F and counts (r,s,t,u,v) preserved by d_p; |supp| = r+2s+pt+2pu+pv");
}

// ----------------------------------------------------------------- numth

AuditReport claim_mu(const AuditConfig& cfg) {
  Tally tally("mu-sunze", cfg.witness_cap);
  for (u64 N = 4; N <= cfg.mu_max; N += 4) {
    tally.check();
    tally.held();
    const numth::MuCount mu = numth::mu_count(N);
    if (mu.by_enumeration != mu.by_formula) {
      tally.fail("N=" + std::to_string(N) + " enumeration=" + std::to_string(mu.by_enumeration) +
                 " formula=" + std::to_string(mu.by_formula));
    }
  }
  return tally.finish("N = 0 mod 4, N<=" + std::to_string(cfg.mu_max), "#{x : x^2 = 1 mod N} vs closed form");
}

// -------------------------------------------------------------- hadamard

AuditReport claim_reversal(const AuditConfig& cfg) {
  Tally tally("thm-reversal-membership", cfg.witness_cap);
  const std::size_t n_max = std::min<std::size_t>(cfg.reversal_n_max, 24);
  std::uint64_t class_level = 0;
  std::string violations;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::uint64_t> canon(total);
    for (std::uint64_t m = 0; m < total; ++m) canon[m] = bits::canonical(m, n);
    std::vector<u64> bad_x;
    for (u64 x : numth::unit_group(n).units) {
      if (x == 1 || x == n - 1 || n <= 2) continue;
      bool bad = false;
      for (std::uint64_t y = 0; y < total; ++y) {
        tally.check();
        if (canon[bits::decimate(y, n, x)] != canon[reverse_mask(y, n)]) continue;
        tally.held();
        bool rotation_member = false;
        for (std::size_t i = 0; i < n && !rotation_member; ++i) {
          const std::uint64_t r = bits::rotate(y, n, i);
          rotation_member = bits::decimate(r, n, n - x) == r;
        }
        if (rotation_member) ++class_level;
        if (bits::decimate(y, n, n - x) != y) {
          bad = true;
          tally.fail("n=" + std::to_string(n) + " x=" + std::to_string(x) + " Y=" + seq_str(y, n) +
                     ": d_x Y_C = R Y_C but d_{n-x} Y != Y");
        }
      }
      if (bad) bad_x.push_back(x);
    }
    if (!bad_x.empty()) {
      if (!violations.empty()) violations += "; ";
      violations += "n=" + std::to_string(n) + " x={" + join(bad_x) + "}";
    }
  }
  std::string notes = "sequence-level conclusion; " + std::to_string(class_level) +
                      " hypothesis instances have some rotation in I_n(n-x)";
  notes += violations.empty() ? "; no violating x" : "; violating x: " + violations;
  return tally.finish("n<=" + std::to_string(n_max) + " all Y, units x not in {1, n-1}", std::move(notes));
}

AuditReport claim_fixed(const AuditConfig& cfg) {
  Tally tally("thm-fixed-not-hadamard", cfg.witness_cap);
  std::string skipped;
  for (std::size_t N : cfg.hadamard_orders) {
    if (N > 64) {
      skipped += " " + std::to_string(N);
      continue;
    }
    // Orbits of Z_N under the whole unit group, by union-find.
    std::vector<std::size_t> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
      return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (u64 x : numth::unit_group(N).units) {
      for (std::size_t s = 0; s < N; ++s) parent[find(s)] = find(numth::mul_mod(s, x, N));
    }
    std::map<std::size_t, std::uint64_t> orbit_masks;
    for (std::size_t s = 0; s < N; ++s) orbit_masks[find(s)] |= std::uint64_t{1} << s;
    std::vector<std::uint64_t> masks;
    for (const auto& [root, m] : orbit_masks) masks.push_back(m);
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << masks.size()); ++k) {
      std::uint64_t h = 0;
      for (std::size_t j = 0; j < masks.size(); ++j) {
        if ((k >> j) & 1U) h |= masks[j];
      }
      tally.check();
      tally.held();
      if (bits::is_hadamard(h, N)) tally.fail("4n=" + std::to_string(N) + " H=" + seq_str(h, N) + " is Hadamard");
    }
  }
  std::string notes = "members of the intersection of all I_4n(x) tested for Hadamard";
  if (!skipped.empty()) notes += "; skipped 4n>64:" + skipped;
  return tally.finish("4n in {" + join(std::vector<u64>(cfg.hadamard_orders.begin(), cfg.hadamard_orders.end())) + "}",
                      std::move(notes));
}

AuditReport claim_orbit(const AuditConfig& cfg) {
  Tally tally("thm-orbit-2", cfg.witness_cap);
  std::string sizes;
  std::vector<u64> searched;
  search::SearchOptions opts;
  opts.workers = cfg.workers;
  for (std::size_t N : cfg.hadamard_orders) {
    if (N > opts.hadamard_max_n) continue;
    searched.push_back(N);
    for (const BinarySeq& h : search::hadamard_full(N, opts).hits) {
      tally.check();
      tally.held();
      const search::OrbitReport rep = search::orbit_under_decimation(h);
      std::vector<CyclicClass> expected{rep.seed, rep.reversal};
      std::sort(expected.begin(), expected.end());
      expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
      if (rep.orbit != expected) {
        tally.fail("4n=" + std::to_string(N) + " H=" + h.to_string() + " orbit size " + std::to_string(rep.orbit.size()));
      }
      if (!sizes.empty()) sizes += ", ";
      sizes += h.to_string() + ":" + std::to_string(rep.orbit.size());
    }
  }
  std::string notes = "set identity orbit = {H_C, RH_C} on every Hadamard class found";
  if (!sizes.empty()) notes += "; orbit sizes " + sizes + " (size 1 means RH_C = H_C, so the set has one element)";
  return tally.finish("full search 4n in {" + join(searched) + "}", std::move(notes));
}

AuditReport claim_two_level(const AuditConfig& cfg) {
  Tally tally("remark-2level", cfg.witness_cap);
  std::vector<std::pair<std::string, families::TwoLevelSeq>> cases;
  cases.emplace_back("legendre(7)", families::legendre(7));
  cases.emplace_back("legendre(11)", families::legendre(11));
  cases.emplace_back("mseq(4)", families::mseq(4));
  cases.emplace_back("mseq(5)", families::mseq(5));
  std::string sizes;
  for (const auto& [name, t] : cases) {
    tally.check();
    if (!families::two_level_offpeak(t.seq)) continue;
    tally.held();
    const auto rep = search::orbit_under_decimation(t.seq);
    if (!sizes.empty()) sizes += ", ";
    sizes += name + ":" + std::to_string(rep.orbit.size());
    if (rep.orbit.size() > 2) {
      tally.fail(name + " n=" + std::to_string(t.n) + " orbit size " + std::to_string(rep.orbit.size()) + " > 2 Y=" +
                 t.seq.to_string());
    }
  }
  return tally.finish("legendre(7), legendre(11), mseq(4), mseq(5)", "orbit sizes " + sizes);
}

enum class MultiplierKind { OddPrime, OrderTwo, HalfPlusOne };

AuditReport claim_invariant(const AuditConfig& cfg, MultiplierKind kind, const char* id) {
  Tally tally(id, cfg.witness_cap);
  search::SearchOptions opts;
  opts.workers = cfg.workers;
  opts.max_rank = std::min(cfg.invariant_max_rank, search::kInvariantHardRank);
  std::string searched;
  std::string skipped;
  for (std::size_t N : cfg.hadamard_orders) {
    if (N % 4 != 0) continue;
    const auto ug = numth::unit_group(N);
    std::set<std::vector<u64>> seen;
    for (std::size_t i = 0; i < ug.units.size(); ++i) {
      const u64 x = ug.units[i];
      const u64 order = ug.orders[i];
      bool wanted = false;
      switch (kind) {
        case MultiplierKind::OddPrime: wanted = order > 2 && numth::is_prime(order); break;
        case MultiplierKind::OrderTwo: wanted = order == 2 && x != N / 2 + 1; break;
        case MultiplierKind::HalfPlusOne: wanted = x == N / 2 + 1; break;
      }
      if (!wanted || !seen.insert(numth::cyclic_subgroup(x, N)).second) continue;
      tally.check();
      const sring::InvariantFamily fam(N, x);
      const std::string where = "4n=" + std::to_string(N) + " x=" + std::to_string(x);
      if (fam.rank() > opts.max_rank || N > search::kHadamardFullHardLimit) {
        skipped += " " + where + "(rank " + std::to_string(fam.rank()) + ")";
        continue;
      }
      tally.held();
      searched += (searched.empty() ? "" : " ") + std::to_string(N) + ":" + std::to_string(x);
      const search::SearchResult res = search::hadamard_in_invariant(N, x, opts);
      for (const BinarySeq& h : res.members) tally.fail(where + " H=" + h.to_string() + " is Hadamard");
    }
  }
  std::string notes = "searched (4n:x) " + (searched.empty() ? std::string("none") : searched);
  if (!skipped.empty()) notes += "; skipped over rank bound:" + skipped;
  return tally.finish("4n in {" + join(std::vector<u64>(cfg.hadamard_orders.begin(), cfg.hadamard_orders.end())) +
                          "}, one multiplier per cyclic subgroup",
                      std::move(notes));
}

using ClaimFn = std::function<AuditReport(const AuditConfig&)>;

const std::vector<std::pair<std::string, ClaimFn>>& registry() {
  static const std::vector<std::pair<std::string, ClaimFn>> table = {
      {"eq-commutations", [](const AuditConfig& c) { return claim_commutations(c, default_actions()); }},
      {"diagram-autocorr-decimation", [](const AuditConfig& c) { return claim_autocorr_decimation(c, default_actions()); }},
      {"lemma-decimation-code", claim_decimation_code},
      {"thm-inclusion", claim_inclusion},
      {"code-order", claim_code_order},
      {"prop-2n+1-size", claim_prop_size},
      {"lemma-cn-translate", claim_cn_translate},
      {"lemma-structure-preserved", claim_structure},
      {"mu-sunze", claim_mu},
      {"thm-reversal-membership", claim_reversal},
      {"thm-fixed-not-hadamard", claim_fixed},
      {"thm-orbit-2", claim_orbit},
      {"remark-2level", claim_two_level},
      {"thm-prime-order-invariant",
       [](const AuditConfig& c) { return claim_invariant(c, MultiplierKind::OddPrime, "thm-prime-order-invariant"); }},
      {"thm-order-two-invariant",
       [](const AuditConfig& c) { return claim_invariant(c, MultiplierKind::OrderTwo, "thm-order-two-invariant"); }},
      {"thm-2n+1-invariant",
       [](const AuditConfig& c) { return claim_invariant(c, MultiplierKind::HalfPlusOne, "thm-2n+1-invariant"); }},
  };
  return table;
}

std::vector<AuditReport> run_ids(const std::vector<std::string>& ids, const AuditConfig& cfg) {
  std::vector<AuditReport> out;
  for (const auto& id : ids) out.push_back(run_claim(id, cfg));
  return out;
}

}  // namespace

std::string_view status_name(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Vacuous: return "VACUOUS";
  }
  return "?";
}

Status parse_status(std::string_view text) {
  if (text == "PASS") return Status::Pass;
  if (text == "FAIL") return Status::Fail;
  if (text == "VACUOUS") return Status::Vacuous;
  throw Error(ErrorKind::ParseError, "unknown audit status '" + std::string(text) + "'");
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

Actions default_actions() {
  return Actions{
      [](const BinarySeq& y, std::int64_t i) { return hadalab::shift(y, i); },
      [](const BinarySeq& y) { return hadalab::reverse(y); },
      [](const BinarySeq& y, std::int64_t a) { return hadalab::decimate(y, a); },
  };
}

std::vector<AuditReport> audit_algebra(const AuditConfig& cfg, const Actions& actions) {
  return {claim_commutations(cfg, actions), claim_autocorr_decimation(cfg, actions)};
}

std::vector<AuditReport> audit_sring(const AuditConfig& cfg) {
  return run_ids({"lemma-decimation-code", "thm-inclusion", "code-order", "prop-2n+1-size", "lemma-cn-translate",
                  "lemma-structure-preserved"},
                 cfg);
}

std::vector<AuditReport> audit_hadamard_claims(const AuditConfig& cfg) {
  return run_ids({"thm-reversal-membership", "thm-fixed-not-hadamard", "thm-orbit-2", "remark-2level",
                  "thm-prime-order-invariant", "thm-order-two-invariant", "thm-2n+1-invariant"},
                 cfg);
}

std::vector<AuditReport> audit_numth(const AuditConfig& cfg) { return {claim_mu(cfg)}; }

AuditReport run_claim(std::string_view claim_id, const AuditConfig& cfg) {
  for (const auto& [id, fn] : registry()) {
    if (id == claim_id) return fn(cfg);
  }
  throw Error(ErrorKind::ParseError, "unknown claim id '" + std::string(claim_id) + "'");
}

std::vector<AuditReport> run_audit(const AuditConfig& cfg) {
  const auto& table = registry();
  std::vector<AuditReport> slots(table.size());
  // Claims run one per task; searches inside a claim stay single-threaded.
  AuditConfig inner = cfg;
  inner.workers = 1;
  run_tasks(table.size(), cfg.workers, [&](std::size_t t) { slots[t] = table[t].second(inner); });
  return slots;
}

std::string reports_to_json(const std::vector<AuditReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) {
    arr.push_back(json{{"claim_id", r.claim_id},
                       {"params", r.params},
                       {"status", status_name(r.status)},
                       {"checked", r.checked},
                       {"hypothesis_held", r.hypothesis_held},
                       {"witnesses", r.witnesses},
                       {"notes", r.notes}});
  }
  return arr.dump(2) + "\n";
}

std::vector<AuditReport> reports_from_json(std::string_view text) {
  try {
    const json arr = json::parse(text);
    std::vector<AuditReport> out;
    for (const auto& j : arr) {
      AuditReport r;
      r.claim_id = j.at("claim_id").get<std::string>();
      r.params = j.at("params").get<std::string>();
      r.status = parse_status(j.at("status").get<std::string>());
      r.checked = j.at("checked").get<std::uint64_t>();
      r.hypothesis_held = j.at("hypothesis_held").get<std::uint64_t>();
      r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
      r.notes = j.at("notes").get<std::string>();
      out.push_back(std::move(r));
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("audit report: ") + e.what());
  }
}

std::string reports_to_table(const std::vector<AuditReport>& reports) {
  std::size_t id_w = std::string_view("claim").size();
  for (const auto& r : reports) id_w = std::max(id_w, r.claim_id.size());
  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  out << pad("claim", id_w) << "  " << pad("status", 7) << "  " << pad("checked", 12) << "  " << pad("held", 12) << "  params\n";
  for (const auto& r : reports) {
    out << pad(r.claim_id, id_w) << "  " << pad(std::string(status_name(r.status)), 7) << "  "
        << pad(std::to_string(r.checked), 12) << "  " << pad(std::to_string(r.hypothesis_held), 12) << "  " << r.params << "\n";
    for (const auto& w : r.witnesses) out << pad("", id_w) << "    witness: " << w << "\n";
    if (!r.notes.empty()) out << pad("", id_w) << "    note: " << r.notes << "\n";
  }
  return out.str();
}

std::vector<GoldenEntry> parse_golden(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const json& claims = doc.is_array() ? doc : doc.at("claims");
    std::vector<GoldenEntry> out;
    for (const auto& j : claims) {
      GoldenEntry e;
      e.claim_id = j.at("claim_id").get<std::string>();
      e.status = parse_status(j.at("status").get<std::string>());
      e.required = j.value("required", true);
      out.push_back(std::move(e));
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("golden file: ") + e.what());
  }
}

std::vector<std::string> golden_deviations(const std::vector<AuditReport>& reports, const std::vector<GoldenEntry>& golden,
                                           bool require_complete) {
  std::vector<std::string> out;
  auto report_for = [&](const std::string& id) -> const AuditReport* {
    for (const auto& r : reports) {
      if (r.claim_id == id) return &r;
    }
    return nullptr;
  };
  auto golden_for = [&](const std::string& id) -> const GoldenEntry* {
    for (const auto& g : golden) {
      if (g.claim_id == id) return &g;
    }
    return nullptr;
  };
  for (const auto& id : claim_ids()) {
    if (!require_complete) break;
    if (report_for(id) == nullptr) out.push_back(id + ": no report (audit matrix incomplete)");
    if (golden_for(id) == nullptr) out.push_back(id + ": no golden status");
  }
  for (const auto& g : golden) {
    const AuditReport* r = report_for(g.claim_id);
    if (r == nullptr) {
      if (std::find(claim_ids().begin(), claim_ids().end(), g.claim_id) == claim_ids().end()) {
        out.push_back(g.claim_id + ": unknown claim id in golden file");
      }
      continue;
    }
    if (g.required && r->status != g.status) {
      out.push_back(g.claim_id + ": expected " + std::string(status_name(g.status)) + ", got " +
                    std::string(status_name(r->status)));
    }
  }
  return out;
}

}  // namespace hadalab::audit
