#pragma once

// Brute-force audit of the checkable claims about decimation-invariant
// families and circulant Hadamard sequences. Each claim is tested by
// checking its hypothesis first and its conclusion second over a stated
// parameter range; claims whose hypothesis never holds are VACUOUS.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hadalab/binary_seq.hpp"

namespace hadalab::audit {

enum class Status { Pass, Fail, Vacuous };

std::string_view status_name(Status s) noexcept;
Status parse_status(std::string_view text);

struct AuditReport {
  std::string claim_id;
  std::string params;
  Status status = Status::Vacuous;
  std::vector<std::string> witnesses;
  std::string notes;
  std::uint64_t checked = 0;          // instances examined
  std::uint64_t hypothesis_held = 0;  // instances satisfying the hypothesis
};

// Claim ids in report order.
const std::vector<std::string>& claim_ids();

// The group actions under test; swapped out by mutation tests.
struct Actions {
  std::function<BinarySeq(const BinarySeq&, std::int64_t)> shift;
  std::function<BinarySeq(const BinarySeq&)> reverse;
  std::function<BinarySeq(const BinarySeq&, std::int64_t)> decimate;
};

Actions default_actions();

struct AuditConfig {
  unsigned workers = 1;
  std::size_t witness_cap = 5;
  std::uint64_t seed = 20240601;

  std::size_t algebra_exhaustive_max = 12;
  std::size_t algebra_random_cases = 10000;
  std::size_t algebra_random_max_n = 64;

  std::size_t sring_n_max = 40;
  std::size_t bruteforce_n_max = 24;     // inclusion cross-check and decimation-code range
  std::size_t code_order_n_max = 16;
  std::size_t prop_enum_max_rank = 20;
  std::size_t structure_sample = 64;

  std::size_t reversal_n_max = 14;
  std::vector<std::size_t> hadamard_orders = {4, 8, 12, 16, 20, 24, 28, 36};
  std::size_t invariant_max_rank = 30;
  std::uint64_t mu_max = 4096;
};

// eq-commutations, diagram-autocorr-decimation
std::vector<AuditReport> audit_algebra(const AuditConfig& cfg, const Actions& actions = default_actions());

// lemma-decimation-code, thm-inclusion, code-order, prop-2n+1-size,
// lemma-cn-translate, lemma-structure-preserved
std::vector<AuditReport> audit_sring(const AuditConfig& cfg);

// thm-reversal-membership, thm-fixed-not-hadamard, thm-orbit-2,
// remark-2level, thm-prime-order-invariant, thm-order-two-invariant,
// thm-2n+1-invariant; n_list is cfg.hadamard_orders.
std::vector<AuditReport> audit_hadamard_claims(const AuditConfig& cfg);

// mu-sunze
std::vector<AuditReport> audit_numth(const AuditConfig& cfg);

// Every claim, one task per claim, merged in claim_ids() order.
std::vector<AuditReport> run_audit(const AuditConfig& cfg);

// Runs a single claim by id; throws ParseError for unknown ids.
AuditReport run_claim(std::string_view claim_id, const AuditConfig& cfg);

std::string reports_to_json(const std::vector<AuditReport>& reports);
std::vector<AuditReport> reports_from_json(std::string_view json);
std::string reports_to_table(const std::vector<AuditReport>& reports);

struct GoldenEntry {
  std::string claim_id;
  Status status = Status::Pass;
  bool required = true;
};

std::vector<GoldenEntry> parse_golden(std::string_view json);

// Required claims whose status differs from the golden file and golden
// entries naming unknown claims. With require_complete, every claim id must
// also have both a report and a golden entry.
std::vector<std::string> golden_deviations(const std::vector<AuditReport>& reports,
                                           const std::vector<GoldenEntry>& golden, bool require_complete = true);

}  // namespace hadalab::audit
