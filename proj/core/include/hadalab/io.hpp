#pragma once

// JSON forms of the library values. Every to_json has a matching from_json
// that reproduces an equal value; parse failures throw ParseError.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hadalab/binary_seq.hpp"
#include "hadalab/families.hpp"
#include "hadalab/numth.hpp"
#include "hadalab/search.hpp"
#include "hadalab/sring.hpp"

namespace hadalab::io {

// {"n": 4, "seq": "+++-"}
std::string seq_to_json(const BinarySeq& y);
BinarySeq seq_from_json(std::string_view text);

// {"n": 4, "values": [4, 0, 0, 0]}
std::string autocorr_to_json(const AutocorrVector& v);
AutocorrVector autocorr_from_json(std::string_view text);

// {"n": 15, "a": 2, "cosets": [[0], [1, 2, 4, 8], ...]}
std::string partition_to_json(const numth::CosetPartition& p);
numth::CosetPartition partition_from_json(std::string_view text);

// Family summary plus its codewords: {"n", "a", "rank", "size", "cosets", "code"}.
std::string family_to_json(const sring::InvariantFamily& fam);

std::string classification_to_json(const sring::SubwordClassification& c);
sring::SubwordClassification classification_from_json(std::string_view text);

std::string lattice_to_json(const sring::LatticeGraph& g);
sring::LatticeGraph lattice_from_json(std::string_view text);

std::string two_level_to_json(const families::TwoLevelSeq& t);

std::string orbit_to_json(const search::OrbitReport& r);

// Cacheable form of a search: everything but the timing.
struct SearchRecord {
  std::string kind;
  std::uint64_t n = 0;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::vector<std::string> hits;
  std::vector<std::string> members;
  std::uint64_t raw_count = 0;
  std::uint64_t nodes_explored = 0;
  int version = 1;

  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

inline constexpr int kRecordVersion = 1;

SearchRecord to_record(const search::SearchResult& r);

// FNV-1a over kind, n and params; names a cache entry.
std::uint64_t record_key(std::string_view kind, std::uint64_t n,
                         const std::vector<std::pair<std::string, std::int64_t>>& params);

// Single line, no trailing newline; suitable for JSONL.
std::string record_to_json(const SearchRecord& r);
SearchRecord record_from_json(std::string_view text);

}  // namespace hadalab::io
