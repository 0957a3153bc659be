#include <gtest/gtest.h>

#include <random>

#include "hadalab/error.hpp"
#include "hadalab/io.hpp"
#include "hadalab/numth.hpp"
#include "hadalab/search.hpp"
#include "hadalab/sring.hpp"
#include "naive.hpp"

namespace io = hadalab::io;
using hadalab::BinarySeq;

TEST(Io, SequenceRoundTrip) {
  std::mt19937_64 rng(13);
  for (int c = 0; c < 200; ++c) {
    const BinarySeq y = naive::random_seq(rng, 1 + rng() % 200);
    EXPECT_EQ(io::seq_from_json(io::seq_to_json(y)), y);
  }
  EXPECT_EQ(io::seq_to_json(BinarySeq::parse("+-")), R"({"n":2,"seq":"+-"})");
  EXPECT_THROW(io::seq_from_json(R"({"n":3,"seq":"+-"})"), hadalab::Error);
  EXPECT_THROW(io::seq_from_json("not json"), hadalab::Error);
}

TEST(Io, AutocorrRoundTrip) {
  const auto v = autocorr_vector(BinarySeq::parse("+++-+--"));
  EXPECT_EQ(io::autocorr_from_json(io::autocorr_to_json(v)).values, v.values);
}

TEST(Io, PartitionRoundTrip) {
  for (std::uint64_t n : {1U, 8U, 36U, 60U}) {
    for (std::uint64_t a : hadalab::numth::unit_group(n).units) {
      const auto p = hadalab::numth::cyclotomic_cosets(a, n);
      const auto back = io::partition_from_json(io::partition_to_json(p));
      EXPECT_EQ(back.cosets, p.cosets);
      EXPECT_EQ(back.reps, p.reps);
    }
  }
  EXPECT_THROW(io::partition_from_json(R"({"n":8,"a":5,"cosets":[[0],[1,3]]})"), hadalab::Error);
}

TEST(Io, ClassificationRoundTrip) {
  const auto c = hadalab::sring::classify_subwords(BinarySeq::from_support(12, std::vector<std::size_t>{1, 5, 7, 11}), 5);
  EXPECT_EQ(io::classification_from_json(io::classification_to_json(c)), c);
}

TEST(Io, LatticeRoundTrip) {
  for (std::uint64_t n : {8U, 24U, 36U, 196U}) {
    const auto g = hadalab::sring::lattice(n);
    EXPECT_EQ(io::lattice_from_json(io::lattice_to_json(g)), g);
  }
}

TEST(Io, SearchRecordRoundTrip) {
  for (const auto& res : {hadalab::search::hadamard_full(4), hadalab::search::hadamard_in_invariant(4, 3),
                          hadalab::search::barker(13)}) {
    const io::SearchRecord rec = io::to_record(res);
    const std::string line = io::record_to_json(rec);
    EXPECT_EQ(line.find('\n'), std::string::npos);
    EXPECT_EQ(io::record_from_json(line), rec);
  }
  const auto k1 = io::record_key("hadamard_full", 16, {{"collapse_negation", 0}});
  EXPECT_EQ(k1, io::record_key("hadamard_full", 16, {{"collapse_negation", 0}}));
  EXPECT_NE(k1, io::record_key("hadamard_full", 16, {{"collapse_negation", 1}}));
  EXPECT_NE(k1, io::record_key("hadamard_full", 20, {{"collapse_negation", 0}}));
  EXPECT_THROW(io::record_from_json("{}"), hadalab::Error);
}
