#include "hadalab/sring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hadalab/error.hpp"

namespace hadalab::sring {

InvariantFamily::InvariantFamily(u64 n, u64 a) : partition_(numth::cyclotomic_cosets(a, n)) {}

BinarySeq InvariantFamily::member_from_mask(std::uint64_t mask) const {
  if (rank() > 64) throw Error(ErrorKind::RankTooLarge, "mask addressing needs rank <= 64");
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < rank(); ++j) {
    if ((mask >> j) & 1U) {
      for (u64 e : partition_.cosets[j]) support.push_back(static_cast<std::size_t>(e));
    }
  }
  return BinarySeq::from_support(static_cast<std::size_t>(n()), support);
}

BinarySeq codeword(const InvariantFamily& fam, u64 s) {
  const auto n = static_cast<std::size_t>(fam.n());
  const BinarySeq x = base_word(n);
  BinarySeq word(n);
  for (u64 e : fam.partition().coset_containing(s)) {
    word = product(word, shift(x, static_cast<std::int64_t>(e)));
  }
  return word;
}

std::vector<BinarySeq> code(u64 n, u64 a) {
  const InvariantFamily fam(n, a);
  std::vector<BinarySeq> out;
  out.reserve(fam.rank());
  for (u64 rep : fam.partition().reps) out.push_back(codeword(fam, rep));
  return out;
}

bool member(const BinarySeq& y, const InvariantFamily& fam) {
  if (y.size() != fam.n()) {
    throw Error(ErrorKind::LengthMismatch,
                "sequence length " + std::to_string(y.size()) + " vs family length " + std::to_string(fam.n()));
  }
  for (const auto& coset : fam.partition().cosets) {
    const bool first = y.is_minus(static_cast<std::size_t>(coset.front()));
    for (u64 e : coset) {
      if (y.is_minus(static_cast<std::size_t>(e)) != first) return false;
    }
  }
  return true;
}

FamilyRange enumerate(const InvariantFamily& fam, std::size_t max_rank) {
  if (fam.rank() > max_rank || fam.rank() > 63) {
    throw Error(ErrorKind::RankTooLarge,
                "rank " + std::to_string(fam.rank()) + " exceeds bound " + std::to_string(max_rank));
  }
  return FamilyRange(fam);
}

bool includes(const numth::CosetPartition& pa, const numth::CosetPartition& pb) {
  if (pa.n != pb.n) throw Error(ErrorKind::LengthMismatch, "partitions of different moduli");
  // Each <b>-coset is an orbit of s -> b s, so it lies inside one <a>-coset
  // iff s and b s always share an <a>-coset.
  const u64 n = pa.n;
  for (u64 s = 0; s < n; ++s) {
    if (pa.coset_of[s] != pa.coset_of[numth::mul_mod(s, pb.a, n)]) return false;
  }
  return true;
}

bool includes(u64 n, u64 a, u64 b) {
  return includes(numth::cyclotomic_cosets(a, n), numth::cyclotomic_cosets(b, n));
}

std::vector<std::size_t> LatticeGraph::covers_of(std::size_t node) const {
  std::vector<std::size_t> out;
  for (const auto& [lo, hi] : edges) {
    if (lo == node) out.push_back(hi);
  }
  return out;
}

LatticeGraph lattice(u64 n, u64 bound) {
  if (n > bound) {
    throw Error(ErrorKind::TooLarge, "lattice modulus " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  }
  if (n == 0) throw Error(ErrorKind::BadModulus, "modulus must be positive");
  LatticeGraph g;
  g.n = n;

  // Distinct cyclic subgroups keyed by element set; units are visited in
  // ascending order so the first generator seen is the minimal one.
  std::map<std::vector<u64>, u64> seen;
  const numth::UnitGroupInfo units = numth::unit_group(n);
  std::vector<bool> assigned(n, false);
  for (u64 a : units.units) {
    if (assigned[a % n]) continue;
    std::vector<u64> elements = numth::cyclic_subgroup(a, n);
    // Every generator a^k with gcd(k, ord) = 1 spans the same subgroup.
    const u64 ord = elements.size();
    u64 power = a % n;
    for (u64 k = 1; k <= ord; ++k) {
      if (numth::gcd(k, ord) == 1) assigned[power] = true;
      power = numth::mul_mod(power, a, n);
    }
    seen.emplace(std::move(elements), a % n);
  }
  for (auto& [elements, gen] : seen) {
    g.nodes.push_back(LatticeNode{gen, elements.size(), elements});
  }
  std::sort(g.nodes.begin(), g.nodes.end(), [](const LatticeNode& x, const LatticeNode& y) {
    if (x.order != y.order) return x.order > y.order;
    return x.generator < y.generator;
  });

  std::vector<numth::CosetPartition> parts;
  parts.reserve(g.nodes.size());
  for (const auto& node : g.nodes) parts.push_back(numth::cyclotomic_cosets(node.generator, n));

  const std::size_t count = g.nodes.size();
  std::vector<std::vector<bool>> below(count, std::vector<bool>(count, false));  // below[i][j]: I_i strictly inside I_j
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i != j && includes(parts[i], parts[j])) below[i][j] = true;
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (!below[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < count && cover; ++k) {
        if (below[i][k] && below[k][j]) cover = false;
      }
      if (cover) g.edges.emplace_back(i, j);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  for (std::size_t i = 0; i < count; ++i) {
    if (g.nodes[i].order == 1) g.top = i;
  }
  return g;
}

namespace {

std::string node_label(const LatticeGraph& g, std::size_t i) {
  return "I_" + std::to_string(g.n) + "(" + std::to_string(g.nodes[i].generator) + ")";
}

}  // namespace

std::string lattice_table(const LatticeGraph& g) {
  std::ostringstream out;
  out << "# lattice of I_" << g.n << "(a) ordered by inclusion\n";
  out << "node\tgenerator\torder\tcovers\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << node_label(g, i) << '\t' << g.nodes[i].generator << '\t' << g.nodes[i].order << '\t';
    const auto covers = g.covers_of(i);
    if (covers.empty()) out << '-';
    for (std::size_t c = 0; c < covers.size(); ++c) {
      if (c != 0) out << ',';
      out << node_label(g, covers[c]);
    }
    out << '\n';
  }
  return out.str();
}

std::string lattice_dot(const LatticeGraph& g) {
  std::ostringstream out;
  out << "digraph lattice_" << g.n << " {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    out << "  \"" << node_label(g, i) << "\" [order=" << g.nodes[i].order;
    if (i == g.top) out << ", top=true";
    out << "];\n";
  }
  for (const auto& [lo, hi] : g.edges) {
    out << "  \"" << node_label(g, lo) << "\" -> \"" << node_label(g, hi) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

char tag_letter(SubwordTag tag) noexcept {
  switch (tag) {
    case SubwordTag::A: return 'A';
    case SubwordTag::B: return 'B';
    case SubwordTag::D: return 'D';
    case SubwordTag::E: return 'E';
    case SubwordTag::F: return 'F';
  }
  return '?';
}

std::size_t SubwordClassification::support_size_from_counts() const noexcept {
  const auto p = static_cast<std::size_t>(order);
  return counts.r + 2 * counts.s + p * counts.t + 2 * p * counts.u + p * counts.v;
}

SubwordClassification classify_subwords(const BinarySeq& y, u64 x) {
  const u64 n4 = y.size();
  if (n4 % 4 != 0) throw Error(ErrorKind::BadModulus, "length " + std::to_string(n4) + " is not a multiple of 4");
  const u64 order = numth::mult_order(x, n4);
  if (order != 1 && !numth::is_prime(order)) {
    throw Error(ErrorKind::BadOrder, "multiplier " + std::to_string(x) + " has composite order " + std::to_string(order));
  }
  const InvariantFamily fam(n4, x);
  if (!member(y, fam)) {
    throw Error(ErrorKind::NotInvariant, "sequence is not fixed by decimation by " + std::to_string(x));
  }
  const auto& part = fam.partition();
  const u64 half = n4 / 2;

  SubwordClassification out;
  out.n4 = n4;
  out.x = x % n4;
  out.order = order;

  std::vector<bool> done(part.rank(), false);
  for (std::size_t j = 0; j < part.rank(); ++j) {
    const auto& coset = part.cosets[j];
    if (done[j] || !y.is_minus(static_cast<std::size_t>(coset.front()))) continue;
    done[j] = true;
    const std::size_t partner = part.coset_of[(coset.front() + half) % n4];
    const bool partner_in_support = y.is_minus(static_cast<std::size_t>(part.cosets[partner].front()));
    TaggedCoset tagged{coset, SubwordTag::A, coset.front()};
    if (coset.size() == 1) {
      // A singleton {b} never equals {b + 2n}.
      if (partner_in_support) {
        tagged.tag = SubwordTag::B;
        tagged.partner = part.cosets[partner].front();
        ++out.counts.s;
      } else {
        ++out.counts.r;
      }
    } else if (partner == j) {
      tagged.tag = SubwordTag::F;
      ++out.counts.v;
    } else if (partner_in_support) {
      tagged.tag = SubwordTag::E;
      tagged.partner = part.cosets[partner].front();
      ++out.counts.u;
    } else {
      tagged.tag = SubwordTag::D;
      ++out.counts.t;
    }
    // A paired partner coset is reported inside this bucket entry.
    if (tagged.tag == SubwordTag::B || tagged.tag == SubwordTag::E) done[partner] = true;
    out.buckets.push_back(std::move(tagged));
  }
  return out;
}

TranslateCheck c2n_translate(const InvariantFamily& fam, u64 s) {
  const u64 n = fam.n();
  if (n % 2 != 0) throw Error(ErrorKind::BadModulus, "translate lemma needs an even length");
  const u64 half = n / 2;
  TranslateCheck check{shift(codeword(fam, s), static_cast<std::int64_t>(half)),
                       codeword(fam, (s + half) % n), (s + half) % n, false};
  check.holds = check.shifted == check.expected;
  return check;
}

}  // namespace hadalab::sring
