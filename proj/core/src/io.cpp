#include "hadalab/io.hpp"

#include <json.hpp>

#include "hadalab/error.hpp"

namespace hadalab::io {

namespace {

using json = nlohmann::ordered_json;
using numth::u64;

template <class Fn>
auto parse_with(std::string_view text, const char* what, Fn&& fn) {
  try {
    return fn(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
  }
}

BinarySeq seq_checked(const std::string& s, u64 n) {
  BinarySeq y = BinarySeq::parse(s);
  if (y.size() != n) throw Error(ErrorKind::LengthMismatch, "declared n=" + std::to_string(n) + " but sequence has " + std::to_string(y.size()));
  return y;
}

std::vector<std::string> strings_of(const std::vector<BinarySeq>& seqs) {
  std::vector<std::string> out;
  out.reserve(seqs.size());
  for (const auto& s : seqs) out.push_back(s.to_string());
  return out;
}

sring::SubwordTag tag_from_letter(const std::string& s) {
  if (s == "A") return sring::SubwordTag::A;
  if (s == "B") return sring::SubwordTag::B;
  if (s == "D") return sring::SubwordTag::D;
  if (s == "E") return sring::SubwordTag::E;
  if (s == "F") return sring::SubwordTag::F;
  throw Error(ErrorKind::ParseError, "unknown subword tag '" + s + "'");
}

json params_json(const std::vector<std::pair<std::string, std::int64_t>>& params) {
  json obj = json::object();
  for (const auto& [k, v] : params) obj[k] = v;
  return obj;
}

}  // namespace

std::string seq_to_json(const BinarySeq& y) { return json{{"n", y.size()}, {"seq", y.to_string()}}.dump(); }

BinarySeq seq_from_json(std::string_view text) {
  return parse_with(text, "sequence", [](const json& j) {
    return seq_checked(j.at("seq").get<std::string>(), j.at("n").get<u64>());
  });
}

std::string autocorr_to_json(const AutocorrVector& v) { return json{{"n", v.n}, {"values", v.values}}.dump(); }

AutocorrVector autocorr_from_json(std::string_view text) {
  return parse_with(text, "autocorrelation", [](const json& j) {
    AutocorrVector v{j.at("n").get<std::size_t>(), j.at("values").get<std::vector<int>>()};
    if (v.values.size() != v.n) throw Error(ErrorKind::LengthMismatch, "autocorrelation vector length differs from n");
    return v;
  });
}

std::string partition_to_json(const numth::CosetPartition& p) {
  return json{{"n", p.n}, {"a", p.a}, {"cosets", p.cosets}}.dump();
}

numth::CosetPartition partition_from_json(std::string_view text) {
  return parse_with(text, "coset partition", [](const json& j) {
    const u64 n = j.at("n").get<u64>();
    const u64 a = j.at("a").get<u64>();
    numth::CosetPartition p = numth::cyclotomic_cosets(a, n);
    if (p.cosets != j.at("cosets").get<std::vector<std::vector<u64>>>()) {
      throw Error(ErrorKind::ParseError, "cosets do not match the partition of Z_" + std::to_string(n) + " under " + std::to_string(a));
    }
    return p;
  });
}

std::string family_to_json(const sring::InvariantFamily& fam) {
  const auto& p = fam.partition();
  json code = json::array();
  for (u64 s : p.reps) code.push_back(sring::codeword(fam, s).to_string());
  json j{{"n", p.n}, {"a", p.a}, {"rank", p.rank()}};
  if (p.rank() < 64) j["size"] = std::uint64_t{1} << p.rank();
  j["cosets"] = p.cosets;
  j["code"] = std::move(code);
  return j.dump();
}

std::string classification_to_json(const sring::SubwordClassification& c) {
  json buckets = json::array();
  for (const auto& b : c.buckets) {
    buckets.push_back(json{{"tag", std::string(1, sring::tag_letter(b.tag))}, {"coset", b.coset}, {"partner", b.partner}});
  }
  const auto& k = c.counts;
  return json{{"n4", c.n4},
              {"x", c.x},
              {"order", c.order},
              {"counts", json{{"r", k.r}, {"s", k.s}, {"t", k.t}, {"u", k.u}, {"v", k.v}}},
              {"support_size", c.support_size_from_counts()},
              {"buckets", std::move(buckets)}}
      .dump();
}

sring::SubwordClassification classification_from_json(std::string_view text) {
  return parse_with(text, "classification", [](const json& j) {
    sring::SubwordClassification c;
    c.n4 = j.at("n4").get<u64>();
    c.x = j.at("x").get<u64>();
    c.order = j.at("order").get<u64>();
    const json& k = j.at("counts");
    c.counts = {k.at("r").get<std::size_t>(), k.at("s").get<std::size_t>(), k.at("t").get<std::size_t>(),
                k.at("u").get<std::size_t>(), k.at("v").get<std::size_t>()};
    for (const auto& b : j.at("buckets")) {
      c.buckets.push_back(sring::TaggedCoset{b.at("coset").get<std::vector<u64>>(), tag_from_letter(b.at("tag").get<std::string>()),
                                             b.at("partner").get<u64>()});
    }
    return c;
  });
}

std::string lattice_to_json(const sring::LatticeGraph& g) {
  json nodes = json::array();
  for (const auto& node : g.nodes) {
    nodes.push_back(json{{"generator", node.generator}, {"order", node.order}, {"elements", node.elements}});
  }
  json edges = json::array();
  for (const auto& [lo, hi] : g.edges) edges.push_back(json::array({g.nodes[lo].generator, g.nodes[hi].generator}));
  return json{{"n", g.n}, {"top", g.nodes[g.top].generator}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}}.dump();
}

sring::LatticeGraph lattice_from_json(std::string_view text) {
  return parse_with(text, "lattice", [](const json& j) {
    sring::LatticeGraph g;
    g.n = j.at("n").get<u64>();
    for (const auto& node : j.at("nodes")) {
      g.nodes.push_back(sring::LatticeNode{node.at("generator").get<u64>(), node.at("order").get<u64>(),
                                           node.at("elements").get<std::vector<u64>>()});
    }
    auto index_of = [&](u64 gen) {
      for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        if (g.nodes[i].generator == gen) return i;
      }
      throw Error(ErrorKind::ParseError, "lattice edge names unknown generator " + std::to_string(gen));
    };
    for (const auto& e : j.at("edges")) g.edges.emplace_back(index_of(e.at(0).get<u64>()), index_of(e.at(1).get<u64>()));
    g.top = index_of(j.at("top").get<u64>());
    return g;
  });
}

std::string two_level_to_json(const families::TwoLevelSeq& t) {
  return json{{"n", t.n}, {"seq", t.seq.to_string()}, {"offpeak", t.offpeak ? json(*t.offpeak) : json(nullptr)}}.dump();
}

std::string orbit_to_json(const search::OrbitReport& r) {
  json orbit = json::array();
  for (const auto& c : r.orbit) orbit.push_back(c.rep.to_string());
  return json{{"n", r.seed.size()},
              {"seed", r.seed.rep.to_string()},
              {"orbit", std::move(orbit)},
              {"orbit_size", r.orbit.size()},
              {"stabilizer", r.stabilizer},
              {"reversal", r.reversal.rep.to_string()},
              {"reversal_hit", r.reversal_hit},
              {"group_order", r.group_order}}
      .dump();
}

SearchRecord to_record(const search::SearchResult& r) {
  SearchRecord rec;
  rec.kind = std::string(search::kind_name(r.kind));
  rec.n = r.n;
  rec.params = r.params;
  rec.hits = strings_of(r.hits);
  rec.members = strings_of(r.members);
  rec.raw_count = r.raw_count;
  rec.nodes_explored = r.nodes_explored;
  rec.version = kRecordVersion;
  return rec;
}

std::uint64_t record_key(std::string_view kind, std::uint64_t n, const std::vector<std::pair<std::string, std::int64_t>>& params) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  mix(kind);
  mix(std::to_string(n));
  for (const auto& [k, v] : params) {
    mix(k);
    mix(std::to_string(v));
  }
  return h;
}

std::string record_to_json(const SearchRecord& r) {
  json j{{"kind", r.kind}, {"n", r.n}, {"params", params_json(r.params)}, {"hits", r.hits}};
  if (!r.members.empty()) j["members"] = r.members;
  j["raw_count"] = r.raw_count;
  j["nodes_explored"] = r.nodes_explored;
  j["key"] = record_key(r.kind, r.n, r.params);
  j["version"] = r.version;
  return j.dump();
}

SearchRecord record_from_json(std::string_view text) {
  return parse_with(text, "search record", [](const json& j) {
    SearchRecord r;
    r.kind = j.at("kind").get<std::string>();
    r.n = j.at("n").get<std::uint64_t>();
    for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::int64_t>());
    r.hits = j.at("hits").get<std::vector<std::string>>();
    if (j.contains("members")) r.members = j.at("members").get<std::vector<std::string>>();
    r.raw_count = j.value("raw_count", std::uint64_t{0});
    r.nodes_explored = j.value("nodes_explored", std::uint64_t{0});
    r.version = j.at("version").get<int>();
    return r;
  });
}

}  // namespace hadalab::io
