#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "hadalab/audit.hpp"
#include "hadalab/error.hpp"
#include "hadalab/families.hpp"
#include "hadalab/io.hpp"
#include "hadalab/search.hpp"
#include "hadalab/sring.hpp"

namespace hadalab::cli {

namespace {

using numth::u64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundSpec {
  std::size_t value;
  std::size_t hard;
};

// Named bounds and their hard ceilings.
std::map<std::string, BoundSpec> default_bounds() {
  return {
      {"hadamard_n", {search::kHadamardFullMaxN, search::kHadamardFullHardLimit}},
      {"barker_n", {search::kBarkerMaxN, search::kBarkerHardLimit}},
      {"rank", {search::kInvariantMaxRank, search::kInvariantHardRank}},
      {"enumerate_rank", {20, 30}},
      {"lattice_n", {static_cast<std::size_t>(sring::kDefaultLatticeBound), 1000000}},
  };
}

struct RunConfig {
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  unsigned workers = 1;
  std::string golden;
  std::map<std::string, BoundSpec> bounds = default_bounds();

  std::size_t bound(const std::string& name) const { return bounds.at(name).value; }

  void set_bound(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) throw UsageError("--bound expects NAME=VALUE, got '" + spec + "'");
    const std::string name = spec.substr(0, eq);
    const auto it = bounds.find(name);
    if (it == bounds.end()) throw UsageError("unknown bound '" + name + "'");
    std::size_t value = 0;
    try {
      std::size_t used = 0;
      value = std::stoull(spec.substr(eq + 1), &used);
      if (used != spec.size() - eq - 1) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
      throw UsageError("bound " + name + " needs a non-negative integer");
    }
    if (value > it->second.hard) {
      throw UsageError("bound " + name + "=" + std::to_string(value) + " exceeds hard limit " + std::to_string(it->second.hard));
    }
    it->second.value = value;
  }
};

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw UsageError("config key " + key + " needs a boolean, got '" + v + "'");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// key=value lines; '#' starts a comment.
void load_config(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "format") {
      cfg.format = value;
    } else if (key == "cache") {
      cfg.cache_dir = value;
    } else if (key == "no-cache") {
      cfg.no_cache = parse_bool(key, value);
    } else if (key == "workers") {
      try {
        cfg.workers = static_cast<unsigned>(std::stoul(value));
      } catch (const std::exception&) {
        throw UsageError("config workers needs an integer");
      }
    } else if (key == "golden") {
      cfg.golden = value;
    } else if (key.rfind("bound.", 0) == 0) {
      cfg.set_bound(key.substr(6) + "=" + value);
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
}

// Accepts the +/- text form or the JSON form.
BinarySeq read_seq(const std::string& text) {
  if (!text.empty() && text.front() == '{') return io::seq_from_json(text);
  return BinarySeq::parse(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join_u64(const std::vector<u64>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  void require_format(std::initializer_list<const char*> allowed) const {
    for (const char* f : allowed) {
      if (cfg_.format == f) return;
    }
    throw UsageError("--format " + cfg_.format + " is not available for this command");
  }
  bool json() const { return cfg_.format == "json"; }

  void autocorr(const std::string& seq) {
    require_format({"text", "json"});
    const AutocorrVector v = autocorr_vector(read_seq(seq));
    if (json()) {
      out_ << io::autocorr_to_json(v) << '\n';
      return;
    }
    for (std::size_t k = 0; k < v.values.size(); ++k) out_ << (k ? " " : "") << v.values[k];
    out_ << '\n';
  }

  void cosets(u64 n, u64 a) {
    require_format({"text", "json"});
    const numth::CosetPartition p = numth::cyclotomic_cosets(a, n);
    if (json()) {
      out_ << io::partition_to_json(p) << '\n';
      return;
    }
    for (const auto& c : p.cosets) out_ << c.front() << ": " << join_u64(c) << '\n';
  }

  void lattice(u64 n) {
    const sring::LatticeGraph g = sring::lattice(n, cfg_.bound("lattice_n"));
    if (cfg_.format == "graph") {
      out_ << sring::lattice_dot(g);
    } else if (json()) {
      out_ << io::lattice_to_json(g) << '\n';
    } else {
      out_ << sring::lattice_table(g);
    }
  }

  void code(u64 n, u64 a) {
    require_format({"text", "json"});
    const sring::InvariantFamily fam(n, a);
    if (json()) {
      out_ << io::family_to_json(fam) << '\n';
      return;
    }
    for (u64 s : fam.partition().reps) out_ << s << '\t' << sring::codeword(fam, s).to_string() << '\n';
  }

  void enumerate(u64 n, u64 a) {
    require_format({"text", "json"});
    const sring::InvariantFamily fam(n, a);
    const auto range = sring::enumerate(fam, cfg_.bound("enumerate_rank"));
    if (json()) {
      nlohmann::json arr = nlohmann::json::array();
      for (const BinarySeq& y : range) arr.push_back(y.to_string());
      out_ << nlohmann::json{{"n", n}, {"a", fam.a()}, {"size", range.size()}, {"members", std::move(arr)}}.dump() << '\n';
      return;
    }
    for (const BinarySeq& y : range) out_ << y.to_string() << '\n';
  }

  void member(const std::string& seq, u64 a) {
    require_format({"text", "json"});
    const BinarySeq y = read_seq(seq);
    const sring::InvariantFamily fam(y.size(), a);
    const bool in = sring::member(y, fam);
    if (json()) {
      out_ << nlohmann::json{{"n", y.size()}, {"a", fam.a()}, {"seq", y.to_string()}, {"member", in}}.dump() << '\n';
      return;
    }
    out_ << (in ? "true" : "false") << '\n';
  }

  void classify(const std::string& seq, u64 x) {
    require_format({"text", "json"});
    const sring::SubwordClassification c = sring::classify_subwords(read_seq(seq), x);
    if (json()) {
      out_ << io::classification_to_json(c) << '\n';
      return;
    }
    const auto& k = c.counts;
    out_ << "4n=" << c.n4 << " x=" << c.x << " order=" << c.order << '\n';
    out_ << "r=" << k.r << " s=" << k.s << " t=" << k.t << " u=" << k.u << " v=" << k.v << '\n';
    out_ << "support=" << c.support_size_from_counts() << '\n';
    for (const auto& b : c.buckets) out_ << sring::tag_letter(b.tag) << '\t' << join_u64(b.coset) << '\n';
  }

  void search_hadamard(u64 n, std::optional<u64> a, bool collapse) {
    require_format({"text", "json"});
    search::SearchOptions opts = options();
    opts.collapse_negation = collapse;
    io::SearchRecord query;
    query.n = n;
    if (a) {
      const sring::InvariantFamily fam(n, *a);
      query.kind = std::string(search::kind_name(search::SearchKind::HadamardInvariant));
      query.params = {{"a", static_cast<std::int64_t>(fam.a())}, {"rank", static_cast<std::int64_t>(fam.rank())}};
      emit(cached(query, [&] { return search::hadamard_in_invariant(n, *a, opts); }));
    } else {
      query.kind = std::string(search::kind_name(search::SearchKind::HadamardFull));
      query.params = {{"collapse_negation", collapse ? 1 : 0}};
      emit(cached(query, [&] { return search::hadamard_full(n, opts); }));
    }
  }

  void search_barker(u64 n, bool expand) {
    require_format({"text", "json"});
    search::SearchOptions opts = options();
    opts.expand_symmetries = expand;
    io::SearchRecord query;
    query.kind = std::string(search::kind_name(search::SearchKind::Barker));
    query.n = n;
    query.params = {{"expand_symmetries", expand ? 1 : 0}};
    emit(cached(query, [&] { return search::barker(n, opts); }));
  }

  void orbit(const std::string& seq) {
    require_format({"text", "json"});
    const search::OrbitReport r = search::orbit_under_decimation(read_seq(seq));
    if (json()) {
      out_ << io::orbit_to_json(r) << '\n';
      return;
    }
    out_ << "seed " << r.seed.rep.to_string() << '\n';
    out_ << "orbit_size " << r.orbit.size() << " of group order " << r.group_order << '\n';
    for (const auto& c : r.orbit) out_ << "  " << c.rep.to_string() << '\n';
    out_ << "stabilizer " << join_u64(r.stabilizer) << '\n';
    out_ << "reversal " << r.reversal.rep.to_string() << (r.reversal_hit ? " in orbit" : " not in orbit") << '\n';
  }

  void families(const std::string& which, u64 param) {
    require_format({"text", "json"});
    families::TwoLevelSeq t = [&] {
      if (which == "legendre") return families::legendre(param);
      if (which == "mseq") return families::mseq(static_cast<unsigned>(param));
      throw UsageError("family must be 'legendre' or 'mseq'");
    }();
    if (json()) {
      out_ << io::two_level_to_json(t) << '\n';
      return;
    }
    out_ << t.seq.to_string() << '\n';
  }

  int audit(const std::vector<std::string>& claims, const std::string& group, std::size_t witnesses,
            const std::vector<std::size_t>& orders) {
    require_format({"text", "json"});
    audit::AuditConfig acfg;
    acfg.workers = cfg_.workers;
    acfg.witness_cap = witnesses;
    acfg.invariant_max_rank = cfg_.bound("rank");
    if (!orders.empty()) acfg.hadamard_orders = orders;
    std::vector<audit::AuditReport> reports;
    if (!claims.empty()) {
      for (const auto& id : claims) reports.push_back(audit::run_claim(id, acfg));
    } else if (group == "algebra") {
      reports = audit::audit_algebra(acfg);
    } else if (group == "sring") {
      reports = audit::audit_sring(acfg);
    } else if (group == "hadamard") {
      reports = audit::audit_hadamard_claims(acfg);
    } else if (group == "numth") {
      reports = audit::audit_numth(acfg);
    } else if (group == "all") {
      reports = audit::run_audit(acfg);
    } else {
      throw UsageError("unknown audit group '" + group + "'");
    }
    out_ << (json() ? audit::reports_to_json(reports) : audit::reports_to_table(reports));
    if (cfg_.golden.empty()) return kOk;
    const auto golden = audit::parse_golden(read_file(cfg_.golden));
    const auto deviations = audit::golden_deviations(reports, golden, claims.empty() && group == "all");
    for (const auto& d : deviations) err_ << "deviation: " << d << '\n';
    return deviations.empty() ? kOk : kDomainError;
  }

 private:
  search::SearchOptions options() const {
    search::SearchOptions opts;
    opts.workers = cfg_.workers;
    opts.hadamard_max_n = cfg_.bound("hadamard_n");
    opts.barker_max_n = cfg_.bound("barker_n");
    opts.max_rank = cfg_.bound("rank");
    return opts;
  }

  template <class Fn>
  io::SearchRecord cached(const io::SearchRecord& query, Fn&& compute) {
    std::optional<SearchCache> cache;
    if (!cfg_.no_cache && !cfg_.cache_dir.empty()) cache.emplace(cfg_.cache_dir);
    if (cache) {
      if (auto hit = cache->find(query)) return *hit;
    }
    io::SearchRecord rec = io::to_record(compute());
    if (cache) cache->append(rec);
    return rec;
  }

  void emit(const io::SearchRecord& rec) {
    if (json()) {
      out_ << io::record_to_json(rec) << '\n';
      return;
    }
    for (const auto& h : rec.hits) out_ << h << '\n';
    out_ << "# " << rec.kind << " n=" << rec.n;
    for (const auto& [k, v] : rec.params) out_ << ' ' << k << '=' << v;
    out_ << " hits=" << rec.hits.size() << " raw_count=" << rec.raw_count << " nodes=" << rec.nodes_explored << '\n';
    if (!rec.members.empty()) {
      out_ << "# members\n";
      for (const auto& m : rec.members) out_ << m << '\n';
    }
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("HADALAB_CACHE")) cfg.cache_dir = env;

  CLI::App app{"hadalab: circulant Hadamard and decimation-invariant sequence toolkit", "hadalab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::string> format;
  std::optional<std::string> cache_dir;
  std::optional<unsigned> workers;
  std::optional<std::string> golden;
  bool no_cache = false;
  std::vector<std::string> bound_specs;
  app.add_option("--config", config_path, "key=value config file merged under the flags");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "graph"}));
  app.add_option("--cache", cache_dir, "directory of the JSONL search cache (default $HADALAB_CACHE)");
  app.add_flag("--no-cache", no_cache, "neither read nor write the cache");
  app.add_option("--workers", workers, "worker threads")->check(CLI::Range(1U, 1024U));
  app.add_option("--bound", bound_specs, "NAME=VALUE bound override (hadamard_n, barker_n, rank, enumerate_rank, lattice_n)");
  app.add_option("--golden", golden, "golden status file for audit");

  std::string seq;
  u64 n = 0;
  u64 a = 0;
  std::optional<u64> opt_a;
  bool collapse = false;
  bool expand = false;
  std::string family;
  std::vector<std::string> claims;
  std::string group = "all";
  std::size_t witnesses = 5;
  std::vector<std::size_t> orders;

  auto* c_autocorr = app.add_subcommand("autocorr", "periodic autocorrelation vector");
  c_autocorr->add_option("seq", seq, "sequence over +/-")->required();
  auto* c_cosets = app.add_subcommand("cosets", "cyclotomic cosets of a modulo n");
  c_cosets->add_option("n", n)->required();
  c_cosets->add_option("a", a)->required();
  auto* c_lattice = app.add_subcommand("lattice", "inclusion lattice of the families I_n(a)");
  c_lattice->add_option("n", n)->required();
  auto* c_code = app.add_subcommand("code", "generating codewords of I_n(a)");
  c_code->add_option("n", n)->required();
  c_code->add_option("a", a)->required();
  auto* c_enum = app.add_subcommand("enumerate", "every member of I_n(a)");
  c_enum->add_option("n", n)->required();
  c_enum->add_option("a", a)->required();
  auto* c_member = app.add_subcommand("member", "test membership of a sequence in I_n(a)");
  c_member->add_option("seq", seq)->required();
  c_member->add_option("a", a)->required();
  auto* c_classify = app.add_subcommand("classify", "subword classification of Y in I_4n(x)");
  c_classify->add_option("seq", seq)->required();
  c_classify->add_option("x", a)->required();
  auto* c_had = app.add_subcommand("search-hadamard", "circulant Hadamard search, optionally inside I_n(a)");
  c_had->add_option("n", n)->required();
  c_had->add_option("--a", opt_a, "restrict to I_n(a)");
  c_had->add_flag("--collapse-negation", collapse, "merge each class with its negation");
  auto* c_barker = app.add_subcommand("search-barker", "Barker sequences of length n");
  c_barker->add_option("n", n)->required();
  c_barker->add_flag("--expand", expand, "close hits under negation and reversal");
  auto* c_orbit = app.add_subcommand("orbit", "orbit of a cyclic class under decimation");
  c_orbit->add_option("seq", seq)->required();
  auto* c_audit = app.add_subcommand("audit", "brute-force audit matrix");
  c_audit->add_option("--claim", claims, "run only these claim ids");
  c_audit->add_option("--group", group, "all, algebra, sring, hadamard or numth");
  c_audit->add_option("--witnesses", witnesses, "witness cap per claim, 0 for all");
  c_audit->add_option("--orders", orders, "lengths 4n for the Hadamard claims")->delimiter(',');
  auto* c_families = app.add_subcommand("families", "two-level sequences: legendre P or mseq DEGREE");
  c_families->add_option("family", family)->required()->check(CLI::IsMember({"legendre", "mseq"}));
  c_families->add_option("param", a)->required();

  std::vector<std::string> argv_store{"hadalab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (!config_path.empty()) load_config(config_path, cfg);
    if (format) cfg.format = *format;
    if (cache_dir) cfg.cache_dir = *cache_dir;
    if (no_cache) cfg.no_cache = true;
    if (workers) cfg.workers = *workers;
    if (golden) cfg.golden = *golden;
    for (const auto& spec : bound_specs) cfg.set_bound(spec);
    if (cfg.format != "text" && cfg.format != "json" && cfg.format != "graph") throw UsageError("unknown format " + cfg.format);
    if (cfg.workers == 0) throw UsageError("workers must be at least 1");

    Runner r(cfg, out, err);
    if (*c_autocorr) r.autocorr(seq);
    else if (*c_cosets) r.cosets(n, a);
    else if (*c_lattice) r.lattice(n);
    else if (*c_code) r.code(n, a);
    else if (*c_enum) r.enumerate(n, a);
    else if (*c_member) r.member(seq, a);
    else if (*c_classify) r.classify(seq, a);
    else if (*c_had) r.search_hadamard(n, opt_a, collapse);
    else if (*c_barker) r.search_barker(n, expand);
    else if (*c_orbit) r.orbit(seq);
    else if (*c_families) r.families(family, a);
    else if (*c_audit) return r.audit(claims, group, witnesses, orders);
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace hadalab::cli
