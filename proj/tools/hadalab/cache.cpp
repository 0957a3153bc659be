#include "cache.hpp"

#include <fstream>
#include <string>

#include "hadalab/error.hpp"

namespace hadalab::cli {

SearchCache::SearchCache(std::filesystem::path dir) : file_(std::move(dir) / "search.jsonl") {}

std::optional<io::SearchRecord> SearchCache::find(const io::SearchRecord& query) const {
  std::ifstream in(file_);
  if (!in) return std::nullopt;
  std::optional<io::SearchRecord> found;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      io::SearchRecord rec = io::record_from_json(line);
      if (rec.version == io::kRecordVersion && rec.kind == query.kind && rec.n == query.n && rec.params == query.params) {
        found = std::move(rec);
      }
    } catch (const Error&) {
      // A torn or foreign line is skipped rather than poisoning the cache.
    }
  }
  return found;
}

void SearchCache::append(const io::SearchRecord& record) const {
  std::filesystem::create_directories(file_.parent_path());
  std::ofstream out(file_, std::ios::app);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write cache file " + file_.string());
  out << io::record_to_json(record) << '\n';
}

}  // namespace hadalab::cli
