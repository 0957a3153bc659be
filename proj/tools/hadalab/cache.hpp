#pragma once

#include <filesystem>
#include <optional>

#include "hadalab/io.hpp"

namespace hadalab::cli {

// Append-only JSONL store of search records, one file per directory.
class SearchCache {
 public:
  explicit SearchCache(std::filesystem::path dir);

  const std::filesystem::path& file() const noexcept { return file_; }

  // Latest record matching kind, n, params and the current version.
  std::optional<io::SearchRecord> find(const io::SearchRecord& query) const;
  void append(const io::SearchRecord& record) const;

 private:
  std::filesystem::path file_;
};

}  // namespace hadalab::cli
