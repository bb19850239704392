#pragma once

#include <fstream>
#include <mutex>
#include <string>
#include <vector>

#include "arena/jsonio.hpp"

namespace arena {

// Append-only JSONL sink. All writers for one file funnel through one
// instance; lines are never interleaved.
class JsonlWriter {
 public:
  explicit JsonlWriter(const std::string& path);

  void append(const Json& line);
  void flush();
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream out_;
  std::mutex mutex_;
};

// Whole-file JSONL read; returns one parsed object per non-empty line and
// reports the 1-based line number on parse failure.
std::vector<Json> read_jsonl(const std::string& path);

}  // namespace arena
