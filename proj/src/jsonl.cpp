#include "arena/jsonl.hpp"

#include <sstream>

#include "arena/errors.hpp"

namespace arena {

JsonlWriter::JsonlWriter(const std::string& path) : path_(path), out_(path, std::ios::trunc) {
  if (!out_) {
    throw IoError("cannot open for writing: " + path);
  }
}

void JsonlWriter::append(const Json& line) {
  std::lock_guard lock(mutex_);
  out_ << line.dump() << '\n';
  if (!out_) {
    throw IoError("write failed: " + path_);
  }
}

void JsonlWriter::flush() {
  std::lock_guard lock(mutex_);
  out_.flush();
}

std::vector<Json> read_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open for reading: " + path);
  }
  std::vector<Json> lines;
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw ParseError(path + ":" + std::to_string(line_number) + ": malformed JSON line");
    }
    lines.push_back(std::move(j));
  }
  return lines;
}

}  // namespace arena
