#include "arena/jsonio.hpp"

#include <fstream>
#include <sstream>

namespace arena {

const Json& require_field(const Json& j, std::string_view key, const std::string& path) {
  if (!j.is_object()) {
    throw ParseError(path + ": expected an object while looking for '" + std::string(key) + "'");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(path + ": missing required field '" + std::string(key) + "'");
  }
  return *it;
}

double require_number(const Json& j, std::string_view key, const std::string& path) {
  const Json& f = require_field(j, key, path);
  if (!f.is_number()) {
    throw ParseError(path + "." + std::string(key) + ": expected a number");
  }
  return f.get<double>();
}

std::int64_t require_int(const Json& j, std::string_view key, const std::string& path) {
  const Json& f = require_field(j, key, path);
  if (!f.is_number_integer() && !f.is_number_unsigned()) {
    throw ParseError(path + "." + std::string(key) + ": expected an integer");
  }
  return f.get<std::int64_t>();
}

std::string require_string(const Json& j, std::string_view key, const std::string& path) {
  const Json& f = require_field(j, key, path);
  if (!f.is_string()) {
    throw ParseError(path + "." + std::string(key) + ": expected a string");
  }
  return f.get<std::string>();
}

const Json& require_array(const Json& j, std::string_view key, const std::string& path) {
  const Json& f = require_field(j, key, path);
  if (!f.is_array()) {
    throw ParseError(path + "." + std::string(key) + ": expected an array");
  }
  return f;
}

Json parse_json(const std::string& text, const std::string& context) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError(context + ": malformed JSON");
  }
  return j;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= static_cast<std::uint64_t>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xF];
    value >>= 4;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open for reading: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open for writing: " + path);
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw IoError("write failed: " + path);
  }
}

}  // namespace arena
