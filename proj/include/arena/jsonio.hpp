#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "arena/errors.hpp"
#include "json.hpp"

namespace arena {

// Insertion-ordered JSON keeps serialized field order stable, which the
// dataset manifests and replay tests rely on for reproducible hashing.
using Json = nlohmann::ordered_json;

// Field accessors that fail with the JSON path of the offending field.
const Json& require_field(const Json& j, std::string_view key, const std::string& path);
double require_number(const Json& j, std::string_view key, const std::string& path);
std::int64_t require_int(const Json& j, std::string_view key, const std::string& path);
std::string require_string(const Json& j, std::string_view key, const std::string& path);
const Json& require_array(const Json& j, std::string_view key, const std::string& path);

Json parse_json(const std::string& text, const std::string& context);

// FNV-1a 64-bit over raw bytes; used for config/content fingerprints.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace arena
