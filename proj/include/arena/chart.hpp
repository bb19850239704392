#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arena/jsonio.hpp"

namespace arena {

enum class ChartType { Line, Bar, Pie };

std::string to_string(ChartType t);
ChartType chart_type_from_string(const std::string& s, const std::string& path);

struct ChartSpec {
  ChartType type = ChartType::Bar;
  std::vector<std::string> categories;
  std::vector<double> values;

  bool operator==(const ChartSpec&) const = default;
};

// The spy's chart is the original with exactly one transposition of two
// values; categories and layout are untouched. The swap indices always carry
// distinct values so the pair is observably different.
struct ChartPair {
  ChartSpec original;
  ChartSpec swapped;
  std::pair<int, int> swap_log{0, 0};

  bool operator==(const ChartPair&) const = default;
};

// Deterministic per seed: 3-8 categories, integer values in [1, 100].
ChartPair generate_chart_pair(std::uint64_t seed);

// Applies the logged transposition to a spec (an involution).
ChartSpec apply_swap(const ChartSpec& spec, std::pair<int, int> swap_log);

std::optional<std::string> check_chart_pair(const ChartPair& pair);

Json chart_spec_to_json(const ChartSpec& spec);
ChartSpec chart_spec_from_json(const Json& j, const std::string& path);

Json swap_log_to_json(const std::pair<int, int>& swap_log);
std::pair<int, int> swap_log_from_json(const Json& j, const std::string& path);

}  // namespace arena
