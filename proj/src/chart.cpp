#include "arena/chart.hpp"

#include <algorithm>
#include <array>

#include "arena/errors.hpp"
#include "arena/rng.hpp"

namespace arena {

namespace {

const std::array<std::string, 3> kChartTypeNames = {"line", "bar", "pie"};

// Fixed label vocabulary; category count never exceeds its size.
const std::array<std::string, 8> kCategoryLabels = {"alpha",   "bravo", "charlie", "delta",
                                                    "echo",    "foxtrot", "golf",  "hotel"};

}  // namespace

std::string to_string(ChartType t) { return kChartTypeNames[static_cast<std::size_t>(t)]; }

ChartType chart_type_from_string(const std::string& s, const std::string& path) {
  for (std::size_t i = 0; i < kChartTypeNames.size(); ++i) {
    if (kChartTypeNames[i] == s) return static_cast<ChartType>(i);
  }
  throw ParseError(path + ": unknown chart type '" + s + "'");
}

ChartPair generate_chart_pair(std::uint64_t seed) {
  RngStream rng(seed);
  ChartPair pair;
  pair.original.type = static_cast<ChartType>(rng.uniform_int(0, 2));
  const int n = static_cast<int>(rng.uniform_int(3, 8));
  pair.original.categories.assign(kCategoryLabels.begin(), kCategoryLabels.begin() + n);

  // Resample until at least two values differ, so a distinct-valued swap exists.
  do {
    pair.original.values.clear();
    for (int i = 0; i < n; ++i) {
      pair.original.values.push_back(static_cast<double>(rng.uniform_int(1, 100)));
    }
  } while (std::all_of(pair.original.values.begin(), pair.original.values.end(),
                       [&](double v) { return v == pair.original.values.front(); }));

  int a = 0;
  int b = 0;
  do {
    a = static_cast<int>(rng.uniform_int(0, n - 1));
    b = static_cast<int>(rng.uniform_int(0, n - 2));
    if (b >= a) ++b;
  } while (pair.original.values[static_cast<std::size_t>(a)] ==
           pair.original.values[static_cast<std::size_t>(b)]);

  pair.swap_log = {std::min(a, b), std::max(a, b)};
  pair.swapped = apply_swap(pair.original, pair.swap_log);
  return pair;
}

ChartSpec apply_swap(const ChartSpec& spec, std::pair<int, int> swap_log) {
  ChartSpec out = spec;
  std::swap(out.values[static_cast<std::size_t>(swap_log.first)],
            out.values[static_cast<std::size_t>(swap_log.second)]);
  return out;
}

std::optional<std::string> check_chart_pair(const ChartPair& pair) {
  const auto& a = pair.original;
  const auto& b = pair.swapped;
  if (a.type != b.type) return "chart type changed";
  if (a.categories != b.categories) return "categories changed";
  if (a.values.size() != b.values.size()) return "value counts differ";
  const auto [i, j] = pair.swap_log;
  const int n = static_cast<int>(a.values.size());
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
    return "swap log indices out of range";
  }
  for (int k = 0; k < n; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    if (k == i || k == j) continue;
    if (a.values[ku] != b.values[ku]) {
      return "value at index " + std::to_string(k) + " changed outside the swap";
    }
  }
  const auto iu = static_cast<std::size_t>(i);
  const auto ju = static_cast<std::size_t>(j);
  if (a.values[iu] != b.values[ju] || a.values[ju] != b.values[iu]) {
    return "swap log does not match the value transposition";
  }
  if (a.values[iu] == a.values[ju]) {
    return "swapped values are equal; pair is not observably different";
  }
  return std::nullopt;
}

Json chart_spec_to_json(const ChartSpec& spec) {
  return Json{{"chart_type", to_string(spec.type)},
              {"categories", spec.categories},
              {"values", spec.values}};
}

ChartSpec chart_spec_from_json(const Json& j, const std::string& path) {
  ChartSpec spec;
  spec.type = chart_type_from_string(require_string(j, "chart_type", path), path + ".chart_type");
  const Json& cats = require_array(j, "categories", path);
  for (const Json& c : cats) {
    if (!c.is_string()) throw ParseError(path + ".categories: expected strings");
    spec.categories.push_back(c.get<std::string>());
  }
  const Json& vals = require_array(j, "values", path);
  for (const Json& v : vals) {
    if (!v.is_number()) throw ParseError(path + ".values: expected numbers");
    spec.values.push_back(v.get<double>());
  }
  if (spec.categories.size() != spec.values.size()) {
    throw ParseError(path + ": categories and values have different lengths");
  }
  return spec;
}

Json swap_log_to_json(const std::pair<int, int>& swap_log) {
  return Json{{"swap", Json::array({swap_log.first, swap_log.second})}};
}

std::pair<int, int> swap_log_from_json(const Json& j, const std::string& path) {
  const Json& s = require_array(j, "swap", path);
  if (s.size() != 2 || !s[0].is_number_integer() || !s[1].is_number_integer()) {
    throw ParseError(path + ".swap: expected [i, j]");
  }
  return {s[0].get<int>(), s[1].get<int>()};
}

}  // namespace arena
