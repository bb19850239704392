#include <algorithm>

#include "arena/chart.hpp"
#include "arena/errors.hpp"
#include "doctest.h"

using namespace arena;

TEST_SUITE("chart") {

TEST_CASE("a logged swap is a plain transposition") {
  ChartSpec original;
  original.type = ChartType::Bar;
  original.categories = {"alpha", "bravo", "charlie"};
  original.values = {3, 5, 9};
  const ChartSpec swapped = apply_swap(original, {0, 2});
  CHECK(swapped.values == std::vector<double>{9, 5, 3});
}

TEST_CASE("swap is an involution") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ChartPair pair = generate_chart_pair(seed);
    CHECK(apply_swap(pair.swapped, pair.swap_log) == pair.original);
  }
}

TEST_CASE("values are permuted, never altered") {
  for (std::uint64_t seed = 200; seed < 400; ++seed) {
    const ChartPair pair = generate_chart_pair(seed);
    auto a = pair.original.values;
    auto b = pair.swapped.values;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("1000 seeds: every swapped spec is observably different and valid") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const ChartPair pair = generate_chart_pair(seed);
    const auto problem = check_chart_pair(pair);
    REQUIRE_MESSAGE(!problem.has_value(), "seed ", seed, ": ", problem.value_or(""));
    CHECK(pair.original.values != pair.swapped.values);
    CHECK(pair.original.categories.size() >= 3);
    CHECK(pair.original.categories.size() <= 8);
    for (double v : pair.original.values) {
      CHECK(v >= 1.0);
      CHECK(v <= 100.0);
    }
  }
}

TEST_CASE("generation is deterministic per seed") {
  CHECK(generate_chart_pair(42) == generate_chart_pair(42));
}

TEST_CASE("serialization round-trips and rejects bad input") {
  const ChartPair pair = generate_chart_pair(7);
  CHECK(chart_spec_from_json(chart_spec_to_json(pair.original), "rt") == pair.original);
  CHECK(swap_log_from_json(swap_log_to_json(pair.swap_log), "rt") == pair.swap_log);

  CHECK_THROWS_WITH_AS(
      chart_spec_from_json(Json{{"chart_type", "scatter"}, {"categories", Json::array()}, {"values", Json::array()}}, "rt"),
      "rt.chart_type: unknown chart type 'scatter'", ParseError);
  CHECK_THROWS_AS(
      chart_spec_from_json(Json{{"chart_type", "bar"},
                                {"categories", Json::array({"a"})},
                                {"values", Json::array({1.0, 2.0})}},
                           "rt"),
      ParseError);
}

}  // TEST_SUITE
