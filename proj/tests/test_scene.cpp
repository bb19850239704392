#include <set>

#include "arena/errors.hpp"
#include "arena/scene.hpp"
#include "doctest.h"

using namespace arena;

TEST_SUITE("scene") {

TEST_CASE("generation respects count and margin") {
  const SceneGenParams params;
  const Scene scene = generate_scene(7, params);
  CHECK(scene.objects.size() >= 4);
  CHECK(scene.objects.size() <= 6);
  CHECK_FALSE(check_scene(scene, params.margin).has_value());
}

TEST_CASE("same seed gives byte-identical serialization") {
  CHECK(serialize_scene(generate_scene(123)) == serialize_scene(generate_scene(123)));
  CHECK(serialize_scene(generate_scene(123)) != serialize_scene(generate_scene(124)));
}

TEST_CASE("1000 seeds: no invariant violations, counts cover 4..6") {
  const SceneGenParams params;
  std::set<std::size_t> counts;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Scene scene = generate_scene(seed, params);
    const auto problem = check_scene(scene, params.margin);
    REQUIRE_MESSAGE(!problem.has_value(), "seed ", seed, ": ", problem.value_or(""));
    counts.insert(scene.objects.size());
  }
  CHECK(counts == std::set<std::size_t>{4, 5, 6});
}

TEST_CASE("impossible margin raises a generation error, never shrinks the scene") {
  SceneGenParams params;
  params.margin = 0.9;  // at most 2 points in the unit square can be this far apart
  CHECK_THROWS_AS(generate_scene(1, params), GenerationError);
}

TEST_CASE("non-positive margin is a config error") {
  SceneGenParams params;
  params.margin = 0.0;
  CHECK_THROWS_AS(generate_scene(1, params), ConfigError);
}

TEST_CASE("mutation changes exactly two objects in shape and color only") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Scene scene = generate_scene(seed);
    const ScenePair pair = mutate_scene(scene, seed ^ 0xabcd);
    REQUIRE(pair.civilian == scene);
    const auto problem = check_pair(pair);
    REQUIRE_MESSAGE(!problem.has_value(), "seed ", seed, ": ", problem.value_or(""));

    int diffs = 0;
    for (std::size_t i = 0; i < scene.objects.size(); ++i) {
      const SceneObject& before = pair.civilian.objects[i];
      const SceneObject& after = pair.spy.objects[i];
      CHECK(before.position.x == after.position.x);
      CHECK(before.position.y == after.position.y);
      CHECK(before.size == after.size);
      CHECK(before.material == after.material);
      if (!(before == after)) {
        ++diffs;
        CHECK(before.shape != after.shape);
        CHECK(before.color != after.color);
      }
    }
    CHECK(diffs == 2);
  }
}

TEST_CASE("mutation is deterministic per (scene, seed)") {
  const Scene scene = generate_scene(5);
  const ScenePair a = mutate_scene(scene, 77);
  const ScenePair b = mutate_scene(scene, 77);
  CHECK(a.change_log == b.change_log);
  CHECK(a.spy == b.spy);
}

TEST_CASE("mutating a tiny scene fails loudly") {
  Scene scene;
  scene.objects.push_back(SceneObject{});
  CHECK_THROWS_AS(mutate_scene(scene, 1), GenerationError);
}

TEST_CASE("serialization round-trips") {
  for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
    const Scene scene = generate_scene(seed);
    CHECK(deserialize_scene(serialize_scene(scene), "roundtrip") == scene);

    const ScenePair pair = mutate_scene(scene, seed);
    const Json log = change_log_to_json(pair.change_log);
    CHECK(change_log_from_json(log, "roundtrip") == pair.change_log);
  }
}

TEST_CASE("hand-written minimal scene file loads and validates") {
  const std::string text = R"({
    "seed": 1,
    "objects": [
      {"id": 0, "shape": "cube", "color": "red", "size": "small", "material": "metal", "position": [0.1, 0.1]},
      {"id": 1, "shape": "sphere", "color": "blue", "size": "large", "material": "rubber", "position": [0.9, 0.1]},
      {"id": 2, "shape": "cylinder", "color": "green", "size": "small", "material": "metal", "position": [0.1, 0.9]},
      {"id": 3, "shape": "cube", "color": "yellow", "size": "large", "material": "rubber", "position": [0.9, 0.9]}
    ]
  })";
  const Scene scene = deserialize_scene(text, "fixture");
  CHECK(scene.objects.size() == 4);
  CHECK_FALSE(check_scene(scene, 0.12).has_value());
}

TEST_CASE("malformed input names the offending field") {
  CHECK_THROWS_WITH_AS(deserialize_scene("{\"seed\": 1}", "fixture"),
                       "fixture: missing required field 'objects'", ParseError);
  CHECK_THROWS_WITH_AS(
      deserialize_scene(R"({"seed": 1, "objects": [{"id": 0}]})", "fixture"),
      "fixture.objects[0]: missing required field 'shape'", ParseError);
  CHECK_THROWS_WITH_AS(
      deserialize_scene(
          R"({"seed": 1, "objects": [{"id": 0, "shape": "prism", "color": "red", "size": "small", "material": "metal", "position": [0, 0]}]})",
          "fixture"),
      "fixture.objects[0].shape: unknown shape 'prism'", ParseError);
  CHECK_THROWS_AS(deserialize_scene("not json", "fixture"), ParseError);
}

}  // TEST_SUITE
