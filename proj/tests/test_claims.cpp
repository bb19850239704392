#include "arena/claims.hpp"
#include "arena/rng.hpp"
#include "doctest.h"

using namespace arena;

namespace {

// 0: small red metal cube      (0.1, 0.1)
// 1: large blue rubber sphere  (0.9, 0.1)
// 2: small green metal cylinder(0.1, 0.9)
// 3: large yellow rubber cube  (0.9, 0.9)
Scene fixture_scene() {
  Scene scene;
  scene.seed = 1;
  scene.objects = {
      SceneObject{0, Shape::Cube, Color::Red, ObjectSize::Small, Material::Metal, {0.1, 0.1}},
      SceneObject{1, Shape::Sphere, Color::Blue, ObjectSize::Large, Material::Rubber, {0.9, 0.1}},
      SceneObject{2, Shape::Cylinder, Color::Green, ObjectSize::Small, Material::Metal, {0.1, 0.9}},
      SceneObject{3, Shape::Cube, Color::Yellow, ObjectSize::Large, Material::Rubber, {0.9, 0.9}},
  };
  return scene;
}

Selector by_color(Color c) {
  Selector s;
  s.color = c;
  return s;
}

Selector by_shape(Shape sh) {
  Selector s;
  s.shape = sh;
  return s;
}

}  // namespace

TEST_SUITE("claims") {

TEST_CASE("attribute claims: true, false, ambiguous") {
  const Scene scene = fixture_scene();
  CHECK(evaluate(AttributeClaim{by_color(Color::Red), AttributeValue{ObjectSize::Small}}, scene) ==
        Truth::True);
  CHECK(evaluate(AttributeClaim{by_color(Color::Red), AttributeValue{ObjectSize::Large}}, scene) ==
        Truth::False);
  // Two cubes: the selector does not denote.
  CHECK(evaluate(AttributeClaim{by_shape(Shape::Cube), AttributeValue{Color::Red}}, scene) ==
        Truth::Ambiguous);
  // No purple object: zero matches is ambiguous too.
  CHECK(evaluate(AttributeClaim{by_color(Color::Purple), AttributeValue{ObjectSize::Small}},
                 scene) == Truth::Ambiguous);
}

TEST_CASE("relation claims follow x/y order with a dead zone") {
  const Scene scene = fixture_scene();
  CHECK(evaluate(RelationClaim{by_color(Color::Red), Relation::LeftOf, by_color(Color::Blue)},
                 scene) == Truth::True);
  CHECK(evaluate(RelationClaim{by_color(Color::Blue), Relation::LeftOf, by_color(Color::Red)},
                 scene) == Truth::False);
  CHECK(evaluate(RelationClaim{by_color(Color::Red), Relation::FrontOf, by_color(Color::Green)},
                 scene) == Truth::True);
  CHECK(evaluate(RelationClaim{by_color(Color::Green), Relation::Behind, by_color(Color::Red)},
                 scene) == Truth::True);
  // Same x within the dead zone: not claimable.
  CHECK(evaluate(RelationClaim{by_color(Color::Red), Relation::LeftOf, by_color(Color::Green)},
                 scene) == Truth::Ambiguous);
  // Selector matching two objects poisons the relation.
  CHECK(evaluate(RelationClaim{by_shape(Shape::Cube), Relation::LeftOf, by_color(Color::Blue)},
                 scene) == Truth::Ambiguous);
  // Both selectors resolving to the same object.
  Selector small_metal;
  small_metal.size = ObjectSize::Small;
  small_metal.material = Material::Metal;
  Selector red = by_color(Color::Red);
  Scene two = fixture_scene();
  two.objects.resize(2);  // only red cube and blue sphere remain
  small_metal.shape = Shape::Cube;
  CHECK(evaluate(RelationClaim{small_metal, Relation::LeftOf, red}, two) == Truth::Ambiguous);
}

TEST_CASE("superlative claims require a unique extremum") {
  Scene scene = fixture_scene();
  // Two large objects: neither is "the largest".
  CHECK(evaluate(SuperlativeClaim{by_color(Color::Blue), Superlative::Largest}, scene) ==
        Truth::False);
  scene.objects[3].size = ObjectSize::Small;
  CHECK(evaluate(SuperlativeClaim{by_color(Color::Blue), Superlative::Largest}, scene) ==
        Truth::True);
  CHECK(evaluate(SuperlativeClaim{by_color(Color::Red), Superlative::Largest}, scene) ==
        Truth::False);
  CHECK(evaluate(SuperlativeClaim{by_color(Color::Purple), Superlative::Largest}, scene) ==
        Truth::Ambiguous);
}

TEST_CASE("evaluation is total over fuzzed claims and scenes") {
  RngStream rng(2024);
  for (int i = 0; i < 300; ++i) {
    const Scene scene = generate_scene(static_cast<std::uint64_t>(i));
    const Scene other = generate_scene(static_cast<std::uint64_t>(i) + 5000);
    for (const Claim& claim : enumerate_candidate_claims(scene)) {
      const Truth on_own = evaluate(claim, scene);
      const Truth on_other = evaluate(claim, other);
      CHECK((on_own == Truth::True || on_own == Truth::False || on_own == Truth::Ambiguous));
      CHECK((on_other == Truth::True || on_other == Truth::False ||
             on_other == Truth::Ambiguous));
    }
    (void)rng;
  }
}

TEST_CASE("candidate claims reference unique selectors on their scene") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Scene scene = generate_scene(seed);
    for (const Claim& claim : enumerate_candidate_claims(scene)) {
      const std::size_t expected = std::holds_alternative<RelationClaim>(claim) ? 2 : 1;
      CHECK(referenced_ids(claim, scene).size() == expected);
    }
  }
}

TEST_CASE("rendering produces the documented sentence shapes") {
  CHECK(render(AttributeClaim{by_color(Color::Red), AttributeValue{ObjectSize::Small}}) ==
        "The red object is small.");
  CHECK(render(AttributeClaim{by_color(Color::Yellow), AttributeValue{Shape::Cube}}) ==
        "The yellow object is a cube.");
  CHECK(render(AttributeClaim{by_shape(Shape::Sphere), AttributeValue{Material::Rubber}}) ==
        "The sphere is made of rubber.");
  CHECK(render(RelationClaim{by_shape(Shape::Cylinder), Relation::LeftOf, by_shape(Shape::Cube)}) ==
        "The cylinder is to the left of the cube.");
  CHECK(render(SuperlativeClaim{by_color(Color::Yellow), Superlative::Largest}) ==
        "The yellow object is the largest object.");
  Selector full;
  full.size = ObjectSize::Small;
  full.color = Color::Red;
  full.material = Material::Metal;
  full.shape = Shape::Cube;
  CHECK(render(AttributeClaim{full, AttributeValue{Color::Red}}) ==
        "The small red metal cube is red.");
}

TEST_CASE("claim JSON round-trips") {
  const Scene scene = fixture_scene();
  for (const Claim& claim : enumerate_candidate_claims(scene)) {
    CHECK(claim_from_json(claim_to_json(claim), "rt") == claim);
  }
}

TEST_CASE("mentions helpers see selectors and assertions") {
  const Claim claim = AttributeClaim{by_color(Color::Red), AttributeValue{Shape::Sphere}};
  CHECK(mentions_color(claim, Color::Red));
  CHECK_FALSE(mentions_color(claim, Color::Blue));
  CHECK(mentions_shape(claim, Shape::Sphere));
  CHECK_FALSE(mentions_shape(claim, Shape::Cube));
}

}  // TEST_SUITE
