#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arena/jsonio.hpp"

namespace arena {

// Attribute vocabularies are fixed; scenes never contain values outside them.
enum class Shape { Cube, Sphere, Cylinder };
enum class Color { Gray, Red, Blue, Green, Brown, Purple, Cyan, Yellow };
enum class ObjectSize { Small, Large };
enum class Material { Metal, Rubber };

inline constexpr int kShapeCount = 3;
inline constexpr int kColorCount = 8;

std::string to_string(Shape s);
std::string to_string(Color c);
std::string to_string(ObjectSize s);
std::string to_string(Material m);

Shape shape_from_string(const std::string& s, const std::string& path);
Color color_from_string(const std::string& s, const std::string& path);
ObjectSize size_from_string(const std::string& s, const std::string& path);
Material material_from_string(const std::string& s, const std::string& path);

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Vec2& a, const Vec2& b);

struct SceneObject {
  int id = 0;
  Shape shape = Shape::Cube;
  Color color = Color::Gray;
  ObjectSize size = ObjectSize::Small;
  Material material = Material::Metal;
  Vec2 position;

  bool operator==(const SceneObject&) const = default;
};

// A symbolic scene: 4-6 attribute records on a unit plane, no two objects
// closer than the placement margin.
struct Scene {
  std::vector<SceneObject> objects;
  std::uint64_t seed = 0;

  bool operator==(const Scene&) const = default;
};

struct ObjectChange {
  int id = 0;
  Shape shape_before = Shape::Cube;
  Shape shape_after = Shape::Cube;
  Color color_before = Color::Gray;
  Color color_after = Color::Gray;

  bool operator==(const ObjectChange&) const = default;
};

// Exactly two objects change, each in both shape and color; nothing else.
struct ChangeLog {
  std::array<ObjectChange, 2> entries;

  bool operator==(const ChangeLog&) const = default;
};

struct ScenePair {
  Scene civilian;
  Scene spy;
  ChangeLog change_log;

  bool operator==(const ScenePair&) const = default;
};

struct SceneGenParams {
  double margin = 0.12;        // minimum pairwise distance between objects
  int min_objects = 4;
  int max_objects = 6;
  int placement_retries = 200; // per object
  int scene_retries = 50;      // whole-scene restarts before giving up
};

// Deterministic per seed. Throws GenerationError if placement cannot satisfy
// the margin within the retry budget; the object count is never shrunk.
Scene generate_scene(std::uint64_t seed, const SceneGenParams& params = {});

// Two objects drawn uniformly; each receives a shape from the 2 remaining
// shapes and a color from the 7 remaining colors. The civilian scene is the
// input unchanged.
ScenePair mutate_scene(const Scene& scene, std::uint64_t seed);

// Invariant checks; return a description of the first violation, if any.
std::optional<std::string> check_scene(const Scene& scene, double margin);
std::optional<std::string> check_pair(const ScenePair& pair);

Json scene_to_json(const Scene& scene);
Scene scene_from_json(const Json& j, const std::string& path);

Json change_log_to_json(const ChangeLog& log);
ChangeLog change_log_from_json(const Json& j, const std::string& path);

std::string serialize_scene(const Scene& scene);
Scene deserialize_scene(const std::string& text, const std::string& context);

}  // namespace arena
