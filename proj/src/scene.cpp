#include "arena/scene.hpp"

#include <algorithm>
#include <cmath>

#include "arena/errors.hpp"
#include "arena/rng.hpp"

namespace arena {

namespace {

const std::array<std::string, 3> kShapeNames = {"cube", "sphere", "cylinder"};
const std::array<std::string, 8> kColorNames = {"gray", "red",    "blue", "green",
                                                "brown", "purple", "cyan", "yellow"};
const std::array<std::string, 2> kSizeNames = {"small", "large"};
const std::array<std::string, 2> kMaterialNames = {"metal", "rubber"};

template <typename Enum, std::size_t N>
Enum enum_from_string(const std::array<std::string, N>& names, const std::string& s,
                      const std::string& path, const char* what) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == s) return static_cast<Enum>(i);
  }
  throw ParseError(path + ": unknown " + what + " '" + s + "'");
}

}  // namespace

std::string to_string(Shape s) { return kShapeNames[static_cast<std::size_t>(s)]; }
std::string to_string(Color c) { return kColorNames[static_cast<std::size_t>(c)]; }
std::string to_string(ObjectSize s) { return kSizeNames[static_cast<std::size_t>(s)]; }
std::string to_string(Material m) { return kMaterialNames[static_cast<std::size_t>(m)]; }

Shape shape_from_string(const std::string& s, const std::string& path) {
  return enum_from_string<Shape>(kShapeNames, s, path, "shape");
}
Color color_from_string(const std::string& s, const std::string& path) {
  return enum_from_string<Color>(kColorNames, s, path, "color");
}
ObjectSize size_from_string(const std::string& s, const std::string& path) {
  return enum_from_string<ObjectSize>(kSizeNames, s, path, "size");
}
Material material_from_string(const std::string& s, const std::string& path) {
  return enum_from_string<Material>(kMaterialNames, s, path, "material");
}

double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Scene generate_scene(std::uint64_t seed, const SceneGenParams& params) {
  if (params.margin <= 0.0) {
    throw ConfigError("generate_scene: margin must be > 0");
  }
  RngStream rng(seed);
  const int n = static_cast<int>(rng.uniform_int(params.min_objects, params.max_objects));

  for (int attempt = 0; attempt < params.scene_retries; ++attempt) {
    Scene scene;
    scene.seed = seed;
    scene.objects.reserve(static_cast<std::size_t>(n));
    bool placed_all = true;
    for (int i = 0; i < n && placed_all; ++i) {
      SceneObject obj;
      obj.id = i;
      obj.shape = static_cast<Shape>(rng.uniform_int(0, kShapeCount - 1));
      obj.color = static_cast<Color>(rng.uniform_int(0, kColorCount - 1));
      obj.size = static_cast<ObjectSize>(rng.uniform_int(0, 1));
      obj.material = static_cast<Material>(rng.uniform_int(0, 1));

      bool placed = false;
      for (int r = 0; r < params.placement_retries; ++r) {
        Vec2 pos{rng.uniform_real01(), rng.uniform_real01()};
        bool clear = true;
        for (const auto& other : scene.objects) {
          if (distance(pos, other.position) < params.margin) {
            clear = false;
            break;
          }
        }
        if (clear) {
          obj.position = pos;
          placed = true;
          break;
        }
      }
      if (!placed) {
        placed_all = false;
        break;
      }
      scene.objects.push_back(obj);
    }
    if (placed_all) {
      return scene;
    }
  }
  throw GenerationError("generate_scene: could not place " + std::to_string(n) +
                        " objects with margin " + std::to_string(params.margin) + " after " +
                        std::to_string(params.scene_retries) + " scene retries");
}

ScenePair mutate_scene(const Scene& scene, std::uint64_t seed) {
  const int n = static_cast<int>(scene.objects.size());
  if (n < 2) {
    throw GenerationError("mutate_scene: scene has fewer than 2 objects");
  }
  RngStream rng(seed);
  const int first = static_cast<int>(rng.uniform_int(0, n - 1));
  int second = static_cast<int>(rng.uniform_int(0, n - 2));
  if (second >= first) ++second;

  ScenePair pair;
  pair.civilian = scene;
  pair.spy = scene;

  const std::array<int, 2> picks = {std::min(first, second), std::max(first, second)};
  for (std::size_t k = 0; k < 2; ++k) {
    SceneObject& obj = pair.spy.objects[static_cast<std::size_t>(picks[k])];
    ObjectChange change;
    change.id = obj.id;
    change.shape_before = obj.shape;
    change.color_before = obj.color;

    // Draw from the remaining values so "different" is strict.
    int shape_draw = static_cast<int>(rng.uniform_int(0, kShapeCount - 2));
    if (shape_draw >= static_cast<int>(obj.shape)) ++shape_draw;
    int color_draw = static_cast<int>(rng.uniform_int(0, kColorCount - 2));
    if (color_draw >= static_cast<int>(obj.color)) ++color_draw;

    obj.shape = static_cast<Shape>(shape_draw);
    obj.color = static_cast<Color>(color_draw);
    change.shape_after = obj.shape;
    change.color_after = obj.color;
    pair.change_log.entries[k] = change;
  }
  return pair;
}

std::optional<std::string> check_scene(const Scene& scene, double margin) {
  const std::size_t n = scene.objects.size();
  if (n < 4 || n > 6) {
    return "scene has " + std::to_string(n) + " objects, expected 4..6";
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (scene.objects[i].id == scene.objects[j].id) {
        return "duplicate object id " + std::to_string(scene.objects[i].id);
      }
      const double d = distance(scene.objects[i].position, scene.objects[j].position);
      if (d < margin) {
        return "objects " + std::to_string(scene.objects[i].id) + " and " +
               std::to_string(scene.objects[j].id) + " are " + std::to_string(d) +
               " apart, margin " + std::to_string(margin);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_pair(const ScenePair& pair) {
  const auto& civ = pair.civilian.objects;
  const auto& spy = pair.spy.objects;
  if (civ.size() != spy.size()) {
    return "object counts differ between civilian and spy scenes";
  }
  if (pair.change_log.entries[0].id == pair.change_log.entries[1].id) {
    return "change log mutates the same object twice";
  }
  for (const auto& change : pair.change_log.entries) {
    if (change.shape_after == change.shape_before) {
      return "object " + std::to_string(change.id) + ": shape did not change";
    }
    if (change.color_after == change.color_before) {
      return "object " + std::to_string(change.id) + ": color did not change";
    }
  }
  for (std::size_t i = 0; i < civ.size(); ++i) {
    const SceneObject& a = civ[i];
    const SceneObject& b = spy[i];
    if (a.id != b.id) return "object ids differ at index " + std::to_string(i);
    if (a.size != b.size || a.material != b.material || a.position.x != b.position.x ||
        a.position.y != b.position.y) {
      return "object " + std::to_string(a.id) + ": size/material/position changed";
    }
    const ObjectChange* logged = nullptr;
    for (const auto& change : pair.change_log.entries) {
      if (change.id == a.id) logged = &change;
    }
    if (logged != nullptr) {
      if (a.shape != logged->shape_before || b.shape != logged->shape_after ||
          a.color != logged->color_before || b.color != logged->color_after) {
        return "object " + std::to_string(a.id) + ": change log does not match scenes";
      }
    } else if (a.shape != b.shape || a.color != b.color) {
      return "object " + std::to_string(a.id) + " changed but is not in the change log";
    }
  }
  return std::nullopt;
}

Json scene_to_json(const Scene& scene) {
  Json objects = Json::array();
  for (const auto& obj : scene.objects) {
    objects.push_back(Json{{"id", obj.id},
                           {"shape", to_string(obj.shape)},
                           {"color", to_string(obj.color)},
                           {"size", to_string(obj.size)},
                           {"material", to_string(obj.material)},
                           {"position", Json::array({obj.position.x, obj.position.y})}});
  }
  return Json{{"seed", scene.seed}, {"objects", std::move(objects)}};
}

Scene scene_from_json(const Json& j, const std::string& path) {
  Scene scene;
  scene.seed = static_cast<std::uint64_t>(require_int(j, "seed", path));
  const Json& objects = require_array(j, "objects", path);
  std::size_t index = 0;
  for (const Json& o : objects) {
    const std::string opath = path + ".objects[" + std::to_string(index) + "]";
    SceneObject obj;
    obj.id = static_cast<int>(require_int(o, "id", opath));
    obj.shape = shape_from_string(require_string(o, "shape", opath), opath + ".shape");
    obj.color = color_from_string(require_string(o, "color", opath), opath + ".color");
    obj.size = size_from_string(require_string(o, "size", opath), opath + ".size");
    obj.material =
        material_from_string(require_string(o, "material", opath), opath + ".material");
    const Json& pos = require_array(o, "position", opath);
    if (pos.size() != 2 || !pos[0].is_number() || !pos[1].is_number()) {
      throw ParseError(opath + ".position: expected [x, y]");
    }
    obj.position = Vec2{pos[0].get<double>(), pos[1].get<double>()};
    scene.objects.push_back(obj);
    ++index;
  }
  return scene;
}

Json change_log_to_json(const ChangeLog& log) {
  Json entries = Json::array();
  for (const auto& change : log.entries) {
    entries.push_back(Json{{"id", change.id},
                           {"shape_before", to_string(change.shape_before)},
                           {"shape_after", to_string(change.shape_after)},
                           {"color_before", to_string(change.color_before)},
                           {"color_after", to_string(change.color_after)}});
  }
  return Json{{"changes", std::move(entries)}};
}

ChangeLog change_log_from_json(const Json& j, const std::string& path) {
  const Json& entries = require_array(j, "changes", path);
  if (entries.size() != 2) {
    throw ParseError(path + ".changes: expected exactly 2 entries, got " +
                     std::to_string(entries.size()));
  }
  ChangeLog log;
  for (std::size_t i = 0; i < 2; ++i) {
    const std::string epath = path + ".changes[" + std::to_string(i) + "]";
    const Json& e = entries[i];
    ObjectChange change;
    change.id = static_cast<int>(require_int(e, "id", epath));
    change.shape_before =
        shape_from_string(require_string(e, "shape_before", epath), epath + ".shape_before");
    change.shape_after =
        shape_from_string(require_string(e, "shape_after", epath), epath + ".shape_after");
    change.color_before =
        color_from_string(require_string(e, "color_before", epath), epath + ".color_before");
    change.color_after =
        color_from_string(require_string(e, "color_after", epath), epath + ".color_after");
    log.entries[i] = change;
  }
  return log;
}

std::string serialize_scene(const Scene& scene) { return scene_to_json(scene).dump(2) + "\n"; }

Scene deserialize_scene(const std::string& text, const std::string& context) {
  return scene_from_json(parse_json(text, context), context);
}

}  // namespace arena
