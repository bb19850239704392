#include "arena/claims.hpp"

#include <array>
#include <cmath>

#include "arena/errors.hpp"

namespace arena {

namespace {

bool matches(const Selector& sel, const SceneObject& obj) {
  if (sel.shape && *sel.shape != obj.shape) return false;
  if (sel.color && *sel.color != obj.color) return false;
  if (sel.size && *sel.size != obj.size) return false;
  if (sel.material && *sel.material != obj.material) return false;
  return true;
}

const SceneObject* unique_match(const Selector& sel, const Scene& scene) {
  const SceneObject* found = nullptr;
  for (const auto& obj : scene.objects) {
    if (matches(sel, obj)) {
      if (found != nullptr) return nullptr;
      found = &obj;
    }
  }
  return found;
}

bool attribute_holds(const AttributeValue& value, const SceneObject& obj) {
  return std::visit(
      [&](auto v) {
        using T = decltype(v);
        if constexpr (std::is_same_v<T, Shape>) return obj.shape == v;
        else if constexpr (std::is_same_v<T, Color>) return obj.color == v;
        else if constexpr (std::is_same_v<T, ObjectSize>) return obj.size == v;
        else return obj.material == v;
      },
      value.value);
}

std::string describe(const Selector& sel) {
  std::string out = "the";
  if (sel.size) out += " " + to_string(*sel.size);
  if (sel.color) out += " " + to_string(*sel.color);
  if (sel.material) out += " " + to_string(*sel.material);
  out += sel.shape ? " " + to_string(*sel.shape) : " object";
  return out;
}

std::string describe(const AttributeValue& value) {
  return std::visit(
      [](auto v) -> std::string {
        using T = decltype(v);
        if constexpr (std::is_same_v<T, Shape>) return "a " + to_string(v);
        else if constexpr (std::is_same_v<T, Color>) return to_string(v);
        else if constexpr (std::is_same_v<T, ObjectSize>) return to_string(v);
        else return "made of " + to_string(v);
      },
      value.value);
}

std::string describe(Relation r) {
  switch (r) {
    case Relation::LeftOf: return "to the left of";
    case Relation::RightOf: return "to the right of";
    case Relation::FrontOf: return "in front of";
    case Relation::Behind: return "behind";
  }
  return "";
}

bool selector_mentions_shape(const Selector& sel, Shape shape) {
  return sel.shape && *sel.shape == shape;
}

bool selector_mentions_color(const Selector& sel, Color color) {
  return sel.color && *sel.color == color;
}

Json selector_to_json(const Selector& sel) {
  Json j = Json::object();
  if (sel.shape) j["shape"] = to_string(*sel.shape);
  if (sel.color) j["color"] = to_string(*sel.color);
  if (sel.size) j["size"] = to_string(*sel.size);
  if (sel.material) j["material"] = to_string(*sel.material);
  return j;
}

Selector selector_from_json(const Json& j, const std::string& path) {
  Selector sel;
  if (j.contains("shape")) sel.shape = shape_from_string(j["shape"], path + ".shape");
  if (j.contains("color")) sel.color = color_from_string(j["color"], path + ".color");
  if (j.contains("size")) sel.size = size_from_string(j["size"], path + ".size");
  if (j.contains("material"))
    sel.material = material_from_string(j["material"], path + ".material");
  return sel;
}

}  // namespace

int count_matches(const Selector& selector, const Scene& scene) {
  int count = 0;
  for (const auto& obj : scene.objects) {
    if (matches(selector, obj)) ++count;
  }
  return count;
}

Truth evaluate(const Claim& claim, const Scene& scene) {
  if (const auto* attr = std::get_if<AttributeClaim>(&claim)) {
    const SceneObject* obj = unique_match(attr->selector, scene);
    if (obj == nullptr) return Truth::Ambiguous;
    return attribute_holds(attr->asserted, *obj) ? Truth::True : Truth::False;
  }
  if (const auto* rel = std::get_if<RelationClaim>(&claim)) {
    const SceneObject* a = unique_match(rel->a, scene);
    const SceneObject* b = unique_match(rel->b, scene);
    if (a == nullptr || b == nullptr || a == b) return Truth::Ambiguous;
    const bool horizontal =
        rel->relation == Relation::LeftOf || rel->relation == Relation::RightOf;
    const double delta =
        horizontal ? a->position.x - b->position.x : a->position.y - b->position.y;
    if (std::abs(delta) < kRelationDeadZone) return Truth::Ambiguous;
    switch (rel->relation) {
      case Relation::LeftOf: return delta < 0 ? Truth::True : Truth::False;
      case Relation::RightOf: return delta > 0 ? Truth::True : Truth::False;
      case Relation::FrontOf: return delta < 0 ? Truth::True : Truth::False;
      case Relation::Behind: return delta > 0 ? Truth::True : Truth::False;
    }
    return Truth::Ambiguous;
  }
  const auto& sup = std::get<SuperlativeClaim>(claim);
  const SceneObject* obj = unique_match(sup.selector, scene);
  if (obj == nullptr) return Truth::Ambiguous;
  const ObjectSize wanted =
      sup.superlative == Superlative::Largest ? ObjectSize::Large : ObjectSize::Small;
  if (obj->size != wanted) return Truth::False;
  for (const auto& other : scene.objects) {
    if (other.id != obj->id && other.size == wanted) return Truth::False;
  }
  return Truth::True;
}

std::vector<int> referenced_ids(const Claim& claim, const Scene& scene) {
  std::vector<int> ids;
  auto add = [&](const Selector& sel) {
    if (const SceneObject* obj = unique_match(sel, scene)) ids.push_back(obj->id);
  };
  if (const auto* attr = std::get_if<AttributeClaim>(&claim)) {
    add(attr->selector);
  } else if (const auto* rel = std::get_if<RelationClaim>(&claim)) {
    add(rel->a);
    add(rel->b);
  } else {
    add(std::get<SuperlativeClaim>(claim).selector);
  }
  return ids;
}

bool mentions_shape(const Claim& claim, Shape shape) {
  if (const auto* attr = std::get_if<AttributeClaim>(&claim)) {
    if (selector_mentions_shape(attr->selector, shape)) return true;
    if (const auto* s = std::get_if<Shape>(&attr->asserted.value)) return *s == shape;
    return false;
  }
  if (const auto* rel = std::get_if<RelationClaim>(&claim)) {
    return selector_mentions_shape(rel->a, shape) || selector_mentions_shape(rel->b, shape);
  }
  return selector_mentions_shape(std::get<SuperlativeClaim>(claim).selector, shape);
}

bool mentions_color(const Claim& claim, Color color) {
  if (const auto* attr = std::get_if<AttributeClaim>(&claim)) {
    if (selector_mentions_color(attr->selector, color)) return true;
    if (const auto* c = std::get_if<Color>(&attr->asserted.value)) return *c == color;
    return false;
  }
  if (const auto* rel = std::get_if<RelationClaim>(&claim)) {
    return selector_mentions_color(rel->a, color) || selector_mentions_color(rel->b, color);
  }
  return selector_mentions_color(std::get<SuperlativeClaim>(claim).selector, color);
}

std::string render(const Claim& claim) {
  std::string sentence;
  if (const auto* attr = std::get_if<AttributeClaim>(&claim)) {
    sentence = describe(attr->selector) + " is " + describe(attr->asserted);
  } else if (const auto* rel = std::get_if<RelationClaim>(&claim)) {
    sentence = describe(rel->a) + " is " + describe(rel->relation) + " " + describe(rel->b);
  } else {
    const auto& sup = std::get<SuperlativeClaim>(claim);
    sentence = describe(sup.selector) + " is the " +
               (sup.superlative == Superlative::Largest ? std::string("largest")
                                                        : std::string("smallest")) +
               " object";
  }
  sentence[0] = 'T';
  return sentence + ".";
}

Json claim_to_json(const Claim& claim) {
  if (const auto* attr = std::get_if<AttributeClaim>(&claim)) {
    Json asserted = std::visit(
        [](auto v) -> Json {
          using T = decltype(v);
          const char* kind = std::is_same_v<T, Shape>        ? "shape"
                             : std::is_same_v<T, Color>      ? "color"
                             : std::is_same_v<T, ObjectSize> ? "size"
                                                             : "material";
          return Json{{"attribute", kind}, {"value", to_string(v)}};
        },
        attr->asserted.value);
    return Json{{"kind", "attribute"},
                {"selector", selector_to_json(attr->selector)},
                {"asserted", std::move(asserted)}};
  }
  if (const auto* rel = std::get_if<RelationClaim>(&claim)) {
    static const std::array<std::string, 4> names = {"left_of", "right_of", "front_of", "behind"};
    return Json{{"kind", "relation"},
                {"a", selector_to_json(rel->a)},
                {"relation", names[static_cast<std::size_t>(rel->relation)]},
                {"b", selector_to_json(rel->b)}};
  }
  const auto& sup = std::get<SuperlativeClaim>(claim);
  return Json{{"kind", "superlative"},
              {"selector", selector_to_json(sup.selector)},
              {"superlative",
               sup.superlative == Superlative::Largest ? "largest" : "smallest"}};
}

Claim claim_from_json(const Json& j, const std::string& path) {
  const std::string kind = require_string(j, "kind", path);
  if (kind == "attribute") {
    AttributeClaim claim;
    claim.selector = selector_from_json(require_field(j, "selector", path), path + ".selector");
    const Json& asserted = require_field(j, "asserted", path);
    const std::string attribute = require_string(asserted, "attribute", path + ".asserted");
    const std::string value = require_string(asserted, "value", path + ".asserted");
    const std::string vpath = path + ".asserted.value";
    if (attribute == "shape") claim.asserted.value = shape_from_string(value, vpath);
    else if (attribute == "color") claim.asserted.value = color_from_string(value, vpath);
    else if (attribute == "size") claim.asserted.value = size_from_string(value, vpath);
    else if (attribute == "material") claim.asserted.value = material_from_string(value, vpath);
    else throw ParseError(path + ".asserted.attribute: unknown attribute '" + attribute + "'");
    return claim;
  }
  if (kind == "relation") {
    RelationClaim claim;
    claim.a = selector_from_json(require_field(j, "a", path), path + ".a");
    claim.b = selector_from_json(require_field(j, "b", path), path + ".b");
    const std::string rel = require_string(j, "relation", path);
    if (rel == "left_of") claim.relation = Relation::LeftOf;
    else if (rel == "right_of") claim.relation = Relation::RightOf;
    else if (rel == "front_of") claim.relation = Relation::FrontOf;
    else if (rel == "behind") claim.relation = Relation::Behind;
    else throw ParseError(path + ".relation: unknown relation '" + rel + "'");
    return claim;
  }
  if (kind == "superlative") {
    SuperlativeClaim claim;
    claim.selector = selector_from_json(require_field(j, "selector", path), path + ".selector");
    const std::string sup = require_string(j, "superlative", path);
    if (sup == "largest") claim.superlative = Superlative::Largest;
    else if (sup == "smallest") claim.superlative = Superlative::Smallest;
    else throw ParseError(path + ".superlative: unknown superlative '" + sup + "'");
    return claim;
  }
  throw ParseError(path + ".kind: unknown claim kind '" + kind + "'");
}

std::vector<Claim> enumerate_candidate_claims(const Scene& scene) {
  std::vector<Claim> claims;

  // Selector families, from an object's own attributes, in a fixed order.
  enum Field { FShape = 1, FColor = 2, FSize = 4, FMaterial = 8 };
  static const std::array<int, 8> kFamilies = {
      FShape,          FColor,           FColor | FShape,    FSize | FShape,
      FSize | FColor,  FMaterial | FShape, FMaterial | FColor, FSize | FMaterial};

  auto build = [](const SceneObject& obj, int family) {
    Selector sel;
    if (family & FShape) sel.shape = obj.shape;
    if (family & FColor) sel.color = obj.color;
    if (family & FSize) sel.size = obj.size;
    if (family & FMaterial) sel.material = obj.material;
    return sel;
  };

  // Attribute claims: unique selector plus one attribute it does not mention.
  for (const auto& obj : scene.objects) {
    for (int family : kFamilies) {
      const Selector sel = build(obj, family);
      if (count_matches(sel, scene) != 1) continue;
      if (!(family & FShape)) claims.push_back(AttributeClaim{sel, AttributeValue{obj.shape}});
      if (!(family & FColor)) claims.push_back(AttributeClaim{sel, AttributeValue{obj.color}});
      if (!(family & FSize)) claims.push_back(AttributeClaim{sel, AttributeValue{obj.size}});
      if (!(family & FMaterial))
        claims.push_back(AttributeClaim{sel, AttributeValue{obj.material}});
    }
  }

  // Minimal unique selector per object, for relations and superlatives.
  std::vector<const SceneObject*> selectable;
  std::vector<Selector> minimal;
  for (const auto& obj : scene.objects) {
    for (int family : kFamilies) {
      const Selector sel = build(obj, family);
      if (count_matches(sel, scene) == 1) {
        selectable.push_back(&obj);
        minimal.push_back(sel);
        break;
      }
    }
  }

  for (std::size_t i = 0; i < selectable.size(); ++i) {
    for (std::size_t j = 0; j < selectable.size(); ++j) {
      if (i == j) continue;
      const Vec2& pa = selectable[i]->position;
      const Vec2& pb = selectable[j]->position;
      if (pa.x - pb.x <= -kRelationDeadZone) {
        claims.push_back(RelationClaim{minimal[i], Relation::LeftOf, minimal[j]});
      }
      if (pa.y - pb.y <= -kRelationDeadZone) {
        claims.push_back(RelationClaim{minimal[i], Relation::FrontOf, minimal[j]});
      }
    }
  }

  for (std::size_t i = 0; i < selectable.size(); ++i) {
    const Superlative sup = selectable[i]->size == ObjectSize::Large ? Superlative::Largest
                                                                     : Superlative::Smallest;
    claims.push_back(SuperlativeClaim{minimal[i], sup});
  }

  return claims;
}

}  // namespace arena
