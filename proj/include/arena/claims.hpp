#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arena/jsonio.hpp"
#include "arena/scene.hpp"

namespace arena {

// Attribute conjunction used to refer to an object ("the large red cube").
// A claim is ambiguous on a scene whenever one of its selectors matches a
// number of objects other than exactly one.
struct Selector {
  std::optional<Shape> shape;
  std::optional<Color> color;
  std::optional<ObjectSize> size;
  std::optional<Material> material;

  bool operator==(const Selector&) const = default;
};

// One attribute value, used as the asserted part of an attribute claim.
struct AttributeValue {
  std::variant<Shape, Color, ObjectSize, Material> value;

  bool operator==(const AttributeValue&) const = default;
};

enum class Relation { LeftOf, RightOf, FrontOf, Behind };
enum class Superlative { Largest, Smallest };

// "The <selector> is <attribute>."
struct AttributeClaim {
  Selector selector;
  AttributeValue asserted;

  bool operator==(const AttributeClaim&) const = default;
};

// "The <a> is to the left of the <b>." Left/right come from x order and
// front/behind from y order (front = smaller y); differences inside the
// dead zone are not claimable and evaluate as ambiguous.
struct RelationClaim {
  Selector a;
  Relation relation = Relation::LeftOf;
  Selector b;

  bool operator==(const RelationClaim&) const = default;
};

// "The <selector> is the largest object." True only for a unique extremum
// of the two-valued size attribute.
struct SuperlativeClaim {
  Selector selector;
  Superlative superlative = Superlative::Largest;

  bool operator==(const SuperlativeClaim&) const = default;
};

using Claim = std::variant<AttributeClaim, RelationClaim, SuperlativeClaim>;

enum class Truth { True, False, Ambiguous };

inline constexpr double kRelationDeadZone = 0.05;

// Total: every claim evaluates to exactly one of {True, False, Ambiguous}
// on every scene.
Truth evaluate(const Claim& claim, const Scene& scene);

// Number of objects the selector matches in the scene.
int count_matches(const Selector& selector, const Scene& scene);

// Ids of objects referenced by the claim's selectors on this scene.
// Empty entries for selectors that do not match exactly one object.
std::vector<int> referenced_ids(const Claim& claim, const Scene& scene);

// True when any of the claim's selectors or assertions mentions the given
// shape or color value.
bool mentions_shape(const Claim& claim, Shape shape);
bool mentions_color(const Claim& claim, Color color);

// English rendering, e.g. "The small red cube is made of metal."
std::string render(const Claim& claim);

Json claim_to_json(const Claim& claim);
Claim claim_from_json(const Json& j, const std::string& path);

// Candidate claims built from the scene's actual attributes, in a fixed
// deterministic order. Candidates are not guaranteed true (relations inside
// the dead zone and non-unique superlatives drop out at evaluation time).
std::vector<Claim> enumerate_candidate_claims(const Scene& scene);

}  // namespace arena
