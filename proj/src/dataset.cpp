#include "arena/dataset.hpp"

#include <filesystem>

#include "arena/errors.hpp"
#include "arena/rng.hpp"

namespace fs = std::filesystem;

namespace arena {

namespace {

constexpr std::uint64_t kPairStream = 0x9a17;

std::string dump_pretty(const Json& j) { return j.dump(2) + "\n"; }

void write_pair_files(const std::string& pair_dir, const std::string& civilian,
                      const std::string& spy, const std::string& changelog) {
  std::error_code ec;
  fs::create_directories(pair_dir, ec);
  if (ec) {
    throw IoError("cannot create directory: " + pair_dir + ": " + ec.message());
  }
  write_file(pair_dir + "/civilian.json", civilian);
  write_file(pair_dir + "/spy.json", spy);
  write_file(pair_dir + "/changelog.json", changelog);
}

}  // namespace

std::string pair_id_for_index(int index) {
  std::string id = std::to_string(index);
  return std::string(id.size() >= 6 ? 0 : 6 - id.size(), '0') + id;
}

DatasetManifest generate_dataset(const std::string& out_dir, int n_pairs,
                                 const std::string& kind, std::uint64_t seed,
                                 const SceneGenParams& params) {
  if (kind != "clevr" && kind != "chart") {
    throw ConfigError("gen-data: unknown kind '" + kind + "' (expected clevr or chart)");
  }
  if (n_pairs < 0) {
    throw ConfigError("gen-data: n_pairs must be >= 0");
  }
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create directory: " + out_dir + ": " + ec.message());
  }

  DatasetManifest manifest;
  manifest.kind = kind;
  manifest.base_seed = seed;
  manifest.margin = params.margin;

  for (int i = 0; i < n_pairs; ++i) {
    const std::string id = pair_id_for_index(i);
    const std::uint64_t pair_seed = derive_seed(seed, kPairStream, static_cast<std::uint64_t>(i));
    std::string civilian_text;
    std::string spy_text;
    std::string changelog_text;

    if (kind == "clevr") {
      const Scene scene = generate_scene(pair_seed, params);
      const ScenePair pair = mutate_scene(scene, derive_seed(pair_seed, 0x0d1f));
      if (auto problem = check_pair(pair)) {
        throw GenerationError("pair " + id + ": " + *problem);
      }
      civilian_text = dump_pretty(scene_to_json(pair.civilian));
      spy_text = dump_pretty(scene_to_json(pair.spy));
      changelog_text = dump_pretty(change_log_to_json(pair.change_log));
    } else {
      const ChartPair pair = generate_chart_pair(pair_seed);
      if (auto problem = check_chart_pair(pair)) {
        throw GenerationError("pair " + id + ": " + *problem);
      }
      civilian_text = dump_pretty(chart_spec_to_json(pair.original));
      spy_text = dump_pretty(chart_spec_to_json(pair.swapped));
      changelog_text = dump_pretty(swap_log_to_json(pair.swap_log));
    }

    write_pair_files(out_dir + "/pairs/" + id, civilian_text, spy_text, changelog_text);
    manifest.pairs.push_back(PairEntry{
        id, pair_seed, hex64(fnv1a64(civilian_text + spy_text + changelog_text))});
  }

  Json pairs = Json::array();
  for (const PairEntry& entry : manifest.pairs) {
    pairs.push_back(Json{{"id", entry.id}, {"seed", entry.seed}, {"hash", entry.hash}});
  }
  write_file(out_dir + "/manifest.json",
             dump_pretty(Json{{"kind", manifest.kind},
                              {"base_seed", manifest.base_seed},
                              {"margin", manifest.margin},
                              {"count", static_cast<int>(manifest.pairs.size())},
                              {"pairs", std::move(pairs)}}));
  return manifest;
}

DatasetManifest load_manifest(const std::string& dir) {
  const std::string path = dir + "/manifest.json";
  const Json j = parse_json(read_file(path), path);
  DatasetManifest manifest;
  manifest.kind = require_string(j, "kind", path);
  manifest.base_seed = static_cast<std::uint64_t>(require_int(j, "base_seed", path));
  manifest.margin = require_number(j, "margin", path);
  for (const Json& p : require_array(j, "pairs", path)) {
    manifest.pairs.push_back(PairEntry{require_string(p, "id", path + ".pairs"),
                                       static_cast<std::uint64_t>(require_int(p, "seed", path + ".pairs")),
                                       require_string(p, "hash", path + ".pairs")});
  }
  return manifest;
}

ScenePair load_scene_pair(const std::string& dir, const std::string& id) {
  const std::string base = dir + "/pairs/" + id;
  ScenePair pair;
  pair.civilian = deserialize_scene(read_file(base + "/civilian.json"), base + "/civilian.json");
  pair.spy = deserialize_scene(read_file(base + "/spy.json"), base + "/spy.json");
  const std::string clpath = base + "/changelog.json";
  pair.change_log = change_log_from_json(parse_json(read_file(clpath), clpath), clpath);
  if (auto problem = check_pair(pair)) {
    throw ParseError(base + ": invalid pair: " + *problem);
  }
  return pair;
}

ChartPair load_chart_pair(const std::string& dir, const std::string& id) {
  const std::string base = dir + "/pairs/" + id;
  ChartPair pair;
  pair.original =
      chart_spec_from_json(parse_json(read_file(base + "/civilian.json"), base), base);
  pair.swapped = chart_spec_from_json(parse_json(read_file(base + "/spy.json"), base), base);
  const std::string clpath = base + "/changelog.json";
  pair.swap_log = swap_log_from_json(parse_json(read_file(clpath), clpath), clpath);
  if (auto problem = check_chart_pair(pair)) {
    throw ParseError(base + ": invalid chart pair: " + *problem);
  }
  return pair;
}

}  // namespace arena
