#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arena/chart.hpp"
#include "arena/scene.hpp"

namespace arena {

// On-disk layout under the dataset root:
//   manifest.json
//   pairs/<id>/civilian.json   (scene or chart original)
//   pairs/<id>/spy.json        (scene or chart swapped)
//   pairs/<id>/changelog.json  (change log or swap log)
struct PairEntry {
  std::string id;
  std::uint64_t seed = 0;
  std::string hash;  // fnv1a64 over the three serialized files
};

struct DatasetManifest {
  std::string kind;  // "clevr" or "chart"
  std::uint64_t base_seed = 0;
  double margin = 0.12;  // clevr only
  std::vector<PairEntry> pairs;
};

// Writes n_pairs pair directories plus the manifest; every pair is derived
// deterministically from (seed, index) and validated before writing.
DatasetManifest generate_dataset(const std::string& out_dir, int n_pairs,
                                 const std::string& kind, std::uint64_t seed,
                                 const SceneGenParams& params = {});

DatasetManifest load_manifest(const std::string& dir);

ScenePair load_scene_pair(const std::string& dir, const std::string& id);
ChartPair load_chart_pair(const std::string& dir, const std::string& id);

std::string pair_id_for_index(int index);

}  // namespace arena
