#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arena/game.hpp"
#include "arena/jsonio.hpp"

namespace arena {

inline constexpr int kTrainingSampleSchemaVersion = 1;

// One (player, stage) sample for the external optimizer. The arena never
// differentiates anything; these rows carry everything the trainer needs.
struct TrainingSample {
  long episode_id = 0;
  std::string phase;  // "clue" or "decision"
  std::string role;   // "spy" or "civilian"
  std::string prompt;
  std::string completion;
  double advantage = 0.0;
  std::optional<double> logprob;
  std::optional<double> kl;
};

Json training_sample_to_json(const TrainingSample& sample);
TrainingSample training_sample_from_json(const Json& j, const std::string& path);

// One sample per clue plus one per ballot, in record order. The record's
// advantage vectors must already be filled.
std::vector<TrainingSample> flatten_episode(const EpisodeRecord& record, long episode_id);

// episodes JSONL -> samples JSONL; returns the number of samples written.
long export_training_batch(const std::string& episodes_path, const std::string& out_path);

// Reads a samples file back, checking the schema version per line.
std::vector<TrainingSample> read_training_batch(const std::string& path);

}  // namespace arena
