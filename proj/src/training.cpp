#include "arena/training.hpp"

#include "arena/errors.hpp"
#include "arena/jsonl.hpp"

namespace arena {

namespace {

Json optional_to_json(const std::optional<double>& v) {
  return v.has_value() ? Json(*v) : Json(nullptr);
}

}  // namespace

Json training_sample_to_json(const TrainingSample& s) {
  return Json{{"schema_version", kTrainingSampleSchemaVersion},
              {"episode_id", s.episode_id},
              {"phase", s.phase},
              {"role", s.role},
              {"prompt", s.prompt},
              {"completion", s.completion},
              {"advantage", s.advantage},
              {"logprob", optional_to_json(s.logprob)},
              {"kl", optional_to_json(s.kl)}};
}

TrainingSample training_sample_from_json(const Json& j, const std::string& path) {
  const std::int64_t version = require_int(j, "schema_version", path);
  if (version != kTrainingSampleSchemaVersion) {
    throw ParseError(path + ": unsupported schema_version " + std::to_string(version) +
                     " (expected " + std::to_string(kTrainingSampleSchemaVersion) + ")");
  }
  TrainingSample s;
  s.episode_id = require_int(j, "episode_id", path);
  s.phase = require_string(j, "phase", path);
  s.role = require_string(j, "role", path);
  s.prompt = require_string(j, "prompt", path);
  s.completion = require_string(j, "completion", path);
  s.advantage = require_number(j, "advantage", path);
  if (j.contains("logprob") && !j["logprob"].is_null()) s.logprob = j["logprob"].get<double>();
  if (j.contains("kl") && !j["kl"].is_null()) s.kl = j["kl"].get<double>();
  if (s.phase != "clue" && s.phase != "decision") {
    throw ParseError(path + ".phase: expected 'clue' or 'decision'");
  }
  return s;
}

std::vector<TrainingSample> flatten_episode(const EpisodeRecord& record, long episode_id) {
  std::vector<TrainingSample> samples;
  samples.reserve(record.clues.size() + record.ballots.size());

  if (record.clue_advantages.size() != record.seating.size()) {
    throw ParseError("episode " + std::to_string(episode_id) +
                     ": clue advantages not filled (got " +
                     std::to_string(record.clue_advantages.size()) + ", want " +
                     std::to_string(record.seating.size()) + ")");
  }
  if (record.decision_advantages.size() != record.ballots.size()) {
    throw ParseError("episode " + std::to_string(episode_id) +
                     ": decision advantages not filled");
  }

  for (const Clue& clue : record.clues) {
    TrainingSample s;
    s.episode_id = episode_id;
    s.phase = "clue";
    s.role = clue.speaker == record.spy_seat ? "spy" : "civilian";
    s.prompt = clue.prompt;
    s.completion = clue.completion;
    s.advantage = record.clue_advantages[static_cast<std::size_t>(clue.speaker)];
    s.logprob = clue.logprob;
    s.kl = clue.kl;
    samples.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < record.ballots.size(); ++i) {
    const VoteBallot& ballot = record.ballots[i];
    TrainingSample s;
    s.episode_id = episode_id;
    s.phase = "decision";
    s.role = "civilian";
    s.prompt = ballot.prompt;
    s.completion = ballot.completion;
    s.advantage = record.decision_advantages[i];
    s.logprob = ballot.logprob;
    s.kl = ballot.kl;
    samples.push_back(std::move(s));
  }
  return samples;
}

long export_training_batch(const std::string& episodes_path, const std::string& out_path) {
  const std::vector<Json> lines = read_jsonl(episodes_path);
  JsonlWriter writer(out_path);
  long episode_id = 0;
  long written = 0;
  for (const Json& line : lines) {
    const EpisodeRecord record = episode_record_from_json(
        line, episodes_path + ":" + std::to_string(episode_id + 1));
    for (const TrainingSample& sample : flatten_episode(record, episode_id)) {
      writer.append(training_sample_to_json(sample));
      ++written;
    }
    ++episode_id;
  }
  writer.flush();
  return written;
}

std::vector<TrainingSample> read_training_batch(const std::string& path) {
  std::vector<TrainingSample> samples;
  long line_number = 0;
  for (const Json& line : read_jsonl(path)) {
    ++line_number;
    samples.push_back(
        training_sample_from_json(line, path + ":" + std::to_string(line_number)));
  }
  return samples;
}

}  // namespace arena
