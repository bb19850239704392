#pragma once

#include <cstdint>
#include <string>

#include "arena/game.hpp"
#include "arena/remote.hpp"
#include "arena/scheduler.hpp"

namespace arena {

// Full run configuration: a single JSON document, with every CLI flag
// overriding its field. Policy bindings are by role; "remote" uses the
// remote block, and "stub:<text>" wires a fixed-completion stub.
struct RunConfig {
  EpisodeConfig episode;
  SchedulerConfig scheduler;
  std::string civilian_policy = "scripted-civilian";
  std::string spy_policy = "scripted-spy-naive";
  RemoteConfig remote;

  std::string dataset_dir;
  int iterations = 100;
  int batch_size = 8;
  int workers = 1;
  std::string out_dir = "out";
  std::uint64_t seed = 0;

  static RunConfig from_json(const Json& j, const std::string& path);
  static RunConfig from_file(const std::string& path);
  Json to_json() const;

  // Fingerprint of the canonical serialization; lands in every episode line.
  std::string hash() const;

  void validate_for_play() const;  // checks dataset and counts, throws ConfigError
};

std::unique_ptr<Policy> make_policy(const std::string& name, const RemoteConfig& remote);

}  // namespace arena
