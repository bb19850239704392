#include "arena/runconfig.hpp"

#include "arena/errors.hpp"

namespace arena {

RunConfig RunConfig::from_json(const Json& j, const std::string& path) {
  RunConfig config;
  if (j.contains("episode")) {
    config.episode = episode_config_from_json(j["episode"], path + ".episode");
  }
  if (j.contains("scheduler")) {
    const Json& s = j["scheduler"];
    const std::string spath = path + ".scheduler";
    if (s.contains("tau_acc_up")) config.scheduler.tau_acc_up = require_number(s, "tau_acc_up", spath);
    if (s.contains("tau_err_up")) config.scheduler.tau_err_up = require_number(s, "tau_err_up", spath);
    if (s.contains("tau_na_up")) config.scheduler.tau_na_up = require_number(s, "tau_na_up", spath);
    if (s.contains("tau_na_down")) config.scheduler.tau_na_down = require_number(s, "tau_na_down", spath);
    if (s.contains("rho")) config.scheduler.rho = require_number(s, "rho", spath);
    if (s.contains("k_min")) config.scheduler.k_min = static_cast<int>(require_int(s, "k_min", spath));
    if (s.contains("patience")) config.scheduler.patience = static_cast<int>(require_int(s, "patience", spath));
  } else {
    // One smoothing knob: the scheduler tracks the episode block's rho.
    config.scheduler.rho = config.episode.rho;
  }
  config.scheduler.validate();
  if (j.contains("policies")) {
    const Json& p = j["policies"];
    const std::string ppath = path + ".policies";
    if (p.contains("civilian")) config.civilian_policy = require_string(p, "civilian", ppath);
    if (p.contains("spy")) config.spy_policy = require_string(p, "spy", ppath);
  }
  if (j.contains("remote")) {
    config.remote = remote_config_from_json(j["remote"], path + ".remote");
  }
  if (j.contains("run")) {
    const Json& r = j["run"];
    const std::string rpath = path + ".run";
    if (r.contains("dataset")) config.dataset_dir = require_string(r, "dataset", rpath);
    if (r.contains("iterations")) config.iterations = static_cast<int>(require_int(r, "iterations", rpath));
    if (r.contains("batch_size")) config.batch_size = static_cast<int>(require_int(r, "batch_size", rpath));
    if (r.contains("workers")) config.workers = static_cast<int>(require_int(r, "workers", rpath));
    if (r.contains("out_dir")) config.out_dir = require_string(r, "out_dir", rpath);
  }
  return config;
}

RunConfig RunConfig::from_file(const std::string& path) {
  try {
    return from_json(parse_json(read_file(path), path), path);
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  }
}

Json RunConfig::to_json() const {
  return Json{{"episode", episode_config_to_json(episode)},
              {"scheduler", Json{{"tau_acc_up", scheduler.tau_acc_up},
                                 {"tau_err_up", scheduler.tau_err_up},
                                 {"tau_na_up", scheduler.tau_na_up},
                                 {"tau_na_down", scheduler.tau_na_down},
                                 {"rho", scheduler.rho},
                                 {"k_min", scheduler.k_min},
                                 {"patience", scheduler.patience}}},
              {"policies", Json{{"civilian", civilian_policy}, {"spy", spy_policy}}},
              {"remote", remote_config_to_json(remote)},
              {"run", Json{{"dataset", dataset_dir},
                           {"iterations", iterations},
                           {"batch_size", batch_size},
                           {"workers", workers},
                           {"out_dir", out_dir},
                           {"seed", seed}}}};
}

std::string RunConfig::hash() const { return hex64(fnv1a64(to_json().dump())); }

void RunConfig::validate_for_play() const {
  episode.validate();
  scheduler.validate();
  if (dataset_dir.empty()) {
    throw ConfigError("play: run.dataset must point at a generated dataset");
  }
  if (iterations < 1) throw ConfigError("play: iterations must be >= 1");
  if (batch_size < 1) throw ConfigError("play: batch_size must be >= 1");
  if (workers < 1) throw ConfigError("play: workers must be >= 1");
}

std::unique_ptr<Policy> make_policy(const std::string& name, const RemoteConfig& remote) {
  if (name == "scripted-civilian") return std::make_unique<ScriptedCivilian>();
  if (name == "scripted-spy-naive") return std::make_unique<ScriptedSpyNaive>();
  if (name == "scripted-spy-oracle") return std::make_unique<ScriptedSpyOracle>();
  if (name == "remote") return std::make_unique<RemotePolicy>(remote);
  if (name.rfind("stub:", 0) == 0) return std::make_unique<StubPolicy>(name.substr(5));
  throw ConfigError("unknown policy '" + name +
                    "' (expected scripted-civilian, scripted-spy-naive, scripted-spy-oracle, "
                    "remote, or stub:<text>)");
}

}  // namespace arena
