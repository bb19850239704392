#include "arena/play.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <functional>
#include <mutex>
#include <thread>

#include "arena/errors.hpp"
#include "arena/jsonl.hpp"
#include "arena/losses.hpp"
#include "arena/rewards.hpp"
#include "arena/rng.hpp"

namespace fs = std::filesystem;

namespace arena {

namespace {

constexpr std::uint64_t kEpisodeStream = 0xe915;
constexpr std::uint64_t kEvalPairStream = 0xda7a;
constexpr std::uint64_t kMutateStream = 0x0d1f;

// Per-policy serialization gate for backends that cannot take concurrent
// calls.
class SerializedPolicy final : public Policy {
 public:
  explicit SerializedPolicy(Policy* inner) : inner_(inner) {}

  PolicyResponse act(const PolicyRequest& request) override {
    std::lock_guard lock(mutex_);
    return inner_->act(request);
  }
  std::string name() const override { return inner_->name(); }

 private:
  Policy* inner_;
  std::mutex mutex_;
};

struct BoundPolicy {
  std::unique_ptr<Policy> owned;
  std::unique_ptr<SerializedPolicy> gate;
  Policy* use = nullptr;
};

BoundPolicy bind_policy(const std::string& name, const RemoteConfig& remote) {
  BoundPolicy bound;
  bound.owned = make_policy(name, remote);
  if (!bound.owned->thread_safe()) {
    bound.gate = std::make_unique<SerializedPolicy>(bound.owned.get());
    bound.use = bound.gate.get();
  } else {
    bound.use = bound.owned.get();
  }
  return bound;
}

// Work-queue parallelism over one batch; records land in index order.
void run_batch(std::vector<EpisodeRecord>& records,
               const std::function<EpisodeRecord(int)>& job, int workers) {
  const int n = static_cast<int>(records.size());
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) records[static_cast<std::size_t>(i)] = job(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int spawn = std::min(workers, n);
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int w = 0; w < spawn; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        records[static_cast<std::size_t>(i)] = job(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

PolicyEval clue_eval_of(const EpisodeRecord& record) {
  PolicyEval eval;
  for (const Clue& clue : record.clues) {
    eval.logprobs.push_back(clue.logprob.value_or(0.0));
    eval.kls.push_back(clue.kl.value_or(0.0));
  }
  return eval;
}

PolicyEval decision_eval_of(const EpisodeRecord& record) {
  PolicyEval eval;
  for (const VoteBallot& ballot : record.ballots) {
    eval.logprobs.push_back(ballot.logprob.value_or(0.0));
    eval.kls.push_back(ballot.kl.value_or(0.0));
  }
  return eval;
}

// Fills both stages' advantage vectors; the baselines update sequentially.
void fill_advantages(EpisodeRecord& record, const EpisodeConfig& config,
                     RoleBaselines& baselines) {
  const ClueRewards rewards =
      clue_rewards(record.vote_tally, record.spy_seat, config.beta, config.lambda);
  const ClueAdvantages advantages = role_advantage_update(baselines, rewards, config.alpha);
  record.clue_advantages.assign(record.seating.size(), 0.0);
  record.clue_advantages[static_cast<std::size_t>(record.spy_seat)] = advantages.spy;
  std::size_t j = 0;
  for (int seat = 0; seat < static_cast<int>(record.seating.size()); ++seat) {
    if (seat == record.spy_seat) continue;
    record.clue_advantages[static_cast<std::size_t>(seat)] = advantages.civilians[j++];
  }

  std::vector<double> decision_rewards;
  decision_rewards.reserve(record.ballots.size());
  for (const VoteBallot& ballot : record.ballots) {
    decision_rewards.push_back(decision_reward(ballot.choice, record.spy_seat));
  }
  record.decision_advantages = group_normalize(decision_rewards, config.epsilon);
}

std::vector<double> clue_advantage_per_turn(const EpisodeRecord& record) {
  std::vector<double> advantages;
  advantages.reserve(record.clues.size());
  for (const Clue& clue : record.clues) {
    advantages.push_back(record.clue_advantages[static_cast<std::size_t>(clue.speaker)]);
  }
  return advantages;
}

ScenePair synthesize_pair(std::uint64_t pair_seed) {
  const Scene scene = generate_scene(pair_seed);
  return mutate_scene(scene, derive_seed(pair_seed, kMutateStream));
}

void wilson_interval(int wins, int n, double& low, double& high) {
  if (n == 0) {
    low = high = 0.0;
    return;
  }
  const double z = 1.959963984540054;  // 97.5th normal percentile
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(wins) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
  low = std::max(0.0, center - half);
  high = std::min(1.0, center + half);
}

}  // namespace

EpisodeRecord run_role_episode(const EpisodeConfig& config, const ScenePair& pair,
                               const std::string& pair_id, Policy* civilian, Policy* spy,
                               const PromptTemplates& templates, std::uint64_t seed) {
  GameState state = new_episode(config, pair, seed);
  std::vector<Policy*> slots(static_cast<std::size_t>(config.n_players()), civilian);
  slots[static_cast<std::size_t>(state.seating[static_cast<std::size_t>(state.spy_seat)])] = spy;

  run_clue_stage(state, slots, templates);
  run_decision_stage(state, slots, templates);

  EpisodeRecord record;
  record.pair_id = pair_id;
  record.seed = seed;
  record.config_hash = hex64(fnv1a64(episode_config_to_json(config).dump()));
  record.seating = state.seating;
  record.spy_seat = state.spy_seat;
  record.clues = state.transcript.clues;
  record.ballots = state.ballots;
  record.vote_tally = tally(record.ballots, config.n_players());
  record.outcome = episode_outcome(record.vote_tally, record.spy_seat);
  record.flags = state.flags;
  return record;
}

PlayResult cmd_play(const RunConfig& config) {
  config.validate_for_play();
  const DatasetManifest manifest = load_manifest(config.dataset_dir);
  if (manifest.kind != "clevr") {
    throw ConfigError("play: dataset kind '" + manifest.kind +
                      "' is not playable; the game runs on clevr scene pairs");
  }
  if (manifest.pairs.empty()) {
    throw ConfigError("play: dataset has no pairs");
  }

  std::vector<ScenePair> pairs;
  pairs.reserve(manifest.pairs.size());
  for (const PairEntry& entry : manifest.pairs) {
    pairs.push_back(load_scene_pair(config.dataset_dir, entry.id));
  }

  EpisodeConfig episode = config.episode;
  episode.expose_change_log_to_spy =
      episode.expose_change_log_to_spy || config.spy_policy == "scripted-spy-oracle";

  BoundPolicy civilian = bind_policy(config.civilian_policy, config.remote);
  BoundPolicy spy = bind_policy(config.spy_policy, config.remote);
  const PromptTemplates templates = PromptTemplates::builtin();

  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec) {
    throw IoError("cannot create directory: " + config.out_dir + ": " + ec.message());
  }
  PlayResult result;
  result.episodes_path = config.out_dir + "/episodes.jsonl";
  result.metrics_path = config.out_dir + "/metrics.jsonl";
  result.samples_path = config.out_dir + "/samples.jsonl";
  JsonlWriter episodes_out(result.episodes_path);
  JsonlWriter metrics_out(result.metrics_path);
  JsonlWriter samples_out(result.samples_path);

  RoleBaselines baselines;
  SchedulerState scheduler;
  long episode_counter = 0;

  for (int t = 1; t <= config.iterations; ++t) {
    std::vector<EpisodeRecord> batch(static_cast<std::size_t>(config.batch_size));
    const long batch_base = episode_counter;
    auto job = [&](int i) {
      const std::size_t pair_index =
          static_cast<std::size_t>((batch_base + i) % static_cast<long>(pairs.size()));
      const std::uint64_t seed =
          derive_seed(config.seed, kEpisodeStream, static_cast<std::uint64_t>(batch_base + i));
      return run_role_episode(episode, pairs[pair_index], manifest.pairs[pair_index].id,
                              civilian.use, spy.use, templates, seed);
    };
    run_batch(batch, job, config.workers);

    double loss_clue_sum = 0.0;
    double loss_dec_sum = 0.0;
    std::vector<VoteOutcome> outcomes;
    outcomes.reserve(batch.size() * static_cast<std::size_t>(episode.n_civilians));

    for (EpisodeRecord& record : batch) {
      fill_advantages(record, episode, baselines);
      loss_clue_sum +=
          clue_loss(clue_advantage_per_turn(record), clue_eval_of(record), episode.tau_clue);
      loss_dec_sum +=
          decision_loss(record.decision_advantages, decision_eval_of(record), episode.tau_dec);
      for (const VoteBallot& ballot : record.ballots) {
        outcomes.push_back(VoteOutcome{ballot.choice, record.spy_seat});
      }
      episodes_out.append(episode_record_to_json(record));
      for (const TrainingSample& sample : flatten_episode(record, episode_counter)) {
        samples_out.append(training_sample_to_json(sample));
        ++result.samples;
      }
      ++episode_counter;
    }

    const double loss_clue = loss_clue_sum / static_cast<double>(batch.size());
    const double loss_dec = loss_dec_sum / static_cast<double>(batch.size());
    const Phase phase_before = scheduler.phase;
    const double loss = gated_loss(phase_before, loss_clue, loss_dec);

    const BatchMetrics metrics = batch_metrics(outcomes);
    ema_update(scheduler, metrics, config.scheduler.rho);
    const SwitchResult switched = maybe_switch(scheduler, config.scheduler);
    if (switched.switched) ++result.switches;

    metrics_out.append(Json{{"t", t},
                            {"phase", static_cast<int>(phase_before)},
                            {"phase_after", static_cast<int>(scheduler.phase)},
                            {"acc", metrics.acc},
                            {"na", metrics.na},
                            {"ema_acc", scheduler.ema_acc},
                            {"ema_na", scheduler.ema_na},
                            {"switched", switched.switched},
                            {"forced", switched.forced},
                            {"reason", switched.reason},
                            {"loss_clue", loss_clue},
                            {"loss_dec", loss_dec},
                            {"loss", loss},
                            {"episodes", config.batch_size}});
  }

  episodes_out.flush();
  metrics_out.flush();
  samples_out.flush();
  result.episodes = episode_counter;
  result.final_phase = scheduler.phase;
  return result;
}

WinRateReport cmd_eval_winrate(const RunConfig& config, const std::string& policy_a,
                               const std::string& policy_b, int n_rounds, std::uint64_t seed) {
  if (n_rounds < 2 || n_rounds % 2 != 0) {
    throw ConfigError("eval-winrate: n_rounds must be even and >= 2");
  }
  BoundPolicy a = bind_policy(policy_a, config.remote);
  BoundPolicy b = bind_policy(policy_b, config.remote);
  const PromptTemplates templates = PromptTemplates::builtin();
  const int half = n_rounds / 2;

  WinRateReport report;
  report.policy_a = policy_a;
  report.policy_b = policy_b;
  report.n_rounds = n_rounds;

  for (int k = 0; k < n_rounds; ++k) {
    const bool a_is_civilian = k < half;
    const ScenePair pair = synthesize_pair(derive_seed(seed, kEvalPairStream,
                                                       static_cast<std::uint64_t>(k % half)));
    EpisodeConfig episode = config.episode;
    const std::string& spy_name = a_is_civilian ? policy_b : policy_a;
    episode.expose_change_log_to_spy =
        episode.expose_change_log_to_spy || spy_name == "scripted-spy-oracle";

    Policy* civilian = a_is_civilian ? a.use : b.use;
    Policy* spy = a_is_civilian ? b.use : a.use;
    const EpisodeRecord record =
        run_role_episode(episode, pair, pair_id_for_index(k % half), civilian, spy, templates,
                         derive_seed(seed, 0xe9a1, static_cast<std::uint64_t>(k % half)));

    if (a_is_civilian) {
      ++report.as_civilian.episodes;
      if (record.outcome == Outcome::CiviliansWin) ++report.as_civilian.wins;
    } else {
      ++report.as_spy.episodes;
      if (record.outcome == Outcome::SpyWins) ++report.as_spy.wins;
    }
  }

  report.as_civilian.win_rate =
      static_cast<double>(report.as_civilian.wins) / report.as_civilian.episodes;
  report.as_spy.win_rate = static_cast<double>(report.as_spy.wins) / report.as_spy.episodes;
  report.win_rate =
      static_cast<double>(report.as_civilian.wins + report.as_spy.wins) / n_rounds;
  wilson_interval(report.as_civilian.wins + report.as_spy.wins, n_rounds, report.ci_low,
                  report.ci_high);
  return report;
}

Json win_rate_report_to_json(const WinRateReport& report) {
  auto split = [](const WinRateSplit& s) {
    return Json{{"episodes", s.episodes}, {"wins", s.wins}, {"win_rate", s.win_rate}};
  };
  return Json{{"policy_a", report.policy_a},
              {"policy_b", report.policy_b},
              {"n_rounds", report.n_rounds},
              {"as_civilian", split(report.as_civilian)},
              {"as_spy", split(report.as_spy)},
              {"win_rate", report.win_rate},
              {"ci95", Json::array({report.ci_low, report.ci_high})}};
}

std::vector<ScheduleSimRow> simulate_schedule(const SchedulerConfig& config,
                                              std::span<const BatchMetrics> stream) {
  SchedulerState state;
  std::vector<ScheduleSimRow> rows;
  rows.reserve(stream.size());
  long t = 0;
  for (const BatchMetrics& metrics : stream) {
    ++t;
    ScheduleSimRow row;
    row.t = t;
    row.phase = state.phase;
    row.acc = metrics.acc;
    row.na = metrics.na;
    ema_update(state, metrics, config.rho);
    const SwitchResult switched = maybe_switch(state, config);
    row.phase_after = state.phase;
    row.ema_acc = state.ema_acc;
    row.ema_na = state.ema_na;
    row.switched = switched.switched;
    row.forced = switched.forced;
    row.reason = switched.reason;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json schedule_sim_row_to_json(const ScheduleSimRow& row) {
  return Json{{"t", row.t},
              {"phase", static_cast<int>(row.phase)},
              {"phase_after", static_cast<int>(row.phase_after)},
              {"acc", row.acc},
              {"na", row.na},
              {"ema_acc", row.ema_acc},
              {"ema_na", row.ema_na},
              {"switched", row.switched},
              {"forced", row.forced},
              {"reason", row.reason}};
}

}  // namespace arena
