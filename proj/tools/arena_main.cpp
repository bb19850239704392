// arena: dataset generation, self-play tournaments, the alternating training
// loop, and training-batch export for the two-stage spy game.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "arena/dataset.hpp"
#include "arena/errors.hpp"
#include "arena/jsonl.hpp"
#include "arena/play.hpp"
#include "arena/runconfig.hpp"
#include "arena/training.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

arena::RunConfig load_config(const std::string& config_path) {
  if (config_path.empty()) return arena::RunConfig{};
  return arena::RunConfig::from_file(config_path);
}

struct Overrides {
  std::string dataset;
  std::string out_dir;
  std::string civilian;
  std::string spy;
  int iterations = -1;
  int batch_size = -1;
  int workers = -1;

  void apply(arena::RunConfig& config) const {
    if (!dataset.empty()) config.dataset_dir = dataset;
    if (!out_dir.empty()) config.out_dir = out_dir;
    if (!civilian.empty()) config.civilian_policy = civilian;
    if (!spy.empty()) config.spy_policy = spy;
    if (iterations > 0) config.iterations = iterations;
    if (batch_size > 0) config.batch_size = batch_size;
    if (workers > 0) config.workers = workers;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-play arena for the two-stage visual spy game"};
  app.require_subcommand(1);

  // gen-data
  auto* gen = app.add_subcommand("gen-data", "generate a scene-pair or chart-pair dataset");
  int gen_n = 0;
  std::string gen_kind = "clevr";
  std::string gen_out;
  std::uint64_t gen_seed = 0;
  double gen_margin = 0.12;
  gen->add_option("--n", gen_n, "number of pairs")->required();
  gen->add_option("--kind", gen_kind, "clevr or chart")->check(CLI::IsMember({"clevr", "chart"}));
  gen->add_option("--out", gen_out, "output directory")->required();
  gen->add_option("--seed", gen_seed, "base seed")->required();
  gen->add_option("--margin", gen_margin, "minimum object distance (clevr)");

  // play
  auto* play = app.add_subcommand("play", "run the alternating training loop");
  std::string play_config;
  std::uint64_t play_seed = 0;
  Overrides play_over;
  play->add_option("--config", play_config, "run config JSON");
  play->add_option("--seed", play_seed, "run seed")->required();
  play->add_option("--dataset", play_over.dataset, "dataset directory");
  play->add_option("--out", play_over.out_dir, "output directory");
  play->add_option("--iterations", play_over.iterations, "scheduler evaluations");
  play->add_option("--batch", play_over.batch_size, "episodes per evaluation");
  play->add_option("--workers", play_over.workers, "episode-level parallelism");
  play->add_option("--civilian", play_over.civilian, "civilian policy binding");
  play->add_option("--spy", play_over.spy, "spy policy binding");

  // eval-winrate
  auto* eval = app.add_subcommand("eval-winrate", "two-sided tournament win rate");
  std::string eval_config;
  std::string eval_a = "scripted-civilian";
  std::string eval_b = "scripted-spy-naive";
  int eval_rounds = 100;
  std::uint64_t eval_seed = 0;
  std::string eval_out;
  eval->add_option("--config", eval_config, "run config JSON");
  eval->add_option("--policy-a", eval_a, "policy under evaluation");
  eval->add_option("--policy-b", eval_b, "reference policy");
  eval->add_option("--rounds", eval_rounds, "episode count (even, half per side)");
  eval->add_option("--seed", eval_seed, "evaluation seed")->required();
  eval->add_option("--out", eval_out, "write the report JSON here");

  // export-batch
  auto* exp = app.add_subcommand("export-batch", "episodes JSONL -> training samples JSONL");
  std::string exp_episodes;
  std::string exp_out;
  exp->add_option("--episodes", exp_episodes, "episodes JSONL")->required();
  exp->add_option("--out", exp_out, "samples JSONL")->required();

  // schedule-sim
  auto* sim = app.add_subcommand("schedule-sim", "run the phase gate over a metric stream");
  std::string sim_config;
  int sim_steps = 100;
  double sim_acc = 1.0;
  double sim_na = 0.0;
  std::string sim_from;
  std::string sim_out;
  sim->add_option("--config", sim_config, "run config JSON (scheduler block)");
  sim->add_option("--steps", sim_steps, "steps of a constant stream");
  sim->add_option("--acc", sim_acc, "constant batch accuracy");
  sim->add_option("--na", sim_na, "constant batch NA rate");
  sim->add_option("--from-metrics", sim_from, "replay acc/na from a metrics JSONL");
  sim->add_option("--out", sim_out, "write transitions JSONL here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (gen->parsed()) {
      arena::SceneGenParams params;
      params.margin = gen_margin;
      const arena::DatasetManifest manifest =
          arena::generate_dataset(gen_out, gen_n, gen_kind, gen_seed, params);
      std::cout << "wrote " << manifest.pairs.size() << " " << manifest.kind << " pairs to "
                << gen_out << "\n";
    } else if (play->parsed()) {
      arena::RunConfig config = load_config(play_config);
      play_over.apply(config);
      config.seed = play_seed;
      const arena::PlayResult result = arena::cmd_play(config);
      std::cout << "episodes: " << result.episodes << "  samples: " << result.samples
                << "  switches: " << result.switches
                << "  final phase: " << arena::to_string(result.final_phase) << "\n"
                << "episodes: " << result.episodes_path << "\n"
                << "metrics:  " << result.metrics_path << "\n"
                << "samples:  " << result.samples_path << "\n";
    } else if (eval->parsed()) {
      arena::RunConfig config = load_config(eval_config);
      const arena::WinRateReport report =
          arena::cmd_eval_winrate(config, eval_a, eval_b, eval_rounds, eval_seed);
      const arena::Json j = arena::win_rate_report_to_json(report);
      if (!eval_out.empty()) {
        arena::write_file(eval_out, j.dump(2) + "\n");
      }
      std::cout << j.dump(2) << "\n";
    } else if (exp->parsed()) {
      const long written = arena::export_training_batch(exp_episodes, exp_out);
      std::cout << "wrote " << written << " samples to " << exp_out << "\n";
    } else if (sim->parsed()) {
      arena::RunConfig config = load_config(sim_config);
      std::vector<arena::BatchMetrics> stream;
      if (!sim_from.empty()) {
        for (const arena::Json& line : arena::read_jsonl(sim_from)) {
          stream.push_back(arena::BatchMetrics{
              arena::require_number(line, "acc", sim_from),
              arena::require_number(line, "na", sim_from)});
        }
      } else {
        stream.assign(static_cast<std::size_t>(sim_steps),
                      arena::BatchMetrics{sim_acc, sim_na});
      }
      const auto rows = arena::simulate_schedule(config.scheduler, stream);
      std::optional<arena::JsonlWriter> writer;
      if (!sim_out.empty()) writer.emplace(sim_out);
      int switches = 0;
      for (const auto& row : rows) {
        const arena::Json j = arena::schedule_sim_row_to_json(row);
        if (writer) writer->append(j);
        if (row.switched) {
          ++switches;
          std::cout << j.dump() << "\n";
        }
      }
      std::cout << "steps: " << rows.size() << "  switches: " << switches << "\n";
    }
  } catch (const arena::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
