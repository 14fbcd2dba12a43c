// Command-line front end: run a sweep and write its artifacts, dump one
// scenario's optimization model as LP text, or re-aggregate a results CSV
// into a savings table.
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vcoffload/config.hpp"
#include "vcoffload/harness.hpp"
#include "vcoffload/milp.hpp"
#include "vcoffload/strategies.hpp"
#include "vcoffload/util.hpp"
#include "vcoffload/workload.hpp"

namespace {

namespace fs = std::filesystem;
using namespace vcoffload;

RunConfig config_from(const std::string& path) {
  return path.empty() ? parse_config_text("{}") : load_config(path);
}

void print_savings(const SavingsTable& table) {
  std::cout << "strategy          vs cloud   vs cf_optimal\n";
  for (const SavingsRow& row : table.rows) {
    std::string name = strategy_name(row.strategy);
    name.resize(16, ' ');
    char cells[64];
    std::snprintf(cells, sizeof(cells), "%9.1f%%  %12.1f%%", row.vs_cloud_pct,
                  row.vs_cf_optimal_pct);
    std::cout << name << cells << "\n";
  }
}

int run_command(const std::string& config_path, const std::string& sweep_name,
                const std::vector<std::string>& strategy_names, int replications,
                std::int64_t seed, const std::string& out_dir) {
  RunConfig config = config_from(config_path);
  if (!strategy_names.empty()) {
    config.strategies.clear();
    for (const std::string& name : strategy_names)
      config.strategies.push_back(parse_strategy(name));
  }
  if (replications > 0) config.replications = replications;
  if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);

  const SweepKind kind = parse_sweep_kind(sweep_name);
  fs::create_directories(out_dir);

  const SweepResult result = run_sweep(kind, config);
  emit_csv(result, out_dir + "/results.csv");
  emit_timings_csv(result, out_dir + "/timings.csv");
  emit_plot_data(result, out_dir + "/plotdata");
  write_manifest(config, {kind}, out_dir + "/manifest.json");

  std::cout << sweep_kind_name(kind) << " sweep: " << result.rows.size() << " rows ("
            << config.replications << " replications, seed " << config.seed << ") -> " << out_dir
            << "\n";
  const bool has_baselines =
      std::count(config.strategies.begin(), config.strategies.end(), Strategy::Cloud) &&
      std::count(config.strategies.begin(), config.strategies.end(), Strategy::CfOptimal);
  if (has_baselines) {
    const SavingsTable table = savings_table(result);
    emit_savings_csv(table, out_dir + "/savings.csv");
    print_savings(table);
  } else {
    std::cout << "savings.csv skipped: needs both cloud and cf_optimal in --strategies\n";
  }
  return 0;
}

int lp_dump_command(const std::string& config_path, const std::string& strategy_name_arg,
                    const std::string& out_path) {
  const RunConfig config = config_from(config_path);
  const Strategy strategy = parse_strategy(strategy_name_arg);
  if (strategy == Strategy::Cloud || strategy == Strategy::CfvRandom)
    throw std::invalid_argument("strategy '" + strategy_name_arg +
                                "' has no optimization model to dump");

  const Architecture arch = architecture_from(config);
  DemandSpec spec = config.workload;
  spec.seed = config.seed;
  const std::vector<Task> tasks = sample_tasks(spec);
  const MilpInstance instance = build_assignment_milp(arch, tasks, strategy);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  out << export_lp(instance);
  if (!out) throw std::runtime_error("write failed for '" + out_path + "'");

  std::cout << strategy_name(strategy) << ": " << instance.variables.size() << " variables, "
            << instance.constraints.size() << " rows -> " << out_path << "\n";
  return 0;
}

int savings_command(const std::string& in_path, const std::string& out_path) {
  const SweepResult result = read_csv(in_path);
  const SavingsTable table = savings_table(result);
  emit_savings_csv(table, out_path);
  std::cout << result.rows.size() << " rows -> " << out_path << "\n";
  print_savings(table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power-minimal task placement across cloud, metro fog, and vehicular tiers"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  const std::vector<std::string> strategy_choices = {"cloud", "cf_optimal", "cfv_single",
                                                     "cfv_distributed", "cfv_random"};

  std::string config_path;
  std::string sweep_name = "traffic";
  std::vector<std::string> strategy_names;
  int replications = 0;
  std::int64_t seed = -1;
  std::string out_dir = "out";

  CLI::App* run = app.add_subcommand("run", "Run one sweep and write its artifacts");
  run->add_option("--config", config_path, "Scenario JSON (defaults apply when omitted)")
      ->check(CLI::ExistingFile);
  run->add_option("--sweep", sweep_name, "Which demand mean to sweep")
      ->check(CLI::IsMember({"traffic", "processing"}));
  run->add_option("--strategies", strategy_names, "Strategies to run (default: all five)")
      ->delimiter(',')
      ->check(CLI::IsMember(strategy_choices));
  run->add_option("--replications", replications, "Task-set draws per sweep point (>= 1)")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Master seed (overrides the config)")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--out", out_dir, "Output directory (created if missing)");

  std::string lp_strategy = "cfv_distributed";
  std::string lp_out = "model.lp";
  CLI::App* lp = app.add_subcommand("lp-dump", "Write one scenario's model as LP text");
  lp->add_option("--config", config_path, "Scenario JSON (defaults apply when omitted)")
      ->check(CLI::ExistingFile);
  lp->add_option("--strategy", lp_strategy, "cf_optimal, cfv_single, or cfv_distributed")
      ->check(CLI::IsMember(strategy_choices));
  lp->add_option("--out", lp_out, "Destination .lp file");

  std::string savings_in;
  std::string savings_out = "savings.csv";
  CLI::App* sav = app.add_subcommand("savings", "Aggregate a results CSV into a savings table");
  sav->add_option("--in", savings_in, "results.csv from a run")
      ->required()
      ->check(CLI::ExistingFile);
  sav->add_option("--out", savings_out, "Destination CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return run_command(config_path, sweep_name, strategy_names, replications, seed, out_dir);
    if (lp->parsed()) return lp_dump_command(config_path, lp_strategy, lp_out);
    return savings_command(savings_in, savings_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
