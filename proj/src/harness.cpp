#include "vcoffload/harness.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "vcoffload/architecture.hpp"
#include "vcoffload/util.hpp"

namespace vcoffload {

namespace {

std::vector<Strategy> sorted_by_name(std::vector<Strategy> strategies) {
  std::sort(strategies.begin(), strategies.end(), [](Strategy a, Strategy b) {
    return std::string_view(strategy_name(a)) < std::string_view(strategy_name(b));
  });
  strategies.erase(std::unique(strategies.begin(), strategies.end()), strategies.end());
  return strategies;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: no newline translation anywhere
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

constexpr const char* kResultHeader =
    "sweep,point,demand_mean,task_seed,strategy,total_watts,proc_cloud_watts,proc_fog_watts,"
    "proc_vc_watts,net_watts,shared_watts,solver_status";

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

std::uint64_t replication_seed(std::uint64_t point_seed, int replication) {
  return point_seed + 1000ull * static_cast<std::uint64_t>(replication);
}

SweepResult run_sweep(SweepKind kind, const RunConfig& config) {
  const Architecture arch = architecture_from(config);
  const std::vector<Strategy> strategies = sorted_by_name(config.strategies);

  DemandSpec base = config.workload;
  base.seed = config.seed;
  const std::vector<DemandSpec> points = sweep_specs(kind, base);

  SweepResult result;
  result.master_seed = config.seed;
  result.replications = config.replications;
  result.config_fingerprint = config_fingerprint(config);
  result.rows.reserve(points.size() * static_cast<std::size_t>(config.replications) *
                      strategies.size());

  for (std::size_t p = 0; p < points.size(); ++p) {
    for (int rep = 0; rep < config.replications; ++rep) {
      DemandSpec spec = points[p];
      spec.seed = replication_seed(points[p].seed, rep);
      const std::vector<Task> tasks = sample_tasks(spec);

      for (Strategy strategy : strategies) {
        const auto started = std::chrono::steady_clock::now();
        const AssignOutcome outcome = assign(arch, tasks, strategy, config.solver, spec.seed);
        const auto finished = std::chrono::steady_clock::now();
        const PowerBreakdown power = evaluate_power(arch, tasks, outcome.matrix);

        ResultRow row;
        row.kind = kind;
        row.point = static_cast<int>(p);
        row.demand_mean = kind == SweepKind::Traffic ? spec.traffic_mean : spec.proc_mean;
        row.task_seed = spec.seed;
        row.strategy = strategy;
        row.total_watts = power.total_watts;
        row.proc_cloud_watts = power.proc_cloud_watts;
        row.proc_fog_watts = power.proc_fog_watts;
        row.proc_vc_watts = power.proc_vc_watts;
        row.net_watts = power.net_total();
        row.shared_watts = power.shared_watts;
        row.status = outcome.solve.status;
        row.solve_ms =
            std::chrono::duration<double, std::milli>(finished - started).count();
        result.rows.push_back(row);
      }
    }
  }
  return result;
}

SavingsTable savings_table(const SweepResult& sweep) {
  // Group rows by (point, task_seed): one group per replication of a point,
  // with one entry per strategy.
  std::map<std::pair<int, std::uint64_t>, std::map<Strategy, double>> groups;
  for (const ResultRow& row : sweep.rows) {
    auto& group = groups[{row.point, row.task_seed}];
    if (!group.emplace(row.strategy, row.total_watts).second)
      throw std::invalid_argument("duplicate row for point " + std::to_string(row.point) +
                                  ", seed " + std::to_string(row.task_seed) + ", strategy " +
                                  strategy_name(row.strategy));
  }
  if (groups.empty()) throw std::invalid_argument("savings of an empty sweep");

  std::vector<Strategy> present;
  for (const auto& [key, group] : groups) {
    if (!group.count(Strategy::Cloud) || !group.count(Strategy::CfOptimal))
      throw std::invalid_argument(
          "savings need cloud and cf_optimal baseline rows in every replication");
    for (const auto& [strategy, watts] : group)
      if (std::find(present.begin(), present.end(), strategy) == present.end())
        present.push_back(strategy);
  }
  present = sorted_by_name(present);

  SavingsTable table;
  for (Strategy strategy : present) {
    double sum_cloud = 0.0;
    double sum_cf = 0.0;
    std::size_t n = 0;
    for (const auto& [key, group] : groups) {
      auto it = group.find(strategy);
      if (it == group.end())
        throw std::invalid_argument(std::string("strategy ") + strategy_name(strategy) +
                                    " is missing from some replications");
      sum_cloud += power_savings(group.at(Strategy::Cloud), it->second);
      sum_cf += power_savings(group.at(Strategy::CfOptimal), it->second);
      ++n;
    }
    SavingsRow row;
    row.strategy = strategy;
    row.vs_cloud_pct = sum_cloud / static_cast<double>(n);
    row.vs_cf_optimal_pct = sum_cf / static_cast<double>(n);
    table.rows.push_back(row);
  }
  return table;
}

void emit_csv(const SweepResult& result, const std::string& path) {
  std::ofstream out = open_for_write(path);
  out << kResultHeader << "\n";
  for (const ResultRow& r : result.rows) {
    out << sweep_kind_name(r.kind) << ',' << r.point << ',' << format_double(r.demand_mean) << ','
        << r.task_seed << ',' << strategy_name(r.strategy) << ',' << format_double(r.total_watts)
        << ',' << format_double(r.proc_cloud_watts) << ',' << format_double(r.proc_fog_watts)
        << ',' << format_double(r.proc_vc_watts) << ',' << format_double(r.net_watts) << ','
        << format_double(r.shared_watts) << ',' << solve_status_name(r.status) << "\n";
  }
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

SweepResult read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("'" + path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kResultHeader)
    throw std::runtime_error("'" + path + "' does not start with the expected header");

  SweepResult result;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != 12)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 12 fields, got " +
                               std::to_string(f.size()));
    ResultRow row;
    row.kind = parse_sweep_kind(f[0]);
    row.point = static_cast<int>(parse_double(f[1]));
    row.demand_mean = parse_double(f[2]);
    row.task_seed = std::stoull(f[3]);
    row.strategy = parse_strategy(f[4]);
    row.total_watts = parse_double(f[5]);
    row.proc_cloud_watts = parse_double(f[6]);
    row.proc_fog_watts = parse_double(f[7]);
    row.proc_vc_watts = parse_double(f[8]);
    row.net_watts = parse_double(f[9]);
    row.shared_watts = parse_double(f[10]);
    row.status = parse_solve_status(f[11]);
    result.rows.push_back(row);
  }
  return result;
}

void emit_savings_csv(const SavingsTable& table, const std::string& path) {
  std::ofstream out = open_for_write(path);
  out << "strategy,savings_vs_cloud_pct,savings_vs_cf_optimal_pct\n";
  for (const SavingsRow& r : table.rows)
    out << strategy_name(r.strategy) << ',' << format_double(r.vs_cloud_pct) << ','
        << format_double(r.vs_cf_optimal_pct) << "\n";
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void emit_plot_data(const SweepResult& result, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory '" + dir + "': " + ec.message());

  std::vector<Strategy> present;
  for (const ResultRow& r : result.rows)
    if (std::find(present.begin(), present.end(), r.strategy) == present.end())
      present.push_back(r.strategy);
  present = sorted_by_name(present);

  for (Strategy strategy : present) {
    // point -> (mean demand, running total, count)
    std::map<int, std::pair<double, std::pair<double, int>>> points;
    for (const ResultRow& r : result.rows) {
      if (r.strategy != strategy) continue;
      auto& slot = points[r.point];
      slot.first = r.demand_mean;
      slot.second.first += r.total_watts;
      slot.second.second += 1;
    }
    const std::string path = dir + "/" + strategy_name(strategy) + ".tsv";
    std::ofstream out = open_for_write(path);
    for (const auto& [point, slot] : points)
      out << format_double(slot.first) << '\t'
          << format_double(slot.second.first / slot.second.second) << "\n";
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
  }
}

void emit_timings_csv(const SweepResult& result, const std::string& path) {
  std::ofstream out = open_for_write(path);
  out << "sweep,point,task_seed,strategy,solve_ms\n";
  for (const ResultRow& r : result.rows)
    out << sweep_kind_name(r.kind) << ',' << r.point << ',' << r.task_seed << ','
        << strategy_name(r.strategy) << ',' << format_double(r.solve_ms) << "\n";
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void write_manifest(const RunConfig& config, const std::vector<SweepKind>& kinds,
                    const std::string& path) {
  nlohmann::json doc;
  doc["tool_version"] = kToolVersion;
  doc["seed"] = config.seed;
  doc["config_fingerprint"] = config_fingerprint(config);
  doc["architecture_fingerprint"] = architecture_from(config).fingerprint;
  doc["rng"] = kRngName;
  doc["replications"] = config.replications;
  nlohmann::json strategies = nlohmann::json::array();
  for (Strategy s : sorted_by_name(config.strategies)) strategies.push_back(strategy_name(s));
  doc["strategies"] = strategies;
  nlohmann::json sweeps = nlohmann::json::array();
  for (SweepKind k : kinds) sweeps.push_back(sweep_kind_name(k));
  doc["sweeps"] = sweeps;

  std::ofstream out = open_for_write(path);
  out << doc.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace vcoffload
