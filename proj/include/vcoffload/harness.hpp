#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcoffload/config.hpp"
#include "vcoffload/milp.hpp"
#include "vcoffload/strategies.hpp"
#include "vcoffload/workload.hpp"

namespace vcoffload {

inline constexpr const char* kToolVersion = "0.1.0";

struct ResultRow {
  SweepKind kind = SweepKind::Traffic;
  int point = 0;                // 0-based sweep point
  double demand_mean = 0.0;     // the swept mean (Mb/s or GHz)
  std::uint64_t task_seed = 0;  // seed that generated this replication's tasks
  Strategy strategy = Strategy::Cloud;
  double total_watts = 0.0;
  double proc_cloud_watts = 0.0;
  double proc_fog_watts = 0.0;
  double proc_vc_watts = 0.0;
  double net_watts = 0.0;
  double shared_watts = 0.0;
  SolveStatus status = SolveStatus::Optimal;
  double solve_ms = 0.0;  // recorded separately from results.csv (wall time is not reproducible)
};

struct SweepResult {
  std::vector<ResultRow> rows;  // ordered (point, replication, strategy name)
  std::uint64_t master_seed = 0;
  int replications = 0;
  std::string config_fingerprint;
};

struct SavingsRow {
  Strategy strategy = Strategy::Cloud;
  double vs_cloud_pct = 0.0;
  double vs_cf_optimal_pct = 0.0;
};

struct SavingsTable {
  std::vector<SavingsRow> rows;  // ordered by strategy name
};

/// Task seed for one replication of one sweep point: the point's seed (master
/// seed + point index, from sweep_specs) plus 1000 × replication. cfv_random
/// reuses the same seed for its tier draws.
std::uint64_t replication_seed(std::uint64_t point_seed, int replication);

/// Runs one sweep end-to-end: 10 points × replications × strategies, every
/// strategy of a replication on the identical task set. Deterministic given
/// config.seed. Rows with a non-Optimal solver status carry the incumbent's
/// totals and are flagged in the status column.
SweepResult run_sweep(SweepKind kind, const RunConfig& config);

/// Mean pointwise savings per strategy against the cloud and cf_optimal
/// baselines. Throws if a (point, replication) group lacks a baseline row.
SavingsTable savings_table(const SweepResult& sweep);

void emit_csv(const SweepResult& result, const std::string& path);
SweepResult read_csv(const std::string& path);

void emit_savings_csv(const SavingsTable& table, const std::string& path);

/// One TSV per strategy under dir: demand mean vs replication-averaged total.
void emit_plot_data(const SweepResult& result, const std::string& dir);

/// Wall-clock solve times, kept apart from results.csv so reruns stay
/// byte-identical there.
void emit_timings_csv(const SweepResult& result, const std::string& path);

void write_manifest(const RunConfig& config, const std::vector<SweepKind>& kinds,
                    const std::string& path);

}  // namespace vcoffload
