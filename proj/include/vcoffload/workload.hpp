#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vcoffload {

/// One requested job: processing demand plus the traffic it generates.
struct Task {
  int id = 0;
  double proc_demand = 0.0;     // GHz
  double traffic_demand = 0.0;  // Mb/s
};

/// Parameters of the normally distributed task batch. Draws are truncated by
/// rejection-resampling to at least 1% of their mean, so demands stay
/// strictly positive.
struct DemandSpec {
  int count = 50;
  double proc_mean = 1.0;     // GHz
  double proc_sd = 0.5;       // GHz
  double traffic_mean = 50.0; // Mb/s
  double traffic_sd = 5.0;    // Mb/s
  std::uint64_t seed = 1;
};

enum class SweepKind { Traffic, Processing };

const char* sweep_kind_name(SweepKind kind);
SweepKind parse_sweep_kind(const std::string& name);

/// Generator recorded in run manifests; runs are reproducible for a given
/// build, bit-equality across standard libraries is not promised.
inline constexpr const char* kRngName = "std::mt19937_64 + std::normal_distribution";

/// Deterministic in spec.seed: the same spec always yields the same tasks.
std::vector<Task> sample_tasks(const DemandSpec& spec);

/// The ten sweep points of the corresponding experiment. Traffic: mean
/// 10..100 Mb/s in steps of 10; processing: mean 0.1..1.0 GHz in steps of
/// 0.1. Point k uses seed base.seed + k; all other fields come from base.
std::vector<DemandSpec> sweep_specs(SweepKind kind, const DemandSpec& base);

}  // namespace vcoffload
