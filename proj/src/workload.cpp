#include "vcoffload/workload.hpp"

#include <random>
#include <stdexcept>

namespace vcoffload {

const char* sweep_kind_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::Traffic: return "traffic";
    case SweepKind::Processing: return "processing";
  }
  throw std::logic_error("unknown sweep kind");
}

SweepKind parse_sweep_kind(const std::string& name) {
  if (name == "traffic") return SweepKind::Traffic;
  if (name == "processing") return SweepKind::Processing;
  throw std::invalid_argument("unknown sweep kind: " + name);
}

namespace {

void check_pair(double mean, double sd, const char* what) {
  if (!(mean > 0.0)) throw std::invalid_argument(std::string(what) + " mean must be positive");
  if (!(sd >= 0.0)) throw std::invalid_argument(std::string(what) + " sd must be non-negative");
}

// One truncated-normal draw: resample until the value reaches the 1%-of-mean
// floor. sd == 0 returns the mean exactly without touching the engine, so a
// degenerate spec consumes no randomness.
double draw(std::mt19937_64& rng, double mean, double sd) {
  if (sd == 0.0) return mean;
  std::normal_distribution<double> dist(mean, sd);
  const double floor = 0.01 * mean;
  for (;;) {
    double v = dist(rng);
    if (v >= floor) return v;
  }
}

}  // namespace

std::vector<Task> sample_tasks(const DemandSpec& spec) {
  if (spec.count < 0) throw std::invalid_argument("task count must be non-negative");
  check_pair(spec.proc_mean, spec.proc_sd, "processing");
  check_pair(spec.traffic_mean, spec.traffic_sd, "traffic");

  std::mt19937_64 rng(spec.seed);
  std::vector<Task> tasks;
  tasks.reserve(static_cast<std::size_t>(spec.count));
  // Per task: processing first, then traffic, so the stream layout is fixed.
  for (int i = 0; i < spec.count; ++i) {
    Task t;
    t.id = i;
    t.proc_demand = draw(rng, spec.proc_mean, spec.proc_sd);
    t.traffic_demand = draw(rng, spec.traffic_mean, spec.traffic_sd);
    tasks.push_back(t);
  }
  return tasks;
}

std::vector<DemandSpec> sweep_specs(SweepKind kind, const DemandSpec& base) {
  std::vector<DemandSpec> specs;
  specs.reserve(10);
  for (int k = 0; k < 10; ++k) {
    DemandSpec s = base;
    if (kind == SweepKind::Traffic) {
      s.traffic_mean = 10.0 * (k + 1);
    } else {
      s.proc_mean = 0.1 * (k + 1);
    }
    s.seed = base.seed + static_cast<std::uint64_t>(k);
    specs.push_back(s);
  }
  return specs;
}

}  // namespace vcoffload
