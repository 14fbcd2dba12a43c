#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vcoffload/architecture.hpp"
#include "vcoffload/milp.hpp"
#include "vcoffload/workload.hpp"

namespace vcoffload {

enum class Strategy { Cloud, CfOptimal, CfvSingle, CfvDistributed, CfvRandom };

const char* strategy_name(Strategy strategy);
Strategy parse_strategy(const std::string& name);
std::vector<Strategy> all_strategies();

/// x[i][j]: fraction of task i's processing on node j. Traffic to node j is
/// d_i · x[i][j] (splits carry proportional traffic).
struct AssignmentMatrix {
  int tasks = 0;
  int nodes = 0;
  std::vector<double> x;  // tasks × nodes, row-major
  Strategy strategy = Strategy::Cloud;
  bool feasible = false;

  double at(int i, int j) const { return x[static_cast<std::size_t>(i) * nodes + j]; }
  double& at(int i, int j) { return x[static_cast<std::size_t>(i) * nodes + j]; }
};

struct PowerBreakdown {
  double proc_cloud_watts = 0.0;
  double proc_fog_watts = 0.0;
  double proc_vc_watts = 0.0;
  std::vector<std::pair<std::string, double>> net_watts;  // per path device id
  double shared_watts = 0.0;
  double total_watts = 0.0;

  double proc_total() const { return proc_cloud_watts + proc_fog_watts + proc_vc_watts; }
  double net_total() const;
};

/// Power of running the whole task on the node: w·proc_intensity + d·path.
double task_node_cost(const Task& task, const ProcessingNode& node);

/// Node indices a strategy may use, in architecture order. cf_optimal
/// excludes the vc tier; the solver modes use every node.
std::vector<int> strategy_node_indices(const Architecture& arch, Strategy mode);

/// Compile the assignment problem for cf_optimal, cfv_single, or
/// cfv_distributed. Variables are x_{ij}, task-major over the mode's node
/// list; cfv_single declares them binary.
MilpInstance build_assignment_milp(const Architecture& arch, const std::vector<Task>& tasks,
                                   Strategy mode);

struct AssignOutcome {
  AssignmentMatrix matrix;
  SolveResult solve;  // synthesized (status Optimal, objective = cost) for cloud/random
};

AssignOutcome assign(const Architecture& arch, const std::vector<Task>& tasks, Strategy strategy,
                     const SolverOptions& options = {}, std::uint64_t seed = 0);

/// Per task: tier drawn uniformly from {cloud, fog, vc}; within the tier the
/// lowest-index node with room; vc overflow falls to fog, fog overflow to
/// cloud. Deterministic in seed.
AssignmentMatrix assign_random(const Architecture& arch, const std::vector<Task>& tasks,
                               std::uint64_t seed);

/// Empty string when the matrix satisfies row sums (±1e-6), capacities and
/// link limits (+1e-6); otherwise a diagnostic naming the violated row.
std::string check_assignment(const Architecture& arch, const std::vector<Task>& tasks,
                             const AssignmentMatrix& m);

/// Throws std::invalid_argument (with the check_assignment diagnostic) on
/// infeasible matrices.
PowerBreakdown evaluate_power(const Architecture& arch, const std::vector<Task>& tasks,
                              const AssignmentMatrix& m);

/// 100 × (1 − candidate/baseline); negative means the candidate loses power.
double power_savings(double baseline_watts, double candidate_watts);

}  // namespace vcoffload
