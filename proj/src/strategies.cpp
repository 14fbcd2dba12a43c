#include "vcoffload/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace vcoffload {

namespace {

constexpr double kMatrixTol = 1e-6;  // row-sum and capacity slack on matrices
constexpr double kFitTol = 1e-9;     // slack when packing procedural assignments

}  // namespace

const char* strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::Cloud: return "cloud";
    case Strategy::CfOptimal: return "cf_optimal";
    case Strategy::CfvSingle: return "cfv_single";
    case Strategy::CfvDistributed: return "cfv_distributed";
    case Strategy::CfvRandom: return "cfv_random";
  }
  throw std::logic_error("unknown strategy");
}

Strategy parse_strategy(const std::string& name) {
  for (Strategy s : all_strategies())
    if (name == strategy_name(s)) return s;
  throw std::invalid_argument("unknown strategy: " + name);
}

std::vector<Strategy> all_strategies() {
  return {Strategy::Cloud, Strategy::CfOptimal, Strategy::CfvSingle, Strategy::CfvDistributed,
          Strategy::CfvRandom};
}

double PowerBreakdown::net_total() const {
  double v = 0.0;
  for (const auto& [id, w] : net_watts) v += w;
  return v;
}

double task_node_cost(const Task& task, const ProcessingNode& node) {
  return task.proc_demand * node.proc_intensity + task.traffic_demand * path_intensity(node);
}

std::vector<int> strategy_node_indices(const Architecture& arch, Strategy mode) {
  std::vector<int> idx;
  for (std::size_t j = 0; j < arch.nodes.size(); ++j) {
    if (mode == Strategy::CfOptimal && arch.nodes[j].tier == Tier::Vc) continue;
    idx.push_back(static_cast<int>(j));
  }
  return idx;
}

MilpInstance build_assignment_milp(const Architecture& arch, const std::vector<Task>& tasks,
                                   Strategy mode) {
  if (mode != Strategy::CfOptimal && mode != Strategy::CfvSingle &&
      mode != Strategy::CfvDistributed)
    throw std::invalid_argument(std::string("strategy '") + strategy_name(mode) +
                                "' has no optimization model");

  const std::vector<int> node_idx = strategy_node_indices(arch, mode);
  const int K = static_cast<int>(node_idx.size());
  const int T = static_cast<int>(tasks.size());
  const bool binary = mode == Strategy::CfvSingle;

  MilpInstance inst;
  inst.variables.reserve(static_cast<std::size_t>(T) * K);
  inst.objective.reserve(static_cast<std::size_t>(T) * K);
  for (int i = 0; i < T; ++i) {
    for (int k = 0; k < K; ++k) {
      const ProcessingNode& node = arch.nodes[static_cast<std::size_t>(node_idx[k])];
      Variable v;
      v.name = "x_" + std::to_string(tasks[static_cast<std::size_t>(i)].id) + "_" + node.id;
      v.lower = 0.0;
      v.upper = 1.0;
      v.integral = binary;
      // A whole task that cannot fit a node at all pins its indicator to
      // zero; only valid when tasks are unsplittable.
      if (binary && (tasks[static_cast<std::size_t>(i)].proc_demand > node.proc_capacity ||
                     tasks[static_cast<std::size_t>(i)].traffic_demand > node.link_capacity))
        v.upper = 0.0;
      inst.variables.push_back(std::move(v));
      inst.objective.push_back(task_node_cost(tasks[static_cast<std::size_t>(i)], node));
    }
  }

  auto var = [K](int i, int k) { return i * K + k; };

  for (int i = 0; i < T; ++i) {
    Constraint row;
    row.name = "assign_" + std::to_string(tasks[static_cast<std::size_t>(i)].id);
    row.sense = RowSense::Eq;
    row.rhs = 1.0;
    row.terms.reserve(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k) row.terms.push_back({var(i, k), 1.0});
    inst.constraints.push_back(std::move(row));
  }
  for (int k = 0; k < K; ++k) {
    const ProcessingNode& node = arch.nodes[static_cast<std::size_t>(node_idx[k])];
    if (node.proc_capacity == kUnbounded) continue;
    Constraint row;
    row.name = "cap_" + node.id;
    row.sense = RowSense::Le;
    row.rhs = node.proc_capacity;
    row.terms.reserve(static_cast<std::size_t>(T));
    for (int i = 0; i < T; ++i)
      row.terms.push_back({var(i, k), tasks[static_cast<std::size_t>(i)].proc_demand});
    inst.constraints.push_back(std::move(row));
  }
  for (int k = 0; k < K; ++k) {
    const ProcessingNode& node = arch.nodes[static_cast<std::size_t>(node_idx[k])];
    if (node.link_capacity == kUnbounded) continue;
    Constraint row;
    row.name = "link_" + node.id;
    row.sense = RowSense::Le;
    row.rhs = node.link_capacity;
    row.terms.reserve(static_cast<std::size_t>(T));
    for (int i = 0; i < T; ++i)
      row.terms.push_back({var(i, k), tasks[static_cast<std::size_t>(i)].traffic_demand});
    inst.constraints.push_back(std::move(row));
  }
  if (arch.vc_aggregate_link != kUnbounded) {
    Constraint row;
    row.name = "link_vc_aggregate";
    row.sense = RowSense::Le;
    row.rhs = arch.vc_aggregate_link;
    for (int k = 0; k < K; ++k) {
      const ProcessingNode& node = arch.nodes[static_cast<std::size_t>(node_idx[k])];
      if (node.tier != Tier::Vc) continue;
      for (int i = 0; i < T; ++i)
        row.terms.push_back({var(i, k), tasks[static_cast<std::size_t>(i)].traffic_demand});
    }
    inst.constraints.push_back(std::move(row));
  }
  return inst;
}

namespace {

int cloud_node_index(const Architecture& arch) {
  for (std::size_t j = 0; j < arch.nodes.size(); ++j)
    if (arch.nodes[j].tier == Tier::Cloud) return static_cast<int>(j);
  throw std::invalid_argument("architecture has no cloud node");
}

AssignmentMatrix empty_matrix(const Architecture& arch, const std::vector<Task>& tasks,
                              Strategy strategy) {
  AssignmentMatrix m;
  m.tasks = static_cast<int>(tasks.size());
  m.nodes = static_cast<int>(arch.nodes.size());
  m.x.assign(static_cast<std::size_t>(m.tasks) * m.nodes, 0.0);
  m.strategy = strategy;
  return m;
}

double matrix_cost(const Architecture& arch, const std::vector<Task>& tasks,
                   const AssignmentMatrix& m) {
  double cost = 0.0;
  for (int i = 0; i < m.tasks; ++i)
    for (int j = 0; j < m.nodes; ++j) {
      const double xij = m.at(i, j);
      if (xij != 0.0)
        cost += xij * task_node_cost(tasks[static_cast<std::size_t>(i)],
                                     arch.nodes[static_cast<std::size_t>(j)]);
    }
  return cost;
}

// Tracks remaining room while building single assignments one task at a time.
struct PackState {
  std::vector<double> proc_left;
  std::vector<double> link_left;
  double aggregate_left;

  explicit PackState(const Architecture& arch) : aggregate_left(arch.vc_aggregate_link) {
    proc_left.reserve(arch.nodes.size());
    link_left.reserve(arch.nodes.size());
    for (const ProcessingNode& n : arch.nodes) {
      proc_left.push_back(n.proc_capacity);
      link_left.push_back(n.link_capacity);
    }
  }

  bool fits(const Architecture& arch, const Task& t, int j) const {
    if (t.proc_demand > proc_left[static_cast<std::size_t>(j)] + kFitTol) return false;
    if (t.traffic_demand > link_left[static_cast<std::size_t>(j)] + kFitTol) return false;
    if (arch.nodes[static_cast<std::size_t>(j)].tier == Tier::Vc &&
        t.traffic_demand > aggregate_left + kFitTol)
      return false;
    return true;
  }

  void place(const Architecture& arch, const Task& t, int j) {
    if (proc_left[static_cast<std::size_t>(j)] != kUnbounded)
      proc_left[static_cast<std::size_t>(j)] -= t.proc_demand;
    if (link_left[static_cast<std::size_t>(j)] != kUnbounded)
      link_left[static_cast<std::size_t>(j)] -= t.traffic_demand;
    if (arch.nodes[static_cast<std::size_t>(j)].tier == Tier::Vc && aggregate_left != kUnbounded)
      aggregate_left -= t.traffic_demand;
  }

  void remove(const Architecture& arch, const Task& t, int j) {
    if (proc_left[static_cast<std::size_t>(j)] != kUnbounded)
      proc_left[static_cast<std::size_t>(j)] += t.proc_demand;
    if (link_left[static_cast<std::size_t>(j)] != kUnbounded)
      link_left[static_cast<std::size_t>(j)] += t.traffic_demand;
    if (arch.nodes[static_cast<std::size_t>(j)].tier == Tier::Vc && aggregate_left != kUnbounded)
      aggregate_left += t.traffic_demand;
  }
};

// Feasible warm start for the single-assignment solver: big tasks first into
// the cheapest node with room, then single-task moves until no move helps.
std::vector<double> greedy_single_hint(const Architecture& arch, const std::vector<Task>& tasks,
                                       const std::vector<int>& node_idx) {
  const int T = static_cast<int>(tasks.size());
  const int K = static_cast<int>(node_idx.size());
  std::vector<int> order(static_cast<std::size_t>(T));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double wa = tasks[static_cast<std::size_t>(a)].proc_demand;
    const double wb = tasks[static_cast<std::size_t>(b)].proc_demand;
    return wa > wb || (wa == wb && a < b);
  });

  PackState pack(arch);
  std::vector<int> chosen(static_cast<std::size_t>(T), -1);
  for (int i : order) {
    const Task& t = tasks[static_cast<std::size_t>(i)];
    int best = -1;
    double best_cost = kUnbounded;
    for (int k = 0; k < K; ++k) {
      const int j = node_idx[static_cast<std::size_t>(k)];
      if (!pack.fits(arch, t, j)) continue;
      const double c = task_node_cost(t, arch.nodes[static_cast<std::size_t>(j)]);
      if (c < best_cost) {
        best_cost = c;
        best = k;
      }
    }
    if (best < 0) throw std::logic_error("no node fits a task; the unbounded cloud is missing");
    chosen[static_cast<std::size_t>(i)] = best;
    pack.place(arch, t, node_idx[static_cast<std::size_t>(best)]);
  }

  for (int pass = 0; pass < 50; ++pass) {
    bool changed = false;
    for (int i = 0; i < T; ++i) {
      const Task& t = tasks[static_cast<std::size_t>(i)];
      const int k0 = chosen[static_cast<std::size_t>(i)];
      pack.remove(arch, t, node_idx[static_cast<std::size_t>(k0)]);
      int best = k0;
      double best_cost =
          task_node_cost(t, arch.nodes[static_cast<std::size_t>(node_idx[static_cast<std::size_t>(k0)])]);
      for (int k = 0; k < K; ++k) {
        if (k == k0) continue;
        const int j = node_idx[static_cast<std::size_t>(k)];
        if (!pack.fits(arch, t, j)) continue;
        const double c = task_node_cost(t, arch.nodes[static_cast<std::size_t>(j)]);
        if (c < best_cost - 1e-12) {
          best_cost = c;
          best = k;
        }
      }
      pack.place(arch, t, node_idx[static_cast<std::size_t>(best)]);
      if (best != k0) {
        chosen[static_cast<std::size_t>(i)] = best;
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::vector<double> hint(static_cast<std::size_t>(T) * K, 0.0);
  for (int i = 0; i < T; ++i)
    hint[static_cast<std::size_t>(i) * K + chosen[static_cast<std::size_t>(i)]] = 1.0;
  return hint;
}

void fill_from_solution(AssignmentMatrix& m, const std::vector<double>& solution,
                        const std::vector<int>& node_idx) {
  const int K = static_cast<int>(node_idx.size());
  for (int i = 0; i < m.tasks; ++i)
    for (int k = 0; k < K; ++k)
      m.at(i, node_idx[static_cast<std::size_t>(k)]) =
          solution[static_cast<std::size_t>(i) * K + k];
}

}  // namespace

AssignmentMatrix assign_random(const Architecture& arch, const std::vector<Task>& tasks,
                               std::uint64_t seed) {
  AssignmentMatrix m = empty_matrix(arch, tasks, Strategy::CfvRandom);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> tier_draw(0, 2);  // 0 cloud, 1 fog, 2 vc
  PackState pack(arch);

  for (int i = 0; i < m.tasks; ++i) {
    const Task& t = tasks[static_cast<std::size_t>(i)];
    const int drawn = tier_draw(rng);
    // Overflow cascade: vc falls back to fog, fog falls back to the
    // unbounded cloud.
    const Tier tries[3] = {drawn == 0 ? Tier::Cloud : (drawn == 1 ? Tier::Fog : Tier::Vc),
                           drawn == 2 ? Tier::Fog : Tier::Cloud, Tier::Cloud};
    int placed = -1;
    for (const Tier tier : tries) {
      for (std::size_t j = 0; j < arch.nodes.size() && placed < 0; ++j) {
        if (arch.nodes[j].tier != tier) continue;
        if (pack.fits(arch, t, static_cast<int>(j))) placed = static_cast<int>(j);
      }
      if (placed >= 0) break;
    }
    if (placed < 0) throw std::logic_error("no node fits a task; the unbounded cloud is missing");
    pack.place(arch, t, placed);
    m.at(i, placed) = 1.0;
  }
  m.feasible = check_assignment(arch, tasks, m).empty();
  return m;
}

AssignOutcome assign(const Architecture& arch, const std::vector<Task>& tasks, Strategy strategy,
                     const SolverOptions& options, std::uint64_t seed) {
  AssignOutcome out;
  switch (strategy) {
    case Strategy::Cloud: {
      out.matrix = empty_matrix(arch, tasks, Strategy::Cloud);
      const int cloud = cloud_node_index(arch);
      for (int i = 0; i < out.matrix.tasks; ++i) out.matrix.at(i, cloud) = 1.0;
      out.solve.status = SolveStatus::Optimal;
      out.solve.objective = matrix_cost(arch, tasks, out.matrix);
      break;
    }
    case Strategy::CfvRandom: {
      out.matrix = assign_random(arch, tasks, seed);
      out.solve.status = SolveStatus::Optimal;
      out.solve.objective = matrix_cost(arch, tasks, out.matrix);
      break;
    }
    case Strategy::CfOptimal:
    case Strategy::CfvDistributed: {
      const MilpInstance lp = build_assignment_milp(arch, tasks, strategy);
      out.solve = simplex_solve(lp, options);
      if (out.solve.status != SolveStatus::Optimal)
        throw std::runtime_error(std::string(strategy_name(strategy)) + " relaxation: solver returned " +
                                 solve_status_name(out.solve.status));
      out.matrix = empty_matrix(arch, tasks, strategy);
      fill_from_solution(out.matrix, out.solve.solution, strategy_node_indices(arch, strategy));
      break;
    }
    case Strategy::CfvSingle: {
      const MilpInstance milp = build_assignment_milp(arch, tasks, strategy);
      const std::vector<int> node_idx = strategy_node_indices(arch, strategy);
      SolverOptions opts = options;
      opts.incumbent_hint = greedy_single_hint(arch, tasks, node_idx);
      out.solve = branch_and_bound(milp, opts);
      if (out.solve.solution.empty())
        throw std::runtime_error(std::string("cfv_single: solver returned ") +
                                 solve_status_name(out.solve.status) + " without a solution");
      out.matrix = empty_matrix(arch, tasks, strategy);
      fill_from_solution(out.matrix, out.solve.solution, node_idx);
      break;
    }
  }
  out.matrix.feasible = check_assignment(arch, tasks, out.matrix).empty();
  return out;
}

std::string check_assignment(const Architecture& arch, const std::vector<Task>& tasks,
                             const AssignmentMatrix& m) {
  if (m.tasks != static_cast<int>(tasks.size()) || m.nodes != static_cast<int>(arch.nodes.size()))
    return "matrix shape " + std::to_string(m.tasks) + "x" + std::to_string(m.nodes) +
           " does not match " + std::to_string(tasks.size()) + " tasks x " +
           std::to_string(arch.nodes.size()) + " nodes";
  if (m.x.size() != static_cast<std::size_t>(m.tasks) * m.nodes)
    return "matrix storage does not match its declared shape";

  for (int i = 0; i < m.tasks; ++i) {
    double sum = 0.0;
    for (int j = 0; j < m.nodes; ++j) {
      const double xij = m.at(i, j);
      if (!(xij >= -kMatrixTol) || !(xij <= 1.0 + kMatrixTol))
        return "x[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + format_double(xij) +
               " outside [0,1]";
      sum += xij;
    }
    if (std::fabs(sum - 1.0) > kMatrixTol)
      return "task " + std::to_string(i) + ": assignment fractions sum to " + format_double(sum);
  }

  double aggregate = 0.0;
  for (int j = 0; j < m.nodes; ++j) {
    const ProcessingNode& node = arch.nodes[static_cast<std::size_t>(j)];
    double load = 0.0;
    double traffic = 0.0;
    for (int i = 0; i < m.tasks; ++i) {
      load += tasks[static_cast<std::size_t>(i)].proc_demand * m.at(i, j);
      traffic += tasks[static_cast<std::size_t>(i)].traffic_demand * m.at(i, j);
    }
    if (node.proc_capacity != kUnbounded && load > node.proc_capacity + kMatrixTol)
      return "node " + node.id + ": processing load " + format_double(load) + " exceeds capacity " +
             format_double(node.proc_capacity);
    if (node.link_capacity != kUnbounded && traffic > node.link_capacity + kMatrixTol)
      return "node " + node.id + ": traffic " + format_double(traffic) + " exceeds link capacity " +
             format_double(node.link_capacity);
    if (node.tier == Tier::Vc) aggregate += traffic;
  }
  if (arch.vc_aggregate_link != kUnbounded && aggregate > arch.vc_aggregate_link + kMatrixTol)
    return "vc tier: aggregate traffic " + format_double(aggregate) + " exceeds shared link " +
           format_double(arch.vc_aggregate_link);
  return {};
}

PowerBreakdown evaluate_power(const Architecture& arch, const std::vector<Task>& tasks,
                              const AssignmentMatrix& m) {
  const std::string problem = check_assignment(arch, tasks, m);
  if (!problem.empty()) throw std::invalid_argument("infeasible assignment: " + problem);

  PowerBreakdown p;
  for (int j = 0; j < m.nodes; ++j) {
    const ProcessingNode& node = arch.nodes[static_cast<std::size_t>(j)];
    double load = 0.0;
    double traffic = 0.0;
    for (int i = 0; i < m.tasks; ++i) {
      load += tasks[static_cast<std::size_t>(i)].proc_demand * m.at(i, j);
      traffic += tasks[static_cast<std::size_t>(i)].traffic_demand * m.at(i, j);
    }
    const double proc = load * node.proc_intensity;
    switch (node.tier) {
      case Tier::Cloud: p.proc_cloud_watts += proc; break;
      case Tier::Fog: p.proc_fog_watts += proc; break;
      case Tier::Vc: p.proc_vc_watts += proc; break;
    }
    for (const PathHop& hop : node.path.hops) {
      const double watts = hop.multiplicity * energy_intensity(hop.device).value * traffic;
      auto it = std::find_if(p.net_watts.begin(), p.net_watts.end(),
                             [&](const auto& kv) { return kv.first == hop.device.id; });
      if (it == p.net_watts.end())
        p.net_watts.push_back({hop.device.id, watts});
      else
        it->second += watts;
    }
  }
  p.shared_watts = shared_overhead(arch, tasks);
  p.total_watts = p.proc_total() + p.net_total() + p.shared_watts;
  return p;
}

double power_savings(double baseline_watts, double candidate_watts) {
  if (!(baseline_watts > 0.0))
    throw std::invalid_argument("power_savings: baseline must be positive");
  return 100.0 * (1.0 - candidate_watts / baseline_watts);
}

}  // namespace vcoffload
