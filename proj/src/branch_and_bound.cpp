#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "vcoffload/milp.hpp"

namespace vcoffload {

namespace {

struct Node {
  long parent = -1;
  int var = -1;        // variable whose bound this node tightens (-1 at the root)
  double value = 0.0;  // the new bound value
  bool is_upper = false;
  double bound = -std::numeric_limits<double>::infinity();  // parent LP objective
};

struct HeapEntry {
  double bound;
  long id;
  bool operator>(const HeapEntry& o) const {
    return bound > o.bound || (bound == o.bound && id > o.id);
  }
};

}  // namespace

SolveResult branch_and_bound(const MilpInstance& milp, const SolverOptions& options) {
  validate_instance(milp);

  std::vector<int> int_vars;
  for (std::size_t j = 0; j < milp.variables.size(); ++j)
    if (milp.variables[j].integral) int_vars.push_back(static_cast<int>(j));
  if (int_vars.empty()) return simplex_solve(milp, options);

  const std::size_t n = milp.variables.size();
  std::vector<double> root_lb(n), root_ub(n);
  for (std::size_t j = 0; j < n; ++j) {
    root_lb[j] = milp.variables[j].lower;
    root_ub[j] = milp.variables[j].upper;
  }

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> incumbent;
  double inc_obj = inf;
  if (!options.incumbent_hint.empty() &&
      check_solution(milp, options.incumbent_hint, options.feasibility_tol,
                     options.integrality_tol)
          .empty()) {
    incumbent = options.incumbent_hint;
    inc_obj = objective_value(milp, incumbent);
  }
  auto required_gap = [&] {
    return options.gap_tol * std::max(1.0, std::fabs(inc_obj));
  };

  std::vector<Node> nodes;
  nodes.push_back(Node{});
  std::vector<HeapEntry> heap;
  heap.push_back({-inf, 0});

  // Proven lower bound of the whole tree: the minimum over every disposed
  // leaf (infeasible leaves count as +inf).
  double proved_lb = inf;
  long solved = 0;
  long total_pivots = 0;
  bool node_cap_hit = false;
  bool node_lp_stuck = false;

  std::vector<double> lb(n), ub(n);
  std::vector<long> chain;

  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), std::greater<>{});
    const HeapEntry top = heap.back();
    heap.pop_back();

    if (!incumbent.empty() && top.bound >= inc_obj - required_gap()) {
      proved_lb = std::min(proved_lb, top.bound);
      continue;
    }
    if (solved >= options.max_nodes) {
      node_cap_hit = true;
      proved_lb = std::min(proved_lb, top.bound);
      for (const HeapEntry& e : heap) proved_lb = std::min(proved_lb, e.bound);
      break;
    }

    // Rebuild this node's bounds from the root: branching only tightens, so
    // plain assignment in root-to-leaf order is exact.
    lb = root_lb;
    ub = root_ub;
    chain.clear();
    for (long id = top.id; id >= 0; id = nodes[static_cast<std::size_t>(id)].parent)
      chain.push_back(id);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const Node& nd = nodes[static_cast<std::size_t>(*it)];
      if (nd.var < 0) continue;
      if (nd.is_upper)
        ub[static_cast<std::size_t>(nd.var)] =
            std::min(ub[static_cast<std::size_t>(nd.var)], nd.value);
      else
        lb[static_cast<std::size_t>(nd.var)] =
            std::max(lb[static_cast<std::size_t>(nd.var)], nd.value);
    }

    ++solved;
    SolveResult relax = simplex_solve_bounded(milp, lb, ub, options);
    total_pivots += relax.iterations;

    if (relax.status == SolveStatus::Infeasible) continue;  // leaf at +inf
    if (relax.status == SolveStatus::Unbounded) {
      SolveResult out;
      out.status = SolveStatus::Unbounded;
      out.nodes = solved;
      out.iterations = total_pivots;
      return out;
    }
    if (relax.status == SolveStatus::IterationLimit) {
      // Numerical trouble in a node relaxation: surface it rather than
      // silently mispruning the subtree.
      node_lp_stuck = true;
      proved_lb = std::min(proved_lb, top.bound);
      for (const HeapEntry& e : heap) proved_lb = std::min(proved_lb, e.bound);
      break;
    }

    if (!incumbent.empty() && relax.objective >= inc_obj - required_gap()) {
      proved_lb = std::min(proved_lb, relax.objective);
      continue;
    }

    // Most fractional integral variable; ties to the lowest index.
    int branch_var = -1;
    double branch_val = 0.0;
    double best_dist = inf;
    for (int j : int_vars) {
      const double v = relax.solution[static_cast<std::size_t>(j)];
      const double fr = v - std::floor(v);
      if (std::min(fr, 1.0 - fr) <= options.integrality_tol) continue;
      const double dist = std::fabs(fr - 0.5);
      if (dist < best_dist) {
        best_dist = dist;
        branch_var = j;
        branch_val = v;
      }
    }

    if (branch_var < 0) {
      // Integral leaf; the LP point itself is the candidate (values are
      // within the integrality tolerance already).
      proved_lb = std::min(proved_lb, relax.objective);
      if (relax.objective < inc_obj) {
        incumbent = relax.solution;
        inc_obj = relax.objective;
      }
      continue;
    }

    Node left;
    left.parent = top.id;
    left.var = branch_var;
    left.value = std::floor(branch_val);
    left.is_upper = true;
    left.bound = relax.objective;
    Node right;
    right.parent = top.id;
    right.var = branch_var;
    right.value = std::ceil(branch_val);
    right.is_upper = false;
    right.bound = relax.objective;

    const long left_id = static_cast<long>(nodes.size());
    nodes.push_back(left);
    heap.push_back({left.bound, left_id});
    std::push_heap(heap.begin(), heap.end(), std::greater<>{});
    const long right_id = static_cast<long>(nodes.size());
    nodes.push_back(right);
    heap.push_back({right.bound, right_id});
    std::push_heap(heap.begin(), heap.end(), std::greater<>{});
  }

  SolveResult out;
  out.nodes = solved;
  out.iterations = total_pivots;
  if (incumbent.empty()) {
    out.status = (node_cap_hit || node_lp_stuck) ? SolveStatus::IterationLimit
                                                 : SolveStatus::Infeasible;
    return out;
  }
  out.solution = incumbent;
  out.objective = inc_obj;
  out.bound_gap = std::max(0.0, inc_obj - std::min(proved_lb, inc_obj));
  out.status = (node_cap_hit || node_lp_stuck) ? SolveStatus::IterationLimit : SolveStatus::Optimal;
  return out;
}

}  // namespace vcoffload
