#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vcoffload/util.hpp"

namespace vcoffload {

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = kUnbounded;
  bool integral = false;
};

enum class RowSense { Le, Eq, Ge };

struct Constraint {
  std::string name;
  std::vector<std::pair<int, double>> terms;  // (variable index, coefficient)
  RowSense sense = RowSense::Le;
  double rhs = 0.0;
};

/// Minimization instance. Lower bounds must be finite (shifted standard form);
/// integral variables additionally need finite upper bounds.
struct MilpInstance {
  std::vector<Variable> variables;
  std::vector<double> objective;  // one coefficient per variable
  double objective_constant = 0.0;
  std::vector<Constraint> constraints;
};

/// Throws std::invalid_argument on malformed instances (bad bounds, term
/// indices out of range, objective size mismatch, unbounded integral vars).
void validate_instance(const MilpInstance& instance);

enum class SolveStatus { Optimal, Infeasible, Unbounded, IterationLimit };

const char* solve_status_name(SolveStatus status);
SolveStatus parse_solve_status(const std::string& name);

struct SolverOptions {
  double feasibility_tol = 1e-7;
  double integrality_tol = 1e-6;
  double gap_tol = 1e-6;    // accepted bound gap, relative to max(1, |objective|)
  long max_iterations = 0;  // simplex pivots per solve; 0 means 100 × (rows + cols)
  // Branch-and-bound node budget (LP solves). Tiny instances prove out in
  // tens of nodes; on larger symmetric systems no practical budget closes the
  // gap and extra nodes rarely improve the warm-start incumbent, so the
  // default keeps a worst-case solve interactive and reports IterationLimit.
  long max_nodes = 500;
  std::vector<double> incumbent_hint;  // optional feasible integral start point
};

struct SolveResult {
  SolveStatus status = SolveStatus::IterationLimit;
  double objective = 0.0;
  std::vector<double> solution;  // one value per variable; empty if none found
  double bound_gap = 0.0;        // incumbent minus proven bound (branch-and-bound)
  long iterations = 0;           // simplex pivots
  long nodes = 0;                // branch-and-bound LP solves
};

/// Bounded-variable two-phase dense simplex. Rejects instances with integral
/// variables.
SolveResult simplex_solve(const MilpInstance& lp, const SolverOptions& options = {});

/// Same solver with per-call bound overrides (used by branch-and-bound nodes;
/// integrality flags are ignored). lower/upper must have one entry per
/// variable.
SolveResult simplex_solve_bounded(const MilpInstance& lp, const std::vector<double>& lower,
                                  const std::vector<double>& upper, const SolverOptions& options);

/// Best-bound branch-and-bound over simplex relaxations; branches on the most
/// fractional integral variable, ties to the lowest index. Instances without
/// integral variables degrade to a plain simplex solve.
SolveResult branch_and_bound(const MilpInstance& milp, const SolverOptions& options = {});

/// Industry-standard LP text format (Minimize / Subject To / Bounds /
/// Generals / Binaries / End); names sanitized to [A-Za-z0-9_].
std::string export_lp(const MilpInstance& milp);

/// Empty string if x satisfies every bound, row, and integrality flag within
/// the tolerances; otherwise a diagnostic naming the first violation.
std::string check_solution(const MilpInstance& instance, const std::vector<double>& x,
                           double feas_tol = 1e-7, double int_tol = 1e-6);

/// Objective value of a point: c·x + constant.
double objective_value(const MilpInstance& instance, const std::vector<double>& x);

}  // namespace vcoffload
