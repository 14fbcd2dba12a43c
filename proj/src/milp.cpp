#include "vcoffload/milp.hpp"

#include <cmath>
#include <stdexcept>

namespace vcoffload {

void validate_instance(const MilpInstance& instance) {
  const std::size_t n = instance.variables.size();
  if (instance.objective.size() != n)
    throw std::invalid_argument("objective has " + std::to_string(instance.objective.size()) +
                                " coefficients for " + std::to_string(n) + " variables");
  for (std::size_t j = 0; j < n; ++j) {
    const Variable& v = instance.variables[j];
    if (!std::isfinite(v.lower))
      throw std::invalid_argument("variable '" + v.name + "': lower bound must be finite");
    if (std::isnan(v.upper))
      throw std::invalid_argument("variable '" + v.name + "': upper bound is NaN");
    if (v.lower > v.upper)
      throw std::invalid_argument("variable '" + v.name + "': lower bound exceeds upper bound");
    if (v.integral && !std::isfinite(v.upper))
      throw std::invalid_argument("variable '" + v.name + "': integral variables need finite bounds");
  }
  for (const Constraint& row : instance.constraints) {
    for (const auto& [idx, coeff] : row.terms) {
      if (idx < 0 || static_cast<std::size_t>(idx) >= n)
        throw std::invalid_argument("constraint '" + row.name + "': term references variable " +
                                    std::to_string(idx) + " of " + std::to_string(n));
      if (!std::isfinite(coeff))
        throw std::invalid_argument("constraint '" + row.name + "': non-finite coefficient");
    }
    if (!std::isfinite(row.rhs))
      throw std::invalid_argument("constraint '" + row.name + "': non-finite right-hand side");
  }
}

const char* solve_status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "Optimal";
    case SolveStatus::Infeasible: return "Infeasible";
    case SolveStatus::Unbounded: return "Unbounded";
    case SolveStatus::IterationLimit: return "IterationLimit";
  }
  throw std::logic_error("unknown solve status");
}

SolveStatus parse_solve_status(const std::string& name) {
  if (name == "Optimal") return SolveStatus::Optimal;
  if (name == "Infeasible") return SolveStatus::Infeasible;
  if (name == "Unbounded") return SolveStatus::Unbounded;
  if (name == "IterationLimit") return SolveStatus::IterationLimit;
  throw std::invalid_argument("unknown solve status: " + name);
}

std::string check_solution(const MilpInstance& instance, const std::vector<double>& x,
                           double feas_tol, double int_tol) {
  if (x.size() != instance.variables.size())
    return "solution has " + std::to_string(x.size()) + " values for " +
           std::to_string(instance.variables.size()) + " variables";
  for (std::size_t j = 0; j < x.size(); ++j) {
    const Variable& v = instance.variables[j];
    if (!std::isfinite(x[j])) return "variable '" + v.name + "': non-finite value";
    if (x[j] < v.lower - feas_tol)
      return "variable '" + v.name + "': value " + format_double(x[j]) + " below lower bound " +
             format_double(v.lower);
    if (x[j] > v.upper + feas_tol)
      return "variable '" + v.name + "': value " + format_double(x[j]) + " above upper bound " +
             format_double(v.upper);
    if (v.integral && std::fabs(x[j] - std::round(x[j])) > int_tol)
      return "variable '" + v.name + "': value " + format_double(x[j]) + " is not integral";
  }
  for (const Constraint& row : instance.constraints) {
    double lhs = 0.0;
    for (const auto& [idx, coeff] : row.terms) lhs += coeff * x[static_cast<std::size_t>(idx)];
    const bool bad = (row.sense == RowSense::Le && lhs > row.rhs + feas_tol) ||
                     (row.sense == RowSense::Ge && lhs < row.rhs - feas_tol) ||
                     (row.sense == RowSense::Eq && std::fabs(lhs - row.rhs) > feas_tol);
    if (bad)
      return "constraint '" + row.name + "': activity " + format_double(lhs) +
             " violates rhs " + format_double(row.rhs);
  }
  return {};
}

double objective_value(const MilpInstance& instance, const std::vector<double>& x) {
  if (x.size() != instance.variables.size())
    throw std::invalid_argument("objective_value: solution size mismatch");
  double obj = instance.objective_constant;
  for (std::size_t j = 0; j < x.size(); ++j) obj += instance.objective[j] * x[j];
  return obj;
}

}  // namespace vcoffload
