#include <algorithm>
#include <cmath>
#include <cstring>
#include <vector>

#include "vcoffload/milp.hpp"

namespace vcoffload {

namespace {

constexpr double kPivotTol = 1e-9;   // smallest usable pivot element
constexpr double kDualTol = 1e-9;    // reduced-cost threshold for entering candidates
constexpr double kZeroStep = 1e-12;  // steps below this count as degenerate
constexpr int kStallLimit = 100;     // degenerate pivots before Bland's rule takes over

enum class ColState : unsigned char { Basic, AtLower, AtUpper };

// Computational standard form after shifting x = lower + y:
//   minimize cost·y  s.t.  T y = rhs',  0 <= y_j <= upper_j  (upper may be inf)
// Columns: active structurals, then one slack per inequality row, then
// phase-1 artificials. The tableau is kept dense, row-major.
class BoundedSimplex {
 public:
  BoundedSimplex(const MilpInstance& inst, const std::vector<double>& lb,
                 const std::vector<double>& ub, const SolverOptions& opts)
      : inst_(inst), lb_(lb), ub_(ub), opts_(opts) {}

  SolveResult run() {
    SolveResult out;
    for (std::size_t j = 0; j < inst_.variables.size(); ++j) {
      // A branch that pins lb above ub makes the node trivially infeasible.
      if (lb_[j] > ub_[j] + opts_.feasibility_tol) {
        out.status = SolveStatus::Infeasible;
        return out;
      }
    }
    build();

    max_iters_ = opts_.max_iterations > 0
                     ? opts_.max_iterations
                     : 100 * static_cast<long>(inst_.constraints.size() + inst_.variables.size());

    if (!art_cols_.empty()) {
      set_phase1_costs();
      SolveStatus s = iterate(/*phase1=*/true);
      if (s == SolveStatus::IterationLimit) {
        out.status = s;
        out.iterations = iters_;
        return out;
      }
      if (phase1_objective() > opts_.feasibility_tol) {
        out.status = SolveStatus::Infeasible;
        out.iterations = iters_;
        return out;
      }
      evict_artificials();
      for (int a : art_cols_) upper_[static_cast<std::size_t>(a)] = 0.0;  // locked out of phase 2
    }

    set_phase2_costs();
    SolveStatus s = iterate(/*phase1=*/false);
    out.status = s;
    out.iterations = iters_;
    if (s != SolveStatus::Optimal) return out;

    out.solution = extract_solution();
    clamp_to_bounds(out.solution);
    out.objective = objective_value(inst_, out.solution);
    return out;
  }

 private:
  const MilpInstance& inst_;
  const std::vector<double>& lb_;
  const std::vector<double>& ub_;
  const SolverOptions& opts_;

  int rows_ = 0;
  int cols_ = 0;
  int n_active_ = 0;                // active structural columns
  std::vector<int> col_to_var_;     // active column -> instance variable
  std::vector<double> tab_;         // rows_ × cols_, row-major
  std::vector<double> xb_;          // current basic values (one per row)
  std::vector<int> basis_;          // row -> column
  std::vector<ColState> state_;     // per column
  std::vector<double> upper_;       // per column, shifted range (0..upper)
  std::vector<double> cost_;        // current phase costs per column
  std::vector<double> zrow_;        // reduced costs per column
  std::vector<int> art_cols_;
  long iters_ = 0;
  long max_iters_ = 0;

  double& at(int r, int c) { return tab_[static_cast<std::size_t>(r) * cols_ + c]; }

  void build() {
    const std::size_t nvar = inst_.variables.size();
    std::vector<int> var_to_col(nvar, -1);
    for (std::size_t j = 0; j < nvar; ++j) {
      if (ub_[j] - lb_[j] > 0.0) {
        var_to_col[j] = n_active_;
        col_to_var_.push_back(static_cast<int>(j));
        ++n_active_;
      }
    }
    rows_ = static_cast<int>(inst_.constraints.size());

    int n_slack = 0;
    for (const Constraint& row : inst_.constraints)
      if (row.sense != RowSense::Eq) ++n_slack;

    // Shifted right-hand sides: rhs' = rhs - A·lb (fixed columns fold in here).
    std::vector<double> rhs(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
      double v = inst_.constraints[static_cast<std::size_t>(r)].rhs;
      for (const auto& [idx, coeff] : inst_.constraints[static_cast<std::size_t>(r)].terms)
        v -= coeff * lb_[static_cast<std::size_t>(idx)];
      rhs[static_cast<std::size_t>(r)] = v;
    }

    // Decide per row whether its slack can start basic (feasible on its own)
    // or an artificial is needed.
    std::vector<int> art_rows;
    for (int r = 0; r < rows_; ++r) {
      const RowSense sense = inst_.constraints[static_cast<std::size_t>(r)].sense;
      const double b = rhs[static_cast<std::size_t>(r)];
      const bool slack_ok = (sense == RowSense::Le && b >= 0.0) || (sense == RowSense::Ge && b <= 0.0);
      if (!slack_ok) art_rows.push_back(r);
    }

    cols_ = n_active_ + n_slack + static_cast<int>(art_rows.size());
    tab_.assign(static_cast<std::size_t>(rows_) * cols_, 0.0);
    xb_.assign(static_cast<std::size_t>(rows_), 0.0);
    basis_.assign(static_cast<std::size_t>(rows_), -1);
    state_.assign(static_cast<std::size_t>(cols_), ColState::AtLower);
    upper_.assign(static_cast<std::size_t>(cols_), kUnbounded);
    cost_.assign(static_cast<std::size_t>(cols_), 0.0);
    zrow_.assign(static_cast<std::size_t>(cols_), 0.0);

    for (int c = 0; c < n_active_; ++c) {
      const std::size_t j = static_cast<std::size_t>(col_to_var_[static_cast<std::size_t>(c)]);
      upper_[static_cast<std::size_t>(c)] = ub_[j] - lb_[j];  // may stay infinite
    }

    // Structural coefficients.
    for (int r = 0; r < rows_; ++r)
      for (const auto& [idx, coeff] : inst_.constraints[static_cast<std::size_t>(r)].terms) {
        const int c = var_to_col[static_cast<std::size_t>(idx)];
        if (c >= 0) at(r, c) += coeff;
      }

    // Slack columns: +1 for <=, -1 for >=; both slacks live in [0, inf).
    int next = n_active_;
    std::vector<int> slack_col(static_cast<std::size_t>(rows_), -1);
    for (int r = 0; r < rows_; ++r) {
      const RowSense sense = inst_.constraints[static_cast<std::size_t>(r)].sense;
      if (sense == RowSense::Eq) continue;
      slack_col[static_cast<std::size_t>(r)] = next;
      at(r, next) = sense == RowSense::Le ? 1.0 : -1.0;
      ++next;
    }

    // Artificial columns where the slack cannot host the initial basis.
    std::vector<int> art_col(static_cast<std::size_t>(rows_), -1);
    for (int r : art_rows) {
      art_col[static_cast<std::size_t>(r)] = next;
      at(r, next) = rhs[static_cast<std::size_t>(r)] >= 0.0 ? 1.0 : -1.0;
      art_cols_.push_back(next);
      ++next;
    }

    // Initial basis: slack where feasible, artificial otherwise. Rows whose
    // basic column carries coefficient -1 are negated so the basis is the
    // identity.
    for (int r = 0; r < rows_; ++r) {
      const int bc = art_col[static_cast<std::size_t>(r)] >= 0
                         ? art_col[static_cast<std::size_t>(r)]
                         : slack_col[static_cast<std::size_t>(r)];
      basis_[static_cast<std::size_t>(r)] = bc;
      state_[static_cast<std::size_t>(bc)] = ColState::Basic;
      if (at(r, bc) < 0.0) {
        double* row = &tab_[static_cast<std::size_t>(r) * cols_];
        for (int c = 0; c < cols_; ++c) row[c] = -row[c];
        rhs[static_cast<std::size_t>(r)] = -rhs[static_cast<std::size_t>(r)];
      }
      xb_[static_cast<std::size_t>(r)] = rhs[static_cast<std::size_t>(r)];
    }
  }

  void set_phase1_costs() {
    std::fill(cost_.begin(), cost_.end(), 0.0);
    for (int a : art_cols_) cost_[static_cast<std::size_t>(a)] = 1.0;
    recompute_reduced_costs();
  }

  void set_phase2_costs() {
    std::fill(cost_.begin(), cost_.end(), 0.0);
    for (int c = 0; c < n_active_; ++c)
      cost_[static_cast<std::size_t>(c)] =
          inst_.objective[static_cast<std::size_t>(col_to_var_[static_cast<std::size_t>(c)])];
    recompute_reduced_costs();
  }

  void recompute_reduced_costs() {
    zrow_ = cost_;
    for (int r = 0; r < rows_; ++r) {
      const double cb = cost_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])];
      if (cb == 0.0) continue;
      const double* row = &tab_[static_cast<std::size_t>(r) * cols_];
      for (int c = 0; c < cols_; ++c) zrow_[static_cast<std::size_t>(c)] -= cb * row[c];
    }
  }

  double phase1_objective() const {
    double v = 0.0;
    for (int r = 0; r < rows_; ++r) {
      const int bc = basis_[static_cast<std::size_t>(r)];
      if (cost_[static_cast<std::size_t>(bc)] != 0.0) v += xb_[static_cast<std::size_t>(r)];
    }
    return v;
  }

  // After phase 1: pivot every still-basic artificial out on any usable
  // column; rows with no usable pivot are redundant and get dropped.
  void evict_artificials() {
    std::vector<bool> is_art(static_cast<std::size_t>(cols_), false);
    for (int a : art_cols_) is_art[static_cast<std::size_t>(a)] = true;
    for (int r = 0; r < rows_; ++r) {
      const int bc = basis_[static_cast<std::size_t>(r)];
      if (!is_art[static_cast<std::size_t>(bc)]) continue;
      int target = -1;
      const double* row = &tab_[static_cast<std::size_t>(r) * cols_];
      for (int c = 0; c < cols_ && target < 0; ++c)
        if (!is_art[static_cast<std::size_t>(c)] && state_[static_cast<std::size_t>(c)] != ColState::Basic &&
            std::fabs(row[c]) > kPivotTol)
          target = c;
      if (target >= 0) {
        // Degenerate pivot: the artificial sits at zero, values don't move.
        const double entering_value =
            state_[static_cast<std::size_t>(target)] == ColState::AtUpper
                ? upper_[static_cast<std::size_t>(target)]
                : 0.0;
        pivot(r, target);
        xb_[static_cast<std::size_t>(r)] = entering_value;
        state_[static_cast<std::size_t>(bc)] = ColState::AtLower;
      } else {
        drop_row(r);
        --r;
      }
    }
  }

  void drop_row(int r) {
    const int bc = basis_[static_cast<std::size_t>(r)];
    state_[static_cast<std::size_t>(bc)] = ColState::AtLower;
    const std::size_t last = static_cast<std::size_t>(rows_) - 1;
    if (static_cast<std::size_t>(r) != last) {
      std::memcpy(&tab_[static_cast<std::size_t>(r) * cols_], &tab_[last * cols_],
                  sizeof(double) * static_cast<std::size_t>(cols_));
      xb_[static_cast<std::size_t>(r)] = xb_[last];
      basis_[static_cast<std::size_t>(r)] = basis_[last];
    }
    tab_.resize(last * cols_);
    xb_.resize(last);
    basis_.resize(last);
    --rows_;
  }

  void pivot(int r, int q) {
    double* prow = &tab_[static_cast<std::size_t>(r) * cols_];
    const double p = prow[q];
    const double inv = 1.0 / p;
    for (int c = 0; c < cols_; ++c) prow[c] *= inv;
    prow[q] = 1.0;
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      double* row = &tab_[static_cast<std::size_t>(i) * cols_];
      const double f = row[q];
      if (f == 0.0) continue;
      for (int c = 0; c < cols_; ++c) row[c] -= f * prow[c];
      row[q] = 0.0;
    }
    const double zq = zrow_[static_cast<std::size_t>(q)];
    if (zq != 0.0) {
      for (int c = 0; c < cols_; ++c) zrow_[static_cast<std::size_t>(c)] -= zq * prow[c];
      zrow_[static_cast<std::size_t>(q)] = 0.0;
    }
    basis_[static_cast<std::size_t>(r)] = q;
    state_[static_cast<std::size_t>(q)] = ColState::Basic;
  }

  SolveStatus iterate(bool phase1) {
    int stall = 0;
    for (;;) {
      if (phase1 && phase1_objective() <= opts_.feasibility_tol * 0.5) return SolveStatus::Optimal;
      if (iters_ >= max_iters_) return SolveStatus::IterationLimit;

      const bool bland = stall >= kStallLimit;
      int q = -1;
      double best = kDualTol;
      for (int c = 0; c < cols_; ++c) {
        if (state_[static_cast<std::size_t>(c)] == ColState::Basic) continue;
        if (upper_[static_cast<std::size_t>(c)] <= 0.0) continue;  // fixed column
        const double z = zrow_[static_cast<std::size_t>(c)];
        const double viol = state_[static_cast<std::size_t>(c)] == ColState::AtLower ? -z : z;
        if (viol <= (bland ? kDualTol : best)) continue;
        q = c;
        if (bland) break;  // lowest eligible index
        best = viol;
      }
      if (q < 0) return SolveStatus::Optimal;

      const double dir = state_[static_cast<std::size_t>(q)] == ColState::AtLower ? 1.0 : -1.0;

      // Ratio test: step until the entering column hits its other bound or a
      // basic variable hits one of its own. Ties go to the lowest variable
      // index, which also serves Bland's rule.
      double t = upper_[static_cast<std::size_t>(q)];
      int leave_row = -1;
      bool leave_at_upper = false;
      for (int i = 0; i < rows_; ++i) {
        const double alpha = dir * at(i, q);
        double lim;
        bool to_upper;
        if (alpha > kPivotTol) {
          lim = std::max(xb_[static_cast<std::size_t>(i)], 0.0) / alpha;
          to_upper = false;
        } else if (alpha < -kPivotTol) {
          const double ui = upper_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
          if (ui == kUnbounded) continue;
          lim = std::max(ui - xb_[static_cast<std::size_t>(i)], 0.0) / (-alpha);
          to_upper = true;
        } else {
          continue;
        }
        const bool takes_over =
            lim < t ||
            (lim == t && (leave_row < 0 || basis_[static_cast<std::size_t>(i)] <
                                               basis_[static_cast<std::size_t>(leave_row)]));
        if (takes_over) {
          t = lim;
          leave_row = i;
          leave_at_upper = to_upper;
        }
      }

      if (t == kUnbounded) return SolveStatus::Unbounded;
      if (t < 0.0) t = 0.0;

      ++iters_;
      stall = t <= kZeroStep ? stall + 1 : 0;

      if (t > 0.0) {
        for (int i = 0; i < rows_; ++i) {
          const double a = at(i, q);
          if (a != 0.0) xb_[static_cast<std::size_t>(i)] -= t * dir * a;
        }
      }

      if (t == upper_[static_cast<std::size_t>(q)]) {
        // Bound flip: the entering variable crosses its whole range without a
        // basic variable blocking strictly earlier. No basis change.
        state_[static_cast<std::size_t>(q)] = dir > 0.0 ? ColState::AtUpper : ColState::AtLower;
        continue;
      }

      const double start = state_[static_cast<std::size_t>(q)] == ColState::AtLower
                               ? 0.0
                               : upper_[static_cast<std::size_t>(q)];
      const int leaving = basis_[static_cast<std::size_t>(leave_row)];
      pivot(leave_row, q);
      xb_[static_cast<std::size_t>(leave_row)] = start + dir * t;
      state_[static_cast<std::size_t>(leaving)] =
          leave_at_upper ? ColState::AtUpper : ColState::AtLower;
    }
  }

  std::vector<double> extract_solution() const {
    std::vector<double> x(inst_.variables.size());
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = lb_[j];
    for (int c = 0; c < n_active_; ++c) {
      if (state_[static_cast<std::size_t>(c)] == ColState::AtUpper)
        x[static_cast<std::size_t>(col_to_var_[static_cast<std::size_t>(c)])] +=
            upper_[static_cast<std::size_t>(c)];
    }
    for (int r = 0; r < rows_; ++r) {
      const int bc = basis_[static_cast<std::size_t>(r)];
      if (bc < n_active_)
        x[static_cast<std::size_t>(col_to_var_[static_cast<std::size_t>(bc)])] +=
            xb_[static_cast<std::size_t>(r)];
    }
    return x;
  }

  // Roundoff can push a value marginally outside its range; clamping by the
  // (tiny) violation keeps rows essentially untouched.
  void clamp_to_bounds(std::vector<double>& x) const {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] < lb_[j]) x[j] = lb_[j];
      else if (x[j] > ub_[j]) x[j] = ub_[j];
    }
  }
};

}  // namespace

SolveResult simplex_solve_bounded(const MilpInstance& lp, const std::vector<double>& lower,
                                  const std::vector<double>& upper, const SolverOptions& options) {
  validate_instance(lp);
  if (lower.size() != lp.variables.size() || upper.size() != lp.variables.size())
    throw std::invalid_argument("simplex_solve_bounded: bound vector size mismatch");
  BoundedSimplex solver(lp, lower, upper, options);
  return solver.run();
}

SolveResult simplex_solve(const MilpInstance& lp, const SolverOptions& options) {
  for (const Variable& v : lp.variables)
    if (v.integral)
      throw std::invalid_argument("simplex_solve: instance declares integral variable '" + v.name +
                                  "'");
  std::vector<double> lb(lp.variables.size()), ub(lp.variables.size());
  for (std::size_t j = 0; j < lp.variables.size(); ++j) {
    lb[j] = lp.variables[j].lower;
    ub[j] = lp.variables[j].upper;
  }
  return simplex_solve_bounded(lp, lb, ub, options);
}

}  // namespace vcoffload
