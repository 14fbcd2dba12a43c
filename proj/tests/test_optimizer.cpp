#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "test_support.hpp"
#include "vcoffload/milp.hpp"
#include "vcoffload/util.hpp"

using namespace vcoffload;

namespace {

Variable make_var(const std::string& name, double lo, double hi, bool integral = false) {
  Variable v;
  v.name = name;
  v.lower = lo;
  v.upper = hi;
  v.integral = integral;
  return v;
}

Constraint make_row(const std::string& name, std::vector<std::pair<int, double>> terms,
                    RowSense sense, double rhs) {
  Constraint c;
  c.name = name;
  c.terms = std::move(terms);
  c.sense = sense;
  c.rhs = rhs;
  return c;
}

}  // namespace

TEST_CASE("one-variable floor") {
  MilpInstance lp;
  lp.variables = {make_var("x", 0.0, 10.0)};
  lp.objective = {1.0};
  lp.constraints = {make_row("floor", {{0, 1.0}}, RowSense::Ge, 3.0)};
  auto r = simplex_solve(lp);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.objective == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r.solution[0] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("two-supplier transportation toy") {
  // Two suppliers with capacity 5 each at unit costs 1 and 2 must cover a
  // demand of 8: ship 5 from the cheap one, 3 from the other.
  MilpInstance lp;
  lp.variables = {make_var("x1", 0.0, 5.0), make_var("x2", 0.0, 5.0)};
  lp.objective = {1.0, 2.0};
  lp.constraints = {make_row("demand", {{0, 1.0}, {1, 1.0}}, RowSense::Eq, 8.0)};
  auto r = simplex_solve(lp);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.objective == doctest::Approx(11.0).epsilon(1e-12));
  CHECK(r.solution[0] == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(r.solution[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("conflicting rows are infeasible") {
  MilpInstance lp;
  lp.variables = {make_var("x", 0.0, kUnbounded)};
  lp.objective = {0.0};
  lp.constraints = {make_row("hi", {{0, 1.0}}, RowSense::Le, 1.0),
                    make_row("lo", {{0, 1.0}}, RowSense::Ge, 2.0)};
  CHECK(simplex_solve(lp).status == SolveStatus::Infeasible);
}

TEST_CASE("free descent is unbounded") {
  MilpInstance lp;
  lp.variables = {make_var("x", 0.0, kUnbounded), make_var("y", 0.0, kUnbounded)};
  lp.objective = {-1.0, 0.0};
  lp.constraints = {make_row("tie", {{0, 1.0}, {1, -1.0}}, RowSense::Le, 0.0)};
  CHECK(simplex_solve(lp).status == SolveStatus::Unbounded);

  MilpInstance empty;
  empty.variables = {make_var("x", 0.0, kUnbounded)};
  empty.objective = {-1.0};
  CHECK(simplex_solve(empty).status == SolveStatus::Unbounded);
}

TEST_CASE("degenerate cycling-prone instance terminates at the optimum") {
  // The classic cycling trap for the largest-coefficient rule; the stall
  // switch to lowest-index pricing must bring it home at -0.05.
  MilpInstance lp;
  lp.variables = {make_var("x1", 0.0, kUnbounded), make_var("x2", 0.0, kUnbounded),
                  make_var("x3", 0.0, kUnbounded), make_var("x4", 0.0, kUnbounded)};
  lp.objective = {-0.75, 150.0, -0.02, 6.0};
  lp.constraints = {
      make_row("r1", {{0, 0.25}, {1, -60.0}, {2, -0.04}, {3, 9.0}}, RowSense::Le, 0.0),
      make_row("r2", {{0, 0.5}, {1, -90.0}, {2, -0.02}, {3, 3.0}}, RowSense::Le, 0.0),
      make_row("r3", {{2, 1.0}}, RowSense::Le, 1.0),
  };
  auto r = simplex_solve(lp);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.objective == doctest::Approx(-0.05).epsilon(1e-9));
}

TEST_CASE("negative lower bounds work through the shift") {
  MilpInstance lp;
  lp.variables = {make_var("x", -5.0, kUnbounded), make_var("y", -2.0, 3.0)};
  lp.objective = {1.0, 1.0};
  lp.constraints = {make_row("floor", {{0, 1.0}, {1, 1.0}}, RowSense::Ge, -4.0)};
  auto r = simplex_solve(lp);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.objective == doctest::Approx(-4.0).epsilon(1e-12));
  CHECK(check_solution(lp, r.solution).empty());
}

TEST_CASE("pure bound flip without any constraint") {
  MilpInstance lp;
  lp.variables = {make_var("x", 2.0, 7.0)};
  lp.objective = {-1.0};
  auto r = simplex_solve(lp);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.objective == doctest::Approx(-7.0).epsilon(1e-12));
  CHECK(r.solution[0] == 7.0);
}

TEST_CASE("redundant equality row is dropped, not fatal") {
  MilpInstance lp;
  lp.variables = {make_var("x1", 0.0, kUnbounded), make_var("x2", 0.0, kUnbounded),
                  make_var("x3", 0.0, kUnbounded)};
  lp.objective = {1.0, 1.0, 1.0};
  lp.constraints = {
      make_row("a", {{0, 1.0}, {1, 1.0}}, RowSense::Eq, 2.0),
      make_row("b", {{1, 1.0}, {2, 1.0}}, RowSense::Eq, 2.0),
      make_row("c", {{0, 1.0}, {2, 1.0}}, RowSense::Eq, 2.0),
      make_row("sum", {{0, 1.0}, {1, 1.0}, {2, 1.0}}, RowSense::Eq, 3.0),  // dependent
  };
  auto r = simplex_solve(lp);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.objective == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(r.solution[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.solution[1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.solution[2] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("iteration cap reports IterationLimit") {
  MilpInstance lp;
  lp.variables = {make_var("x1", 0.0, 5.0), make_var("x2", 0.0, 5.0)};
  lp.objective = {1.0, 2.0};
  lp.constraints = {make_row("demand", {{0, 1.0}, {1, 1.0}}, RowSense::Eq, 8.0)};
  SolverOptions opts;
  opts.max_iterations = 1;
  CHECK(simplex_solve(lp, opts).status == SolveStatus::IterationLimit);
}

TEST_CASE("integral variables are rejected by the pure LP entry point") {
  MilpInstance lp;
  lp.variables = {make_var("x", 0.0, 1.0, true)};
  lp.objective = {1.0};
  CHECK_THROWS_AS(simplex_solve(lp), std::invalid_argument);
}

TEST_CASE("instance validation") {
  MilpInstance bad;
  bad.variables = {make_var("x", -kUnbounded, 1.0)};
  bad.objective = {1.0};
  CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);

  bad.variables = {make_var("x", 2.0, 1.0)};
  CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);

  bad.variables = {make_var("x", 0.0, kUnbounded, true)};
  CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);

  bad.variables = {make_var("x", 0.0, 1.0)};
  bad.constraints = {make_row("r", {{3, 1.0}}, RowSense::Le, 1.0)};
  CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);

  bad.constraints = {make_row("r", {{0, std::nan("")}}, RowSense::Le, 1.0)};
  CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);

  bad.constraints.clear();
  bad.objective = {1.0, 2.0};
  CHECK_THROWS_AS(validate_instance(bad), std::invalid_argument);
}

TEST_CASE("solution checker diagnostics") {
  MilpInstance lp;
  lp.variables = {make_var("x", 0.0, 1.0, true), make_var("y", 0.0, 5.0)};
  lp.objective = {1.0, 1.0};
  lp.constraints = {make_row("row", {{0, 1.0}, {1, 1.0}}, RowSense::Le, 4.0)};

  CHECK(check_solution(lp, {1.0, 2.0}).empty());
  CHECK(check_solution(lp, {0.5, 2.0}).find("not integral") != std::string::npos);
  CHECK(check_solution(lp, {1.0, 6.0}).find("above upper bound") != std::string::npos);
  CHECK(check_solution(lp, {1.0, 4.0}).find("row") != std::string::npos);
  CHECK(!check_solution(lp, {1.0}).empty());
}

TEST_CASE("random feasible bounded LPs solve optimal and replay clean") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> nvars(1, 6), nrows(0, 5), coeff(-3, 3), obj(-5, 5),
      sense3(0, 2), lbpick(0, 2);
  std::uniform_real_distribution<double> width(0.5, 4.0), frac(0.0, 1.0), margin(0.0, 2.0);

  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    MilpInstance lp;
    const int n = nvars(rng);
    std::vector<double> xstar;
    for (int j = 0; j < n; ++j) {
      double lo = lbpick(rng) == 0 ? 0.0 : (lbpick(rng) == 1 ? -2.0 : 1.0);
      double hi = lo + width(rng);
      lp.variables.push_back(make_var("v" + std::to_string(j), lo, hi));
      lp.objective.push_back(static_cast<double>(obj(rng)));
      xstar.push_back(lo + frac(rng) * (hi - lo));
    }
    lp.objective_constant = static_cast<double>(obj(rng));
    const int m = nrows(rng);
    for (int r = 0; r < m; ++r) {
      Constraint c;
      c.name = "r" + std::to_string(r);
      double activity = 0.0;
      for (int j = 0; j < n; ++j) {
        double a = static_cast<double>(coeff(rng));
        if (a != 0.0) {
          c.terms.emplace_back(j, a);
          activity += a * xstar[static_cast<std::size_t>(j)];
        }
      }
      int s = sense3(rng);
      if (s == 0) {
        c.sense = RowSense::Le;
        c.rhs = activity + margin(rng);
      } else if (s == 1) {
        c.sense = RowSense::Ge;
        c.rhs = activity - margin(rng);
      } else {
        c.sense = RowSense::Eq;
        c.rhs = activity;
      }
      lp.constraints.push_back(c);
    }

    auto r = simplex_solve(lp);
    // Feasible by construction (xstar) and bounded (finite boxes).
    REQUIRE(r.status == SolveStatus::Optimal);
    ++solved;
    CHECK_MESSAGE(check_solution(lp, r.solution).empty(), "trial ", trial, ": ",
                  check_solution(lp, r.solution));
    const double replay = objective_value(lp, r.solution);
    CHECK(std::fabs(replay - r.objective) <= 1e-9 * std::max(1.0, std::fabs(r.objective)));
    CHECK(r.objective <= objective_value(lp, xstar) + 1e-7);
  }
  CHECK(solved == 200);
}

TEST_CASE("branch and bound with an already integral relaxation answers at the root") {
  MilpInstance lp;
  lp.variables = {make_var("x1", 0.0, 5.0, true), make_var("x2", 0.0, 5.0, true)};
  lp.objective = {1.0, 2.0};
  lp.constraints = {make_row("demand", {{0, 1.0}, {1, 1.0}}, RowSense::Eq, 8.0)};
  auto r = branch_and_bound(lp);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.objective == doctest::Approx(11.0).epsilon(1e-12));
  CHECK(r.nodes == 1);
  CHECK(r.bound_gap == 0.0);
}

namespace {

MilpInstance knapsack3() {
  // max 8a + 11b + 6c with weights 5,7,4 and budget 14 -> take a and b.
  MilpInstance lp;
  lp.variables = {make_var("a", 0.0, 1.0, true), make_var("b", 0.0, 1.0, true),
                  make_var("c", 0.0, 1.0, true)};
  lp.objective = {-8.0, -11.0, -6.0};
  lp.constraints = {make_row("budget", {{0, 5.0}, {1, 7.0}, {2, 4.0}}, RowSense::Le, 14.0)};
  return lp;
}

}  // namespace

TEST_CASE("binary knapsack equals subset enumeration") {
  MilpInstance lp = knapsack3();
  auto r = branch_and_bound(lp);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.objective == doctest::Approx(-19.0).epsilon(1e-9));
  CHECK(r.solution[0] == doctest::Approx(1.0));
  CHECK(r.solution[1] == doctest::Approx(1.0));
  CHECK(r.solution[2] == doctest::Approx(0.0));
}

TEST_CASE("binary instance without an integral point is infeasible") {
  MilpInstance lp;
  lp.variables = {make_var("x1", 0.0, 1.0, true), make_var("x2", 0.0, 1.0, true)};
  lp.objective = {1.0, 1.0};
  lp.constraints = {make_row("half", {{0, 1.0}, {1, 1.0}}, RowSense::Eq, 1.5)};
  CHECK(branch_and_bound(lp).status == SolveStatus::Infeasible);
}

TEST_CASE("node budget exhaustion keeps the hint as incumbent") {
  MilpInstance lp = knapsack3();
  SolverOptions opts;
  opts.max_nodes = 1;
  auto starved = branch_and_bound(lp, opts);
  CHECK(starved.status == SolveStatus::IterationLimit);
  CHECK(starved.solution.empty());

  opts.incumbent_hint = {0.0, 1.0, 0.0};  // feasible, value -11
  auto hinted = branch_and_bound(lp, opts);
  CHECK(hinted.status == SolveStatus::IterationLimit);
  REQUIRE(hinted.solution.size() == 3);
  CHECK(hinted.objective == doctest::Approx(-11.0));
  CHECK(hinted.bound_gap > 0.0);
}

TEST_CASE("incumbent hints: valid ones cap the search, invalid ones are ignored") {
  MilpInstance lp = knapsack3();
  SolverOptions opts;
  opts.incumbent_hint = {1.0, 1.0, 0.0};  // the optimum itself
  auto r = branch_and_bound(lp, opts);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.objective == doctest::Approx(-19.0).epsilon(1e-9));

  opts.incumbent_hint = {1.0, 1.0, 1.0};  // weight 16 > 14: rejected
  auto s = branch_and_bound(lp, opts);
  REQUIRE(s.status == SolveStatus::Optimal);
  CHECK(s.objective == doctest::Approx(-19.0).epsilon(1e-9));
}

TEST_CASE("tiny assignment instances match the brute-force oracle") {
  SolverOptions opts;
  opts.gap_tol = 1e-9;  // proof quality tighter than the 1e-6 comparison below
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto p = testsupport::random_tiny(seed);
    const double best = testsupport::brute_force_best(p);

    auto milp = testsupport::to_milp(p, /*binary=*/true);
    auto r = branch_and_bound(milp, opts);
    REQUIRE_MESSAGE(r.status == SolveStatus::Optimal, "seed ", seed);
    CHECK_MESSAGE(std::fabs(r.objective - best) <= 1e-6, "seed ", seed, ": bnb ", r.objective,
                  " vs brute ", best);
    CHECK(check_solution(milp, r.solution, 1e-7, 1e-6).empty());
    CHECK(r.bound_gap <= 1e-9 * std::max(1.0, std::fabs(r.objective)) + 1e-12);

    // The fractional relaxation can only be cheaper than any whole-task
    // placement.
    auto relaxed = testsupport::to_milp(p, /*binary=*/false);
    auto lp = simplex_solve(relaxed, opts);
    REQUIRE(lp.status == SolveStatus::Optimal);
    CHECK(lp.objective <= best + 1e-6);
  }
}

TEST_CASE("LP text export") {
  MilpInstance lp;
  lp.variables = {make_var("x y", 0.0, 1.0, true),     // binary after sanitizing
                  make_var("x_y", 0.0, 1.0, false),    // collides with the sanitized name
                  make_var("9lives", 0.0, 3.0, true),  // leading digit needs a prefix
                  make_var("free", -2.0, kUnbounded), make_var("pinned", 4.0, 4.0)};
  lp.objective = {1.0, 0.0, -2.5, 1.0, 0.0};
  lp.objective_constant = 7.0;
  lp.constraints = {
      make_row("cap row", {{0, 1.0}, {1, 2.0}}, RowSense::Le, 3.0),
      make_row("need", {{2, 1.0}, {3, -1.0}}, RowSense::Ge, -1.0),
      make_row("fix", {{4, 1.0}}, RowSense::Eq, 4.0),
  };
  const std::string text = export_lp(lp);

  CHECK(text.find("Minimize\n") != std::string::npos);
  CHECK(text.find("Subject To\n") != std::string::npos);
  CHECK(text.find("Bounds\n") != std::string::npos);
  CHECK(text.find("Generals\n") != std::string::npos);
  CHECK(text.find("Binaries\n") != std::string::npos);
  CHECK(text.rfind("End\n") == text.size() - 4);

  CHECK(text.find("x_y") != std::string::npos);
  CHECK(text.find("x_y_1") != std::string::npos);  // collision resolved, both names live
  CHECK(text.find("x9lives") != std::string::npos);
  CHECK(text.find("cap_row:") != std::string::npos);
  CHECK(text.find(">= -1") != std::string::npos);
  CHECK(text.find("= 4") != std::string::npos);
  CHECK(text.find("+ 7") != std::string::npos);       // objective constant
  CHECK(text.find("free >= -2") != std::string::npos);
  CHECK(text.find("pinned = 4") != std::string::npos);
  CHECK(text.find(" x y ") == std::string::npos);  // raw name never leaks

  // Section order: Minimize < Subject To < Bounds < Generals < Binaries < End.
  CHECK(text.find("Minimize") < text.find("Subject To"));
  CHECK(text.find("Subject To") < text.find("Bounds"));
  CHECK(text.find("Bounds") < text.find("Generals"));
  CHECK(text.find("Generals") < text.find("Binaries"));
  CHECK(text.find("Binaries") < text.find("End"));
}

TEST_CASE("LP export of an empty objective still emits a well-formed expression") {
  MilpInstance lp;
  lp.variables = {make_var("x", 0.0, 2.0)};
  lp.objective = {0.0};
  lp.constraints = {make_row("r", {{0, 1.0}}, RowSense::Le, 2.0)};
  const std::string text = export_lp(lp);
  CHECK(text.find("obj: 0 x") != std::string::npos);
  CHECK(text.find("Minimize") != std::string::npos);
  CHECK(text.find("End") != std::string::npos);
}

TEST_CASE("status names round-trip") {
  for (auto s : {SolveStatus::Optimal, SolveStatus::Infeasible, SolveStatus::Unbounded,
                 SolveStatus::IterationLimit}) {
    CHECK(parse_solve_status(solve_status_name(s)) == s);
  }
  CHECK_THROWS_AS(parse_solve_status("garbage"), std::invalid_argument);
}
