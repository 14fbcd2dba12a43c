#pragma once

// Shared helpers for the test binaries: tiny single-assignment instances with
// a brute-force oracle, plus a deterministic generator for them.

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "vcoffload/milp.hpp"
#include "vcoffload/util.hpp"

namespace testsupport {

// t tasks to be placed whole onto one of n nodes; the last node is always
// uncapacitated so every instance is feasible.
struct TinyAssign {
  int tasks = 0;
  int nodes = 0;
  std::vector<double> w, d;               // per-task demands
  std::vector<double> cap, link;          // per-node limits (kUnbounded allowed)
  std::vector<std::vector<double>> cost;  // tasks × nodes
};

inline TinyAssign random_tiny(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> task_count(1, 5);
  std::uniform_int_distribution<int> node_count(2, 4);
  std::uniform_real_distribution<double> wdist(0.2, 2.0);
  std::uniform_real_distribution<double> ddist(5.0, 80.0);
  std::uniform_real_distribution<double> capdist(0.5, 3.0);
  std::uniform_real_distribution<double> linkdist(20.0, 90.0);
  std::uniform_real_distribution<double> costdist(1.0, 100.0);
  std::uniform_int_distribution<int> coin(0, 1);

  TinyAssign p;
  p.tasks = task_count(rng);
  p.nodes = node_count(rng);
  for (int i = 0; i < p.tasks; ++i) {
    p.w.push_back(wdist(rng));
    p.d.push_back(ddist(rng));
  }
  for (int j = 0; j < p.nodes; ++j) {
    bool last = j == p.nodes - 1;
    p.cap.push_back(last ? vcoffload::kUnbounded : capdist(rng));
    p.link.push_back(last || coin(rng) == 0 ? vcoffload::kUnbounded : linkdist(rng));
  }
  p.cost.assign(p.tasks, std::vector<double>(p.nodes, 0.0));
  for (int i = 0; i < p.tasks; ++i) {
    for (int j = 0; j < p.nodes; ++j) {
      p.cost[i][j] = costdist(rng);
    }
  }
  return p;
}

inline vcoffload::MilpInstance to_milp(const TinyAssign& p, bool binary) {
  vcoffload::MilpInstance inst;
  for (int i = 0; i < p.tasks; ++i) {
    for (int j = 0; j < p.nodes; ++j) {
      vcoffload::Variable v;
      v.name = "x_" + std::to_string(i) + "_" + std::to_string(j);
      v.lower = 0.0;
      v.upper = 1.0;
      v.integral = binary;
      inst.variables.push_back(v);
      inst.objective.push_back(p.cost[i][j]);
    }
  }
  auto var = [&](int i, int j) { return i * p.nodes + j; };
  for (int i = 0; i < p.tasks; ++i) {
    vcoffload::Constraint c;
    c.name = "assign_" + std::to_string(i);
    c.sense = vcoffload::RowSense::Eq;
    c.rhs = 1.0;
    for (int j = 0; j < p.nodes; ++j) {
      c.terms.emplace_back(var(i, j), 1.0);
    }
    inst.constraints.push_back(c);
  }
  for (int j = 0; j < p.nodes; ++j) {
    if (p.cap[j] != vcoffload::kUnbounded) {
      vcoffload::Constraint c;
      c.name = "cap_" + std::to_string(j);
      c.sense = vcoffload::RowSense::Le;
      c.rhs = p.cap[j];
      for (int i = 0; i < p.tasks; ++i) {
        c.terms.emplace_back(var(i, j), p.w[i]);
      }
      inst.constraints.push_back(c);
    }
    if (p.link[j] != vcoffload::kUnbounded) {
      vcoffload::Constraint c;
      c.name = "link_" + std::to_string(j);
      c.sense = vcoffload::RowSense::Le;
      c.rhs = p.link[j];
      for (int i = 0; i < p.tasks; ++i) {
        c.terms.emplace_back(var(i, j), p.d[i]);
      }
      inst.constraints.push_back(c);
    }
  }
  return inst;
}

// Minimum cost over all nodes^tasks whole-task placements that respect the
// capacity and link limits; +infinity when none is feasible.
inline double brute_force_best(const TinyAssign& p) {
  std::vector<int> pick(p.tasks, 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    std::vector<double> used_w(p.nodes, 0.0), used_d(p.nodes, 0.0);
    double total = 0.0;
    for (int i = 0; i < p.tasks; ++i) {
      used_w[pick[i]] += p.w[i];
      used_d[pick[i]] += p.d[i];
      total += p.cost[i][pick[i]];
    }
    bool ok = true;
    for (int j = 0; j < p.nodes && ok; ++j) {
      if (used_w[j] > p.cap[j] + 1e-9 || used_d[j] > p.link[j] + 1e-9) {
        ok = false;
      }
    }
    if (ok && total < best) {
      best = total;
    }
    int k = p.tasks - 1;
    while (k >= 0 && pick[k] == p.nodes - 1) {
      pick[k] = 0;
      --k;
    }
    if (k < 0) {
      break;
    }
    ++pick[k];
  }
  return best;
}

}  // namespace testsupport
