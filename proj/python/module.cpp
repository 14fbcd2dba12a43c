// Python bindings: the device catalog, architecture builder, workload
// sampler, solvers, strategies, and sweep harness, mirroring the C++ API.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vcoffload/architecture.hpp"
#include "vcoffload/catalog.hpp"
#include "vcoffload/config.hpp"
#include "vcoffload/harness.hpp"
#include "vcoffload/milp.hpp"
#include "vcoffload/strategies.hpp"
#include "vcoffload/util.hpp"
#include "vcoffload/workload.hpp"

namespace py = pybind11;
using namespace vcoffload;

PYBIND11_MODULE(vcoffload, m) {
  m.doc() = "Power-minimal task placement across cloud, metro fog, and vehicular tiers";
  m.attr("__version__") = kToolVersion;
  m.attr("UNBOUNDED") = kUnbounded;
  m.attr("RNG_NAME") = kRngName;

  // --- device catalog ---
  py::enum_<DeviceKind>(m, "DeviceKind")
      .value("Processing", DeviceKind::Processing)
      .value("Network", DeviceKind::Network);
  m.def("device_kind_name", &device_kind_name);

  py::class_<DeviceProfile>(m, "DeviceProfile")
      .def(py::init<>())
      .def(py::init<std::string, DeviceKind, double, double>(), py::arg("id"), py::arg("kind"),
           py::arg("capacity"), py::arg("max_power"))
      .def_readwrite("id", &DeviceProfile::id)
      .def_readwrite("kind", &DeviceProfile::kind)
      .def_readwrite("capacity", &DeviceProfile::capacity)
      .def_readwrite("max_power", &DeviceProfile::max_power)
      .def("__repr__", [](const DeviceProfile& d) {
        return "DeviceProfile('" + d.id + "', " + device_kind_name(d.kind) + ", capacity=" +
               format_double(d.capacity) + ", max_power=" + format_double(d.max_power) + ")";
      });

  py::class_<EnergyIntensity>(m, "EnergyIntensity")
      .def_readonly("value", &EnergyIntensity::value)
      .def_readonly("kind", &EnergyIntensity::kind);

  m.def("builtin_catalog", &builtin_catalog);
  m.def(
      "find_profile",
      [](const std::vector<DeviceProfile>& catalog, const std::string& id) {
        const DeviceProfile* p = find_profile(catalog, id);
        return p ? std::optional<DeviceProfile>(*p) : std::nullopt;
      },
      py::arg("catalog"), py::arg("id"));
  m.def(
      "require_profile",
      [](const std::vector<DeviceProfile>& catalog, const std::string& id) {
        return require_profile(catalog, id);
      },
      py::arg("catalog"), py::arg("id"));
  m.def("energy_intensity", &energy_intensity, py::arg("profile"));
  m.def("efficiency_gain", &efficiency_gain, py::arg("candidate"), py::arg("baseline"));

  // --- workload ---
  py::class_<Task>(m, "Task")
      .def(py::init<>())
      .def(py::init([](int id, double proc_demand, double traffic_demand) {
             return Task{id, proc_demand, traffic_demand};
           }),
           py::arg("id"), py::arg("proc_demand"), py::arg("traffic_demand"))
      .def_readwrite("id", &Task::id)
      .def_readwrite("proc_demand", &Task::proc_demand)
      .def_readwrite("traffic_demand", &Task::traffic_demand)
      .def("__repr__", [](const Task& t) {
        return "Task(" + std::to_string(t.id) + ", " + format_double(t.proc_demand) + " GHz, " +
               format_double(t.traffic_demand) + " Mb/s)";
      });

  py::class_<DemandSpec>(m, "DemandSpec")
      .def(py::init<>())
      .def_readwrite("count", &DemandSpec::count)
      .def_readwrite("proc_mean", &DemandSpec::proc_mean)
      .def_readwrite("proc_sd", &DemandSpec::proc_sd)
      .def_readwrite("traffic_mean", &DemandSpec::traffic_mean)
      .def_readwrite("traffic_sd", &DemandSpec::traffic_sd)
      .def_readwrite("seed", &DemandSpec::seed);

  py::enum_<SweepKind>(m, "SweepKind")
      .value("Traffic", SweepKind::Traffic)
      .value("Processing", SweepKind::Processing);
  m.def("sweep_kind_name", &sweep_kind_name);
  m.def("parse_sweep_kind", &parse_sweep_kind);
  m.def("sample_tasks", &sample_tasks, py::arg("spec"));
  m.def("sweep_specs", &sweep_specs, py::arg("kind"), py::arg("base"));

  // --- architecture ---
  py::enum_<Tier>(m, "Tier")
      .value("Cloud", Tier::Cloud)
      .value("Fog", Tier::Fog)
      .value("Vc", Tier::Vc);
  m.def("tier_name", &tier_name);

  py::class_<PathHop>(m, "PathHop")
      .def_readonly("device", &PathHop::device)
      .def_readonly("multiplicity", &PathHop::multiplicity);
  py::class_<NetworkPath>(m, "NetworkPath").def_readonly("hops", &NetworkPath::hops);

  py::class_<ProcessingNode>(m, "ProcessingNode")
      .def_readonly("id", &ProcessingNode::id)
      .def_readonly("tier", &ProcessingNode::tier)
      .def_readonly("proc_capacity", &ProcessingNode::proc_capacity)
      .def_readonly("proc_intensity", &ProcessingNode::proc_intensity)
      .def_readonly("path", &ProcessingNode::path)
      .def_readonly("link_capacity", &ProcessingNode::link_capacity)
      .def("__repr__", [](const ProcessingNode& n) {
        return std::string("ProcessingNode('") + n.id + "', " + tier_name(n.tier) + ")";
      });

  py::class_<Architecture>(m, "Architecture")
      .def_readonly("nodes", &Architecture::nodes)
      .def_readonly("shared_devices", &Architecture::shared_devices)
      .def_readonly("vc_aggregate_link", &Architecture::vc_aggregate_link)
      .def_readonly("shared_constant_watts", &Architecture::shared_constant_watts)
      .def_readonly("fingerprint", &Architecture::fingerprint);

  py::class_<PathSpec>(m, "PathSpec")
      .def(py::init<>())
      .def_readwrite("hops", &PathSpec::hops);

  py::class_<ArchitectureConfig>(m, "ArchitectureConfig")
      .def(py::init<>())
      .def_readwrite("vehicles", &ArchitectureConfig::vehicles)
      .def_readwrite("fog_servers", &ArchitectureConfig::fog_servers)
      .def_readwrite("core_hops", &ArchitectureConfig::core_hops)
      .def_readwrite("vc_proc_capacity", &ArchitectureConfig::vc_proc_capacity)
      .def_readwrite("vc_link_capacity", &ArchitectureConfig::vc_link_capacity)
      .def_readwrite("fog_proc_capacity", &ArchitectureConfig::fog_proc_capacity)
      .def_readwrite("cloud_proc_capacity", &ArchitectureConfig::cloud_proc_capacity)
      .def_readwrite("vc_aggregate_link", &ArchitectureConfig::vc_aggregate_link)
      .def_readwrite("shared_constant_watts", &ArchitectureConfig::shared_constant_watts)
      .def_readwrite("shared_devices", &ArchitectureConfig::shared_devices)
      .def_readwrite("vc_path", &ArchitectureConfig::vc_path)
      .def_readwrite("fog_path", &ArchitectureConfig::fog_path)
      .def_readwrite("cloud_path", &ArchitectureConfig::cloud_path);

  m.def("build_architecture", &build_architecture, py::arg("config"),
        py::arg("catalog") = builtin_catalog());
  m.def("path_intensity", &path_intensity, py::arg("node"));
  m.def("shared_intensity", &shared_intensity, py::arg("arch"));
  m.def("shared_overhead", &shared_overhead, py::arg("arch"), py::arg("tasks"));

  // --- optimizer ---
  py::class_<Variable>(m, "Variable")
      .def(py::init<>())
      .def_readwrite("name", &Variable::name)
      .def_readwrite("lower", &Variable::lower)
      .def_readwrite("upper", &Variable::upper)
      .def_readwrite("integral", &Variable::integral);

  py::enum_<RowSense>(m, "RowSense")
      .value("Le", RowSense::Le)
      .value("Eq", RowSense::Eq)
      .value("Ge", RowSense::Ge);

  py::class_<Constraint>(m, "Constraint")
      .def(py::init<>())
      .def_readwrite("name", &Constraint::name)
      .def_readwrite("terms", &Constraint::terms)
      .def_readwrite("sense", &Constraint::sense)
      .def_readwrite("rhs", &Constraint::rhs);

  py::class_<MilpInstance>(m, "MilpInstance")
      .def(py::init<>())
      .def_readwrite("variables", &MilpInstance::variables)
      .def_readwrite("objective", &MilpInstance::objective)
      .def_readwrite("objective_constant", &MilpInstance::objective_constant)
      .def_readwrite("constraints", &MilpInstance::constraints);

  py::enum_<SolveStatus>(m, "SolveStatus")
      .value("Optimal", SolveStatus::Optimal)
      .value("Infeasible", SolveStatus::Infeasible)
      .value("Unbounded", SolveStatus::Unbounded)
      .value("IterationLimit", SolveStatus::IterationLimit);
  m.def("solve_status_name", &solve_status_name);
  m.def("parse_solve_status", &parse_solve_status);

  py::class_<SolverOptions>(m, "SolverOptions")
      .def(py::init<>())
      .def_readwrite("feasibility_tol", &SolverOptions::feasibility_tol)
      .def_readwrite("integrality_tol", &SolverOptions::integrality_tol)
      .def_readwrite("gap_tol", &SolverOptions::gap_tol)
      .def_readwrite("max_iterations", &SolverOptions::max_iterations)
      .def_readwrite("max_nodes", &SolverOptions::max_nodes)
      .def_readwrite("incumbent_hint", &SolverOptions::incumbent_hint);

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("status", &SolveResult::status)
      .def_readonly("objective", &SolveResult::objective)
      .def_readonly("solution", &SolveResult::solution)
      .def_readonly("bound_gap", &SolveResult::bound_gap)
      .def_readonly("iterations", &SolveResult::iterations)
      .def_readonly("nodes", &SolveResult::nodes);

  m.def("validate_instance", &validate_instance, py::arg("instance"));
  m.def("simplex_solve", &simplex_solve, py::arg("lp"), py::arg("options") = SolverOptions{});
  m.def("simplex_solve_bounded", &simplex_solve_bounded, py::arg("lp"), py::arg("lower"),
        py::arg("upper"), py::arg("options"));
  m.def("branch_and_bound", &branch_and_bound, py::arg("milp"),
        py::arg("options") = SolverOptions{});
  m.def("export_lp", &export_lp, py::arg("milp"));
  m.def("check_solution", &check_solution, py::arg("instance"), py::arg("x"),
        py::arg("feas_tol") = 1e-7, py::arg("int_tol") = 1e-6);
  m.def("objective_value", &objective_value, py::arg("instance"), py::arg("x"));

  // --- strategies ---
  py::enum_<Strategy>(m, "Strategy")
      .value("Cloud", Strategy::Cloud)
      .value("CfOptimal", Strategy::CfOptimal)
      .value("CfvSingle", Strategy::CfvSingle)
      .value("CfvDistributed", Strategy::CfvDistributed)
      .value("CfvRandom", Strategy::CfvRandom);
  m.def("strategy_name", &strategy_name);
  m.def("parse_strategy", &parse_strategy);
  m.def("all_strategies", &all_strategies);

  py::class_<AssignmentMatrix>(m, "AssignmentMatrix")
      .def(py::init<>())
      .def_readwrite("tasks", &AssignmentMatrix::tasks)
      .def_readwrite("nodes", &AssignmentMatrix::nodes)
      .def_readwrite("x", &AssignmentMatrix::x)
      .def_readwrite("strategy", &AssignmentMatrix::strategy)
      .def_readwrite("feasible", &AssignmentMatrix::feasible)
      .def(
          "at", [](const AssignmentMatrix& m_, int i, int j) { return m_.at(i, j); },
          py::arg("task"), py::arg("node"));

  py::class_<PowerBreakdown>(m, "PowerBreakdown")
      .def_readonly("proc_cloud_watts", &PowerBreakdown::proc_cloud_watts)
      .def_readonly("proc_fog_watts", &PowerBreakdown::proc_fog_watts)
      .def_readonly("proc_vc_watts", &PowerBreakdown::proc_vc_watts)
      .def_readonly("net_watts", &PowerBreakdown::net_watts)
      .def_readonly("shared_watts", &PowerBreakdown::shared_watts)
      .def_readonly("total_watts", &PowerBreakdown::total_watts)
      .def("proc_total", &PowerBreakdown::proc_total)
      .def("net_total", &PowerBreakdown::net_total);

  py::class_<AssignOutcome>(m, "AssignOutcome")
      .def_readonly("matrix", &AssignOutcome::matrix)
      .def_readonly("solve", &AssignOutcome::solve);

  m.def("task_node_cost", &task_node_cost, py::arg("task"), py::arg("node"));
  m.def("strategy_node_indices", &strategy_node_indices, py::arg("arch"), py::arg("mode"));
  m.def("build_assignment_milp", &build_assignment_milp, py::arg("arch"), py::arg("tasks"),
        py::arg("mode"));
  m.def("assign", &assign, py::arg("arch"), py::arg("tasks"), py::arg("strategy"),
        py::arg("options") = SolverOptions{}, py::arg("seed") = 0);
  m.def("assign_random", &assign_random, py::arg("arch"), py::arg("tasks"), py::arg("seed"));
  m.def("check_assignment", &check_assignment, py::arg("arch"), py::arg("tasks"), py::arg("m"));
  m.def("evaluate_power", &evaluate_power, py::arg("arch"), py::arg("tasks"), py::arg("m"));
  m.def("power_savings", &power_savings, py::arg("baseline_watts"), py::arg("candidate_watts"));

  // --- scenario config and harness ---
  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("catalog", &RunConfig::catalog)
      .def_readwrite("architecture", &RunConfig::architecture)
      .def_readwrite("workload", &RunConfig::workload)
      .def_readwrite("solver", &RunConfig::solver)
      .def_readwrite("replications", &RunConfig::replications)
      .def_readwrite("seed", &RunConfig::seed)
      .def_readwrite("strategies", &RunConfig::strategies);

  m.def("parse_config_text", &parse_config_text, py::arg("json_text"));
  m.def("load_config", &load_config, py::arg("path"));
  m.def("canonical_config_json", &canonical_config_json, py::arg("config"));
  m.def("config_fingerprint", &config_fingerprint, py::arg("config"));
  m.def("architecture_from", &architecture_from, py::arg("config"));

  py::class_<ResultRow>(m, "ResultRow")
      .def_readonly("kind", &ResultRow::kind)
      .def_readonly("point", &ResultRow::point)
      .def_readonly("demand_mean", &ResultRow::demand_mean)
      .def_readonly("task_seed", &ResultRow::task_seed)
      .def_readonly("strategy", &ResultRow::strategy)
      .def_readonly("total_watts", &ResultRow::total_watts)
      .def_readonly("proc_cloud_watts", &ResultRow::proc_cloud_watts)
      .def_readonly("proc_fog_watts", &ResultRow::proc_fog_watts)
      .def_readonly("proc_vc_watts", &ResultRow::proc_vc_watts)
      .def_readonly("net_watts", &ResultRow::net_watts)
      .def_readonly("shared_watts", &ResultRow::shared_watts)
      .def_readonly("status", &ResultRow::status)
      .def_readonly("solve_ms", &ResultRow::solve_ms);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("rows", &SweepResult::rows)
      .def_readonly("master_seed", &SweepResult::master_seed)
      .def_readonly("replications", &SweepResult::replications)
      .def_readonly("config_fingerprint", &SweepResult::config_fingerprint);

  py::class_<SavingsRow>(m, "SavingsRow")
      .def_readonly("strategy", &SavingsRow::strategy)
      .def_readonly("vs_cloud_pct", &SavingsRow::vs_cloud_pct)
      .def_readonly("vs_cf_optimal_pct", &SavingsRow::vs_cf_optimal_pct);
  py::class_<SavingsTable>(m, "SavingsTable").def_readonly("rows", &SavingsTable::rows);

  m.def("replication_seed", &replication_seed, py::arg("point_seed"), py::arg("replication"));
  m.def("run_sweep", &run_sweep, py::arg("kind"), py::arg("config"));
  m.def("savings_table", &savings_table, py::arg("sweep"));
  m.def("emit_csv", &emit_csv, py::arg("result"), py::arg("path"));
  m.def("read_csv", &read_csv, py::arg("path"));
  m.def("emit_savings_csv", &emit_savings_csv, py::arg("table"), py::arg("path"));
  m.def("emit_plot_data", &emit_plot_data, py::arg("result"), py::arg("dir"));
  m.def("emit_timings_csv", &emit_timings_csv, py::arg("result"), py::arg("path"));
  m.def("write_manifest", &write_manifest, py::arg("config"), py::arg("kinds"), py::arg("path"));
  m.def("format_double", &format_double, py::arg("value"));
}
