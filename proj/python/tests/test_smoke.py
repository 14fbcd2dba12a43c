"""Binding smoke tests: the module wires through to the C++ core."""

import math

import pytest

import vcoffload as v


def test_version_and_catalog():
    assert v.__version__ == "0.1.0"
    cat = v.builtin_catalog()
    assert len(cat) == 16
    obu = v.require_profile(cat, "OBU processor")
    fog = v.require_profile(cat, "fog server")
    srv = v.require_profile(cat, "conventional server")
    assert v.efficiency_gain(v.energy_intensity(obu), v.energy_intensity(srv)) == pytest.approx(
        0.9066666666666666, rel=1e-12
    )
    assert v.efficiency_gain(v.energy_intensity(fog), v.energy_intensity(srv)) == pytest.approx(
        0.5238095238095238, rel=1e-12
    )
    assert v.find_profile(cat, "no such device") is None
    with pytest.raises(ValueError):
        v.require_profile(cat, "no such device")


def test_architecture_shape_and_paths():
    arch = v.build_architecture(v.ArchitectureConfig())
    assert len(arch.nodes) == 36
    tiers = [n.tier for n in arch.nodes]
    assert tiers.count(v.Tier.Vc) == 20
    assert tiers.count(v.Tier.Fog) == 15
    assert tiers.count(v.Tier.Cloud) == 1
    assert v.path_intensity(arch.nodes[0]) == pytest.approx(0.008073333333333334, rel=1e-12)
    assert v.path_intensity(arch.nodes[20]) == pytest.approx(0.027009646302250805, rel=1e-12)
    assert v.path_intensity(arch.nodes[35]) == pytest.approx(0.08104779402952352, rel=1e-12)
    assert arch.nodes[35].proc_capacity == math.inf
    assert len(arch.fingerprint) == 16

    small = v.ArchitectureConfig()
    small.vehicles = 2
    small.fog_servers = 0
    assert len(v.build_architecture(small).nodes) == 3
    bad = v.ArchitectureConfig()
    bad.vehicles = -1
    with pytest.raises(ValueError):
        v.build_architecture(bad)


def test_workload_is_deterministic():
    spec = v.DemandSpec()
    spec.count = 40
    spec.seed = 11
    a = v.sample_tasks(spec)
    b = v.sample_tasks(spec)
    assert [(t.proc_demand, t.traffic_demand) for t in a] == [
        (t.proc_demand, t.traffic_demand) for t in b
    ]
    spec.proc_sd = 0.0
    spec.traffic_sd = 0.0
    for t in v.sample_tasks(spec):
        assert t.proc_demand == 1.0
        assert t.traffic_demand == 50.0
    points = v.sweep_specs(v.SweepKind.Traffic, spec)
    assert [p.traffic_mean for p in points] == [10.0 * (k + 1) for k in range(10)]
    assert [p.seed for p in points] == [spec.seed + k for k in range(10)]


def test_assignment_strategies_order_and_consistency():
    cfg = v.ArchitectureConfig()
    cfg.vehicles = 4
    cfg.fog_servers = 3
    arch = v.build_architecture(cfg)
    spec = v.DemandSpec()
    spec.count = 10
    spec.seed = 2
    tasks = v.sample_tasks(spec)
    shared = v.shared_overhead(arch, tasks)

    opts = v.SolverOptions()
    opts.gap_tol = 1e-9
    opts.max_nodes = 100000
    totals = {}
    for strategy in v.all_strategies():
        out = v.assign(arch, tasks, strategy, opts, 3)
        assert out.matrix.feasible
        power = v.evaluate_power(arch, tasks, out.matrix)
        assert power.total_watts == pytest.approx(out.solve.objective + shared, rel=1e-9)
        totals[strategy] = power.total_watts
    slack = 1e-6 * totals[v.Strategy.Cloud]
    assert totals[v.Strategy.CfvDistributed] <= totals[v.Strategy.CfvSingle] + slack
    assert totals[v.Strategy.CfvDistributed] <= totals[v.Strategy.CfOptimal] + slack
    assert totals[v.Strategy.CfOptimal] <= totals[v.Strategy.Cloud] + slack

    with pytest.raises(ValueError):
        v.build_assignment_milp(arch, tasks, v.Strategy.Cloud)


def test_power_oracle_single_task_on_cloud():
    arch = v.build_architecture(v.ArchitectureConfig())
    tasks = [v.Task(0, 1.0, 50.0)]
    out = v.assign(arch, tasks, v.Strategy.Cloud)
    power = v.evaluate_power(arch, tasks, out.matrix)
    assert power.proc_cloud_watts == pytest.approx(75.0, rel=1e-12)
    assert power.shared_watts == pytest.approx(350.0 / 27.0, rel=1e-12)
    assert power.total_watts == pytest.approx(92.01535266443914, rel=1e-12)
    assert power.proc_total() + power.net_total() + power.shared_watts == pytest.approx(
        power.total_watts, rel=1e-12
    )


def test_sweep_savings_and_csv_roundtrip(tmp_path):
    cfg = v.parse_config_text(
        """{
        "architecture": {"vehicles": 3, "fog_servers": 2},
        "workload": {"count": 5},
        "solver": {"max_nodes": 100000},
        "harness": {"replications": 2, "seed": 9}
        }"""
    )
    sweep = v.run_sweep(v.SweepKind.Traffic, cfg)
    assert len(sweep.rows) == 10 * 2 * 5
    names = [v.strategy_name(r.strategy) for r in sweep.rows[:5]]
    assert names == ["cf_optimal", "cfv_distributed", "cfv_random", "cfv_single", "cloud"]

    path = tmp_path / "results.csv"
    v.emit_csv(sweep, str(path))
    again = tmp_path / "again.csv"
    v.emit_csv(v.read_csv(str(path)), str(again))
    assert path.read_bytes() == again.read_bytes()

    table = v.savings_table(sweep)
    assert [v.strategy_name(r.strategy) for r in table.rows] == [
        "cf_optimal",
        "cfv_distributed",
        "cfv_random",
        "cfv_single",
        "cloud",
    ]
    cloud_row = table.rows[-1]
    assert cloud_row.vs_cloud_pct == pytest.approx(0.0, abs=1e-12)
    assert v.config_fingerprint(cfg) == sweep.config_fingerprint


def test_lp_export_sections():
    arch = v.build_architecture(v.ArchitectureConfig())
    tasks = [v.Task(0, 1.0, 50.0), v.Task(1, 0.5, 20.0)]
    text = v.export_lp(v.build_assignment_milp(arch, tasks, v.Strategy.CfvSingle))
    for section in ("Minimize", "Subject To", "Bounds", "Binaries", "End"):
        assert section in text
    assert "x_0_vc0" in text
    assert "assign_0:" in text
