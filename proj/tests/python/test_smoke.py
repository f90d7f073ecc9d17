import json
import math
import os
import subprocess

import pytest

import leipnik as lk

FLOOR = 1.0 - math.log(2.0)


def test_floor_constant():
    assert lk.entropy_floor == pytest.approx(FLOOR, abs=1e-15)


def test_initial_entropy_matches_spread_product():
    sq = lk.SqueezeParams(1.0, math.pi / 2)
    mode = lk.squeeze_mode(lk.free_mode(1.0, 0.0), sq)
    v = lk.variances(mode, 1.0)
    assert lk.joint_entropy(v) == pytest.approx(lk.initial_entropy(sq), abs=1e-12)
    assert v.product() == pytest.approx(math.sqrt(1.0 + math.sinh(2.0) ** 2) / 2.0,
                                        rel=1e-14)


def test_oscillator_closed_vs_pipeline():
    model = lk.QuadraticModel.oscillator(1.0, 1.0)
    cf = lk.ClosedFormMode(model)
    sq = lk.SqueezeParams(0.5, 1.1)
    for t in (0.0, 0.3, 1.7, 2.9):
        v = lk.variances(lk.squeeze_mode(cf.at(t), sq), model.mass(t))
        assert lk.joint_entropy(v) == pytest.approx(
            lk.oscillator_entropy_closed(sq, 1.0, t), abs=1e-12)


def test_integrator_tracks_closed_form():
    model = lk.QuadraticModel.caldirola_kanai(1.0, 1.0, 0.6)
    cf = lk.ClosedFormMode(model)
    grid = [0.1 * i for i in range(101)]
    tr = lk.integrate_mode(model, cf.at(0.0), grid)
    assert tr.max_wronskian_drift < 1e-8
    end = cf.at(grid[-1])
    assert abs(tr.states[-1].u - end.u) < 1e-7 * abs(end.u) + 1e-12


def test_expression_round_trip():
    e = lk.parse_expression("m0*exp(gamma*t)")
    assert set(e.parameters) == {"m0", "gamma"}
    assert e.eval(1.0, {"m0": 1.0, "gamma": 0.6}) == pytest.approx(
        math.exp(0.6), rel=1e-15)
    again = lk.parse_expression(str(e))
    assert again.eval(0.37, {"m0": 2.0, "gamma": 0.6}) == pytest.approx(
        e.eval(0.37, {"m0": 2.0, "gamma": 0.6}), rel=1e-15)


def test_random_phase_closed_vs_quadrature():
    ref = lk.oscillator_mode(1.0, 1.0, 0.42)
    for r in (0.0, 0.5, 1.0):
        closed = lk.random_phase_closed(r, ref, 1.0)
        quad = lk.random_phase_quadrature(r, ref, 1.0, 512)
        assert closed == pytest.approx(quad, abs=1e-9)


def test_scenario_scan_runs():
    sc = lk.Scenario.from_json_text(json.dumps({
        "model": {"kind": "oscillator", "m0": 1.0, "omega0": 1.0},
        "squeeze": {"r": 0.5, "theta": 0.0},
        "time": {"start": 0.0, "stop": math.pi, "count": 9},
        "outputs": ["S_bar", "bounds"],
    }))
    res = lk.run_scan(sc)
    assert len(res.rows) == 9
    assert res.with_s_bar and res.with_bounds
    for row in res.rows:
        assert row.lower - 1e-10 <= row.S_bar <= row.upper + 1e-10
    header = res.csv().splitlines()[0]
    assert header == "r,theta,t,dx,dp,S,S_minus_floor,S_bar,lower,upper"


def test_config_error_maps_to_python():
    with pytest.raises(lk.ConfigError):
        lk.Scenario.from_json_text("{}")
    with pytest.raises(lk.Error):
        lk.parse_expression("sin(")


def test_drift_alarm_raises():
    model = lk.QuadraticModel.oscillator(1.0, 1.0)
    bad = lk.ModeState(0.0, 1.0 + 0.0j, 1.0 + 0.0j)
    with pytest.raises(lk.WronskianDriftExceeded):
        lk.integrate_mode(model, bad, [0.0, 1.0])


@pytest.mark.skipif("LEIPNIK_CLI" not in os.environ,
                    reason="cli path not provided")
def test_cli_figure_runs(tmp_path):
    out = tmp_path / "fig4.csv"
    proc = subprocess.run(
        [os.environ["LEIPNIK_CLI"], "figure", "4", "--out", str(out)],
        capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    lines = out.read_text().splitlines()
    assert lines[0].startswith("r,theta,t")
    assert len(lines) > 1000
