import json
import math

import numpy as np
import pytest

from shrinkset.cli import main

SQUARE_GEOM = {"kernel": [[0, 0], [1, 0], [1, 1], [0, 1]], "radius": 0.0}
BALL_GEOM = {"kernel": [[0, 0]], "radius": 1.0}


@pytest.fixture
def geom(tmp_path):
    path = tmp_path / "square.json"
    path.write_text(json.dumps(SQUARE_GEOM))
    return path


def read_csv(path):
    rows = []
    comments = {}
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            key, _, val = line[1:].strip().partition("=")
            comments[key.strip()] = float(val)
        elif not line.startswith("t,"):
            rows.append(line.split(","))
    return rows, comments


class TestSimulate:
    def test_csv_shape_and_events(self, geom, tmp_path):
        out = tmp_path / "trace.csv"
        rc = main([
            "simulate", "--geometry", str(geom), "--M", "4.0",
            "--horizon", "5.0", "--out", str(out),
        ])
        assert rc == 0
        header = out.read_text().splitlines()[0]
        assert header == "t,a,perimeter,regime,rho"
        rows, comments = read_csv(out)
        assert set(comments) >= {"T_star", "T_dagger"}
        assert 0 < comments["T_dagger"] < comments["T_star"]
        assert float(rows[0][1]) == 1.0
        assert rows[0][3] == "Opening"

    def test_ball_stays_constant(self, tmp_path):
        g = tmp_path / "ball.json"
        g.write_text(json.dumps(BALL_GEOM))
        out = tmp_path / "trace.csv"
        rc = main([
            "simulate", "--geometry", str(g), "--M", str(2 * math.pi),
            "--horizon", "2.0", "--out", str(out),
        ])
        assert rc == 0
        rows, _ = read_csv(out)
        areas = np.array([float(r[1]) for r in rows])
        assert np.max(np.abs(areas - math.pi)) <= 1e-8

    def test_zero_budget_is_quadratic(self, geom, tmp_path):
        out = tmp_path / "trace.csv"
        rc = main([
            "simulate", "--geometry", str(geom), "--M", "0.0",
            "--horizon", "1.0", "--c1", "1.0", "--c2", "0.0",
            "--out", str(out),
        ])
        assert rc == 0
        rows, comments = read_csv(out)
        for r in rows[:: max(len(rows) // 20, 1)]:
            t, a = float(r[0]), float(r[1])
            assert a == pytest.approx(1 + 4 * t + math.pi * t * t, rel=1e-8)
        assert comments["J"] == pytest.approx(3 + math.pi / 3, rel=1e-8)

    def test_svg_snapshots(self, geom, tmp_path):
        out = tmp_path / "trace.csv"
        rc = main([
            "simulate", "--geometry", str(geom), "--M", "4.0",
            "--horizon", "5.0", "--svg-every", "0.2", "--out", str(out),
        ])
        assert rc == 0
        svgs = sorted(tmp_path.glob("trace.t*.svg"))
        assert len(svgs) >= 2
        assert svgs[0].read_text().startswith("<svg")

    def test_config_file_with_override(self, geom, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"M": 100.0, "horizon": 1.0}))
        out = tmp_path / "trace.csv"
        rc = main([
            "simulate", "--config", str(cfg), "--geometry", str(geom),
            "--M", "0.0", "--out", str(out),
        ])
        assert rc == 0
        rows, _ = read_csv(out)
        assert float(rows[-1][1]) > 1.0  # override to M=0 means growth


class TestThreshold:
    def test_report_fields(self, geom, tmp_path):
        out = tmp_path / "report.json"
        rc = main([
            "threshold", "--geometry", str(geom), "--tol", "0.01",
            "--dt", "0.005", "--out", str(out),
        ])
        assert rc == 0
        report = json.loads(out.read_text())
        assert set(report) >= {"M0", "bracket", "iterations", "T_dagger"}
        assert report["bracket"][0] <= report["M0"] <= report["bracket"][1]
        assert report["M0"] == pytest.approx(3.5535, abs=0.05)
        assert report["T_dagger"] == pytest.approx(0.0656, abs=0.01)


class TestOneStep:
    def test_opening_regime(self, geom, tmp_path):
        out = tmp_path / "sol.json"
        rc = main([
            "one-step", "--geometry", str(geom), "--a", "0.9",
            "--out", str(out),
        ])
        assert rc == 0
        sol = json.loads(out.read_text())
        rho = math.sqrt(0.1 / (4 - math.pi))
        assert sol["regime"] == "Opening"
        assert sol["rho"] == pytest.approx(rho, rel=1e-12)
        assert sol["radius"] == pytest.approx(rho, rel=1e-12)
        assert sol["perimeter"] == pytest.approx(4 - 2 * (4 - math.pi) * rho)

    def test_ball_regime(self, geom, tmp_path):
        out = tmp_path / "sol.json"
        rc = main([
            "one-step", "--geometry", str(geom), "--a", "0.3",
            "--out", str(out),
        ])
        assert rc == 0
        sol = json.loads(out.read_text())
        assert sol["regime"] == "Ball"
        assert sol["kernel"] == [[0.5, 0.5]]

    def test_infeasible_area_is_numeric_error(self, geom, capsys):
        assert main(["one-step", "--geometry", str(geom), "--a", "2.0"]) == 2


class TestValidate:
    def test_default_suites_pass(self, capsys):
        assert main(["validate", "--seed", "7"]) == 0
        assert "PASS" in capsys.readouterr().out

    def test_injected_fault_detected(self, capsys):
        assert main(["validate", "--seed", "7", "--inject-perturbation"]) == 3
        assert "FAIL" in capsys.readouterr().out

    def test_suite_none(self):
        assert main(["validate", "--suite", "none"]) == 0


class TestErrors:
    def test_missing_geometry(self):
        assert main(["simulate", "--M", "1.0"]) == 1

    def test_bad_geometry_payload(self, tmp_path):
        g = tmp_path / "bad.json"
        g.write_text(json.dumps({"kernel": "nope"}))
        assert main(["simulate", "--geometry", str(g), "--M", "1.0"]) == 1

    def test_unreadable_config(self, tmp_path, geom):
        assert main([
            "simulate", "--config", str(tmp_path / "missing.json"),
            "--geometry", str(geom), "--M", "1.0",
        ]) == 1


class TestDeterminism:
    def test_repeat_runs_are_byte_identical(self, geom, tmp_path):
        outs = []
        for name in ("a.csv", "b.csv"):
            out = tmp_path / name
            rc = main([
                "simulate", "--geometry", str(geom), "--M", "3.7",
                "--horizon", "2.0", "--out", str(out),
            ])
            assert rc == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]
