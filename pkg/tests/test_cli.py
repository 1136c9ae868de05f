import json
import math

import pytest

from hypgeom.cli import main
from hypgeom import solve_kappa_H, u0_solve


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDist:
    def test_halfplane_pair(self, capsys):
        code, out, _ = run(
            capsys, "dist", "--domain", "H", "--points", "[[0, 1], [0, 2]]"
        )
        assert code == 0
        data = json.loads(out)
        assert data["h"] == pytest.approx(math.log(2), abs=1e-12)
        assert data["j"] == pytest.approx(math.log(2), abs=1e-12)

    def test_quasi_flag(self, capsys):
        code, out, _ = run(
            capsys,
            "dist",
            "--domain",
            "H",
            "--points",
            "[[0, 1], [0, 2]]",
            "--quasi",
            "--resolution",
            "0.05",
        )
        assert code == 0
        data = json.loads(out)
        assert data["quasihyperbolic"] == pytest.approx(math.log(2), abs=5e-3)

    def test_inline_json_domain(self, capsys):
        code, out, _ = run(
            capsys,
            "dist",
            "--domain",
            '{"kind": "Strip", "params": {"half_width": 1.0}}',
            "--points",
            "[[0, 0], [1, 0]]",
        )
        assert code == 0
        assert json.loads(out)["h"] > 0

    def test_exterior_point_exit_code(self, capsys):
        code, _, err = run(
            capsys, "dist", "--domain", "H", "--points", "[[0, 1], [0, -1]]"
        )
        assert code == 4
        assert json.loads(err)["error"] == "domain-membership"

    def test_malformed_points_exit_code(self, capsys):
        code, _, err = run(capsys, "dist", "--domain", "H", "--points", "[[0, 1]")
        assert code == 2
        assert json.loads(err)["error"] == "schema"

    def test_unknown_preset_exit_code(self, capsys):
        code, _, err = run(
            capsys, "dist", "--domain", "Sphere", "--points", "[[0, 1], [0, 2]]"
        )
        assert code == 2


class TestFunctional:
    def test_triple(self, capsys):
        code, out, _ = run(
            capsys,
            "functional",
            "--domain",
            "H",
            "--points",
            "[[0, 1], [1, 1], [0, 2]]",
        )
        assert code == 0
        data = json.loads(out)
        assert data["diam"] == pytest.approx(math.sqrt(2), abs=1e-12)
        assert data["boundary_distance"] == 1.0
        assert data["J"] == pytest.approx(math.log1p(math.sqrt(2)), abs=1e-12)
        assert data["ratio"] > 0


class TestKappaH:
    def test_values(self, capsys):
        code, out, _ = run(capsys, "kappa-h")
        assert code == 0
        data = json.loads(out)
        assert data["kappa"] == pytest.approx(0.8750987500145, abs=1e-9)
        assert data["u_star"] == pytest.approx(0.432335123777, abs=1e-9)
        assert len(data["extremal_points"]) == 3
        assert data["extremal_points"][0] == [0.0, 1.0]

    def test_tolerance_validation(self, capsys):
        code, _, err = run(capsys, "kappa-h", "--tolerance", "1e-20")
        assert code == 2


class TestMCurve:
    def test_csv_shape(self, capsys):
        code, out, _ = run(
            capsys, "m-curve", "--from", "0.1", "--to", "1.2", "--steps", "12"
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "u,xi,red_branch,thick"
        assert len(lines) == 13
        first = [float(v) for v in lines[1].split(",")]
        assert first[0] == pytest.approx(0.1, abs=1e-12)

    def test_branch_structure(self, capsys):
        _, out, _ = run(
            capsys, "m-curve", "--from", "0.01", "--to", "1.2", "--steps", "500"
        )
        rows = [
            [float(v) for v in line.split(",")]
            for line in out.strip().split("\n")[1:]
        ]
        u0 = u0_solve()
        du = rows[1][0] - rows[0][0]
        # below the switch the thick curve equals xi, above it the red branch
        switch = next(k for k, r in enumerate(rows) if r[3] != r[1])
        assert abs(rows[switch][0] - u0) <= du
        for r in rows[switch:]:
            assert r[3] == r[2]
        # the minimum of the thick curve is the half-plane constant
        kappa = solve_kappa_H().kappa
        assert min(r[3] for r in rows) == pytest.approx(kappa, abs=1e-4)

    def test_bad_range(self, capsys):
        code, _, _ = run(capsys, "m-curve", "--from", "1.0", "--to", "0.5", "--steps", "10")
        assert code == 2


class TestCapacity:
    def test_strip_report(self, capsys):
        code, out, _ = run(capsys, "capacity", "--segment", "[[0, 0], [1, 0]]")
        assert code == 0
        data = json.loads(out)
        assert data["ordering_ok"] is True
        assert data["exact"] == pytest.approx(3.75108155, abs=1e-7)
        by_kind = {b["kind"]: b["value"] for b in data["bounds"]}
        assert by_kind["kappa1_bound"] > 2.4288

    def test_bounds_never_exceed_unrounded(self, capsys):
        from hypgeom import Phi, KAPPA1_INTERVAL

        _, out, _ = run(capsys, "capacity", "--segment", "[[0, 0], [1, 0]]")
        by_kind = {b["kind"]: b["value"] for b in json.loads(out)["bounds"]}
        assert by_kind["kappa1_bound"] <= Phi(KAPPA1_INTERVAL[0] * math.log(2))

    def test_malformed_segment(self, capsys):
        code, _, _ = run(capsys, "capacity", "--segment", "[[0, 0]]")
        assert code == 2


class TestSlitBound:
    def test_ratio(self, capsys):
        code, out, _ = run(capsys, "slit-bound")
        assert code == 0
        data = json.loads(out)
        assert data["ratio"] == pytest.approx(0.4251604, abs=1e-6)
        assert data["ratio"] <= 0.42516043  # truncated, never rounded up
        assert abs(data["sides"]["h01"] - data["sides"]["h02"]) < 1e-8
        assert abs(data["sides"]["h01"] - data["sides"]["h12"]) < 1e-3


class TestKeoghDemo:
    def test_coefficients_and_slope(self, capsys):
        code, out, _ = run(capsys, "keogh-demo", "--a", "0.5", "--x", "1e-3")
        assert code == 0
        data = json.loads(out)
        assert data["a1"][0] == pytest.approx(0.0, abs=1e-6)
        assert data["a1"][1] == pytest.approx(data["a1_exact"][1], abs=1e-6)
        assert data["a2"][0] == pytest.approx(data["a2_exact"][0], abs=1e-6)
        assert data["F_slope_exact"] > 0
        assert data["F_slope_fd"] == pytest.approx(
            data["F_slope_exact"], rel=0.01
        )

    def test_bad_parameter(self, capsys):
        code, _, _ = run(capsys, "keogh-demo", "--a", "1.5")
        assert code == 2


class TestDeterminism:
    def test_byte_identical_repeats(self, capsys):
        outs = []
        for _ in range(2):
            _, out, _ = run(capsys, "kappa-h")
            outs.append(out)
        assert outs[0] == outs[1]
        outs = []
        for _ in range(2):
            _, out, _ = run(
                capsys, "m-curve", "--from", "0.1", "--to", "1.0", "--steps", "50"
            )
            outs.append(out)
        assert outs[0] == outs[1]

    def test_lf_line_endings_and_decimal_point(self, capsys):
        _, out, _ = run(
            capsys, "m-curve", "--from", "0.1", "--to", "0.5", "--steps", "5"
        )
        assert "\r" not in out
        first_data = out.split("\n")[1]
        assert "," in first_data and "e" not in first_data
