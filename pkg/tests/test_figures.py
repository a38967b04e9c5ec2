import hashlib
import json
import math

import numpy as np
import pytest

from relspin import figures, measurement
from relspin.contours import marching_squares
from relspin.figures import FormulaId, curve_fig2, map_fig1, map_fig5, map_fig34
from relspin.kinematics import DimensionlessVelocity, DomainError, momentum_from_velocity

V = DimensionlessVelocity.of
EQ4_AT_V3_RHO_035 = 0.0012255247243630811
EQ4_AT_V3_06_RHO_04 = 0.0079142833053866223


@pytest.fixture(scope="module")
def fig1():
    return map_fig1(101)


def _index(points, x):
    k = int(np.argmin(np.abs(points - x)))
    assert abs(points[k] - x) < 1e-12
    return k


class TestFig1:
    def test_axes(self, fig1):
        assert fig1.formula_id is FormulaId.EQ4_MAP
        assert [a.name for a in fig1.axes] == ["v3", "rho_v"]
        assert fig1.values.shape == (101, 101)

    def test_zero_lines(self, fig1):
        inside = np.hypot(*fig1.mesh()) < 1 - 1e-9
        assert np.all(fig1.values[0][inside[0]] == 0.0)  # rho = 0
        iv = _index(fig1.x_axis.points, 0.0)
        assert np.all(fig1.values[:, iv][inside[:, iv]] == 0.0)  # v3 = 0

    def test_spot_values(self):
        grid = map_fig1(21)
        ix, iy = _index(grid.x_axis.points, 0.6), _index(grid.y_axis.points, 0.4)
        assert grid.values[iy, ix] == pytest.approx(EQ4_AT_V3_06_RHO_04, abs=1e-15)
        mirror = grid.values[iy, _index(grid.x_axis.points, -0.6)]
        assert mirror == pytest.approx(grid.values[iy, ix], abs=1e-15)

    def test_outside_disk_nan(self, fig1):
        r = np.hypot(*fig1.mesh())
        assert np.isnan(fig1.values[r >= 1.0]).all()
        assert not np.isnan(fig1.values[r < 0.999]).any()

    def test_matches_scalar(self, fig1):
        v3, rho = fig1.mesh()
        for iy in range(0, 101, 7):
            for ix in range(0, 101, 9):
                if math.hypot(v3[iy, ix], rho[iy, ix]) < 0.999:
                    p = momentum_from_velocity(V((rho[iy, ix], 0, v3[iy, ix])))
                    assert abs(fig1.values[iy, ix] - measurement.prob_eq4(p)) < 1e-12

    def test_contours(self, fig1):
        assert set(fig1.contours) == set(figures.DEFAULT_DELTAS)
        for delta, lines in fig1.contours.items():
            assert lines
            for line in lines:
                v3, rho = line[:, 0], line[:, 1]
                vals = [
                    measurement.prob_eq4(momentum_from_velocity(V((r, 0, z))))
                    for z, r in zip(v3, rho)
                ]
                # linear interpolation on a 0.02 lattice
                assert np.max(np.abs(np.array(vals) - delta)) < 0.25 * delta + 1e-3


class TestFig34:
    def test_eq5_axes_zero(self):
        grid = map_fig34("eq5", 0.8, 81)
        assert grid.formula_id is FormulaId.EQ5_MAP
        iv1, iv3 = _index(grid.x_axis.points, 0.0), _index(grid.y_axis.points, 0.0)
        col, row = grid.values[:, iv1], grid.values[iv3]
        assert np.all(col[~np.isnan(col)] == 0.0)
        assert np.all(row[~np.isnan(row)] == 0.0)

    def test_eq5_matches_scalar(self):
        grid = map_fig34("eq5", 0.8, 41)
        v1, v3 = grid.mesh()
        for iy, ix in zip(*np.nonzero(~np.isnan(grid.values))):
            r2 = v1[iy, ix] ** 2 + v3[iy, ix] ** 2
            v = V((v1[iy, ix], math.sqrt(max(0.64 - r2, 0.0)), v3[iy, ix]))
            assert abs(grid.values[iy, ix] - measurement.discrepancy_eq5(v)) < 1e-12

    def test_eq6_cropping(self):
        small, full = map_fig34("eq6", 0.5, 101), map_fig34("eq6", 1.0, 101)
        mask = ~np.isnan(small.values)
        assert mask.sum() > 0
        np.testing.assert_array_equal(small.values[mask], full.values[mask])
        assert np.all(np.isnan(small.values[np.hypot(*small.mesh()) > 0.5]))

    def test_eq6_spot(self):
        grid = map_fig34("eq6", 0.5, 201)
        v = V((0.25, 0, 0.25))
        ref = measurement.discrepancy_eq6(v)
        iy, ix = _index(grid.y_axis.points, 0.25), _index(grid.x_axis.points, 0.25)
        assert abs(grid.values[iy, ix] - ref) < 1e-12

    @pytest.mark.parametrize(
        "formula, vnorm", [("eq5", 1.0), ("eq5", 0.0), ("eq6", 1.01), ("eq6", -0.1), ("eq9", 0.5)]
    )
    def test_invalid(self, formula, vnorm):
        with pytest.raises(DomainError):
            map_fig34(formula, vnorm, 11)


class TestFig5:
    def test_examples(self):
        grid = map_fig5(11)  # 0.2 spacing
        assert grid.fixed_params == {"v3": 0.0}
        xs = grid.x_axis.points
        iy0 = _index(xs, 0.0)
        assert grid.values[iy0, _index(xs, 0.4)] == 0.0  # v2 = 0
        assert grid.values[_index(xs, 0.4), iy0] == 0.0  # v1 = 0
        assert np.isnan(grid.values[iy0, iy0])

    def test_spot(self):
        grid = map_fig5(21)
        ix, iy = _index(grid.x_axis.points, 0.3), _index(grid.y_axis.points, 0.4)
        ref = measurement.prob_eq8(V((0.3, 0.4, 0))) - measurement.prob_eq7(V((0.3, 0.4, 0)))
        assert abs(grid.values[iy, ix] - ref) < 1e-12
        assert grid.values[iy, ix] == pytest.approx(-0.019313934688767318, abs=1e-15)

    def test_nan_discipline(self):
        grid = map_fig5(64)
        r = np.hypot(*grid.mesh())
        assert np.isnan(grid.values[r >= 1.0]).all()
        finite = ~np.isnan(grid.values)
        assert finite[(r < 0.999) & (r > 1e-6)].all()

    def test_deterministic(self):
        assert map_fig5(64).to_csv() == map_fig5(64).to_csv()


class TestOutput:
    def test_csv_layout(self):
        grid = map_fig5(3)
        lines = grid.to_csv().splitlines()
        assert lines[0] == "v1,v2,value"
        assert len(lines) == 10
        assert lines[1] == "-1,-1,nan"
        assert lines[2].startswith("0,-1,")
        assert lines[5] == "0,0,nan"

    def test_metadata(self):
        grid = map_fig1(11, deltas=(0.01,))
        csv_text = grid.to_csv()
        meta = grid.metadata(csv_text)
        assert meta["formula_id"] == "EQ4_MAP"
        assert meta["resolution"] == 11
        assert meta["axes"][1] == {"name": "rho_v", "min": 0.0, "max": 1.0, "samples": 11}
        assert meta["csv_sha256"] == hashlib.sha256(csv_text.encode()).hexdigest()
        assert meta["contours"][0]["delta"] == 0.01

    def test_json_nan_is_null(self):
        doc = json.loads(map_fig5(5).to_json())
        assert doc["values"][2][2] is None
        assert len(doc["values"]) == 5


@pytest.fixture(scope="module")
def curves():
    return curve_fig2(resolution=400)


class TestFig2:
    def test_residuals(self, curves):
        for c in curves:
            assert c.vnorm.size > 0
            for a, r in zip(c.abs_v3[::5], c.rho[::5]):
                p = momentum_from_velocity(V((r, 0, a)))
                assert abs(measurement.prob_eq4(p) - c.delta) < 1e-9

    def test_structure(self, curves):
        for c in curves:
            assert c.min_v3 > 0
            assert 0 < c.min_vnorm < 1
            assert c.v3_at_min_vnorm != c.min_v3
            assert c.v3_at_min_vnorm > c.min_v3

    def test_monotone_in_delta(self, curves):
        mins = [c.min_vnorm for c in curves]
        assert mins == sorted(mins)

    def test_known_minimum(self, curves):
        smallest = curves[0]
        assert smallest.delta == 0.001
        assert 0.4 < smallest.min_vnorm < 0.55

    def test_csv(self, curves):
        text = figures.curves_to_csv(curves)
        assert text.splitlines()[0] == "delta,abs_v3,rho_v,vnorm"
        assert len(text.splitlines()) == 1 + sum(c.vnorm.size for c in curves)

    @pytest.mark.parametrize("deltas", [(), (0.0,), (0.3,), (-0.01,)])
    def test_bad_deltas(self, deltas):
        with pytest.raises(DomainError):
            curve_fig2(deltas, 10)


@pytest.mark.parametrize("res", [1, 0, 2.5])
def test_bad_resolution(res):
    with pytest.raises(DomainError):
        map_fig5(res)
    with pytest.raises(DomainError):
        map_fig1(res)


class TestMarchingSquares:
    def test_circle(self):
        xs = np.linspace(-1, 1, 81)
        x, y = np.meshgrid(xs, xs)
        lines = marching_squares(x * x + y * y, xs, xs, 0.25)
        assert len(lines) == 1
        line = lines[0]
        np.testing.assert_allclose(np.hypot(line[:, 0], line[:, 1]), 0.5, atol=2e-3)
        np.testing.assert_array_equal(line[0], line[-1])  # closed

    def test_open_line(self):
        xs = np.linspace(0, 1, 11)
        x, _ = np.meshgrid(xs, xs)
        lines = marching_squares(x, xs, xs, 0.55)
        assert len(lines) == 1
        np.testing.assert_allclose(lines[0][:, 0], 0.55, atol=1e-12)

    def test_nan_cells_skipped(self):
        xs = np.linspace(0, 1, 11)
        x, _ = np.meshgrid(xs, xs)
        vals = x.copy()
        vals[5, 5] = np.nan
        for line in marching_squares(vals, xs, xs, 0.55):
            assert not np.isnan(line).any()

    def test_saddle(self):
        xs = np.array([0.0, 1.0])
        vals = np.array([[1.0, 0.0], [0.0, 1.0]])
        lines = marching_squares(vals, xs, xs, 0.5)
        assert len(lines) == 2
