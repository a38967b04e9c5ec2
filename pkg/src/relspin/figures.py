"""Sampled probability maps and significance-boundary curves.

All lattices are fixed, closed ``linspace`` grids so that output files are
reproducible bit for bit. Points outside the physical domain hold NaN.
"""

from __future__ import annotations

import enum
import hashlib
import io
import json
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .contours import marching_squares
from .kinematics import MAX_SPEED, DomainError

DEFAULT_DELTAS = (0.001, 0.005, 0.01, 0.02, 0.05)
N_PRESAMPLE = 512
# roots are searched strictly inside the velocity domain accepted by DimensionlessVelocity
ROOT_VMAX = MAX_SPEED - 1e-12
ROOT_RESIDUAL_TOL = 1e-9


class FormulaId(str, enum.Enum):
    EQ4_MAP = "EQ4_MAP"
    EQ5_MAP = "EQ5_MAP"
    EQ6_MAP = "EQ6_MAP"
    EQ78_DIFF_MAP = "EQ78_DIFF_MAP"


@dataclass(frozen=True)
class GridAxis:
    name: str
    lo: float
    hi: float
    samples: int

    @property
    def points(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.samples)


def fmt(x: float) -> str:
    """17 significant digits; NaN is written as ``nan``."""
    return "nan" if math.isnan(x) else format(float(x), ".17g")


@dataclass(eq=False)
class ProbabilityGrid:
    """A sampled field; ``values[iy, ix]`` sits at ``(x_axis[ix], y_axis[iy])``."""

    formula_id: FormulaId
    x_axis: GridAxis
    y_axis: GridAxis
    fixed_params: dict
    values: np.ndarray
    contours: dict = field(default_factory=dict)

    @property
    def axes(self) -> tuple[GridAxis, GridAxis]:
        return (self.x_axis, self.y_axis)

    @property
    def resolution(self) -> int:
        return self.x_axis.samples

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.x_axis.points, self.y_axis.points)

    def to_csv(self) -> str:
        """Header plus one row per lattice point, row-major with x varying fastest."""
        buf = io.StringIO()
        buf.write(f"{self.x_axis.name},{self.y_axis.name},value\n")
        xs, ys = self.x_axis.points, self.y_axis.points
        for iy, y in enumerate(ys):
            sy = fmt(y)
            row = self.values[iy]
            for ix, x in enumerate(xs):
                buf.write(f"{fmt(x)},{sy},{fmt(row[ix])}\n")
        return buf.getvalue()

    def metadata(self, csv_text: str | None = None) -> dict:
        csv_text = self.to_csv() if csv_text is None else csv_text
        meta = {
            "formula_id": self.formula_id.value,
            "axes": [
                {"name": a.name, "min": a.lo, "max": a.hi, "samples": a.samples}
                for a in self.axes
            ],
            "resolution": self.resolution,
            "fixed_params": dict(self.fixed_params),
            "csv_sha256": hashlib.sha256(csv_text.encode()).hexdigest(),
        }
        if self.contours:
            meta["contours"] = [
                {"delta": delta, "polylines": [line.tolist() for line in lines]}
                for delta, lines in self.contours.items()
            ]
        return meta

    def to_json(self, include_values: bool = True) -> str:
        meta = self.metadata()
        if include_values:
            meta["values"] = [
                [None if math.isnan(v) else float(v) for v in row] for row in self.values
            ]
        return json.dumps(meta, indent=1, sort_keys=False) + "\n"


@dataclass(eq=False)
class BoundaryCurve:
    """Points of ``P4 = delta`` as ``(|v3|, |v|)`` pairs, with the transverse speed kept."""

    delta: float
    abs_v3: np.ndarray
    rho: np.ndarray
    vnorm: np.ndarray
    min_vnorm: float
    min_v3: float
    v3_at_min_vnorm: float

    @property
    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.abs_v3.tolist(), self.vnorm.tolist()))


def _check_resolution(resolution: int):
    if int(resolution) != resolution or resolution < 2:
        raise DomainError(f"resolution must be an integer >= 2, got {resolution!r}")


def _check_deltas(deltas) -> tuple[float, ...]:
    deltas = tuple(float(d) for d in deltas)
    if not deltas:
        raise DomainError("at least one delta is required")
    for d in deltas:
        if not 0.0 < d < 0.25:
            raise DomainError(f"delta must lie in (0, 1/4), got {d!r}")
    return deltas


def map_fig1(resolution: int, deltas=DEFAULT_DELTAS) -> ProbabilityGrid:
    """P(-s_p^3) for a Wigner ``m3=+1/2`` input over the ``(v3, rho_v)`` half disk.

    Contours at each delta are attached in ``grid.contours``.
    """
    _check_resolution(resolution)
    deltas = _check_deltas(deltas)
    x_axis = GridAxis("v3", -1.0, 1.0, resolution)
    y_axis = GridAxis("rho_v", 0.0, 1.0, resolution)
    v3, rho = np.meshgrid(x_axis.points, y_axis.points)
    values = _kernels.eq4_v(rho, 0.0, v3)
    contours = {
        d: marching_squares(values, x_axis.points, y_axis.points, d) for d in deltas
    }
    return ProbabilityGrid(FormulaId.EQ4_MAP, x_axis, y_axis, {}, values, contours)


def map_fig34(formula: str, vnorm: float, resolution: int) -> ProbabilityGrid:
    """Discrepancy eq5 or eq6 over ``(v1, v3)`` at fixed speed ``vnorm``.

    The lattice always spans ``[-1, 1]^2`` so maps at different speeds share
    sample points; points with ``v1^2 + v3^2 > vnorm^2`` are NaN. The eq6
    value does not involve ``v2`` and is evaluated at ``v2 = 0``.
    """
    _check_resolution(resolution)
    key = str(formula).lower()
    vnorm = float(vnorm)
    if key == "eq5":
        if not 0.0 < vnorm < MAX_SPEED:
            raise DomainError(f"eq5 map needs 0 < vnorm < 1, got {vnorm!r}")
        fid = FormulaId.EQ5_MAP
    elif key == "eq6":
        if not 0.0 < vnorm <= 1.0:
            raise DomainError(f"eq6 map needs 0 < vnorm <= 1, got {vnorm!r}")
        fid = FormulaId.EQ6_MAP
    else:
        raise DomainError(f"unknown formula {formula!r} (expected eq5 or eq6)")
    x_axis = GridAxis("v1", -1.0, 1.0, resolution)
    y_axis = GridAxis("v3", -1.0, 1.0, resolution)
    v1, v3 = np.meshgrid(x_axis.points, y_axis.points)
    r2 = v1 * v1 + v3 * v3
    inside = r2 <= vnorm * vnorm
    if fid is FormulaId.EQ5_MAP:
        v2 = np.sqrt(np.maximum(vnorm * vnorm - r2, 0.0))
        values = _kernels.eq5_v(v1, v2, v3)
    else:
        values = _kernels.eq6_v(v1, 0.0, v3)
    values = np.where(inside, values, np.nan)
    return ProbabilityGrid(fid, x_axis, y_axis, {"vnorm": vnorm}, values)


def map_fig5(resolution: int) -> ProbabilityGrid:
    """P(+mu_p^3) difference, intrinsic minus Wigner ``m1=+1/2`` input, over ``(v1, v2)``."""
    _check_resolution(resolution)
    x_axis = GridAxis("v1", -1.0, 1.0, resolution)
    y_axis = GridAxis("v2", -1.0, 1.0, resolution)
    v1, v2 = np.meshgrid(x_axis.points, y_axis.points)
    values = _kernels.eq8_v(v1, v2, 0.0) - _kernels.eq7_v(v1, v2, 0.0)
    return ProbabilityGrid(FormulaId.EQ78_DIFF_MAP, x_axis, y_axis, {"v3": 0.0}, values)


def curve_fig2(deltas=DEFAULT_DELTAS, resolution: int = 1000) -> list[BoundaryCurve]:
    """Significance boundaries ``P4 = delta`` as speed versus ``|v3|``.

    ``|v3|`` is sampled at ``resolution`` evenly spaced points in ``[0, 1)``.
    For each one the transverse speed range is presampled and every sign
    change is bisected, so multiple roots are all reported.
    """
    _check_resolution(resolution)
    deltas = _check_deltas(deltas)
    abs_v3 = np.linspace(0.0, 1.0, int(resolution), endpoint=False)
    curves = []
    for delta in deltas:
        idx, rho = _kernels.eq4_roots(abs_v3, delta, N_PRESAMPLE, ROOT_VMAX)
        v3 = abs_v3[idx]
        resid = np.abs(_kernels.eq4_v(rho, 0.0, v3) - delta)
        good = resid < ROOT_RESIDUAL_TOL
        if not good.all():
            warnings.warn(f"delta={delta}: dropped {int((~good).sum())} unconverged roots")
        v3, rho = v3[good], rho[good]
        vnorm = np.hypot(v3, rho)
        order = np.lexsort((vnorm, v3))
        v3, rho, vnorm = v3[order], rho[order], vnorm[order]
        if vnorm.size == 0:
            warnings.warn(f"delta={delta}: no boundary points found")
            curves.append(
                BoundaryCurve(delta, v3, rho, vnorm, math.nan, math.nan, math.nan)
            )
            continue
        k = int(np.argmin(vnorm))
        curves.append(
            BoundaryCurve(
                delta, v3, rho, vnorm, float(vnorm[k]), float(v3.min()), float(v3[k])
            )
        )
    return curves


def curves_to_csv(curves: list[BoundaryCurve]) -> str:
    buf = io.StringIO()
    buf.write("delta,abs_v3,rho_v,vnorm\n")
    for c in curves:
        d = fmt(c.delta)
        for a, r, n in zip(c.abs_v3, c.rho, c.vnorm):
            buf.write(f"{d},{fmt(a)},{fmt(r)},{fmt(n)}\n")
    return buf.getvalue()


def curves_summary(curves: list[BoundaryCurve], csv_text: str, resolution: int) -> dict:
    return {
        "figure": 2,
        "resolution": resolution,
        "presample": N_PRESAMPLE,
        "csv_sha256": hashlib.sha256(csv_text.encode()).hexdigest(),
        "curves": [
            {
                "delta": c.delta,
                "samples": int(c.vnorm.size),
                "min_vnorm": None if math.isnan(c.min_vnorm) else c.min_vnorm,
                "min_abs_v3": None if math.isnan(c.min_v3) else c.min_v3,
                "abs_v3_at_min_vnorm": None if math.isnan(c.v3_at_min_vnorm) else c.v3_at_min_vnorm,
            }
            for c in curves
        ],
    }
