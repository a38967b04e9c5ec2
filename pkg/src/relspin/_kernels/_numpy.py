"""Vectorized numpy kernels (fallback when numba is disabled or missing)."""

import numpy as np

MAX_SPEED = 1.0 - 1e-12
TRANSVERSE_TOL = 1e-12


def _speed2(v1, v2, v3):
    return v1 * v1 + v2 * v2 + v3 * v3


def _inside(v1, v2, v3):
    return np.sqrt(_speed2(v1, v2, v3)) < MAX_SPEED


def _eq4(v1, v2, v3):
    g = 1.0 / np.sqrt(1.0 - _speed2(v1, v2, v3))
    p1, p2, p3 = g * v1, g * v2, g * v3
    rho2 = p1 * p1 + p2 * p2
    e = np.sqrt(1.0 + rho2 + p3 * p3)
    s = 0.5 * np.sqrt(1.0 + rho2)
    return 0.25 * (p3 * p3 / (e + 2.0 * s)) * (rho2 / (2.0 * s + 1.0)) / (s * (1.0 + e))


def eq4_v(v1, v2, v3):
    v1, v2, v3 = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (v1, v2, v3)))
    ok = _inside(v1, v2, v3)
    out = np.full(v1.shape, np.nan)
    out[ok] = _eq4(v1[ok], v2[ok], v3[ok])
    return out


def eq5_v(v1, v2, v3):
    v1, v2, v3 = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (v1, v2, v3)))
    ok = _inside(v1, v2, v3)
    a, b, c = v1[ok], v2[ok], v3[ok]
    out = np.full(v1.shape, np.nan)
    inv_gamma = np.sqrt(1.0 - _speed2(a, b, c))
    out[ok] = -0.5 * c * a / ((inv_gamma + 1.0) * np.sqrt(1.0 - c * c))
    return out


def eq6_v(v1, v2, v3):
    v1, v2, v3 = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (v1, v2, v3)))
    ok = _inside(v1, v2, v3)
    a, c = v1[ok], v3[ok]
    out = np.full(v1.shape, np.nan)
    out[ok] = -0.5 * c * a / (np.sqrt(1.0 - a * a) * np.sqrt(1.0 - c * c))
    return out


def _eq78_mask(v1, v2, v3):
    rho = np.hypot(v1, v2)
    return _inside(v1, v2, v3) & (rho > TRANSVERSE_TOL), rho


def eq7_v(v1, v2, v3):
    v1, v2, v3 = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (v1, v2, v3)))
    ok, rho = _eq78_mask(v1, v2, v3)
    out = np.full(v1.shape, np.nan)
    out[ok] = 0.5 * (1.0 - v2[ok] / rho[ok])
    return out


def eq8_v(v1, v2, v3):
    v1, v2, v3 = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (v1, v2, v3)))
    ok, rho = _eq78_mask(v1, v2, v3)
    out = np.full(v1.shape, np.nan)
    a = v1[ok]
    out[ok] = 0.5 * (1.0 - v2[ok] / (rho[ok] * np.sqrt(1.0 - a * a)))
    return out


def eq4_roots(abs_v3, delta, n_presample, vmax):
    """Roots in ``rho`` of ``P4(v3, rho) = delta`` for each ``v3`` in ``abs_v3``.

    Each ``rho`` interval ``[0, sqrt(vmax^2 - v3^2)]`` is presampled at
    ``n_presample`` points; every sign change is refined by bisection until
    the bracket cannot be split further in float64.

    Returns ``(index, rho)``: the position in ``abs_v3`` and the root.
    """
    abs_v3 = np.asarray(abs_v3, dtype=float)
    live = abs_v3 < vmax
    v3 = abs_v3[live]
    idx_live = np.nonzero(live)[0]
    rho_max = np.sqrt(vmax * vmax - v3 * v3)
    t = np.arange(n_presample) / (n_presample - 1.0)
    rho = rho_max[:, None] * t[None, :]
    vv3 = np.broadcast_to(v3[:, None], rho.shape)
    f = _eq4(rho, np.zeros_like(rho), vv3) - delta
    pos = f > 0.0
    rows, cols = np.nonzero(pos[:, :-1] != pos[:, 1:])
    lo = rho[rows, cols].copy()
    hi = rho[rows, cols + 1].copy()
    f_lo = f[rows, cols].copy()
    f_hi = f[rows, cols + 1].copy()
    c = v3[rows]
    zeros = np.zeros_like(c)
    active = np.ones(lo.shape, dtype=bool)
    while active.any():
        mid = 0.5 * (lo + hi)
        active &= (mid > lo) & (mid < hi)
        if not active.any():
            break
        f_mid = _eq4(mid, zeros, c) - delta
        same = (f_mid > 0.0) == (f_lo > 0.0)
        move_lo = active & same
        move_hi = active & ~same
        lo = np.where(move_lo, mid, lo)
        f_lo = np.where(move_lo, f_mid, f_lo)
        hi = np.where(move_hi, mid, hi)
        f_hi = np.where(move_hi, f_mid, f_hi)
    root = np.where(np.abs(f_lo) <= np.abs(f_hi), lo, hi)
    return idx_live[rows], root
