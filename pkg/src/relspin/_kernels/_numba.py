"""numba-compiled kernels. Same contracts as ``_numpy``; loops instead of masks."""

import math

import numpy as np
from numba import njit

MAX_SPEED = 1.0 - 1e-12
TRANSVERSE_TOL = 1e-12


@njit(cache=True)
def _eq4_point(v1, v2, v3):
    g = 1.0 / math.sqrt(1.0 - (v1 * v1 + v2 * v2 + v3 * v3))
    p1, p2, p3 = g * v1, g * v2, g * v3
    rho2 = p1 * p1 + p2 * p2
    e = math.sqrt(1.0 + rho2 + p3 * p3)
    s = 0.5 * math.sqrt(1.0 + rho2)
    return 0.25 * (p3 * p3 / (e + 2.0 * s)) * (rho2 / (2.0 * s + 1.0)) / (s * (1.0 + e))


@njit(cache=True)
def _inside(v1, v2, v3):
    return math.sqrt(v1 * v1 + v2 * v2 + v3 * v3) < MAX_SPEED


@njit(cache=True)
def _eq4_flat(v1, v2, v3, out):
    for i in range(out.size):
        if _inside(v1[i], v2[i], v3[i]):
            out[i] = _eq4_point(v1[i], v2[i], v3[i])
        else:
            out[i] = np.nan


@njit(cache=True)
def _eq5_flat(v1, v2, v3, out):
    for i in range(out.size):
        a, b, c = v1[i], v2[i], v3[i]
        if _inside(a, b, c):
            inv_gamma = math.sqrt(1.0 - (a * a + b * b + c * c))
            out[i] = -0.5 * c * a / ((inv_gamma + 1.0) * math.sqrt(1.0 - c * c))
        else:
            out[i] = np.nan


@njit(cache=True)
def _eq6_flat(v1, v2, v3, out):
    for i in range(out.size):
        a, c = v1[i], v3[i]
        if _inside(a, v2[i], c):
            out[i] = -0.5 * c * a / (math.sqrt(1.0 - a * a) * math.sqrt(1.0 - c * c))
        else:
            out[i] = np.nan


@njit(cache=True)
def _eq78_flat(v1, v2, v3, out, intrinsic):
    for i in range(out.size):
        a, b = v1[i], v2[i]
        rho = math.hypot(a, b)
        if _inside(a, b, v3[i]) and rho > TRANSVERSE_TOL:
            if intrinsic:
                out[i] = 0.5 * (1.0 - b / (rho * math.sqrt(1.0 - a * a)))
            else:
                out[i] = 0.5 * (1.0 - b / rho)
        else:
            out[i] = np.nan


def _flat3(v1, v2, v3):
    v1, v2, v3 = np.broadcast_arrays(*(np.asarray(a, dtype=float) for a in (v1, v2, v3)))
    shape = v1.shape
    flat = tuple(np.ascontiguousarray(a).ravel() for a in (v1, v2, v3))
    return shape, flat, np.empty(flat[0].size)


def eq4_v(v1, v2, v3):
    shape, (a, b, c), out = _flat3(v1, v2, v3)
    _eq4_flat(a, b, c, out)
    return out.reshape(shape)


def eq5_v(v1, v2, v3):
    shape, (a, b, c), out = _flat3(v1, v2, v3)
    _eq5_flat(a, b, c, out)
    return out.reshape(shape)


def eq6_v(v1, v2, v3):
    shape, (a, b, c), out = _flat3(v1, v2, v3)
    _eq6_flat(a, b, c, out)
    return out.reshape(shape)


def eq7_v(v1, v2, v3):
    shape, (a, b, c), out = _flat3(v1, v2, v3)
    _eq78_flat(a, b, c, out, False)
    return out.reshape(shape)


def eq8_v(v1, v2, v3):
    shape, (a, b, c), out = _flat3(v1, v2, v3)
    _eq78_flat(a, b, c, out, True)
    return out.reshape(shape)


@njit(cache=True)
def _bisect(v3, lo, hi, f_lo, f_hi, delta):
    while True:
        mid = 0.5 * (lo + hi)
        if not (lo < mid < hi):
            break
        f_mid = _eq4_point(mid, 0.0, v3) - delta
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return lo if abs(f_lo) <= abs(f_hi) else hi


@njit(cache=True)
def _eq4_roots(abs_v3, delta, n_presample, vmax):
    idx = []
    roots = []
    fs = np.empty(n_presample)
    rs = np.empty(n_presample)
    for k in range(abs_v3.size):
        v3 = abs_v3[k]
        if not v3 < vmax:
            continue
        rho_max = math.sqrt(vmax * vmax - v3 * v3)
        for j in range(n_presample):
            rs[j] = rho_max * (j / (n_presample - 1.0))
            fs[j] = _eq4_point(rs[j], 0.0, v3) - delta
        for j in range(n_presample - 1):
            if (fs[j] > 0.0) != (fs[j + 1] > 0.0):
                idx.append(k)
                roots.append(_bisect(v3, rs[j], rs[j + 1], fs[j], fs[j + 1], delta))
    out_idx = np.empty(len(idx), dtype=np.int64)
    out_rho = np.empty(len(roots))
    for i in range(len(idx)):
        out_idx[i] = idx[i]
        out_rho[i] = roots[i]
    return out_idx, out_rho


def eq4_roots(abs_v3, delta, n_presample, vmax):
    """Same contract as :func:`relspin._kernels._numpy.eq4_roots`."""
    return _eq4_roots(
        np.ascontiguousarray(abs_v3, dtype=float), float(delta), int(n_presample), float(vmax)
    )
