import os
import subprocess
import sys

import numpy as np
import pytest

from relspin import _kernels, measurement
from relspin.kinematics import DimensionlessVelocity

nb = _kernels.numba_backend
npb = _kernels.numpy_backend
needs_numba = pytest.mark.skipif(nb is None, reason="numba backend disabled")


def _cloud(rng, n=5000):
    v = rng.uniform(-1, 1, size=(3, n))
    v[:, :20] = 0.0
    v[2, 20:40] = 0.7  # on the v3 axis
    v[0, 20:40] = v[1, 20:40] = 0.0
    return v


@needs_numba
@pytest.mark.parametrize("name", ["eq4_v", "eq5_v", "eq6_v", "eq7_v", "eq8_v"])
def test_backends_bitwise(rng, name):
    v1, v2, v3 = _cloud(rng)
    a = getattr(nb, name)(v1, v2, v3)
    b = getattr(npb, name)(v1, v2, v3)
    np.testing.assert_array_equal(a, b)


@needs_numba
def test_roots_bitwise():
    abs_v3 = np.linspace(0, 1, 200, endpoint=False)
    for delta in (0.001, 0.05):
        ia, ra = nb.eq4_roots(abs_v3, delta, 512, 1 - 2e-12)
        ib, rb = npb.eq4_roots(abs_v3, delta, 512, 1 - 2e-12)
        np.testing.assert_array_equal(ia, ib)
        np.testing.assert_array_equal(ra, rb)


@pytest.mark.parametrize("backend", [b for b in (nb, npb) if b is not None])
def test_kernel_matches_scalar(rng, backend):
    v1, v2, v3 = _cloud(rng, 300)
    funcs = {
        "eq4": lambda v: measurement.prob_eq4(measurement.momentum_from_velocity(v)),
        "eq5": measurement.discrepancy_eq5,
        "eq6": measurement.discrepancy_eq6,
        "eq7": measurement.prob_eq7,
        "eq8": measurement.prob_eq8,
    }
    for name, fn in funcs.items():
        got = getattr(backend, name + "_v")(v1, v2, v3)
        for k in range(v1.size):
            speed = np.sqrt(v1[k] ** 2 + v2[k] ** 2 + v3[k] ** 2)
            rho = np.hypot(v1[k], v2[k])
            if speed >= 1 - 1e-12 or (name in ("eq7", "eq8") and rho <= 1e-12):
                assert np.isnan(got[k])
            else:
                assert abs(got[k] - fn(DimensionlessVelocity(v1[k], v2[k], v3[k]))) < 1e-12


def test_broadcasting():
    out = _kernels.eq4_v(np.array([0.1, 0.2]), 0.0, 0.3)
    assert out.shape == (2,)


def test_env_flag_selects_numpy():
    env = dict(os.environ, RELSPIN_DISABLE_JIT="1")
    out = subprocess.run(
        [sys.executable, "-c", "from relspin import _kernels; print(_kernels.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "numpy"


def test_default_backend():
    flag = os.environ.get("RELSPIN_DISABLE_JIT", "").strip().lower()
    expected = "numba" if flag in ("", "0", "false", "no") else "numpy"
    assert _kernels.BACKEND == expected
