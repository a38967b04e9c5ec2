"""Hot grid and root-scan kernels.

The numba backend is used unless ``RELSPIN_DISABLE_JIT`` is set to a truthy
value or numba cannot be imported; the numpy backend is then used instead.
Both expose the same functions:

``eq4_v, eq5_v, eq6_v, eq7_v, eq8_v(v1, v2, v3)``
    Elementwise closed forms over broadcastable velocity components, NaN
    where ``|v| >= 1 - 1e-12`` (and, for eq7/eq8, where the transverse speed
    is at most 1e-12).
``eq4_roots(abs_v3, delta, n_presample, vmax)``
    Root scan for the significance-boundary curves of ``P4 = delta``.
"""

import os

from . import _numpy as numpy_backend

_FLAG = os.environ.get("RELSPIN_DISABLE_JIT", "").strip().lower()
JIT_REQUESTED = _FLAG in ("", "0", "false", "no")

numba_backend = None
if JIT_REQUESTED:
    try:
        from . import _numba as numba_backend
    except ImportError:  # pragma: no cover - numba is a declared dependency
        numba_backend = None

backend = numba_backend if numba_backend is not None else numpy_backend
BACKEND = "numba" if backend is numba_backend else "numpy"

eq4_v = backend.eq4_v
eq5_v = backend.eq5_v
eq6_v = backend.eq6_v
eq7_v = backend.eq7_v
eq8_v = backend.eq8_v
eq4_roots = backend.eq4_roots

__all__ = [
    "BACKEND",
    "backend",
    "numpy_backend",
    "numba_backend",
    "eq4_v",
    "eq5_v",
    "eq6_v",
    "eq7_v",
    "eq8_v",
    "eq4_roots",
]
