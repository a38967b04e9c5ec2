"""Independent verification path: exact 2x2 Hermitian diagonalization.

Nothing here knows about the closed-form spectra or probabilities; the only
input is a matrix. Tests and ``relspin validate`` compare the two routes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spin_ops import HermitianOp2, SpinState

DEGENERACY_TOL = 1e-12
HERMITIAN_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class EigenSystem2:
    values: tuple[float, float]
    vectors: tuple[np.ndarray, np.ndarray]
    degenerate: bool = False

    def vector_for(self, branch: int) -> np.ndarray:
        """Eigenvector of the upper (``+1``) or lower (``-1``) eigenvalue."""
        if branch not in (1, -1):
            raise ValueError(f"branch must be +1 or -1, got {branch!r}")
        return self.vectors[1] if branch > 0 else self.vectors[0]


def _as_matrix(op) -> np.ndarray:
    if isinstance(op, HermitianOp2):
        return op.entries
    m = np.asarray(op, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
        raise ValueError("matrix is not Hermitian")
    return m


def _fix_phase(x0: complex, x1: complex) -> np.ndarray:
    # largest-magnitude component made real and nonnegative; ties go to index 0
    big = x0 if abs(x0) >= abs(x1) else x1
    ph = big.conjugate() / abs(big)
    return np.array([x0 * ph, x1 * ph])


def eigh2(op) -> EigenSystem2:
    """Diagonalize a 2x2 Hermitian matrix in closed form.

    ``lambda = (tr +- sqrt(tr^2 - 4 det)) / 2`` with the discriminant written
    as ``(a - d)^2 + 4|b|^2``. Eigenvalues are ascending. Each eigenvector
    has its largest-magnitude component real and nonnegative. Near-equal
    eigenvalues give the canonical basis and ``degenerate=True``.
    """
    m = _as_matrix(op)
    a = m[0, 0].real
    d = m[1, 1].real
    b = complex(m[0, 1])
    half_tr = 0.5 * (a + d)
    half_gap = 0.5 * math.sqrt(max(0.0, (a - d) ** 2 + 4.0 * (b.real**2 + b.imag**2)))
    lo, hi = half_tr - half_gap, half_tr + half_gap
    if hi - lo < DEGENERACY_TOL:
        e0 = np.array([1.0, 0.0], dtype=complex)
        e1 = np.array([0.0, 1.0], dtype=complex)
        return EigenSystem2((lo, hi), (e0, e1), degenerate=True)

    # (A - hi) x = 0 is solved by either row; keep the better conditioned one.
    bb = abs(b) ** 2
    n1 = bb + (hi - a) ** 2
    n2 = (hi - d) ** 2 + bb
    if n1 >= n2:
        x0, x1, n = b, complex(hi - a), math.sqrt(n1)
    else:
        x0, x1, n = complex(hi - d), b.conjugate(), math.sqrt(n2)
    x0, x1 = x0 / n, x1 / n
    x = _fix_phase(x0, x1)
    y = _fix_phase(-x1.conjugate(), x0.conjugate())
    return EigenSystem2((lo, hi), (y, x))


def oracle_probability(state, op, branch: int) -> float:
    """Born probability of the ``branch`` eigenvalue of ``op`` using :func:`eigh2` only.

    For a degenerate operator the branch eigenspace is the whole fiber, so the
    probability is 1.
    """
    system = eigh2(op)
    vec = state.vector if isinstance(state, SpinState) else np.asarray(state, dtype=complex)
    if system.degenerate:
        system.vector_for(branch)  # validates the branch label
        return float(np.vdot(vec, vec).real)
    amp = np.vdot(system.vector_for(branch), vec)
    return float(amp.real**2 + amp.imag**2)


def eigh2_batch(mats: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized eigenvalues of a stack of 2x2 Hermitian matrices, shape ``(n, 2)``.

    Same formula as :func:`eigh2`; returns ``(values, degenerate_mask)``.
    """
    mats = np.asarray(mats, dtype=complex)
    a = mats[:, 0, 0].real
    d = mats[:, 1, 1].real
    b = mats[:, 0, 1]
    half_tr = 0.5 * (a + d)
    half_gap = 0.5 * np.sqrt(np.maximum(0.0, (a - d) ** 2 + 4.0 * (b.real**2 + b.imag**2)))
    values = np.stack([half_tr - half_gap, half_tr + half_gap], axis=1)
    return values, (2 * half_gap) < DEGENERACY_TOL
