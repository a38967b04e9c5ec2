"""Spin-1/2 observables on a single momentum fiber.

Every operator is a 2x2 matrix in the Wigner ``m3`` basis, rows and columns
ordered ``(m3=+1/2, m3=-1/2)``. Three families are provided:

* the Wigner spin ``S^i`` (momentum independent),
* the angular-momentum part of the intrinsic spin tensor,
  ``Sigma(p) = E_p S_perp + S_par``,
* the mass-momentum part, ``V(p) = p x S`` (units of hbar/c).

Alongside the matrices live the closed-form spectra and eigenkets, expressed
first in the ``m^i`` basis of the chosen axis and then rotated into ``m3``
components with :func:`basis_change`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .kinematics import DimensionlessMomentum, energy

#: Transverse momentum norm below which phase factors are undefined.
TRANSVERSE_TOL = 1e-12
HERMITIAN_TOL = 1e-14
NORM_TOL = 1e-12

_SQRT1_2 = math.sqrt(0.5)


class Axis(enum.IntEnum):
    X = 1
    Y = 2
    Z = 3

    @property
    def complement(self) -> tuple["Axis", "Axis"]:
        """Cyclic pair ``(j, k)`` following this axis."""
        return _COMPLEMENT[self]

    @property
    def index(self) -> int:
        return int(self) - 1

    @classmethod
    def parse(cls, text) -> "Axis":
        if isinstance(text, Axis):
            return text
        key = str(text).strip().lower()
        table = {"x": cls.X, "1": cls.X, "y": cls.Y, "2": cls.Y, "z": cls.Z, "3": cls.Z}
        try:
            return table[key]
        except KeyError:
            raise ValueError(f"unknown axis {text!r}") from None


_COMPLEMENT = {Axis.X: (Axis.Y, Axis.Z), Axis.Y: (Axis.Z, Axis.X), Axis.Z: (Axis.X, Axis.Y)}
# (i, j, k) positions of the cyclic triple starting at each axis
_CYCLIC_INDEX = {Axis.X: (0, 1, 2), Axis.Y: (1, 2, 0), Axis.Z: (2, 0, 1)}


class Unit(enum.Enum):
    HBAR = "hbar"
    HBAR_PER_C = "hbar/c"


class FiberMismatchError(ValueError):
    """Two states living on different momentum fibers were combined."""


@dataclass(frozen=True)
class SpinState:
    """Normalized spin amplitudes over the ``m3`` basis at momentum ``base``."""

    base: DimensionlessMomentum
    amp_up: complex
    amp_down: complex

    def __post_init__(self):
        up, down = complex(self.amp_up), complex(self.amp_down)
        n2 = abs(up) ** 2 + abs(down) ** 2
        if abs(n2 - 1.0) > NORM_TOL:
            raise ValueError(f"spin state is not normalized (|psi|^2 = {n2!r})")
        object.__setattr__(self, "amp_up", up)
        object.__setattr__(self, "amp_down", down)

    @classmethod
    def from_vector(cls, base: DimensionlessMomentum, vec) -> "SpinState":
        up, down = vec
        return cls(base, complex(up), complex(down))

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.amp_up, self.amp_down], dtype=complex)


@dataclass(frozen=True, eq=False)
class HermitianOp2:
    entries: np.ndarray
    unit: Unit = Unit.HBAR

    def __post_init__(self):
        m = np.array(self.entries, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        a, b, c, d = m.ravel().tolist()
        scale = max(1.0, abs(a), abs(b), abs(c), abs(d))
        skew = max(abs(a.imag), abs(d.imag), abs(b - c.conjugate()))
        if skew > HERMITIAN_TOL * scale:
            raise ValueError("matrix is not Hermitian")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    def __matmul__(self, other):
        if isinstance(other, SpinState):
            return self.entries @ other.vector
        return self.entries @ np.asarray(other)

    def __eq__(self, other):
        if not isinstance(other, HermitianOp2):
            return NotImplemented
        return self.unit is other.unit and np.array_equal(self.entries, other.entries)

    def __repr__(self):
        return f"HermitianOp2({self.entries.tolist()!r}, unit={self.unit.value!r})"


@dataclass(frozen=True)
class EigenPair:
    value: float
    state: SpinState
    degenerate: bool = False


def _spin_matrix(c1: float, c2: float, c3: float) -> np.ndarray:
    """``c . S`` for spin 1/2, i.e. half of ``c . sigma``."""
    return 0.5 * np.array(
        [[c3, complex(c1, -c2)], [complex(c1, c2), -c3]], dtype=complex
    )


_UNIT_VECTORS = {
    Axis.X: (1.0, 0.0, 0.0),
    Axis.Y: (0.0, 1.0, 0.0),
    Axis.Z: (0.0, 0.0, 1.0),
}

_BASIS_CHANGE = {
    Axis.X: np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT1_2,
    Axis.Y: np.array([[1, 1], [1j, -1j]], dtype=complex) * _SQRT1_2,
    Axis.Z: np.eye(2, dtype=complex),
}
for _u in _BASIS_CHANGE.values():
    _u.setflags(write=False)


def wigner_spin_op(axis: Axis) -> HermitianOp2:
    return HermitianOp2(_spin_matrix(*_UNIT_VECTORS[Axis.parse(axis)]), Unit.HBAR)


def basis_change(axis: Axis) -> np.ndarray:
    """Unitary whose columns are the ``m^axis = +1/2, -1/2`` kets in ``m3`` components.

    Phase convention: ``(1, +-1)/sqrt2`` for x and ``(1, +-i)/sqrt2`` for y.
    """
    return _BASIS_CHANGE[Axis.parse(axis)]


def sigma_coefficients(p: DimensionlessMomentum, axis: Axis) -> tuple[float, float, float]:
    """Real vector ``c`` with ``Sigma^axis(p) = c . S``.

    ``E S_perp + S_par`` projected on ``e_i`` is ``E e_i - (E - 1) p_i p / |p|^2``
    and ``(E - 1)/|p|^2 = 1/(E + 1)``, which stays finite at rest.
    """
    axis = Axis.parse(axis)
    e = energy(p)
    p_vec = p.as_tuple()
    w = p_vec[axis.index] / (1.0 + e)
    c = [-w * pk for pk in p_vec]
    c[axis.index] += e
    return c[0], c[1], c[2]


def v_coefficients(p: DimensionlessMomentum, axis: Axis) -> tuple[float, float, float]:
    """Real vector ``c`` with ``(p x S)^axis = c . S``, namely ``c = e_axis x p``."""
    axis = Axis.parse(axis)
    p1, p2, p3 = p.as_tuple()
    if axis is Axis.X:
        return 0.0, -p3, p2
    if axis is Axis.Y:
        return p3, 0.0, -p1
    return -p2, p1, 0.0


def sigma_op(p: DimensionlessMomentum, axis: Axis) -> HermitianOp2:
    return HermitianOp2(_spin_matrix(*sigma_coefficients(p, axis)), Unit.HBAR)


def v_op(p: DimensionlessMomentum, axis: Axis) -> HermitianOp2:
    return HermitianOp2(_spin_matrix(*v_coefficients(p, axis)), Unit.HBAR_PER_C)


def _split(p: DimensionlessMomentum, axis: Axis) -> tuple[float, float, float]:
    """Return ``(p_i, p_j, p_k)`` for the cyclic triple starting at ``axis``."""
    i, j, k = _CYCLIC_INDEX[axis]
    comps = (p.p1, p.p2, p.p3)
    return comps[i], comps[j], comps[k]


def sigma_eigenvalue(p: DimensionlessMomentum, axis: Axis) -> float:
    _, pj, pk = _split(p, Axis.parse(axis))
    return 0.5 * math.sqrt(1.0 + (pj * pj + pk * pk))


def v_eigenvalue(p: DimensionlessMomentum, axis: Axis) -> float:
    _, pj, pk = _split(p, Axis.parse(axis))
    return 0.5 * math.hypot(pj, pk)


def sigma_mixing(p: DimensionlessMomentum, axis: Axis) -> tuple[float, float]:
    """Coefficients ``(a+, a-)`` of the Sigma eigenkets in the Wigner basis.

    The factors ``E - 2s`` and ``2s - 1`` are evaluated as ``p_i^2/(E + 2s)``
    and ``rho^2/(2s + 1)`` to avoid cancellation at small momenta.
    """
    axis = Axis.parse(axis)
    pi, pj, pk = _split(p, axis)
    rho2 = pj * pj + pk * pk
    e = energy(p)
    s = 0.5 * math.sqrt(1.0 + rho2)
    denom = s * (1.0 + e)
    a_plus = 0.5 * math.sqrt((e + 2 * s) * (2 * s + 1) / denom)
    a_minus = 0.5 * math.sqrt((pi * pi / (e + 2 * s)) * (rho2 / (2 * s + 1)) / denom)
    return a_plus, a_minus


def _sgn(x: float) -> float:
    return -1.0 if x < 0 else 1.0


def sigma_phase(p: DimensionlessMomentum, axis: Axis) -> complex:
    """Unit phase ``exp(i phi)`` multiplying ``a-`` in the Sigma eigenkets.

    Returns 1 when the transverse momentum vanishes; ``a-`` is zero there.
    """
    axis = Axis.parse(axis)
    p1, p2, p3 = p.as_tuple()
    _, pj, pk = _split(p, axis)
    rho = math.hypot(pj, pk)
    if rho < TRANSVERSE_TOL:
        return 1.0 + 0.0j
    if axis is Axis.Z:
        z = -_sgn(p3) * complex(p1, p2)
    elif axis is Axis.Y:
        z = -_sgn(p2) * complex(p3, p1)
    else:
        z = -_sgn(p1) * complex(p3, -p2)
    return z / rho


def v_phase(p: DimensionlessMomentum, axis: Axis) -> complex:
    """Unit phase ``exp(i phi)`` of the nondegenerate V eigenkets.

    Raises :class:`ValueError` in the degenerate case (no transverse momentum).
    """
    axis = Axis.parse(axis)
    p1, p2, p3 = p.as_tuple()
    _, pj, pk = _split(p, axis)
    rho = math.hypot(pj, pk)
    if rho < TRANSVERSE_TOL:
        raise ValueError("V phase undefined without transverse momentum")
    if axis is Axis.Z:
        z = -complex(p2, p1)
    elif axis is Axis.Y:
        z = -complex(p1, p3)
    else:
        z = -complex(-p2, p3)
    return z / rho


def _from_axis_basis(p, axis, up, down) -> SpinState:
    """Build a state from its ``m^axis = +1/2, -1/2`` components."""
    u = basis_change(axis)
    return SpinState(
        p,
        u[0, 0] * up + u[0, 1] * down,
        u[1, 0] * up + u[1, 1] * down,
    )


def wigner_state(p: DimensionlessMomentum, axis: Axis, sign: int = 1) -> SpinState:
    """The Wigner basis ket ``|p, m^axis = sign/2>``."""
    axis = Axis.parse(axis)
    _check_sign(sign)
    return _from_axis_basis(p, axis, 1.0, 0.0) if sign > 0 else _from_axis_basis(p, axis, 0.0, 1.0)


def _check_sign(sign: int):
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")


def sigma_eigenstate(p: DimensionlessMomentum, axis: Axis, sign: int) -> EigenPair:
    """Eigenpair ``(sign * s_p, |p, sign s_p>_Sigma)``.

    The coefficient of ``m^axis = sign/2`` is real and nonnegative.
    """
    axis = Axis.parse(axis)
    _check_sign(sign)
    s = sigma_eigenvalue(p, axis)
    a_plus, a_minus = sigma_mixing(p, axis)
    phase = sigma_phase(p, axis)
    if sign > 0:
        up, down = a_plus, phase * a_minus
    else:
        up, down = -phase.conjugate() * a_minus, a_plus
    return EigenPair(sign * s, _from_axis_basis(p, axis, up, down))


def v_eigenstate(p: DimensionlessMomentum, axis: Axis, sign: int) -> EigenPair:
    """Eigenpair of ``V^axis(p)``.

    Without transverse momentum the operator vanishes; the returned kets are
    then ``(|+1/2> + sign |-1/2>)/sqrt2`` in the axis basis, with value 0 and
    ``degenerate=True``.
    """
    axis = Axis.parse(axis)
    _check_sign(sign)
    _, pj, pk = _split(p, axis)
    if math.hypot(pj, pk) < TRANSVERSE_TOL:
        state = _from_axis_basis(p, axis, _SQRT1_2, sign * _SQRT1_2)
        return EigenPair(0.0, state, degenerate=True)
    phase = v_phase(p, axis)
    if sign > 0:
        up, down = phase * _SQRT1_2, _SQRT1_2
    else:
        up, down = _SQRT1_2, -phase.conjugate() * _SQRT1_2
    return EigenPair(sign * v_eigenvalue(p, axis), _from_axis_basis(p, axis, up, down))


def eigenpairs(p: DimensionlessMomentum, observable: str, axis: Axis) -> list[EigenPair]:
    """Both eigenpairs, positive branch first, for ``observable`` in {"sigma", "v"}."""
    fn = _EIGENSTATE_BY_NAME[_observable_key(observable)]
    return [fn(p, axis, +1), fn(p, axis, -1)]


def operator(p: DimensionlessMomentum, observable: str, axis: Axis) -> HermitianOp2:
    key = _observable_key(observable)
    return sigma_op(p, axis) if key == "sigma" else v_op(p, axis)


def _observable_key(observable) -> str:
    key = str(getattr(observable, "value", observable)).lower()
    if key not in _EIGENSTATE_BY_NAME:
        raise ValueError(f"unknown observable {observable!r}")
    return key


_EIGENSTATE_BY_NAME = {"sigma": sigma_eigenstate, "v": v_eigenstate}

del _u
