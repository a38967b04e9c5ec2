"""Projective Stern-Gerlach measurements of the intrinsic spin components.

A magnetic field along axis ``i`` selects ``Sigma^i``, an electric field
selects ``V^i``. The measurement is modelled as eigenbasis filtering, so no
coupling constant appears anywhere.

Closed forms (all with ``p = gamma v`` where a velocity is given):

``prob_eq4``
    P(-s_p^3) for input ``|p, m3=+1/2>_B``.
``discrepancy_eq5``
    P(+s_p^3) - 1/2 for input ``|p, m1=+1/2>_B``.
``discrepancy_eq6``
    P(+s_p^3) - 1/2 for input ``|p, +s_p^1>_Sigma``.
``prob_eq7`` / ``prob_eq8``
    P(+mu_p^3) for the same two inputs.

:func:`pipeline_value` recomputes each quantity from the eigenkets with the
Born rule.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from . import spin_ops
from .kinematics import (
    DimensionlessMomentum,
    DimensionlessVelocity,
    DomainError,
    energy,
    momentum_from_velocity,
)
from .spin_ops import Axis, FiberMismatchError, SpinState

TRANSVERSE_TOL = 1e-12


class Observable(str, enum.Enum):
    SIGMA = "sigma"
    V = "v"


@dataclass(frozen=True)
class InputKind:
    """Prepared input: ``|p, m^axis=+1/2>_B`` or ``|p, +s_p^axis>_Sigma``."""

    intrinsic: bool
    axis: Axis

    @classmethod
    def wigner_up(cls, axis) -> "InputKind":
        return cls(False, Axis.parse(axis))

    @classmethod
    def intrinsic_up(cls, axis) -> "InputKind":
        return cls(True, Axis.parse(axis))


@dataclass(frozen=True)
class MeasurementOutcome:
    eigenvalue: float
    probability: float
    post_state: SpinState
    degenerate: bool = False


def prepare(kind: InputKind, p: DimensionlessMomentum) -> SpinState:
    if kind.intrinsic:
        return spin_ops.sigma_eigenstate(p, kind.axis, +1).state
    return spin_ops.wigner_state(p, kind.axis, +1)


def born_probability(state: SpinState, eigenstate: SpinState) -> float:
    """``|<eigenstate|state>|^2``; both kets must sit on the same momentum fiber.

    The overlap is divided by both squared norms. For unit kets this is the
    same quantity, but it cancels rounding in amplitudes such as ``1/sqrt(2)``
    so that e.g. an equal superposition gives exactly ``0.5``.
    """
    if state.base != eigenstate.base:
        raise FiberMismatchError(
            f"states live on different fibers: {state.base} vs {eigenstate.base}"
        )
    amp = eigenstate.amp_up.conjugate() * state.amp_up + eigenstate.amp_down.conjugate() * state.amp_down
    return (amp.real**2 + amp.imag**2) / (_norm2(state) * _norm2(eigenstate))


def _norm2(s: SpinState) -> float:
    u, d = s.amp_up, s.amp_down
    return u.real**2 + u.imag**2 + d.real**2 + d.imag**2


def measure(state: SpinState, observable, axis) -> list[MeasurementOutcome]:
    """Outcomes for the positive then negative eigenvalue branch."""
    obs = Observable(getattr(observable, "value", str(observable).lower()))
    outcomes = []
    for pair in spin_ops.eigenpairs(state.base, obs.value, axis):
        outcomes.append(
            MeasurementOutcome(
                pair.value, born_probability(state, pair.state), pair.state, pair.degenerate
            )
        )
    return outcomes


def prob_eq4(p: DimensionlessMomentum) -> float:
    """Probability of ``-s_p^3`` when measuring Sigma^3 on ``|p, m3=+1/2>_B``.

    ``(E - 2s)`` and ``(2s - 1)`` are rewritten as ``p3^2/(E + 2s)`` and
    ``rho^2/(2s + 1)``, which is exact algebra and keeps full relative
    precision for slow particles.
    """
    rho2 = p.p1 * p.p1 + p.p2 * p.p2
    e = energy(p)
    s = 0.5 * math.sqrt(1.0 + rho2)
    e_minus_2s = p.p3 * p.p3 / (e + 2.0 * s)
    two_s_minus_1 = rho2 / (2.0 * s + 1.0)
    return 0.25 * e_minus_2s * two_s_minus_1 / (s * (1.0 + e))


def discrepancy_eq5(v: DimensionlessVelocity) -> float:
    inv_gamma = math.sqrt(1.0 - (v.v1**2 + v.v2**2 + v.v3**2))
    return -0.5 * v.v3 * v.v1 / ((inv_gamma + 1.0) * math.sqrt(1.0 - v.v3**2))


def discrepancy_eq6(v: DimensionlessVelocity) -> float:
    return -0.5 * v.v3 * v.v1 / (math.sqrt(1.0 - v.v1**2) * math.sqrt(1.0 - v.v3**2))


def _transverse(v: DimensionlessVelocity) -> float:
    rho = v.rho
    if rho <= TRANSVERSE_TOL:
        raise DomainError("V^3 is degenerate without transverse velocity; direction undefined")
    return rho


def prob_eq7(v: DimensionlessVelocity) -> float:
    return 0.5 * (1.0 - v.v2 / _transverse(v))


def prob_eq8(v: DimensionlessVelocity) -> float:
    rho = _transverse(v)
    prob = 0.5 * (1.0 - v.v2 / (rho * math.sqrt(1.0 - v.v1**2)))
    if not -1e-15 <= prob <= 1.0 + 1e-15:
        raise DomainError(f"probability {prob} outside [0, 1]")
    return prob


FORMULAS = ("eq4", "eq5", "eq6", "eq7", "eq8")


def closed_form(formula: str, v: DimensionlessVelocity) -> float:
    """Closed-form value of ``formula`` at velocity ``v``."""
    if formula == "eq4":
        return prob_eq4(momentum_from_velocity(v))
    fn = {
        "eq5": discrepancy_eq5,
        "eq6": discrepancy_eq6,
        "eq7": prob_eq7,
        "eq8": prob_eq8,
    }.get(formula)
    if fn is None:
        raise ValueError(f"unknown formula {formula!r}")
    return fn(v)


# formula -> (input kind, observable, branch, offset subtracted from probability)
PIPELINES = {
    "eq4": (InputKind.wigner_up(Axis.Z), Observable.SIGMA, -1, 0.0),
    "eq5": (InputKind.wigner_up(Axis.X), Observable.SIGMA, +1, 0.5),
    "eq6": (InputKind.intrinsic_up(Axis.X), Observable.SIGMA, +1, 0.5),
    "eq7": (InputKind.wigner_up(Axis.X), Observable.V, +1, 0.0),
    "eq8": (InputKind.intrinsic_up(Axis.X), Observable.V, +1, 0.0),
}


def pipeline_value(formula: str, v: DimensionlessVelocity) -> float:
    """Same quantity as :func:`closed_form`, from eigenkets and the Born rule."""
    try:
        kind, obs, branch, offset = PIPELINES[formula]
    except KeyError:
        raise ValueError(f"unknown formula {formula!r}") from None
    p = momentum_from_velocity(v)
    if obs is Observable.V:
        _transverse(v)
    state = prepare(kind, p)
    outcomes = measure(state, obs, Axis.Z)
    chosen = outcomes[0] if branch > 0 else outcomes[1]
    return chosen.probability - offset

