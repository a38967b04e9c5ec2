"""Dimensionless relativistic kinematics (c = 1, momenta in units of mc)."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: Velocities with norm at or above this value are rejected.
LIGHT_CONE_MARGIN = 1e-12
MAX_SPEED = 1.0 - LIGHT_CONE_MARGIN


class DomainError(ValueError):
    """Raised when an input lies outside the physical domain of a formula."""


@dataclass(frozen=True)
class DimensionlessVelocity:
    """Velocity in units of c. Construction fails unless ``|v| < 1 - 1e-12``."""

    v1: float
    v2: float
    v3: float

    def __post_init__(self):
        comps = (float(self.v1), float(self.v2), float(self.v3))
        if not all(math.isfinite(c) for c in comps):
            raise DomainError(f"non-finite velocity {comps}")
        if math.sqrt(comps[0] ** 2 + comps[1] ** 2 + comps[2] ** 2) >= MAX_SPEED:
            raise DomainError(f"velocity {comps} is not strictly subluminal")
        object.__setattr__(self, "v1", comps[0])
        object.__setattr__(self, "v2", comps[1])
        object.__setattr__(self, "v3", comps[2])

    @classmethod
    def of(cls, vec) -> "DimensionlessVelocity":
        v1, v2, v3 = (float(x) for x in vec)
        return cls(v1, v2, v3)

    def as_array(self) -> np.ndarray:
        return np.array([self.v1, self.v2, self.v3])

    @property
    def norm(self) -> float:
        return math.sqrt(self.v1**2 + self.v2**2 + self.v3**2)

    @property
    def rho(self) -> float:
        """Speed transverse to the z-axis."""
        return math.hypot(self.v1, self.v2)


@dataclass(frozen=True)
class DimensionlessMomentum:
    """Momentum in units of mc."""

    p1: float
    p2: float
    p3: float

    def __post_init__(self):
        comps = (float(self.p1), float(self.p2), float(self.p3))
        if not all(math.isfinite(c) for c in comps):
            raise DomainError(f"non-finite momentum {comps}")
        object.__setattr__(self, "p1", comps[0])
        object.__setattr__(self, "p2", comps[1])
        object.__setattr__(self, "p3", comps[2])

    @classmethod
    def of(cls, vec) -> "DimensionlessMomentum":
        p1, p2, p3 = (float(x) for x in vec)
        return cls(p1, p2, p3)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.p1, self.p2, self.p3)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple())

    @property
    def norm(self) -> float:
        return math.sqrt(self.p1**2 + self.p2**2 + self.p3**2)


REST = DimensionlessMomentum(0.0, 0.0, 0.0)


def lorentz_factor(v: DimensionlessVelocity) -> float:
    return 1.0 / math.sqrt(1.0 - (v.v1**2 + v.v2**2 + v.v3**2))


def momentum_from_velocity(v: DimensionlessVelocity) -> DimensionlessMomentum:
    g = lorentz_factor(v)
    return DimensionlessMomentum(g * v.v1, g * v.v2, g * v.v3)


def energy(p: DimensionlessMomentum) -> float:
    """Energy in units of mc^2, ``sqrt(1 + |p|^2)``."""
    return math.sqrt(1.0 + p.p1**2 + p.p2**2 + p.p3**2)


def velocity_from_momentum(p: DimensionlessMomentum) -> DimensionlessVelocity:
    e = energy(p)
    return DimensionlessVelocity(p.p1 / e, p.p2 / e, p.p3 / e)
