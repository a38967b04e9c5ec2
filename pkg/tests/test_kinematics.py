import math

import pytest
from hypothesis import given

from relspin.kinematics import (
    DimensionlessMomentum,
    DimensionlessVelocity,
    DomainError,
    energy,
    lorentz_factor,
    momentum_from_velocity,
    velocity_from_momentum,
)

from .conftest import velocities


@pytest.mark.parametrize(
    "v, gamma",
    [((0, 0, 0), 1.0), ((0, 0, 0.8), 5 / 3), ((0.6, 0, 0), 1.25)],
)
def test_lorentz_factor(v, gamma):
    assert lorentz_factor(DimensionlessVelocity.of(v)) == pytest.approx(gamma, abs=1e-15)


@pytest.mark.parametrize(
    "v, p",
    [((0, 0, 0), (0, 0, 0)), ((0, 0, 0.8), (0, 0, 4 / 3)), ((0.6, 0, 0), (0.75, 0, 0))],
)
def test_momentum_velocity_pairs(v, p):
    got = momentum_from_velocity(DimensionlessVelocity.of(v))
    assert got.as_tuple() == pytest.approx(p, abs=1e-15)
    back = velocity_from_momentum(DimensionlessMomentum.of(p))
    assert (back.v1, back.v2, back.v3) == pytest.approx(v, abs=1e-15)


@pytest.mark.parametrize("p, e", [((0, 0, 0), 1.0), ((1, 1, 1), 2.0), ((0.75, 0, 0), 1.25)])
def test_energy(p, e):
    assert energy(DimensionlessMomentum.of(p)) == pytest.approx(e, abs=1e-15)


@pytest.mark.parametrize("v", [(1, 0, 0), (0.6, 0.8, 0), (0, 0, 1 - 1e-13), (2, 0, 0)])
def test_rejects_superluminal(v):
    with pytest.raises(DomainError):
        DimensionlessVelocity.of(v)


def test_rejects_non_finite_momentum():
    with pytest.raises(DomainError):
        DimensionlessMomentum(math.inf, 0, 0)


@given(velocities(0.999))
def test_round_trip(v):
    back = velocity_from_momentum(momentum_from_velocity(v))
    assert abs(back.v1 - v.v1) < 1e-12
    assert abs(back.v2 - v.v2) < 1e-12
    assert abs(back.v3 - v.v3) < 1e-12


@given(velocities(0.999))
def test_mass_shell_and_gamma(v):
    p = momentum_from_velocity(v)
    e = energy(p)
    assert abs(e * e - p.norm**2 - 1.0) < 1e-12
    assert abs(lorentz_factor(v) - e) < 1e-12
