"""Intrinsic relativistic spin observables of a massive spin-1/2 particle.

Operators and closed-form spectra live in :mod:`relspin.spin_ops`, projective
measurement probabilities in :mod:`relspin.measurement`, the independent
eigen-decomposition check in :mod:`relspin.oracle`, and sampled maps in
:mod:`relspin.figures`.
"""

from .kinematics import (
    DimensionlessMomentum,
    DimensionlessVelocity,
    DomainError,
    energy,
    lorentz_factor,
    momentum_from_velocity,
    velocity_from_momentum,
)
from .measurement import (
    InputKind,
    MeasurementOutcome,
    Observable,
    born_probability,
    discrepancy_eq5,
    discrepancy_eq6,
    measure,
    prepare,
    prob_eq4,
    prob_eq7,
    prob_eq8,
)
from .oracle import EigenSystem2, eigh2, oracle_probability
from .spin_ops import (
    Axis,
    EigenPair,
    HermitianOp2,
    SpinState,
    Unit,
    basis_change,
    sigma_eigenstate,
    sigma_eigenvalue,
    sigma_op,
    v_eigenstate,
    v_eigenvalue,
    v_op,
    wigner_spin_op,
)

__version__ = "0.1.0"
