"""The 1+1 dimensional Galilei group, its coadjoint orbits and two-body reduction."""

__version__ = "0.1.0"

from .group import IDENTITY, Generator, GroupElement, compose, exp_generator, inverse
from .orbits import (
    ForcedMassiveOrbit,
    FreeMassiveOrbit,
    Momentum,
    PQState,
    PQTangent,
    SpacetimeOrbit,
    TauQState,
    TauQTangent,
    act,
    act_forced,
    act_free,
    act_spacetime,
    casimir,
    hamiltonian_field,
    momentum,
    symplectic_pairing,
)
from .twobody import (
    BarycenterGroupElement,
    BarycenterState,
    DerivedParams,
    ProductState,
    TwoBodyMomentum,
    TwoBodySystem,
)
