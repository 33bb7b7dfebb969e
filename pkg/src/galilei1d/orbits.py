"""Single-particle phase spaces of the 1D Galilei group.

Three kinds of coadjoint orbit, each a two-dimensional symplectic manifold:

* ``ForcedMassiveOrbit(m, f, U)`` -- a massive particle under a constant force,
  canonical chart ``(p, q)``.
* ``FreeMassiveOrbit(m, U)`` -- the force-free massive particle, chart ``(p, q)``.
* ``SpacetimeOrbit(f, K)`` -- the massless orbit, non-canonical chart
  ``(tau, q)`` with ``tau = p/f``, where the symplectic form reads
  ``f dtau ^ dq``.

Conventions
-----------
Hamiltonian vector fields satisfy ``rho(X)(s) = -d/ds|_0 act(exp(s X), s)``.
The momentum component ``J_X`` is the function with ``dJ_X = rho(X) _| sigma``
where ``(u _| sigma)(w) = sigma(u, w)``.  The printed momentum formulas
correspond to a zero Casimir; the orbit label (``U`` or ``K``) is added to
``J_E`` (massive kinds) or ``J_K`` (spacetime kind) so that :func:`casimir`
recovers it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .group import Generator, GroupElement, exp_generator

__all__ = [
    "ForcedMassiveOrbit",
    "FreeMassiveOrbit",
    "SpacetimeOrbit",
    "Orbit",
    "PQState",
    "TauQState",
    "PQTangent",
    "TauQTangent",
    "Momentum",
    "act",
    "act_forced",
    "act_free",
    "act_spacetime",
    "linear_part",
    "hamiltonian_field",
    "momentum",
    "casimir",
    "evolve",
    "symplectic_pairing",
    "symplectic_matrix",
]

# Canonical form in the (p, q) chart: sigma(u, w) = u_p w_q - u_q w_p.
OMEGA = np.array([[0.0, 1.0], [-1.0, 0.0]])


def _check_finite(obj, names):
    """Coerce the named fields of a frozen dataclass to float and reject NaN/inf."""
    for name in names:
        value = float(getattr(obj, name))
        if not math.isfinite(value):
            raise ValueError(f"{type(obj).__name__}.{name} must be finite, got {value!r}")
        object.__setattr__(obj, name, value)


@dataclass(frozen=True)
class PQState:
    p: float
    q: float

    def __post_init__(self):
        _check_finite(self, ("p", "q"))

    def as_array(self):
        return np.array([self.p, self.q])

    @classmethod
    def from_array(cls, a):
        return cls(float(a[0]), float(a[1]))


@dataclass(frozen=True)
class TauQState:
    tau: float
    q: float

    def __post_init__(self):
        _check_finite(self, ("tau", "q"))

    def as_array(self):
        return np.array([self.tau, self.q])

    @classmethod
    def from_array(cls, a):
        return cls(float(a[0]), float(a[1]))


@dataclass(frozen=True)
class PQTangent:
    dp: float
    dq: float

    def __post_init__(self):
        _check_finite(self, ("dp", "dq"))

    def as_array(self):
        return np.array([self.dp, self.dq])


@dataclass(frozen=True)
class TauQTangent:
    dtau: float
    dq: float

    def __post_init__(self):
        _check_finite(self, ("dtau", "dq"))

    def as_array(self):
        return np.array([self.dtau, self.dq])


@dataclass(frozen=True)
class Momentum:
    """Components dual to boosts (``jK``), space (``jP``) and time (``jE``) translations."""

    jK: float
    jP: float
    jE: float

    def __post_init__(self):
        _check_finite(self, ("jK", "jP", "jE"))

    def as_array(self):
        return np.array([self.jK, self.jP, self.jE])

    def component(self, X: Generator) -> float:
        if X is Generator.Boost:
            return self.jK
        if X is Generator.SpaceTranslation:
            return self.jP
        return self.jE


@dataclass(frozen=True)
class ForcedMassiveOrbit:
    m: float
    f: float = 0.0
    U: float = 0.0

    state_type = PQState
    tangent_type = PQTangent

    def __post_init__(self):
        _check_finite(self, ("m", "f", "U"))
        if self.m <= 0:
            raise ValueError(f"mass must be positive, got m={self.m!r}")

    @property
    def label(self) -> float:
        return self.U

    def act(self, g: GroupElement, s: PQState) -> PQState:
        m, f = self.m, self.f
        x, t, v = g.x, g.t, g.v
        return PQState(
            s.p - m * v + f * t,
            s.q + (s.p / m) * t + (f / m) * t * t / 2 + x - v * t,
        )

    def linear_part(self, g: GroupElement):
        return np.array([[1.0, 0.0], [g.t / self.m, 1.0]])

    def hamiltonian_field(self, X: Generator, s: PQState) -> PQTangent:
        if X is Generator.Boost:
            return PQTangent(self.m, 0.0)
        if X is Generator.SpaceTranslation:
            return PQTangent(0.0, -1.0)
        return PQTangent(-self.f, -s.p / self.m)

    def momentum(self, s: PQState) -> Momentum:
        return Momentum(self.m * s.q, s.p, s.p * s.p / (2 * self.m) - self.f * s.q + self.U)

    def casimir(self, mom: Momentum) -> float:
        q = mom.jK / self.m
        return mom.jE - mom.jP * mom.jP / (2 * self.m) + self.f * q


@dataclass(frozen=True)
class FreeMassiveOrbit:
    m: float
    U: float = 0.0

    state_type = PQState
    tangent_type = PQTangent

    def __post_init__(self):
        _check_finite(self, ("m", "U"))
        if self.m <= 0:
            raise ValueError(f"mass must be positive, got m={self.m!r}")

    @property
    def label(self) -> float:
        return self.U

    def act(self, g: GroupElement, s: PQState) -> PQState:
        m = self.m
        return PQState(s.p - m * g.v, s.q + (s.p / m) * g.t + g.x - g.v * g.t)

    def linear_part(self, g: GroupElement):
        return np.array([[1.0, 0.0], [g.t / self.m, 1.0]])

    def hamiltonian_field(self, X: Generator, s: PQState) -> PQTangent:
        if X is Generator.Boost:
            return PQTangent(self.m, 0.0)
        if X is Generator.SpaceTranslation:
            return PQTangent(0.0, -1.0)
        return PQTangent(0.0, -s.p / self.m)

    def momentum(self, s: PQState) -> Momentum:
        return Momentum(self.m * s.q, s.p, s.p * s.p / (2 * self.m) + self.U)

    def casimir(self, mom: Momentum) -> float:
        return mom.jE - mom.jP * mom.jP / (2 * self.m)


@dataclass(frozen=True)
class SpacetimeOrbit:
    f: float
    K: float = 0.0

    state_type = TauQState
    tangent_type = TauQTangent

    def __post_init__(self):
        _check_finite(self, ("f", "K"))
        if self.f == 0:
            raise ValueError("the spacetime orbit needs a nonzero force f")

    @property
    def label(self) -> float:
        return self.K

    def act(self, g: GroupElement, s: TauQState) -> TauQState:
        return TauQState(s.tau + g.t, s.q + g.v * s.tau + g.x)

    def linear_part(self, g: GroupElement):
        return np.array([[1.0, 0.0], [g.v, 1.0]])

    def hamiltonian_field(self, X: Generator, s: TauQState) -> TauQTangent:
        if X is Generator.Boost:
            return TauQTangent(0.0, -s.tau)
        if X is Generator.SpaceTranslation:
            return TauQTangent(0.0, -1.0)
        return TauQTangent(-1.0, 0.0)

    def momentum(self, s: TauQState) -> Momentum:
        f = self.f
        return Momentum(f * s.tau * s.tau / 2 + self.K, f * s.tau, -f * s.q)

    def casimir(self, mom: Momentum) -> float:
        return mom.jK - mom.jP * mom.jP / (2 * self.f)


Orbit = Union[ForcedMassiveOrbit, FreeMassiveOrbit, SpacetimeOrbit]
State = Union[PQState, TauQState]
Tangent = Union[PQTangent, TauQTangent]


def _require(orbit, kind):
    if not isinstance(orbit, kind):
        raise TypeError(f"expected {kind.__name__}, got {type(orbit).__name__}")


def act_forced(orbit: ForcedMassiveOrbit, g: GroupElement, s: PQState) -> PQState:
    _require(orbit, ForcedMassiveOrbit)
    return orbit.act(g, s)


def act_free(orbit: FreeMassiveOrbit, g: GroupElement, s: PQState) -> PQState:
    _require(orbit, FreeMassiveOrbit)
    return orbit.act(g, s)


def act_spacetime(orbit: SpacetimeOrbit, g: GroupElement, s: TauQState) -> TauQState:
    _require(orbit, SpacetimeOrbit)
    return orbit.act(g, s)


def act(orbit: Orbit, g: GroupElement, s: State) -> State:
    return orbit.act(g, s)


def linear_part(orbit: Orbit, g: GroupElement):
    """Jacobian of ``s -> act(g, s)``; every action here is affine in the state."""
    return orbit.linear_part(g)


def hamiltonian_field(orbit: Orbit, X: Generator, s: State) -> Tangent:
    return orbit.hamiltonian_field(X, s)


def momentum(orbit: Orbit, s: State) -> Momentum:
    return orbit.momentum(s)


def casimir(orbit: Orbit, mom: Momentum) -> float:
    """Internal energy ``U`` on the massive kinds, the invariant ``K`` on the spacetime kind."""
    return orbit.casimir(mom)


def evolve(orbit: Orbit, s: State, t: float) -> State:
    """Time evolution: the action of the pure time translation ``(0, t, 0)``."""
    return orbit.act(exp_generator(Generator.TimeTranslation, t), s)


def symplectic_matrix(orbit: Orbit | None = None):
    """Matrix of the symplectic form in the orbit's chart (``f * OMEGA`` in ``(tau, q)``)."""
    if isinstance(orbit, SpacetimeOrbit):
        return orbit.f * OMEGA
    return OMEGA.copy()


def symplectic_pairing(u: Tangent, w: Tangent, orbit: Orbit | None = None) -> float:
    """``sigma(u, w)``.

    In the ``(p, q)`` chart this is ``u_p w_q - u_q w_p``.  Vectors in the
    ``(tau, q)`` chart need the spacetime orbit for the factor ``f``.
    """
    if type(u) is not type(w):
        raise TypeError(f"chart mismatch: {type(u).__name__} vs {type(w).__name__}")
    if isinstance(u, PQTangent):
        return u.dp * w.dq - u.dq * w.dp
    if isinstance(u, TauQTangent):
        if not isinstance(orbit, SpacetimeOrbit):
            raise ValueError("pairing in the (tau, q) chart requires the SpacetimeOrbit")
        return orbit.f * (u.dtau * w.dq - u.dq * w.dtau)
    raise TypeError(f"not a tangent vector: {u!r}")
