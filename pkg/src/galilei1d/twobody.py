"""Two forced massive particles and their barycenter reduction.

The phase space is the product of two forced-massive orbits with
``sigma = dp1^dq1 + dp2^dq2``.  The linear change of variables

    p = p1 + p2,            pi  = (m2 p1 - m1 p2) / m,
    q = (m1 q1 + m2 q2)/m,  rho = q1 - q2

is canonical (``sigma = dp^dq + dpi^drho``) and splits the motion into a
center of mass driven by the total force ``f = f1 + f2`` and a fictitious
particle of reduced mass ``mu`` driven by the relative force
``phi = (m2 f1 - m1 f2) / m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .group import GroupElement
from .orbits import ForcedMassiveOrbit, PQState

__all__ = [
    "TwoBodySystem",
    "ProductState",
    "DerivedParams",
    "BarycenterState",
    "BarycenterGroupElement",
    "TwoBodyMomentum",
    "Energy",
    "TrajectorySample",
    "ISOLATION_RTOL",
    "derive_params",
    "to_barycenter",
    "from_barycenter",
    "barycenter_matrix",
    "product_act",
    "barycentric_act",
    "split_barycentric",
    "join_pair",
    "is_isolated",
    "internal_group_element",
    "momenta",
    "energy",
    "evolve",
    "trajectory",
]

ISOLATION_RTOL = 1e-12


def _check_finite(obj, names):
    """Coerce the named fields of a frozen dataclass to float and reject NaN/inf."""
    for name in names:
        value = float(getattr(obj, name))
        if not math.isfinite(value):
            raise ValueError(f"{type(obj).__name__}.{name} must be finite, got {value!r}")
        object.__setattr__(obj, name, value)


@dataclass(frozen=True)
class TwoBodySystem:
    m1: float
    m2: float
    f1: float = 0.0
    f2: float = 0.0

    def __post_init__(self):
        _check_finite(self, ("m1", "m2", "f1", "f2"))
        if self.m1 <= 0 or self.m2 <= 0:
            raise ValueError(f"masses must be positive, got m1={self.m1!r}, m2={self.m2!r}")

    def orbits(self) -> tuple[ForcedMassiveOrbit, ForcedMassiveOrbit]:
        return ForcedMassiveOrbit(self.m1, self.f1), ForcedMassiveOrbit(self.m2, self.f2)

    @property
    def params(self) -> DerivedParams:
        return derive_params(self)


@dataclass(frozen=True)
class ProductState:
    p1: float
    q1: float
    p2: float
    q2: float

    def __post_init__(self):
        _check_finite(self, ("p1", "q1", "p2", "q2"))

    def as_array(self):
        return np.array([self.p1, self.q1, self.p2, self.q2])

    @classmethod
    def from_array(cls, a):
        return cls(*(float(c) for c in a))


@dataclass(frozen=True)
class BarycenterState:
    p: float
    q: float
    pi: float
    rho: float

    def __post_init__(self):
        _check_finite(self, ("p", "q", "pi", "rho"))

    def as_array(self):
        return np.array([self.p, self.q, self.pi, self.rho])

    @classmethod
    def from_array(cls, a):
        return cls(*(float(c) for c in a))


@dataclass(frozen=True)
class DerivedParams:
    """Total mass ``m``, reduced mass ``mu``, total force ``f``, relative force ``phi``."""

    m: float
    mu: float
    f: float
    phi: float


@dataclass(frozen=True)
class BarycenterGroupElement:
    """An element of the subgroup of pairs sharing a common time shift.

    Stored in reduced form: center-of-mass shift ``x`` and boost ``v``,
    relative shift ``r = x1 - x2`` and relative boost ``u = v1 - v2``.
    """

    x: float = 0.0
    t: float = 0.0
    v: float = 0.0
    r: float = 0.0
    u: float = 0.0

    def __post_init__(self):
        _check_finite(self, ("x", "t", "v", "r", "u"))


@dataclass(frozen=True)
class TwoBodyMomentum:
    jP_cm: float
    jK_cm: float
    jP_int: float
    jK_int: float
    jE: float

    def as_array(self):
        return np.array([self.jP_cm, self.jK_cm, self.jP_int, self.jK_int, self.jE])


class Energy(NamedTuple):
    total: float
    kinetic: float
    potential: float


class TrajectorySample(NamedTuple):
    t: float
    state: BarycenterState
    momenta: TwoBodyMomentum


def derive_params(sys: TwoBodySystem) -> DerivedParams:
    m1, m2, f1, f2 = sys.m1, sys.m2, sys.f1, sys.f2
    m = m1 + m2
    if f2 == -f1:
        # (m2 f1 + m1 f1)/m rounds away from f1; the isolated identity is exact.
        phi = f1
    else:
        phi = (m2 * f1 - m1 * f2) / m
    return DerivedParams(m=m, mu=m1 * m2 / m, f=f1 + f2, phi=phi)


def to_barycenter(sys: TwoBodySystem, s: ProductState) -> BarycenterState:
    m1, m2 = sys.m1, sys.m2
    m = m1 + m2
    return BarycenterState(
        p=s.p1 + s.p2,
        q=(m1 * s.q1 + m2 * s.q2) / m,
        pi=(m2 * s.p1 - m1 * s.p2) / m,
        rho=s.q1 - s.q2,
    )


def from_barycenter(sys: TwoBodySystem, b: BarycenterState) -> ProductState:
    m1, m2 = sys.m1, sys.m2
    m = m1 + m2
    return ProductState(
        p1=(m1 / m) * b.p + b.pi,
        q1=b.q + (m2 / m) * b.rho,
        p2=(m2 / m) * b.p - b.pi,
        q2=b.q - (m1 / m) * b.rho,
    )


def barycenter_matrix(sys: TwoBodySystem):
    """Matrix of :func:`to_barycenter`, mapping ``(p1, q1, p2, q2)`` to ``(p, q, pi, rho)``."""
    m1, m2 = sys.m1, sys.m2
    m = m1 + m2
    return np.array(
        [
            [1.0, 0.0, 1.0, 0.0],
            [0.0, m1 / m, 0.0, m2 / m],
            [m2 / m, 0.0, -m1 / m, 0.0],
            [0.0, 1.0, 0.0, -1.0],
        ]
    )


def product_act(sys: TwoBodySystem, g1: GroupElement, g2: GroupElement, s: ProductState) -> ProductState:
    """Independent Galilei transformations of the two particles."""
    o1, o2 = sys.orbits()
    a = o1.act(g1, PQState(s.p1, s.q1))
    b = o2.act(g2, PQState(s.p2, s.q2))
    return ProductState(a.p, a.q, b.p, b.q)


def split_barycentric(sys: TwoBodySystem, gb: BarycenterGroupElement) -> tuple[GroupElement, GroupElement]:
    """Per-particle pair ``((x1, t, v1), (x2, t, v2))`` of a reduced element."""
    m1, m2 = sys.m1, sys.m2
    m = m1 + m2
    g1 = GroupElement(gb.x + (m2 / m) * gb.r, gb.t, gb.v + (m2 / m) * gb.u)
    g2 = GroupElement(gb.x - (m1 / m) * gb.r, gb.t, gb.v - (m1 / m) * gb.u)
    return g1, g2


def join_pair(sys: TwoBodySystem, g1: GroupElement, g2: GroupElement) -> BarycenterGroupElement:
    """Inverse of :func:`split_barycentric`; the pair must share its time shift."""
    if g1.t != g2.t:
        raise ValueError(f"pair does not share a time shift: t1={g1.t!r}, t2={g2.t!r}")
    m1, m2 = sys.m1, sys.m2
    m = m1 + m2
    return BarycenterGroupElement(
        x=(m1 * g1.x + m2 * g2.x) / m,
        t=g1.t,
        v=(m1 * g1.v + m2 * g2.v) / m,
        r=g1.x - g2.x,
        u=g1.v - g2.v,
    )


def barycentric_act(sys: TwoBodySystem, gb: BarycenterGroupElement, b: BarycenterState) -> BarycenterState:
    pr = derive_params(sys)
    m, mu, f, phi = pr.m, pr.mu, pr.f, pr.phi
    x, t, v, r, u = gb.x, gb.t, gb.v, gb.r, gb.u
    return BarycenterState(
        p=b.p - m * v + f * t,
        q=b.q + (b.p / m) * t + (f / m) * t * t / 2 + x - v * t,
        pi=b.pi - mu * u + phi * t,
        rho=b.rho + (b.pi / mu) * t + (phi / mu) * t * t / 2 + r - u * t,
    )


def is_isolated(params: DerivedParams | TwoBodySystem, tol: float | None = None) -> bool:
    """True when the total force vanishes, ``|f| <= tol``.

    The default tolerance is ``1e-12 * max(1, |f1| + |f2|)`` when a system is
    given and ``1e-12 * max(1, |phi|)`` for bare derived parameters.
    """
    if isinstance(params, TwoBodySystem):
        scale = abs(params.f1) + abs(params.f2)
        params = derive_params(params)
    else:
        scale = abs(params.phi)
    if tol is None:
        tol = ISOLATION_RTOL * max(1.0, scale)
    if tol < 0:
        raise ValueError(f"tolerance must be non-negative, got {tol!r}")
    return abs(params.f) <= tol


def internal_group_element(sys: TwoBodySystem, r: float, t: float, u: float) -> tuple[GroupElement, GroupElement]:
    """Element of the internal group that keeps the center of mass at ``p = q = 0``.

    For a non-isolated system the center-of-mass frame must fall with the
    total acceleration ``f/m``; for an isolated one it is inertial.
    """
    m1, m2 = sys.m1, sys.m2
    m = m1 + m2
    if is_isolated(sys):
        x0 = v0 = 0.0
    else:
        a = (sys.f1 + sys.f2) / m
        x0, v0 = a * t * t / 2, a * t
    g1 = GroupElement(x0 + (m2 / m) * r, t, v0 + (m2 / m) * u)
    g2 = GroupElement(x0 - (m1 / m) * r, t, v0 - (m1 / m) * u)
    return g1, g2


def energy(sys: TwoBodySystem, b: BarycenterState) -> Energy:
    """Energy ``T + V`` with ``T = p^2/2m + pi^2/2mu`` and ``V = -f q - phi rho``."""
    pr = derive_params(sys)
    kinetic = b.p * b.p / (2 * pr.m) + b.pi * b.pi / (2 * pr.mu)
    potential = -pr.f * b.q - pr.phi * b.rho
    return Energy(kinetic + potential, kinetic, potential)


def momenta(sys: TwoBodySystem, b: BarycenterState) -> TwoBodyMomentum:
    pr = derive_params(sys)
    return TwoBodyMomentum(
        jP_cm=b.p,
        jK_cm=pr.m * b.q,
        jP_int=b.pi,
        jK_int=pr.mu * b.rho,
        jE=energy(sys, b).total,
    )


def evolve(sys: TwoBodySystem, b: BarycenterState, t: float) -> BarycenterState:
    """Closed-form motion: the action of the pure time translation ``(0, t, 0)``."""
    return barycentric_act(sys, BarycenterGroupElement(t=t), b)


def trajectory(sys: TwoBodySystem, b0: BarycenterState, t_end: float, n_steps: int) -> list[TrajectorySample]:
    """``n_steps + 1`` evenly spaced samples of the motion on ``[0, t_end]``."""
    if int(n_steps) != n_steps or n_steps < 1:
        raise ValueError(f"n_steps must be a positive integer, got {n_steps!r}")
    if not math.isfinite(t_end):
        raise ValueError(f"t_end must be finite, got {t_end!r}")
    times = np.linspace(0.0, t_end, int(n_steps) + 1)
    out = []
    for t in times:
        b = b0 if t == 0 else evolve(sys, b0, float(t))
        out.append(TrajectorySample(float(t), b, momenta(sys, b)))
    return out
