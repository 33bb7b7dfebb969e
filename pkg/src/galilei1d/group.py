"""The Galilei group of one space dimension.

An element ``(x, t, v)`` is a space shift, a time shift and a boost.  The
group law is the one that turns the spacetime-orbit action

    L_(x,t,v)(tau, q) = (tau + t, q + v*tau + x)

into a *left* action, i.e. ``act(g, act(h, s)) == act(compose(g, h), s)``.
Composing two such maps by hand gives

    tau'' = tau + h.t + g.t
    q''   = q + (g.v + h.v)*tau + (g.x + h.x + g.v*h.t)

so ``compose(g, h) = (g.x + h.x + g.v*h.t, g.t + h.t, g.v + h.v)``.  The same
law makes the two massive-orbit actions left actions as well; the tests check
all three.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

__all__ = [
    "GroupElement",
    "Generator",
    "IDENTITY",
    "compose",
    "inverse",
    "exp_generator",
]


class Generator(enum.Enum):
    """Basis of the Lie algebra: boosts K, space translations P, time translations E."""

    Boost = "K"
    SpaceTranslation = "P"
    TimeTranslation = "E"


@dataclass(frozen=True)
class GroupElement:
    x: float = 0.0
    t: float = 0.0
    v: float = 0.0

    def __post_init__(self):
        for name in ("x", "t", "v"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"GroupElement.{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    def __matmul__(self, other: GroupElement) -> GroupElement:
        return compose(self, other)

    def inverse(self) -> GroupElement:
        return inverse(self)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.t, self.v)


IDENTITY = GroupElement(0.0, 0.0, 0.0)


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    """Return ``g ∘ h`` (apply ``h`` first, then ``g``)."""
    return GroupElement(g.x + h.x + g.v * h.t, g.t + h.t, g.v + h.v)


def inverse(g: GroupElement) -> GroupElement:
    return GroupElement(-g.x + g.v * g.t, -g.t, -g.v)


def exp_generator(X: Generator, s: float) -> GroupElement:
    """One-parameter subgroup ``s -> exp(s X)``.

    The group is abelian along each coordinate axis, so the exponential is the
    plain coordinate embedding.
    """
    if X is Generator.Boost:
        return GroupElement(0.0, 0.0, s)
    if X is Generator.SpaceTranslation:
        return GroupElement(s, 0.0, 0.0)
    if X is Generator.TimeTranslation:
        return GroupElement(0.0, s, 0.0)
    raise TypeError(f"unknown generator {X!r}")
