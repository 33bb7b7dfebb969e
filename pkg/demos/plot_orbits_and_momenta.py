"""
Galilei group actions on the three orbits
=========================================

The group element ``(x, t, v)`` shifts space, shifts time and boosts.  Each
kind of particle carries its own realization of the group; this script moves
one state of each kind around, prints its momentum components, and checks that
the Casimir (the orbit label) does not move.
"""

import numpy as np

from galilei1d import (
    ForcedMassiveOrbit,
    FreeMassiveOrbit,
    Generator,
    GroupElement,
    PQState,
    SpacetimeOrbit,
    TauQState,
    casimir,
    compose,
    exp_generator,
    hamiltonian_field,
    inverse,
    momentum,
)

##############################################################################
# The group law.  ``g @ h`` applies ``h`` first.

g = GroupElement(1, 2, 3)
h = GroupElement(4, 5, 6)
print("g @ h      =", compose(g, h))
print("g^-1       =", inverse(g))
print("g @ g^-1   =", g @ inverse(g))

##############################################################################
# A massive particle under the constant force f = 4.  A time translation by
# one unit is one unit of motion: the momentum grows by f and the position
# follows the parabola.

forced = ForcedMassiveOrbit(m=2.0, f=4.0, U=2.5)
s = PQState(p=1.0, q=0.0)
print("after t=1  :", forced.act(GroupElement(t=1.0), s))
print("momentum   :", momentum(forced, s))
print("U          :", casimir(forced, momentum(forced, s)))

##############################################################################
# The Casimir stays put under arbitrary group elements.

rng = np.random.default_rng(0)
for _ in range(3):
    g = GroupElement(*rng.uniform(-10, 10, size=3))
    moved = forced.act(g, s)
    print(f"{moved!s:60}  U = {casimir(forced, momentum(forced, moved)):.15f}")

##############################################################################
# Vector fields are minus the velocity of the one-parameter subgroups.

for X in Generator:
    eps = 1e-6
    fd = -(forced.act(exp_generator(X, eps), s).as_array() - forced.act(exp_generator(X, -eps), s).as_array()) / (2 * eps)
    print(f"{X.name:17} field {hamiltonian_field(forced, X, s).as_array()}  finite difference {fd}")

##############################################################################
# The free particle and the spacetime orbit.

free = FreeMassiveOrbit(m=2.0)
print("free       :", free.act(GroupElement(1, 2, 0), PQState(4, 0)), momentum(free, PQState(4, 5)))

spacetime = SpacetimeOrbit(f=2.0, K=-1.0)
st = TauQState(tau=3.0, q=1.0)
print("spacetime  :", spacetime.act(GroupElement(1, 2, 3), TauQState(4, 5)))
print("momentum   :", momentum(spacetime, st), " K =", casimir(spacetime, momentum(spacetime, st)))
