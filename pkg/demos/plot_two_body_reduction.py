"""
Two particles: center of mass and relative motion
=================================================

Two massive particles under constant forces ``f1`` and ``f2``.  The
barycenter coordinates split the motion into a center of mass accelerated by
``f = f1 + f2`` and a fictitious particle of reduced mass ``mu`` accelerated
by ``phi``.  With opposite forces the center of mass moves on a straight line.
"""

import matplotlib.pyplot as plt
import numpy as np

from galilei1d import twobody as tb

##############################################################################
# Decompose a state.

iso = tb.TwoBodySystem(m1=1.0, m2=3.0, f1=2.0, f2=-2.0)
s = tb.ProductState(p1=2.0, q1=4.0, p2=2.0, q2=0.0)
b = tb.to_barycenter(iso, s)
print(tb.derive_params(iso))
print(b)
print("isolated:", tb.is_isolated(iso))
print(tb.energy(iso, b))

##############################################################################
# Compare an isolated and a non-isolated system from the same start.

driven = tb.TwoBodySystem(m1=1.0, m2=3.0, f1=3.0, f2=1.0)
fig, axes = plt.subplots(1, 2, figsize=(9, 3.5), sharex=True)
for sys, label in ((iso, "f = 0"), (driven, "f = 4")):
    rows = tb.trajectory(sys, b, 5.0, 100)
    t = np.array([r.t for r in rows])
    axes[0].plot(t, [r.state.q for r in rows], label=label)
    axes[1].plot(t, [r.state.rho for r in rows], label=label)
    energies = np.array([r.momenta.jE for r in rows])
    print(f"{label}: energy spread {np.ptp(energies):.3e}")
axes[0].set_title("center of mass q(t)")
axes[1].set_title("relative position rho(t)")
for ax in axes:
    ax.set_xlabel("t")
    ax.legend()
fig.tight_layout()

##############################################################################
# The internal group keeps the center of mass at rest at the origin.

g1, g2 = tb.internal_group_element(driven, r=4.0, t=2.0, u=8.0)
origin = tb.BarycenterState(0.0, 0.0, 1.5, -2.0)
moved = tb.to_barycenter(driven, tb.product_act(driven, g1, g2, tb.from_barycenter(driven, origin)))
print(g1, g2)
print(moved)

plt.show()
