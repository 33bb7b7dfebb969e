"""
Running the verification suite
==============================

``run_all`` evaluates every identity on seeded random inputs and returns a
report.  The same seed always gives the same report.
"""

from galilei1d import verify

report = verify.run_all(seed=verify.DEFAULT_SEED, trials=200)
print(report.to_text())

##############################################################################
# Records keep the worst input, handy when a check fails.

worst = max(report, key=lambda r: r.max_residual)
print(worst.name, worst.max_residual)
print(worst.worst_input)

##############################################################################
# A single check on a chosen orbit.

from galilei1d import ForcedMassiveOrbit

rec = verify.check_casimir_invariance(ForcedMassiveOrbit(m=0.5, f=-3.0, U=2.5), verify.CheckSpec("U=2.5", trials=500))
print(rec.line())
