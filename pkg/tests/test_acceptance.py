"""Exit criteria for the package, one test per criterion.

Each test records a ``criterion NN: PASS|FAIL`` line, shown in the terminal
summary of the pytest run.
"""

import pytest

from conftest import ACCEPTANCE_LINES
from galilei1d import cli
from galilei1d import twobody as tb
from galilei1d import verify as vf
from galilei1d.orbits import ForcedMassiveOrbit, FreeMassiveOrbit, SpacetimeOrbit

KINDS = {"forced": ForcedMassiveOrbit, "free": FreeMassiveOrbit, "spacetime": SpacetimeOrbit}
SEED = vf.DEFAULT_SEED

# extra opposite-force systems beyond the fixed panel
ISOLATED = {
    "panel": vf.PANEL["isolated"],
    "light_heavy": tb.TwoBodySystem(0.37, 5.2, -3.3, 3.3),
    "equal": tb.TwoBodySystem(2.5, 2.5, 0.1, -0.1),
    "ratio_1000": tb.TwoBodySystem(10.0, 0.01, 7.0, -7.0),
}


def spec(name, trials=1000):
    return vf.CheckSpec(name, trials=trials, seed=SEED)


def record(number, title, records, limit):
    worst = max(r.max_residual for r in records)
    ok = all(r.passed for r in records) and worst <= limit
    ACCEPTANCE_LINES.append(f"criterion {number:02d}: {'PASS' if ok else 'FAIL'}  {title}  max_residual={worst:.3e} tol={limit:g}")
    failing = [r.line() for r in records if not (r.passed and r.max_residual <= limit)]
    assert ok, failing


def test_01_group_laws():
    recs = [
        vf.check_group_associativity(spec("group.associativity", 10_000)),
        vf.check_group_identity(spec("group.identity", 10_000)),
        vf.check_group_inverse(spec("group.inverse", 10_000)),
    ]
    record(1, "group associativity/identity/inverse, 10000 trials", recs, 1e-12)


def test_02_action_homomorphism():
    recs = [vf.check_action_homomorphism(k, spec(f"{n}.action_homomorphism")) for n, k in KINDS.items()]
    record(2, "left-action law on the three orbits", recs, 1e-9)


def test_03_symplecticity():
    recs = [vf.check_action_symplectic(k, spec(f"{n}.action_symplectic")) for n, k in KINDS.items()]
    recs += [vf.check_action_symplectic(sys, spec(f"{n}.canonicity")) for n, sys in vf.PANEL.items()]
    record(3, "A^T Omega A = Omega for orbit actions and the barycenter map", recs, 1e-12)


def test_04_comomentum():
    recs = [vf.check_momentum_gradient(k, spec(f"{n}.momentum_gradient")) for n, k in KINDS.items()]
    record(4, "dJ_X = rho(X) _| sigma, 9 components", recs, 1e-6)


def test_05_generator_consistency():
    recs = [vf.check_flow_generator(k, spec(f"{n}.flow_generator")) for n, k in KINDS.items()]
    record(5, "hamiltonian field = -d/ds of the one-parameter action", recs, 1e-6)


def test_06_casimir_invariance():
    recs = [vf.check_casimir_invariance(k, spec(f"{n}.casimir")) for n, k in KINDS.items()]
    recs += [
        vf.check_casimir_invariance(ForcedMassiveOrbit(1.7, -3.2, U=2.5), spec("forced.U=2.5")),
        vf.check_casimir_invariance(FreeMassiveOrbit(0.6, U=2.5), spec("free.U=2.5")),
        vf.check_casimir_invariance(SpacetimeOrbit(2.3, K=-1.0), spec("spacetime.K=-1")),
    ]
    record(6, "U and K recovered after random actions", recs, 1e-9)


def test_07_barycenter_conjugation():
    recs = [vf.check_barycenter_conjugation(sys, spec(f"{n}.conjugation")) for n, sys in vf.PANEL.items()]
    record(7, "reduced action = conjugated product action", recs, 1e-9)


def test_08_internal_stabilizer():
    systems = dict(vf.PANEL, **{f"iso_{k}": v for k, v in ISOLATED.items()})
    assert any(tb.is_isolated(s) for s in systems.values())
    assert any(not tb.is_isolated(s) for s in systems.values())
    recs = [vf.check_internal_stabilizer(sys, spec(f"{n}.stabilizer")) for n, sys in systems.items()]
    record(8, "internal group fixes p = q = 0", recs, 1e-9)


def test_09_motion_equations_and_energy():
    motion = [vf.check_motion_equations(sys, spec(f"{n}.motion")) for n, sys in vf.PANEL.items()]
    energy = [vf.check_energy_conservation(sys, spec(f"{n}.energy")) for n, sys in vf.PANEL.items()]
    assert vf.DEFAULT_RANGES["time"] == (-10.0, 10.0)
    record(9, "q''=f/m, rho''=phi/mu, p'=f, pi'=phi (fd)", motion, 1e-6)
    record(9, "energy constant along the flow (relative)", energy, 1e-9)


def test_10_isolated_law():
    recs = []
    for name, sys in ISOLATED.items():
        pr = tb.derive_params(sys)
        assert pr.phi == sys.f1 == -sys.f2
        rel = vf.check_isolated_relative_force(sys, spec(f"{name}.phi", 1))
        assert rel.max_residual == 0
        recs.append(rel)
        recs.append(vf.check_isolated_motion(sys, spec(f"{name}.straight_line")))
    record(10, "isolated: phi = f1 exactly, p constant, q affine in t", recs, 1e-12)
    accel = [vf.check_motion_equations(sys, spec(f"{n}.motion")) for n, sys in ISOLATED.items()]
    record(10, "isolated: relative particle still accelerated", accel, 1e-6)


def test_11_cli_round_trip(data_path, tmp_path, capsys):
    traj = tmp_path / "traj.csv"
    assert cli.main(["simulate", data_path("two_body.json"), "--out", str(traj)]) == 0
    lines = traj.read_text().splitlines()
    header = lines[0].split(",")
    last = dict(zip(header, lines[-1].split(",")))
    simulate_ok = float(last["t"]) == 1.0 and last["q"] == format(2.0, ".17g")

    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    codes = (cli.main(["verify", "--out", str(a)]), cli.main(["verify", "--out", str(b)]))
    capsys.readouterr()
    verify_ok = codes == (0, 0) and a.read_bytes() == b.read_bytes()

    ok = simulate_ok and verify_ok
    ACCEPTANCE_LINES.append(
        f"criterion 11: {'PASS' if ok else 'FAIL'}  CLI simulate final q={last['q']} at t={last['t']}; verify exit codes {codes}, reproducible={a.read_bytes() == b.read_bytes()}"
    )
    assert ok
