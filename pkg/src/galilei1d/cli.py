"""Command line front end.

Subcommands: ``simulate``, ``verify``, ``decompose``, ``momentum``, ``info``.

Exit codes: 0 success, 1 a verification check failed, 2 bad arguments or
malformed scenario, 3 scenario violates a constraint (e.g. ``m <= 0``).
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Sequence

import numpy as np

from . import __version__
from . import twobody as tb
from . import verify
from .orbits import PQState, SpacetimeOrbit, evolve as orbit_evolve
from .scenario import Scenario, ScenarioConstraintError, ScenarioFormatError, load_scenario

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONSTRAINT = 0, 1, 2, 3


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def trajectory_table(sc: Scenario) -> tuple[list[str], list[list[float]]]:
    """Header and rows of the sampled motion of a scenario."""
    if sc.kind == "two_body":
        header = ["t", "p", "q", "pi", "rho", "p1", "q1", "p2", "q2", "jP_cm", "jK_cm", "jP_int", "jK_int", "jE"]
        rows = []
        for t, b, mom in tb.trajectory(sc.model, sc.state, sc.t_end, sc.n_steps):
            ps = tb.from_barycenter(sc.model, b)
            rows.append([t, *b.as_array(), *ps.as_array(), *mom.as_array()])
        return header, rows

    orbit = sc.model
    if isinstance(orbit, SpacetimeOrbit):
        header = ["t", "tau", "q", "jK", "jP", "jE", "K"]
    else:
        header = ["t", "p", "q", "jK", "jP", "jE", "U"]
    rows = []
    for t in np.linspace(0.0, sc.t_end, sc.n_steps + 1):
        s = sc.state if t == 0 else orbit_evolve(orbit, sc.state, float(t))
        mom = orbit.momentum(s)
        rows.append([float(t), *s.as_array(), *mom.as_array(), orbit.casimir(mom)])
    return header, rows


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _load(path) -> Scenario:
    try:
        return load_scenario(path)
    except OSError as exc:
        raise ScenarioFormatError(f"cannot read scenario {path}: {exc.strerror}") from exc


def cmd_simulate(args) -> int:
    sc = _load(args.scenario)
    header, rows = trajectory_table(sc)
    with _output(args.out) as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(fmt(v) for v in row) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify.run_all(seed=args.seed, trials=args.trials, tolerance_override=args.tolerance_override)
    with _output(args.out) as fh:
        fh.write(report.to_text())
    if args.out not in (None, "-"):
        print(f"overall, {'PASS' if report.passed else 'FAIL'}")
    return EXIT_OK if report.passed else EXIT_FAIL


def _print_pairs(pairs):
    for key, value in pairs:
        if isinstance(value, bool):
            print(f"{key} = {str(value).lower()}")
        else:
            print(f"{key} = {fmt(value)}")


def cmd_decompose(args) -> int:
    sc = _load(args.scenario)
    if sc.kind != "two_body":
        raise ScenarioFormatError(f"decompose needs a two_body scenario, got kind {sc.kind!r}")
    b, pr = sc.state, tb.derive_params(sc.model)
    _print_pairs(
        [
            ("p", b.p),
            ("q", b.q),
            ("pi", b.pi),
            ("rho", b.rho),
            ("m", pr.m),
            ("mu", pr.mu),
            ("f", pr.f),
            ("phi", pr.phi),
            ("isolated", tb.is_isolated(sc.model)),
        ]
    )
    return EXIT_OK


def cmd_momentum(args) -> int:
    sc = _load(args.scenario)
    if sc.kind == "two_body":
        mom = tb.momenta(sc.model, sc.state)
        e = tb.energy(sc.model, sc.state)
        o1, o2 = sc.model.orbits()
        ps = sc.product_state
        u1 = o1.casimir(o1.momentum(PQState(ps.p1, ps.q1)))
        u2 = o2.casimir(o2.momentum(PQState(ps.p2, ps.q2)))
        pairs = [
            ("jP_cm", mom.jP_cm),
            ("jK_cm", mom.jK_cm),
            ("jP_int", mom.jP_int),
            ("jK_int", mom.jK_int),
            ("jE", mom.jE),
            ("T", e.kinetic),
            ("V", e.potential),
            ("U1", u1),
            ("U2", u2),
        ]
    else:
        orbit = sc.model
        mom = orbit.momentum(sc.state)
        label = "K" if isinstance(orbit, SpacetimeOrbit) else "U"
        pairs = [("jK", mom.jK), ("jP", mom.jP), ("jE", mom.jE), (label, orbit.casimir(mom))]
    _print_pairs(pairs)
    return EXIT_OK


def cmd_info(args) -> int:
    print(f"galilei1d {__version__}")
    print(f"default_seed = {verify.DEFAULT_SEED}")
    print(f"default_trials = {verify.DEFAULT_TRIALS}")
    for key, value in verify.DEFAULT_TOLERANCES.items():
        print(f"tolerance.{key} = {value:g}")
    print(f"fd_step = {verify.FD_REL_STEP:g} * max(1, |x|)")
    print(f"fd2_step = {verify.FD2_REL_STEP:g} * max(1, |t|)")
    print(f"isolation_rtol = {tb.ISOLATION_RTOL:g}")
    return EXIT_OK


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _seed(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be in [0, 2**64), got {value}")
    return value


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0 or value == float("inf"):
        raise argparse.ArgumentTypeError(f"must be a positive finite number, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="galilei1d", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="write the trajectory of a scenario as CSV")
    p.add_argument("scenario")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="run the randomized verification suite")
    p.add_argument("--seed", type=_seed, default=verify.DEFAULT_SEED)
    p.add_argument("--trials", type=_positive_int, default=verify.DEFAULT_TRIALS)
    p.add_argument("--out", default=None, help="report file (default: stdout)")
    p.add_argument("--tolerance-override", type=_positive_float, default=None, help="use this tolerance for every check")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="barycenter coordinates of a two_body scenario")
    p.add_argument("scenario")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("momentum", help="momentum components and Casimirs of a scenario")
    p.add_argument("scenario")
    p.set_defaults(func=cmd_momentum)

    p = sub.add_parser("info", help="version and default tolerances")
    p.set_defaults(func=cmd_info)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except ScenarioFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ScenarioConstraintError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
