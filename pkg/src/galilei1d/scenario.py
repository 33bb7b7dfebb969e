"""Scenario files for the command line.

A scenario is a JSON document.  Field names follow the domain types::

    {
      "kind": "two_body",
      "system": {"m1": 1, "m2": 3, "f1": 2, "f2": -2},
      "state": {"p1": 2, "q1": 4, "p2": 2, "q2": 0},
      "t_end": 1,
      "n_steps": 1
    }

``kind`` is one of ``single_forced`` (orbit ``{"m", "f", "U"}``, state
``{"p", "q"}``), ``single_free`` (orbit ``{"m", "U"}``, state ``{"p", "q"}``),
``single_spacetime`` (orbit ``{"f", "K"}``, state ``{"tau", "q"}``) or
``two_body``, whose state may be given either as a product state
``{"p1", "q1", "p2", "q2"}`` or as a barycenter state ``{"p", "q", "pi", "rho"}``.
``U`` and ``K`` default to zero.
"""

from __future__ import annotations

import json
import math
import numbers
from dataclasses import dataclass
from typing import Any

from . import twobody as tb
from .orbits import ForcedMassiveOrbit, FreeMassiveOrbit, PQState, SpacetimeOrbit, TauQState

KINDS = ("single_forced", "single_free", "single_spacetime", "two_body")


class ScenarioFormatError(ValueError):
    """The document is not a well-formed scenario (missing or mistyped field)."""


class ScenarioConstraintError(ValueError):
    """The scenario is well formed but violates a physical constraint."""


@dataclass(frozen=True)
class Scenario:
    kind: str
    model: Any  # an orbit or a TwoBodySystem
    state: Any  # PQState, TauQState or BarycenterState
    t_end: float
    n_steps: int
    product_state: tb.ProductState | None = None


def _number(doc: dict, key: str, where: str, default=None) -> float:
    if key not in doc:
        if default is not None:
            return default
        raise ScenarioFormatError(f"missing field {where}.{key}")
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise ScenarioFormatError(f"field {where}.{key} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ScenarioConstraintError(f"field {where}.{key} must be finite, got {value!r}")
    return value


def _section(doc: dict, key: str) -> dict:
    if key not in doc:
        raise ScenarioFormatError(f"missing field {key}")
    if not isinstance(doc[key], dict):
        raise ScenarioFormatError(f"field {key} must be an object")
    return doc[key]


def parse_scenario(doc: Any) -> Scenario:
    if not isinstance(doc, dict):
        raise ScenarioFormatError("scenario must be a JSON object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ScenarioFormatError(f"field kind must be one of {', '.join(KINDS)}, got {kind!r}")

    t_end = _number(doc, "t_end", "scenario", default=0.0)
    n_steps = doc.get("n_steps", 1)
    if isinstance(n_steps, bool) or not isinstance(n_steps, int):
        raise ScenarioFormatError(f"field scenario.n_steps must be an integer, got {n_steps!r}")
    if n_steps < 1:
        raise ScenarioConstraintError(f"field scenario.n_steps must be >= 1, got {n_steps}")

    try:
        if kind == "two_body":
            sysd = _section(doc, "system")
            model = tb.TwoBodySystem(*(_number(sysd, k, "system") for k in ("m1", "m2", "f1", "f2")))
            st = _section(doc, "state")
            if "p1" in st or "q1" in st:
                product = tb.ProductState(*(_number(st, k, "state") for k in ("p1", "q1", "p2", "q2")))
                state = tb.to_barycenter(model, product)
            else:
                state = tb.BarycenterState(*(_number(st, k, "state") for k in ("p", "q", "pi", "rho")))
                product = tb.from_barycenter(model, state)
            return Scenario(kind, model, state, t_end, n_steps, product)

        od = _section(doc, "orbit")
        st = _section(doc, "state")
        if kind == "single_forced":
            model = ForcedMassiveOrbit(_number(od, "m", "orbit"), _number(od, "f", "orbit"), _number(od, "U", "orbit", 0.0))
            state = PQState(_number(st, "p", "state"), _number(st, "q", "state"))
        elif kind == "single_free":
            model = FreeMassiveOrbit(_number(od, "m", "orbit"), _number(od, "U", "orbit", 0.0))
            state = PQState(_number(st, "p", "state"), _number(st, "q", "state"))
        else:
            model = SpacetimeOrbit(_number(od, "f", "orbit"), _number(od, "K", "orbit", 0.0))
            state = TauQState(_number(st, "tau", "state"), _number(st, "q", "state"))
        return Scenario(kind, model, state, t_end, n_steps)
    except ScenarioFormatError:
        raise
    except ValueError as exc:
        # constructors reject m <= 0, f == 0 on the spacetime orbit, ...
        raise ScenarioConstraintError(str(exc)) from exc


def load_scenario(path) -> Scenario:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ScenarioFormatError(f"{path}: not valid JSON ({exc})") from exc
    return parse_scenario(doc)
