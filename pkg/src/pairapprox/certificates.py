"""JSON certificates and the standalone verifier.

A certificate is a JSON object::

    {"format": "pairapprox-certificate/1",
     "problem": "<pair or oracle name>",
     "side": "<solution kind>",
     "value": <int>,
     "witness": {...},
     "input_hash": "<sha256 of the canonical input text>",
     "optimal": false}

``side`` decides how the witness is decoded and checked (see ``KINDS``).
When ``optimal`` is true the verifier also reruns the matching exact oracle
and requires the same value.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from . import oracles
from .graph import Digraph, Graph, SetSystem
from .io import serialize
from .ramsey import verify_ramsey
from .solutions import (
    AcyclicSet,
    Coloring,
    IndependentSet,
    InvalidCertificate,
    MinorModel,
    PairedOutcome,
    Path,
    PathCover,
    SpanningForestCert,
    _require_permutation,
    tour_length,
)

__all__ = [
    "FORMAT",
    "KINDS",
    "input_hash",
    "certificate",
    "outcome_certificate",
    "verify_certificate",
    "dumps",
]

FORMAT = "pairapprox-certificate/1"


def input_hash(obj) -> str:
    return hashlib.sha256(serialize(obj).encode()).hexdigest()


def _ints(x) -> list[int]:
    return [int(v) for v in np.asarray(x).reshape(-1).tolist()]


def _field(name: str):
    # encoders take a solution object or the bare list an oracle returns
    return lambda s: {name: _ints(getattr(s, name, s))}


def _minor_witness(s) -> dict:
    branch = _ints(getattr(s, "branch", s))
    return {"branch": branch, "t": int(getattr(s, "t", max(branch, default=-1) + 1))}


# -- witness checks that have no solution class ---------------------------------


def _check_clique(g: Graph, w) -> int:
    v = w["vertices"]
    if len(set(v)) != len(v) or any(not 0 <= x < g.n for x in v):
        raise InvalidCertificate("clique lists an invalid or repeated vertex")
    for i, a in enumerate(v):
        for b in v[i + 1:]:
            if not g.has_edge(a, b):
                raise InvalidCertificate(f"clique members {a} and {b} are not adjacent")
    return len(v)


def _check_biclique(g: Graph, w) -> int:
    a, b = w["a"], w["b"]
    if len(a) != len(b):
        raise InvalidCertificate("biclique sides differ in size")
    if set(a) & set(b) or len(set(a)) != len(a) or len(set(b)) != len(b):
        raise InvalidCertificate("biclique sides overlap or repeat a vertex")
    if any(not 0 <= x < g.n for x in a + b):
        raise InvalidCertificate("biclique mentions a vertex outside the graph")
    for x in a:
        for y in b:
            if not g.has_edge(x, y):
                raise InvalidCertificate(f"biclique pair ({x}, {y}) is not an edge")
    return len(a)


def _check_cover(s: SetSystem, w) -> int:
    sets = w["sets"]
    if len(set(sets)) != len(sets) or not s.is_cover(sets):
        raise InvalidCertificate("chosen sets do not cover every element")
    return len(sets)


def _check_hit(s: SetSystem, w) -> int:
    el = w["elements"]
    if len(set(el)) != len(el) or not s.is_hitting_set(el):
        raise InvalidCertificate("chosen elements miss some set")
    return len(el)


def _check_ramsey(g: Graph, w) -> int:
    f = int(w["f"])
    rep = verify_ramsey(g, f)
    if not rep.ok:
        raise InvalidCertificate(
            f"graph has an independent set of {rep.max_independent} or a K_{{{rep.max_biclique},{rep.max_biclique}}}"
            f" (bound {f})"
        )
    return f


def _via(make: Callable[[dict], Any]):
    def run(obj, w):
        sol = make(w)
        sol.check(obj)
        return sol.value

    return run


def _tour_check(obj, w) -> int:
    order = np.asarray(w["order"], dtype=np.int64)
    _require_permutation(order, obj.n, "tour")
    return tour_length(obj, order)


# side -> (input type, encoder from solution, checker returning the value)
KINDS: dict[str, tuple[type, Callable, Callable]] = {
    "tsp12": (Graph, _field("order"), _tour_check),
    "asym-tsp12": (Digraph, _field("order"), _tour_check),
    "independent-set": (
        Graph,
        _field("vertices"),
        _via(lambda w: IndependentSet(w["vertices"])),
    ),
    "path-cover": (Graph, lambda s: {"paths": s.paths}, _via(lambda w: PathCover.from_paths(w["paths"]))),
    "spanning-forest": (
        Graph,
        lambda s: {"parent": _ints(s.parent), "leaf_count": s.leaf_count},
        _via(lambda w: SpanningForestCert(w["parent"], w["leaf_count"])),
    ),
    "coloring": (Graph, _field("colors"), _via(lambda w: Coloring(w["colors"]))),
    "longest-path": (Graph, _field("vertices"), _via(lambda w: Path(w["vertices"]))),
    "directed-path": (Digraph, _field("vertices"), _via(lambda w: Path(w["vertices"]))),
    "acyclic-set": (Digraph, _field("vertices"), _via(lambda w: AcyclicSet(w["vertices"]))),
    "clique-minor": (
        Graph,
        _minor_witness,
        _via(lambda w: MinorModel(w["branch"], w["t"])),
    ),
    "clique": (Graph, _field("vertices"), _check_clique),
    "biclique": (Graph, lambda s: {"a": _ints(s[0]), "b": _ints(s[1])}, _check_biclique),
    "set-cover": (SetSystem, _field("sets"), _check_cover),
    "hitting-set": (SetSystem, _field("elements"), _check_hit),
    "ramsey": (Graph, lambda s: {"f": int(s)}, _check_ramsey),
}

# side -> exact oracle used when a certificate claims optimality
_ORACLES: dict[str, Callable] = {
    "tsp12": lambda g, p: oracles.exact_tsp12(g, "max" if p.endswith("max") else "min"),
    "asym-tsp12": lambda g, p: oracles.exact_tsp12(g, "max" if p.endswith("max") else "min"),
    "independent-set": lambda g, p: oracles.exact_mis(g),
    "clique": lambda g, p: oracles.exact_clique(g),
    "coloring": lambda g, p: oracles.exact_chromatic(g),
    "longest-path": lambda g, p: oracles.exact_longest_path(g),
    "directed-path": lambda g, p: oracles.exact_longest_path(g),
    "acyclic-set": lambda g, p: oracles.exact_max_acyclic(g),
    "clique-minor": lambda g, p: oracles.exact_hadwiger(g),
    "biclique": lambda g, p: oracles.exact_max_balanced_biclique(g),
    "set-cover": lambda s, p: oracles.exact_cover(s),
    "hitting-set": lambda s, p: oracles.exact_hit(s),
}


def _json_number(x):
    if isinstance(x, Fraction):
        return str(x)
    return x


def certificate(problem: str, side: str, solution, obj, *, optimal: bool = False, **extra) -> dict:
    """Encode ``solution`` (of kind ``side``) for input ``obj``.

    The value is recomputed by the verifier before emission, so a
    certificate that would not verify is never produced.
    """
    try:
        kind, encode, check = KINDS[side]
    except KeyError:
        raise ValueError(f"unknown solution kind {side!r}") from None
    if not isinstance(obj, kind):
        raise TypeError(f"{side} certificates need a {kind.__name__} input, got {type(obj).__name__}")
    witness = encode(solution)
    value = check(obj, witness)
    cert = {
        "format": FORMAT,
        "problem": problem,
        "side": side,
        "value": int(value),
        "witness": witness,
        "input_hash": input_hash(obj),
        "optimal": bool(optimal),
    }
    for key, val in extra.items():
        cert[key] = _json_number(val)
    return cert


def outcome_certificate(outcome: PairedOutcome, obj) -> dict:
    return certificate(
        outcome.pair,
        outcome.side,
        outcome.payload,
        obj,
        eps=outcome.eps,
        threshold=outcome.threshold,
        ratio_bound=outcome.ratio_bound,
    )


def verify_certificate(cert: dict, obj) -> int:
    """Check ``cert`` against input ``obj``; return its value or raise
    :class:`InvalidCertificate`."""
    if not isinstance(cert, dict) or cert.get("format") != FORMAT:
        raise InvalidCertificate("not a pairapprox certificate")
    for key in ("problem", "side", "value", "witness", "input_hash"):
        if key not in cert:
            raise InvalidCertificate(f"certificate lacks field {key!r}")
    side = cert["side"]
    if side not in KINDS:
        raise InvalidCertificate(f"unknown solution kind {side!r}")
    kind, _, check = KINDS[side]
    if not isinstance(obj, kind):
        raise InvalidCertificate(f"{side} certificates apply to a {kind.__name__}, got {type(obj).__name__}")
    if cert["input_hash"] != input_hash(obj):
        raise InvalidCertificate("certificate was issued for a different input")
    try:
        value = check(obj, cert["witness"])
    except InvalidCertificate:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise InvalidCertificate(f"malformed witness: {exc}") from exc
    if value != cert["value"]:
        raise InvalidCertificate(f"witness has value {value}, certificate claims {cert['value']}")
    if cert.get("optimal"):
        if side not in _ORACLES:
            raise InvalidCertificate(f"no exact oracle for {side}")
        best = _ORACLES[side](obj, cert["problem"]).value
        if best != value:
            raise InvalidCertificate(f"claimed optimum {value}, exact optimum is {best}")
    return int(value)


def dumps(cert: dict) -> str:
    return json.dumps(cert, sort_keys=True, indent=1)
