"""Seeded instance families for batch runs."""

from __future__ import annotations

import numpy as np

from . import generators
from .graph import Graph, disjoint_union

__all__ = ["FAMILIES", "generate"]


def _cliques(n: int, rng: np.random.Generator) -> Graph:
    sizes = []
    left = n
    while left:
        s = int(rng.integers(1, left + 1))
        sizes.append(s)
        left -= s
    return generators.disjoint_cliques(sizes)


def _random(n: int, rng: np.random.Generator) -> Graph:
    p = float(rng.uniform(0.05, 0.95))
    return generators.random_graph(n, p, seed=int(rng.integers(2**63)))


def _paths(n: int, rng: np.random.Generator) -> Graph:
    # random vertex-disjoint paths under a random relabeling
    cuts = np.sort(rng.choice(np.arange(1, n), size=int(rng.integers(0, max(n - 1, 1))), replace=False)) if n > 1 else []
    bounds = [0, *list(np.asarray(cuts).tolist()), n]
    g = Graph.from_edges(0)
    for a, b in zip(bounds[:-1], bounds[1:]):
        g = disjoint_union(g, generators.path_graph(b - a))
    return g.relabel(rng.permutation(n))


FAMILIES = {"cliques": _cliques, "random": _random, "paths": _paths}


def generate(family: str, n: int, seed: int = 0, count: int = 1) -> list[Graph]:
    """``count`` graphs on ``n`` vertices; identical arguments give identical
    graphs."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    if n < 1:
        raise ValueError("n must be positive")
    rng = np.random.default_rng(seed)
    return [FAMILIES[family](n, rng) for _ in range(count)]
