"""Instance assembly for the TSP / MaxTSP and clique / independent-set pairs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, complement, disjoint_union, edge_union
from .solutions import Tour, tour_length

__all__ = ["GadgetLayout", "tsp_maxtsp_gadget", "extract_tour", "clique_is_instance"]


@dataclass(frozen=True, eq=False)
class GadgetLayout:
    """Gadget graph plus the half-open vertex ranges of its three blocks."""

    graph: Graph
    base_n: int

    @property
    def blocks(self) -> dict[str, tuple[int, int]]:
        n = self.base_n
        return {"graph": (0, n), "complement": (n, 2 * n), "clique": (2 * n, 3 * n - 1)}

    def sidecar(self) -> dict:
        return {"base_n": self.base_n, "blocks": {k: list(v) for k, v in self.blocks.items()}}


def tsp_maxtsp_gadget(g: Graph) -> GadgetLayout:
    """``3n - 1`` vertices: a copy of ``g``, a copy of its complement and an
    ``(n - 1)``-clique completely joined to the complement copy."""
    n = g.n
    if n < 2:
        raise ValueError("gadget needs a graph with at least 2 vertices")
    parts = disjoint_union(disjoint_union(g, complement(g)), Graph.from_edges(n - 1, _clique_pairs(n - 1)))
    join = np.array([(c, x) for c in range(2 * n, 3 * n - 1) for x in range(n, 2 * n)], dtype=np.int64)
    e = np.concatenate([parts.edges(), join])
    h = Graph._from_pairs(3 * n - 1, np.minimum(e[:, 0], e[:, 1]), np.maximum(e[:, 0], e[:, 1]))
    return GadgetLayout(h, n)


def _clique_pairs(n: int):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def extract_tour(layout: GadgetLayout, order, g: Graph, objective: str = "min") -> Tour:
    """Tour of ``g`` read off a gadget tour.

    A short gadget tour follows edges inside the copy of ``g``; a long one
    follows non-edges inside the complement copy, which are again edges of
    ``g``. So ``"min"`` reads the order of the ``g`` block, ``"max"`` the
    order of the complement block and ``"best"`` keeps the shorter of both.
    """
    if g.n != layout.base_n:
        raise ValueError("base graph does not match the gadget")
    if objective == "best":
        a = extract_tour(layout, order, g, "min")
        b = extract_tour(layout, order, g, "max")
        return a if a.length <= b.length else b
    try:
        block = {"min": "graph", "max": "complement"}[objective]
    except KeyError:
        raise ValueError("objective must be 'min', 'max' or 'best'") from None
    lo, hi = layout.blocks[block]
    order = np.asarray(order, dtype=np.int64)
    sub = order[(order >= lo) & (order < hi)] - lo
    if len(sub) != layout.base_n or len(np.unique(sub)) != layout.base_n:
        raise ValueError(f"gadget tour does not visit every vertex of the {block} block once")
    return Tour(sub, tour_length(g, sub))


def clique_is_instance(g: Graph, h) -> Graph:
    """Disjoint union of ``g`` with extra edges ``h`` and the complement of
    that union (``2n`` vertices). ``h`` may be a Graph or a RamseyGraph."""
    hg = getattr(h, "graph", h)
    if g.n != hg.n:
        raise ValueError(f"size mismatch: {g.n} vs {hg.n} vertices")
    u = edge_union(g, hg)
    return disjoint_union(u, complement(u))
