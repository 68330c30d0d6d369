"""Min-degree removal ordering, the greedy coloring it induces, and the
densest snapshot (largest minimum degree) seen along the way."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph
from .solutions import Coloring

__all__ = ["Peak", "greedy_color_with_peak", "degeneracy"]


@dataclass(frozen=True, eq=False)
class Peak:
    """Snapshot of the removal process where the minimum degree peaked.

    ``vertices`` are ids in the original graph; ``subgraph`` is the induced
    subgraph on them with ids renumbered in increasing order, so its vertex
    ``i`` is ``vertices[i]``.
    """

    vertices: np.ndarray
    subgraph: Graph
    min_degree: int


def _removal(g: Graph):
    order, at_removal = _kernels.min_degree_order(g.n, g.indptr, g.indices)
    return order, at_removal


def degeneracy(g: Graph) -> int:
    if g.n == 0:
        return 0
    _, at_removal = _removal(g)
    return int(at_removal.max())


def greedy_color_with_peak(g: Graph) -> tuple[Coloring, Peak]:
    """Remove a minimum-degree vertex repeatedly (ties: smallest id), then
    color in reverse removal order with the lowest free color.

    Uses at most ``d + 1`` colors where ``d`` is the peak minimum degree.
    """
    if g.n < 1:
        raise ValueError("greedy_color_with_peak needs at least one vertex")
    order, at_removal = _removal(g)
    colors = _kernels.greedy_color_reverse(g.n, g.indptr, g.indices, order)
    steps = at_removal[order]
    s = int(np.argmax(steps))
    verts = np.sort(order[s:])
    verts.flags.writeable = False
    peak = Peak(verts, g.subgraph(verts), int(steps[s]))
    return Coloring(colors), peak
