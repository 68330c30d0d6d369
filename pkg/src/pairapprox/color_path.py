"""Coloring / long-path pairing.

Coloring a DFS forest by depth is proper because every non-tree edge of an
undirected DFS joins an ancestor to a descendant, which never share a depth.
A deepest root-to-leaf path then meets each color class exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels
from .degeneracy import greedy_color_with_peak
from .dfs import deepest_path, dfs_forest
from .graph import Graph
from .solutions import Coloring, PairedOutcome, Path
from .thresholds import ceil_power, require_open_unit

__all__ = ["ColorAndPath", "depth_color_and_path", "degeneracy_color_and_path", "dispatch_color_path"]


@dataclass(frozen=True, eq=False)
class ColorAndPath:
    coloring: Coloring
    path: Path

    def __iter__(self):
        return iter((self.coloring, self.path))


def depth_color_and_path(g: Graph, seed=None) -> ColorAndPath:
    if g.n < 1:
        raise ValueError("depth_color_and_path needs at least one vertex")
    f = dfs_forest(g, seed)
    if __debug__:
        rows = np.repeat(np.arange(g.n), g.degrees())
        assert not np.any(f.depth[rows] == f.depth[g.indices]), "DFS produced an equal-depth edge"
    return ColorAndPath(Coloring(f.depth), deepest_path(f))


def degeneracy_color_and_path(g: Graph) -> ColorAndPath:
    """Greedy min-degree coloring with ``k`` colors plus a path of at least
    ``k`` vertices found by walking inside the peak subgraph.

    The peak subgraph has minimum degree ``d >= k - 1``; a walk that always
    moves to the smallest unvisited neighbor only stops at a vertex whose
    ``d`` neighbors are all behind it, so it visits at least ``d + 1``.
    """
    coloring, peak = greedy_color_with_peak(g)
    inside = np.zeros(g.n, dtype=bool)
    inside[peak.vertices] = True
    walk = _kernels.greedy_walk(g.n, g.indptr, g.indices, inside, int(peak.vertices[0]))
    return ColorAndPath(coloring, Path(walk))


_STRATEGIES = {"depth": depth_color_and_path, "degeneracy": degeneracy_color_and_path}


def dispatch_color_path(g: Graph, eps, strategy: str = "depth") -> PairedOutcome:
    """Return the path if it has at least ``n**(1 - eps)`` vertices (ratio
    ``<= n**eps`` against a longest path), otherwise the coloring, whose color
    count is below that threshold (ratio ``< n**(1 - eps)`` against ``chi``)."""
    eps = require_open_unit(eps)
    try:
        run = _STRATEGIES[strategy]
    except KeyError:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {sorted(_STRATEGIES)}") from None
    res = run(g)
    n = g.n
    threshold = ceil_power(n, 1 - eps)
    both = {"coloring": res.coloring, "longest-path": res.path}
    if len(res.path) >= threshold:
        return PairedOutcome("color-path", "longest-path", res.path, threshold, Fraction(n, len(res.path)), eps, both)
    return PairedOutcome(
        "color-path", "coloring", res.coloring, threshold, Fraction(res.coloring.num_colors), eps, both
    )
