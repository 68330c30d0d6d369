"""Directed pairings: longest path versus maximum acyclic induced subgraph,
and asymmetric (1,2)-TSP versus the same acyclic set.

Leaves of a directed DFS forest induce an acyclic sub-digraph: a leaf had
no unvisited out-neighbor when it was explored, so every arc between two
leaves points to an earlier vertex in preorder. Arcs between leaves can
exist (cross arcs), so only acyclicity is claimed, not independence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .dfs import DfsForest, deepest_path, dfs_forest_directed, preorder_tour
from .graph import Digraph
from .solutions import AcyclicSet, PairedOutcome, Path, Tour
from .thresholds import ceil_power, require_open_unit, require_positive

__all__ = ["PathAndAcyclic", "path_and_acyclic", "dispatch_directed", "asym_tour_and_acyclic", "dispatch_asym_tsp"]


@dataclass(frozen=True, eq=False)
class PathAndAcyclic:
    path: Path
    acyclic: AcyclicSet
    forest: DfsForest

    def __iter__(self):
        return iter((self.path, self.acyclic))


def _leaf_set(d: Digraph, f: DfsForest) -> AcyclicSet:
    leaves = AcyclicSet(f.leaves)
    if __debug__:
        # every arc inside the leaf set must go backwards in preorder
        pos = np.empty(d.n, dtype=np.int64)
        pos[f.preorder] = np.arange(d.n)
        a = d.arcs()
        mark = f.is_leaf()
        inner = a[mark[a[:, 0]] & mark[a[:, 1]]]
        assert np.all(pos[inner[:, 0]] > pos[inner[:, 1]]), "leaf arc points forward in preorder"
    return leaves


def path_and_acyclic(d: Digraph, seed=None) -> PathAndAcyclic:
    """Deepest root-to-leaf path ``P`` and leaf set ``A`` with ``|P| * |A| >= n``."""
    if d.n < 1:
        raise ValueError("path_and_acyclic needs at least one vertex")
    f = dfs_forest_directed(d, seed)
    return PathAndAcyclic(deepest_path(f), _leaf_set(d, f), f)


def dispatch_directed(d: Digraph, eps, seed=None) -> PairedOutcome:
    """Path if ``|P| >= n**(1 - eps)``; otherwise ``|A| >= n / |P| > n**eps``,
    which is within ``n**(1 - eps)`` of the largest acyclic set."""
    eps = require_open_unit(eps)
    res = path_and_acyclic(d, seed)
    n = d.n
    threshold = ceil_power(n, 1 - eps)
    both = {"directed-path": res.path, "acyclic-set": res.acyclic}
    if len(res.path) >= threshold:
        return PairedOutcome("path-acyclic", "directed-path", res.path, threshold, Fraction(n, len(res.path)), eps, both)
    return PairedOutcome(
        "path-acyclic", "acyclic-set", res.acyclic, threshold, Fraction(n, len(res.acyclic)), eps, both
    )


@dataclass(frozen=True, eq=False)
class TourAndAcyclic:
    tour: Tour
    acyclic: AcyclicSet
    forest: DfsForest

    def __iter__(self):
        return iter((self.tour, self.acyclic))


def asym_tour_and_acyclic(d: Digraph, seed=None) -> TourAndAcyclic:
    """Preorder tour costed by arcs (length ``<= n + |A|``) and the leaf set."""
    if d.n < 1:
        raise ValueError("asym_tour_and_acyclic needs at least one vertex")
    f = dfs_forest_directed(d, seed)
    return TourAndAcyclic(preorder_tour(f, d), _leaf_set(d, f), f)


def dispatch_asym_tsp(d: Digraph, eps, seed=None) -> PairedOutcome:
    """Acyclic set when ``|A| >= eps * n`` (a ``1/eps`` approximation),
    otherwise the tour, whose length ``<= n + |A| < (1 + eps) n``."""
    eps = require_positive(eps)
    res = asym_tour_and_acyclic(d, seed)
    n = d.n
    threshold = eps * n
    both = {"asym-tsp12": res.tour, "acyclic-set": res.acyclic}
    if len(res.acyclic) >= threshold:
        return PairedOutcome("asym-tsp-acyclic", "acyclic-set", res.acyclic, threshold, 1 / eps, eps, both)
    return PairedOutcome("asym-tsp-acyclic", "asym-tsp12", res.tour, threshold, 1 + eps, eps, both)
