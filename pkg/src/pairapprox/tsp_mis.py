"""Tour / independent-set pairing read off a single DFS forest.

The preorder of a DFS forest is a (1,2)-tour whose only possible cost-2
steps leave a leaf, and the leaves themselves are independent, so the tour
length ``L`` and the leaf count ``I`` satisfy ``L - I <= n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .dfs import DfsForest, dfs_forest, preorder_tour
from .graph import Graph
from .solutions import IndependentSet, PairedOutcome, PathCover, SpanningForestCert, Tour
from .thresholds import ceil_power, require_open_unit, require_positive

__all__ = [
    "TourAndSet",
    "tour_and_mis",
    "dispatch_tsp_mis",
    "pathcover_and_mis",
    "dispatch_pathcover_mis",
    "min_leaf_spanning_cert",
]


@dataclass(frozen=True, eq=False)
class TourAndSet:
    tour: Tour
    independent_set: IndependentSet
    forest: DfsForest

    @property
    def gap(self) -> int:
        """``L - I``; never exceeds ``n``."""
        return self.tour.length - len(self.independent_set)

    @property
    def hamiltonian_exception(self) -> bool:
        """The single-leaf Hamiltonian case ``L = n, I = 1``."""
        return self.tour.length == self.forest.n and len(self.independent_set) == 1

    @property
    def closing_shortcut(self) -> bool:
        """True when the step from the last leaf back to the first root is an
        edge while there are at least two leaves, which makes ``L - I < n``."""
        return len(self.independent_set) >= 2 and self.gap < self.forest.n

    def __iter__(self):
        return iter((self.tour, self.independent_set))


def tour_and_mis(g: Graph, seed=None) -> TourAndSet:
    if g.n < 1:
        raise ValueError("tour_and_mis needs at least one vertex")
    f = dfs_forest(g, seed)
    return TourAndSet(preorder_tour(f, g), IndependentSet(f.leaves), f)


def dispatch_tsp_mis(g: Graph, eps, seed=None) -> PairedOutcome:
    """Return the tour when ``L <= (1 + eps) n`` (a ``1 + eps`` approximation
    because ``L* >= n``), otherwise the leaf set, which then has more than
    ``eps * n >= eps * alpha`` vertices."""
    eps = require_positive(eps)
    res = tour_and_mis(g, seed)
    n = g.n
    threshold = n * (1 + eps)
    both = {"tour": res.tour, "independent-set": res.independent_set}
    if res.tour.length <= threshold:
        return PairedOutcome("tsp-mis", "tsp12", res.tour, threshold, 1 + eps, eps, both)
    return PairedOutcome("tsp-mis", "independent-set", res.independent_set, threshold, 1 / eps, eps, both)


def _split_preorder(f: DfsForest) -> PathCover:
    # a preorder step out of a non-leaf follows a tree edge, so cutting after
    # every leaf leaves exactly one path per leaf
    ends = np.nonzero(f.is_leaf()[f.preorder])[0]
    offsets = np.concatenate([[0], ends + 1])
    return PathCover(f.preorder, offsets)


def pathcover_and_mis(g: Graph, seed=None) -> tuple[PathCover, IndependentSet]:
    f = dfs_forest(g, seed)
    return _split_preorder(f), IndependentSet(f.leaves)


def dispatch_pathcover_mis(g: Graph, eps, seed=None, cover: str = "path-cover") -> PairedOutcome:
    """Return the leaf set when ``I >= n**(1 - eps)``, else the path cover
    (or, with ``cover="spanning-forest"``, the DFS forest as a low-leaf
    spanning structure)."""
    eps = require_open_unit(eps)
    if cover not in ("path-cover", "spanning-forest"):
        raise ValueError(f"unknown cover kind {cover!r}")
    n = g.n
    if n < 1:
        raise ValueError("dispatch needs at least one vertex")
    f = dfs_forest(g, seed)
    iset = IndependentSet(f.leaves)
    other = _split_preorder(f) if cover == "path-cover" else _spanning_cert(g, f)
    threshold = ceil_power(n, 1 - eps)
    both = {"independent-set": iset, cover: other}
    if len(iset) >= threshold:
        ratio = Fraction(n, len(iset))
        return PairedOutcome("pathcover-mis", "independent-set", iset, threshold, ratio, eps, both)
    return PairedOutcome("pathcover-mis", cover, other, threshold, Fraction(len(iset)), eps, both)


def _spanning_cert(g: Graph, f: DfsForest) -> SpanningForestCert:
    is_leaf = f.is_leaf()
    if len(f.roots) <= 1:
        per_component = (int(is_leaf.sum()),)
    else:
        # preorder lists each tree contiguously, starting at its root
        starts = np.nonzero(f.parent[f.preorder] < 0)[0]
        bounds = np.append(starts, f.n)
        leafy = is_leaf[f.preorder].astype(np.int64).cumsum()
        leafy = np.concatenate([[0], leafy])
        per_component = tuple(int(x) for x in leafy[bounds[1:]] - leafy[bounds[:-1]])
    return SpanningForestCert(f.parent, int(is_leaf.sum()), per_component)


def min_leaf_spanning_cert(g: Graph, seed=None) -> SpanningForestCert:
    """DFS tree (forest when ``g`` is disconnected) used as a spanning tree
    with few leaves; ``component_leaf_counts`` follows root order."""
    return _spanning_cert(g, dfs_forest(g, seed))
