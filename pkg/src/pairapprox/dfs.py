"""Depth-first search forests and the structure the paired results read off
them: leaves, depths, preorder and a deepest root-to-leaf path."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Digraph, Graph
from .solutions import Path, Tour

__all__ = ["DfsForest", "dfs_forest", "dfs_forest_directed", "deepest_path", "preorder_tour"]


@dataclass(frozen=True, eq=False)
class DfsForest:
    """``parent[v]`` is -1 for roots; ``leaves`` lists vertices without a tree
    child in increasing id order."""

    parent: np.ndarray
    depth: np.ndarray
    preorder: np.ndarray
    roots: np.ndarray
    leaves: np.ndarray
    directed: bool = False

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def max_depth(self) -> int:
        return int(self.depth.max()) if self.n else -1

    @property
    def height(self) -> int:
        """Vertices on a longest root-to-leaf path."""
        return self.max_depth + 1

    def is_leaf(self) -> np.ndarray:
        mask = np.zeros(self.n, dtype=bool)
        mask[self.leaves] = True
        return mask

    def __eq__(self, other):
        if not isinstance(other, DfsForest):
            return NotImplemented
        return self.directed == other.directed and all(
            np.array_equal(getattr(self, f), getattr(other, f))
            for f in ("parent", "depth", "preorder", "roots", "leaves")
        )


def _run(g: Graph | Digraph, seed, directed: bool) -> DfsForest:
    n = g.n
    if seed is None:
        parent, depth, pre, roots, has_child = _kernels.dfs_csr(
            n, g.indptr, g.indices, np.arange(n, dtype=np.int64)
        )
    else:
        # randomized policy: DFS in ascending order of a random relabeling
        rank = np.random.default_rng(seed).permutation(n).astype(np.int64)
        h = g.relabel(rank)
        p2, depth2, pre2, roots2, child2 = _kernels.dfs_csr(
            n, h.indptr, h.indices, np.arange(n, dtype=np.int64)
        )
        old = np.empty(n, dtype=np.int64)
        old[rank] = np.arange(n)
        parent = np.where(p2[rank] >= 0, old[np.maximum(p2[rank], 0)], -1)
        depth = depth2[rank]
        pre = old[pre2]
        roots = old[roots2]
        has_child = child2[rank]
    leaves = np.nonzero(~has_child)[0]
    for a in (parent, depth, pre, roots, leaves):
        a.flags.writeable = False
    return DfsForest(parent, depth, pre, roots, leaves, directed)


def dfs_forest(g: Graph, seed=None) -> DfsForest:
    """DFS forest of an undirected graph.

    With ``seed=None`` roots and neighbors are taken in ascending id order;
    an integer seed gives a reproducible random order instead.
    """
    if not isinstance(g, Graph):
        raise TypeError("dfs_forest expects a Graph; use dfs_forest_directed for a Digraph")
    return _run(g, seed, directed=False)


def dfs_forest_directed(d: Digraph, seed=None) -> DfsForest:
    """DFS forest following arc directions (tree arcs point parent -> child)."""
    if not isinstance(d, Digraph):
        raise TypeError("dfs_forest_directed expects a Digraph")
    return _run(d, seed, directed=True)


def deepest_path(f: DfsForest) -> Path:
    """Root-to-leaf path ending at the first deepest vertex in preorder."""
    if f.n == 0:
        raise ValueError("empty forest has no path")
    deepest_depth = f.depth[f.preorder]
    leaf = int(f.preorder[int(np.argmax(deepest_depth))])
    out = [leaf]
    v = leaf
    while f.parent[v] >= 0:
        v = int(f.parent[v])
        out.append(v)
    return Path(out[::-1])


def check_forest_of(f: DfsForest, g: Graph | Digraph) -> None:
    if f.n != g.n:
        raise ValueError(f"forest has {f.n} vertices but the graph has {g.n}")
    child = np.nonzero(f.parent >= 0)[0]
    if not np.all(g.has_edges(f.parent[child], child)):
        raise ValueError("forest uses a tree edge that is not in the graph")


def preorder_tour(f: DfsForest, g: Graph | Digraph) -> Tour:
    """Closed tour visiting vertices in DFS preorder, costed in the (1,2)
    metric of ``g`` (asymmetric when ``g`` is a Digraph)."""
    check_forest_of(f, g)
    if g.n == 0:
        return Tour(np.empty(0, dtype=np.int64), 0)
    costs = _kernels.cyclic_step_costs(g.indptr, g.indices, f.preorder)
    return Tour(f.preorder, int(costs.sum()))
