"""Coloring / clique-minor pairing.

The greedy min-degree coloring uses at most ``d + 1`` colors, where ``d`` is
the largest minimum degree met during removal; a clique minor is then
searched for inside the subgraph that achieved ``d``. The minor search is a
pluggable strategy. Whatever it returns is verified before it leaves this
module; the default greedy strategy certifies only a small constant lower
bound, so its size guarantee is empirical.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Protocol

import numpy as np

from .degeneracy import Peak, greedy_color_with_peak
from .graph import Graph
from .solutions import Coloring, MinorModel, PairedOutcome
from .thresholds import ceil_power, require_open_unit

__all__ = [
    "MinorStrategy",
    "GreedyBranchStrategy",
    "greedy_color_with_peak",
    "clique_minor_in_dense",
    "paired_color_minor",
    "dispatch_hadwiger",
]


class MinorStrategy(Protocol):
    def find(self, s: Graph, d: int) -> MinorModel: ...

    def lower_bound(self, d: int) -> int:
        """Branch-set count the strategy guarantees on min-degree-``d`` input."""
        ...

    def gap(self, n: int) -> Fraction:
        """Divisor applied to ``n**(1 - eps)`` in the dispatch threshold."""
        ...


class GreedyBranchStrategy:
    """Grow branch sets one at a time.

    A new branch starts at an unused seed vertex; for every existing branch
    it does not yet touch, it absorbs a shortest path of unused vertices
    ending next to that branch. Seeds touching many existing branches are
    tried first. Several starting vertices are tried and the best model
    kept. Guarantees ``min(d, 2) + 1`` branch sets: a cycle contraction is
    used as a fallback when ``d >= 2``.
    """

    def __init__(self, starts: int = 8, seed_attempts: int = 16):
        self.starts = starts
        self.seed_attempts = seed_attempts

    def lower_bound(self, d: int) -> int:
        return min(d, 2) + 1

    def gap(self, n: int) -> Fraction:
        return Fraction(1)

    def find(self, s: Graph, d: int) -> MinorModel:
        n = s.n
        if n == 0:
            return MinorModel(np.empty(0, dtype=np.int64), 0)
        adj = [s.neighbors(v).tolist() for v in range(n)]
        degree = s.degrees()
        starts = sorted(range(n), key=lambda v: (-degree[v], v))[: self.starts]
        best = None
        for start in starts:
            branch = self._grow(adj, start)
            t = int(branch.max()) + 1
            if best is None or t > best[1]:
                best = (branch, t)
        branch, t = best
        if t < self.lower_bound(d):
            branch, t = _cycle_triangle(adj, n)
        return MinorModel(branch, t)

    def _grow(self, adj, start):
        n = len(adj)
        branch = np.full(n, -1, dtype=np.int64)
        t = 0
        first = True
        while True:
            touching = np.zeros(n, dtype=np.int64)
            for v in range(n):
                if branch[v] == -1:
                    touching[v] = len({branch[w] for w in adj[v] if branch[w] >= 0})
            if first:
                candidates = [start]
                first = False
            else:
                free = [v for v in range(n) if branch[v] == -1]
                candidates = sorted(free, key=lambda v: (-touching[v], -len(adj[v]), v))[: self.seed_attempts]
            placed = False
            for seed in candidates:
                members = _extend(adj, branch, seed, t)
                if members is not None:
                    branch[members] = t
                    t += 1
                    placed = True
                    break
            if not placed:
                return branch


def _extend(adj, branch, seed, t):
    """Vertices of a new branch grown from ``seed`` touching branches
    ``0..t-1``, or None if some branch cannot be reached."""
    members = {seed}
    for j in range(t):
        if any(branch[w] == j for v in members for w in adj[v]):
            continue
        prev = {v: None for v in members}
        queue = deque(members)
        hit = None
        while queue and hit is None:
            v = queue.popleft()
            for w in adj[v]:
                if branch[w] != -1 or w in prev:
                    continue
                prev[w] = v
                if any(branch[x] == j for x in adj[w]):
                    hit = w
                    break
                queue.append(w)
        if hit is None:
            return None
        while hit is not None and hit not in members:
            members.add(hit)
            hit = prev[hit]
    return sorted(members)


def _cycle_triangle(adj, n):
    """Contract any cycle to a triangle: two cycle vertices stay singletons
    and the rest of the cycle forms the third branch set."""
    parent = [-2] * n
    depth = [0] * n
    for root in range(n):
        if parent[root] != -2:
            continue
        parent[root] = -1
        stack = [(root, iter(adj[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if parent[w] == -2:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    stack.append((w, iter(adj[w])))
                    break
                if w != parent[v] and depth[w] < depth[v] - 1:
                    cycle = [v]
                    x = v
                    while x != w:
                        x = parent[x]
                        cycle.append(x)
                    branch = np.full(n, -1, dtype=np.int64)
                    branch[cycle[0]] = 0
                    branch[cycle[1]] = 1
                    branch[cycle[2:]] = 2
                    return branch, 3
            else:
                stack.pop()
    branch = np.full(n, -1, dtype=np.int64)
    branch[0] = 0
    return branch, 1


def clique_minor_in_dense(s: Graph, d: int, strategy: MinorStrategy | None = None) -> MinorModel:
    """Clique minor inside a graph of minimum degree at least ``d``.

    The returned model is always verified; a strategy that produces an
    invalid model or misses its own lower bound raises ``RuntimeError``.
    """
    strategy = strategy or GreedyBranchStrategy()
    if d < 0:
        raise ValueError("d must be nonnegative")
    if s.n == 0 or int(s.degrees().min()) < d:
        raise ValueError(f"graph does not have minimum degree {d}")
    model = strategy.find(s, d)
    model.check(s)
    if model.t < strategy.lower_bound(d):
        raise RuntimeError(f"strategy returned K_{model.t}, below its bound {strategy.lower_bound(d)}")
    return model


@dataclass(frozen=True, eq=False)
class ColorAndMinor:
    coloring: Coloring
    minor: MinorModel
    peak: Peak

    def __iter__(self):
        return iter((self.coloring, self.minor))


def paired_color_minor(g: Graph, strategy: MinorStrategy | None = None) -> ColorAndMinor:
    """Greedy coloring with ``k <= d + 1`` colors and a verified clique minor
    of ``g`` found in the peak subgraph (branch ids refer to ``g``)."""
    if g.n == 0:
        return ColorAndMinor(Coloring(np.empty(0, np.int64)), MinorModel(np.empty(0, np.int64), 0), None)
    coloring, peak = greedy_color_with_peak(g)
    local = clique_minor_in_dense(peak.subgraph, peak.min_degree, strategy)
    branch = np.full(g.n, -1, dtype=np.int64)
    branch[peak.vertices] = local.branch
    model = MinorModel(branch, local.t)
    model.check(g)
    return ColorAndMinor(coloring, model, peak)


def _clique_lower_bound(g: Graph, model: MinorModel) -> int:
    # singleton branch sets of a clique-minor model are pairwise adjacent
    sizes = np.bincount(model.branch[model.branch >= 0], minlength=model.t)
    return max(int(np.count_nonzero(sizes == 1)), 2 if g.m else 1)


def dispatch_hadwiger(g: Graph, eps, strategy: MinorStrategy | None = None) -> PairedOutcome:
    """Minor if ``t >= n**(1 - eps) / gap(n)``, else the coloring.

    ``ratio_bound`` is what the certificates themselves justify: ``n / t``
    for the minor (no graph has a minor larger than ``K_n``) and ``k``
    divided by a clique found inside the minor model for the coloring.
    """
    eps = require_open_unit(eps, Fraction(1, 2))
    strategy = strategy or GreedyBranchStrategy()
    n = g.n
    if n < 1:
        raise ValueError("dispatch needs at least one vertex")
    res = paired_color_minor(g, strategy)
    threshold = Fraction(ceil_power(n, 1 - eps)) / strategy.gap(n)
    both = {"coloring": res.coloring, "clique-minor": res.minor}
    if res.minor.t >= threshold:
        return PairedOutcome("hadwiger", "clique-minor", res.minor, threshold, Fraction(n, res.minor.t), eps, both)
    lower = _clique_lower_bound(g, res.minor)
    return PairedOutcome(
        "hadwiger", "coloring", res.coloring, threshold, Fraction(res.coloring.num_colors, lower), eps, both
    )
