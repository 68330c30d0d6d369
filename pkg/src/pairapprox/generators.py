"""Named graph families and seeded random instances."""

from __future__ import annotations

import itertools

import numpy as np

from .graph import Digraph, Graph, disjoint_union


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, list(itertools.combinations(range(n), 2)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with the center at vertex 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_cliques(sizes) -> Graph:
    g = empty_graph(0)
    for s in sizes:
        g = disjoint_union(g, complete_graph(s))
    return g


def random_graph(n: int, p: float, seed=None) -> Graph:
    """Erdos-Renyi ``G(n, p)``; dense enumeration, meant for modest ``n``."""
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    return Graph._from_pairs(n, iu[keep].astype(np.int64), ju[keep].astype(np.int64))


def random_graph_nm(n: int, m: int, seed=None) -> Graph:
    """Uniform graph with exactly ``m`` edges; scales to millions of edges."""
    if m > n * (n - 1) // 2:
        raise ValueError("too many edges requested")
    rng = np.random.default_rng(seed)
    codes = np.empty(0, dtype=np.int64)
    while len(codes) < m:
        need = int((m - len(codes)) * 1.1) + 16
        u = rng.integers(0, n, need, dtype=np.int64)
        v = rng.integers(0, n, need, dtype=np.int64)
        ok = u != v
        lo, hi = np.minimum(u[ok], v[ok]), np.maximum(u[ok], v[ok])
        codes = np.unique(np.concatenate([codes, lo * n + hi]))
    if len(codes) > m:
        codes = rng.choice(codes, size=m, replace=False)
    return Graph._from_pairs(n, codes // n, codes % n)


def random_connected_graph(n: int, p: float, seed=None) -> Graph:
    """``G(n, p)`` plus a random spanning tree, so the result is connected."""
    rng = np.random.default_rng(seed)
    base = random_graph(n, p, rng)
    order = rng.permutation(n)
    tree = [(int(order[i]), int(order[rng.integers(0, i)])) for i in range(1, n)]
    codes = set((min(u, v), max(u, v)) for u, v in base.edges().tolist())
    codes.update((min(u, v), max(u, v)) for u, v in tree)
    return Graph.from_edges(n, sorted(codes))


def directed_path(n: int) -> Digraph:
    return Digraph.from_arcs(n, [(i, i + 1) for i in range(n - 1)])


def directed_cycle(n: int) -> Digraph:
    if n < 2:
        raise ValueError("a directed cycle needs at least 2 vertices")
    return Digraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def complete_digraph(n: int) -> Digraph:
    return Digraph.from_arcs(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def digraph_disjoint_union(a: Digraph, b: Digraph) -> Digraph:
    arcs = np.concatenate([a.arcs(), b.arcs() + a.n])
    return Digraph.from_arcs(a.n + b.n, arcs)


def disjoint_complete_digraphs(sizes) -> Digraph:
    d = Digraph.from_arcs(0)
    for s in sizes:
        d = digraph_disjoint_union(d, complete_digraph(s))
    return d


def bidirected(g: Graph) -> Digraph:
    """Replace every undirected edge by a 2-cycle."""
    e = g.edges()
    return Digraph.from_arcs(g.n, np.concatenate([e, e[:, ::-1]]))


def random_digraph(n: int, p: float, seed=None) -> Digraph:
    rng = np.random.default_rng(seed)
    u, v = np.nonzero(rng.random((n, n)) < p)
    keep = u != v
    return Digraph.from_arcs(n, np.stack([u[keep], v[keep]], axis=1))


def random_digraph_nm(n: int, m: int, seed=None) -> Digraph:
    if m > n * (n - 1):
        raise ValueError("too many arcs requested")
    rng = np.random.default_rng(seed)
    codes = np.empty(0, dtype=np.int64)
    while len(codes) < m:
        need = int((m - len(codes)) * 1.1) + 16
        u = rng.integers(0, n, need, dtype=np.int64)
        v = rng.integers(0, n, need, dtype=np.int64)
        ok = u != v
        codes = np.unique(np.concatenate([codes, u[ok] * n + v[ok]]))
    if len(codes) > m:
        codes = np.sort(rng.choice(codes, size=m, replace=False))
    return Digraph._from_keys(n, codes)
