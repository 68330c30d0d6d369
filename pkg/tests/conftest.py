"""Shared fixtures, corpora and hypothesis strategies."""

from __future__ import annotations

import functools
import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from pairapprox import generators
from pairapprox.graph import Digraph, Graph, SetSystem


# JIT compilation on first call makes per-example timing meaningless
settings.register_profile("pairapprox", deadline=None)
settings.load_profile("pairapprox")


def from_nx(h: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(mapping), [(mapping[u], mapping[v]) for u, v in h.edges()])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges().tolist())
    return h


def to_nx_digraph(d: Digraph) -> nx.DiGraph:
    h = nx.DiGraph()
    h.add_nodes_from(range(d.n))
    h.add_edges_from(d.arcs().tolist())
    return h


@functools.lru_cache(maxsize=None)
def atlas_graphs(min_n: int = 1, max_n: int = 7, connected: bool = False) -> tuple[Graph, ...]:
    """Every graph on ``min_n..max_n`` vertices up to isomorphism (max 7)."""
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if not min_n <= n <= max_n:
            continue
        if connected and not nx.is_connected(h):
            continue
        out.append(from_nx(h))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def small_connected_corpus(target: int = 5000, seed: int = 2024) -> tuple[Graph, ...]:
    """All connected graphs on up to 7 vertices plus pairwise non-isomorphic
    seeded random connected graphs on 8..10 vertices, ``target`` in total."""
    graphs = list(atlas_graphs(1, 7, connected=True))
    rng = np.random.default_rng(seed)
    buckets: dict[str, list[nx.Graph]] = {}
    while len(graphs) < target:
        n = int(rng.integers(8, 11))
        p = float(rng.uniform(0.15, 0.85))
        g = generators.random_connected_graph(n, p, seed=int(rng.integers(2**32)))
        h = to_nx(g)
        key = f"{n}:{g.m}:" + nx.weisfeiler_lehman_graph_hash(h)
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            continue
        bucket.append(h)
        graphs.append(g)
    return tuple(graphs)


def random_graphs(count: int, n_range=(1, 60), p_range=(0.05, 0.95), seed: int = 0):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        p = float(rng.uniform(*p_range))
        yield generators.random_graph(n, p, seed=int(rng.integers(2**32)))


def random_digraphs(count: int, n_range=(1, 40), p_range=(0.02, 0.6), seed: int = 0):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        p = float(rng.uniform(*p_range))
        yield generators.random_digraph(n, p, seed=int(rng.integers(2**32)))


def structured_graphs() -> list[Graph]:
    out = [
        generators.petersen_graph(),
        generators.star_graph(5),
        generators.complete_bipartite(3, 4),
        generators.disjoint_cliques([3, 3, 2]),
    ]
    for n in (1, 2, 3, 5, 8, 13):
        out += [generators.empty_graph(n), generators.complete_graph(n), generators.path_graph(n)]
        if n >= 3:
            out.append(generators.cycle_graph(n))
    return out


@functools.lru_cache(maxsize=None)
def set_systems_upto(max_sets: int, max_elements: int) -> tuple[SetSystem, ...]:
    """Feasible set systems (no empty set, every element covered) with
    ``1..max_sets`` sets over ``1..max_elements`` elements, one per
    equivalence class under permuting sets and permuting elements."""
    out = []
    for m in range(1, max_elements + 1):
        perms = list(itertools.permutations(range(m)))
        masks = range(1, 1 << m)
        for s in range(1, max_sets + 1):
            seen = set()
            for rows in itertools.combinations_with_replacement(masks, s):
                union = 0
                for r in rows:
                    union |= r
                if union != (1 << m) - 1:
                    continue
                canon = min(
                    tuple(sorted(sum(1 << p[e] for e in range(m) if r >> e & 1) for r in rows)) for p in perms
                )
                if canon in seen:
                    continue
                seen.add(canon)
                out.append(SetSystem(s, m, [[e for e in range(m) if r >> e & 1] for r in canon]))
    return tuple(out)


# -- hypothesis strategies ---------------------------------------------------------------


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def digraphs(draw, min_n: int = 0, max_n: int = 10) -> Digraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph.from_arcs(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def set_systems(draw, max_sets: int = 5, max_elements: int = 5, feasible: bool = True) -> SetSystem:
    m = draw(st.integers(1, max_elements))
    s = draw(st.integers(1, max_sets))
    rows = [draw(st.sets(st.integers(0, m - 1), min_size=1 if feasible else 0)) for _ in range(s)]
    if feasible:
        covered = set().union(*rows)
        for e in range(m):
            if e not in covered:
                rows[draw(st.integers(0, s - 1))].add(e)
    return SetSystem(s, m, rows)


@pytest.fixture(scope="session")
def corpus_small():
    return small_connected_corpus()


# -- acceptance report -------------------------------------------------------------------

ACCEPTANCE_LINES: dict[str, str] = {}


def report(criterion: str, ok: bool, detail: str) -> None:
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES[criterion] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES, key=lambda k: (int("".join(c for c in k if c.isdigit())), k)):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
