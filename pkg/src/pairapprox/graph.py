"""Immutable graph, digraph and set-system types plus the combinators used to
assemble reduction instances.

Adjacency is stored in CSR form (``indptr``/``indices``) with every row sorted,
so edge queries are a binary search and serialization is canonical. Vertex
ids are always ``0..n-1``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "Digraph",
    "SetSystem",
    "complement",
    "disjoint_union",
    "edge_union",
    "transpose",
]


def _as_pairs(pairs, n: int, what: str) -> np.ndarray:
    arr = np.asarray(pairs if not isinstance(pairs, np.ndarray) else pairs, dtype=np.int64)
    if arr.size == 0:
        return np.empty((0, 2), dtype=np.int64)
    arr = arr.reshape(-1, 2)
    if arr.min() < 0 or arr.max() >= n:
        bad = arr[(arr < 0).any(axis=1) | (arr >= n).any(axis=1)][0]
        raise ValueError(f"{what} ({bad[0]}, {bad[1]}) has an endpoint outside 0..{n - 1}")
    loops = arr[:, 0] == arr[:, 1]
    if loops.any():
        v = int(arr[loops][0, 0])
        raise ValueError(f"self-loop at vertex {v}")
    return arr


def _csr_from_sorted_keys(n: int, keys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    rows = keys // n if n else keys
    indices = keys % n if n else keys
    counts = np.bincount(rows, minlength=n) if n else np.zeros(0, dtype=np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr, indices.astype(np.int64, copy=False)


def _freeze(*arrays: np.ndarray) -> None:
    for a in arrays:
        a.flags.writeable = False


class _CSR:
    """Shared CSR storage for :class:`Graph` and :class:`Digraph`."""

    __slots__ = ("n", "indptr", "indices", "labels", "_keys")

    def __init__(self, n, indptr, indices, labels=None):
        self.n = int(n)
        self.indptr = indptr
        self.indices = indices
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != self.n:
                raise ValueError(f"expected {self.n} labels, got {len(labels)}")
        self.labels = labels
        self._keys = None
        _freeze(self.indptr, self.indices)

    # -- queries -----------------------------------------------------------
    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    @property
    def keys(self) -> np.ndarray:
        """Sorted ``u * n + v`` code of every stored adjacency entry."""
        if self._keys is None:
            rows = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
            self._keys = rows * self.n + self.indices
            _freeze(self._keys)
        return self._keys

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return bool(i < len(row) and row[i] == v)

    def has_edges(self, us, vs) -> np.ndarray:
        """Vectorized :meth:`has_edge` over paired arrays of endpoints."""
        codes = np.asarray(us, dtype=np.int64) * self.n + np.asarray(vs, dtype=np.int64)
        keys = self.keys
        pos = np.searchsorted(keys, codes)
        pos = np.minimum(pos, max(len(keys) - 1, 0))
        if len(keys) == 0:
            return np.zeros(codes.shape, dtype=bool)
        return keys[pos] == codes

    def out_masks(self) -> list[int]:
        """Neighbor sets as Python int bitmasks (small instances only)."""
        masks = []
        for v in range(self.n):
            m = 0
            for w in self.neighbors(v).tolist():
                m |= 1 << w
            masks.append(m)
        return masks

    def _check_vertices(self, vertices) -> np.ndarray:
        arr = np.asarray(vertices, dtype=np.int64).reshape(-1)
        if arr.size and (arr.min() < 0 or arr.max() >= self.n):
            raise ValueError("vertex id out of range")
        return arr

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.indptr, other.indptr)
            and np.array_equal(self.indices, other.indices)
            and self.labels == other.labels
        )

    def __hash__(self):
        return hash((type(self).__name__, self.n, self.indices.tobytes(), self.indptr.tobytes(), self.labels))


class Graph(_CSR):
    """Simple undirected graph on vertices ``0..n-1``.

    Build instances with :meth:`from_edges`; the CSR arrays are read-only and
    every combinator returns a new graph.
    """

    __slots__ = ()

    @classmethod
    def from_edges(cls, n: int, edges=(), labels: Sequence[str] | None = None) -> "Graph":
        """Build a graph from ``(u, v)`` pairs.

        Raises ``ValueError`` on out-of-range ids, self-loops or a pair listed
        twice (in either orientation).
        """
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        arr = _as_pairs(edges, n, "edge")
        lo = np.minimum(arr[:, 0], arr[:, 1])
        hi = np.maximum(arr[:, 0], arr[:, 1])
        codes = lo * n + hi
        uniq = np.unique(codes)
        if len(uniq) != len(codes):
            srt = np.sort(codes)
            dup = int(srt[np.nonzero(srt[1:] == srt[:-1])[0][0]])
            raise ValueError(f"duplicate edge ({dup // n}, {dup % n})")
        return cls._from_pairs(n, lo, hi, labels)

    @classmethod
    def _from_pairs(cls, n, lo, hi, labels=None) -> "Graph":
        rows = np.concatenate([lo, hi])
        cols = np.concatenate([hi, lo])
        keys = np.sort(rows * n + cols)
        indptr, indices = _csr_from_sorted_keys(n, keys)
        g = cls(n, indptr, indices, labels)
        g._keys = keys
        _freeze(keys)
        return g

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    def edges(self) -> np.ndarray:
        """``(m, 2)`` array of edges with ``u < v``, lexicographically sorted."""
        keys = self.keys
        u, v = keys // max(self.n, 1), keys % max(self.n, 1)
        keep = u < v
        return np.stack([u[keep], v[keep]], axis=1)

    def adjacency_masks(self) -> list[int]:
        return self.out_masks()

    def subgraph(self, vertices) -> "Graph":
        """Induced subgraph on ``vertices``; new id ``i`` is the i-th smallest."""
        verts = np.unique(self._check_vertices(vertices))
        pos = np.full(self.n, -1, dtype=np.int64)
        pos[verts] = np.arange(len(verts))
        e = self.edges()
        keep = (pos[e[:, 0]] >= 0) & (pos[e[:, 1]] >= 0)
        sub = pos[e[keep]]
        labels = None if self.labels is None else [self.labels[v] for v in verts.tolist()]
        return Graph._from_pairs(len(verts), sub[:, 0], sub[:, 1], labels)

    def relabel(self, new_id) -> "Graph":
        """Graph with vertex ``v`` renamed to ``new_id[v]`` (a permutation)."""
        new_id = np.asarray(new_id, dtype=np.int64)
        e = self.edges()
        a, b = new_id[e[:, 0]], new_id[e[:, 1]]
        labels = None
        if self.labels is not None:
            lab = [""] * self.n
            for v, w in enumerate(new_id.tolist()):
                lab[w] = self.labels[v]
            labels = lab
        return Graph._from_pairs(self.n, np.minimum(a, b), np.maximum(a, b), labels)

    def is_independent(self, vertices) -> bool:
        verts = self._check_vertices(vertices)
        mark = np.zeros(self.n, dtype=bool)
        mark[verts] = True
        rows = np.repeat(np.arange(self.n), self.degrees())
        return not bool(np.any(mark[rows] & mark[self.indices]))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Digraph(_CSR):
    """Simple directed graph: no self-loops, no parallel arcs.

    Antiparallel pairs ``u->v``, ``v->u`` are allowed (they encode 2-cycles).
    """

    __slots__ = ()

    @classmethod
    def from_arcs(cls, n: int, arcs=(), labels: Sequence[str] | None = None) -> "Digraph":
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        arr = _as_pairs(arcs, n, "arc")
        codes = arr[:, 0] * n + arr[:, 1]
        keys = np.sort(codes)
        if len(keys) > 1 and np.any(keys[1:] == keys[:-1]):
            dup = int(keys[np.nonzero(keys[1:] == keys[:-1])[0][0]])
            raise ValueError(f"duplicate arc ({dup // n}, {dup % n})")
        return cls._from_keys(n, keys, labels)

    @classmethod
    def _from_keys(cls, n, keys, labels=None) -> "Digraph":
        indptr, indices = _csr_from_sorted_keys(n, keys)
        d = cls(n, indptr, indices, labels)
        d._keys = keys
        _freeze(keys)
        return d

    @property
    def m(self) -> int:
        return len(self.indices)

    def arcs(self) -> np.ndarray:
        keys = self.keys
        return np.stack([keys // max(self.n, 1), keys % max(self.n, 1)], axis=1)

    def successors(self, v: int) -> np.ndarray:
        return self.neighbors(v)

    def has_arc(self, u: int, v: int) -> bool:
        return self.has_edge(u, v)

    def in_masks(self) -> list[int]:
        masks = [0] * self.n
        for u, v in self.arcs().tolist():
            masks[v] |= 1 << u
        return masks

    def reverse(self) -> "Digraph":
        a = self.arcs()
        return Digraph.from_arcs(self.n, a[:, ::-1], self.labels)

    def relabel(self, new_id) -> "Digraph":
        new_id = np.asarray(new_id, dtype=np.int64)
        a = self.arcs()
        keys = np.sort(new_id[a[:, 0]] * self.n + new_id[a[:, 1]])
        labels = None
        if self.labels is not None:
            lab = [""] * self.n
            for v, w in enumerate(new_id.tolist()):
                lab[w] = self.labels[v]
            labels = lab
        return Digraph._from_keys(self.n, keys, labels)

    def induces_acyclic(self, vertices) -> bool:
        """Kahn's algorithm on the sub-digraph induced by ``vertices``."""
        verts = np.unique(self._check_vertices(vertices))
        inside = np.zeros(self.n, dtype=bool)
        inside[verts] = True
        a = self.arcs()
        a = a[inside[a[:, 0]] & inside[a[:, 1]]]
        indeg = np.bincount(a[:, 1], minlength=self.n)
        order = np.argsort(a[:, 0], kind="stable")
        src = a[order]
        start = np.searchsorted(src[:, 0], np.arange(self.n + 1))
        queue = [v for v in verts.tolist() if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for w in src[start[v]:start[v + 1], 1].tolist():
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return seen == len(verts)

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m})"


class SetSystem:
    """Bipartite incidence structure: ``num_sets`` sets over ``num_elements``.

    ``incidence[i]`` is the sorted tuple of elements in set ``i``.
    """

    __slots__ = ("num_sets", "num_elements", "incidence")

    def __init__(self, num_sets: int, num_elements: int, incidence: Iterable[Iterable[int]] = ()):
        self.num_sets = int(num_sets)
        self.num_elements = int(num_elements)
        rows = [tuple(sorted(int(e) for e in row)) for row in incidence]
        if len(rows) > self.num_sets:
            raise ValueError(f"{len(rows)} sets given for num_sets={self.num_sets}")
        rows += [()] * (self.num_sets - len(rows))
        for i, row in enumerate(rows):
            if any(e < 0 or e >= self.num_elements for e in row):
                raise ValueError(f"set {i} has an element outside 0..{self.num_elements - 1}")
            if len(set(row)) != len(row):
                raise ValueError(f"set {i} lists an element twice")
        self.incidence = tuple(rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.incidence)

    def set_masks(self) -> list[int]:
        return [sum(1 << e for e in row) for row in self.incidence]

    def element_masks(self) -> list[int]:
        masks = [0] * self.num_elements
        for i, row in enumerate(self.incidence):
            for e in row:
                masks[e] |= 1 << i
        return masks

    def transpose(self) -> "SetSystem":
        return transpose(self)

    def is_cover(self, sets) -> bool:
        covered = set()
        for i in sets:
            if not 0 <= i < self.num_sets:
                return False
            covered.update(self.incidence[i])
        return len(covered) == self.num_elements

    def is_hitting_set(self, elements) -> bool:
        chosen = set(elements)
        if any(not 0 <= e < self.num_elements for e in chosen):
            return False
        return all(chosen.intersection(row) for row in self.incidence)

    def disjoint_union(self, other: "SetSystem") -> "SetSystem":
        off = self.num_elements
        rows = list(self.incidence) + [tuple(e + off for e in row) for row in other.incidence]
        return SetSystem(self.num_sets + other.num_sets, self.num_elements + other.num_elements, rows)

    def __eq__(self, other):
        if not isinstance(other, SetSystem):
            return NotImplemented
        return (self.num_sets, self.num_elements, self.incidence) == (
            other.num_sets,
            other.num_elements,
            other.incidence,
        )

    def __hash__(self):
        return hash((self.num_sets, self.num_elements, self.incidence))

    def __repr__(self):
        return f"SetSystem(num_sets={self.num_sets}, num_elements={self.num_elements}, size={self.size})"


def complement(g: Graph) -> Graph:
    n = g.n
    if n < 2:
        return Graph.from_edges(n, (), g.labels)
    iu, ju = np.triu_indices(n, k=1)
    present = g.has_edges(iu, ju)
    return Graph._from_pairs(n, iu[~present].astype(np.int64), ju[~present].astype(np.int64), g.labels)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """``a`` on ids ``0..a.n-1`` followed by ``b`` shifted by ``a.n``."""
    ea, eb = a.edges(), b.edges() + a.n
    e = np.concatenate([ea, eb])
    labels = None
    if a.labels is not None or b.labels is not None:
        labels = list(a.labels or [""] * a.n) + list(b.labels or [""] * b.n)
    return Graph._from_pairs(a.n + b.n, e[:, 0], e[:, 1], labels)


def edge_union(a: Graph, b: Graph) -> Graph:
    if a.n != b.n:
        raise ValueError(f"edge_union needs equal vertex counts, got {a.n} and {b.n}")
    codes = np.union1d(a.edges() @ np.array([a.n, 1]), b.edges() @ np.array([a.n, 1])) if a.n else np.empty(0, np.int64)
    n = max(a.n, 1)
    return Graph._from_pairs(a.n, codes // n, codes % n, a.labels)


def transpose(s: SetSystem) -> SetSystem:
    cols: list[list[int]] = [[] for _ in range(s.num_elements)]
    for i, row in enumerate(s.incidence):
        for e in row:
            cols[e].append(i)
    return SetSystem(s.num_elements, s.num_sets, cols)
