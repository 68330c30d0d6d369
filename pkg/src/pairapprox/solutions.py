"""Solution certificates. Each type can re-check itself against its input.

``check(g)`` raises :class:`InvalidCertificate` describing the first problem
found; it never trusts cached values such as ``Tour.length``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from . import _kernels
from .graph import Digraph, Graph

__all__ = [
    "InvalidCertificate",
    "Tour",
    "IndependentSet",
    "PathCover",
    "SpanningForestCert",
    "Coloring",
    "Path",
    "AcyclicSet",
    "MinorModel",
    "PairedOutcome",
    "tour_length",
]


class InvalidCertificate(ValueError):
    pass


def _ids(values) -> np.ndarray:
    arr = np.array(values, dtype=np.int64).reshape(-1)
    arr.flags.writeable = False
    return arr


def _require_permutation(order: np.ndarray, n: int, what: str) -> None:
    if len(order) != n:
        raise InvalidCertificate(f"{what} has {len(order)} entries for {n} vertices")
    if n and (order.min() < 0 or order.max() >= n):
        raise InvalidCertificate(f"{what} mentions a vertex outside the graph")
    if len(np.unique(order)) != n:
        raise InvalidCertificate(f"{what} repeats a vertex")


def tour_length(g: Graph | Digraph, order) -> int:
    """(1,2) length of the closed tour visiting ``order`` cyclically.

    A step costs 1 when the (arc / edge) exists and 2 otherwise; a
    one-vertex tour has length 1 so that ``n <= L <= 2n`` always holds.
    """
    order = np.asarray(order, dtype=np.int64)
    if len(order) == 0:
        return 0
    return int(_kernels.cyclic_step_costs(g.indptr, g.indices, order).sum())


@dataclass(frozen=True, eq=False)
class Tour:
    order: np.ndarray
    length: int

    def __post_init__(self):
        object.__setattr__(self, "order", _ids(self.order))
        object.__setattr__(self, "length", int(self.length))

    def check(self, g: Graph | Digraph) -> None:
        _require_permutation(self.order, g.n, "tour")
        actual = tour_length(g, self.order)
        if actual != self.length:
            raise InvalidCertificate(f"tour length is {actual}, certificate claims {self.length}")

    @property
    def value(self) -> int:
        return self.length


@dataclass(frozen=True, eq=False)
class IndependentSet:
    vertices: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "vertices", _ids(np.sort(np.asarray(self.vertices, dtype=np.int64))))

    def __len__(self):
        return len(self.vertices)

    @property
    def value(self) -> int:
        return len(self.vertices)

    def check(self, g: Graph) -> None:
        v = self.vertices
        if len(v) and (v[0] < 0 or v[-1] >= g.n):
            raise InvalidCertificate("independent set mentions a vertex outside the graph")
        if len(np.unique(v)) != len(v):
            raise InvalidCertificate("independent set repeats a vertex")
        if not g.is_independent(v):
            raise InvalidCertificate("two members of the independent set are adjacent")


@dataclass(frozen=True, eq=False)
class PathCover:
    """Vertex-disjoint paths, stored flat: path ``i`` is
    ``vertices[offsets[i]:offsets[i + 1]]``."""

    vertices: np.ndarray
    offsets: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "vertices", _ids(self.vertices))
        object.__setattr__(self, "offsets", _ids(self.offsets))

    @classmethod
    def from_paths(cls, paths) -> "PathCover":
        paths = [list(p) for p in paths]
        offsets = np.zeros(len(paths) + 1, dtype=np.int64)
        np.cumsum([len(p) for p in paths], out=offsets[1:])
        flat = [v for p in paths for v in p]
        return cls(np.asarray(flat, dtype=np.int64), offsets)

    @property
    def paths(self) -> list[list[int]]:
        flat = self.vertices.tolist()
        off = self.offsets.tolist()
        return [flat[off[i]:off[i + 1]] for i in range(len(off) - 1)]

    def __len__(self):
        return len(self.offsets) - 1

    @property
    def value(self) -> int:
        return len(self)

    def check(self, g: Graph) -> None:
        if len(self.offsets) == 0 or self.offsets[0] != 0 or self.offsets[-1] != len(self.vertices):
            raise InvalidCertificate("path offsets do not span the vertex list")
        if np.any(np.diff(self.offsets) <= 0):
            raise InvalidCertificate("path cover contains an empty path")
        _require_permutation(self.vertices, g.n, "path cover")
        step = np.ones(len(self.vertices), dtype=bool)
        step[self.offsets[1:] - 1] = False
        a = self.vertices[:-1][step[:-1]]
        b = self.vertices[1:][step[:-1]]
        if not np.all(g.has_edges(a, b)):
            raise InvalidCertificate("consecutive path vertices are not adjacent")


@dataclass(frozen=True, eq=False)
class SpanningForestCert:
    """Spanning forest given by parent pointers (-1 marks a root).

    Leaves are vertices with no child, so a root is never counted as a leaf
    unless it is isolated.
    """

    parent: np.ndarray
    leaf_count: int
    component_leaf_counts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parent", _ids(self.parent))
        object.__setattr__(self, "leaf_count", int(self.leaf_count))
        object.__setattr__(self, "component_leaf_counts", tuple(int(x) for x in self.component_leaf_counts))

    @property
    def value(self) -> int:
        return self.leaf_count

    def check(self, g: Graph) -> None:
        p = self.parent
        n = g.n
        if len(p) != n:
            raise InvalidCertificate(f"parent array has {len(p)} entries for {n} vertices")
        if n and (p.min() < -1 or p.max() >= n):
            raise InvalidCertificate("parent pointer outside the graph")
        child = np.nonzero(p >= 0)[0]
        if not np.all(g.has_edges(child, p[child])):
            raise InvalidCertificate("a parent pointer is not a graph edge")
        # every vertex must reach a root: pointer jumping, log(n) rounds
        root = p.copy()
        root[root < 0] = np.nonzero(root < 0)[0]
        for _ in range(max(1, int(np.ceil(np.log2(max(n, 2)))) + 1)):
            root = root[root]
        if n and np.any(p[root] != -1):
            raise InvalidCertificate("parent pointers contain a cycle")
        n_roots = int(np.count_nonzero(p == -1))
        if n_roots != _count_components(g):
            raise InvalidCertificate("forest does not span each connected component with one tree")
        has_child = np.zeros(n, dtype=bool)
        has_child[p[child]] = True
        leaves = int(np.count_nonzero(~has_child))
        if leaves != self.leaf_count:
            raise InvalidCertificate(f"forest has {leaves} leaves, certificate claims {self.leaf_count}")


def _count_components(g: Graph) -> int:
    roots = np.arange(g.n)
    _, _, _, r, _ = _kernels.dfs_csr(g.n, g.indptr, g.indices, roots)
    return len(r)


@dataclass(frozen=True, eq=False)
class Coloring:
    colors: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "colors", _ids(self.colors))

    @property
    def num_colors(self) -> int:
        return int(self.colors.max()) + 1 if len(self.colors) else 0

    @property
    def value(self) -> int:
        return self.num_colors

    def classes(self) -> list[np.ndarray]:
        return [np.nonzero(self.colors == c)[0] for c in range(self.num_colors)]

    def check(self, g: Graph) -> None:
        c = self.colors
        if len(c) != g.n:
            raise InvalidCertificate(f"coloring has {len(c)} entries for {g.n} vertices")
        if len(c) and c.min() < 0:
            raise InvalidCertificate("negative color")
        if len(np.unique(c)) != self.num_colors:
            raise InvalidCertificate("colors do not form a contiguous range 0..k-1")
        rows = np.repeat(np.arange(g.n), g.degrees())
        if np.any(c[rows] == c[g.indices]):
            raise InvalidCertificate("an edge joins two vertices of the same color")


@dataclass(frozen=True, eq=False)
class Path:
    """Simple path; for a :class:`Digraph` consecutive pairs must be arcs."""

    vertices: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "vertices", _ids(self.vertices))

    def __len__(self):
        return len(self.vertices)

    @property
    def value(self) -> int:
        return len(self.vertices)

    def check(self, g: Graph | Digraph) -> None:
        v = self.vertices
        if len(v) == 0:
            raise InvalidCertificate("empty path")
        if v.min() < 0 or v.max() >= g.n:
            raise InvalidCertificate("path mentions a vertex outside the graph")
        if len(np.unique(v)) != len(v):
            raise InvalidCertificate("path repeats a vertex")
        if not np.all(g.has_edges(v[:-1], v[1:])):
            raise InvalidCertificate("consecutive path vertices are not joined")


@dataclass(frozen=True, eq=False)
class AcyclicSet:
    vertices: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "vertices", _ids(np.sort(np.asarray(self.vertices, dtype=np.int64))))

    def __len__(self):
        return len(self.vertices)

    @property
    def value(self) -> int:
        return len(self.vertices)

    def check(self, d: Digraph) -> None:
        v = self.vertices
        if len(v) and (v[0] < 0 or v[-1] >= d.n):
            raise InvalidCertificate("acyclic set mentions a vertex outside the digraph")
        if len(np.unique(v)) != len(v):
            raise InvalidCertificate("acyclic set repeats a vertex")
        if not d.induces_acyclic(v):
            raise InvalidCertificate("the induced sub-digraph has a directed cycle")


@dataclass(frozen=True, eq=False)
class MinorModel:
    """Clique-minor model: ``branch[v]`` is the branch set of ``v`` or -1."""

    branch: np.ndarray
    t: int

    def __post_init__(self):
        object.__setattr__(self, "branch", _ids(self.branch))
        object.__setattr__(self, "t", int(self.t))

    @property
    def value(self) -> int:
        return self.t

    def branch_sets(self) -> list[np.ndarray]:
        return [np.nonzero(self.branch == i)[0] for i in range(self.t)]

    def check(self, g: Graph) -> None:
        b = self.branch
        if len(b) != g.n:
            raise InvalidCertificate(f"branch map has {len(b)} entries for {g.n} vertices")
        if len(b) and (b.min() < -1 or b.max() >= self.t):
            raise InvalidCertificate("branch index out of range")
        sets = self.branch_sets()
        for i, s in enumerate(sets):
            if len(s) == 0:
                raise InvalidCertificate(f"branch set {i} is empty")
            if not _connected(g, s):
                raise InvalidCertificate(f"branch set {i} is not connected")
        e = g.edges()
        bu, bv = b[e[:, 0]], b[e[:, 1]]
        keep = (bu >= 0) & (bv >= 0) & (bu != bv)
        touching = set(zip(np.minimum(bu, bv)[keep].tolist(), np.maximum(bu, bv)[keep].tolist()))
        for i in range(self.t):
            for j in range(i + 1, self.t):
                if (i, j) not in touching:
                    raise InvalidCertificate(f"branch sets {i} and {j} are not adjacent")


def _connected(g: Graph, verts: np.ndarray) -> bool:
    inside = set(verts.tolist())
    start = next(iter(inside))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v).tolist():
            if w in inside and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(inside)


@dataclass(frozen=True, eq=False)
class PairedOutcome:
    """Result of a dispatch: one certificate plus the rule that chose it.

    ``side`` names the returned solution kind; ``threshold`` is the cutoff
    that was compared against and ``ratio_bound`` the approximation ratio the
    returned side is guaranteed to meet.
    """

    pair: str
    side: str
    payload: Any
    threshold: Fraction | int
    ratio_bound: Fraction | float
    eps: Fraction
    both_raw: dict = field(default_factory=dict)

    @property
    def value(self) -> int:
        return self.payload.value
