"""Graphs with neither a large independent set nor a large balanced biclique,
assembled from bipartite pieces by the first-differing-bit rule.

Vertex ``v`` of a ``2**k``-vertex graph carries the ``k``-bit label
``format(v, f"0{k}b")``; bit position 0 is the leftmost character. Piece
``i`` joins the vertices whose bit ``i`` is 0 (its left half) to those whose
bit ``i`` is 1 (its right half); inside a half, a vertex is indexed by its
label with bit ``i`` deleted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .graph import Graph
from .oracles import SizeLimitError, exact_max_balanced_biclique, exact_mis

__all__ = [
    "BipartitePiece",
    "RamseyGraph",
    "Witness",
    "Exhaustion",
    "piece_certifies",
    "piece_provider",
    "combine",
    "build_ramsey",
    "witness_search",
    "verify_ramsey",
    "RamseyReport",
]

BRUTE_MAX_HALF = 4


def _rows_as_masks(matrix: np.ndarray) -> list[int]:
    return [int(sum(1 << j for j in np.nonzero(row)[0].tolist())) for row in matrix]


def piece_certifies(matrix: np.ndarray, f: int) -> bool:
    """True iff every ``f``-subset of rows and ``f``-subset of columns see at
    least one present and one absent entry (vacuous when ``f`` exceeds a side)."""
    h = matrix.shape[0]
    if f > h:
        return True
    if f < 1:
        return False
    full = (1 << matrix.shape[1]) - 1
    ones = _rows_as_masks(matrix)
    zeros = [full & ~m for m in ones]
    for rows in combinations(range(h), f):
        on, off = full, full
        for r in rows:
            on &= ones[r]
            off &= zeros[r]
        if bin(on).count("1") >= f or bin(off).count("1") >= f:
            return False
    return True


@dataclass(frozen=True, eq=False)
class BipartitePiece:
    """``matrix[a, b]`` is True when left vertex ``a`` meets right vertex ``b``.

    ``f`` is verified exactly at construction; ``mode`` records how the
    matrix was found.
    """

    matrix: np.ndarray
    f: int
    mode: str = "given"

    def __post_init__(self):
        m = np.array(self.matrix, dtype=bool)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("piece must be a square 0/1 matrix")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)
        if not piece_certifies(m, self.f):
            raise ValueError(f"piece does not satisfy its claimed bound f = {self.f}")

    @property
    def half_size(self) -> int:
        return self.matrix.shape[0]

    def complemented(self) -> "BipartitePiece":
        return BipartitePiece(~self.matrix, self.f, self.mode)


def piece_provider(half_size: int, f: int, mode: str = "random", seed=0, retries: int = 5000) -> BipartitePiece:
    """A verified piece with bound ``f``.

    ``brute`` scans every matrix in lexicographic order (``half_size <= 4``);
    ``random`` draws fair-coin matrices from ``seed`` until one verifies.
    Raises ``ValueError`` for an infeasible ``f`` and ``RuntimeError`` when no
    piece verifies within the budget.
    """
    if half_size < 1:
        raise ValueError("half_size must be positive")
    if f < 2 and half_size >= 1:
        raise ValueError("f must be at least 2: a single pair is either an edge or not")
    if f > half_size:
        return BipartitePiece(np.zeros((half_size, half_size), dtype=bool), f, mode)
    cells = half_size * half_size
    if mode == "brute":
        if half_size > BRUTE_MAX_HALF:
            raise SizeLimitError(f"brute mode handles half_size <= {BRUTE_MAX_HALF}, got {half_size}")
        for code in range(1 << cells):
            bits = [(code >> (cells - 1 - c)) & 1 for c in range(cells)]
            matrix = np.array(bits, dtype=bool).reshape(half_size, half_size)
            if piece_certifies(matrix, f):
                return BipartitePiece(matrix, f, "brute")
        raise RuntimeError(f"no {half_size}x{half_size} piece achieves f = {f}")
    if mode == "random":
        rng = random.Random(seed)
        for _ in range(retries):
            code = rng.getrandbits(cells)
            bits = [(code >> c) & 1 for c in range(cells)]
            matrix = np.array(bits, dtype=bool).reshape(half_size, half_size)
            if piece_certifies(matrix, f):
                return BipartitePiece(matrix, f, "random")
        raise RuntimeError(f"no verified {half_size}x{half_size} piece with f = {f} after {retries} draws")
    raise ValueError(f"unknown mode {mode!r}; choose 'brute' or 'random'")


def _drop_bit(v: int, i: int, k: int) -> int:
    # remove label position i (0 = leftmost) from a k-bit label
    shift = k - 1 - i
    high = v >> (shift + 1)
    low = v & ((1 << shift) - 1)
    return (high << shift) | low


def _bit(v: int, i: int, k: int) -> int:
    return (v >> (k - 1 - i)) & 1


@dataclass(frozen=True, eq=False)
class RamseyGraph:
    graph: Graph
    k: int
    pieces: tuple[BipartitePiece, ...]

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def piece_bound(self) -> int:
        return max((p.f for p in self.pieces), default=1)

    @property
    def biclique_bound(self) -> int:
        """No ``K_{s,s}`` with ``s`` at least this value: the descent keeps at
        least ``s / 2k`` vertices per side, which would beat a piece's bound."""
        return 2 * max(self.k, 1) * (self.piece_bound - 1) + 1

    @property
    def independent_bound(self) -> int:
        """No independent set of this size: split it into two halves."""
        return 2 * self.biclique_bound

    def label(self, v: int) -> str:
        return format(v, f"0{self.k}b") if self.k else ""

    def first_difference(self, u: int, v: int) -> int:
        x = u ^ v
        return self.k - x.bit_length()


def combine(pieces) -> RamseyGraph:
    """Join ``u`` and ``v`` iff piece ``i`` joins them, where ``i`` is the
    first label position at which they differ."""
    pieces = tuple(pieces)
    k = len(pieces)
    h = 1 << (k - 1) if k else 0
    for i, p in enumerate(pieces):
        if p.half_size != h:
            raise ValueError(f"piece {i} has half size {p.half_size}, expected {h}")
    n = 1 << k
    lo, hi = [], []
    for u in range(n):
        for v in range(u + 1, n):
            i = k - (u ^ v).bit_length()
            a, b = (u, v) if _bit(u, i, k) == 0 else (v, u)
            if pieces[i].matrix[_drop_bit(a, i, k), _drop_bit(b, i, k)]:
                lo.append(u)
                hi.append(v)
    g = Graph._from_pairs(n, np.array(lo, dtype=np.int64), np.array(hi, dtype=np.int64))
    return RamseyGraph(g, k, pieces)


def build_ramsey(n: int, mode: str = "random", seed=0, f: int | None = None) -> RamseyGraph:
    """Smallest-power-of-two construction, restricted to the first ``n``
    vertices when ``n`` is not a power of two.

    With ``f=None`` each piece gets the smallest bound the provider can
    verify, trying ``f = 2, 3, ...``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    k = (n - 1).bit_length()
    h = 1 << (k - 1) if k else 0
    pieces = []
    for i in range(k):
        if f is not None:
            pieces.append(piece_provider(h, f, mode, seed=_piece_seed(seed, i)))
            continue
        for trial in range(2, h + 2):
            try:
                pieces.append(piece_provider(h, trial, mode, seed=_piece_seed(seed, i), retries=2000))
                break
            except RuntimeError:
                continue
    rg = combine(pieces)
    if rg.n == n:
        return rg
    return RamseyGraph(rg.graph.subgraph(range(n)), k, rg.pieces)


def _piece_seed(seed, i: int) -> int:
    return (int(seed) * 0x9E3779B1 + i) & 0xFFFFFFFF


@dataclass(frozen=True)
class Witness:
    """Descent result: all labels in ``a`` and ``b`` agree before
    ``position``; there, every ``a`` label has one bit value and every ``b``
    label the other."""

    position: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    case: str


@dataclass(frozen=True)
class Exhaustion:
    rounds: int
    a: tuple[int, ...]
    b: tuple[int, ...]


def witness_search(g: RamseyGraph, a, b) -> Witness | Exhaustion:
    """Bit-by-bit majority descent over two disjoint vertex sets.

    At each position: different majorities return both majority groups
    (case ``"majority"``); otherwise a minority of at least ``|A| / 2k``
    (original sizes) is returned against the other side's majority
    (``"minority-a"`` / ``"minority-b"``); otherwise both minorities are
    dropped. Majority ties count as bit 0.
    """
    a0 = sorted(set(int(v) for v in a))
    b0 = sorted(set(int(v) for v in b))
    if not a0 or not b0:
        raise ValueError("both vertex sets must be nonempty")
    if set(a0) & set(b0):
        raise ValueError("vertex sets must be disjoint")
    if any(not 0 <= v < g.n for v in a0 + b0):
        raise ValueError("vertex outside the graph")
    k = g.k
    limit_a = Fraction(len(a0), 2 * k)
    limit_b = Fraction(len(b0), 2 * k)
    ra, rb = list(a0), list(b0)
    for i in range(k):
        a1 = [v for v in ra if _bit(v, i, k)]
        a_0 = [v for v in ra if not _bit(v, i, k)]
        b1 = [v for v in rb if _bit(v, i, k)]
        b_0 = [v for v in rb if not _bit(v, i, k)]
        maj_a, min_a = (a1, a_0) if len(a1) > len(a_0) else (a_0, a1)
        maj_b, min_b = (b1, b_0) if len(b1) > len(b_0) else (b_0, b1)
        if _bit(maj_a[0], i, k) != _bit(maj_b[0], i, k):
            return Witness(i, tuple(maj_a), tuple(maj_b), "majority")
        if min_a and len(min_a) >= limit_a:
            return Witness(i, tuple(min_a), tuple(maj_b), "minority-a")
        if min_b and len(min_b) >= limit_b:
            return Witness(i, tuple(maj_a), tuple(min_b), "minority-b")
        ra, rb = maj_a, maj_b
    return Exhaustion(k, tuple(ra), tuple(rb))


@dataclass(frozen=True)
class RamseyReport:
    f: int
    max_independent: int
    independent_witness: tuple[int, ...]
    max_biclique: int
    biclique_witness: tuple[tuple[int, ...], tuple[int, ...]]

    @property
    def ok(self) -> bool:
        return self.max_independent < self.f and self.max_biclique < self.f

    def as_dict(self) -> dict:
        return {
            "f": self.f,
            "max_independent": self.max_independent,
            "independent_witness": list(self.independent_witness),
            "max_biclique": self.max_biclique,
            "biclique_witness": [list(self.biclique_witness[0]), list(self.biclique_witness[1])],
            "ok": self.ok,
        }


def verify_ramsey(g: Graph, f: int) -> RamseyReport:
    """Exact independence number and largest balanced biclique, compared to
    ``f`` (the graph passes when both are below ``f``)."""
    mis = exact_mis(g)
    bic = exact_max_balanced_biclique(g)
    side_a, side_b = bic.witness
    return RamseyReport(int(f), mis.value, tuple(mis.witness), bic.value, (tuple(side_a), tuple(side_b)))
