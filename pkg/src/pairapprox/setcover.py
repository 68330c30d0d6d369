"""Set-cover / hitting-set amplification.

A set system is read as a bipartite graph with sets on one side and
elements on the other. ``build_kG`` keeps the cover optimum and multiplies
the hitting optimum by ``k``; ``build_kstarG`` puts the ``k``-fold copy of
the transpose next to its own transpose so both optima become
``k * Cover + Hit``.

Index scheme, for a base with sets ``u_i`` and elements ``v_i``:

* kG sets: ``(u_i, j)`` with ``0 <= j <= k`` at index ``i * (k + 1) + j``
* kG elements: ``(v_i, j)`` with ``1 <= j <= k`` at index ``i * k + (j - 1)``

k*G is built on the transpose, so there the ``(k + 1)``-fold side is the
base elements. Its sets are block A (the transpose copy's sets, i.e. base
elements ``(v, j)``) followed by block B (base sets ``(u, j)``, ``j >= 1``);
its elements are block A's (base sets ``(u, j)``) followed by block B's
(base elements ``(v, j)``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import SetSystem, transpose

__all__ = [
    "AmplifiedSystem",
    "CoverSolution",
    "HitSolution",
    "build_kG",
    "build_kstarG",
    "reduce_solution",
    "is_reduced",
    "pullback",
    "greedy_cover",
    "greedy_hit",
]


@dataclass(frozen=True)
class CoverSolution:
    sets: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(sorted(set(int(i) for i in self.sets))))

    def __len__(self):
        return len(self.sets)

    def is_valid(self, s: SetSystem) -> bool:
        return s.is_cover(self.sets)


@dataclass(frozen=True)
class HitSolution:
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(int(e) for e in self.elements))))

    def __len__(self):
        return len(self.elements)

    def is_valid(self, s: SetSystem) -> bool:
        return s.is_hitting_set(self.elements)


def _kg_rows(base: SetSystem, k: int) -> list[list[int]]:
    rows: list[list[int]] = []
    for i in range(base.num_sets):
        members = base.incidence[i]
        rows.append([e * k + (j - 1) for e in members for j in range(1, k + 1)])
        for j in range(1, k + 1):
            rows.append([e * k + (j - 1) for e in members])
    return rows


@dataclass(frozen=True)
class AmplifiedSystem:
    """An amplified set system together with the base it came from.

    ``set_vertex`` and ``element_vertex`` decode indices into
    ``(block, side, base_index, copy)`` where ``side`` says whether the
    vertex is a copy of a base set (``"set"``) or a base element
    (``"element"``); ``block`` is ``""`` for kG and ``"A"``/``"B"`` for k*G.
    """

    base: SetSystem
    k: int
    kind: str
    system: SetSystem

    def _decode_wide(self, idx: int):
        return idx // (self.k + 1), idx % (self.k + 1)

    def _decode_narrow(self, idx: int):
        return idx // self.k, idx % self.k + 1

    def set_vertex(self, idx: int) -> tuple[str, str, int, int]:
        if not 0 <= idx < self.system.num_sets:
            raise IndexError(idx)
        if self.kind == "kG":
            return ("", "set", *self._decode_wide(idx))
        wide = self.base.num_elements * (self.k + 1)
        if idx < wide:
            return ("A", "element", *self._decode_wide(idx))
        return ("B", "set", *self._decode_narrow(idx - wide))

    def element_vertex(self, idx: int) -> tuple[str, str, int, int]:
        if not 0 <= idx < self.system.num_elements:
            raise IndexError(idx)
        if self.kind == "kG":
            return ("", "element", *self._decode_narrow(idx))
        narrow = self.base.num_sets * self.k
        if idx < narrow:
            return ("A", "set", *self._decode_narrow(idx))
        return ("B", "element", *self._decode_wide(idx - narrow))

    def index_map(self) -> dict:
        """JSON-ready description of every index, for sidecar files."""
        return {
            "kind": self.kind,
            "k": self.k,
            "base": {"num_sets": self.base.num_sets, "num_elements": self.base.num_elements},
            "sets": [list(self.set_vertex(i)) for i in range(self.system.num_sets)],
            "elements": [list(self.element_vertex(i)) for i in range(self.system.num_elements)],
        }


def _require_k(k) -> int:
    if int(k) != k or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return int(k)


def build_kG(s: SetSystem, k: int) -> AmplifiedSystem:
    """``(k + 1) * |U|`` sets and ``k * |V|`` elements; ``(u, 0)`` holds every
    copy of its elements and ``(u, j)`` holds copy ``j`` only."""
    k = _require_k(k)
    rows = _kg_rows(s, k)
    system = SetSystem(s.num_sets * (k + 1), s.num_elements * k, rows)
    return AmplifiedSystem(s, k, "kG", system)


def build_kstarG(s: SetSystem, k: int) -> AmplifiedSystem:
    """Disjoint union of ``k(G^T)`` and its transpose."""
    k = _require_k(k)
    block_a = build_kG(transpose(s), k).system
    system = block_a.disjoint_union(transpose(block_a))
    return AmplifiedSystem(s, k, "k*G", system)


def _check_solution(sol, sys: AmplifiedSystem) -> None:
    if isinstance(sol, CoverSolution):
        if not sol.is_valid(sys.system):
            raise ValueError("cover solution does not cover every element")
    elif isinstance(sol, HitSolution):
        if not sol.is_valid(sys.system):
            raise ValueError("hitting set misses some set")
    else:
        raise TypeError(f"expected CoverSolution or HitSolution, got {type(sol).__name__}")


def reduce_solution(sol, sys: AmplifiedSystem):
    """Swap every copy ``j != 0`` on the ``(k + 1)``-fold side for copy 0.

    Copy 0 is adjacent to a superset of what copy ``j`` touches, so validity
    is kept and the size can only shrink (duplicates merge).
    """
    _check_solution(sol, sys)
    if isinstance(sol, CoverSolution):
        out = []
        for i in sol.sets:
            block, side, b, j = sys.set_vertex(i)
            wide = (sys.kind == "kG") or block == "A"
            out.append(i - j if wide else i)
        red = CoverSolution(out)
    else:
        out = []
        for e in sol.elements:
            block, side, b, j = sys.element_vertex(e)
            out.append(e - j if block == "B" else e)
        red = HitSolution(out)
    assert red.is_valid(sys.system)
    return red


def is_reduced(sol, sys: AmplifiedSystem) -> bool:
    if isinstance(sol, CoverSolution):
        return all(
            sys.set_vertex(i)[3] == 0 or (sys.kind == "k*G" and sys.set_vertex(i)[0] == "B") for i in sol.sets
        )
    return all(sys.element_vertex(e)[0] != "B" or sys.element_vertex(e)[3] == 0 for e in sol.elements)


def pullback(sol, sys: AmplifiedSystem) -> CoverSolution:
    """Base cover of size at most ``floor(q / k)`` from a reduced k*G
    solution of size ``q`` (exactly ``floor(q / k)`` when ``sol`` is optimal).

    Every layer ``j >= 1`` of the base-set copies must by itself cover the
    base elements of layer ``j``; the smallest of those ``k`` layers is
    returned. Requires ``k > num_sets`` of the base.
    """
    if sys.kind != "k*G":
        raise ValueError("pullback needs a k*G system")
    if sys.k <= sys.base.num_sets:
        raise ValueError(f"pullback needs k > {sys.base.num_sets} (number of base sets), got k = {sys.k}")
    _check_solution(sol, sys)
    if not is_reduced(sol, sys):
        raise ValueError("solution is not reduced; call reduce_solution first")
    layers: list[list[int]] = [[] for _ in range(sys.k + 1)]
    if isinstance(sol, CoverSolution):
        for i in sol.sets:
            block, side, b, j = sys.set_vertex(i)
            if block == "B":
                layers[j].append(b)
    else:
        for e in sol.elements:
            block, side, b, j = sys.element_vertex(e)
            if block == "A":
                layers[j].append(b)
    best = min(layers[1:], key=len)
    out = CoverSolution(best)
    if not out.is_valid(sys.base):
        raise AssertionError("layer of a k*G solution failed to cover the base")
    return out


def greedy_cover(s: SetSystem) -> CoverSolution:
    """Repeatedly take the set covering the most uncovered elements
    (ties: lowest index)."""
    masks = s.set_masks()
    left = (1 << s.num_elements) - 1
    if any(not any(e in row for row in s.incidence) for e in range(s.num_elements)):
        raise ValueError("some element lies in no set")
    chosen = []
    while left:
        gains = [bin(m & left).count("1") for m in masks]
        best = max(range(len(masks)), key=lambda i: (gains[i], -i))
        chosen.append(best)
        left &= ~masks[best]
    return CoverSolution(chosen)


def greedy_hit(s: SetSystem) -> HitSolution:
    return HitSolution(greedy_cover(transpose(s)).sets)
