"""Exact exponential-time solvers used as ground truth.

Every oracle returns ``OracleResult(value, witness)``; witnesses are checked
by the solution types in :mod:`pairapprox.solutions` (or plain set checks),
never by the oracle itself. Inputs beyond the size limits raise
:class:`SizeLimitError` instead of running for hours. Limits can be raised
for experiments through ``PAIRAPPROX_ORACLE_LIMITS="tsp12=18,mis=45"``.
"""

from __future__ import annotations

import os
from typing import Any, NamedTuple

import numpy as np
from numba import njit

from .graph import Digraph, Graph, SetSystem, complement, transpose

__all__ = [
    "SizeLimitError",
    "OracleResult",
    "LIMITS",
    "exact_tsp12",
    "exact_mis",
    "exact_clique",
    "exact_chromatic",
    "exact_longest_path",
    "exact_max_acyclic",
    "exact_cover",
    "exact_hit",
    "exact_hadwiger",
    "exact_max_balanced_biclique",
]

LIMITS = {
    "tsp12": 16,
    "mis": 30,
    "clique": 30,
    "chromatic": 14,
    "longest_path": 18,
    "max_acyclic": 20,
    "cover": 20,
    "hadwiger": 8,
    "biclique": 20,
}


class SizeLimitError(ValueError):
    pass


class OracleResult(NamedTuple):
    value: int
    witness: Any


def _limit(name: str) -> int:
    override = os.environ.get("PAIRAPPROX_ORACLE_LIMITS", "")
    for item in override.split(","):
        if "=" in item:
            key, val = item.split("=", 1)
            if key.strip() == name:
                return int(val)
    return LIMITS[name]


def _check_size(name: str, n: int) -> None:
    lim = _limit(name)
    if n > lim:
        raise SizeLimitError(f"{name} oracle is limited to n <= {lim}, got n = {n}")


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


# -- (1,2)-TSP -----------------------------------------------------------------


@njit(cache=True)
def _held_karp(n, cost, maximize):
    full = (1 << (n - 1)) - 1
    sentinel = -1 if maximize else 1 << 40
    dp = np.full((full + 1, n), sentinel, dtype=np.int64)
    for j in range(1, n):
        dp[1 << (j - 1), j] = cost[0, j]
    for mask in range(1, full + 1):
        for j in range(1, n):
            if not (mask >> (j - 1)) & 1:
                continue
            cur = dp[mask, j]
            if cur == sentinel:
                continue
            for k in range(1, n):
                if (mask >> (k - 1)) & 1:
                    continue
                nm = mask | (1 << (k - 1))
                val = cur + cost[j, k]
                if (maximize and val > dp[nm, k]) or (not maximize and val < dp[nm, k]):
                    dp[nm, k] = val
    best = sentinel
    last = -1
    for j in range(1, n):
        val = dp[full, j] + cost[j, 0]
        if last == -1 or (maximize and val > best) or (not maximize and val < best):
            best = val
            last = j
    order = np.empty(n, dtype=np.int64)
    order[0] = 0
    mask = full
    j = last
    pos = n - 1
    while pos >= 1:
        order[pos] = j
        prev_mask = mask & ~(1 << (j - 1))
        if prev_mask == 0:
            break
        for i in range(1, n):
            if (prev_mask >> (i - 1)) & 1 and dp[prev_mask, i] != sentinel:
                if dp[prev_mask, i] + cost[i, j] == dp[mask, j]:
                    mask = prev_mask
                    j = i
                    break
        pos -= 1
    return best, order


def _cost_matrix(g: Graph | Digraph) -> np.ndarray:
    cost = np.full((g.n, g.n), 2, dtype=np.int64)
    if g.n:
        rows = np.repeat(np.arange(g.n), g.degrees())
        cost[rows, g.indices] = 1
    np.fill_diagonal(cost, 0)
    return cost


def exact_tsp12(g: Graph | Digraph, objective: str = "min") -> OracleResult:
    """Optimal closed (1,2)-tour; ``objective`` is ``"min"`` or ``"max"``.

    Witness is the tour order starting at vertex 0. Uses the same
    one-vertex convention as :func:`pairapprox.solutions.tour_length`.
    """
    if objective not in ("min", "max"):
        raise ValueError("objective must be 'min' or 'max'")
    n = g.n
    _check_size("tsp12", n)
    if n == 0:
        return OracleResult(0, [])
    if n == 1:
        return OracleResult(1, [0])
    cost = _cost_matrix(g)
    value, order = _held_karp(n, cost, objective == "max")
    return OracleResult(int(value), order.tolist())


# -- independent set / clique ------------------------------------------------


def _max_clique(adj: list[int], n: int) -> list[int]:
    best = [0, 0]  # size, mask

    def expand(cur: int, size: int, cand: int) -> None:
        if cand == 0:
            if size > best[0]:
                best[0], best[1] = size, cur
            return
        if size + _popcount(cand) <= best[0]:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        expand(cur | low, size + 1, cand & adj[v])
        expand(cur, size, cand & ~low)

    expand(0, 0, (1 << n) - 1)
    return _bits(best[1])


def exact_clique(g: Graph) -> OracleResult:
    _check_size("clique", g.n)
    w = _max_clique(g.adjacency_masks(), g.n)
    return OracleResult(len(w), w)


def exact_mis(g: Graph) -> OracleResult:
    _check_size("mis", g.n)
    full = (1 << g.n) - 1
    co = [full & ~m & ~(1 << v) for v, m in enumerate(g.adjacency_masks())]
    w = _max_clique(co, g.n)
    return OracleResult(len(w), w)


# -- chromatic number ----------------------------------------------------------


@njit(cache=True)
def _chromatic(n, adj):
    size = 1 << n
    ind = np.zeros(size, dtype=np.bool_)
    ind[0] = True
    for s in range(1, size):
        low = s & -s
        v = 0
        while (low >> v) != 1:
            v += 1
        ind[s] = ind[s ^ low] and (adj[v] & s) == 0
    chi = np.zeros(size, dtype=np.int64)
    pick = np.zeros(size, dtype=np.int64)
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        best = 1 << 30
        choice = low
        sub = rest
        while True:
            cls = sub | low
            if ind[cls]:
                val = chi[s ^ cls] + 1
                if val < best:
                    best = val
                    choice = cls
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[s] = best
        pick[s] = choice
    return chi[size - 1], pick


def exact_chromatic(g: Graph) -> OracleResult:
    """Chromatic number; witness is a color per vertex."""
    _check_size("chromatic", g.n)
    if g.n == 0:
        return OracleResult(0, [])
    adj = np.array(g.adjacency_masks(), dtype=np.int64)
    value, pick = _chromatic(g.n, adj)
    colors = [0] * g.n
    s = (1 << g.n) - 1
    c = 0
    while s:
        cls = int(pick[s])
        for v in _bits(cls):
            colors[v] = c
        c += 1
        s ^= cls
    return OracleResult(int(value), colors)


# -- longest path ----------------------------------------------------------------


@njit(cache=True)
def _longest_path(n, out_adj, in_adj):
    size = 1 << n
    ends = np.zeros(size, dtype=np.int64)
    for v in range(n):
        ends[1 << v] = 1 << v
    best_mask = 1
    best_len = 1
    for mask in range(1, size):
        e = ends[mask]
        if e == 0:
            continue
        k = 0
        x = mask
        while x:
            x &= x - 1
            k += 1
        if k > best_len:
            best_len = k
            best_mask = mask
        x = e
        while x:
            low = x & -x
            x ^= low
            v = 0
            while (low >> v) != 1:
                v += 1
            nxt = out_adj[v] & ~mask
            while nxt:
                lw = nxt & -nxt
                nxt ^= lw
                ends[mask | lw] |= lw
    # reconstruct, smallest end first
    path = np.empty(best_len, dtype=np.int64)
    mask = best_mask
    e = ends[mask]
    low = e & -e
    v = 0
    while (low >> v) != 1:
        v += 1
    pos = best_len - 1
    path[pos] = v
    while pos > 0:
        prev = mask ^ (1 << v)
        cand = ends[prev] & in_adj[v]
        low = cand & -cand
        u = 0
        while (low >> u) != 1:
            u += 1
        pos -= 1
        path[pos] = u
        mask = prev
        v = u
    return best_len, path


def exact_longest_path(g: Graph | Digraph) -> OracleResult:
    """Most vertices on a simple path (directed paths for a Digraph)."""
    _check_size("longest_path", g.n)
    if g.n == 0:
        return OracleResult(0, [])
    out_adj = np.array(g.out_masks(), dtype=np.int64)
    in_adj = np.array(g.in_masks() if isinstance(g, Digraph) else g.out_masks(), dtype=np.int64)
    value, path = _longest_path(g.n, out_adj, in_adj)
    return OracleResult(int(value), path.tolist())


# -- maximum acyclic induced subgraph ------------------------------------------


@njit(cache=True)
def _max_acyclic(n, in_adj):
    size = 1 << n
    ok = np.zeros(size, dtype=np.bool_)
    ok[0] = True
    best_mask = 0
    best = 0
    for s in range(1, size):
        x = s
        while x:
            low = x & -x
            x ^= low
            v = 0
            while (low >> v) != 1:
                v += 1
            if (in_adj[v] & s) == 0 and ok[s ^ low]:
                ok[s] = True
                break
        if ok[s]:
            k = 0
            y = s
            while y:
                y &= y - 1
                k += 1
            if k > best:
                best = k
                best_mask = s
    return best, best_mask


def exact_max_acyclic(d: Digraph) -> OracleResult:
    """Largest vertex set inducing an acyclic sub-digraph.

    A set is acyclic iff it has a source whose removal leaves an acyclic set.
    """
    _check_size("max_acyclic", d.n)
    if d.n == 0:
        return OracleResult(0, [])
    value, mask = _max_acyclic(d.n, np.array(d.in_masks(), dtype=np.int64))
    return OracleResult(int(value), _bits(int(mask)))


# -- set cover / hitting set ------------------------------------------------------


@njit(cache=True)
def _cover_by_elements(num_elements, set_masks):
    full = (1 << num_elements) - 1
    size = full + 1
    dist = np.full(size, -1, dtype=np.int64)
    via = np.full(size, -1, dtype=np.int64)
    prev = np.zeros(size, dtype=np.int64)
    queue = np.empty(size, dtype=np.int64)
    dist[0] = 0
    queue[0] = 0
    head = 0
    tail = 1
    while head < tail and dist[full] == -1:
        mask = queue[head]
        head += 1
        for i in range(len(set_masks)):
            nm = mask | set_masks[i]
            if dist[nm] == -1:
                dist[nm] = dist[mask] + 1
                via[nm] = i
                prev[nm] = mask
                queue[tail] = nm
                tail += 1
    out = np.empty(dist[full], dtype=np.int64)
    m = full
    k = 0
    while m != 0:
        out[k] = via[m]
        k += 1
        m = prev[m]
    return dist[full], out


@njit(cache=True)
def _cover_by_sets(set_masks, full):
    s = len(set_masks)
    covered = np.zeros(1 << s, dtype=np.int64)
    best = s + 1
    best_t = 0
    for t in range(1, 1 << s):
        low = t & -t
        i = 0
        while (low >> i) != 1:
            i += 1
        covered[t] = covered[t ^ low] | set_masks[i]
        if covered[t] == full:
            k = 0
            y = t
            while y:
                y &= y - 1
                k += 1
            if k < best:
                best = k
                best_t = t
    return best, best_t


def _components(s: SetSystem) -> list[tuple[list[int], list[int]]]:
    """Connected components of the incidence graph that contain an element."""
    parent = list(range(s.num_sets + s.num_elements))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, row in enumerate(s.incidence):
        for e in row:
            a, b = find(i), find(s.num_sets + e)
            if a != b:
                parent[a] = b
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for e in range(s.num_elements):
        groups.setdefault(find(s.num_sets + e), ([], []))[1].append(e)
    for i in range(s.num_sets):
        r = find(i)
        if r in groups:
            groups[r][0].append(i)
    return list(groups.values())


def exact_cover(s: SetSystem) -> OracleResult:
    """Minimum set cover; witness is a sorted list of set indices.

    Solved per connected component of the incidence graph; each component
    needs at most ``LIMITS["cover"]`` elements or at most that many sets.
    Raises ``ValueError`` if some element lies in no set.
    """
    lim = _limit("cover")
    chosen: list[int] = []
    for sets, elements in _components(s):
        if not sets:
            raise ValueError(f"element {elements[0]} is contained in no set")
        eidx = {e: k for k, e in enumerate(elements)}
        masks = np.array([sum(1 << eidx[e] for e in s.incidence[i]) for i in sets], dtype=np.int64)
        if len(elements) <= lim and len(elements) <= len(sets):
            _, picks = _cover_by_elements(len(elements), masks)
            chosen.extend(sets[i] for i in picks.tolist())
        elif len(sets) <= lim and len(elements) <= 62:
            _, t = _cover_by_sets(masks, (1 << len(elements)) - 1)
            chosen.extend(sets[i] for i in _bits(int(t)))
        elif len(elements) <= lim:
            _, picks = _cover_by_elements(len(elements), masks)
            chosen.extend(sets[i] for i in picks.tolist())
        else:
            raise SizeLimitError(
                f"cover oracle needs <= {lim} sets or elements per component, "
                f"got {len(sets)} sets and {len(elements)} elements"
            )
    chosen.sort()
    return OracleResult(len(chosen), chosen)


def exact_hit(s: SetSystem) -> OracleResult:
    """Minimum hitting set (a cover of the transpose); witness lists elements."""
    return exact_cover(transpose(s))


# -- clique minors ---------------------------------------------------------------


def _connected_mask(mask: int, adj: list[int]) -> bool:
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        v = low.bit_length() - 1
        new = adj[v] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def exact_hadwiger(g: Graph) -> OracleResult:
    """Largest ``t`` with a ``K_t`` minor; witness is a branch index per
    vertex (-1 for deleted vertices)."""
    n = g.n
    _check_size("hadwiger", n)
    if n == 0:
        return OracleResult(0, [])
    adj = g.adjacency_masks()
    conn = [m for m in range(1, 1 << n) if _connected_mask(m, adj)]
    conn.sort(key=lambda m: (_popcount(m), m))
    reach = {}
    for m in conn:
        r = 0
        for v in _bits(m):
            r |= adj[v]
        reach[m] = r & ~m
    full = (1 << n) - 1
    best: list[list[int]] = [[]]

    def search(chosen: list[int], used: int, cand: list[int]) -> None:
        if len(chosen) > len(best[0]):
            best[0] = list(chosen)
        if len(chosen) + min(len(cand), _popcount(full & ~used)) <= len(best[0]):
            return
        for idx, c in enumerate(cand):
            if len(chosen) + min(len(cand) - idx, _popcount(full & ~used)) <= len(best[0]):
                return
            nu = used | c
            rest = [x for x in cand[idx + 1:] if not x & nu and x & reach[c]]
            chosen.append(c)
            search(chosen, nu, rest)
            chosen.pop()

    search([], 0, conn)
    branch = [-1] * n
    for i, m in enumerate(best[0]):
        for v in _bits(m):
            branch[v] = i
    return OracleResult(len(best[0]), branch)


# -- balanced bicliques ---------------------------------------------------------------


def exact_max_balanced_biclique(g: Graph) -> OracleResult:
    """Largest ``f`` such that ``K_{f,f}`` is a (not necessarily induced)
    subgraph; witness is the pair ``(A, B)``."""
    n = g.n
    _check_size("biclique", n)
    adj = g.adjacency_masks()
    best = [0, 0, 0]  # f, A mask, B mask

    def take(mask: int, k: int) -> int:
        out = 0
        for v in _bits(mask)[:k]:
            out |= 1 << v
        return out

    def rec(a_mask: int, size: int, common: int, start: int) -> None:
        c = _popcount(common)
        f = min(size, c)
        if f > best[0]:
            best[0], best[1], best[2] = f, take(a_mask, f), take(common, f)
        if min(size + (n - start), c) <= best[0]:
            return
        for v in range(start, n):
            nc = common & adj[v]
            if _popcount(nc) <= best[0]:
                continue
            rec(a_mask | (1 << v), size + 1, nc, v + 1)

    for v in range(n):
        if _popcount(adj[v]) > best[0]:
            rec(1 << v, 1, adj[v], v + 1)
    return OracleResult(best[0], (_bits(best[1]), _bits(best[2])))


def exact_clique_of_complement(g: Graph) -> int:
    return exact_clique(complement(g)).value
