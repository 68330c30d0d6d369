"""Compiled inner loops. Callers in dfs.py / color_path.py own validation."""

import numpy as np
from numba import njit


@njit(cache=True)
def dfs_csr(n, indptr, indices, root_order):
    """Iterative DFS over out-adjacency in CSR order.

    Returns parent (-1 for roots), depth, preorder, roots (padded, count
    returned separately) and a has-child flag per vertex.
    """
    parent = np.full(n, -1, dtype=np.int64)
    depth = np.zeros(n, dtype=np.int64)
    preorder = np.empty(n, dtype=np.int64)
    roots = np.empty(n, dtype=np.int64)
    has_child = np.zeros(n, dtype=np.bool_)
    visited = np.zeros(n, dtype=np.bool_)
    cursor = indptr[:-1].copy()
    stack = np.empty(n, dtype=np.int64)
    pos = 0
    nroots = 0
    for r in root_order:
        if visited[r]:
            continue
        roots[nroots] = r
        nroots += 1
        visited[r] = True
        preorder[pos] = r
        pos += 1
        top = 0
        stack[0] = r
        while top >= 0:
            v = stack[top]
            end = indptr[v + 1]
            advanced = False
            while cursor[v] < end:
                w = indices[cursor[v]]
                cursor[v] += 1
                if not visited[w]:
                    visited[w] = True
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    has_child[v] = True
                    preorder[pos] = w
                    pos += 1
                    top += 1
                    stack[top] = w
                    advanced = True
                    break
            if not advanced:
                top -= 1
    return parent, depth, preorder, roots[:nroots], has_child


@njit(cache=True)
def _has(indptr, indices, u, v):
    lo = indptr[u]
    hi = indptr[u + 1]
    while lo < hi:
        mid = (lo + hi) >> 1
        x = indices[mid]
        if x == v:
            return True
        if x < v:
            lo = mid + 1
        else:
            hi = mid
    return False


@njit(cache=True)
def cyclic_step_costs(indptr, indices, order):
    """Cost 1/2 of each step ``order[i] -> order[i+1]`` (cyclically)."""
    k = len(order)
    out = np.empty(k, dtype=np.int64)
    for i in range(k):
        u = order[i]
        v = order[(i + 1) % k]
        if k > 1 and _has(indptr, indices, u, v):
            out[i] = 1
        else:
            out[i] = 2
    if k == 1:
        out[0] = 1
    return out


@njit(cache=True)
def _heap_push(heap, size, key):
    i = size
    heap[i] = key
    while i > 0:
        p = (i - 1) >> 1
        if heap[p] <= heap[i]:
            break
        heap[p], heap[i] = heap[i], heap[p]
        i = p
    return size + 1


@njit(cache=True)
def _heap_pop(heap, size):
    top = heap[0]
    size -= 1
    heap[0] = heap[size]
    i = 0
    while True:
        left = 2 * i + 1
        if left >= size:
            break
        c = left
        if left + 1 < size and heap[left + 1] < heap[left]:
            c = left + 1
        if heap[i] <= heap[c]:
            break
        heap[i], heap[c] = heap[c], heap[i]
        i = c
    return top, size


@njit(cache=True)
def min_degree_order(n, indptr, indices):
    """Repeatedly delete a minimum-degree vertex, ties to the smallest id.

    Returns the removal order and each vertex's degree at removal time.
    Lazy-deletion heap on ``degree * n + id``: O((n + m) log n).
    """
    deg = np.empty(n, dtype=np.int64)
    heap = np.empty(n + len(indices) + 1, dtype=np.int64)
    size = 0
    for v in range(n):
        deg[v] = indptr[v + 1] - indptr[v]
        size = _heap_push(heap, size, deg[v] * n + v)
    removed = np.zeros(n, dtype=np.bool_)
    order = np.empty(n, dtype=np.int64)
    at_removal = np.empty(n, dtype=np.int64)
    step = 0
    while step < n:
        key, size = _heap_pop(heap, size)
        v = key % n
        d = key // n
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order[step] = v
        at_removal[v] = d
        step += 1
        for i in range(indptr[v], indptr[v + 1]):
            w = indices[i]
            if not removed[w]:
                deg[w] -= 1
                size = _heap_push(heap, size, deg[w] * n + w)
    return order, at_removal


@njit(cache=True)
def greedy_color_reverse(n, indptr, indices, order):
    """Color vertices in reverse ``order`` with the smallest free color."""
    color = np.full(n, -1, dtype=np.int64)
    mark = np.full(n + 1, -1, dtype=np.int64)
    for idx in range(n - 1, -1, -1):
        v = order[idx]
        for i in range(indptr[v], indptr[v + 1]):
            c = color[indices[i]]
            if c >= 0:
                mark[c] = v
        c = 0
        while mark[c] == v:
            c += 1
        color[v] = c
    return color


@njit(cache=True)
def greedy_walk(n, indptr, indices, inside, start):
    """Walk from ``start`` to the smallest unvisited neighbor inside the mask
    until stuck; returns the visited sequence."""
    visited = np.zeros(n, dtype=np.bool_)
    path = np.empty(n, dtype=np.int64)
    k = 0
    v = start
    while True:
        visited[v] = True
        path[k] = v
        k += 1
        nxt = -1
        for i in range(indptr[v], indptr[v + 1]):
            w = indices[i]
            if inside[w] and not visited[w]:
                nxt = w
                break
        if nxt == -1:
            break
        v = nxt
    return path[:k]
