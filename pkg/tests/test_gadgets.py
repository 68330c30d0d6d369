import itertools
import random

import pytest
from hypothesis import given, settings

from pairapprox import generators, oracles
from pairapprox.gadgets import clique_is_instance, extract_tour, tsp_maxtsp_gadget
from pairapprox.graph import Graph, complement, disjoint_union, edge_union
from pairapprox.ramsey import build_ramsey
from pairapprox.solutions import tour_length

from conftest import atlas_graphs, graphs


def edge_set(g):
    return {tuple(e) for e in g.edges().tolist()}


def brute_tour(g, objective):
    best = None
    for rest in itertools.permutations(range(1, g.n)):
        length = tour_length(g, (0, *rest))
        if best is None or (length < best if objective == "min" else length > best):
            best = length
    return best


def test_gadget_layout_k2():
    layout = tsp_maxtsp_gadget(generators.complete_graph(2))
    h = layout.graph
    assert h.n == 5
    assert edge_set(h) == {(0, 1), (2, 4), (3, 4)}
    assert layout.blocks == {"graph": (0, 2), "complement": (2, 4), "clique": (4, 5)}
    assert layout.sidecar()["blocks"]["clique"] == [4, 5]


def test_gadget_rejects_tiny_input():
    with pytest.raises(ValueError):
        tsp_maxtsp_gadget(generators.empty_graph(1))


@given(graphs(2, 7))
def test_gadget_structure(g):
    n = g.n
    h = tsp_maxtsp_gadget(g).graph
    assert h.n == 3 * n - 1
    e = edge_set(h)
    inside_g = {(u, v) for u, v in e if v < n}
    assert inside_g == edge_set(g)
    assert all(u >= n for u, v in e if v >= n)  # nothing leaves the g block
    comp = {(u - n, v - n) for u, v in e if n <= u and v < 2 * n}
    assert comp == edge_set(complement(g))
    for c in range(2 * n, 3 * n - 1):
        for x in range(n, 3 * n - 1):
            if x != c:
                assert h.has_edge(c, x)


def test_path3_gadget_optima_by_enumeration():
    # g = P_3: x = 1. Enumeration over all 5040 tours of the 8-vertex gadget.
    g = generators.path_graph(3)
    h = tsp_maxtsp_gadget(g).graph
    assert oracles.exact_tsp12(g).value == 4
    assert brute_tour(h, "min") == 10 == oracles.exact_tsp12(h, "min").value
    assert brute_tour(h, "max") == 16 == oracles.exact_tsp12(h, "max").value


def test_hamiltonian_input_is_built():
    g = generators.cycle_graph(4)
    h = tsp_maxtsp_gadget(g).graph
    assert h.n == 11
    low = oracles.exact_tsp12(h, "min").value
    # the g block is cut off from the rest, so at least two cost-2 steps
    assert 3 * 4 - 1 + 2 <= low <= oracles.exact_tsp12(h, "max").value


def non_hamiltonian_small():
    for g in atlas_graphs(3, 5, connected=True):
        x = oracles.exact_tsp12(g).value - g.n
        if x > 0:
            yield g, x


def test_observed_gadget_optima():
    count = 0
    for g, x in non_hamiltonian_small():
        n = g.n
        h = tsp_maxtsp_gadget(g).graph
        assert oracles.exact_tsp12(h, "min").value == 3 * n + x
        assert oracles.exact_tsp12(h, "max").value == 6 * n - x - 1
        count += 1
    assert count == 17


def _perturb(order, rng, moves):
    order = list(order)
    for _ in range(moves):
        i, j = sorted(rng.sample(range(len(order)), 2))
        order[i:j + 1] = reversed(order[i:j + 1])
    return order


def test_extraction_transfers_approximation():
    rng = random.Random(8)
    worst = 0.0
    for g, _ in non_hamiltonian_small():
        layout = tsp_maxtsp_gadget(g)
        h = layout.graph
        best_g = oracles.exact_tsp12(g).value
        for objective in ("min", "max"):
            opt = oracles.exact_tsp12(h, objective)
            for trial in range(60):
                order = _perturb(opt.witness, rng, trial % 4)
                length = tour_length(h, order)
                eps = length / opt.value - 1 if objective == "min" else opt.value / length - 1
                tour = extract_tour(layout, order, g, objective)
                tour.check(g)
                assert tour.length <= (1 + 6 * eps) * best_g + 1e-9
                if eps:
                    worst = max(worst, (tour.length / best_g - 1) / eps)
    assert worst <= 6


def test_extract_tour_errors():
    layout = tsp_maxtsp_gadget(generators.path_graph(3))
    with pytest.raises(ValueError):
        extract_tour(layout, list(range(8)), generators.path_graph(4))
    with pytest.raises(ValueError):
        extract_tour(layout, [0, 0, 1, 2, 3, 4, 5, 6], generators.path_graph(3))
    with pytest.raises(ValueError):
        extract_tour(layout, list(range(8)), generators.path_graph(3), "median")
    best = extract_tour(layout, list(range(8)), generators.path_graph(3), "best")
    assert best.length == 4


def test_clique_is_instance_examples():
    n = 5
    e = generators.empty_graph(n)
    f = clique_is_instance(e, e)
    assert edge_set(f) == edge_set(disjoint_union(e, generators.complete_graph(n)))
    k = generators.complete_graph(n)
    assert edge_set(clique_is_instance(k, k)) == edge_set(disjoint_union(k, e))
    with pytest.raises(ValueError):
        clique_is_instance(k, generators.complete_graph(4))


@settings(max_examples=60)
@given(graphs(6, 6), graphs(6, 6))
def test_clique_is_instance_identities(g, h):
    u = edge_union(g, h)
    f = clique_is_instance(g, h)
    assert f.n == 12
    omega_u, alpha_u = oracles.exact_clique(u).value, oracles.exact_mis(u).value
    assert oracles.exact_clique(f).value == max(omega_u, alpha_u)
    assert oracles.exact_mis(f).value == alpha_u + omega_u
    assert alpha_u <= oracles.exact_mis(h).value


def test_clique_is_instance_accepts_ramsey_graph():
    rg = build_ramsey(8, seed=5)
    g = generators.random_graph(8, 0.3, seed=5)
    assert edge_set(clique_is_instance(g, rg)) == edge_set(clique_is_instance(g, rg.graph))
    assert isinstance(clique_is_instance(g, rg), Graph)
