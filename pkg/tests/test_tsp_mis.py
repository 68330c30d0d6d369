from fractions import Fraction

import pytest
from hypothesis import given

from pairapprox import generators, oracles
from pairapprox.graph import disjoint_union
from pairapprox.tsp_mis import (
    dispatch_pathcover_mis,
    dispatch_tsp_mis,
    min_leaf_spanning_cert,
    pathcover_and_mis,
    tour_and_mis,
)

from conftest import graphs


def cliques(*sizes):
    return generators.disjoint_cliques(sizes)


def test_tour_and_mis_examples():
    res = tour_and_mis(generators.complete_graph(5))
    assert (res.tour.length, len(res.independent_set)) == (5, 1)
    assert res.hamiltonian_exception and res.gap == 4
    res = tour_and_mis(generators.empty_graph(4))
    assert (res.tour.length, len(res.independent_set), res.gap) == (8, 4, 4)
    g = cliques(3, 3)
    res = tour_and_mis(g)
    assert (res.tour.length, len(res.independent_set), res.gap) == (8, 2, 6)
    assert oracles.exact_tsp12(g).value == 8 and oracles.exact_mis(g).value == 2


def test_star_is_a_closing_shortcut():
    # preorder center, leaf, leaf, leaf: the wrap from the last leaf back to
    # the center is an edge, so the gap falls below n
    res = tour_and_mis(generators.star_graph(3))
    assert res.tour.length == 6 and len(res.independent_set) == 3
    assert res.gap == 3 and res.closing_shortcut and not res.hamiltonian_exception


def test_dispatch_tsp_mis_examples():
    out = dispatch_tsp_mis(generators.complete_graph(6), Fraction(1, 2))
    assert out.side == "tsp12" and out.payload.length == 6
    out = dispatch_tsp_mis(generators.empty_graph(10), "0.5")
    assert out.side == "independent-set" and len(out.payload) == 10
    g = cliques(3, 3, 3)
    out = dispatch_tsp_mis(g, Fraction(1, 5))
    assert out.side == "independent-set" and len(out.payload) == 3
    assert 3 >= Fraction(oracles.exact_mis(g).value, 5)


@pytest.mark.parametrize("eps", [0, -1, "abc"])
def test_dispatch_rejects_bad_eps(eps):
    with pytest.raises(ValueError):
        dispatch_tsp_mis(generators.path_graph(3), eps)


def test_dispatch_threshold_is_exact():
    # an edge plus two isolated vertices: L = 7, n = 4, so eps = 3/4 sits on the threshold
    g = disjoint_union(generators.path_graph(2), generators.empty_graph(2))
    assert tour_and_mis(g).tour.length == 7
    assert dispatch_tsp_mis(g, Fraction(3, 4)).side == "tsp12"
    assert dispatch_tsp_mis(g, Fraction(3, 4) - Fraction(1, 10**9)).side == "independent-set"


def test_pathcover_examples():
    cover, iset = pathcover_and_mis(generators.path_graph(5))
    assert cover.paths == [[0, 1, 2, 3, 4]] and len(iset) == 1
    cover, iset = pathcover_and_mis(generators.empty_graph(3))
    assert len(cover.paths) == 3 and len(iset) == 3
    cover, iset = pathcover_and_mis(cliques(3, 3))
    assert [len(p) for p in cover.paths] == [3, 3] and len(iset) == 2


def test_dispatch_pathcover_examples():
    out = dispatch_pathcover_mis(generators.empty_graph(16), Fraction(1, 2))
    assert out.side == "independent-set" and len(out.payload) == 16
    out = dispatch_pathcover_mis(generators.complete_graph(16), Fraction(1, 2))
    assert out.side == "path-cover" and len(out.payload.paths) == 1
    out = dispatch_pathcover_mis(cliques(3, 3), Fraction(3, 10))
    assert out.side == "path-cover" and len(out.payload.paths) == 2 and out.threshold == 4
    with pytest.raises(ValueError):
        dispatch_pathcover_mis(cliques(3, 3), 1)


def test_spanning_cert_examples():
    assert min_leaf_spanning_cert(generators.path_graph(4)).leaf_count == 1
    assert min_leaf_spanning_cert(generators.complete_graph(4)).leaf_count == 1
    assert min_leaf_spanning_cert(generators.star_graph(3)).leaf_count == 3
    cert = min_leaf_spanning_cert(cliques(3, 1, 2))
    assert cert.component_leaf_counts == (1, 1, 1)


@given(graphs(1, 11))
def test_oracle_sandwich(g):
    res = tour_and_mis(g)
    res.tour.check(g)
    res.independent_set.check(g)
    tsp = oracles.exact_tsp12(g).value
    alpha = oracles.exact_mis(g).value
    assert g.n <= tsp <= res.tour.length
    assert len(res.independent_set) <= alpha
    assert res.gap <= g.n
    assert tsp - alpha <= g.n
    if not res.closing_shortcut:
        assert res.gap == g.n or res.hamiltonian_exception


@given(graphs(1, 11))
def test_dispatch_guarantees_against_oracle(g):
    tsp = oracles.exact_tsp12(g).value
    alpha = oracles.exact_mis(g).value
    for eps in (Fraction(1, 3), Fraction(1, 2), Fraction(2)):
        out = dispatch_tsp_mis(g, eps)
        out.payload.check(g)
        if out.side == "tsp12":
            assert out.payload.length <= (1 + eps) * tsp
        else:
            assert len(out.payload) * (1 / eps) >= alpha


@given(graphs(1, 12))
def test_pathcover_dispatch_valid(g):
    for cover in ("path-cover", "spanning-forest"):
        out = dispatch_pathcover_mis(g, Fraction(1, 2), cover=cover)
        out.payload.check(g)
        if cover == "path-cover":
            # one path per leaf
            assert len(out.both_raw[cover].paths) == len(out.both_raw["independent-set"])


def test_tightness_cliques():
    for sizes in [(1, 1), (2, 3), (4, 4, 2), (3, 3, 3, 3)]:
        g = cliques(*sizes)
        assert oracles.exact_tsp12(g).value == g.n + len(sizes)
