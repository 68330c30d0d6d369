import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from pairapprox import oracles
from pairapprox.graph import SetSystem, transpose
from pairapprox.setcover import (
    CoverSolution,
    HitSolution,
    build_kG,
    build_kstarG,
    greedy_cover,
    greedy_hit,
    is_reduced,
    pullback,
    reduce_solution,
)

from conftest import set_systems


def brute_cover(s: SetSystem) -> int:
    for size in range(s.num_sets + 1):
        for combo in itertools.combinations(range(s.num_sets), size):
            if s.is_cover(combo):
                return size
    raise ValueError("infeasible")


def brute_hit(s: SetSystem) -> int:
    return brute_cover(transpose(s))


def test_kG_examples():
    base = SetSystem(1, 2, [[0, 1]])
    kg = build_kG(base, 2).system
    assert (kg.num_sets, kg.num_elements) == (3, 4)
    assert brute_cover(kg) == 1 and brute_hit(kg) == 2
    two = SetSystem(2, 4, [[0, 1], [2, 3]])
    assert (brute_cover(two), brute_hit(two)) == (2, 2)
    kg = build_kG(two, 3).system
    assert brute_cover(kg) == 2 and brute_hit(kg) == 6
    assert oracles.exact_cover(kg).value == 2 and oracles.exact_hit(kg).value == 6


def test_kstarG_examples():
    ks = build_kstarG(SetSystem(1, 1, [[0]]), 2).system
    assert brute_cover(ks) == brute_hit(ks) == 3
    ks = build_kstarG(SetSystem(2, 2, [[0], [1]]), 1).system
    assert brute_cover(ks) == brute_hit(ks) == 4


def test_bad_k():
    with pytest.raises(ValueError):
        build_kG(SetSystem(1, 1, [[0]]), 0)
    with pytest.raises(ValueError):
        build_kstarG(SetSystem(1, 1, [[0]]), 1.5)


def _as_bipartite(s: SetSystem, set_tag="u", element_tag="v"):
    g = nx.Graph()
    g.add_nodes_from((set_tag, i) for i in range(s.num_sets))
    g.add_nodes_from((element_tag, e) for e in range(s.num_elements))
    g.add_edges_from(((set_tag, i), (element_tag, e)) for i, row in enumerate(s.incidence) for e in row)
    return g


def _subdivided_star(k: int) -> nx.Graph:
    # center ("L", 0), middle ("R", j), end ("L", j)
    star = nx.Graph()
    star.add_node(("L", 0))
    for j in range(1, k + 1):
        star.add_edge(("L", 0), ("R", j))
        star.add_edge(("R", j), ("L", j))
    return star


@settings(max_examples=60)
@given(set_systems(4, 4))
def test_kG_is_tensor_product_part(s):
    for k in (1, 2, 3):
        amp = build_kG(s, k)
        prod = nx.tensor_product(_subdivided_star(k), _as_bipartite(s))
        keep = [x for x in prod if (x[0][0], x[1][0]) in {("L", "u"), ("R", "v")}]
        part = prod.subgraph(keep)

        def name(kind, idx):
            _, side, b, j = amp.set_vertex(idx) if kind == "set" else amp.element_vertex(idx)
            return (("L", j), ("u", b)) if side == "set" else (("R", j), ("v", b))

        mapped = {
            frozenset((name("set", i), name("element", e)))
            for i, row in enumerate(amp.system.incidence)
            for e in row
        }
        assert mapped == {frozenset(e) for e in part.edges()}
        names = {name("set", i) for i in range(amp.system.num_sets)}
        names |= {name("element", e) for e in range(amp.system.num_elements)}
        assert names == set(part.nodes())
        if nx.is_connected(_as_bipartite(s)):
            assert nx.is_connected(part)


@settings(max_examples=80)
@given(set_systems(5, 5))
def test_size_identities_for_random_bases(s):
    cover, hit = oracles.exact_cover(s).value, oracles.exact_hit(s).value
    for k in (1, 2, 3):
        kg = build_kG(s, k).system
        assert oracles.exact_cover(kg).value == cover
        assert oracles.exact_hit(kg).value == k * hit
        ks = build_kstarG(s, k).system
        assert oracles.exact_cover(ks).value == oracles.exact_hit(ks).value == k * cover + hit


@given(set_systems(5, 5))
def test_duality(s):
    assert oracles.exact_cover(s).value == oracles.exact_hit(transpose(s)).value == brute_cover(s)


def _sided(s: SetSystem) -> nx.Graph:
    g = _as_bipartite(s)
    nx.set_node_attributes(g, {n: n[0] for n in g}, "side")
    return g


@settings(max_examples=40)
@given(set_systems(3, 3))
def test_kstar_is_self_dual(s):
    ks = build_kstarG(s, 2).system
    same_side = nx.algorithms.isomorphism.categorical_node_match("side", None)
    assert nx.is_isomorphic(_sided(ks), _sided(transpose(ks)), node_match=same_side)


def test_reduce_examples():
    base = SetSystem(1, 2, [[0, 1]])
    amp = build_kG(base, 2)
    # sets 1 and 2 are (u0, 1) and (u0, 2)
    red = reduce_solution(CoverSolution([1, 2]), amp)
    assert red.sets == (0,)
    assert reduce_solution(red, amp) == red
    with pytest.raises(ValueError):
        reduce_solution(CoverSolution([1]), amp)


@settings(max_examples=60)
@given(set_systems(3, 3))
def test_reduce_keeps_optimality(s):
    for amp in (build_kG(s, 2), build_kstarG(s, 2)):
        opt = oracles.exact_cover(amp.system)
        red = reduce_solution(CoverSolution(opt.witness), amp)
        assert red.is_valid(amp.system) and len(red) == opt.value and is_reduced(red, amp)
        opt = oracles.exact_hit(amp.system)
        red = reduce_solution(HitSolution(opt.witness), amp)
        assert red.is_valid(amp.system) and len(red) == opt.value and is_reduced(red, amp)


def test_pullback_examples():
    base = SetSystem(1, 1, [[0]])
    amp = build_kstarG(base, 2)
    opt = oracles.exact_cover(amp.system)
    assert opt.value == 3
    assert len(pullback(reduce_solution(CoverSolution(opt.witness), amp), amp)) == 1


def test_pullback_cover_two_hit_one():
    # both sets share element 0 and neither covers alone
    base = SetSystem(2, 3, [[0, 1], [0, 2]])
    assert (brute_cover(base), brute_hit(base)) == (2, 1)
    amp = build_kstarG(base, 3)
    opt = oracles.exact_hit(amp.system)
    assert opt.value == 7
    back = pullback(reduce_solution(HitSolution(opt.witness), amp), amp)
    assert back.is_valid(base) and len(back) == 7 // 3


def test_pullback_preconditions():
    base = SetSystem(2, 3, [[0, 1], [0, 2]])
    with pytest.raises(ValueError):
        pullback(CoverSolution([0]), build_kG(base, 3))
    small = build_kstarG(base, 2)
    opt = oracles.exact_cover(small.system).witness
    with pytest.raises(ValueError, match="k > 2"):
        pullback(CoverSolution(opt), small)


@settings(max_examples=40, deadline=None)
@given(set_systems(3, 3))
def test_pullback_of_suboptimal_solutions(s):
    k = s.num_sets + 1
    amp = build_kstarG(s, k)
    rng = random.Random(s.num_sets * 31 + s.num_elements)
    for _ in range(5):
        # random cover: every set on its own, then drop sets while still covering
        chosen = list(range(amp.system.num_sets))
        rng.shuffle(chosen)
        for i in list(chosen):
            trial = [x for x in chosen if x != i]
            if amp.system.is_cover(trial) and rng.random() < 0.8:
                chosen = trial
        sol = reduce_solution(CoverSolution(chosen), amp)
        back = pullback(sol, amp)
        assert back.is_valid(s) and len(back) <= len(sol) // k


@given(set_systems(6, 6))
def test_greedy_is_valid_and_bounded(s):
    c, h = greedy_cover(s), greedy_hit(s)
    assert c.is_valid(s) and h.is_valid(s)
    assert len(c) >= oracles.exact_cover(s).value
    assert len(h) >= oracles.exact_hit(s).value
    # harmonic bound of the greedy rule
    harmonic = sum(1 / i for i in range(1, max(len(r) for r in s.incidence) + 1))
    assert len(c) <= oracles.exact_cover(s).value * harmonic + 1e-9


def test_index_map_round_trip():
    base = SetSystem(2, 3, [[0, 1], [0, 2]])
    for amp in (build_kG(base, 2), build_kstarG(base, 2)):
        m = amp.index_map()
        assert len(m["sets"]) == amp.system.num_sets and len(m["elements"]) == amp.system.num_elements
        assert len({tuple(x) for x in m["sets"]}) == amp.system.num_sets
