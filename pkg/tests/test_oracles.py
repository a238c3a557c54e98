import random
from itertools import combinations, product

import pytest

from injcolor import (
    BudgetExceededError,
    OracleBudget,
    OrientedGraph,
    UndirectedGraph,
    complete_graph,
    cycle,
    exact_2dipath_number,
    exact_chromatic_coloring,
    exact_chromatic_number,
    exact_injective_coloring,
    exact_injective_index,
    exact_oriented_coloring,
    exact_oriented_number,
    exact_oriented_number_all_orientations,
    path,
    verify_injective,
    verify_oriented_coloring,
)
from .bruteforce import min_2dipath, min_chromatic, min_injective_colors, min_oriented


def test_injective_index_examples():
    # frozen via the brute-force search in bruteforce.py
    assert min_injective_colors(4, complete_graph(4).edges()) == 6
    assert exact_injective_index(complete_graph(4)) == 6
    assert min_injective_colors(4, path(4).edges()) == 2
    assert exact_injective_index(path(4)) == 2
    assert min_injective_colors(4, cycle(4).edges()) == 2
    assert exact_injective_index(cycle(4)) == 2


def test_injective_index_cliques():
    for n in range(3, 7):
        budget = OracleBudget(max_vertices=20, max_edges=20, timeout=60)
        assert exact_injective_index(complete_graph(n), budget) == n * (n - 1) // 2


def test_injective_coloring_witness():
    G = cycle(6)
    coloring = exact_injective_coloring(G)
    assert verify_injective(G, coloring)
    assert coloring.k == exact_injective_index(G)


def test_chromatic_examples():
    assert exact_chromatic_number(complete_graph(5)) == 5
    assert exact_chromatic_number(cycle(5)) == 3
    assert exact_chromatic_number(UndirectedGraph(4)) == 1
    coloring = exact_chromatic_coloring(cycle(7))
    assert coloring.k == 3
    for u, v in cycle(7).edges():
        assert coloring[u] != coloring[v]


def test_2dipath_examples():
    assert exact_2dipath_number(OrientedGraph(2, [(0, 1)])) == 2
    assert exact_2dipath_number(OrientedGraph(3, [(0, 1), (1, 2)])) == 3
    out_star = OrientedGraph(4, [(0, 1), (0, 2), (0, 3)])
    assert exact_2dipath_number(out_star) == 2
    assert min_2dipath(4, out_star.arcs()) == 2


def test_oriented_examples():
    assert exact_oriented_number(OrientedGraph(2, [(0, 1)])) == 2
    tri = OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])
    assert exact_oriented_number(tri) == 3
    assert min_oriented(3, tri.arcs()) == 3
    assert exact_oriented_number(OrientedGraph(5)) == 1
    coloring = exact_oriented_coloring(tri)
    assert verify_oriented_coloring(tri, coloring) and coloring.k == 3


def _random_oriented(n, seed, prob=0.5):
    rng = random.Random(seed)
    arcs = []
    for u, v in combinations(range(n), 2):
        r = rng.random()
        if r < prob:
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return OrientedGraph(n, arcs)


def test_2dipath_below_oriented_exhaustive_n4():
    # all digon-free oriented graphs on 4 vertices
    pairs = list(combinations(range(4), 2))
    for states in product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (u, v), s in zip(pairs, states):
            if s == 1:
                arcs.append((u, v))
            elif s == 2:
                arcs.append((v, u))
        D = OrientedGraph(4, arcs)
        assert exact_2dipath_number(D) <= exact_oriented_number(D)


def test_2dipath_below_oriented_sampled_n5():
    for seed in range(150):
        D = _random_oriented(5, seed)
        assert exact_2dipath_number(D) <= exact_oriented_number(D)


def test_oracles_match_bruteforce_on_random_instances():
    for seed in range(40):
        rng = random.Random(seed)
        n = rng.randint(2, 5)
        pairs = list(combinations(range(n), 2))
        edges = [p for p in pairs if rng.random() < 0.5]
        G = UndirectedGraph(n, edges)
        assert exact_chromatic_number(G) == min_chromatic(n, edges)
        assert exact_injective_index(G) == min_injective_colors(n, edges)
        D = _random_oriented(n, seed + 1000)
        assert exact_oriented_number(D) == min_oriented(n, D.arcs())
        assert exact_2dipath_number(D) == min_2dipath(n, D.arcs())


def test_all_orientations_on_small_graphs():
    # a single arc forces 2 colors whichever way it points
    assert exact_oriented_number_all_orientations(path(2)) == 2
    assert exact_oriented_number_all_orientations(cycle(5)) == 5
    with pytest.raises(BudgetExceededError):
        exact_oriented_number_all_orientations(complete_graph(6))


def test_budget_errors():
    with pytest.raises(BudgetExceededError):
        exact_chromatic_number(UndirectedGraph(13))
    with pytest.raises(BudgetExceededError):
        exact_injective_index(complete_graph(8))  # 28 edges > 24
    with pytest.raises(BudgetExceededError):
        exact_oriented_number(OrientedGraph(13))
    with pytest.raises(BudgetExceededError):
        exact_2dipath_number(OrientedGraph(13))
