import random
from itertools import combinations

import pytest

from injcolor import UndirectedGraph, grid_graph


def random_grid_subgraph(seed: int, rows: int = 10, cols: int = 10, keep: float = 0.7) -> UndirectedGraph:
    """Random subgraph of a planar grid; planar, hence honest for any g >= 0."""
    full = grid_graph(rows, cols)
    rng = random.Random(seed)
    edges = [e for e in full.edges() if rng.random() < keep]
    return UndirectedGraph(rows * cols, edges)


def connected_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> bool:
    adj = [0] * n
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        rest = frontier
        while rest:
            low = rest & -rest
            nxt |= adj[low.bit_length() - 1]
            rest ^= low
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def all_connected_graphs(max_n: int):
    """Every labeled connected graph on 1..max_n vertices."""
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            if not connected_mask(n, pairs, mask):
                continue
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            yield UndirectedGraph(n, edges)


@pytest.fixture
def grid_subgraph():
    return random_grid_subgraph(3)
