"""
Small named bipartite graphs and random instance generators used by the test
suite and the CLI's ``--seed``-driven helpers.
"""

from __future__ import annotations

import random
from collections import deque

import networkx as nx

from .graph import BipartiteGraph, sort_vertices

__all__ = [
    "from_edges",
    "path",
    "star",
    "cycle",
    "complete_bipartite",
    "caterpillar",
    "trees",
    "corpus",
    "random_caterpillar",
    "random_assignment",
]


def from_edges(vertices, edges) -> BipartiteGraph:
    """
    Bipartite graph with the 2-colouring that puts the smallest vertex of
    each component in ``part_low``.  Raises ValueError if not bipartite.
    """
    vertices = sort_vertices(set(vertices) | {v for e in edges for v in e})
    adj = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    side = {}
    for root in vertices:
        if root in side:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    raise ValueError("graph is not bipartite")
    low = frozenset(v for v in vertices if side[v] == 0)
    return BipartiteGraph(frozenset(vertices), edges, low, frozenset(vertices) - low)


def path(q: int) -> BipartiteGraph:
    """Path with q edges on 0..q."""
    return from_edges(range(q + 1), [(i, i + 1) for i in range(q)])


def star(q: int) -> BipartiteGraph:
    return from_edges(range(q + 1), [(0, i) for i in range(1, q + 1)])


def cycle(length: int) -> BipartiteGraph:
    if length % 2 or length < 4:
        raise ValueError("bipartite cycles have even length >= 4")
    return from_edges(range(length), [(i, (i + 1) % length) for i in range(length)])


def complete_bipartite(m: int, n: int) -> BipartiteGraph:
    return from_edges(range(m + n), [(i, m + j) for i in range(m) for j in range(n)])


def caterpillar(legs) -> BipartiteGraph:
    """Spine 0..len(legs)-1 with ``legs[i]`` pendant vertices on spine vertex i."""
    edges = [(i, i + 1) for i in range(len(legs) - 1)]
    nxt = len(legs)
    for i, count in enumerate(legs):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return from_edges(range(nxt), edges)


def trees(q: int) -> list[BipartiteGraph]:
    """All unlabeled trees with q edges, one representative each."""
    if q == 0:
        return [from_edges([0], [])]
    return [from_edges(T.nodes, T.edges) for T in nx.nonisomorphic_trees(q + 1)]


def corpus(max_edges: int = 6) -> dict[str, BipartiteGraph]:
    """
    Named test graphs with at most ``max_edges`` edges: every tree, even
    cycles, small complete bipartite graphs, and a few disconnected graphs.
    """
    graphs = {}
    for q in range(1, max_edges + 1):
        for i, T in enumerate(trees(q)):
            graphs[f"tree{q}_{i}"] = T
    extra = {
        "C4": cycle(4),
        "C6": cycle(6),
        "K23": complete_bipartite(2, 3),
        "P2+P1": from_edges(range(5), [(0, 1), (1, 2), (3, 4)]),
        "P2+K1": from_edges(range(4), [(0, 1), (1, 2)]),
        "P3+P3": from_edges(range(8), [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)]),
    }
    for name, G in extra.items():
        if G.num_edges <= max_edges:
            graphs[name] = G
    return graphs


def random_caterpillar(rng: random.Random, max_edges: int = 6) -> BipartiteGraph:
    q = rng.randint(1, max_edges)
    spine = rng.randint(1, q + 1)
    legs = [0] * spine
    for _ in range(q - (spine - 1)):
        legs[rng.randrange(spine)] += 1
    return caterpillar(legs)


def random_assignment(rng: random.Random, G: BipartiteGraph, size: int) -> dict:
    return {e: rng.randrange(size) for e in G.sorted_edges()}
