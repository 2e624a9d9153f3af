"""
Graph data model: plain undirected graphs, bipartite graphs with a declared
(low, high) partition, and simple digraphs.

Vertices are non-negative integers or (possibly nested) tuples of them; the
latter appear as the vertices of product graphs.  All containers are frozen so
every operation here is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Union

from .errors import PartitionError

Vertex = Union[int, tuple]

__all__ = [
    "Vertex",
    "vertex_key",
    "sort_vertices",
    "Graph",
    "BipartiteGraph",
    "Digraph",
    "orient_bipartite",
    "underlying",
    "remove_isolated",
    "validate_bipartition",
    "same_graph",
    "reindex",
]


def vertex_key(v):
    """Total order on vertices: integers first, then tuples componentwise."""
    if isinstance(v, tuple):
        return (1, tuple(vertex_key(c) for c in v))
    return (0, v)


def sort_vertices(vertices: Iterable[Vertex]) -> list:
    return sorted(vertices, key=vertex_key)


def _edge_key(e):
    return (vertex_key(e[0]), vertex_key(e[1]))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph. Edges are stored as tuples in vertex order."""

    vertices: frozenset = frozenset()
    edges: frozenset = frozenset()

    def __post_init__(self):
        vertices = frozenset(self.vertices)
        edges = set()
        for u, v in self.edges:
            if u not in vertices or v not in vertices:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            edges.add(self._orient(u, v))
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(edges))

    def _orient(self, u, v):
        if vertex_key(v) < vertex_key(u):
            return (v, u)
        return (u, v)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v) -> frozenset:
        return frozenset(self.adjacency[v])

    def isolated_vertices(self) -> frozenset:
        return frozenset(v for v, nbrs in self.adjacency.items() if not nbrs)

    def edge_pairs(self) -> frozenset:
        """Edges as unordered pairs, for orientation-free comparison."""
        return frozenset(frozenset(e) for e in self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges, key=_edge_key)

    def sorted_vertices(self) -> list:
        return sort_vertices(self.vertices)


@dataclass(frozen=True)
class BipartiteGraph(Graph):
    """
    Graph with a declared partition into ``part_low`` and ``part_high``.

    The constructor does not enforce the partition invariants so that malformed
    input can be reported by :func:`validate_bipartition`; operations that need
    a valid partition raise :class:`PartitionError`.  Cross edges are stored
    with their ``part_low`` endpoint first.
    """

    part_low: frozenset = frozenset()
    part_high: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "part_low", frozenset(self.part_low))
        object.__setattr__(self, "part_high", frozenset(self.part_high))
        super().__post_init__()

    def _orient(self, u, v):
        if u in self.part_high and v in self.part_low and u not in self.part_low:
            return (v, u)
        if u in self.part_low and v in self.part_high:
            return (u, v)
        return super()._orient(u, v)

    def with_parts(self, part_low, part_high) -> "BipartiteGraph":
        return BipartiteGraph(self.vertices, self.edges, part_low, part_high)


@dataclass(frozen=True)
class Digraph:
    vertices: frozenset = frozenset()
    arcs: frozenset = frozenset()

    def __post_init__(self):
        vertices = frozenset(self.vertices)
        arcs = frozenset((u, v) for u, v in self.arcs)
        for u, v in arcs:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if u not in vertices or v not in vertices:
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside the vertex set")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arcs", arcs)


def validate_bipartition(G: BipartiteGraph) -> list[str]:
    """List every violated bipartite-graph invariant; empty means valid."""
    problems = []
    for v in sort_vertices(G.part_low & G.part_high):
        problems.append(f"vertex {v} is in both parts")
    for v in sort_vertices(G.vertices - (G.part_low | G.part_high)):
        problems.append(f"vertex {v} is in neither part")
    for v in sort_vertices((G.part_low | G.part_high) - G.vertices):
        problems.append(f"part member {v} is not a vertex")
    for u, v in G.sorted_edges():
        if u == v:
            problems.append(f"self-loop at {u}")
        elif not ((u in G.part_low and v in G.part_high) or (v in G.part_low and u in G.part_high)):
            problems.append(f"edge ({u}, {v}) does not join part_low to part_high")
    return problems


def orient_bipartite(G: BipartiteGraph) -> Digraph:
    """Orient every edge from ``part_low`` to ``part_high``."""
    problems = validate_bipartition(G)
    if problems:
        raise PartitionError("; ".join(problems))
    return Digraph(G.vertices, G.edges)


def underlying(D: Digraph) -> Graph:
    """Forget arc directions; antiparallel arcs collapse to one edge."""
    return Graph(D.vertices, D.arcs)


def remove_isolated(G):
    """Drop vertices of degree zero, keeping every edge."""
    keep = frozenset(v for v in G.vertices if G.adjacency[v])
    if isinstance(G, BipartiteGraph):
        return BipartiteGraph(keep, G.edges, G.part_low & keep, G.part_high & keep)
    return Graph(keep, G.edges)


def same_graph(a, b) -> bool:
    """Equal vertex sets and equal unordered edge sets, ignoring partitions."""
    return a.vertices == b.vertices and a.edge_pairs() == b.edge_pairs()


def reindex(G: BipartiteGraph) -> tuple[BipartiteGraph, dict]:
    """Relabel vertices 0..p-1 in canonical order. Returns (graph, old->new map)."""
    mapping = {v: i for i, v in enumerate(G.sorted_vertices())}
    return (
        BipartiteGraph(
            frozenset(mapping.values()),
            frozenset((mapping[u], mapping[v]) for u, v in G.edges),
            frozenset(mapping[v] for v in G.part_low),
            frozenset(mapping[v] for v in G.part_high),
        ),
        mapping,
    )
