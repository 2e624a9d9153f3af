"""
Graph products: the direct product of digraphs, its edge-indexed
generalization, the weak tensor product of bipartite graphs and its
edge-indexed generalization, plus checkers relating the weak products to
the directed ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import AssignmentError, FamilyError, PartitionError, PreconditionError
from .graph import (
    BipartiteGraph,
    Digraph,
    orient_bipartite,
    remove_isolated,
    sort_vertices,
    underlying,
    validate_bipartition,
)

__all__ = [
    "GammaFamily",
    "normalize_assignment",
    "direct_product",
    "tensor_h_product",
    "weak_tensor",
    "weak_tensor_h",
    "check_weak_from_direct",
    "check_weak_h_from_direct",
]


@dataclass(frozen=True)
class GammaFamily:
    """
    Ordered family of bipartite graphs on a common vertex set ``low | high``,
    each with ``edge_count`` edges from ``low`` to ``high``.

    For alpha and near-alpha families a vertex id is its label.  Bigraceful
    families allow the two label sets to overlap, so a high-side vertex with
    label y has id ``edge_count + y``; :meth:`label` decodes either side.
    """

    members: tuple
    low: frozenset
    high: frozenset
    edge_count: int
    kind: str = "alpha"

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        object.__setattr__(self, "low", frozenset(self.low))
        object.__setattr__(self, "high", frozenset(self.high))

    def __len__(self):
        return len(self.members)

    def __getitem__(self, i):
        return self.members[i]

    @property
    def vertices(self) -> frozenset:
        return self.low | self.high

    @property
    def characteristic(self) -> int:
        """Smallest characteristic shared by every member of an alpha family."""
        return max(self.low)

    def label(self, v) -> int:
        if self.kind == "bigraceful" and v in self.high:
            return v - self.edge_count
        return v

    def high_labels(self) -> frozenset:
        return frozenset(self.label(v) for v in self.high)

    def structural_problems(self) -> list[str]:
        problems = []
        if self.low & self.high:
            problems.append(f"shared sets overlap in {sort_vertices(self.low & self.high)}")
        for i, F in enumerate(self.members):
            if F.vertices != self.vertices:
                extra = sort_vertices(F.vertices - self.vertices)
                absent = sort_vertices(self.vertices - F.vertices)
                problems.append(f"member {i} vertex set differs (extra {extra}, missing {absent})")
            if F.part_low != self.low or F.part_high != self.high:
                problems.append(f"member {i} parts differ from the shared (low, high)")
            if F.num_edges != self.edge_count:
                problems.append(f"member {i} has {F.num_edges} edges, expected {self.edge_count}")
            for u, v in F.sorted_edges():
                if not (u in self.low and v in self.high):
                    problems.append(f"member {i} edge ({u}, {v}) does not join low to high")
        return problems

    def require_valid(self):
        problems = self.structural_problems()
        if problems:
            raise FamilyError("; ".join(problems))


def normalize_assignment(G: BipartiteGraph, h: Mapping, size: int) -> dict:
    """
    Re-key ``h`` by G's stored edge tuples (either endpoint order is accepted)
    and check it is total with indices in ``range(size)``.
    """
    lookup = {frozenset(e): e for e in G.edges}
    out = {}
    for key, index in h.items():
        e = lookup.get(frozenset(key))
        if e is None:
            raise AssignmentError(f"assignment key {tuple(key)} is not an edge")
        if e in out and out[e] != index:
            raise AssignmentError(f"edge {e} assigned twice")
        if not isinstance(index, int) or not 0 <= index < size:
            raise AssignmentError(f"edge {e} assigned index {index!r} outside [0, {size})")
        out[e] = index
    missing = [e for e in G.sorted_edges() if e not in out]
    if missing:
        raise AssignmentError(f"assignment undefined on edges {missing}")
    return out


def direct_product(D: Digraph, H: Digraph) -> Digraph:
    vertices = frozenset((a, x) for a in D.vertices for x in H.vertices)
    arcs = frozenset(((a, x), (b, y)) for a, b in D.arcs for x, y in H.arcs)
    return Digraph(vertices, arcs)


def tensor_h_product(D: Digraph, members: Sequence[Digraph], h: Mapping) -> Digraph:
    """Direct product where the arc (a, b) of D uses the member ``members[h[(a, b)]]``."""
    if not members:
        raise PreconditionError("empty family")
    V = members[0].vertices
    for i, M in enumerate(members):
        if M.vertices != V:
            raise PreconditionError(f"member {i} does not share the common vertex set")
    for arc in D.arcs:
        if arc not in h:
            raise AssignmentError(f"assignment undefined on arc {arc}")
        if not 0 <= h[arc] < len(members):
            raise AssignmentError(f"arc {arc} assigned index {h[arc]} outside the family")
    vertices = frozenset((a, x) for a in D.vertices for x in V)
    arcs = frozenset(
        ((a, x), (b, y)) for a, b in D.arcs for x, y in members[h[(a, b)]].arcs
    )
    return Digraph(vertices, arcs)


def _require_bipartite(G, name):
    problems = validate_bipartition(G)
    if problems:
        raise PartitionError(f"{name}: " + "; ".join(problems))


def weak_tensor(G: BipartiteGraph, F: BipartiteGraph) -> BipartiteGraph:
    _require_bipartite(G, "left factor")
    _require_bipartite(F, "right factor")
    low = frozenset((a, x) for a in G.part_low for x in F.part_low)
    high = frozenset((b, y) for b in G.part_high for y in F.part_high)
    edges = frozenset(((a, x), (b, y)) for a, b in G.edges for x, y in F.edges)
    return BipartiteGraph(low | high, edges, low, high)


def weak_tensor_h(G: BipartiteGraph, family: GammaFamily, h: Mapping) -> BipartiteGraph:
    """
    Weak product where the edge ab of G is replaced by a copy of the member
    ``family[h[ab]]``.  Isolated product vertices are kept.
    """
    _require_bipartite(G, "left factor")
    family.require_valid()
    h = normalize_assignment(G, h, len(family))
    low = frozenset((a, x) for a in G.part_low for x in family.low)
    high = frozenset((b, y) for b in G.part_high for y in family.high)
    edges = frozenset(
        ((a, x), (b, y)) for (a, b), i in h.items() for x, y in family[i].edges
    )
    return BipartiteGraph(low | high, edges, low, high)


def _compare(expected, actual) -> list[str]:
    problems = []
    for v in sort_vertices(expected.vertices - actual.vertices):
        problems.append(f"vertex {v} only in the weak product")
    for v in sort_vertices(actual.vertices - expected.vertices):
        problems.append(f"vertex {v} only in the directed construction")
    e1, e2 = expected.edge_pairs(), actual.edge_pairs()
    for e in sorted((tuple(sort_vertices(e)) for e in e1 - e2), key=str):
        problems.append(f"edge {e} only in the weak product")
    for e in sorted((tuple(sort_vertices(e)) for e in e2 - e1), key=str):
        problems.append(f"edge {e} only in the directed construction")
    return problems


def _require_no_isolated(G, name):
    iso = G.isolated_vertices()
    if iso:
        raise PreconditionError(f"{name} has isolated vertices {sort_vertices(iso)}")


def check_weak_from_direct(G: BipartiteGraph, F: BipartiteGraph) -> list[str]:
    """
    Compare weak_tensor(G, F) with the underlying graph of the product of the
    low-to-high orientations, isolated vertices removed.  Returns mismatches.
    """
    _require_no_isolated(G, "left factor")
    _require_no_isolated(F, "right factor")
    directed = direct_product(orient_bipartite(G), orient_bipartite(F))
    return _compare(weak_tensor(G, F), remove_isolated(underlying(directed)))


def check_weak_h_from_direct(G: BipartiteGraph, family: GammaFamily, h: Mapping) -> list[str]:
    _require_no_isolated(G, "left factor")
    for i, F in enumerate(family.members):
        _require_no_isolated(F, f"family member {i}")
    weak = weak_tensor_h(G, family, h)
    h_star = normalize_assignment(G, h, len(family))
    oriented = [orient_bipartite(F) for F in family.members]
    directed = tensor_h_product(orient_bipartite(G), oriented, h_star)
    return _compare(weak, remove_isolated(underlying(directed)))
