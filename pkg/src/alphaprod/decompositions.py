"""
Cyclic decompositions of K_{2nx+1} and K_{n,n} into copies of a labeled
graph, built from base blocks and checked by an exact-cover count.

Host vertices: ``i`` in Z_m for K_m; ``("x", i)`` and ``("y", i)`` for the
two sides of K_{n,n}.  Rotation by j adds j to every coordinate.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .errors import DecompositionError, PreconditionError
from .graph import BipartiteGraph, sort_vertices
from .labelings import BigracefulLabeling, VertexLabeling, validate_bigraceful, validate_near_alpha

__all__ = [
    "Host",
    "Decomposition",
    "near_alpha_to_bigraceful",
    "knn_decomposition",
    "k2nx1_decomposition",
    "verify_decomposition",
    "rotate_block",
]


@dataclass(frozen=True)
class Host:
    """``kind`` is "K" (complete graph on Z_order) or "KNN" (K_{order,order})."""

    kind: str
    order: int

    def __post_init__(self):
        if self.kind not in ("K", "KNN"):
            raise ValueError(f"unknown host kind {self.kind!r}")
        if self.order < 1:
            raise ValueError("host order must be positive")

    def vertices(self) -> list:
        if self.kind == "K":
            return list(range(self.order))
        return [(side, i) for side in ("x", "y") for i in range(self.order)]

    def is_vertex(self, v) -> bool:
        if self.kind == "K":
            return isinstance(v, int) and 0 <= v < self.order
        return (
            isinstance(v, tuple) and len(v) == 2 and v[0] in ("x", "y")
            and isinstance(v[1], int) and 0 <= v[1] < self.order
        )

    def is_edge(self, u, v) -> bool:
        if self.kind == "K":
            return u != v
        return u[0] != v[0]

    def edges(self) -> list:
        if self.kind == "K":
            return [frozenset(e) for e in combinations(range(self.order), 2)]
        m = self.order
        return [frozenset({("x", i), ("y", j)}) for i in range(m) for j in range(m)]

    def shift(self, v, j):
        if self.kind == "K":
            return (v + j) % self.order
        return (v[0], (v[1] + j) % self.order)


@dataclass(frozen=True)
class Decomposition:
    host: Host
    guest: BipartiteGraph
    base_blocks: tuple
    rotation: int

    def __post_init__(self):
        object.__setattr__(self, "base_blocks", tuple(dict(b) for b in self.base_blocks))

    def expanded_blocks(self) -> list[dict]:
        return [rotate_block(self.host, b, j) for b in self.base_blocks for j in range(self.rotation)]


def rotate_block(host: Host, block: dict, j: int) -> dict:
    return {g: host.shift(v, j) for g, v in block.items()}


def _require_no_isolated(G):
    iso = G.isolated_vertices()
    if iso:
        raise PreconditionError(f"guest has isolated vertices {sort_vertices(iso)}")


def near_alpha_to_bigraceful(G: BipartiteGraph, f: VertexLabeling) -> BigracefulLabeling:
    """Keep A-labels, lower B-labels by one: edge values move from [1,n] to [0,n-1]."""
    problems = validate_near_alpha(G, f)
    if problems:
        raise PreconditionError("not a near-alpha labeling: " + "; ".join(problems))
    _require_no_isolated(G)
    A, B = f.parts
    return BigracefulLabeling({u: f[u] for u in A}, {v: f[v] - 1 for v in B}, (A, B))


def knn_decomposition(G: BipartiteGraph, bl: BigracefulLabeling) -> Decomposition:
    n = G.num_edges
    if n < 1:
        raise PreconditionError("guest has no edges")
    if validate_bigraceful(G, bl, "strict") and validate_bigraceful(G, bl, "modular"):
        raise PreconditionError("labeling is not bigraceful in either mode")
    A, B = bl.parts
    block = {u: ("x", bl.f_A[u]) for u in A}
    block.update({v: ("y", bl.f_B[v]) for v in B})
    return Decomposition(Host("KNN", n), G, (block,), n)


def k2nx1_decomposition(G: BipartiteGraph, f: VertexLabeling, x: int) -> Decomposition:
    """
    Block j (0 <= j < x) sends u in A to f(u) and v in B to f(v) + j*n, mod
    2nx+1, so its edge lengths are exactly jn+1 .. (j+1)n.
    """
    if not isinstance(x, int) or x < 1:
        raise PreconditionError("x must be a positive integer")
    problems = validate_near_alpha(G, f)
    if problems:
        raise PreconditionError("not a near-alpha labeling: " + "; ".join(problems))
    _require_no_isolated(G)
    n = G.num_edges
    m = 2 * n * x + 1
    A, B = f.parts
    blocks = []
    for j in range(x):
        block = {u: f[u] % m for u in A}
        block.update({v: (f[v] + j * n) % m for v in B})
        if len(set(block.values())) != len(block):
            raise DecompositionError(f"base block {j} maps two guest vertices to one host vertex")
        blocks.append(block)
    return Decomposition(Host("K", m), G, tuple(blocks), m)


def _block_key(block):
    return frozenset(block.items())


def verify_decomposition(dec: Decomposition) -> list[str]:
    """
    Independent check: each base block is an injective embedding of the
    guest, the rotated blocks cover every host edge exactly once, and the
    block set is closed under rotation.
    """
    host, guest = dec.host, dec.guest
    problems = []
    if dec.rotation != host.order:
        problems.append(f"rotation order {dec.rotation} differs from host order {host.order}")
    if not dec.base_blocks:
        problems.append("no base blocks")
    for i, block in enumerate(dec.base_blocks):
        if set(block) != guest.vertices:
            problems.append(f"block {i} is not defined on exactly the guest vertices")
            continue
        bad = [g for g, v in block.items() if not host.is_vertex(v)]
        if bad:
            problems.append(f"block {i} maps {sort_vertices(bad)} outside the host")
            continue
        if len(set(block.values())) != len(block):
            problems.append(f"block {i} is not injective")
        images = set()
        for u, v in guest.sorted_edges():
            if not host.is_edge(block[u], block[v]):
                problems.append(f"block {i} sends edge ({u}, {v}) to a non-edge")
            e = frozenset((block[u], block[v]))
            if e in images:
                problems.append(f"block {i} sends two guest edges to one host edge")
            images.add(e)
    if problems:
        return problems

    expanded = dec.expanded_blocks()
    cover = Counter(
        frozenset((b[u], b[v])) for b in expanded for u, v in guest.edges
    )
    host_edges = host.edges()
    for e in host_edges:
        c = cover.get(e, 0)
        if c != 1:
            problems.append(f"host edge {tuple(sort_vertices(e))} covered {c} times")
    stray = set(cover) - set(host_edges)
    for e in stray:
        problems.append(f"block edge {tuple(e)} is not a host edge")

    keys = {_block_key(b) for b in expanded}
    for b in expanded:
        if _block_key(rotate_block(host, b, 1)) not in keys:
            problems.append("block set is not closed under rotation")
            break
    return problems
