"""
Graceful-type vertex labelings: beta (graceful), alpha, near-alpha and
bigraceful.  Validators return a list of problems (empty means valid); the
exhaustive search is a separate backtracking procedure so the two can be
checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Mapping, Optional

from .errors import PreconditionError, SearchBoundError
from .graph import sort_vertices, vertex_key

__all__ = [
    "KINDS",
    "VertexLabeling",
    "BigracefulLabeling",
    "AlphaCheck",
    "validate_beta",
    "validate_alpha",
    "stable_sets_from_alpha",
    "validate_near_alpha",
    "validate_bigraceful",
    "search_labelings",
    "normalize_kind",
    "DEFAULT_SEARCH_BOUND",
]

KINDS = ("beta", "alpha", "near_alpha", "bigraceful")
DEFAULT_SEARCH_BOUND = 8


def normalize_kind(kind: str) -> str:
    k = kind.replace("-", "_").lower()
    if k not in KINDS:
        raise ValueError(f"unknown labeling kind {kind!r}")
    return k


@dataclass(frozen=True)
class VertexLabeling:
    """
    A vertex -> integer map together with its kind.

    ``characteristic`` is required for alpha labelings and ``parts`` (A, B)
    for near-alpha labelings.
    """

    assignment: Mapping
    kind: str = "beta"
    characteristic: Optional[int] = None
    parts: Optional[tuple] = None

    def __post_init__(self):
        kind = normalize_kind(self.kind)
        if kind == "bigraceful":
            raise ValueError("bigraceful labelings use BigracefulLabeling")
        if kind == "alpha" and self.characteristic is None:
            raise ValueError("an alpha labeling needs a characteristic")
        if kind == "near_alpha" and self.parts is None:
            raise ValueError("a near-alpha labeling needs parts (A, B)")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "assignment", dict(self.assignment))
        if self.parts is not None:
            A, B = self.parts
            object.__setattr__(self, "parts", (frozenset(A), frozenset(B)))

    def __getitem__(self, v):
        return self.assignment[v]


@dataclass(frozen=True)
class BigracefulLabeling:
    """Pair of injections f_A on part A and f_B on part B."""

    f_A: Mapping
    f_B: Mapping
    parts: tuple

    kind = "bigraceful"

    def __post_init__(self):
        A, B = self.parts
        object.__setattr__(self, "parts", (frozenset(A), frozenset(B)))
        object.__setattr__(self, "f_A", dict(self.f_A))
        object.__setattr__(self, "f_B", dict(self.f_B))

    def edge_value(self, u, v) -> int:
        """f_B(v) - f_A(u) for an edge with u in A and v in B (either order accepted)."""
        A, _ = self.parts
        if u not in A:
            u, v = v, u
        return self.f_B[v] - self.f_A[u]


@dataclass
class AlphaCheck:
    """Outcome of :func:`validate_alpha`.

    ``k`` is the smallest admissible characteristic (or the requested one) and
    ``k_range`` the inclusive range of all admissible characteristics.
    """

    valid: bool
    k: Optional[int] = None
    k_range: Optional[tuple] = None
    problems: list = field(default_factory=list)

    def __bool__(self):
        return self.valid


def _assignment(f) -> Mapping:
    return f.assignment if isinstance(f, VertexLabeling) else f


def _require_labels(G, f: Mapping):
    missing = [v for v in G.vertices if v not in f]
    if missing:
        raise PreconditionError(f"no label for vertices {sort_vertices(missing)}")


def _check_partition(G, A, B):
    A, B = frozenset(A), frozenset(B)
    if A & B or (A | B) != G.vertices:
        raise PreconditionError("(A, B) does not partition the vertex set")
    return A, B


def validate_beta(G, f) -> list[str]:
    """Graceful check: injective labels in [0,q] whose edge differences are exactly 1..q."""
    f = _assignment(f)
    _require_labels(G, f)
    q = G.num_edges
    problems = []
    for v in sort_vertices(set(f) - G.vertices):
        problems.append(f"label given for non-vertex {v}")
    seen = {}
    for v in G.sorted_vertices():
        value = f[v]
        if not isinstance(value, int) or not 0 <= value <= q:
            problems.append(f"label {value!r} of vertex {v} outside [0, {q}]")
        if value in seen:
            problems.append(f"vertices {seen[value]} and {v} share label {value}")
        else:
            seen[value] = v
    by_value = {}
    for u, v in G.sorted_edges():
        d = abs(f[u] - f[v])
        if not 1 <= d <= q:
            problems.append(f"edge ({u}, {v}) has value {d} outside [1, {q}]")
        elif d in by_value:
            problems.append(f"edges {by_value[d]} and ({u}, {v}) share value {d}")
        else:
            by_value[d] = (u, v)
    return problems


def _alpha_range(G, f):
    if not G.edges:
        return (0, 0)
    lo = max(min(f[u], f[v]) for u, v in G.edges)
    hi = min(max(f[u], f[v]) for u, v in G.edges) - 1
    return (lo, hi)


def validate_alpha(G, f, k: Optional[int] = None) -> AlphaCheck:
    """
    Alpha check.  With ``k=None`` the smallest admissible characteristic is
    reported; otherwise the given ``k`` itself must be admissible.
    """
    if k is None and isinstance(f, VertexLabeling) and f.kind == "alpha":
        k = f.characteristic
    labels = _assignment(f)
    problems = validate_beta(G, labels)
    if problems:
        return AlphaCheck(False, problems=problems)
    lo, hi = _alpha_range(G, labels)
    if lo > hi:
        return AlphaCheck(False, problems=[f"no characteristic: need {lo} <= k <= {hi}"])
    if k is not None and not lo <= k <= hi:
        return AlphaCheck(
            False, k_range=(lo, hi), problems=[f"k={k} outside admissible range [{lo}, {hi}]"]
        )
    return AlphaCheck(True, k=lo if k is None else k, k_range=(lo, hi))


def stable_sets_from_alpha(G, f, k: int) -> tuple[frozenset, frozenset]:
    """(L, H) = ({u: f(u) <= k}, {u: f(u) > k}), asserted stable."""
    check = validate_alpha(G, f, k)
    if not check:
        raise PreconditionError("not an alpha labeling with this k: " + "; ".join(check.problems))
    labels = _assignment(f)
    low = frozenset(v for v in G.vertices if labels[v] <= k)
    high = G.vertices - low
    for u, v in G.edges:
        if (u in low) == (v in low):
            raise AssertionError(f"edge ({u}, {v}) inside a stable set")
    return low, high


def validate_near_alpha(G, f, A=None, B=None) -> list[str]:
    if A is None and B is None and isinstance(f, VertexLabeling) and f.parts is not None:
        A, B = f.parts
    if A is None or B is None:
        raise PreconditionError("near-alpha validation needs parts (A, B)")
    A, B = _check_partition(G, A, B)
    labels = _assignment(f)
    problems = validate_beta(G, labels)
    for u, v in G.sorted_edges():
        if u in B and v in A:
            u, v = v, u
        if not (u in A and v in B):
            problems.append(f"edge ({u}, {v}) does not join A to B")
        elif not labels[u] < labels[v]:
            problems.append(f"edge ({u}, {v}): A-label {labels[u]} not below B-label {labels[v]}")
    return problems


def _check_side(name, side, fmap, n, modular):
    problems = []
    missing = [v for v in side if v not in fmap]
    if missing:
        raise PreconditionError(f"f_{name} undefined on {sort_vertices(missing)}")
    seen = {}
    for v in sort_vertices(side):
        value = fmap[v]
        if not isinstance(value, int) or not 0 <= value <= n - 1:
            problems.append(f"f_{name}({v}) = {value!r} outside [0, {n - 1}]")
            continue
        key = value % n if modular else value
        if key in seen:
            problems.append(f"f_{name} not injective: {seen[key]} and {v}")
        else:
            seen[key] = v
    return problems


def validate_bigraceful(G, bl: BigracefulLabeling, mode: str = "strict") -> list[str]:
    """
    Bigraceful check on the ordered partition ``bl.parts``.  In ``modular``
    mode the edge values f_B(v) - f_A(u) need only be distinct modulo n.
    """
    if mode not in ("strict", "modular"):
        raise ValueError(f"unknown mode {mode!r}")
    A, B = _check_partition(G, *bl.parts)
    n = G.num_edges
    modular = mode == "modular" and n > 0
    problems = _check_side("A", A, bl.f_A, n, modular) + _check_side("B", B, bl.f_B, n, modular)
    seen = {}
    for u, v in G.sorted_edges():
        if u in B and v in A:
            u, v = v, u
        if not (u in A and v in B):
            problems.append(f"edge ({u}, {v}) does not join A to B")
            continue
        g = bl.f_B[v] - bl.f_A[u]
        if modular:
            g %= n
        elif not 0 <= g <= n - 1:
            problems.append(f"edge ({u}, {v}) has value {g} outside [0, {n - 1}]")
            continue
        if g in seen:
            problems.append(f"edges {seen[g]} and ({u}, {v}) share value {g}")
        else:
            seen[g] = (u, v)
    return problems


# -- exhaustive search -------------------------------------------------------


def _search_order(G) -> list:
    # connected-first order so edge values are checked as early as possible
    order, placed = [], set()
    for root in G.sorted_vertices():
        if root in placed:
            continue
        stack = [root]
        placed.add(root)
        while stack:
            v = stack.pop(0)
            order.append(v)
            for w in sort_vertices(G.adjacency[v]):
                if w not in placed:
                    placed.add(w)
                    stack.append(w)
    return order


def _graceful_assignments(G):
    """All graceful assignments, as dicts, by depth-first search."""
    q = G.num_edges
    order = _search_order(G)
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in G.adjacency[v] if pos[w] < i] for i, v in enumerate(order)]
    labels = {}
    used_labels = [False] * (q + 1)
    used_values = [False] * (q + 1)
    out = []

    def extend(i):
        if i == len(order):
            out.append(dict(labels))
            return
        v = order[i]
        for value in range(q + 1):
            if used_labels[value]:
                continue
            diffs = [abs(value - labels[w]) for w in back[i]]
            if any(d == 0 or used_values[d] for d in diffs) or len(set(diffs)) < len(diffs):
                continue
            used_labels[value] = True
            for d in diffs:
                used_values[d] = True
            labels[v] = value
            extend(i + 1)
            del labels[v]
            for d in diffs:
                used_values[d] = False
            used_labels[value] = False

    extend(0)
    return out


def _bigraceful_assignments(G, A, B, modular):
    n = G.num_edges
    if any((u in A) == (v in A) for u, v in G.edges):
        return []
    order = [v for v in _search_order(G)]
    pos = {v: i for i, v in enumerate(order)}
    back = [[w for w in G.adjacency[v] if pos[w] < i] for i, v in enumerate(order)]
    labels = {}
    used = {True: set(), False: set()}
    used_values = set()
    out = []

    def extend(i):
        if i == len(order):
            out.append(dict(labels))
            return
        v = order[i]
        in_a = v in A
        for value in range(n):
            if value in used[in_a]:
                continue
            values = []
            for w in back[i]:
                g = labels[w] - value if in_a else value - labels[w]
                if modular:
                    g %= n
                elif g < 0:
                    break
                values.append(g)
            else:
                if any(g in used_values for g in values) or len(set(values)) < len(values):
                    continue
                used[in_a].add(value)
                used_values.update(values)
                labels[v] = value
                extend(i + 1)
                del labels[v]
                used_values.difference_update(values)
                used[in_a].discard(value)

    extend(0)
    return out


def search_labelings(G, kind: str, mode: str = "strict", max_edges: int = DEFAULT_SEARCH_BOUND) -> list:
    """
    Every labeling of the given kind, by exhaustive search.

    Alpha labelings carry their smallest characteristic; near-alpha labelings
    are listed once per admissible (A, B) split; bigraceful labelings use the
    graph's declared (part_low, part_high) as (A, B).  Results are ordered
    lexicographically by the label vector over the sorted vertex list.
    """
    kind = normalize_kind(kind)
    if G.num_edges > max_edges:
        raise SearchBoundError(f"{G.num_edges} edges exceeds the search bound {max_edges}")
    vertices = G.sorted_vertices()

    if kind == "bigraceful":
        A, B = frozenset(G.part_low), frozenset(G.part_high)
        found = _bigraceful_assignments(G, A, B, modular=(mode == "modular" and G.num_edges > 0))
        found.sort(key=lambda lab: [lab[v] for v in vertices])
        return [
            BigracefulLabeling({v: lab[v] for v in A}, {v: lab[v] for v in B}, (A, B))
            for lab in found
        ]

    found = _graceful_assignments(G)
    found.sort(key=lambda lab: [lab[v] for v in vertices])
    if kind == "beta":
        return [VertexLabeling(lab, "beta") for lab in found]
    if kind == "alpha":
        out = []
        for lab in found:
            lo = max((min(lab[u], lab[v]) for u, v in G.edges), default=0)
            hi = min((max(lab[u], lab[v]) for u, v in G.edges), default=1)
            if lo < hi:
                out.append(VertexLabeling(lab, "alpha", characteristic=lo))
        return out

    out = []
    free = [v for v in vertices if not G.adjacency[v]]
    for lab in found:
        small = {u if lab[u] < lab[v] else v for u, v in G.edges}
        large = {v if lab[u] < lab[v] else u for u, v in G.edges}
        if small & large:
            continue
        # isolated vertices may sit on either side; B-membership vector orders the splits
        for bits in cartesian((0, 1), repeat=len(free)):
            B = frozenset(large | {v for v, bit in zip(free, bits) if bit})
            out.append(VertexLabeling(lab, "near_alpha", parts=(G.vertices - B, B)))
    return out
