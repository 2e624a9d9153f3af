"""
Enumeration of admissible families: all labeled bipartite graphs on a fixed
pair of label sets whose identity labeling is of a given kind with exactly
those label sets as its stable sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from math import prod
from typing import Iterator

from .errors import FamilyError
from .graph import BipartiteGraph
from .labelings import (
    BigracefulLabeling,
    normalize_kind,
    validate_alpha,
    validate_bigraceful,
    validate_near_alpha,
)
from .products import GammaFamily

__all__ = [
    "FamilySpec",
    "candidate_classes",
    "iter_members",
    "enumerate_family",
    "count_family",
    "validate_family",
    "member_labeling",
]


@dataclass(frozen=True)
class FamilySpec:
    """
    Label sets ``low``/``high`` and edge count ``n``.  For bigraceful families
    ``high`` holds the B-side labels, which may coincide with A-side labels.
    """

    low: frozenset
    high: frozenset
    edge_count: int
    kind: str = "alpha"

    def __post_init__(self):
        object.__setattr__(self, "low", frozenset(self.low))
        object.__setattr__(self, "high", frozenset(self.high))
        object.__setattr__(self, "kind", normalize_kind(self.kind))

    def check(self):
        n = self.edge_count
        if self.kind == "beta":
            raise FamilyError("families are defined for alpha, near_alpha and bigraceful kinds")
        if n < 1:
            raise FamilyError("edge count must be positive")
        if not self.low or not self.high:
            raise FamilyError("both label sets must be non-empty")
        labels = self.low | self.high
        if min(labels) < 0:
            raise FamilyError("labels must be non-negative")
        if self.kind == "bigraceful":
            if max(labels) > n - 1:
                raise FamilyError(f"bigraceful labels must lie in [0, {n - 1}]")
            return
        if self.low & self.high:
            raise FamilyError(f"label sets overlap in {sorted(self.low & self.high)}")
        if max(labels) > n:
            raise FamilyError(f"labels must lie in [0, {n}]")
        if self.kind == "alpha" and max(self.low) >= min(self.high):
            raise FamilyError("no characteristic separates the low labels from the high labels")

    def high_ids(self) -> frozenset:
        if self.kind == "bigraceful":
            return frozenset(self.edge_count + y for y in self.high)
        return self.high


def candidate_classes(spec: FamilySpec) -> dict[int, list[tuple[int, int]]]:
    """Admissible low-high vertex pairs grouped by the edge value they induce."""
    spec.check()
    n = spec.edge_count
    classes = {}
    for x in sorted(spec.low):
        for y in sorted(spec.high):
            if spec.kind == "bigraceful":
                value, edge = y - x, (x, n + y)
                wanted = range(0, n)
            else:
                value, edge = y - x, (x, y)
                wanted = range(1, n + 1)
            if value in wanted:
                classes.setdefault(value, []).append(edge)
    return classes


def iter_members(spec: FamilySpec, no_isolated: bool = False) -> Iterator[BipartiteGraph]:
    """
    Members in canonical order.  Every value class must contribute exactly one
    edge; a choice per class gives pairwise distinct values automatically.
    """
    classes = candidate_classes(spec)
    n = spec.edge_count
    values = range(0, n) if spec.kind == "bigraceful" else range(1, n + 1)
    if any(v not in classes for v in values):
        return
    low, high = spec.low, spec.high_ids()
    vertices = low | high
    edge_sets = sorted(sorted(choice) for choice in cartesian(*(classes[v] for v in values)))
    for edges in edge_sets:
        G = BipartiteGraph(vertices, edges, low, high)
        if no_isolated and G.isolated_vertices():
            continue
        yield G


def enumerate_family(spec: FamilySpec, no_isolated: bool = False) -> GammaFamily:
    members = tuple(iter_members(spec, no_isolated))
    return GammaFamily(members, spec.low, spec.high_ids(), spec.edge_count, spec.kind)


def count_family(spec: FamilySpec, no_isolated: bool = False) -> int:
    if no_isolated:
        return sum(1 for _ in iter_members(spec, no_isolated=True))
    classes = candidate_classes(spec)
    n = spec.edge_count
    values = range(0, n) if spec.kind == "bigraceful" else range(1, n + 1)
    return prod(len(classes.get(v, ())) for v in values)


def member_labeling(family: GammaFamily, F: BipartiteGraph):
    """The labeling a member carries by the family's naming convention."""
    if family.kind == "bigraceful":
        return BigracefulLabeling(
            {v: family.label(v) for v in family.low},
            {v: family.label(v) for v in family.high},
            (family.low, family.high),
        )
    return {v: v for v in F.vertices}


def validate_family(family: GammaFamily, kind: str | None = None) -> list[str]:
    """
    Empty iff the members share vertex set and edge count and each member's
    labeling is of ``kind`` with stable sets / parts equal to the shared ones.
    """
    kind = normalize_kind(kind or family.kind)
    problems = family.structural_problems()
    if problems:
        return problems
    for i, F in enumerate(family.members):
        if kind == "alpha":
            if not family.low or not family.high or max(family.low) >= min(family.high):
                return ["no characteristic separates the shared low and high sets"]
            check = validate_alpha(F, member_labeling(family, F), family.characteristic)
            issues = check.problems
        elif kind == "near_alpha":
            issues = validate_near_alpha(F, member_labeling(family, F), family.low, family.high)
        elif kind == "bigraceful":
            issues = validate_bigraceful(F, member_labeling(family, F), "strict")
        else:
            raise FamilyError(f"families are not defined for kind {kind!r}")
        problems.extend(f"member {i}: {p}" for p in issues)
    return problems
