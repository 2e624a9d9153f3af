"""
Labeled weak products.  Given a labeled left factor G, a family of labeled
right factors and an edge assignment h, build the weak product together with
an explicit labeling of it, and certify that labeling before returning it.

With q = |E(G)| and n the common member size, vertices of G and of the
members are first renamed to their labels; then

    alpha / near-alpha:  (a, x) -> n*a + x        on the low/A side
                         (b, y) -> n*(b - 1) + y  on the high/B side
    bigraceful:          (a, x) -> n*a + x        on both sides
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

from .errors import CertificationError, HypothesisError
from .families import validate_family
from .graph import BipartiteGraph
from .labelings import (
    BigracefulLabeling,
    VertexLabeling,
    validate_alpha,
    validate_bigraceful,
    validate_near_alpha,
)
from .products import GammaFamily, normalize_assignment, weak_tensor_h

__all__ = [
    "LabeledProduct",
    "alpha_product_labeling",
    "near_alpha_product_labeling",
    "bigraceful_product_labeling",
]


@dataclass
class LabeledProduct:
    product: BipartiteGraph
    labeling: Union[VertexLabeling, BigracefulLabeling]
    provenance: dict = field(default_factory=dict)


def _require(condition, message):
    if not condition:
        raise HypothesisError(message)


def _check_family(family, kind):
    _require(family.kind == kind, f"family kind is {family.kind!r}, expected {kind!r}")
    _require(len(family) > 0, "family is empty")
    _require(family.edge_count >= 1, "family members must have at least one edge")
    problems = validate_family(family, kind)
    _require(not problems, "family hypothesis fails: " + "; ".join(problems))


def _rename(G: BipartiteGraph, names: Mapping, low, high, h: Mapping, family_size: int):
    """Rename G's vertices via ``names`` and carry h along."""
    h = normalize_assignment(G, h, family_size)
    renamed = BipartiteGraph(
        frozenset(names[v] for v in G.vertices),
        frozenset((names[u], names[v]) for u, v in G.edges),
        frozenset(names[v] for v in low),
        frozenset(names[v] for v in high),
    )
    return renamed, {(names[u], names[v]): i for (u, v), i in h.items()}


def _graded_labels(product, n):
    f = {}
    for a, x in product.part_low:
        f[(a, x)] = n * a + x
    for b, y in product.part_high:
        f[(b, y)] = n * (b - 1) + y
    return f


def alpha_product_labeling(
    G: BipartiteGraph, f_G: VertexLabeling, family: GammaFamily, h: Mapping
) -> LabeledProduct:
    """
    Alpha labeling of the weak product of an alpha-labeled G with an alpha
    family.  The result has characteristic n*k_G + k, where k is the family's
    shared characteristic.
    """
    _require(f_G.kind == "alpha", "left factor labeling is not declared alpha")
    check = validate_alpha(G, f_G, f_G.characteristic)
    _require(check.valid, "left factor labeling is not an alpha labeling: " + "; ".join(check.problems))
    q = G.num_edges
    _require(q >= 1, "left factor has no edges")
    _check_family(family, "alpha")
    k_G, k, n = f_G.characteristic, family.characteristic, family.edge_count

    labels = f_G.assignment
    low = frozenset(v for v in G.vertices if labels[v] <= k_G)
    G_named, h_named = _rename(G, labels, low, G.vertices - low, h, len(family))
    product = weak_tensor_h(G_named, family, h_named)
    f = _graded_labels(product, n)
    K = n * k_G + k
    labeling = VertexLabeling(f, "alpha", characteristic=K)

    verdict = validate_alpha(product, labeling, K)
    if not verdict:
        raise CertificationError("product labeling rejected: " + "; ".join(verdict.problems))
    provenance = dict(kind="alpha", q=q, n=n, k_G=k_G, k=k, characteristic=K,
                      k_range=verdict.k_range, assignment=h_named)
    return LabeledProduct(product, labeling, provenance)


def near_alpha_product_labeling(
    G: BipartiteGraph, f_G: VertexLabeling, family: GammaFamily, h: Mapping
) -> LabeledProduct:
    _require(f_G.kind == "near_alpha", "left factor labeling is not declared near-alpha")
    A_G, B_G = f_G.parts
    problems = validate_near_alpha(G, f_G, A_G, B_G)
    _require(not problems, "left factor labeling is not near-alpha: " + "; ".join(problems))
    q = G.num_edges
    _require(q >= 1, "left factor has no edges")
    _check_family(family, "near_alpha")
    n = family.edge_count

    G_named, h_named = _rename(G, f_G.assignment, A_G, B_G, h, len(family))
    product = weak_tensor_h(G_named, family, h_named)
    f = _graded_labels(product, n)
    parts = (product.part_low, product.part_high)
    labeling = VertexLabeling(f, "near_alpha", parts=parts)

    problems = validate_near_alpha(product, labeling, *parts)
    if problems:
        raise CertificationError("product labeling rejected: " + "; ".join(problems))
    provenance = dict(kind="near_alpha", q=q, n=n, assignment=h_named)
    return LabeledProduct(product, labeling, provenance)


def bigraceful_product_labeling(
    G: BipartiteGraph, bl_G: BigracefulLabeling, family: GammaFamily, h: Mapping
) -> LabeledProduct:
    """
    Bigraceful labeling of the weak product.  Vertices of G are renamed with
    the same side encoding the family uses: A-side label a -> a, B-side label
    b -> q + b.
    """
    problems = validate_bigraceful(G, bl_G, "strict")
    _require(not problems, "left factor labeling is not bigraceful: " + "; ".join(problems))
    q = G.num_edges
    _require(q >= 1, "left factor has no edges")
    _check_family(family, "bigraceful")
    n = family.edge_count

    A_G, B_G = bl_G.parts
    names = {v: bl_G.f_A[v] for v in A_G}
    names.update({v: q + bl_G.f_B[v] for v in B_G})
    G_named, h_named = _rename(G, names, A_G, B_G, h, len(family))
    product = weak_tensor_h(G_named, family, h_named)

    f_A = {(a, x): n * a + family.label(x) for a, x in product.part_low}
    f_B = {(b, y): n * (b - q) + family.label(y) for b, y in product.part_high}
    labeling = BigracefulLabeling(f_A, f_B, (product.part_low, product.part_high))

    problems = validate_bigraceful(product, labeling, "strict")
    if problems:
        raise CertificationError("product labeling rejected: " + "; ".join(problems))
    provenance = dict(kind="bigraceful", q=q, n=n, assignment=h_named)
    return LabeledProduct(product, labeling, provenance)
