import random

import pytest
from hypothesis import given, settings, strategies as st

from alphaprod import (
    BigracefulLabeling,
    BipartiteGraph,
    FamilySpec,
    GammaFamily,
    HypothesisError,
    VertexLabeling,
    alpha_product_labeling,
    bigraceful_product_labeling,
    enumerate_family,
    near_alpha_product_labeling,
    validate_alpha,
)
from certify import check_alpha_product, check_bigraceful_product, check_near_alpha_product
from randomgen import random_triple


def test_star_case_alpha_labels(star_case):
    G, f, family, h = star_case
    result = alpha_product_labeling(G, f, family, h)
    lab = result.labeling.assignment
    # n = 6, k_G = 0, k = 2
    assert lab[(0, 0)] == 0 and lab[(0, 2)] == 2
    assert lab[(1, 3)] == 6 * 0 + 3
    assert lab[(2, 6)] == 6 * 1 + 6 == 12
    assert max(lab.values()) == 12 == 2 * 6
    assert result.labeling.characteristic == 6 * 0 + 2
    check = validate_alpha(result.product, lab)
    assert check.valid and check.k == 2
    check_alpha_product(result, G, f, family)


def test_alpha_k2_smallest_case(k2):
    family = enumerate_family(FamilySpec({0}, {1}, 1))
    result = alpha_product_labeling(k2, VertexLabeling({0: 0, 1: 1}, "alpha", characteristic=0), family, {(0, 1): 0})
    assert result.labeling.assignment == {(0, 0): 0, (1, 1): 1}
    assert result.labeling.characteristic == 0


def test_alpha_relabels_left_factor_by_labels(star2, six_edge_family):
    # centre labeled 2, leaves 0 and 1: the low side is {leaves}
    f = VertexLabeling({0: 2, 1: 0, 2: 1}, "alpha", characteristic=1)
    result = alpha_product_labeling(star2, f, six_edge_family, {(0, 1): 0, (0, 2): 5})
    assert {a for a, _ in result.product.part_low} == {0, 1}
    check_alpha_product(result, star2, f, six_edge_family)


def test_alpha_rejects_non_alpha_left(star2, six_edge_family):
    f = VertexLabeling({0: 1, 1: 0, 2: 2}, "alpha", characteristic=0)
    with pytest.raises(HypothesisError, match="left factor"):
        alpha_product_labeling(star2, f, six_edge_family, {(0, 1): 0, (0, 2): 0})


def test_alpha_rejects_member_with_other_stable_sets(star_case):
    G, f, family, h = star_case
    # edges 0-3, 1-4 repeat the value 3: identity labeling is not graceful
    bad = BipartiteGraph(family.vertices, [(0, 3), (1, 4), (2, 3), (0, 6), (1, 6), (2, 4)], family.low, family.high)
    mixed = GammaFamily(family.members + (bad,), family.low, family.high, 6)
    with pytest.raises(HypothesisError, match="member 8"):
        alpha_product_labeling(G, f, mixed, h)


def test_alpha_rejects_wrong_family_kind(star_case):
    G, f, family, h = star_case
    near = GammaFamily(family.members, family.low, family.high, 6, "near_alpha")
    with pytest.raises(HypothesisError, match="family kind"):
        alpha_product_labeling(G, f, near, h)


def test_near_alpha_k2(k2):
    family = enumerate_family(FamilySpec({0}, {1}, 1, "near_alpha"))
    f = VertexLabeling({0: 0, 1: 1}, "near_alpha", parts=({0}, {1}))
    result = near_alpha_product_labeling(k2, f, family, {(0, 1): 0})
    assert result.labeling.assignment == {(0, 0): 0, (1, 1): 1}


def test_near_alpha_path(path_abc):
    f = VertexLabeling({0: 0, 1: 2, 2: 1}, "near_alpha", parts=({0, 2}, {1}))
    family = enumerate_family(FamilySpec({0}, {1, 2}, 2, "near_alpha"))
    assert [F.sorted_edges() for F in family.members] == [[(0, 1), (0, 2)]]
    result = near_alpha_product_labeling(path_abc, f, family, {(0, 1): 0, (1, 2): 0})
    assert result.product.num_edges == 4
    # a -> 0, c -> 1 on the A side, b -> 2 on the B side, n = 2
    assert result.labeling.assignment == {(0, 0): 0, (1, 0): 2, (2, 1): 3, (2, 2): 4}
    check_near_alpha_product(result, path_abc, family)


def test_near_alpha_rejects_non_near_alpha(path_abc):
    f = VertexLabeling({0: 1, 1: 0, 2: 2}, "near_alpha", parts=({0, 2}, {1}))
    family = enumerate_family(FamilySpec({0}, {1, 2}, 2, "near_alpha"))
    with pytest.raises(HypothesisError):
        near_alpha_product_labeling(path_abc, f, family, {(0, 1): 0, (1, 2): 0})


def test_bigraceful_k2(k2):
    family = enumerate_family(FamilySpec({0}, {0}, 1, "bigraceful"))
    bl = BigracefulLabeling({0: 0}, {1: 0}, ({0}, {1}))
    result = bigraceful_product_labeling(k2, bl, family, {(0, 1): 0})
    assert result.product.num_edges == 1
    assert list(result.labeling.f_A.values()) == [0] and list(result.labeling.f_B.values()) == [0]


def test_bigraceful_path(path_abc):
    bl = BigracefulLabeling({0: 0, 2: 1}, {1: 1}, ({0, 2}, {1}))
    family = enumerate_family(FamilySpec({0, 1}, {1}, 2, "bigraceful"))
    assert len(family) == 1
    result = bigraceful_product_labeling(path_abc, bl, family, {(0, 1): 0, (1, 2): 0})
    assert result.product.num_edges == 4
    assert sorted(result.labeling.f_A.values()) == [0, 1, 2, 3]
    assert list(result.labeling.f_B.values()) == [3]
    check_bigraceful_product(result, path_abc, bl, family)


def test_bigraceful_rejects_modular_only_left(path_abc):
    bl = BigracefulLabeling({0: 0, 2: 1}, {1: 0}, ({0, 2}, {1}))
    family = enumerate_family(FamilySpec({0, 1}, {1}, 2, "bigraceful"))
    with pytest.raises(HypothesisError):
        bigraceful_product_labeling(path_abc, bl, family, {(0, 1): 0, (1, 2): 0})


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_alpha_transfer_property(seed):
    G, f, family, h = random_triple(random.Random(seed), "alpha")
    check_alpha_product(alpha_product_labeling(G, f, family, h), G, f, family)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_near_alpha_transfer_property(seed):
    G, f, family, h = random_triple(random.Random(seed), "near_alpha")
    check_near_alpha_product(near_alpha_product_labeling(G, f, family, h), G, family)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_bigraceful_transfer_property(seed):
    G, bl, family, h = random_triple(random.Random(seed), "bigraceful")
    check_bigraceful_product(bigraceful_product_labeling(G, bl, family, h), G, bl, family)
