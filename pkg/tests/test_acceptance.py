"""
End-to-end acceptance checks.  Each test prints one ``criterion N: PASS`` or
``criterion N: FAIL`` line (run with ``-s`` to see them inline; they are also
echoed in the terminal summary).
"""

import contextlib
import random
import time

import pytest

from alphaprod import (
    BipartiteGraph,
    FamilySpec,
    GammaFamily,
    alpha_product_labeling,
    bigraceful_product_labeling,
    check_weak_from_direct,
    check_weak_h_from_direct,
    enumerate_family,
    k2nx1_decomposition,
    knn_decomposition,
    near_alpha_product_labeling,
    same_graph,
    validate_alpha,
    verify_decomposition,
    weak_tensor,
    weak_tensor_h,
)
from alphaprod.catalog import random_assignment, random_caterpillar
from alphaprod.cli import main
from alphaprod.textio import family_from_document, parse_document
from certify import check_alpha_product, check_bigraceful_product, check_near_alpha_product
from oracles import brute_alpha, brute_beta, brute_bigraceful, brute_family, brute_near_alpha
from randomgen import corpus, oracle, random_family, random_instance, random_triple

pytestmark = pytest.mark.acceptance

RESULTS = {}


@contextlib.contextmanager
def criterion(number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        RESULTS[number] = ("FAIL", title, time.perf_counter() - start)
        print(f"\ncriterion {number}: FAIL  {title}")
        raise
    RESULTS[number] = ("PASS", title, time.perf_counter() - start)
    print(f"\ncriterion {number}: PASS  {title}")


def test_criterion_1_six_edge_family(capsys):
    with criterion(1, "alpha family L=0,1,2 H=3,4,6 n=6 has exactly 8 members"):
        start = time.perf_counter()
        code = main(["enumerate", "--kind", "alpha", "--L", "0,1,2", "--H", "3,4,6", "--n", "6"])
        out = capsys.readouterr().out
        elapsed = time.perf_counter() - start
        assert code == 0
        family = family_from_document(parse_document(out))
        assert len(family) == 8
        for F in family.members:
            assert F.part_low == {0, 1, 2} and F.part_high == {3, 4, 6}
            check = validate_alpha(F, {v: v for v in F.vertices})
            assert check.valid and check.k == 2
        members = sorted(F.sorted_edges() for F in family.members)
        assert members == brute_family({0, 1, 2}, {3, 4, 6}, 6, "alpha")
        assert elapsed < 1.0


def test_criterion_2_star_case(star_case):
    with criterion(2, "two-edge star product: 9 vertices, 12 edges, characteristic 2"):
        G, f, family, h = star_case
        P = weak_tensor_h(G, family, h)
        assert len(P.vertices) == 9 and P.num_edges == 12
        result = alpha_product_labeling(G, f, family, h)
        assert same_graph(result.product, P)
        lab = result.labeling.assignment
        assert set(lab.values()) <= set(range(13))
        assert sorted(lab[b] - lab[a] for a, b in P.edges) == list(range(1, 13))
        assert result.labeling.characteristic == 6 * 0 + 2 == 2
        assert validate_alpha(result.product, lab, 2).valid


def _transfer_suite(kind, construct, certify, trials=100):
    rng = random.Random(f"transfer-{kind}")
    for _ in range(trials):
        G, labeling, family, h = random_triple(rng, kind)
        certify(construct(G, labeling, family, h), G, labeling, family)


def test_criterion_3_alpha_transfer():
    with criterion(3, "alpha transfer on 100 random triples"):
        start = time.perf_counter()
        _transfer_suite("alpha", alpha_product_labeling, check_alpha_product)
        assert time.perf_counter() - start < 30.0


def test_criterion_4_near_alpha_and_bigraceful_transfer():
    with criterion(4, "near-alpha and bigraceful transfer on 100 random triples each"):
        _transfer_suite("near_alpha", near_alpha_product_labeling,
                        lambda r, G, f, fam: check_near_alpha_product(r, G, fam))
        _transfer_suite("bigraceful", bigraceful_product_labeling, check_bigraceful_product)


def test_criterion_5_weak_products_from_directed():
    with criterion(5, "weak products match the directed constructions on 200 instances each"):
        rng = random.Random("weak-products")
        for _ in range(200):
            G = random_caterpillar(rng, 5)
            F = random_family(rng, max_members=1).members[0]
            assert check_weak_from_direct(G, F) == []
        for _ in range(200):
            G, family, h = random_instance(rng)
            assert check_weak_h_from_direct(G, family, h) == []


def test_criterion_6_cyclic_decompositions():
    with criterion(6, "cyclic decompositions of K_{2nx+1} and K_{n,n}"):
        start = time.perf_counter()
        checked = 0
        for name, G in corpus().items():
            if G.isolated_vertices():
                continue
            for f in oracle(name, "near_alpha"):
                for x in (1, 2, 3):
                    assert verify_decomposition(k2nx1_decomposition(G, f, x)) == [], (name, x)
                    checked += 1
            if G.num_edges <= 5:
                for mode in ("strict", "modular"):
                    for bl in oracle(name, "bigraceful", mode):
                        assert verify_decomposition(knn_decomposition(G, bl)) == [], name
                        checked += 1
        assert checked > 0
        assert time.perf_counter() - start < 60.0


def _vector(labeling, V):
    return tuple(labeling[v] for v in V)


def test_criterion_7_oracle_agreement():
    with criterion(7, "exhaustive search agrees with validator-filtered brute force"):
        for name, G in corpus().items():
            V = G.sorted_vertices()
            assert sorted(_vector(f, V) for f in oracle(name, "beta")) == brute_beta(G), name
            alpha = sorted((_vector(f, V), f.characteristic) for f in oracle(name, "alpha"))
            assert alpha == brute_alpha(G), name
            near = sorted((_vector(f, V), tuple(v in f.parts[1] for v in V)) for f in oracle(name, "near_alpha"))
            assert near == brute_near_alpha(G), name
            for mode in ("strict", "modular"):
                big = sorted(tuple({**bl.f_A, **bl.f_B}[v] for v in V) for bl in oracle(name, "bigraceful", mode))
                assert big == brute_bigraceful(G, mode), (name, mode)


def test_criterion_8_singleton_reduction():
    with criterion(8, "singleton family with constant h reduces to the weak tensor product"):
        rng = random.Random("reduction")
        for _ in range(50):
            G = random_caterpillar(rng, 5)
            F = random_family(rng, no_isolated=rng.random() < 0.5, max_members=1).members[0]
            single = GammaFamily((F,), F.part_low, F.part_high, F.num_edges, "alpha")
            h = {e: 0 for e in G.sorted_edges()}
            P, Q = weak_tensor_h(G, single, h), weak_tensor(G, F)
            assert same_graph(P, Q)
            assert P.part_low == Q.part_low and P.part_high == Q.part_high
