"""
Brute-force reference routines.  They enumerate whole candidate spaces and
filter through the validators, so they share no code path with the
backtracking search or the value-class family enumerator they check.
"""

from itertools import combinations, permutations, product

from alphaprod.graph import BipartiteGraph
from alphaprod.labelings import (
    BigracefulLabeling,
    validate_alpha,
    validate_beta,
    validate_bigraceful,
    validate_near_alpha,
)


def injections(vertices, values):
    for image in permutations(values, len(vertices)):
        yield dict(zip(vertices, image))


def brute_beta(G):
    V = G.sorted_vertices()
    out = [f for f in injections(V, range(G.num_edges + 1)) if not validate_beta(G, f)]
    return sorted(tuple(f[v] for v in V) for f in out)


def brute_alpha(G):
    V = G.sorted_vertices()
    out = []
    for f in injections(V, range(G.num_edges + 1)):
        check = validate_alpha(G, f)
        if check.valid:
            out.append((tuple(f[v] for v in V), check.k))
    return sorted(out)


def all_splits(vertices):
    for bits in product((0, 1), repeat=len(vertices)):
        B = frozenset(v for v, b in zip(vertices, bits) if b)
        yield frozenset(vertices) - B, B


def brute_near_alpha(G):
    """Every (labels, A, B) the validator accepts, over all 2^p splits."""
    V = G.sorted_vertices()
    out = []
    graceful = [f for f in injections(V, range(G.num_edges + 1)) if not validate_beta(G, f)]
    splits = list(all_splits(V))
    for f in graceful:
        for A, B in splits:
            if not validate_near_alpha(G, f, A, B):
                out.append((tuple(f[v] for v in V), tuple(v in B for v in V)))
    return sorted(out)


def brute_bigraceful(G, mode="strict"):
    V = G.sorted_vertices()
    A = [v for v in V if v in G.part_low]
    B = [v for v in V if v in G.part_high]
    n = G.num_edges
    out = []
    for fa in injections(A, range(n)):
        for fb in injections(B, range(n)):
            bl = BigracefulLabeling(fa, fb, (frozenset(A), frozenset(B)))
            if not validate_bigraceful(G, bl, mode):
                both = {**fa, **fb}
                out.append(tuple(both[v] for v in V))
    return sorted(out)


def brute_family(low, high, n, kind):
    """All n-subsets of low x high whose identity labeling is valid with the given sides."""
    low, high = sorted(low), sorted(high)
    out = []
    if kind == "bigraceful":
        pairs = [(x, n + y) for x in low for y in high]
        A, B = frozenset(low), frozenset(n + y for y in high)
    else:
        pairs = [(x, y) for x in low for y in high]
        A, B = frozenset(low), frozenset(high)
    for edges in combinations(pairs, n):
        G = BipartiteGraph(A | B, edges, A, B)
        if kind == "alpha":
            ok = validate_alpha(G, {v: v for v in G.vertices}, max(low)).valid
        elif kind == "near_alpha":
            ok = not validate_near_alpha(G, {v: v for v in G.vertices}, A, B)
        else:
            bl = BigracefulLabeling({v: v for v in A}, {v: v - n for v in B}, (A, B))
            ok = not validate_bigraceful(G, bl, "strict")
        if ok:
            out.append(sorted(edges))
    return sorted(out)
