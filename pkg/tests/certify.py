"""Per-output checks for the labeled-product constructions, written against the definitions."""

from alphaprod import validate_alpha, validate_bigraceful, validate_near_alpha


def check_alpha_product(result, G, f_G, family):
    q, n = G.num_edges, family.edge_count
    P, f = result.product, result.labeling.assignment
    K = n * f_G.characteristic + family.characteristic
    assert result.labeling.characteristic == K
    assert validate_alpha(P, f, K).valid
    assert all(0 <= f[v] <= q * n for v in P.vertices)
    values = sorted(f[b] - f[a] for a, b in P.edges)
    assert values == list(range(1, q * n + 1))
    for (a, x), (b, y) in P.edges:
        # a, b are the G labels; the value splits as n*(b - a - 1) + (y - x)
        assert f[(b, y)] - f[(a, x)] == n * (b - a - 1) + (y - x)
        assert 1 <= y - x <= n


def check_near_alpha_product(result, G, family):
    q, n = G.num_edges, family.edge_count
    P, lab = result.product, result.labeling
    assert validate_near_alpha(P, lab, *lab.parts) == []
    assert lab.parts == (P.part_low, P.part_high)
    f = lab.assignment
    assert all(0 <= f[v] <= q * n for v in P.vertices)
    assert sorted(f[b] - f[a] for a, b in P.edges) == list(range(1, q * n + 1))
    for (a, x), (b, y) in P.edges:
        assert f[(b, y)] - f[(a, x)] == n * (b - a - 1) + (y - x)


def check_bigraceful_product(result, G, bl_G, family):
    q, n = G.num_edges, family.edge_count
    P, bl = result.product, result.labeling
    assert validate_bigraceful(P, bl, "strict") == []
    g = sorted(bl.f_B[b] - bl.f_A[a] for a, b in P.edges)
    assert g == list(range(q * n))
    for (a, x), (b, y) in P.edges:
        g_G = (b - q) - a          # renamed G vertices: A-label a, B-label b - q
        g_F = family.label(y) - family.label(x)
        assert bl.f_B[(b, y)] - bl.f_A[(a, x)] == n * g_G + g_F
