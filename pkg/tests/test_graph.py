import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitalblocks import graph as g
from unitalblocks.graph import (
    Block,
    DenseGraph,
    alpha_s_exact,
    alpha_s_greedy,
    count_c6_bipartite,
    count_ks_free_sets,
    count_triangles,
    enumerate_ks,
    has_clique,
    is_ks_free,
)


def random_graph(n, p, seed):
    rng = np.random.default_rng(seed)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return DenseGraph.from_edges(n, edges)


def brute_cliques(G, k):
    return [c for c in itertools.combinations(range(G.n), k)
            if all(G.has_edge(u, v) for u, v in itertools.combinations(c, 2))]


def brute_alpha(G, s):
    for size in range(G.n, -1, -1):
        for sub in itertools.combinations(range(G.n), size):
            if not any(all(G.has_edge(u, v) for u, v in itertools.combinations(c, 2))
                       for c in itertools.combinations(sub, s)):
                return size
    return 0


graphs = st.builds(random_graph, st.integers(1, 9), st.floats(0.1, 0.9), st.integers(0, 10**6))


def test_small_named_graphs():
    K4, C5, P = DenseGraph.complete(4), DenseGraph.cycle(5), DenseGraph.petersen()
    assert has_clique(K4, 4) == (0, 1, 2, 3)
    assert has_clique(C5, 3) is None
    assert has_clique(P, 3) is None
    assert enumerate_ks(K4, 3) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert enumerate_ks(C5, 3) == []
    assert alpha_s_exact(C5, 2).value == 2
    assert alpha_s_exact(K4, 3).value == 2
    assert alpha_s_exact(P, 2).value == 4 == brute_alpha(P, 2)
    assert count_triangles(K4) == 4
    assert count_triangles(DenseGraph.cycle(6)) == 0
    assert count_triangles(P) == 0
    assert P.m == 15 and all(P.degree(v) == 3 for v in range(10))


@pytest.mark.parametrize("n", range(2, 9))
def test_complete_graph_clique_counts(n):
    for s in range(2, n + 1):
        assert len(enumerate_ks(DenseGraph.complete(n), s)) == math.comb(n, s)


def test_greedy_examples():
    for s in (2, 3, 4):
        assert alpha_s_greedy(DenseGraph.empty(7), s, trials=3).value == 7
    P = DenseGraph.petersen()
    r1 = alpha_s_greedy(P, 2, trials=100, seed=5)
    r2 = alpha_s_greedy(P, 2, trials=100, seed=5)
    assert r1.value == 4 and not r1.exact
    assert (r1.value, r1.witness) == (r2.value, r2.witness)


@settings(max_examples=150, deadline=None)
@given(graphs, st.integers(2, 4))
def test_has_clique_matches_enumeration(G, k):
    want = brute_cliques(G, k)
    got = has_clique(G, k)
    if want:
        assert got is not None and tuple(sorted(got)) in want
    else:
        assert got is None
    assert enumerate_ks(G, k) == want


@settings(max_examples=120, deadline=None)
@given(graphs, st.integers(2, 3))
def test_alpha_exact_matches_brute_force(G, s):
    res = alpha_s_exact(G, s)
    assert res.exact and res.value == brute_alpha(G, s)
    assert len(res.witness) == res.value and is_ks_free(G, res.witness, s)
    assert (res.value == G.n) == (not enumerate_ks(G, s))


def test_greedy_below_exact_on_200_graphs():
    for seed in range(200):
        rng = np.random.default_rng(seed)
        G = random_graph(int(rng.integers(3, 13)), float(rng.uniform(0.2, 0.8)), seed)
        s = 2 + seed % 2
        ex = alpha_s_exact(G, s)
        gr = alpha_s_greedy(G, s, trials=20, seed=seed)
        assert gr.value <= ex.value
        # deleting a vertex never increases alpha_s
        assert alpha_s_exact(G.without_vertex(seed % G.n), s).value <= ex.value


def test_block_bound_keeps_exactness():
    # complete tripartite K_{2,2,2} declared as a block, plus a pendant edge
    parts = [0b000011, 0b001100, 0b110000]
    edges = [(u, v) for a, b in itertools.combinations(range(3), 2)
             for u in g.bits(parts[a]) for v in g.bits(parts[b])]
    G = DenseGraph.from_edges(7, edges + [(5, 6)], blocks=[Block(tuple(parts))])
    for s in (3, 4):
        assert alpha_s_exact(G, s).value == brute_alpha(G, s)


def test_budget_flags_inexact():
    G = random_graph(40, 0.5, 1)
    r = alpha_s_exact(G, 3, budget=50)
    assert not r.exact and r.nodes_explored <= 51
    assert is_ks_free(G, r.witness, 3)


def test_sparse_clique_path_agrees(monkeypatch):
    monkeypatch.setattr(g, "SPARSE_CLIQUE_MIN_N", 0)
    for seed in range(40):
        G = random_graph(11, 0.55, seed)
        for k in (4, 5):
            got = has_clique(G, k)
            want = brute_cliques(G, k)
            assert (got is None) == (not want)
            if got is not None:
                assert tuple(sorted(got)) in want


def test_count_triangles_matches_triple_scan():
    for seed in range(20):
        G = random_graph(14, 0.4, seed)
        assert count_triangles(G) == len(brute_cliques(G, 3))


def brute_c6(B):
    nx_, ny_ = B.shape
    count = 0
    for xs in itertools.combinations(range(nx_), 3):
        for ys in itertools.permutations(range(ny_), 3):
            a, b, c = xs
            # cycle a y0 b y1 c y2 a; for fixed a<b<c the three joining points fix the cycle
            if B[a, ys[0]] and B[b, ys[0]] and B[b, ys[1]] and B[c, ys[1]] and B[c, ys[2]] and B[a, ys[2]]:
                count += 1
    return count


def test_c6_examples():
    hexagon = np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]], dtype=bool)
    assert count_c6_bipartite(hexagon) == 1
    assert count_c6_bipartite(np.ones((3, 3), dtype=bool)) == 6
    path = np.array([[1, 0], [1, 1]], dtype=bool)
    assert count_c6_bipartite(path) == 0
    for seed in range(15):
        B = np.random.default_rng(seed).random((5, 6)) < 0.5
        assert count_c6_bipartite(B) == brute_c6(B)


def test_c6_unital_q2(incidence):
    F = incidence(2)
    assert count_c6_bipartite(F.adj) == brute_c6(F.adj)


def test_count_ks_free_sets_oracle():
    for seed in range(10):
        G = random_graph(10, 0.4, seed)
        for s in (2, 3):
            for t in range(0, 6):
                want = sum(1 for sub in itertools.combinations(range(10), t) if is_ks_free(G, sub, s))
                assert count_ks_free_sets(G, s, t) == want


def test_induced_and_formats_of_rows():
    G = random_graph(9, 0.5, 3)
    H = G.induced([8, 2, 5])
    assert H.labels == [8, 2, 5]
    assert H.has_edge(0, 1) == G.has_edge(8, 2)
    assert (G.adjacency() == G.to_csr().toarray().astype(bool)).all()
    assert (G.complement().adjacency() == ~G.adjacency() ^ np.eye(9, dtype=bool)).all()
    with pytest.raises(ValueError):
        DenseGraph.from_edges(3, [(1, 1)])
