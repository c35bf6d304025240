import itertools

import numpy as np
import pytest
from scipy import stats

from unitalblocks.blocks import (
    BlockPartition,
    C4Violation,
    block_graph,
    build_H,
    expected_edge_count,
    extract_onan_witness,
    random_blocks,
    verify_ks2_free,
)
from unitalblocks.graph import has_clique
from unitalblocks.unital import UnitalIncidence


def brute_edges(F, P):
    out = set()
    for y in range(F.y_count):
        nb, lab = F.y_neighbors[y].tolist(), P.labels[y].tolist()
        for i, j in itertools.combinations(range(len(nb)), 2):
            if lab[i] != lab[j]:
                out.add((min(nb[i], nb[j]), max(nb[i], nb[j])))
    return sorted(out)


def test_synthetic_single_block():
    F = UnitalIncidence.from_neighbors([[0, 1, 2]])
    P = BlockPartition(s=2, seed=0, labels=[np.array([0, 0, 1])])
    H = build_H(F, P)
    assert H.edges.tolist() == [[0, 2], [1, 2]]
    assert H.provenance_of(0, 2) == 0 and H.provenance_of(0, 1) is None


def test_all_equal_labels_give_empty_graph(incidence):
    F = incidence(3)
    P = BlockPartition(s=2, seed=0, labels=[np.zeros(len(nb), dtype=np.int64) for nb in F.y_neighbors])
    H = build_H(F, P)
    assert H.m == 0 and verify_ks2_free(H)["passed"]


@pytest.mark.parametrize("q,s,seed", [(2, 2, 0), (2, 3, 4), (3, 2, 1), (3, 3, 7)])
def test_edges_match_brute_force(q, s, seed, incidence):
    F = incidence(q)
    H = block_graph(F, s, seed)
    assert [tuple(e) for e in H.edges.tolist()] == brute_edges(F, H.partition)
    assert H.m == expected_edge_count(H) == H.graph.m
    for (u, v), y in zip(H.edges.tolist(), H.provenance.tolist()):
        assert F.adj[u, y] and F.adj[v, y]
    # parts are independent sets of H
    for y in range(F.y_count):
        for part in H.parts(y):
            assert not any(H.graph.has_edge(int(a), int(b)) for a, b in itertools.combinations(part, 2))


def test_frozen_edge_count_q2():
    from unitalblocks.unital import build_incidence
    H = block_graph(build_incidence(2), 2, 0)
    assert H.m == 22 == len(brute_edges(H.F, H.partition))


def test_determinism_and_order_independence(incidence):
    F = incidence(3)
    a, b = random_blocks(F, 3, 11), random_blocks(F, 3, 11)
    assert all(np.array_equal(x, y) for x, y in zip(a.labels, b.labels))
    # the stream of y depends on (seed, y) only
    for y in (0, 5, 27):
        rng = np.random.default_rng([11, y])
        assert np.array_equal(rng.integers(0, 3, size=9), a.labels[y])
    assert np.array_equal(block_graph(F, 3, 11).edges, block_graph(F, 3, 11).edges)


def test_invalid_s(incidence):
    with pytest.raises(ValueError, match="invalid parameter"):
        random_blocks(incidence(2), 1)


def test_more_parts_than_points(incidence):
    P = random_blocks(incidence(2), 5, 0)
    assert any(len(set(lab.tolist())) < 5 for lab in P.labels)
    assert verify_ks2_free(build_H(incidence(2), P))["passed"]


def test_uniform_labelling_chi_square():
    # one point of degree 3, s = 2: 8 labelings, 80,000 seeds
    F = UnitalIncidence.from_neighbors([[0, 1, 2]])
    counts = np.zeros(8, dtype=np.int64)
    for seed in range(80_000):
        lab = np.random.default_rng([seed, 0]).integers(0, 2, size=3)
        counts[lab[0] * 4 + lab[1] * 2 + lab[2]] += 1
    assert np.array_equal(random_blocks(F, 2, 123).labels[0], np.random.default_rng([123, 0]).integers(0, 2, size=3))
    expected = 10_000
    assert (np.abs(counts - expected) <= 3 * np.sqrt(expected * 7 / 8)).all()
    assert stats.chisquare(counts).pvalue > 1e-3


def test_c4_violation_on_corrupted_input():
    # two points both joining x0 and x1
    F = UnitalIncidence.from_neighbors([[0, 1], [0, 1]])
    P = BlockPartition(s=2, seed=0, labels=[np.array([0, 1]), np.array([1, 0])])
    with pytest.raises(C4Violation, match="C4 violation"):
        build_H(F, P)


def test_ks2_free_small_grid(incidence):
    for q in (2, 3):
        for s in (2, 3):
            for seed in range(5):
                assert verify_ks2_free(block_graph(incidence(q), s, seed))["passed"]


def test_planted_clique_detected(incidence):
    F = incidence(3)
    H = block_graph(F, 2, 0)
    quad = [0, 1, 2, 3]
    H2 = H.with_extra_edges(list(itertools.combinations(quad, 2)))
    rep = verify_ks2_free(H2)
    assert not rep["passed"] and rep["clique"] is not None
    assert "edge without provenance" in rep["extraction_error"]


def test_planted_onan_extraction():
    # X = {0,1,2,3}, six points each joining one pair: H = K_4 for s = 2
    pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    F = UnitalIncidence.from_neighbors([list(p) for p in pairs], x_count=4)
    P = BlockPartition(s=2, seed=0, labels=[np.array([0, 1])] * 6)
    H = build_H(F, P)
    assert has_clique(H.graph, 4) == (0, 1, 2, 3)
    w = extract_onan_witness(H, (0, 1, 2, 3))
    assert w.xs == (0, 1, 2, 3)
    assert w.ys == {p: i for i, p in enumerate(pairs)}
    rep = verify_ks2_free(H)
    assert rep["onan_xs"] == [0, 1, 2, 3] and rep["onan_ys"] == [0, 1, 2, 3, 4, 5]


def test_extraction_rejects_non_clique(incidence):
    H = block_graph(incidence(3), 2, 0)
    with pytest.raises(ValueError, match="invalid input"):
        extract_onan_witness(H, (0, 1, 2))
    u = next(v for v in range(1, H.n) if not H.graph.has_edge(0, v))
    others = [v for v in range(1, H.n) if v != u][:2]
    with pytest.raises(ValueError, match="not a clique"):
        extract_onan_witness(H, (0, u, *others))
