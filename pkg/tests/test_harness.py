import math
from fractions import Fraction

import numpy as np
import pytest

from unitalblocks.blocks import block_graph
from unitalblocks.graph import Block, DenseGraph, count_triangles
from unitalblocks.harness import (
    ExperimentRecord,
    PipelineConfig,
    emit_outputs,
    fit_loglog,
    fit_records,
    union_bound_t,
    pipeline_theorem,
    records_csv,
    sparsify,
    target_exponent,
    triangle_diagnostic,
)


def rec(q, seed, n, alpha, s=2):
    return ExperimentRecord(q=q, s=s, seed=seed, n_H=n, e_H=0, p_keep=1.0, n_G0=n, alpha_method="exact",
                            alpha_value=alpha, exact_flag=True)


def test_target_exponents():
    assert target_exponent(2) == Fraction(1, 3)
    assert target_exponent(3) == Fraction(3, 7)
    assert target_exponent(4) == Fraction(5, 11)


def test_union_bound_t():
    assert union_bound_t(7, 2) == pytest.approx(7 * math.log2(7) ** 3)
    assert union_bound_t(7, 2) == pytest.approx(154.878098, abs=1e-6)


def test_sparsify(incidence):
    H = block_graph(incidence(3), 2, 0)
    assert sparsify(H, 1.0, 4).adjacency().tolist() == H.graph.adjacency().tolist()
    a, b = sparsify(H, 0.3, 9), sparsify(H, 0.3, 9)
    assert a.labels == b.labels
    for bad in (0, -0.1, 1.5):
        with pytest.raises(ValueError):
            sparsify(H, bad, 0)


def test_sparsify_mean_count(incidence):
    H = block_graph(incidence(5), 2, 0)
    counts = [sparsify(H, 0.2, seed).n for seed in range(1000)]
    sigma = math.sqrt(525 * 0.2 * 0.8 / 1000)
    assert abs(np.mean(counts) - 105) <= 3 * sigma


def test_fit_sanity():
    ns = [10, 100, 1000, 10_000]
    slope, _ = fit_loglog(ns, [7.0] * 4)
    assert abs(slope) < 1e-9
    slope, _ = fit_loglog(ns, [n ** (1 / 3) for n in ns])
    assert abs(slope - 1 / 3) < 1e-9


def test_fit_refused_below_three_q():
    f = fit_records([rec(3, 0, 20, 8), rec(5, 0, 100, 28)])
    assert f.slope is None and "refused" in f.note
    f = fit_records([rec(3, 0, 8, 2), rec(5, 0, 64, 4), rec(7, 0, 512, 8), rec(7, 1, 512, 8)])
    assert f.slope == pytest.approx(1 / 3, abs=1e-9)


def test_record_invariants():
    with pytest.raises(ValueError):
        rec(3, 0, 10, 11)
    assert rec(3, 0, 10, 4).target_exponent == Fraction(1, 3)


def test_pipeline_q3():
    cfg = PipelineConfig(qs=[3], s=2)
    r = pipeline_theorem(3, 2, 0, cfg)
    assert (r.n_H, r.e_H) == (63, 512)
    assert r.exact_flag and r.alpha_method == "exact" and r.alpha_value <= r.n_G0
    assert r.p_keep == pytest.approx(1 / 3) and r.onan_status == "verified"
    assert r.t_rounded == math.ceil(r.t_real)
    again = pipeline_theorem(3, 2, 0, cfg)
    assert again.csv_row() == r.csv_row()


def test_config_validation():
    with pytest.raises(ValueError):
        PipelineConfig(qs=[4])
    with pytest.raises(ValueError):
        PipelineConfig(qs=[3], trials=0)
    assert PipelineConfig(qs=[3], s=3).cap == 80


def test_emit_outputs(tmp_path):
    with pytest.raises(ValueError):
        emit_outputs([], tmp_path)
    paths = emit_outputs([rec(3, 0, 21, 8)], tmp_path / "a")
    text = open(paths["csv"]).read().splitlines()
    assert text[0] == "q,s,seed,n_H,e_H,p_keep,n_G0,alpha_method,alpha_value,exact,seconds"
    assert text[1] == "3,2,0,21,0,1.0,21,exact,8,true,"
    assert open(paths["svg"]).read().startswith("<svg")
    emit_outputs([rec(3, 0, 21, 8)], tmp_path / "b")
    for name in ("records.csv", "records.json", "fit.json", "loglog.svg"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_timing_column_only_on_request():
    r = rec(3, 0, 21, 8)
    r.wall_seconds = 1.25
    assert records_csv([r]).splitlines()[1].endswith(",")
    assert records_csv([r], timing=True).splitlines()[1].endswith(",1.250")


def test_triangle_diagnostic(incidence):
    empty = triangle_diagnostic(DenseGraph.empty(5))
    assert empty["triangles"] == 0 and empty["triangle_ratio"] == 0
    assert triangle_diagnostic(DenseGraph.complete(4))["triangles"] == 4
    H = block_graph(incidence(3), 2, 0)
    rep = triangle_diagnostic(H)
    brute = sum(1 for a in range(H.n) for b in range(a + 1, H.n) for c in range(b + 1, H.n)
                if H.graph.has_edge(a, b) and H.graph.has_edge(b, c) and H.graph.has_edge(a, c))
    assert rep["triangles"] == brute == count_triangles(H.graph)
    assert rep["c6_F"] > 0 and rep["random_c6"] > 0
