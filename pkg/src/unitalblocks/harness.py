"""End-to-end pipeline: F -> H -> random vertex sample -> alpha_s, plus experiments.

Records are deterministic functions of (q, s, seed, budgets).  Wall-clock times
are kept out of the CSV unless asked for, so repeated runs give identical files.
"""
from __future__ import annotations

import csv
import io as _io
import math
import statistics
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import numpy as np

from .blocks import BlockGraph, block_graph, verify_ks2_free
from .field import is_prime
from .graph import DenseGraph, alpha_s_exact, alpha_s_greedy, binom, count_c6_bipartite, count_triangles
from .io import write_json
from .svg import loglog_svg
from .unital import build_incidence, verify_unital

CSV_FIELDS = ["q", "s", "seed", "n_H", "e_H", "p_keep", "n_G0", "alpha_method", "alpha_value", "exact", "seconds"]


class StageFailure(RuntimeError):
    def __init__(self, stage: str, detail: str = ""):
        super().__init__(f"stage '{stage}' failed" + (f": {detail}" if detail else ""))
        self.stage = stage


def target_exponent(s: int) -> Fraction:
    return Fraction(2 * s - 3, 4 * s - 5)


def keep_probability(q: int, s: int) -> float:
    return q ** (-1.0 / (s - 1))


def union_bound_t(q: int, s: int) -> float:
    """q^(2 - 1/(s-1)) (log2 q)^3, the set size in the union-bound step."""
    return q ** (2 - 1 / (s - 1)) * math.log2(q) ** 3


def sparsify(H: BlockGraph | DenseGraph, p: float, seed: int) -> DenseGraph:
    """Induced subgraph on vertices kept independently with probability p."""
    if not 0 < p <= 1:
        raise ValueError(f"p={p} out of range (0, 1]")
    G = H.graph if isinstance(H, BlockGraph) else H
    keep = np.flatnonzero(np.random.default_rng(seed).random(G.n) < p)
    return G.induced(keep.tolist())


@dataclass
class ExperimentRecord:
    q: int
    s: int
    seed: int
    n_H: int
    e_H: int
    p_keep: float
    n_G0: int
    alpha_method: str
    alpha_value: int
    exact_flag: bool
    wall_seconds: float | None = None
    t_real: float = 0.0
    t_rounded: int = 0
    t_rounding: str = "ceil"
    alpha_nodes: int = 0
    onan_status: str = ""

    def __post_init__(self):
        if self.n_G0 > self.n_H or self.alpha_value > self.n_G0:
            raise ValueError("record violates n_G0 <= n_H or alpha <= n_G0")

    @property
    def target_exponent(self) -> Fraction:
        return target_exponent(self.s)

    def csv_row(self, timing: bool = False) -> list:
        secs = f"{self.wall_seconds:.3f}" if timing and self.wall_seconds is not None else ""
        return [self.q, self.s, self.seed, self.n_H, self.e_H, repr(self.p_keep), self.n_G0,
                self.alpha_method, self.alpha_value, "true" if self.exact_flag else "false", secs]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["target_exponent"] = str(self.target_exponent)
        return d


@dataclass
class PipelineConfig:
    qs: list[int]
    s: int = 2
    trials: int = 5
    seeds: list[int] | None = None
    onan_budget: int | None = 1_000_000
    alpha_budget: int | None = 200_000
    exact_cap: int | None = None
    greedy_trials: int = 200
    out_dir: str | None = None
    lambda_c: float | None = None
    threshold: int | None = None
    timing: bool = False

    def __post_init__(self):
        bad = [q for q in self.qs if not is_prime(q)]
        if bad:
            raise ValueError(f"q must be prime, got {bad}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")

    @property
    def seed_list(self) -> list[int]:
        return list(self.seeds) if self.seeds is not None else list(range(self.trials))

    @property
    def cap(self) -> int:
        if self.exact_cap is not None:
            return self.exact_cap
        return 160 if self.s == 2 else 80


@lru_cache(maxsize=16)
def _verified_unital(q: int, onan_budget: int | None):
    F = build_incidence(q)
    return F, verify_unital(F, budget=onan_budget)


def estimate_alpha(G: DenseGraph, s: int, cap: int, budget: int | None, greedy_trials: int, seed: int):
    """Exact branch and bound below the cap, otherwise (or on budget) greedy."""
    if G.n <= cap:
        res = alpha_s_exact(G, s, budget=budget)
        if res.exact:
            return res
        greedy = alpha_s_greedy(G, s, greedy_trials, seed)
        return res if res.value >= greedy.value else greedy
    return alpha_s_greedy(G, s, greedy_trials, seed)


def pipeline_theorem(q: int, s: int, seed: int, config: PipelineConfig | None = None) -> ExperimentRecord:
    """Build, verify, sample and measure; a failed check raises StageFailure."""
    cfg = config or PipelineConfig(qs=[q], s=s)
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    start = time.perf_counter()
    F, report = _verified_unital(q, cfg.onan_budget)
    if not report.passed:
        raise StageFailure("verify-unital", str({k: report[k] for k in ("sizes", "degrees", "c4_free", "onan_status")}))
    H = block_graph(F, s, seed)
    free = verify_ks2_free(H)
    if not free["passed"]:
        raise StageFailure("verify-free", f"found K_{s + 2} {free['clique']}")
    p = keep_probability(q, s)
    G0 = sparsify(H, p, seed)
    alpha = estimate_alpha(G0, s, cfg.cap, cfg.alpha_budget, cfg.greedy_trials, seed)
    t = union_bound_t(q, s)
    return ExperimentRecord(
        q=q, s=s, seed=seed, n_H=H.n, e_H=H.m, p_keep=p, n_G0=G0.n,
        alpha_method="exact" if alpha.exact else "greedy", alpha_value=alpha.value, exact_flag=alpha.exact,
        wall_seconds=time.perf_counter() - start, t_real=t, t_rounded=math.ceil(t),
        alpha_nodes=alpha.nodes_explored, onan_status=report["onan_status"],
    )


@dataclass
class FitResult:
    slope: float | None
    intercept: float | None
    points: list[tuple[float, float]]
    target: Fraction
    note: str = "diagnostic only: desk-scale q is far from the asymptotic regime"

    def to_dict(self) -> dict:
        return {"slope": self.slope, "intercept": self.intercept, "points": self.points,
                "target_exponent": str(self.target), "target_value": float(self.target), "note": self.note}


def fit_loglog(ns, alphas) -> tuple[float, float]:
    """Least-squares line through (log2 n, log2 alpha)."""
    x = np.log2(np.asarray(ns, dtype=float))
    y = np.log2(np.asarray(alphas, dtype=float))
    A = np.stack([x, np.ones_like(x)], axis=1)
    (slope, icpt), *_ = np.linalg.lstsq(A, y, rcond=None)
    return float(slope), float(icpt)


def fit_records(records: list[ExperimentRecord]) -> FitResult:
    """Fit over per-q medians of (n_G0, alpha); needs at least three q values."""
    by_q: dict[int, list[ExperimentRecord]] = {}
    for r in records:
        by_q.setdefault(r.q, []).append(r)
    pts = [(statistics.median(r.n_G0 for r in rs), statistics.median(r.alpha_value for r in rs))
           for _, rs in sorted(by_q.items())]
    s = records[0].s
    if len(by_q) < 3:
        return FitResult(None, None, pts, target_exponent(s), note=f"fit refused: {len(by_q)} q values, need 3")
    slope, icpt = fit_loglog(*zip(*pts))
    return FitResult(slope, icpt, pts, target_exponent(s))


@dataclass
class ExperimentResult:
    records: list[ExperimentRecord]
    fit: FitResult
    paths: dict = field(default_factory=dict)


def scaling_experiment(config: PipelineConfig) -> ExperimentResult:
    records = [pipeline_theorem(q, config.s, seed, config)
               for q in sorted(config.qs) for seed in config.seed_list]
    fit = fit_records(records)
    res = ExperimentResult(records, fit)
    if config.out_dir is not None:
        res.paths = emit_outputs(records, config.out_dir, fit=fit, timing=config.timing)
    return res


def records_csv(records: list[ExperimentRecord], timing: bool = False) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in sorted(records, key=lambda r: (r.q, r.s, r.seed)):
        w.writerow(r.csv_row(timing))
    return buf.getvalue()


def emit_outputs(records: list[ExperimentRecord], out_dir, fit: FitResult | None = None,
                 timing: bool = False, reports: dict | None = None) -> dict:
    """Write records.csv, records.json, fit.json and loglog.svg under out_dir."""
    if not records:
        raise ValueError("no records to emit")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {"csv": out / "records.csv", "json": out / "records.json"}
    paths["csv"].write_text(records_csv(records, timing))
    ordered = sorted(records, key=lambda r: (r.q, r.s, r.seed))
    rows = [r.to_dict() for r in ordered]
    if not timing:
        for row in rows:
            row.pop("wall_seconds")
    write_json(rows, paths["json"])
    if timing:
        paths["timings"] = out / "timings.csv"
        paths["timings"].write_text("q,s,seed,seconds\n" + "".join(
            f"{r.q},{r.s},{r.seed},{r.wall_seconds:.3f}\n" for r in ordered))
    if reports:
        paths["reports"] = out / "reports.json"
        write_json(reports, paths["reports"])
    if fit is None:
        fit = fit_records(records)
    paths["fit"] = out / "fit.json"
    write_json(fit.to_dict(), paths["fit"])
    paths["svg"] = out / "loglog.svg"
    lines = []
    if fit.points:
        cx = float(np.mean([math.log2(n) for n, _ in fit.points]))
        cy = float(np.mean([math.log2(a) for _, a in fit.points]))
        tgt = float(fit.target)
        lines.append((tgt, cy - tgt * cx, f"reference slope {fit.target}", "#c0392b"))
    if fit.slope is not None:
        lines.append((fit.slope, fit.intercept, f"fit slope {fit.slope:.4f}", "#27ae60"))
    paths["svg"].write_text(loglog_svg(fit.points, lines, title=f"alpha_{records[0].s} vs n (per-q medians)"))
    return {k: str(v) for k, v in paths.items()}


def triangle_diagnostic(H: BlockGraph | DenseGraph, F=None) -> dict:
    """Triangles of H against a random graph of equal density; C6 count of F."""
    G = H.graph if isinstance(H, BlockGraph) else H
    if F is None and isinstance(H, BlockGraph):
        F = H.F
    n, m = G.n, G.m
    tri = count_triangles(G)
    dens = 2 * m / (n * (n - 1)) if n > 1 else 0.0
    expected = binom(n, 3) * dens**3
    out = {"n": n, "e": m, "triangles": tri, "random_triangles": expected,
           "triangle_ratio": tri / expected if expected > 0 else 0.0}
    if F is not None:
        c6 = count_c6_bipartite(F.adj)
        nx, ny, e = F.x_count, F.y_count, F.edge_count
        pd = e / (nx * ny)
        # labelled 6-cycles x1 y1 x2 y2 x3 y3 up to rotation and reflection
        rand_c6 = (nx * (nx - 1) * (nx - 2)) * (ny * (ny - 1) * (ny - 2)) / 6 * pd**6
        out.update(c6_F=c6, random_c6=rand_c6, c6_ratio=c6 / rand_c6 if rand_c6 > 0 else 0.0)
    return out
