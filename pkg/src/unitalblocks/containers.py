"""Hypergraph containers for K_s-free sets of the block graph.

The container step is a greedy fingerprint ("scythe") procedure: it keeps a
set A of still-possible vertices and a fingerprint S.  Each round it looks at
the traces e \\ S of the hyperedges that lie inside S u A, takes the vertex of
largest degree among the smallest traces, and either moves it into S (if it
belongs to the independent set being encoded) or discards it.  A trace that
shrinks to a single vertex w forces w out, since S u {w} would hold an edge.
The run depends on I only through these membership answers, so S alone
reproduces the container S u A.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable

import numpy as np

from .blocks import BlockGraph
from .graph import DenseGraph, binom, bits, enumerate_ks, mask_of


class CodegreeFailure(ValueError):
    pass


class DegenerateInput(ValueError):
    pass


class FamilyBudgetExceeded(RuntimeError):
    pass


# ----------------------------------------------------------------------------
# hypergraphs

@dataclass
class UniformHypergraph:
    """s-uniform hypergraph on local vertices 0..n-1.

    ``vertices[i]`` names local vertex i in the ground set (e.g. an X-id).
    ``edges`` is an (m, s) array of sorted rows in lexicographic order.
    """

    s: int
    n: int
    edges: np.ndarray
    vertices: np.ndarray | None = None

    def __post_init__(self):
        e = np.asarray(self.edges, dtype=np.int64).reshape(-1, self.s)
        e = np.sort(e, axis=1)
        if len(e):
            if (np.diff(e, axis=1) == 0).any():
                raise ValueError("hyperedge with repeated vertex")
            if e.min() < 0 or e.max() >= self.n:
                raise ValueError("hyperedge outside the vertex range")
            e = np.unique(e, axis=0)
        self.edges = e
        if self.vertices is None:
            self.vertices = np.arange(self.n)
        self.vertices = np.asarray(self.vertices, dtype=np.int64)

    @property
    def v(self) -> int:
        return self.n

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_masks(self) -> list[int]:
        return [mask_of(row) for row in self.edges.tolist()]

    @classmethod
    def from_cliques(cls, G: DenseGraph, s: int) -> "UniformHypergraph":
        cl = enumerate_ks(G, s)
        return cls(s, G.n, np.array(cl, dtype=np.int64).reshape(-1, s))

    @classmethod
    def random(cls, n: int, s: int, m: int, seed: int = 0) -> "UniformHypergraph":
        rng = np.random.default_rng(seed)
        pool = list(combinations(range(n), s))
        m = min(m, len(pool))
        pick = rng.choice(len(pool), size=m, replace=False)
        return cls(s, n, np.array([pool[i] for i in sorted(pick)], dtype=np.int64).reshape(-1, s))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        return not any(e & m == e for e in self.edge_masks)

    def independent_sets(self) -> list[tuple[int, ...]]:
        """All independent sets, by brute force over 2^n subsets."""
        masks = self.edge_masks
        out = []
        for sub in range(1 << self.n):
            if not any(e & sub == e for e in masks):
                out.append(tuple(bits(sub)))
        return out


def delta_ell(Hg: UniformHypergraph, ell: int) -> int:
    """Largest number of hyperedges sharing one ell-set of vertices."""
    if not 1 <= ell <= Hg.s:
        raise ValueError(f"ell={ell} out of range 1..{Hg.s}")
    if Hg.e == 0:
        return 0
    subsets = np.concatenate([Hg.edges[:, list(cols)] for cols in combinations(range(Hg.s), ell)])
    _, counts = np.unique(subsets, axis=0, return_counts=True)
    return int(counts.max())


# ----------------------------------------------------------------------------
# parameters and the codegree hypothesis

@dataclass
class ContainerParams:
    """Integers b, r of the container step, with the real (p, lambda) they came from."""

    s: int
    b: int
    r: int
    p: Fraction | float | None = None
    lam: Fraction | float | None = None
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.b < 1 or self.r < 1:
            raise ValueError("b and r must be positive integers")

    @property
    def delta(self) -> Fraction:
        return Fraction(1, 2 ** (self.s * (self.s + 1)))

    @classmethod
    def from_p_lambda(cls, s: int, v: int, p, lam) -> "ContainerParams":
        """Round b = ceil(p v) and r = floor(v / lambda), clamping to >= 1.

        The rounded ratios b/v and v/r are the effective p and lambda.
        """
        if p <= 0 or lam <= 0:
            raise ValueError("p and lambda must be positive")
        delta = Fraction(1, 2 ** (s * (s + 1)))
        if Fraction(lam) < delta:
            raise ValueError(f"parameter error: lambda={lam} < delta={delta} makes 1 - delta/lambda negative")
        notes = []
        b = math.ceil(Fraction(p) * v)
        if b < 1:
            b = 1
            notes.append("b clamped to 1")
        if Fraction(p) * v != b:
            notes.append(f"b = ceil(p*v) = {b} from p*v = {float(Fraction(p) * v):.6g}")
        r = math.floor(Fraction(v) / Fraction(lam))
        if r < 1:
            notes.append(f"r clamped to 1 from v/lambda = {float(Fraction(v) / Fraction(lam)):.6g}")
            r = 1
        elif Fraction(v) / Fraction(lam) != r:
            notes.append(f"r = floor(v/lambda) = {r}")
        return cls(s=s, b=b, r=r, p=p, lam=lam, notes=notes)

    def size_bound(self, v: int) -> Fraction:
        return v - self.delta * self.r

    def to_dict(self) -> dict:
        return {
            "s": self.s, "b": self.b, "r": self.r,
            "p": None if self.p is None else float(self.p),
            "lambda": None if self.lam is None else float(self.lam),
            "delta": str(self.delta), "notes": list(self.notes),
        }


@dataclass
class CodegreeCheck:
    passed: bool
    rows: list[dict]


def check_codegree(Hg: UniformHypergraph, params: ContainerParams) -> CodegreeCheck:
    """Test Delta_ell <= (b/v)^(ell-1) e / r for every ell, in exact rationals."""
    if Hg.e == 0:
        raise ValueError("non-empty required: the hypergraph has no edges")
    rows = []
    for ell in range(1, Hg.s + 1):
        d = delta_ell(Hg, ell)
        bound = Fraction(params.b, Hg.v) ** (ell - 1) * Fraction(Hg.e, params.r)
        rows.append({"ell": ell, "delta": d, "bound": bound, "margin": bound - d, "ok": d <= bound})
    return CodegreeCheck(all(r["ok"] for r in rows), rows)


def check_codegree_p_lambda(Hg: UniformHypergraph, p, lam) -> CodegreeCheck:
    """Delta_ell <= lambda p^(ell-1) e / v, exact when p and lambda are rational."""
    if Hg.e == 0:
        raise ValueError("non-empty required: the hypergraph has no edges")
    exact = isinstance(p, (int, Fraction)) and isinstance(lam, (int, Fraction))
    rows = []
    for ell in range(1, Hg.s + 1):
        d = delta_ell(Hg, ell)
        if exact:
            bound = Fraction(lam) * Fraction(p) ** (ell - 1) * Fraction(Hg.e, Hg.v)
        else:
            bound = float(lam) * float(p) ** (ell - 1) * Hg.e / Hg.v
        rows.append({"ell": ell, "delta": d, "bound": bound, "margin": bound - d, "ok": d <= bound})
    return CodegreeCheck(all(r["ok"] for r in rows), rows)


# ----------------------------------------------------------------------------
# the container step

@dataclass
class ContainerEntry:
    fingerprint: tuple[int, ...]
    container: tuple[int, ...]
    bound: Fraction | float
    source: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.container)


@dataclass
class ContainerFamily:
    """Fingerprint/container pairs plus the audit trail that produced them."""

    entries: list[ContainerEntry]
    depth: int = 0
    params: list[dict] = field(default_factory=list)
    audit: list[dict] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    status: str = "ok"
    cause: str | None = None

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def containers(self) -> list[tuple[int, ...]]:
        return [e.container for e in self.entries]

    @property
    def max_size(self) -> int:
        return max((e.size for e in self.entries), default=0)

    def covers(self, vertices) -> bool:
        want = set(int(v) for v in vertices)
        return any(want <= set(c) for c in self.containers)

    def to_dict(self, with_containers: bool = True) -> dict:
        d = {
            "depth": self.depth,
            "status": self.status,
            "cause": self.cause,
            "size": len(self.entries),
            "params": self.params,
            "audit": self.audit,
            "violations": self.violations,
            "fingerprints": [list(e.fingerprint) for e in self.entries],
            "container_sizes": [e.size for e in self.entries],
        }
        if with_containers:
            d["containers"] = [list(e.container) for e in self.entries]
        return d


def _scythe(masks: list[int], n: int, cap: int, answer: Callable[[int], bool]):
    """One run of the fingerprint procedure; returns (S, container) as local masks."""
    A = (1 << n) - 1
    S = 0
    size = 0
    traces = list(masks)
    while True:
        if not traces or size == cap:
            return S, S | A
        v = _pick(traces)
        vb = 1 << v
        if answer(v):
            S |= vb
            size += 1
            A &= ~vb
            traces, A = _absorb(traces, vb, A)
        else:
            A &= ~vb
            traces = [t for t in traces if not t & vb]


def _pick(traces: list[int]) -> int:
    """Vertex of largest degree among the smallest traces; ties to the smaller id."""
    k = min(t.bit_count() for t in traces)
    deg: dict[int, int] = {}
    for t in traces:
        if t.bit_count() == k:
            for v in bits(t):
                deg[v] = deg.get(v, 0) + 1
    return min(deg, key=lambda v: (-deg[v], v))


def _absorb(traces: list[int], vb: int, A: int):
    """Move v into S: shrink the traces through it, then force out singletons."""
    nxt = [t & ~vb for t in traces]
    forced = 0
    for t in nxt:
        if t.bit_count() == 1:
            forced |= t
    if forced:
        A &= ~forced
        nxt = [t for t in nxt if not t & forced]
    return nxt, A


def _enumerate_leaves(masks: list[int], n: int, cap: int, budget: int | None):
    """Walk both answers at every decision; each leaf is one (S, container)."""
    out: list[tuple[int, int]] = []
    nodes = 0
    stack = [((1 << n) - 1, 0, 0, list(masks))]
    while stack:
        A, S, size, traces = stack.pop()
        nodes += 1
        if budget is not None and nodes > budget:
            raise FamilyBudgetExceeded(f"container enumeration exceeded {budget} nodes")
        if not traces or size == cap:
            out.append((S, S | A))
            continue
        v = _pick(traces)
        vb = 1 << v
        # "out" branch pushed first so the "in" branch is explored first
        stack.append((A & ~vb, S, size, [t for t in traces if not t & vb]))
        t_in, A_in = _absorb(traces, vb, A & ~vb)
        stack.append((A_in, S | vb, size + 1, t_in))
    return out, nodes


@dataclass
class ContainerStep:
    """Result of the container step: the family plus the encoding g and decoding f."""

    family: ContainerFamily
    params: ContainerParams
    hypergraph: UniformHypergraph
    codegree: CodegreeCheck
    nodes: int = 0

    @property
    def cap(self) -> int:
        return self.params.s * self.params.b

    def _local(self, vertices) -> set[int]:
        pos = {int(x): i for i, x in enumerate(self.hypergraph.vertices)}
        return {pos[int(x)] for x in vertices}

    def g(self, independent) -> tuple[int, ...]:
        """Fingerprint of an independent set (in ground labels)."""
        Hg = self.hypergraph
        local = self._local(independent)
        S, _ = _scythe(Hg.edge_masks, Hg.n, self.cap, lambda v: v in local)
        return tuple(int(Hg.vertices[v]) for v in bits(S))

    def f(self, fingerprint) -> tuple[int, ...]:
        """Container selected by a fingerprint (in ground labels)."""
        Hg = self.hypergraph
        local = self._local(fingerprint)
        _, C = _scythe(Hg.edge_masks, Hg.n, self.cap, lambda v: v in local)
        return tuple(int(Hg.vertices[v]) for v in bits(C))


def container_step(Hg: UniformHypergraph, params: ContainerParams, budget: int | None = 2_000_000,
                   source: dict | None = None) -> ContainerStep:
    """Container family for all independent sets of Hg under parameters (b, r).

    Refuses to run when the codegree hypothesis fails.  Containers larger than
    v - delta*r are recorded in ``family.violations`` as parameter-audit failures.
    """
    check = check_codegree(Hg, params)
    if not check.passed:
        bad = [r["ell"] for r in check.rows if not r["ok"]]
        raise CodegreeFailure(f"codegree condition fails for ell in {bad}")
    cap = params.s * params.b
    leaves, nodes = _enumerate_leaves(Hg.edge_masks, Hg.n, cap, budget)
    bound = params.size_bound(Hg.v)
    names = Hg.vertices
    entries, violations = [], []
    for S, C in leaves:
        fp = tuple(int(names[v]) for v in bits(S))
        cont = tuple(int(names[v]) for v in bits(C))
        entries.append(ContainerEntry(fp, cont, bound, dict(source or {})))
        if len(cont) > bound:
            violations.append({"fingerprint": list(fp), "size": len(cont), "bound": float(bound)})
    fam = ContainerFamily(entries, params=[params.to_dict()], violations=violations,
                          status="ok" if not violations else "audit-failure")
    fam.audit.append({"leaves": len(leaves), "nodes": nodes, "v": Hg.v, "e": Hg.e, "cap": cap})
    return ContainerStep(fam, params, Hg, check, nodes)


def container_family(Hg: UniformHypergraph, p, lam, budget: int | None = 2_000_000,
                     source: dict | None = None) -> ContainerStep:
    """Container step driven by reals (p, lambda) with b = ceil(p v), r = floor(v/lambda)."""
    if Hg.v < 2:
        raise ValueError("need at least two vertices")
    params = ContainerParams.from_p_lambda(Hg.s, Hg.v, p, lam)
    pre = check_codegree_p_lambda(Hg, p, lam)
    if not pre.passed:
        bad = [r["ell"] for r in pre.rows if not r["ok"]]
        raise CodegreeFailure(f"codegree condition fails for ell in {bad}")
    step = container_step(Hg, params, budget=budget, source=source)
    fam = step.family
    lam_eff = Fraction(Hg.v, params.r)
    fam.audit[-1]["family_limit_log2"] = params.s * params.b * math.log2(Hg.v)
    fam.audit[-1]["family_within_limit"] = len(fam) <= Hg.v ** (params.s * params.b)
    fam.audit[-1]["shrink_bound"] = float((1 - params.delta / lam_eff) * Hg.v)
    return step


# ----------------------------------------------------------------------------
# scale selection and the scaled subhypergraph

@dataclass
class ScaleSelection:
    gamma: Fraction
    bucket: int
    good_y: np.ndarray
    target: float
    passed: bool
    u_size: int
    e_FU: int
    buckets: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "gamma": float(self.gamma), "bucket": self.bucket, "good_y": len(self.good_y),
            "target": self.target, "passed": self.passed, "u_size": self.u_size, "e_FU": self.e_FU,
            "buckets": {str(k): v for k, v in self.buckets.items()}, "notes": list(self.notes),
        }


def _q_of(H: BlockGraph) -> int:
    if H.F.q is None:
        raise ValueError("F carries no q; set F.q for synthetic inputs")
    return H.F.q


def select_scale(H: BlockGraph, U) -> ScaleSelection:
    """Dyadic bucketing of Y by |N_F(y) & U| and the resulting scale gamma."""
    U = np.unique(np.asarray(list(U), dtype=np.int64))
    if len(U) == 0:
        raise DegenerateInput("degenerate input: U is empty")
    q, s = _q_of(H), H.s
    F = H.F
    inU = np.zeros(F.x_count, dtype=bool)
    inU[U] = True
    d = F.adj[U].sum(axis=0).astype(np.int64)
    e_FU = int(d.sum())
    if e_FU == 0:
        raise DegenerateInput("degenerate input: no bucket with positive mass")
    base = Fraction(e_FU, 2 * F.y_count)
    bucket = np.zeros(F.y_count, dtype=np.int64)
    for y, dy in enumerate(d.tolist()):
        if dy > base:
            i = 1
            while dy > (2**i) * base:
                i += 1
            bucket[y] = i
    buckets = {}
    for i in sorted(set(bucket.tolist())):
        sel = bucket == i
        buckets[i] = {"count": int(sel.sum()), "mass": int(d[sel].sum())}
    positive = {i: b["mass"] for i, b in buckets.items() if i >= 1 and b["mass"] > 0}
    if not positive:
        raise DegenerateInput("degenerate input: no bucket with positive mass")
    best = min(positive, key=lambda i: (-positive[i], i))
    gamma = (2**best) * base
    notes = []
    if max(positive) > 2 * math.log2(q):
        notes.append("bucket index beyond 2*log2(q)")
    good = []
    for y in range(F.y_count):
        sizes = [int(inU[part].sum()) for part in H.parts(y)]
        if all(gamma <= 10 * s * a and a <= gamma for a in sizes):
            good.append(y)
    target = len(U) * q / (8 * math.log2(q) * float(gamma))
    return ScaleSelection(gamma=gamma, bucket=best, good_y=np.array(good, dtype=np.int64),
                          target=target, passed=len(good) >= target, u_size=len(U),
                          e_FU=e_FU, buckets=buckets, notes=notes)


def build_scaled_subhypergraph(H: BlockGraph, U, scale: ScaleSelection) -> UniformHypergraph:
    """s-sets with one vertex in each A_i(y) & U, over the good y."""
    U = np.unique(np.asarray(list(U), dtype=np.int64))
    s = H.s
    inU = np.zeros(H.n, dtype=bool)
    inU[U] = True
    chunks = []
    for y in scale.good_y.tolist():
        parts = [p[inU[p]] for p in H.parts(y)]
        grids = np.meshgrid(*parts, indexing="ij")
        chunks.append(np.stack([g.ravel() for g in grids], axis=1))
    if chunks:
        edges = np.concatenate(chunks)
        local = np.searchsorted(U, edges)
    else:
        local = np.zeros((0, s), dtype=np.int64)
    return UniformHypergraph(s, len(U), local, vertices=U)


# ----------------------------------------------------------------------------
# iteration and counting

def default_threshold(s: int, q: int) -> int:
    return 500 * s * s * q * q


def default_lambda(s: int, q: int, lambda_const: float | None = None) -> Fraction | float:
    c = 64 * s * s if lambda_const is None else lambda_const
    return c * math.log2(q)


def keep_exponent_p(gamma: Fraction, q: int, s: int):
    """p = 1 / (gamma * q^(1/(s-1))); exact for s = 2."""
    if s == 2:
        return 1 / (gamma * q)
    return 1.0 / (float(gamma) * q ** (1.0 / (s - 1)))


def iterate_containers(H: BlockGraph, lambda_const: float | None = None, threshold: int | None = None,
                       max_depth: int = 64, budget: int | None = 2_000_000) -> ContainerFamily:
    """Refine containers of X until each has at most ``threshold`` vertices.

    Every container above the threshold is replaced by the containers of its
    scaled subhypergraph; smaller ones are carried over.  A failed scale
    selection, an empty subhypergraph or a codegree failure stops the loop with
    the offending U recorded.
    """
    q, s = _q_of(H), H.s
    thr = default_threshold(s, q) if threshold is None else threshold
    lam = default_lambda(s, q, lambda_const)
    X = tuple(range(H.n))
    fam = ContainerFamily([ContainerEntry((), X, H.n, {"depth": 0})])
    fam.params.append({"threshold": thr, "lambda": float(lam), "lambda_const": lambda_const or 64 * s * s})
    depth = 0
    while any(e.size > thr for e in fam.entries):
        if depth >= max_depth:
            fam.status, fam.cause = "aborted", f"max depth {max_depth} reached"
            break
        nxt: list[ContainerEntry] = []
        stats = {"depth": depth + 1, "refined": 0, "kept": 0, "shrink_ratios": []}
        for idx, entry in enumerate(fam.entries):
            if entry.size <= thr:
                nxt.append(entry)
                stats["kept"] += 1
                continue
            U = entry.container
            try:
                scale = select_scale(H, U)
                G = build_scaled_subhypergraph(H, U, scale)
                if G.e == 0:
                    raise DegenerateInput("scaled subhypergraph is empty")
                p = keep_exponent_p(scale.gamma, q, s)
                step = container_family(G, p, lam, budget=budget,
                                        source={"depth": depth + 1, "parent": idx, "gamma": float(scale.gamma)})
            except (DegenerateInput, CodegreeFailure, FamilyBudgetExceeded) as exc:
                kind = {DegenerateInput: "scale", CodegreeFailure: "codegree",
                        FamilyBudgetExceeded: "budget"}[type(exc)]
                fam.status = "aborted"
                fam.cause = f"{kind}: {exc}"
                fam.audit.append({"depth": depth + 1, "abort": kind, "U_size": len(U), "U": list(U)})
                fam.depth = depth
                return fam
            stats["refined"] += 1
            stats["shrink_ratios"].append(max(e.size for e in step.family.entries) / len(U))
            fam.violations.extend(step.family.violations)
            for child in step.family.entries:
                if child.size >= len(U):
                    fam.violations.append({"depth": depth + 1, "size": child.size, "parent_size": len(U)})
                nxt.append(child)
        depth += 1
        fam.entries = nxt
        stats["containers"] = len(nxt)
        stats["max_size"] = max(e.size for e in nxt)
        fam.audit.append(stats)
    fam.depth = depth
    fam.audit.append({"final_depth": depth, "depth_limit": 4 * math.log2(q) ** 2,
                      "within_limit": depth <= 4 * math.log2(q) ** 2})
    return fam


@dataclass
class CountBound:
    t: int
    bound: int
    coarse: int
    target: float
    threshold: int
    below_threshold: bool

    def to_dict(self) -> dict:
        return {"t": self.t, "bound": str(self.bound), "coarse": str(self.coarse),
                "target": self.target, "threshold": self.threshold,
                "below_threshold": self.below_threshold}


def count_ksfree_bound(family: ContainerFamily, t: int, threshold: int | None = None,
                       q: int | None = None, s: int | None = None) -> CountBound:
    """Upper bound on K_s-free t-sets: sum over containers of C(min(|C|, thr), t).

    C(a, t) is 0 for t > a.  ``coarse`` is the cruder |family| * C(thr, t).
    Both are valid only when every container is at most the threshold, which
    ``below_threshold`` reports.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    if threshold is None:
        threshold = family.params[0].get("threshold", family.max_size) if family.params else family.max_size
    bound = sum(binom(min(e.size, threshold), t) for e in family.entries)
    coarse = len(family) * binom(threshold, t)
    target = float("nan")
    if q is not None and s is not None:
        target = (q ** (1.0 / (s - 1))) ** t
    below = family.status == "ok" and family.max_size <= threshold
    return CountBound(t=t, bound=bound, coarse=coarse, target=target, threshold=threshold,
                      below_threshold=below)


def niceness_check(H: BlockGraph, sample_count: int = 100, seed: int = 0, min_size: int | None = None,
                   extra_U: Iterable = ()) -> dict:
    """Evaluate the good-scale property on U = X, sampled U and any extra sets."""
    q, s = _q_of(H), H.s
    thr = default_threshold(s, q)
    lo = min(thr, H.n) if min_size is None else min_size
    rng = np.random.default_rng(seed)
    sets = [np.arange(H.n)]
    for _ in range(sample_count):
        size = int(rng.integers(lo, H.n + 1))
        sets.append(np.sort(rng.choice(H.n, size=size, replace=False)))
    sets.extend(np.asarray(list(u), dtype=np.int64) for u in extra_U)
    rows = []
    for U in sets:
        try:
            sc = select_scale(H, U)
            rows.append({"size": len(U), "gamma": float(sc.gamma), "good_y": len(sc.good_y),
                         "target": sc.target, "margin": len(sc.good_y) - sc.target, "passed": sc.passed})
        except DegenerateInput:
            rows.append({"size": len(U), "gamma": float("nan"), "good_y": 0, "target": float("nan"),
                         "margin": float("nan"), "passed": False})
    vacuous = H.n < thr
    return {
        "q": q, "s": s, "threshold": thr, "vacuous": vacuous,
        "note": "vacuous: no qualifying U (|X| below the size hypothesis)" if vacuous else "",
        "samples": len(rows),
        "pass_rate": sum(r["passed"] for r in rows) / len(rows),
        "rows": rows,
    }
