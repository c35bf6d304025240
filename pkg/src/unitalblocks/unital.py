"""The Hermitian unital in PG(2, q^2) and its secant-line incidence graph.

X-vertices are the secant lines, Y-vertices the unital points.  Ids follow
the lexicographic order of the normalized coordinate triples.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .field import FieldCtx, build_field


class NotAUnital(RuntimeError):
    pass


class DegreeViolation(RuntimeError):
    pass


def projective_triples(ctx: FieldCtx) -> np.ndarray:
    """All normalized triples of PG(2, q^2), sorted lexicographically.

    The first nonzero coordinate is 1, so each projective object appears once.
    """
    n = ctx.order
    rows = [(0, 0, 1)]
    rows += [(0, 1, z) for z in range(n)]
    rows += [(1, y, z) for y in range(n) for z in range(n)]
    return np.array(rows, dtype=np.int64)


def normalize(ctx: FieldCtx, triple) -> tuple[int, int, int]:
    t = [int(c) for c in triple]
    lead = next((c for c in t if c != 0), None)
    if lead is None:
        raise ValueError("the zero vector is not a projective point")
    s = int(ctx.inv[lead])
    return tuple(int(ctx.mul[s, c]) for c in t)


def _dot(ctx: FieldCtx, lines: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Matrix of a*x + b*y + c*z over GF(q^2); rows are lines, columns points."""
    add, mul = ctx.add, ctx.mul
    acc = mul[lines[:, 0][:, None], points[:, 0][None, :]]
    acc = add[acc, mul[lines[:, 1][:, None], points[:, 1][None, :]]]
    return add[acc, mul[lines[:, 2][:, None], points[:, 2][None, :]]]


def hermitian_points(ctx: FieldCtx) -> np.ndarray:
    """Points of x^(q+1) + y^(q+1) + z^(q+1) = 0, as an (q^3+1, 3) array."""
    q = ctx.q
    norm = np.array([ctx.power(a, q + 1) for a in ctx.elements()], dtype=np.int64)
    triples = projective_triples(ctx)
    # norms lie in GF(q), encoded as 0..q-1, so the sum is plain integer arithmetic mod q
    on = (norm[triples].sum(axis=1) % q) == 0
    pts = triples[on]
    if len(pts) != q**3 + 1:
        raise NotAUnital(f"found {len(pts)} points, expected {q**3 + 1}")
    return pts


def classify_lines(ctx: FieldCtx, points: np.ndarray, chunk: int = 2048):
    """Return (lines, meet_counts) over every line of PG(2, q^2)."""
    lines = projective_triples(ctx)
    counts = np.empty(len(lines), dtype=np.int64)
    for lo in range(0, len(lines), chunk):
        block = lines[lo:lo + chunk]
        counts[lo:lo + chunk] = (_dot(ctx, block, points) == 0).sum(axis=1)
    return lines, counts


def secant_lines(ctx: FieldCtx, points: np.ndarray) -> np.ndarray:
    q = ctx.q
    lines, counts = classify_lines(ctx, points)
    bad = ~np.isin(counts, (1, q + 1))
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise NotAUnital(f"line {tuple(lines[i])} meets the point set in {counts[i]} points")
    n_tangent = int((counts == 1).sum())
    if n_tangent != q**3 + 1:
        raise NotAUnital(f"{n_tangent} tangent lines, expected {q**3 + 1}")
    return lines[counts == q + 1]


def _bitrows(adj: np.ndarray) -> list[int]:
    packed = np.packbits(adj.astype(bool), axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


@dataclass
class UnitalIncidence:
    """Bipartite incidence graph F between X (lines) and Y (points).

    ``adj[x, y]`` is True when line x passes through point y.  For synthetic
    test graphs ``lines``/``points`` may be None.
    """

    q: int | None
    adj: np.ndarray
    lines: np.ndarray | None = None
    points: np.ndarray | None = None
    x_index: dict = field(default_factory=dict, repr=False)
    y_index: dict = field(default_factory=dict, repr=False)

    @property
    def x_count(self) -> int:
        return self.adj.shape[0]

    @property
    def y_count(self) -> int:
        return self.adj.shape[1]

    @property
    def edge_count(self) -> int:
        return int(self.adj.sum())

    @cached_property
    def x_neighbors(self) -> list[np.ndarray]:
        return [np.flatnonzero(r) for r in self.adj]

    @cached_property
    def y_neighbors(self) -> list[np.ndarray]:
        return [np.flatnonzero(c) for c in self.adj.T]

    @cached_property
    def x_rows(self) -> list[int]:
        """Neighbourhoods of X-vertices as Y-bitsets."""
        return _bitrows(self.adj)

    @cached_property
    def y_rows(self) -> list[int]:
        """Neighbourhoods of Y-vertices as X-bitsets."""
        return _bitrows(self.adj.T)

    @classmethod
    def from_neighbors(cls, y_neighbors, x_count: int | None = None, q: int | None = None):
        """Synthetic F from a list giving N(y) for each y."""
        if x_count is None:
            x_count = 1 + max((max(nb) for nb in y_neighbors if len(nb)), default=-1)
        adj = np.zeros((x_count, len(y_neighbors)), dtype=bool)
        for y, nb in enumerate(y_neighbors):
            adj[list(nb), y] = True
        return cls(q=q, adj=adj)

    def edges(self) -> list[tuple[int, int]]:
        xs, ys = np.nonzero(self.adj)
        return list(zip(xs.tolist(), ys.tolist()))

    def without_edge(self, x: int, y: int) -> "UnitalIncidence":
        adj = self.adj.copy()
        adj[x, y] = False
        return UnitalIncidence(q=self.q, adj=adj, lines=self.lines, points=self.points)

    def line_of(self, x: int) -> tuple[int, int, int]:
        return tuple(int(c) for c in self.lines[x])

    def point_of(self, y: int) -> tuple[int, int, int]:
        return tuple(int(c) for c in self.points[y])


def build_incidence(ctx: FieldCtx | int) -> UnitalIncidence:
    if isinstance(ctx, int):
        ctx = build_field(ctx)
    q = ctx.q
    points = hermitian_points(ctx)
    lines = secant_lines(ctx, points)
    adj = _dot(ctx, lines, points) == 0
    F = UnitalIncidence(
        q=q,
        adj=adj,
        lines=lines,
        points=points,
        x_index={tuple(map(int, t)): i for i, t in enumerate(lines)},
        y_index={tuple(map(int, t)): i for i, t in enumerate(points)},
    )
    dx, dy = adj.sum(axis=1), adj.sum(axis=0)
    if (dx != q + 1).any() or (dy != q * q).any():
        raise DegreeViolation(f"degree violation in F for q={q}")
    return F


def max_codegree(adj: np.ndarray, chunk: int = 1024) -> int:
    """Largest number of common neighbours of two distinct rows."""
    a = adj.astype(np.float32)
    worst = 0
    for lo in range(0, a.shape[0], chunk):
        co = a[lo:lo + chunk] @ a.T
        rows = np.arange(co.shape[0])
        co[rows, rows + lo] = 0
        if co.size:
            worst = max(worst, int(co.max()))
    return worst


def meet_matrix(F: UnitalIncidence) -> np.ndarray:
    """M[a, b] = the common Y-neighbour of X-vertices a != b, or -1.

    Assumes F is C4-free, so a common neighbour is unique when it exists.
    """
    n = F.x_count
    M = np.full((n, n), -1, dtype=np.int64)
    for y, xs in enumerate(F.y_neighbors):
        M[np.ix_(xs, xs)] = y
    np.fill_diagonal(M, -1)
    return M


def _onan_exhaustive(F: UnitalIncidence):
    """Check every 4-subset of X directly; returns (witness, quadruples)."""
    M = meet_matrix(F)
    n = F.x_count
    for a, b, c in itertools.combinations(range(n), 3):
        mab, mac, mbc = M[a, b], M[a, c], M[b, c]
        if mab < 0 or mac < 0 or mbc < 0 or len({mab, mac, mbc}) < 3:
            continue
        d = np.arange(c + 1, n)
        ad, bd, cd = M[a, d], M[b, d], M[c, d]
        ok = (ad >= 0) & (bd >= 0) & (cd >= 0)
        ok &= (ad != bd) & (ad != cd) & (bd != cd)
        for m in (mab, mac, mbc):
            ok &= (ad != m) & (bd != m) & (cd != m)
        if ok.any():
            return (a, b, c, int(d[np.argmax(ok)])), math.comb(n, 4)
    return None, math.comb(n, 4)


def _onan_pruned(F: UnitalIncidence, budget: int | None):
    """Extend X-triples with three distinct meeting points to quadruples.

    Returns (witness, triples_expanded, exhausted_budget).
    """
    n = F.x_count
    through = F.y_rows  # X-lines through each point
    xnb = F.x_neighbors
    meets = []  # lines meeting x in a unital point
    for x in range(n):
        m = 0
        for y in xnb[x]:
            m |= through[y]
        meets.append(m & ~(1 << x))

    def meet(a, b):
        for y in xnb[a]:
            if through[y] >> b & 1:
                return int(y)
        raise AssertionError("lines do not meet in the unital")

    nodes = 0
    for a in range(n):
        na = meets[a] >> (a + 1) << (a + 1)
        while na:
            low = na & -na
            b = low.bit_length() - 1
            na ^= low
            pab = meet(a, b)
            nab = meets[a] & meets[b] & ~through[pab]
            cand_c = nab >> (b + 1) << (b + 1)
            while cand_c:
                low = cand_c & -cand_c
                c = low.bit_length() - 1
                cand_c ^= low
                nodes += 1
                if budget is not None and nodes > budget:
                    return None, nodes - 1, True
                pac, pbc = meet(a, c), meet(b, c)
                cand_d = nab & meets[c] & ~through[pac] & ~through[pbc]
                cand_d = cand_d >> (c + 1) << (c + 1)
                if cand_d:
                    d = (cand_d & -cand_d).bit_length() - 1
                    return (a, b, c, d), nodes, False
    return None, nodes, False


def find_onan(F: UnitalIncidence, mode: str = "pruned", budget: int | None = None):
    """Search for four X-vertices pairwise joined through six distinct Y-vertices."""
    if mode == "exhaustive":
        w, nodes = _onan_exhaustive(F)
        return w, nodes, False
    if mode == "pruned":
        return _onan_pruned(F, budget)
    raise ValueError(f"unknown mode {mode!r}")


@dataclass
class VerificationReport:
    """Flat key/value record; ``passed`` is the conjunction of the checks run."""

    values: dict

    @property
    def passed(self) -> bool:
        return bool(self.values.get("passed"))

    def __getitem__(self, key):
        return self.values[key]

    def to_dict(self) -> dict:
        return dict(self.values)


def verify_unital(F: UnitalIncidence, budget: int | None = None, mode: str | None = None) -> VerificationReport:
    """Check sizes, degrees, C4-freeness (both sides) and O'Nan-freeness.

    ``mode`` defaults to exhaustive for q <= 3 and pruned otherwise; ``budget``
    caps the number of X-triples the pruned search expands.
    """
    q = F.q
    r: dict = {"q": q, "x_count": F.x_count, "y_count": F.y_count, "edges": F.edge_count}
    r["sizes"] = F.x_count == q**4 - q**3 + q**2 and F.y_count == q**3 + 1
    dx, dy = F.adj.sum(axis=1), F.adj.sum(axis=0)
    r["degrees"] = bool((dx == q + 1).all() and (dy == q * q).all())
    r["c4_free"] = F.x_count < 2 or max_codegree(F.adj) <= 1
    r["c4_free_dual"] = F.y_count < 2 or max_codegree(F.adj.T) <= 1
    if mode is None:
        mode = "exhaustive" if q <= 3 else "pruned"
    if r["c4_free"]:
        witness, nodes, exhausted = find_onan(F, mode, budget)
        r["onan_mode"] = mode
        r["onan_nodes"] = nodes
        r["onan_witness"] = list(witness) if witness else None
        r["onan_free"] = witness is None
        r["onan_status"] = "found" if witness else ("budget" if exhausted else "verified")
    else:
        r.update(onan_mode=mode, onan_nodes=0, onan_witness=None, onan_free=False, onan_status="skipped")
    r["passed"] = bool(r["sizes"] and r["degrees"] and r["c4_free"] and r["c4_free_dual"] and r["onan_free"])
    return VerificationReport(r)
