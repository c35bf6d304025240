"""Dense simple graphs on Python-int bitsets: cliques, alpha_s, triangles, C6."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np
from scipy import sparse


def bits(x: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << int(v)
    return m


@dataclass(frozen=True)
class Block:
    """A complete multipartite piece of a graph: ``parts`` are vertex bitsets."""

    parts: tuple[int, ...]

    @property
    def members(self) -> int:
        m = 0
        for p in self.parts:
            m |= p
        return m


@dataclass
class DenseGraph:
    """Simple graph with one neighbourhood bitset per vertex.

    ``labels`` map local ids to ids in a parent graph; ``blocks`` optionally
    list complete multipartite subgraphs that together cover every edge.
    """

    n: int
    rows: list[int]
    labels: list[int] | None = None
    blocks: list[Block] | None = field(default=None, repr=False)

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("need one row per vertex")

    @classmethod
    def from_edges(cls, n: int, edges, chunk: int = 1024, **kw) -> "DenseGraph":
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if len(edges) and ((edges[:, 0] == edges[:, 1]).any() or edges.min() < 0 or edges.max() >= n):
            raise ValueError("edges must join distinct vertices in range")
        both = np.concatenate([edges, edges[:, ::-1]])
        both = both[np.argsort(both[:, 0], kind="stable")]
        starts = np.searchsorted(both[:, 0], np.arange(0, n + chunk, chunk))
        rows: list[int] = []
        for i, lo in enumerate(range(0, n, chunk)):
            hi = min(lo + chunk, n)
            part = both[starts[i]:starts[i + 1]]
            adj = np.zeros((hi - lo, n), dtype=bool)
            adj[part[:, 0] - lo, part[:, 1]] = True
            packed = np.packbits(adj, axis=1, bitorder="little")
            rows.extend(int.from_bytes(r.tobytes(), "little") for r in packed)
        return cls(n, rows, **kw)

    @classmethod
    def from_adjacency(cls, adj: np.ndarray, **kw) -> "DenseGraph":
        adj = np.asarray(adj, dtype=bool)
        if adj.shape[0] != adj.shape[1] or (adj != adj.T).any() or adj.diagonal().any():
            raise ValueError("adjacency must be symmetric with zero diagonal")
        n = adj.shape[0]
        if n == 0:
            return cls(0, [], **kw)
        packed = np.packbits(adj, axis=1, bitorder="little")
        rows = [int.from_bytes(r.tobytes(), "little") for r in packed]
        return cls(n, rows, **kw)

    @classmethod
    def empty(cls, n: int) -> "DenseGraph":
        return cls(n, [0] * n)

    @classmethod
    def complete(cls, n: int) -> "DenseGraph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "DenseGraph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def petersen(cls) -> "DenseGraph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def adjacency(self) -> np.ndarray:
        adj = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            adj[u, v] = adj[v, u] = True
        return adj

    def to_csr(self):
        """Adjacency as a scipy CSR matrix with sorted indices."""
        nbytes = (self.n + 7) // 8
        buf = np.frombuffer(b"".join(r.to_bytes(nbytes, "little") for r in self.rows), dtype=np.uint8)
        dense_bits = np.unpackbits(buf.reshape(self.n, nbytes), axis=1, bitorder="little")[:, : self.n]
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        indptr[1:] = np.cumsum(dense_bits.sum(axis=1))
        indices = np.nonzero(dense_bits)[1]
        data = np.ones(len(indices), dtype=np.int32)
        return sparse.csr_matrix((data, indices, indptr), shape=(self.n, self.n))

    def complement(self) -> "DenseGraph":
        full = (1 << self.n) - 1
        return DenseGraph(self.n, [full & ~r & ~(1 << v) for v, r in enumerate(self.rows)], labels=self.labels)

    def induced(self, vertices: Sequence[int]) -> "DenseGraph":
        """Induced subgraph, relabelled 0..k-1 in the order given."""
        vertices = [int(v) for v in vertices]
        pos = {v: i for i, v in enumerate(vertices)}
        keep = mask_of(vertices)
        rows = []
        for v in vertices:
            rows.append(mask_of(pos[u] for u in bits(self.rows[v] & keep)))
        parent = self.labels
        labels = [parent[v] for v in vertices] if parent is not None else list(vertices)
        blocks = None
        if self.blocks is not None:
            blocks = []
            for blk in self.blocks:
                parts = tuple(mask_of(pos[u] for u in bits(p & keep)) for p in blk.parts)
                if sum(1 for p in parts if p) >= 2:
                    blocks.append(Block(parts))
        return DenseGraph(len(vertices), rows, labels=labels, blocks=blocks)

    def without_vertex(self, v: int) -> "DenseGraph":
        return self.induced([u for u in range(self.n) if u != v])


# ----------------------------------------------------------------------------
# cliques

def _clique_in(rows: list[int], cand: int, k: int) -> list[int] | None:
    """A k-clique inside the bitset ``cand``, smallest-first, or None."""
    if k == 0:
        return []
    if cand.bit_count() < k:
        return None
    if k == 1:
        return [(cand & -cand).bit_length() - 1]
    if k == 2:
        for v in bits(cand):
            hit = rows[v] & cand
            if hit:
                return [v, (hit & -hit).bit_length() - 1]
        return None
    for v in bits(cand):
        cand &= ~(1 << v)
        sub = _clique_in(rows, rows[v] & cand, k - 1)
        if sub is not None:
            return [v] + sub
        if cand.bit_count() < k:
            return None
    return None


def contains_clique(rows: list[int], cand: int, k: int) -> bool:
    return _clique_in(rows, cand, k) is not None


def _degree_order(G: DenseGraph) -> list[int]:
    return sorted(range(G.n), key=lambda v: (-G.degree(v), v))


def _relabel(G: DenseGraph, order: list[int]) -> list[int]:
    pos = {v: i for i, v in enumerate(order)}
    return [mask_of(pos[u] for u in bits(G.rows[v])) for v in order]


SPARSE_CLIQUE_MIN_N = 1500


def has_clique(G: DenseGraph, k: int) -> tuple[int, ...] | None:
    """Return a k-clique (sorted) if one exists, searching in degree order."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > G.n:
        return None
    order = _degree_order(G)
    if G.n >= SPARSE_CLIQUE_MIN_N and k >= 4:
        return _has_clique_sparse(G, k, order)
    rows = _relabel(G, order)
    for i in range(G.n):
        # forward neighbours only: each clique is found from its first vertex
        fwd = rows[i] >> (i + 1) << (i + 1)
        sub = _clique_in(rows, fwd, k - 1)
        if sub is not None:
            return tuple(sorted(order[v] for v in [i] + sub))
    return None


def _has_clique_sparse(G: DenseGraph, k: int, order: list[int]) -> tuple[int, ...] | None:
    """Same search, but each forward neighbourhood is gathered into a small
    local graph that must contain a triangle before the bitset search runs."""
    n = G.n
    perm = np.asarray(order)
    A = G.to_csr()[perm][:, perm].tocsr()
    A.sort_indices()
    D = np.zeros((n, n), dtype=bool)
    D[np.repeat(np.arange(n), np.diff(A.indptr)), A.indices] = True
    for i in range(n):
        nb = A.indices[A.indptr[i]:A.indptr[i + 1]]
        fwd = nb[nb > i]
        if len(fwd) < k - 1:
            continue
        L = D[np.ix_(fwd, fwd)]
        a, b = np.nonzero(np.triu(L, 1))
        if len(a) == 0:
            continue
        packed = np.packbits(L, axis=1)
        if not (packed[a] & packed[b]).any():
            continue
        local = DenseGraph.from_adjacency(L)
        sub = _clique_in(local.rows, (1 << len(fwd)) - 1, k - 1)
        if sub is not None:
            return tuple(sorted(order[v] for v in [i] + [int(fwd[j]) for j in sub]))
    return None


def enumerate_ks(G: DenseGraph, s: int) -> list[tuple[int, ...]]:
    """All s-cliques as sorted tuples, in lexicographic order."""
    if s < 1:
        raise ValueError("s must be positive")
    out: list[tuple[int, ...]] = []

    def grow(prefix: list[int], cand: int):
        if len(prefix) == s:
            out.append(tuple(prefix))
            return
        for v in bits(cand):
            prefix.append(v)
            grow(prefix, cand & G.rows[v] & ~((2 << v) - 1))
            prefix.pop()

    grow([], (1 << G.n) - 1)
    return out


def count_triangles(G: DenseGraph) -> int:
    total = 0
    rows = G.rows
    for u in range(G.n):
        fwd = rows[u] >> (u + 1) << (u + 1)
        for v in bits(fwd):
            total += (rows[u] & rows[v] & ~((2 << v) - 1)).bit_count()
    return total


def count_c6_bipartite(adj: np.ndarray) -> int:
    """Number of 6-cycles in the bipartite graph with biadjacency ``adj``.

    A 6-cycle is fixed by its three vertices a<b<c on one side plus a choice of
    distinct common neighbours for the pairs ab, bc, ca; inclusion-exclusion
    over the triple codegree T gives M_ab M_bc M_ca - T (M_ab + M_bc + M_ca) + 2T.
    """
    B = np.asarray(adj, dtype=np.int64)
    if B.shape[0] > B.shape[1]:
        B = B.T
    n = B.shape[0]
    if n < 3:
        return 0
    co = B @ B.T
    total = 0
    for a in range(n - 2):
        rest = slice(a + 1, n)
        ma = co[a, rest]
        nz = np.flatnonzero(ma)
        if len(nz) < 2:
            continue
        idx = nz + a + 1
        mab = ma[nz]
        sub = B[idx][:, B[a] > 0]
        T = sub @ sub.T
        Mbc = co[np.ix_(idx, idx)]
        S = mab[:, None] + mab[None, :] + Mbc
        val = mab[:, None] * mab[None, :] * Mbc - T * S + 2 * T
        total += int(np.triu(val, 1).sum())
    return total


# ----------------------------------------------------------------------------
# alpha_s

@dataclass
class AlphaResult:
    value: int
    witness: tuple[int, ...]
    exact: bool
    nodes_explored: int = 0
    method: str = "exact"


class _Budget(Exception):
    pass


def is_ks_free(G: DenseGraph, vertices, s: int) -> bool:
    return not contains_clique(G.rows, mask_of(vertices), s)


def _checked(G: DenseGraph, s: int, res: AlphaResult) -> AlphaResult:
    if len(res.witness) != res.value or not is_ks_free(G, res.witness, s):
        raise AssertionError("alpha witness is not K_s-free")
    return res


def _color_sort(rows: list[int], P: int) -> list[tuple[int, int]]:
    """Greedy colouring of P (ascending ids); returns (vertex, colour) by colour."""
    out = []
    color = 0
    U = P
    while U:
        color += 1
        Q = U
        while Q:
            v = (Q & -Q).bit_length() - 1
            Q &= ~rows[v] & ~(1 << v)
            U &= ~(1 << v)
            out.append((v, color))
    return out


def _max_clique(rows: list[int], n: int, budget: int | None):
    """Colour-bounded branch and bound for a maximum clique of a relabelled graph."""
    best: list[int] = []
    nodes = 0

    def expand(R: list[int], P: int):
        nonlocal best, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Budget
        for v, col in reversed(_color_sort(rows, P)):
            if len(R) + col <= len(best):
                return
            R.append(v)
            NP = P & rows[v]
            if NP:
                expand(R, NP)
            elif len(R) > len(best):
                best = list(R)
            R.pop()
            P &= ~(1 << v)

    try:
        if n:
            expand([], (1 << n) - 1)
        exhausted = False
    except _Budget:
        exhausted = True
    return best, nodes, exhausted


def _clique_cover_bound(rows: list[int], C: int, cap: int) -> int:
    """Greedy cover of C by cliques; a K_s-free set keeps <= s-1 of each."""
    cliques: list[list[int]] = []  # [mask, size]
    for v in bits(C):
        nb = rows[v]
        for c in cliques:
            if c[0] & nb == c[0]:
                c[0] |= 1 << v
                c[1] += 1
                break
        else:
            cliques.append([1 << v, 1])
    return sum(min(size, cap) for _, size in cliques)


def _block_bound(blocks: list[Block], C: int, s: int) -> int:
    """Assign candidates to blocks greedily.  Inside a complete k-partite piece a
    K_s-free set touches at most s-1 parts, so the k-s+1 smallest parts go."""
    total = 0
    left = C
    for blk in blocks:
        if not left:
            break
        group = blk.members & left
        if not group:
            continue
        sizes = sorted((p & group).bit_count() for p in blk.parts)
        drop = max(0, len(sizes) - s + 1)
        total += sum(sizes[drop:])
        left &= ~group
    return total + left.bit_count()


def alpha_s_exact(G: DenseGraph, s: int, budget: int | None = None) -> AlphaResult:
    """Largest K_s-free induced vertex set by branch and bound.

    ``budget`` bounds the number of search nodes; when hit, ``exact`` is False
    and the value is the best set found so far.
    """
    if s < 2:
        raise ValueError("s must be at least 2")
    if G.n == 0:
        return AlphaResult(0, (), True, 0)
    if s == 2:
        comp = G.complement()
        order = _degree_order(comp)
        rows = _relabel(comp, order)
        best, nodes, exhausted = _max_clique(rows, G.n, budget)
        wit = tuple(sorted(order[v] for v in best))
        return _checked(G, s, AlphaResult(len(wit), wit, not exhausted, nodes))
    return _checked(G, s, _alpha_include_exclude(G, s, budget))


def _alpha_include_exclude(G: DenseGraph, s: int, budget: int | None) -> AlphaResult:
    order = _degree_order(G)
    rows = _relabel(G, order)
    pos = {v: i for i, v in enumerate(order)}
    blocks = None
    if G.blocks:
        blocks = [Block(tuple(mask_of(pos[u] for u in bits(p)) for p in b.parts)) for b in G.blocks]
    best = 0
    best_size = -1
    nodes = 0

    def bound(C: int) -> int:
        b = min(C.bit_count(), _clique_cover_bound(rows, C, s - 1))
        if blocks is not None:
            b = min(b, _block_bound(blocks, C, s))
        return b

    def search(S: int, size: int, C: int):
        nonlocal best, best_size, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Budget
        if size > best_size:
            best, best_size = S, size
        if not C or size + bound(C) <= best_size:
            return
        v = (C & -C).bit_length() - 1
        bit = 1 << v
        # include v: drop candidates that would now close a K_s through v
        S2 = S | bit
        C2 = C & ~bit
        for u in bits(C2 & rows[v]):
            if contains_clique(rows, S2 & rows[u] & rows[v], s - 2):
                C2 &= ~(1 << u)
        search(S2, size + 1, C2)
        search(S, size, C & ~bit)

    try:
        search(0, 0, (1 << G.n) - 1)
        exhausted = False
    except _Budget:
        exhausted = True
    wit = tuple(sorted(order[v] for v in bits(best)))
    return AlphaResult(len(wit), wit, not exhausted, nodes)


def alpha_s_greedy(G: DenseGraph, s: int, trials: int = 200, seed: int = 0) -> AlphaResult:
    """Best maximal K_s-free set over ``trials`` random vertex orders."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if s < 2:
        raise ValueError("s must be at least 2")
    rng = np.random.default_rng(seed)
    rows = G.rows
    best: tuple[int, ...] = ()
    for _ in range(trials):
        S = 0
        for v in rng.permutation(G.n).tolist():
            if not contains_clique(rows, S & rows[v], s - 1):
                S |= 1 << v
        if S.bit_count() > len(best):
            best = tuple(bits(S))
    return _checked(G, s, AlphaResult(len(best), best, False, trials, method="greedy"))


def binom(n: int, k: int) -> int:
    return math.comb(n, k) if 0 <= k <= n else 0


def count_ks_free_sets(G: DenseGraph, s: int, t: int) -> int:
    """Number of t-subsets of V(G) spanning no K_s, by depth-first enumeration."""
    if t < 0:
        raise ValueError("t must be non-negative")
    rows = G.rows
    total = 0

    def walk(start: int, S: int, size: int):
        nonlocal total
        if size == t:
            total += 1
            return
        for v in range(start, G.n - (t - size) + 1):
            if not contains_clique(rows, S & rows[v], s - 1):
                walk(v + 1, S | (1 << v), size + 1)

    walk(0, 0, 0)
    return total
