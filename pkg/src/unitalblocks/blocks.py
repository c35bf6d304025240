"""Random block graph H: a random complete s-partite graph inside every N_F(y)."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .graph import Block, DenseGraph, has_clique, mask_of
from .lemma22 import lemma22_witness
from .unital import UnitalIncidence


class C4Violation(RuntimeError):
    pass


@dataclass
class BlockPartition:
    """``labels[y][j]`` is the part (0..s-1) of the j-th smallest neighbour of y."""

    s: int
    seed: int
    labels: list[np.ndarray]

    def parts(self, F: UnitalIncidence, y: int) -> list[np.ndarray]:
        nb, lab = F.y_neighbors[y], self.labels[y]
        return [nb[lab == i] for i in range(self.s)]


def random_blocks(F: UnitalIncidence, s: int, seed: int = 0) -> BlockPartition:
    """Uniform independent labels; the stream for y depends only on (seed, y)."""
    if s < 2:
        raise ValueError(f"invalid parameter s={s}: need s >= 2")
    if seed < 0:
        raise ValueError("seed must be non-negative")
    labels = []
    for y, nb in enumerate(F.y_neighbors):
        rng = np.random.default_rng([seed, y])
        labels.append(rng.integers(0, s, size=len(nb)))
    return BlockPartition(s=s, seed=seed, labels=labels)


@dataclass
class BlockGraph:
    """H on vertex set X with per-edge provenance.

    ``edges`` is sorted lexicographically with u < v and ``provenance[i]`` is
    the y whose block created ``edges[i]``.  Edges added by
    :meth:`with_extra_edges` carry provenance -1.
    """

    F: UnitalIncidence
    partition: BlockPartition
    graph: DenseGraph
    edges: np.ndarray
    provenance: np.ndarray = field(repr=False)

    @property
    def s(self) -> int:
        return self.partition.s

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _keys(self) -> np.ndarray:
        return self.edges[:, 0] * self.n + self.edges[:, 1]

    def provenance_of(self, u: int, v: int) -> int | None:
        """The y that created edge uv; None if uv is absent or was injected."""
        u, v = min(u, v), max(u, v)
        key = u * self.n + v
        i = int(np.searchsorted(self._keys, key))
        if i < len(self._keys) and self._keys[i] == key and self.provenance[i] >= 0:
            return int(self.provenance[i])
        return None

    def parts(self, y: int) -> list[np.ndarray]:
        return self.partition.parts(self.F, y)

    def with_extra_edges(self, extra) -> "BlockGraph":
        extra = np.sort(np.asarray(extra, dtype=np.int64).reshape(-1, 2), axis=1)
        edges = np.concatenate([self.edges, extra])
        prov = np.concatenate([self.provenance, np.full(len(extra), -1)])
        keys = edges[:, 0] * self.n + edges[:, 1]
        keys, idx = np.unique(keys, return_index=True)
        edges, prov = edges[idx], prov[idx]
        graph = DenseGraph.from_edges(self.n, edges, blocks=self.graph.blocks)
        return BlockGraph(self.F, self.partition, graph, edges, prov)


def build_H(F: UnitalIncidence, partition: BlockPartition) -> BlockGraph:
    n = F.x_count
    s = partition.s
    if len(partition.labels) != F.y_count:
        raise ValueError("partition does not match F")
    keys, ys, blocks = [], [], []
    triu_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}
    for y, nb in enumerate(F.y_neighbors):
        lab = partition.labels[y]
        if len(lab) != len(nb):
            raise ValueError(f"partition does not match F at y={y}")
        d = len(nb)
        if d not in triu_cache:
            triu_cache[d] = np.triu_indices(d, 1)
        i, j = triu_cache[d]
        cross = lab[i] != lab[j]
        keys.append(nb[i[cross]] * n + nb[j[cross]])
        ys.append(np.full(int(cross.sum()), y, dtype=np.int64))
        blocks.append(Block(tuple(mask_of(nb[lab == k]) for k in range(s))))
    keys = np.concatenate(keys) if keys else np.zeros(0, dtype=np.int64)
    ys = np.concatenate(ys) if ys else np.zeros(0, dtype=np.int64)
    order = np.argsort(keys, kind="stable")
    keys, ys = keys[order], ys[order]
    dup = np.flatnonzero(keys[1:] == keys[:-1])
    if len(dup):
        k = int(dup[0])
        u, v = divmod(int(keys[k]), n)
        raise C4Violation(f"C4 violation: pair ({u},{v}) created by y={ys[k]} and y={ys[k + 1]}")
    edges = np.stack([keys // n, keys % n], axis=1) if len(keys) else np.zeros((0, 2), dtype=np.int64)
    graph = DenseGraph.from_edges(n, edges, blocks=blocks)
    return BlockGraph(F, partition, graph, edges, ys)


def block_graph(F: UnitalIncidence, s: int, seed: int = 0) -> BlockGraph:
    return build_H(F, random_blocks(F, s, seed))


def expected_edge_count(H: BlockGraph) -> int:
    """Sum over y of sum_{i<j} |A_i(y)| |A_j(y)|."""
    total = 0
    for y in range(H.F.y_count):
        sizes = np.array([len(p) for p in H.parts(y)])
        total += int((sizes.sum() ** 2 - (sizes**2).sum()) // 2)
    return total


@dataclass
class ONanWitness:
    """Four X-vertices and the Y-vertex joining each of their six pairs."""

    xs: tuple[int, int, int, int]
    ys: dict[tuple[int, int], int]


def extract_onan_witness(H: BlockGraph, clique) -> ONanWitness:
    """Turn a K_{s+2} of H into the K_4-subdivision of F that it forces."""
    S = sorted(int(v) for v in clique)
    if len(S) != H.s + 2 or len(set(S)) != len(S):
        raise ValueError(f"invalid input: need {H.s + 2} distinct vertices")
    groups: dict[int, set[int]] = {}
    for a in range(len(S)):
        for b in range(a + 1, len(S)):
            u, v = S[a], S[b]
            if not H.graph.has_edge(u, v):
                raise ValueError(f"invalid input: {u},{v} not adjacent, not a clique")
            y = H.provenance_of(u, v)
            if y is None:
                raise ValueError(f"edge without provenance: ({u},{v})")
            groups.setdefault(y, set()).update((a, b))
    cliques = [sorted(g) for _, g in sorted(groups.items())]
    local = lemma22_witness(H.s, cliques)
    xs = tuple(S[i] for i in local)
    ys = {}
    for i in range(4):
        for j in range(i + 1, 4):
            ys[(xs[i], xs[j])] = H.provenance_of(xs[i], xs[j])
    return ONanWitness(xs=xs, ys=ys)


def verify_ks2_free(H: BlockGraph) -> dict:
    """Exact search for K_{s+2}; a hit is traced back to an O'Nan configuration."""
    k = H.s + 2
    clique = has_clique(H.graph, k)
    report = {"s": H.s, "k": k, "n": H.n, "m": H.m, "free": clique is None, "clique": None}
    if clique is not None:
        report["clique"] = list(clique)
        try:
            w = extract_onan_witness(H, clique)
            report["onan_xs"] = list(w.xs)
            report["onan_ys"] = [w.ys[p] for p in sorted(w.ys)]
        except ValueError as exc:
            report["extraction_error"] = str(exc)
    report["passed"] = report["free"]
    return report
