"""Clique partitions of E(K_{s+2}) and the four-vertex certificate.

If the edges of K_{s+2} are split into cliques of at most s vertices, some four
vertices have their six edges in six different cliques.  The witness below
follows the constructive argument: take a clique C with >= 3 vertices, two
vertices u, v outside it, and two vertices x, y of C avoided by the clique
through uv.
"""
from __future__ import annotations

import itertools
from typing import Iterator, Sequence

import numpy as np


class InvalidPartition(ValueError):
    pass


def _edge_owner(n: int, s: int, cliques: Sequence[Sequence[int]]) -> dict[tuple[int, int], int]:
    owner: dict[tuple[int, int], int] = {}
    for idx, c in enumerate(cliques):
        c = sorted(set(int(v) for v in c))
        if len(c) < 2:
            raise InvalidPartition(f"invalid input: clique {c} has fewer than 2 vertices")
        if len(c) > s:
            raise InvalidPartition(f"invalid input: clique {c} has more than s={s} vertices")
        if c[0] < 0 or c[-1] >= n:
            raise InvalidPartition(f"invalid input: clique {c} leaves the vertex range")
        for e in itertools.combinations(c, 2):
            if e in owner:
                raise InvalidPartition(f"invalid input: edge {e} covered twice")
            owner[e] = idx
    missing = [e for e in itertools.combinations(range(n), 2) if e not in owner]
    if missing:
        raise InvalidPartition(f"invalid input: edge {missing[0]} not covered")
    return owner


def lemma22_witness(s: int, cliques: Sequence[Sequence[int]]) -> tuple[int, int, int, int]:
    """Four vertices of K_{s+2} (on 0..s+1) whose six edges lie in distinct cliques."""
    n = s + 2
    owner = _edge_owner(n, s, cliques)
    big = next((sorted(c) for c in cliques if len(set(c)) >= 3), None)
    if big is None:
        # every clique is a single edge
        return (0, 1, 2, 3)
    u, v = [w for w in range(n) if w not in big][:2]
    through_uv = set(cliques[owner[(u, v)]])
    x, y = [w for w in big if w not in through_uv][:2]
    return tuple(sorted((x, y, u, v)))


def is_witness(s: int, cliques, quad) -> bool:
    owner = _edge_owner(s + 2, s, cliques)
    quad = sorted(quad)
    if len(set(quad)) != 4:
        return False
    used = {owner[e] for e in itertools.combinations(quad, 2)}
    return len(used) == 6


def _valid_cliques(n: int, s: int, edge: tuple[int, int], covered: set) -> list[tuple[int, ...]]:
    u, v = edge
    others = [w for w in range(n) if w not in edge]
    out = []
    for k in range(0, s - 1):
        for extra in itertools.combinations(others, k):
            c = tuple(sorted((u, v) + extra))
            if all(e not in covered for e in itertools.combinations(c, 2)):
                out.append(c)
    return out


def clique_partitions(n: int, s: int) -> Iterator[list[tuple[int, ...]]]:
    """Every partition of E(K_n) into cliques of 2..s vertices, each exactly once.

    The clique covering the smallest uncovered edge is branched on, so no
    partition is produced twice.
    """
    all_edges = list(itertools.combinations(range(n), 2))
    covered: set = set()
    chosen: list[tuple[int, ...]] = []

    def rec():
        edge = next((e for e in all_edges if e not in covered), None)
        if edge is None:
            yield list(chosen)
            return
        for c in _valid_cliques(n, s, edge, covered):
            pairs = list(itertools.combinations(c, 2))
            covered.update(pairs)
            chosen.append(c)
            yield from rec()
            chosen.pop()
            covered.difference_update(pairs)

    yield from rec()


def random_clique_partition(n: int, s: int, rng: np.random.Generator) -> list[tuple[int, ...]]:
    """Random partition by the same branching, choosing uniformly at each step."""
    all_edges = list(itertools.combinations(range(n), 2))
    covered: set = set()
    chosen = []
    for edge in all_edges:
        if edge in covered:
            continue
        options = _valid_cliques(n, s, edge, covered)
        c = options[int(rng.integers(len(options)))]
        covered.update(itertools.combinations(c, 2))
        chosen.append(c)
    return chosen


def lemma22_exhaustive(s: int, mode: str | None = None, budget: int | None = None,
                       samples: int = 10_000, seed: int = 0) -> dict:
    """Run the witness on every (or on sampled) clique partitions of E(K_{s+2}).

    ``mode`` defaults to exhaustive for s <= 3 and sampled above.  ``budget``
    caps the number of partitions examined.
    """
    if s < 2:
        raise ValueError("s must be at least 2")
    if mode is None:
        mode = "exhaustive" if s <= 3 else "sampled"
    n = s + 2
    if mode == "exhaustive":
        source = clique_partitions(n, s)
    elif mode == "sampled":
        rng = np.random.default_rng(seed)
        source = (random_clique_partition(n, s, rng) for _ in range(samples))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    checked = 0
    failures = []
    exhausted = False
    sizes: dict[int, int] = {}
    for part in source:
        if budget is not None and checked >= budget:
            exhausted = True
            break
        checked += 1
        big = max(len(c) for c in part)
        sizes[big] = sizes.get(big, 0) + 1
        quad = lemma22_witness(s, part)
        if not is_witness(s, part, quad):
            failures.append({"partition": [list(c) for c in part], "witness": list(quad)})
    return {
        "s": s,
        "mode": mode,
        "partitions": checked,
        "failures": len(failures),
        "failure_instances": failures[:10],
        "largest_clique_histogram": {str(k): v for k, v in sorted(sizes.items())},
        "budget_exhausted": exhausted,
        "passed": not failures,
    }
