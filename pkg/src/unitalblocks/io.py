"""Plain-text and JSON formats for incidences, graphs, partitions and hypergraphs."""
from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

from .blocks import BlockGraph, BlockPartition, build_H
from .containers import ContainerFamily, UniformHypergraph
from .graph import DenseGraph
from .unital import UnitalIncidence


def _header(line: str, kind: str) -> dict[str, int]:
    parts = line.split()
    if not parts or parts[0] != kind:
        raise ValueError(f"expected a '{kind}' header, got {line!r}")
    out = {}
    for tok in parts[1:]:
        m = re.fullmatch(r"(\w+)=(-?\d+|None)", tok)
        if not m:
            raise ValueError(f"malformed header field {tok!r}")
        out[m.group(1)] = None if m.group(2) == "None" else int(m.group(2))
    return out


def _lines(path) -> list[str]:
    return [ln.strip() for ln in Path(path).read_text().splitlines() if ln.strip()]


# F ---------------------------------------------------------------------------

def format_incidence(F: UnitalIncidence) -> str:
    out = [f"unital q={F.q} X={F.x_count} Y={F.y_count}"]
    for x, nb in enumerate(F.x_neighbors):
        out.append(f"{x}: " + " ".join(map(str, nb.tolist())))
    return "\n".join(out) + "\n"


def write_incidence(F: UnitalIncidence, path) -> None:
    Path(path).write_text(format_incidence(F))


def read_incidence(path) -> UnitalIncidence:
    lines = _lines(path)
    h = _header(lines[0], "unital")
    adj = np.zeros((h["X"], h["Y"]), dtype=bool)
    for ln in lines[1:]:
        x, _, rest = ln.partition(":")
        ys = [int(t) for t in rest.split()]
        adj[int(x), ys] = True
    return UnitalIncidence(q=h["q"], adj=adj)


# graphs ------------------------------------------------------------------------

def format_graph(G: DenseGraph) -> str:
    edges = G.edges()
    out = [f"graph n={G.n} m={len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def write_graph(G: DenseGraph, path) -> None:
    Path(path).write_text(format_graph(G))


def _read_edges(lines: list[str]) -> tuple[dict, np.ndarray, list[str]]:
    h = _header(lines[0], "graph")
    m = h["m"]
    body = lines[1:1 + m]
    edges = np.array([[int(t) for t in ln.split()] for ln in body], dtype=np.int64).reshape(-1, 2)
    if len(edges) != m:
        raise ValueError(f"header promises {m} edges, found {len(edges)}")
    return h, edges, lines[1 + m:]


def read_graph(path) -> DenseGraph:
    """Read a graph file; a trailing provenance section is ignored."""
    h, edges, _ = _read_edges(_lines(path))
    return DenseGraph.from_edges(h["n"], edges)


# block graphs and partitions ----------------------------------------------------

def format_block_graph(H: BlockGraph) -> str:
    out = [f"graph n={H.n} m={H.m}"]
    out.extend(f"{u} {v}" for u, v in H.edges.tolist())
    out.append("provenance")
    out.extend(f"{u} {v} {y}" for (u, v), y in zip(H.edges.tolist(), H.provenance.tolist()))
    return "\n".join(out) + "\n"


def write_block_graph(H: BlockGraph, path) -> None:
    Path(path).write_text(format_block_graph(H))


def read_block_provenance(path) -> tuple[int, np.ndarray, np.ndarray]:
    """(n, edges, provenance) from a block-graph file."""
    h, edges, rest = _read_edges(_lines(path))
    if not rest or rest[0] != "provenance":
        raise ValueError("missing provenance section")
    rows = np.array([[int(t) for t in ln.split()] for ln in rest[1:]], dtype=np.int64).reshape(-1, 3)
    if not np.array_equal(rows[:, :2], edges):
        raise ValueError("provenance section does not match the edge list")
    return h["n"], edges, rows[:, 2]


def format_partition(P: BlockPartition, F: UnitalIncidence) -> str:
    out = [f"partition s={P.s} seed={P.seed} Y={F.y_count}"]
    for y, nb in enumerate(F.y_neighbors):
        out.append(f"{y}: " + " ".join(f"{x}={lab}" for x, lab in zip(nb.tolist(), P.labels[y].tolist())))
    return "\n".join(out) + "\n"


def write_partition(P: BlockPartition, F: UnitalIncidence, path) -> None:
    Path(path).write_text(format_partition(P, F))


def read_partition(path, F: UnitalIncidence) -> BlockPartition:
    lines = _lines(path)
    h = _header(lines[0], "partition")
    labels = []
    for y, ln in enumerate(lines[1:]):
        head, _, rest = ln.partition(":")
        if int(head) != y:
            raise ValueError(f"partition lines out of order at y={head}")
        pairs = [tok.split("=") for tok in rest.split()]
        xs = [int(a) for a, _ in pairs]
        if xs != F.y_neighbors[y].tolist():
            raise ValueError(f"partition does not match F at y={y}")
        labels.append(np.array([int(b) for _, b in pairs], dtype=np.int64))
    if len(labels) != F.y_count:
        raise ValueError("partition does not match F")
    return BlockPartition(s=h["s"], seed=h["seed"], labels=labels)


def read_block_graph(graph_path, partition_path, F: UnitalIncidence) -> BlockGraph:
    """Rebuild H from F and its partition, checking it against the stored edges."""
    H = build_H(F, read_partition(partition_path, F))
    n, edges, prov = read_block_provenance(graph_path)
    if n != H.n or not np.array_equal(edges, H.edges) or not np.array_equal(prov, H.provenance):
        raise ValueError("stored block graph differs from the one rebuilt from F and the partition")
    return H


# hypergraphs and container families ----------------------------------------------

def format_hypergraph(Hg: UniformHypergraph) -> str:
    out = [f"hypergraph s={Hg.s} n={Hg.n} m={Hg.e}"]
    out.extend(" ".join(map(str, row)) for row in Hg.edges.tolist())
    return "\n".join(out) + "\n"


def write_hypergraph(Hg: UniformHypergraph, path) -> None:
    Path(path).write_text(format_hypergraph(Hg))


def read_hypergraph(path) -> UniformHypergraph:
    lines = _lines(path)
    h = _header(lines[0], "hypergraph")
    rows = [[int(t) for t in ln.split()] for ln in lines[1:]]
    if len(rows) != h["m"]:
        raise ValueError(f"header promises {h['m']} edges, found {len(rows)}")
    return UniformHypergraph(h["s"], h["n"], np.array(rows, dtype=np.int64).reshape(-1, h["s"]))


def write_family(family: ContainerFamily, path, sidecar: bool = False) -> None:
    """JSON dump; with ``sidecar`` the full containers go to <path>.containers.json."""
    path = Path(path)
    data = family.to_dict(with_containers=not sidecar)
    if sidecar:
        side = path.with_name(path.name + ".containers.json")
        data["containers_file"] = side.name
        write_json([list(c) for c in family.containers], side)
    write_json(data, path)


def write_json(obj, path) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True, default=_jsonable) + "\n")


def _jsonable(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.floating):
        return float(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    if isinstance(o, np.bool_):
        return bool(o)
    return str(o)
