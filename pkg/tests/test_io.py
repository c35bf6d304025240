import numpy as np
import pytest

from unitalblocks import io
from unitalblocks.blocks import block_graph
from unitalblocks.containers import UniformHypergraph, iterate_containers
from unitalblocks.graph import DenseGraph


def test_incidence_roundtrip(tmp_path, incidence):
    F = incidence(2)
    p = tmp_path / "F.txt"
    io.write_incidence(F, p)
    assert p.read_text().splitlines()[0] == "unital q=2 X=12 Y=9"
    G = io.read_incidence(p)
    assert G.q == 2 and np.array_equal(G.adj, F.adj)


def test_graph_roundtrip(tmp_path):
    G = DenseGraph.petersen()
    p = tmp_path / "g.txt"
    io.write_graph(G, p)
    lines = p.read_text().splitlines()
    assert lines[0] == "graph n=10 m=15" and lines[1] == "0 1"
    assert io.read_graph(p).adjacency().tolist() == G.adjacency().tolist()


def test_block_graph_roundtrip(tmp_path, incidence):
    F = incidence(3)
    H = block_graph(F, 3, 2)
    io.write_block_graph(H, tmp_path / "h.graph")
    io.write_partition(H.partition, F, tmp_path / "h.part")
    assert (tmp_path / "h.part").read_text().splitlines()[1].startswith("0: ")
    H2 = io.read_block_graph(tmp_path / "h.graph", tmp_path / "h.part", F)
    assert np.array_equal(H2.edges, H.edges) and np.array_equal(H2.provenance, H.provenance)
    # the graph reader accepts the provenance-bearing file
    assert io.read_graph(tmp_path / "h.graph").m == H.m
    other = block_graph(F, 3, 3)
    io.write_partition(other.partition, F, tmp_path / "o.part")
    with pytest.raises(ValueError):
        io.read_block_graph(tmp_path / "h.graph", tmp_path / "o.part", F)


def test_hypergraph_roundtrip(tmp_path):
    Hg = UniformHypergraph.random(9, 3, 12, 0)
    io.write_hypergraph(Hg, tmp_path / "hg.txt")
    assert (tmp_path / "hg.txt").read_text().splitlines()[0] == "hypergraph s=3 n=9 m=12"
    assert np.array_equal(io.read_hypergraph(tmp_path / "hg.txt").edges, Hg.edges)


def test_family_json_with_sidecar(tmp_path, incidence):
    import json
    fam = iterate_containers(block_graph(incidence(3), 2, 0), threshold=31)
    io.write_family(fam, tmp_path / "fam.json", sidecar=True)
    data = json.loads((tmp_path / "fam.json").read_text())
    assert data["size"] == len(fam) and "containers" not in data
    side = json.loads((tmp_path / data["containers_file"]).read_text())
    assert [tuple(c) for c in side] == fam.containers


def test_bad_header(tmp_path):
    p = tmp_path / "x.txt"
    p.write_text("grph n=3 m=0\n")
    with pytest.raises(ValueError):
        io.read_graph(p)
    p.write_text("graph n=3 m=2\n0 1\n")
    with pytest.raises(ValueError):
        io.read_graph(p)
