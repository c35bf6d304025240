# Random complete s-partite blocks on every point neighbourhood, and why H has no K_{s+2}.
from unitalblocks.blocks import block_graph, expected_edge_count, verify_ks2_free
from unitalblocks.lemma22 import lemma22_exhaustive, lemma22_witness
from unitalblocks.unital import build_incidence

F = build_incidence(3)
H = block_graph(F, s=2, seed=0)
print(f"H: n={H.n} m={H.m}, edge double count {expected_edge_count(H)}")

# every edge remembers the point whose block created it
u, v = H.edges[0].tolist()
print(f"edge {u}-{v} comes from point {H.provenance_of(u, v)}, parts there:",
      [p.tolist() for p in H.parts(H.provenance_of(u, v))])

# exact search for K_4 (s = 2) and K_5 (s = 3)
for s in (2, 3):
    rep = verify_ks2_free(block_graph(F, s, seed=1))
    print(f"s={s}: K_{s + 2} found? {not rep['free']}")

# a K_{s+2} would split into cliques of size <= s, one per point; some four vertices
# would then have their six edges in six different cliques
cliques = [[0, 1, 2], [0, 3], [0, 4], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]
print("witness in K_5:", lemma22_witness(3, cliques))
print({k: v for k, v in lemma22_exhaustive(3).items() if k != "failure_instances"})
