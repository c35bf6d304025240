# Containers: fingerprints, the codegree test and the counting bound.
from fractions import Fraction

from unitalblocks.blocks import block_graph
from unitalblocks.containers import (
    ContainerParams,
    UniformHypergraph,
    build_scaled_subhypergraph,
    check_codegree,
    container_step,
    count_ksfree_bound,
    iterate_containers,
    select_scale,
)
from unitalblocks.graph import count_ks_free_sets
from unitalblocks.unital import build_incidence

# the triangle as a 2-uniform hypergraph
K3 = UniformHypergraph(2, 3, [(0, 1), (0, 2), (1, 2)])
for row in check_codegree(K3, ContainerParams(2, b=1, r=1)).rows:
    print(f"ell={row['ell']}: Delta={row['delta']} <= {row['bound']}")
step = container_step(K3, ContainerParams(2, b=1, r=1))
for I in K3.independent_sets():
    print(f"I={I} -> fingerprint {step.g(I)} -> container {step.f(step.g(I))}")

# one scale-selection round on the block graph for q = 3
H = block_graph(build_incidence(3), 2, seed=0)
sc = select_scale(H, range(H.n))
G = build_scaled_subhypergraph(H, range(H.n), sc)
print(f"gamma={sc.gamma}, {len(sc.good_y)} good points (target {sc.target:.2f}), {G.e} hyperedges")

# refine X below 31 vertices and compare the bound with an exact count
fam = iterate_containers(H, threshold=31)
print(f"{len(fam)} containers at depth {fam.depth}, largest {fam.max_size}")
for t in (3, 4):
    cb = count_ksfree_bound(fam, t)
    print(f"t={t}: bound {cb.bound} >= exact {count_ks_free_sets(H.graph, 2, t)}")
