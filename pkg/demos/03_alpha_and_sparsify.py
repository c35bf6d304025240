# Keep each vertex of H with probability q^(-1/(s-1)) and measure the largest K_s-free set.
from unitalblocks.blocks import block_graph
from unitalblocks.graph import DenseGraph, alpha_s_exact, alpha_s_greedy
from unitalblocks.harness import keep_probability, sparsify
from unitalblocks.unital import build_incidence

P = DenseGraph.petersen()
print("Petersen alpha_2:", alpha_s_exact(P, 2).value, "| greedy:", alpha_s_greedy(P, 2, trials=50).value)

q, s = 5, 2
H = block_graph(build_incidence(q), s, seed=0)
G0 = sparsify(H, keep_probability(q, s), seed=0)
print(f"G0 keeps {G0.n} of {H.n} vertices, {G0.m} edges")

exact = alpha_s_exact(G0, s, budget=200_000)
greedy = alpha_s_greedy(G0, s, trials=200, seed=0)
print(f"alpha_{s}(G0): exact {exact.value} (proved={exact.exact}, {exact.nodes_explored} nodes), greedy {greedy.value}")
