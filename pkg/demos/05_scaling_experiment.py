# A small scaling run: CSV, JSON, fit and a log-log SVG in ./demo_results.
from unitalblocks.harness import PipelineConfig, scaling_experiment, triangle_diagnostic
from unitalblocks.blocks import block_graph
from unitalblocks.unital import build_incidence

res = scaling_experiment(PipelineConfig(qs=[3, 5, 7], s=2, trials=2, out_dir="demo_results"))
for r in res.records:
    print(r.q, r.seed, r.n_G0, r.alpha_method, r.alpha_value)
print("slope", round(res.fit.slope, 4), "reference", res.fit.target, "--", res.fit.note)
print(res.paths)

# triangles in H against a random graph of the same density
print(triangle_diagnostic(block_graph(build_incidence(5), 2, seed=0)))
