"""Command-line entry point.  Exit status is 0 only when every check run passed."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .blocks import block_graph, expected_edge_count, verify_ks2_free
from .containers import count_ksfree_bound, iterate_containers, niceness_check
from .graph import alpha_s_exact, alpha_s_greedy, count_ks_free_sets
from .harness import PipelineConfig, scaling_experiment, triangle_diagnostic
from .lemma22 import lemma22_exhaustive
from .unital import build_incidence, verify_unital

ABORTED = 3


def _emit(obj, out: str | None) -> None:
    if out:
        io.write_json(obj, out)
    else:
        print(json.dumps(obj, indent=2, sort_keys=True, default=io._jsonable))


def _qlist(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def cmd_build_unital(a) -> int:
    F = build_incidence(a.q)
    text = io.format_incidence(F)
    if a.out:
        Path(a.out).write_text(text)
        print(f"wrote {a.out}: |X|={F.x_count} |Y|={F.y_count}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify_unital(a) -> int:
    F = io.read_incidence(a.input) if a.input else build_incidence(a.q)
    rep = verify_unital(F, budget=a.budget, mode=a.mode)
    _emit(rep.to_dict(), a.out)
    return 0 if rep.passed else 1


def cmd_build_block(a) -> int:
    F = build_incidence(a.q)
    H = block_graph(F, a.s, a.seed)
    out = Path(a.out)
    out.mkdir(parents=True, exist_ok=True)
    stem = f"H_q{a.q}_s{a.s}_seed{a.seed}"
    io.write_block_graph(H, out / f"{stem}.graph")
    io.write_partition(H.partition, F, out / f"{stem}.partition")
    ok = H.m == expected_edge_count(H)
    print(f"wrote {out / stem}.graph and .partition: n={H.n} m={H.m} edge-count-check={'ok' if ok else 'FAILED'}")
    return 0 if ok else 1


def cmd_verify_free(a) -> int:
    H = block_graph(build_incidence(a.q), a.s, a.seed)
    rep = verify_ks2_free(H)
    rep["seed"] = a.seed
    _emit(rep, a.out)
    return 0 if rep["passed"] else 1


def cmd_alpha(a) -> int:
    G = io.read_graph(a.input)
    if a.method == "exact":
        res = alpha_s_exact(G, a.s, budget=a.budget)
    else:
        res = alpha_s_greedy(G, a.s, trials=a.trials, seed=a.seed)
    _emit({"n": G.n, "m": G.m, "s": a.s, "method": res.method, "value": res.value, "exact": res.exact,
           "nodes": res.nodes_explored, "witness": list(res.witness)}, a.out)
    return 0


def cmd_containers(a) -> int:
    H = block_graph(build_incidence(a.q), a.s, a.seed)
    fam = iterate_containers(H, lambda_const=a.lambda_c, threshold=a.threshold, budget=a.budget)
    if a.out:
        io.write_family(fam, a.out, sidecar=a.sidecar)
        print(f"wrote {a.out}: depth={fam.depth} containers={len(fam)} status={fam.status}")
    else:
        _emit(fam.to_dict(with_containers=False), None)
    if fam.violations:
        return 1
    return 0 if fam.status == "ok" else ABORTED


def cmd_count_bound(a) -> int:
    H = block_graph(build_incidence(a.q), a.s, a.seed)
    fam = iterate_containers(H, lambda_const=a.lambda_c, threshold=a.threshold, budget=a.budget)
    cb = count_ksfree_bound(fam, a.t, q=a.q, s=a.s)
    rep = {"q": a.q, "s": a.s, "seed": a.seed, "family_size": len(fam), "family_status": fam.status, **cb.to_dict()}
    ok = cb.below_threshold
    if a.exact:
        exact = count_ks_free_sets(H.graph, a.s, a.t)
        rep["exact"] = exact
        rep["bound_holds"] = cb.bound >= exact
        ok = ok and rep["bound_holds"]
    _emit(rep, a.out)
    return 0 if ok else 1


def cmd_lemma22(a) -> int:
    rep = lemma22_exhaustive(a.s, mode=a.mode, budget=a.budget, samples=a.samples, seed=a.seed)
    _emit(rep, a.out)
    return 0 if rep["passed"] else 1


def cmd_experiment(a) -> int:
    cfg = PipelineConfig(qs=_qlist(a.q), s=a.s, trials=a.trials, out_dir=a.out, timing=a.timing,
                         onan_budget=a.onan_budget, alpha_budget=a.alpha_budget)
    res = scaling_experiment(cfg)
    fit = res.fit
    slope = "refused" if fit.slope is None else f"{fit.slope:.4f}"
    print(f"{len(res.records)} records; fit slope {slope} (reference {fit.target}); {fit.note}")
    for k, p in sorted(res.paths.items()):
        print(f"  {k}: {p}")
    return 0


def cmd_diagnose(a) -> int:
    H = block_graph(build_incidence(a.q), a.s, a.seed)
    rep = {"q": a.q, "s": a.s, "seed": a.seed, "triangles": triangle_diagnostic(H)}
    nice = niceness_check(H, sample_count=a.samples, seed=a.seed)
    rows = nice.pop("rows")
    rep["niceness"] = nice
    if a.niceness_csv:
        lines = ["size,gamma,good_y,target,margin,passed"]
        lines += [f"{r['size']},{r['gamma']!r},{r['good_y']},{r['target']!r},{r['margin']!r},{str(r['passed']).lower()}"
                  for r in rows]
        Path(a.niceness_csv).write_text("\n".join(lines) + "\n")
    _emit(rep, a.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="unitalblocks", description="Unital block graphs: build, verify, measure.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--out", default=None, help="output path (JSON unless noted)")
        return sp

    sp = add("build-unital", cmd_build_unital, "write the incidence graph F")
    sp.add_argument("--q", type=int, required=True)

    sp = add("verify-unital", cmd_verify_unital, "check sizes, degrees, C4 and O'Nan-freeness of F")
    sp.add_argument("--q", type=int)
    sp.add_argument("--in", dest="input", help="read F from a file instead of building it")
    sp.add_argument("--budget", type=int, default=None, help="X-triples expanded by the pruned O'Nan search")
    sp.add_argument("--mode", choices=["exhaustive", "pruned"], default=None)

    sp = add("build-block", cmd_build_block, "write H and its partition into --out (a directory)")
    for flag in ("--q", "--s", "--seed"):
        sp.add_argument(flag, type=int, required=flag != "--seed", default=0)
    sp.set_defaults(out=".")

    sp = add("verify-free", cmd_verify_free, "exact K_{s+2} search in H")
    for flag in ("--q", "--s", "--seed"):
        sp.add_argument(flag, type=int, required=flag != "--seed", default=0)

    sp = add("alpha", cmd_alpha, "largest K_s-free vertex set of a graph file")
    sp.add_argument("--in", dest="input", required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--method", choices=["exact", "greedy"], default="exact")
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--trials", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)

    for name, func, help_ in (("containers", cmd_containers, "iterated container family of H"),
                              ("count-bound", cmd_count_bound, "container bound on K_s-free t-sets")):
        sp = add(name, func, help_)
        for flag in ("--q", "--s", "--seed"):
            sp.add_argument(flag, type=int, required=flag != "--seed", default=0)
        sp.add_argument("--lambda-c", type=float, default=None, help="constant C in lambda = C log2 q")
        sp.add_argument("--threshold", type=int, default=None)
        sp.add_argument("--budget", type=int, default=2_000_000, help="node budget per container step")
        if name == "containers":
            sp.add_argument("--sidecar", action="store_true", help="write full containers to a sidecar file")
        else:
            sp.add_argument("--t", type=int, required=True)
            sp.add_argument("--exact", action="store_true", help="also count by enumeration")

    sp = add("lemma22", cmd_lemma22, "four-vertex witness over clique partitions of K_{s+2}")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--mode", choices=["exhaustive", "sampled"], default=None)
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("experiment", cmd_experiment, "scaling experiment; --out is a directory")
    sp.add_argument("--q", required=True, help="comma-separated primes")
    sp.add_argument("--s", type=int, default=2)
    sp.add_argument("--trials", type=int, default=5)
    sp.add_argument("--timing", action="store_true", help="fill the seconds column and write timings.csv")
    sp.add_argument("--onan-budget", type=int, default=1_000_000)
    sp.add_argument("--alpha-budget", type=int, default=200_000)
    sp.set_defaults(out="results")

    sp = add("diagnose", cmd_diagnose, "triangle/C6 counts and the good-scale diagnostic")
    for flag in ("--q", "--s", "--seed"):
        sp.add_argument(flag, type=int, required=flag != "--seed", default=0)
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--niceness-csv", default=None)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify-unital" and args.q is None and args.input is None:
        build_parser().error("verify-unital needs --q or --in")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
