"""Command-line front end: generate, solve, verify, bench.

Exit codes: 0 success, 1 ratio bound or inequality violated, 2 usage or
input error, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict
from pathlib import Path

import numpy as np

from .edges import InvariantError
from .graph import build_graph, format_weights, matching_bandpasses, residual_instance
from .hampath import EXACT_CAP, CapacityError
from .instance import (
    InstanceError,
    format_instance,
    format_permutation,
    gen_from_graph,
    gen_random,
    gen_sweep,
    pad_even,
    parse_graph,
    read_instance,
    write_instance,
)
from .matching import max_weight_matching
from .oracle import ORACLE_CAP, verify_instance
from .solver import GUARANTEE, SolveOptions, solve

EXIT_OK, EXIT_BOUND, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(obj, report: str, text_lines=None, out=None) -> None:
    out = out or sys.stdout
    if report == "json":
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        for line in text_lines or []:
            out.write(line + "\n")


# generate

def cmd_generate(args) -> int:
    if args.from_graph:
        nv, edges = parse_graph(Path(args.from_graph).read_text())
        insts = [gen_from_graph(nv, edges)]
    else:
        if args.n is None or args.m is None:
            raise UsageError("generate needs --n and --m (or --from-graph)")
        insts = [gen_random(args.n, args.m, args.density, args.seed + k) for k in range(args.count)]
    if args.out_dir is None:
        if len(insts) > 1:
            raise UsageError("--count > 1 needs --out-dir")
        sys.stdout.write(format_instance(insts[0]))
        return EXIT_OK
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for k, inst in enumerate(insts):
        write_instance(inst, out / f"instance_{k:04d}.txt")
    return EXIT_OK


# solve

def cmd_solve(args) -> int:
    inst = read_instance(args.input)
    rep = solve(inst, SolveOptions(ham=args.ham, exact_cap=args.exact_cap, seed=args.seed))
    d = rep.to_dict(with_parts=args.dump_parts)
    d["n"], d["m"] = inst.n, inst.m
    if args.dump_weights:
        work = pad_even(inst)
        m1 = max_weight_matching(build_graph(work))
        d["weights"] = build_graph(work).weight.tolist()
        d["residual_weights"] = build_graph(residual_instance(work, matching_bandpasses(work, m1))).weight.tolist()
    lines = [
        f"permutation: {format_permutation(rep.permutation).strip()}",
        f"bandpasses: {rep.bandpasses}",
        f"w(M1) = {rep.w_m1}, w'(M2) = {rep.w_m2} ({rep.branch}, part {rep.m2_label})",
        f"certified ratio bound: {rep.ratio_bound:.5f}",
    ]
    if args.dump_weights:
        lines += ["weights:", format_weights(build_graph(work)).rstrip(),
                  "residual weights:",
                  format_weights(build_graph(residual_instance(work, matching_bandpasses(work, m1)))).rstrip()]
    if args.dump_parts:
        lines += [f"{lab}: {' '.join(f'{u + 1}-{v + 1}' for u, v in es)}" for lab, es in rep.parts.items()]
    _emit(d, args.report, lines)
    return EXIT_OK


# verify

def _check_dict(c) -> dict:
    d = asdict(c)
    d["witness"] = [list(w) if isinstance(w, tuple) else w for w in c.witness]
    return d


def _verify_one(inst, args) -> dict:
    res = verify_instance(inst, SolveOptions(ham=args.ham), cap=args.oracle_cap, exhaustive=args.exhaustive)
    return {
        "n": res["n"], "m": res["m"], "solver": res["solver"], "oracle": res["oracle"],
        "ratio": res["ratio"], "branch": res["branch"], "counts": res["counts"],
        "checks": [_check_dict(c) for c in res["checks"]],
        "passed": all(c.passed for c in res["checks"]),
    }


def cmd_verify(args) -> int:
    if args.input:
        records = [_verify_one(read_instance(args.input), args)]
    elif args.sweep:
        records = []
        for item in gen_sweep(args.sweep, args.nmax, args.seed):
            rec = _verify_one(item.instance, args)
            rec.update(index=item.index, seed=item.seed, density=item.density)
            records.append(rec)
    else:
        raise UsageError("verify needs --input FILE or --sweep N")
    failed = [r for r in records if not r["passed"]]
    summary = {
        "instances": len(records),
        "failures": len(failed),
        "worst_ratio": max(r["ratio"] for r in records),
        "bound": float(GUARANTEE),
    }
    lines = []
    for r in records:
        tag = "ok" if r["passed"] else "FAIL"
        bad = [c["name"] for c in r["checks"] if not c["passed"]]
        lines.append(f"{tag} n={r['n']} m={r['m']} solver={r['solver']} oracle={r['oracle']} "
                     f"ratio={r['ratio']:.4f}" + (f" failed={','.join(bad)}" if bad else ""))
    lines.append(f"{summary['instances']} instances, {summary['failures']} failures, "
                 f"worst ratio {summary['worst_ratio']:.4f} (bound {summary['bound']:.4f})")
    if args.input and args.report == "text":
        # with --exhaustive each check repeats once per optimal permutation; show the worst
        shown: dict[str, dict] = {}
        for c in records[0]["checks"]:
            if c["name"] not in shown or not c["passed"]:
                shown[c["name"]] = c
        lines[:0] = [f"  {'pass' if c['passed'] else 'FAIL'} {c['name']}: {c['lhs']} vs {c['rhs']}  ({c['detail']})"
                     for c in shown.values()]
    _emit({"records": records, "summary": summary}, args.report, lines)
    return EXIT_BOUND if failed else EXIT_OK


# bench

def _bench_task(task) -> dict:
    ident, seed, density, inst, ham, oracle_cap = task
    rec = {"id": ident, "seed": seed, "n": inst.n, "m": inst.m, "density": density}
    try:
        t0 = time.perf_counter()
        rep = solve(inst, SolveOptions(ham=ham))
        rec.update(solver=rep.bandpasses, branch=rep.branch, timings=rep.timings,
                   solve_seconds=time.perf_counter() - t0, oracle=None, ratio=None)
        if pad_even(inst).n <= oracle_cap:
            res = verify_instance(inst, SolveOptions(ham=ham), cap=oracle_cap)
            rec.update(oracle=res["oracle"], ratio=res["ratio"],
                       bound_ok=res["oracle"] * GUARANTEE.denominator <= rep.bandpasses * GUARANTEE.numerator,
                       failed_checks=[c.name for c in res["checks"] if not c.passed])
    except (InvariantError, CapacityError) as exc:
        rec["error"] = f"{type(exc).__name__}: {exc}"
    return rec


def _scaling(records) -> dict | None:
    """Least-squares exponent of solve time against n, compared with n^4."""
    by_n: dict[int, list[float]] = {}
    for r in records:
        if "solve_seconds" in r:
            by_n.setdefault(r["n"], []).append(r["solve_seconds"])
    if len(by_n) < 2:
        return None
    ns = sorted(by_n)
    ts = [float(np.mean(by_n[n])) for n in ns]
    slope = float(np.polyfit(np.log(ns), np.log(ts), 1)[0])
    # n^4 trend anchored at the smallest size; within 2x counts as consistent
    within = all(t <= 2 * ts[0] * (n / ns[0]) ** 4 for n, t in zip(ns, ts))
    return {"sizes": ns, "mean_seconds": ts, "fitted_exponent": slope, "within_2x_of_n4": within}


def cmd_bench(args) -> int:
    tasks = []
    if args.input_dir:
        for k, path in enumerate(sorted(Path(args.input_dir).glob("*.txt"))):
            tasks.append((path.name, None, None, read_instance(path), args.ham, args.oracle_cap))
    elif args.sizes:
        for n in args.sizes:
            for k in range(args.per_size):
                s = args.seed + 1000 * n + k
                tasks.append((f"n{n}-{k}", s, args.density, gen_random(n, args.m, args.density, s),
                              args.ham, args.oracle_cap))
    elif args.sweep:
        for item in gen_sweep(args.sweep, args.nmax, args.seed):
            tasks.append((item.index, item.seed, item.density, item.instance, args.ham, args.oracle_cap))
    else:
        raise UsageError("bench needs --input-dir, --sweep N or --sizes")

    if args.sizes:
        solve(gen_random(4, 3, 0.5, 0))  # warm-up so lazy imports do not skew the first size
    out = open(args.out, "w") if args.out else sys.stdout
    records = []
    try:
        def write(rec):
            records.append(rec)
            out.write(json.dumps(rec, sort_keys=True) + "\n")
            out.flush()

        if args.threads > 1:
            with ProcessPoolExecutor(max_workers=args.threads) as pool:
                for fut in as_completed([pool.submit(_bench_task, t) for t in tasks]):
                    write(fut.result())
        else:
            for t in tasks:
                write(_bench_task(t))
        ratios = [r["ratio"] for r in records if r.get("ratio") is not None]
        violated = [r["id"] for r in records if r.get("bound_ok") is False]
        summary = {
            "summary": True,
            "instances": len(records),
            "errors": sum("error" in r for r in records),
            "with_oracle": len(ratios),
            "worst_ratio": max(ratios) if ratios else None,
            "mean_ratio": float(np.mean(ratios)) if ratios else None,
            "bound": float(GUARANTEE),
            "violations": violated,
            "scaling": _scaling(records),
        }
        write(summary)
    finally:
        if out is not sys.stdout:
            out.close()
    if args.report == "text":
        sys.stderr.write(f"{summary['instances']} instances, worst ratio {summary['worst_ratio']}, "
                         f"{len(violated)} violations\n")
    return EXIT_BOUND if violated else EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _density(text: str) -> float:
    v = float(text)
    if not 0.0 <= v <= 1.0 or math.isnan(v):
        raise argparse.ArgumentTypeError(f"density must lie in [0, 1], got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--report", choices=("json", "text"), default=argparse.SUPPRESS)
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="bandpass", description="Bandpass-2 approximation toolkit")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", choices=("json", "text"), default="text")
    p.add_argument("--threads", type=_positive, default=1)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="write random or graph-derived instances")
    g.add_argument("--n", type=_positive)
    g.add_argument("--m", type=_positive)
    g.add_argument("--density", type=_density, default=0.5)
    g.add_argument("--count", type=_positive, default=1)
    g.add_argument("--out-dir")
    g.add_argument("--from-graph", metavar="FILE")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("solve", parents=[common], help="run the approximation on one instance")
    s.add_argument("--input", required=True)
    s.add_argument("--ham", choices=("exact", "heuristic", "auto"), default="auto")
    s.add_argument("--exact-cap", type=_positive, default=EXACT_CAP)
    s.add_argument("--dump-weights", action="store_true", help="include G and G' weight matrices")
    s.add_argument("--dump-parts", action="store_true", help="include every partition part")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", parents=[common], help="check solver output against the exact oracle")
    v.add_argument("--input")
    v.add_argument("--sweep", type=_positive)
    v.add_argument("--nmax", type=_positive, default=8)
    v.add_argument("--ham", choices=("exact", "heuristic", "auto"), default="auto")
    v.add_argument("--oracle-cap", type=_positive, default=ORACLE_CAP)
    v.add_argument("--exhaustive", action="store_true", help="check every optimal permutation (n <= 6)")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", parents=[common], help="JSON-lines benchmark over many instances")
    b.add_argument("--input-dir")
    b.add_argument("--sweep", type=_positive)
    b.add_argument("--nmax", type=_positive, default=8)
    b.add_argument("--sizes", type=lambda t: [_positive(x) for x in t.split(",")],
                   help="comma-separated n values for a timing run, e.g. 8,16,32,64")
    b.add_argument("--per-size", type=_positive, default=3)
    b.add_argument("--m", type=_positive, default=8)
    b.add_argument("--density", type=_density, default=0.5)
    b.add_argument("--ham", choices=("exact", "heuristic", "auto"), default="auto")
    b.add_argument("--oracle-cap", type=_positive, default=ORACLE_CAP)
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits 2
    except (InstanceError, CapacityError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except InvariantError as exc:
        sys.stderr.write(f"internal invariant breach: {exc}\n")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
