"""Command-line surface.

Subcommands: color, verify, detect-overfull, generate, bench, oracle.
Reports are strict JSON and deterministic for a fixed (input, profile,
seed); wall-clock timing goes to stderr so the JSON artifacts stay
byte-stable.  Exit codes: 0 success, 2 input error, 3 hypothesis
violation, 4 construction failure.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import hashlib
import json
import os
import sys
import time

from .coloring import format_coloring, parse_coloring, validate_proper
from .driver import chi_prime_dense, class_verdict
from .errors import (
    GraphFormatError,
    HypothesisError,
    OracleTimeout,
    PipelineFailure,
)
from .generate import FAMILIES
from .graph import format_edge_list, parse_edge_list
from .oracle import OracleBudget, exact_chromatic_index, exhaustive_overfull_scan
from .overfull import deficiency_view, detect
from .profiles import get_profile

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_HYPOTHESIS = 3
EXIT_FAILURE = 4


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str):
    return parse_edge_list(_read_text(path))


def _emit(doc, out: str | None) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _instance_summary(g) -> dict:
    view = deficiency_view(g)
    return {
        "order": g.num_vertices(),
        "edges": g.edge_count(),
        "delta": view.delta_max,
        "delta_min": view.delta_min,
        "num_min_degree": len(view.v_min),
        "num_max_degree": len(view.v_max),
    }


def cmd_color(args) -> int:
    g = _load_graph(args.input)
    profile = get_profile(args.profile, args.epsilon)
    t0 = time.monotonic()
    res = chi_prime_dense(g, epsilon=args.epsilon, profile=profile, seed=args.seed)
    elapsed = time.monotonic() - t0
    doc = {
        "instance": _instance_summary(g),
        "graph_class": res.graph_class,
        "palette": res.coloring.k,
        "report": res.report,
        "coloring": format_coloring(res.coloring),
    }
    _emit(doc, args.out)
    print(f"colored in {elapsed:.3f}s", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    try:
        coloring = parse_coloring(_read_text(args.coloring), g.n)
    except (GraphFormatError, ValueError, IndexError) as exc:
        raise GraphFormatError(f"bad coloring file: {exc}") from exc
    for e, _c in coloring.items():
        u, v, copy = e
        if copy != 0 or not g.has_edge(u, v):
            raise GraphFormatError(f"coloring references missing edge {e}")
    proper, violation = validate_proper(g, coloring)
    complete = coloring.colored_count() == g.edge_count()
    sizes = coloring.class_sizes()
    doc = {
        "ok": bool(proper and complete),
        "proper": bool(proper),
        "complete": bool(complete),
        "violation": violation,
        "palette": coloring.k,
        "colored_edges": coloring.colored_count(),
        "graph_edges": g.edge_count(),
        "class_sizes": {str(c): sizes.get(c, 0) for c in range(1, coloring.k + 1)},
        "saturated_vertices": sum(
            1 for v in g.vertices if coloring.missing_count(v) == 0
        ),
    }
    _emit(doc, args.out)
    return EXIT_OK if doc["ok"] else EXIT_FAILURE


def cmd_detect_overfull(args) -> int:
    g = _load_graph(args.input)
    verdict = detect(g)
    doc = {
        "instance": _instance_summary(g),
        "status": verdict.status,
        "witness": verdict.witness,
    }
    _emit(doc, args.out)
    return EXIT_OK


def cmd_generate(args) -> int:
    maker = FAMILIES[args.family]
    kwargs = {"seed": args.seed}
    if args.family == "regular":
        if args.degree is None:
            raise ValueError("regular family needs --degree")
        kwargs["degree"] = args.degree
    elif args.family == "two-light":
        if args.degree is None:
            raise ValueError("two-light family needs --degree")
        kwargs["degree"] = args.degree
        kwargs["drop"] = args.drop
    elif args.family == "wide-spread":
        if args.spread is not None:
            kwargs["spread"] = args.spread
    elif args.family == "random-dense":
        kwargs["p"] = args.p
        if args.min_degree is not None:
            kwargs["min_degree"] = args.min_degree
    elif args.family == "planted-overfull":
        kwargs["deficiency"] = args.deficiency
    g = maker(args.order, **kwargs)
    text = format_edge_list(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_graph(args.input)
    budget = OracleBudget(max_seconds=args.max_seconds)
    chi = exact_chromatic_index(g, budget)
    witnesses = exhaustive_overfull_scan(g, g.max_degree(), budget)
    doc = {
        "instance": _instance_summary(g),
        "chromatic_index": chi,
        "graph_class": 1 if chi == g.max_degree() else 2,
        "overfull_witnesses": len(witnesses),
        "largest_witness": max((len(w) for w in witnesses), default=0),
    }
    _emit(doc, args.out)
    return EXIT_OK


def _bench_seed(name: str) -> int:
    digest = hashlib.sha256(name.encode("utf-8")).hexdigest()
    return int(digest[:8], 16)


def _bench_one(path: str, profile_name: str, epsilon: float) -> dict:
    name = os.path.basename(path)
    entry = {"file": name, "seed": _bench_seed(name)}
    t0 = time.monotonic()
    try:
        g = parse_edge_list(_read_text(path))
        profile = get_profile(profile_name, epsilon)
        res = chi_prime_dense(
            g, epsilon=epsilon, profile=profile, seed=entry["seed"]
        )
        proper, violation = validate_proper(g, res.coloring)
        entry.update(
            {
                "ok": bool(proper),
                "graph_class": res.graph_class,
                "palette": res.coloring.k,
                "branch": res.report.get("branch"),
                "violation": violation,
            }
        )
    except (GraphFormatError, HypothesisError, PipelineFailure) as exc:
        step = getattr(exc, "step", None)
        entry.update(
            {"ok": False, "error": str(exc), "step": step}
        )
    entry["millis"] = round(1000.0 * (time.monotonic() - t0), 1)
    return entry


def cmd_bench(args) -> int:
    paths = sorted(
        os.path.join(args.corpus, f)
        for f in os.listdir(args.corpus)
        if not f.startswith(".")
    )
    if args.jobs > 1 and paths:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(
                pool.map(
                    _bench_one,
                    paths,
                    [args.profile] * len(paths),
                    [args.epsilon] * len(paths),
                )
            )
    else:
        results = [_bench_one(p, args.profile, args.epsilon) for p in paths]
    times = sorted(r["millis"] for r in results)

    def pct(q):
        if not times:
            return 0.0
        return times[min(len(times) - 1, int(q * len(times)))]

    doc = {
        "instances": results,
        "aggregate": {
            "count": len(results),
            "successes": sum(1 for r in results if r.get("ok")),
            "class1": sum(1 for r in results if r.get("graph_class") == 1),
            "class2": sum(1 for r in results if r.get("graph_class") == 2),
            "p50_millis": pct(0.50),
            "p90_millis": pct(0.90),
        },
        "profile": args.profile,
    }
    _emit(doc, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="densecolor",
        description="chromatic-index engine for dense even-order graphs",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="write JSON here instead of stdout")

    p = sub.add_parser("color", help="decide the class and color the graph")
    p.add_argument("input", help="edge-list file ('-' for stdin)")
    p.add_argument("--epsilon", type=float, default=0.2)
    p.add_argument("--profile", choices=("paper", "desk"), default="desk")
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring against its graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("detect-overfull", help="overfull/full verdict")
    p.add_argument("input")
    common(p)
    p.set_defaults(func=cmd_detect_overfull)

    p = sub.add_parser("generate", help="emit a benchmark instance")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("--order", type=int, required=True, help="number of vertices (even)")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--drop", type=int, default=2)
    p.add_argument("--spread", type=int, default=None)
    p.add_argument("--p", type=float, default=0.75)
    p.add_argument("--min-degree", type=int, default=None)
    p.add_argument("--deficiency", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="run the engine over a corpus directory")
    p.add_argument("corpus")
    p.add_argument("--profile", choices=("paper", "desk"), default="desk")
    p.add_argument("--epsilon", type=float, default=0.2)
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oracle", help="exact tiny-scale cross-check")
    p.add_argument("input")
    p.add_argument("--max-seconds", type=float, default=30.0)
    common(p)
    p.set_defaults(func=cmd_oracle)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HypothesisError as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (GraphFormatError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PipelineFailure, OracleTimeout) as exc:
        step = getattr(exc, "step", None)
        where = f" [{step}]" if step else ""
        print(f"construction failure{where}: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
