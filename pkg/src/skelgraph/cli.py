"""Command-line entry point.

Subcommands: ``fixture`` emits a named fixture graph as JSON,
``verify`` runs one of the theorem verifications, ``export-dot``
renders a graph (with an optional locus overlay) to DOT, and ``solve``
solves a Poisson problem exactly.  All I/O is JSON on files or
stdin/stdout ("-" means stdin).

Exit codes: 0 success, 1 verification failure, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import io as sio
from .errors import SkelgraphError
from .fixtures import fixture, fixture_names
from .potential import bridges, laplacian, maximal_bridge_chains, solve_poisson
from .skeleton import (
    canonical_form_locus,
    essential_skeleton,
    strip_genus,
    witness_bridge_chain,
    witness_cycle,
)
from .loci import union_loci, vertex_locus
from .weight import ks_skeleton, verify_laplacian_theorem, weight_function

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2


def _read_json(path: str):
    if path == "-":
        return json.loads(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _load_graph(path: str):
    return sio.graph_from_json(_read_json(path))


def _cmd_fixture(args) -> int:
    g = fixture(args.name, n=args.n, metric=args.metric)
    _emit(sio.graph_to_json(g))
    return EXIT_OK


def _cmd_export_dot(args) -> int:
    g = _load_graph(args.graph)
    locus = sio.locus_from_json(g, _read_json(args.locus)) if args.locus else None
    sys.stdout.write(sio.export_dot(g, locus))
    return EXIT_OK


def _cmd_solve(args) -> int:
    g = _load_graph(args.graph)
    target = sio.divisor_from_json(_read_json(args.divisor))
    slopes = {str(k): int(v) for k, v in (_read_json(args.ray_slopes) or {}).items()} \
        if args.ray_slopes else {}
    f = solve_poisson(g, target, ray_slopes=slopes, anchor=args.anchor)
    _emit(sio.function_to_json(f))
    return EXIT_OK


def _verify_laplacian(g, data_doc) -> dict:
    data = sio.data_from_json(data_doc)
    report = verify_laplacian_theorem(g, data)
    wt = weight_function(g, data)
    return {
        "ok": bool(report),
        "laplacian": sio.divisor_to_json(laplacian(g, wt)),
        "detail": report.describe(),
    }


def _verify_ks(g, data_doc) -> dict:
    data = sio.data_from_json(data_doc)
    locus = ks_skeleton(g, data)
    return {"ok": True, "ks_skeleton": sio.locus_to_json(locus)}


def _verify_essential(g) -> dict:
    skel = essential_skeleton(g)
    return {"ok": True, "essential_skeleton": sio.graph_to_json(skel)}


def _verify_min_locus(g, data_doc) -> dict:
    work = strip_genus(g)
    if data_doc:
        eids = [str(data_doc["edge"])]
        tree = [str(t) for t in data_doc["tree"]] if "tree" in data_doc else None
    else:
        eids = sorted(e.id for e in work.edges if e.id not in bridges(work))
        tree = None
    results = {}
    ok = True
    for eid in eids:
        try:
            bundle = witness_cycle(work, eid, tree=tree)
            results[eid] = {"ok": True, "witness": sio.witness_to_json(bundle)}
        except SkelgraphError as exc:
            results[eid] = {"ok": False, "error": str(exc)}
            ok = False
    return {"ok": ok, "edges": results}


def _verify_bridge(g, data_doc) -> dict:
    work = strip_genus(g)
    if data_doc and "chain" in data_doc:
        wanted = {str(e) for e in data_doc["chain"]}
        chains = [c for c in maximal_bridge_chains(work) if set(c.edges) == wanted]
        if not chains:
            raise SkelgraphError(f"no maximal bridge chain with edges {sorted(wanted)}")
    else:
        chains = maximal_bridge_chains(work)
    results = []
    ok = True
    for chain in chains:
        try:
            bundle = witness_bridge_chain(work, chain)
            results.append({"chain": list(chain.edges), "ok": True,
                            "witness": sio.witness_to_json(bundle)})
        except SkelgraphError as exc:
            results.append({"chain": list(chain.edges), "ok": False,
                            "error": str(exc)})
            ok = False
    return {"ok": ok, "chains": results}


def _verify_nonbridge(g, data_doc) -> dict:
    expected = canonical_form_locus(g)
    work = strip_genus(g)
    non_bridges = sorted(e.id for e in work.edges if e.id not in bridges(work))
    loci = [witness_cycle(work, eid).locus for eid in non_bridges]
    genus_vertices = [v.id for v in g.vertices if v.genus > 0]
    got_on_work = union_loci(work, loci + [vertex_locus(work, *genus_vertices)])
    # re-express on the original graph (same ids and lengths)
    got = sio.locus_from_json(g, sio.locus_to_json(got_on_work))
    ok = got == expected
    return {
        "ok": ok,
        "canonical_form_locus": sio.locus_to_json(expected),
        "witness_union": sio.locus_to_json(got),
    }


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    data_doc = _read_json(args.data) if args.data else None
    needs_data = {"laplacian", "ks"}
    if args.subject in needs_data and data_doc is None:
        raise SkelgraphError(f"verify {args.subject} requires --data")
    if args.subject == "laplacian":
        report = _verify_laplacian(g, data_doc)
    elif args.subject == "ks":
        report = _verify_ks(g, data_doc)
    elif args.subject == "essential":
        report = _verify_essential(g)
    elif args.subject == "min-locus":
        report = _verify_min_locus(g, data_doc)
    elif args.subject == "bridge":
        report = _verify_bridge(g, data_doc)
    else:
        report = _verify_nonbridge(g, data_doc)
    report["subject"] = args.subject
    report["graph"] = g.name or args.graph
    _emit(report)
    return EXIT_OK if report["ok"] else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skelgraph",
        description="Exact computations on weighted dual graphs of curve models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fix = sub.add_parser("fixture", help="emit a named fixture graph as JSON")
    p_fix.add_argument("name", choices=fixture_names())
    p_fix.add_argument("--n", type=int, default=None,
                       help="family parameter (chain length, cycle size, ...)")
    p_fix.add_argument("--metric", choices=["model", "stable"], default="model")
    p_fix.set_defaults(func=_cmd_fixture)

    p_ver = sub.add_parser("verify", help="run a verification and report")
    p_ver.add_argument("subject", choices=["laplacian", "ks", "essential",
                                           "min-locus", "bridge", "nonbridge"])
    p_ver.add_argument("--graph", required=True, help="graph JSON file or -")
    p_ver.add_argument("--data", default=None, help="subject-specific JSON file")
    p_ver.set_defaults(func=_cmd_verify)

    p_dot = sub.add_parser("export-dot", help="render a graph to DOT")
    p_dot.add_argument("--graph", required=True)
    p_dot.add_argument("--locus", default=None, help="locus JSON to highlight")
    p_dot.set_defaults(func=_cmd_export_dot)

    p_sol = sub.add_parser("solve", help="solve laplacian(f) = divisor exactly")
    p_sol.add_argument("--graph", required=True)
    p_sol.add_argument("--divisor", required=True)
    p_sol.add_argument("--anchor", required=True, help="vertex id with f = 0")
    p_sol.add_argument("--ray-slopes", default=None,
                       help="JSON file mapping ray labels to integer slopes")
    p_sol.set_defaults(func=_cmd_solve)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SkelgraphError, json.JSONDecodeError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
