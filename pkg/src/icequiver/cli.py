"""Command-line interface.

Exit codes: 0 ok, 1 invalid input, 2 unsupported parameter,
3 precondition failure, 4 environment problem.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialize
from .cuts import Cut, enumerate_cuts
from .errors import (
    CrossingPair,
    IceQuiverError,
    NotMutable,
    NotStrict,
    NotSymmetric,
    OrbitNotIndependent,
    ParameterMismatch,
    SearchExhausted,
    UnsupportedParameter,
)
from .families import FamilySpec, face_census, family_quiver, match_symmetric_collection
from .quiver import geometric_exchange, orbit_exchange, quiver_from_collection, underline
from .subsets import subset

EXIT_INVALID = 1
EXIT_UNSUPPORTED = 2
EXIT_PRECONDITION = 3
EXIT_ENVIRONMENT = 4


def _load_collection(path: str):
    try:
        data = json.loads(Path(path).read_text())
        return serialize.collection_from_json(data)
    except FileNotFoundError:
        raise IceQuiverError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise IceQuiverError(f"not valid JSON: {exc}")


def _write(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    print(f"wrote {path}")


def _parse_label(text: str, k: int, n: int):
    try:
        if "," in text:
            elems = [int(x) for x in text.split(",")]
        else:
            elems = [int(c) for c in text]
        return subset(elems, n)
    except ValueError as exc:
        raise IceQuiverError(f"cannot parse label {text!r}: {exc}")


def cmd_family(args) -> int:
    name_map = {"cobweb+": "cobwebPlus", "cobweb-": "cobwebMinus"}
    family = name_map.get(args.name, args.name)
    param = args.parameter
    if family != "sporadic":
        try:
            param = int(param)
        except ValueError:
            raise UnsupportedParameter(f"{family} expects an integer parameter")
    spec = FamilySpec(family, param)
    qp = family_quiver(spec)
    out = Path(args.out)
    stem = f"{family}_{str(param).replace('-', '_')}"
    _write(out / f"{stem}_quiver.json", serialize.dumps(serialize.qp_to_json(qp)))
    census = {str(k): v for k, v in sorted(face_census(qp).items())}
    info = {
        "family": family,
        "parameter": param,
        "kn": list(spec.kn()),
        "vertexCount": len(qp.vertices),
        "arrowCount": len(qp.arrows),
        "faceCensus": census,
    }
    if args.match:
        coll, witness = match_symmetric_collection(spec, max_candidates=args.max_solutions)
        _write(
            out / f"{stem}_collection.json",
            serialize.dumps(serialize.collection_to_json(coll)),
        )
        info["matched"] = True
        report = serialize.report_json(coll)
        _write(out / f"{stem}_report.json", serialize.dumps(report))
    _write(out / f"{stem}_family.json", serialize.dumps(info))
    return 0


def cmd_families(args) -> int:
    from .families import SPORADIC_IDS

    registry = {
        "grid": {"parameter": "k > 1", "kn": "(k, 2k)", "vertices": "(k-1)^2"},
        "triangle": {"parameter": "k in {2, 3, 4}", "kn": "(k, 3k)", "vertices": "(k-1)(2k-1)"},
        "cobweb+": {"parameter": "odd x >= 3", "kn": "(x-1, 2x)", "vertices": "x(x-2)"},
        "cobweb-": {"parameter": "odd x >= 3", "kn": "(x+1, 2x)", "vertices": "x(x-2)"},
        "sporadic": {"parameter": "one of " + ", ".join(SPORADIC_IDS), "kn": "fixture", "vertices": "fixture"},
    }
    print(serialize.dumps(registry))
    return 0


def cmd_check(args) -> int:
    coll = _load_collection(args.collection)
    report = serialize.report_json(coll)
    text = serialize.dumps(report)
    print(text)
    if args.profiles:
        from .profiles import RimProfile

        for m in sorted(coll.internal_members()):
            print(f"\nrim walk of {m}:")
            print(RimProfile(m).render())
    if args.out:
        _write(Path(args.out) / (Path(args.collection).stem + "_report.json"), text)
    return 0


def cmd_mutate(args) -> int:
    coll = _load_collection(args.collection)
    label = _parse_label(args.label, coll.k, coll.n)
    new = orbit_exchange(coll, label) if args.orbit else geometric_exchange(coll, label)
    text = serialize.dumps(serialize.collection_to_json(new))
    suffix = "orbit" if args.orbit else "mut"
    out = Path(args.out) / f"{Path(args.collection).stem}_{suffix}_{args.label.replace(',', '-')}.json"
    _write(out, text)
    print(text)
    return 0


def cmd_cuts(args) -> int:
    coll = _load_collection(args.collection)
    qp = underline(quiver_from_collection(coll))
    cuts = enumerate_cuts(qp)
    payload = {"count": len(cuts), "cuts": [serialize.cut_to_json(c) for c in cuts]}
    text = serialize.dumps(payload)
    print(text)
    if args.out:
        _write(Path(args.out) / (Path(args.collection).stem + "_cuts.json"), text)
    return 0


def cmd_export(args) -> int:
    coll = _load_collection(args.collection)
    q = quiver_from_collection(coll)
    stem = Path(args.collection).stem
    out = Path(args.out)
    if args.format_opt:
        args.format = args.format_opt
    if args.format is None:
        raise UnsupportedParameter("export needs a format (dot, tikz or json)")
    if args.format == "json":
        _write(out / f"{stem}_quiver.json", serialize.dumps(serialize.quiver_to_json(q)))
    elif args.format == "dot":
        _write(out / f"{stem}.dot", serialize.quiver_to_dot(q))
    elif args.format == "tikz":
        cut = None
        if args.cut_arrows:
            from .cuts import Cut

            cut = Cut(frozenset(int(x) for x in args.cut_arrows.split(",")))
        _write(out / f"{stem}.tex", serialize.quiver_to_tikz(q, cut))
    else:
        raise UnsupportedParameter(f"unknown export format {args.format!r}")
    return 0


def cmd_graph(args) -> int:
    from .search import SearchConfig, exchange_graph

    coll = _load_collection(args.collection)
    config = SearchConfig(coll.k, coll.n, orbit_only=args.orbit_only)
    g = exchange_graph(coll, depth=args.depth, config=config)
    text = serialize.exchange_graph_to_dot(g)
    out = Path(args.out) / (Path(args.collection).stem + "_exchange.dot")
    _write(out, text)
    print(f"{g.node_count()} nodes, connected: {g.is_connected()}")
    return 0


def cmd_serve(args) -> int:
    from .server import run_server

    seed = _load_collection(args.seed_file) if args.seed_file else None
    try:
        run_server(args.port, assets=args.assets, seed=seed)
    except OSError as exc:
        print(f"cannot bind port {args.port}: {exc}", file=sys.stderr)
        return EXIT_ENVIRONMENT
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="icequiver")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("family", help="generate a family quiver (and match a collection)")
    f.add_argument("name", choices=["grid", "triangle", "cobweb+", "cobweb-", "sporadic"])
    f.add_argument("parameter")
    f.add_argument("--out", default=".")
    f.add_argument("--no-match", dest="match", action="store_false")
    f.add_argument("--max-solutions", type=int, default=100_000)
    f.set_defaults(func=cmd_family)

    fl = sub.add_parser("families", help="list the family registry")
    fl.set_defaults(func=cmd_families)

    c = sub.add_parser("check", help="validate a collection and report self-injectivity")
    c.add_argument("collection")
    c.add_argument("--out", default=None)
    c.add_argument("--profiles", action="store_true", help="print rim walks of internal labels")
    c.set_defaults(func=cmd_check)

    m = sub.add_parser("mutate", help="geometric exchange at a label")
    m.add_argument("collection")
    m.add_argument("label")
    m.add_argument("--orbit", "--orbit-only", dest="orbit", action="store_true")
    m.add_argument("--out", default=".")
    m.set_defaults(func=cmd_mutate)

    k = sub.add_parser("cuts", help="enumerate cuts of the quiver with potential")
    k.add_argument("collection")
    k.add_argument("--out", default=None)
    k.set_defaults(func=cmd_cuts)

    e = sub.add_parser("export", help="export the ice quiver")
    e.add_argument("collection")
    e.add_argument("format", nargs="?", choices=["dot", "tikz", "json"])
    e.add_argument("--format", dest="format_opt", choices=["dot", "tikz", "json"])
    e.add_argument("--cut-arrows", default=None, help="comma-separated arrow ids drawn dotted")
    e.add_argument("--out", default=".")
    e.set_defaults(func=cmd_export)

    g = sub.add_parser("graph", help="explore the exchange graph and export DOT")
    g.add_argument("collection")
    g.add_argument("--depth", type=int, default=None)
    g.add_argument("--orbit-only", action="store_true")
    g.add_argument("--out", default=".")
    g.set_defaults(func=cmd_graph)

    s = sub.add_parser("serve", help="serve the HTTP API and explorer assets")
    s.add_argument("--port", type=int, default=8763)
    s.add_argument("--seed-file", default=None)
    s.add_argument("--assets", default=None)
    s.set_defaults(func=cmd_serve)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedParameter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (NotMutable, NotStrict, NotSymmetric, OrbitNotIndependent) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (CrossingPair, ParameterMismatch, SearchExhausted, IceQuiverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
