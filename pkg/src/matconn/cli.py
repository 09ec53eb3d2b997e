"""Command-line interface: JSON reports over graph/matroid/dual-pair files.

Commands: kappa, connectivity, separations, verify, dual, window.  Inputs
are file paths or "builtin:<name>" corpus references.  Output is a single
JSON document on stdout (stable key order, --pretty for indentation);
diagnostics go to stderr.  Exit codes: 0 pass, 1 counterexample/failed
check, 2 parse error, 3 precondition violation, 4 capacity exceeded.
"""

import argparse
import json
import math
import sys

from . import corpus
from .connectivity import (
    find_tutte_separation,
    tutte_connectivity,
    verify_equivalence,
)
from .duality import (
    check_kappa_duality,
    planar_dual,
    tutte_duality_check,
    verify_dual_pair,
    verify_graphdual,
)
from .errors import (
    CapacityError,
    InputError,
    InternalConsistencyError,
    MatconnError,
    PreconditionError,
)
from .fileio import graph_to_obj, load_dual_pair, load_graph, load_matroid, _load_obj
from .graphic import kappa_formula, mc_window, mfc
from .graphs import MultiGraph
from .matroids import (
    check_axioms,
    dual,
    find_matroid_separation,
    kappa_certificate,
    matroid_connectivity,
    rank,
)
from .periodic import PeriodicGraph, edge_set_from_spec, window, window_contract


def _encode(value):
    if value == math.inf:
        return "infinite"
    return value


def _load_any_graph(path):
    if isinstance(path, str) and path.startswith("builtin:"):
        return corpus.builtin(path[len("builtin:"):]), None
    return load_graph(path)


def _resolve_side(g, spec):
    if isinstance(g, PeriodicGraph):
        return edge_set_from_spec(g, spec)
    ids = [tok for tok in (t.strip() for t in spec.split(",")) if tok]
    return g.check_edges(ids)


def _cmd_kappa(args):
    g, _ = _load_any_graph(args.file)
    side = _resolve_side(g, args.side)
    engines = {}
    witness = None
    periodic = isinstance(g, PeriodicGraph)

    def run_engine(engine):
        nonlocal witness
        if engine == "formula":
            return kappa_formula(g, side, window_size=args.window if periodic else None)
        if periodic:
            if not side.is_finite:
                raise PreconditionError(
                    "bases/rank engines need a finite side on periodic graphs"
                )
            host = mc_window(g, args.window)
            ids = frozenset(side.explicit)
            missing = ids - host.ground_set
            if missing:
                raise PreconditionError(
                    f"side leaves window {args.window}: {sorted(missing)}"
                )
            m = host
        else:
            m = mfc(g)
            ids = frozenset(side)
        if engine == "bases":
            cert = kappa_certificate(m, ids)
            witness = sorted(cert.witness)
            return cert.value
        rest = m.ground_set - ids
        return rank(m, ids) + rank(m, rest) - rank(m, m.ground_set)

    wanted = [args.engine]
    if args.verify:
        wanted = ["formula", "bases", "rank"] if not periodic else ["formula", "bases"]
        if periodic and not side.is_finite:
            wanted = ["formula"]
    for engine in wanted:
        engines[engine] = run_engine(engine)
    values = set(engines.values())
    ok = len(values) == 1
    payload = {
        "command": "kappa",
        "engine": args.engine,
        "side": args.side,
        "values": {k: _encode(v) for k, v in engines.items()},
        "kappa": _encode(engines[args.engine]),
        "ok": ok,
    }
    if witness is not None:
        payload["witness_f"] = witness
    return payload, 0 if ok else 1


def _cmd_connectivity(args):
    g, _ = _load_any_graph(args.file)
    periodic = isinstance(g, PeriodicGraph)
    if args.kind == "tutte":
        value = tutte_connectivity(g, args.cap)
        label = "tutte"
        exhaustive = not periodic
    elif args.kind == "matroid-fc":
        if periodic:
            raise PreconditionError("matroid-fc connectivity needs a finite graph")
        value = matroid_connectivity(mfc(g), args.cap)
        label = "M_FC"
        exhaustive = True
    else:  # matroid-c
        m = mc_window(g, args.window) if periodic else mfc(g)
        value = matroid_connectivity(m, args.cap)
        label = m.label
        exhaustive = True
    payload = {
        "command": "connectivity",
        "kind": args.kind,
        "matroid": label,
        "value": value,
        "cap": args.cap,
        "at_cap": args.cap is not None and value == args.cap,
        "exhaustive": exhaustive,
        "ok": True,
    }
    return payload, 0


def _cmd_separations(args):
    g, _ = _load_any_graph(args.file)
    periodic = isinstance(g, PeriodicGraph)
    if args.kind == "tutte":
        report = find_tutte_separation(g, args.ell)
    else:
        m = mc_window(g, args.window) if periodic else mfc(g)
        report = find_matroid_separation(m, args.ell)
    payload = {"command": "separations", "ok": True, "report": report.to_json()}
    return payload, 0


def _sameconn_window_check(gp: PeriodicGraph, n: int):
    """kappa agreement between the formula and the windowed cycle matroid.

    Deterministic family: singles and pairs from window(1), plus its full
    edge set, each evaluated in mc_window at n and n+1.
    """
    from .matroids import kappa as kappa_bases

    if n < 2:
        raise InputError("sameconn-window needs n >= 2")
    inner = sorted(window(gp, 1).edges)
    families = [[e] for e in inner]
    families += [[a, b] for i, a in enumerate(inner) for b in inner[i + 1:]]
    families.append(inner)
    hosts = {k: mc_window(gp, k) for k in (n, n + 1)}
    rows = []
    ok = True
    for ids in families:
        formula_value = kappa_formula(gp, ids)
        values = {k: kappa_bases(m, ids) for k, m in hosts.items()}
        agree = len({formula_value, *values.values()}) == 1
        ok = ok and agree
        rows.append(
            {
                "x": sorted(ids),
                "formula": _encode(formula_value),
                f"window_{n}": _encode(values[n]),
                f"window_{n + 1}": _encode(values[n + 1]),
                "agree": agree,
            }
        )
    return ok, rows


def _cmd_verify(args):
    payload = {"command": "verify", "check": args.check}
    if args.check == "equivalence":
        g, _ = _load_any_graph(args.file)
        report = verify_equivalence(g, args.cap)
        payload["report"] = report.to_json()
        ok = report.agree
    elif args.check == "axioms":
        m = _load_matroid_like(args.file)
        primal = check_axioms(m)
        co = check_axioms(dual(m))
        payload["report"] = {
            "matroid": m.label,
            "primal_ok": primal.ok,
            "dual_ok": co.ok,
            "failed_axiom": primal.axiom or co.axiom or None,
        }
        ok = primal.ok and co.ok
    elif args.check == "dual":
        pair = load_dual_pair(args.file)
        report = verify_dual_pair(pair)
        payload["report"] = report.to_json()
        ok = report.ok
    elif args.check == "kappa-dual":
        m = _load_matroid_like(args.file)
        ok = check_kappa_duality(m)
        payload["report"] = {"matroid": m.label, "kappa_duality": ok}
    elif args.check == "graphdual":
        pair = load_dual_pair(args.file)
        ok = verify_graphdual(pair)
        payload["report"] = {"graphdual": ok}
    elif args.check == "sameconn-window":
        g, _ = _load_any_graph(args.file)
        if not isinstance(g, PeriodicGraph):
            raise PreconditionError("sameconn-window needs a periodic graph")
        ok, rows = _sameconn_window_check(g, args.n)
        payload["report"] = {"stabilized": ok, "cases": rows}
    elif args.check == "tutte-dual":
        pair = load_dual_pair(args.file)
        report = tutte_duality_check(pair, args.cap)
        payload["report"] = report.to_json()
        ok = report.agree
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown check {args.check!r}")
    payload["ok"] = ok
    return payload, 0 if ok else 1


def _load_matroid_like(path):
    """Matroid file, or a graph file taken to its finite-cycle matroid."""
    if isinstance(path, str) and path.startswith("builtin:"):
        g = corpus.builtin(path[len("builtin:"):])
        if isinstance(g, PeriodicGraph):
            raise PreconditionError("matroid checks need a finite graph or matroid file")
        return mfc(g)
    obj = _load_obj(path)
    if isinstance(obj, dict) and "ground" in obj:
        return load_matroid(obj)
    g, _ = load_graph(obj)
    if isinstance(g, PeriodicGraph):
        raise PreconditionError("matroid checks need a finite graph or matroid file")
    return mfc(g)


def _cmd_dual(args):
    g, faces = _load_any_graph(args.file)
    if isinstance(g, PeriodicGraph):
        raise PreconditionError("planar duals are constructed for finite graphs only")
    if args.file.startswith("builtin:"):
        key = args.file[len("builtin:"):].strip().lower()
        builder = corpus.FACE_BUILDERS.get(key)
        faces = builder() if builder else None
    if not faces:
        raise InputError("input carries no 'faces' embedding")
    dual_graph = planar_dual(g, faces)
    payload = {"command": "dual", "ok": True, "dual": graph_to_obj(dual_graph)}
    return payload, 0


def _cmd_window(args):
    g, _ = _load_any_graph(args.file)
    if not isinstance(g, PeriodicGraph):
        raise PreconditionError("window dumps need a periodic graph")
    host = window_contract(g, args.n) if args.contract else window(g, args.n)
    payload = {
        "command": "window",
        "ok": True,
        "n": args.n,
        "contracted": bool(args.contract),
        "graph": graph_to_obj(host),
    }
    if args.contract:
        payload["end_vertices"] = sorted(host.end_vertices)
    return payload, 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="matconn",
        description="Matroid connectivity and Tutte-connectivity toolkit",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kappa", parents=[common], help="connectivity function of one side")
    p.add_argument("file")
    p.add_argument("--side", required=True, help="edge ids or a named generator")
    p.add_argument("--engine", choices=["bases", "formula", "rank"], default="formula")
    p.add_argument("--window", type=int, default=3, help="window size for periodic bases/rank")
    p.add_argument("--verify", action="store_true", help="cross-check all engines")
    p.set_defaults(func=_cmd_kappa)

    p = sub.add_parser("connectivity", parents=[common], help="connectivity value")
    p.add_argument("file")
    p.add_argument("--kind", choices=["tutte", "matroid-fc", "matroid-c"], default="tutte")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--window", type=int, default=3)
    p.set_defaults(func=_cmd_connectivity)

    p = sub.add_parser("separations", parents=[common], help="search for one separation")
    p.add_argument("file")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--kind", choices=["tutte", "matroid"], default="tutte")
    p.add_argument("--window", type=int, default=3)
    p.set_defaults(func=_cmd_separations)

    p = sub.add_parser("verify", parents=[common], help="run a verification check")
    p.add_argument("file")
    p.add_argument(
        "--check",
        required=True,
        choices=[
            "equivalence",
            "axioms",
            "dual",
            "kappa-dual",
            "graphdual",
            "sameconn-window",
            "tutte-dual",
        ],
    )
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("dual", parents=[common], help="planar dual from a face list")
    p.add_argument("file")
    p.set_defaults(func=_cmd_dual)

    p = sub.add_parser("window", parents=[common], help="dump a (contracted) window")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--contract", action="store_true")
    p.set_defaults(func=_cmd_window)
    return parser


def _emit(payload, pretty):
    if pretty:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(json.dumps(payload, sort_keys=True))


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.func(args)
    except InputError as exc:
        _emit({"ok": False, "error": str(exc), "error_kind": "input"}, args.pretty)
        print(f"matconn: input error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        _emit({"ok": False, "error": str(exc), "error_kind": "precondition"}, args.pretty)
        print(f"matconn: precondition: {exc}", file=sys.stderr)
        return 3
    except CapacityError as exc:
        _emit({"ok": False, "error": str(exc), "error_kind": "capacity"}, args.pretty)
        print(f"matconn: capacity: {exc}", file=sys.stderr)
        return 4
    except InternalConsistencyError as exc:
        _emit({"ok": False, "error": str(exc), "error_kind": "internal"}, args.pretty)
        print(f"matconn: internal consistency: {exc}", file=sys.stderr)
        return 1
    except MatconnError as exc:
        _emit({"ok": False, "error": str(exc), "error_kind": "error"}, args.pretty)
        print(f"matconn: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args.pretty)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
