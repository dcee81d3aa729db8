"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails (the first
counterexample is printed), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .connection import connection_slice, parameter, pm_rank_experiment, pset
from .express import build_wm_target, lower_bound_witness, verify_expressibility
from .field import QQ, parse_field
from .graphs import graph_from_json, graph_to_json
from .hom import WeightedGraph, hom
from .partitions import hardcore_rank_experiment
from .symtensor import decompose_M, make_M, sym_rank_bruteforce_dim2


class InputError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _load_graph(path):
    try:
        return graph_from_json(_load_json(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_target(path, field):
    try:
        return WeightedGraph.from_json(_load_json(path), field)
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{path}: bad target graph: {exc}") from exc


def _emit_rows(rows, columns, fmt, out):
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
        return
    w = csv.DictWriter(out, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for row in rows:
        w.writerow(row)


def cmd_hom(args, out):
    field = parse_field(args.field)
    G = _load_graph(args.graph)
    H = _load_target(args.target, field)
    out.write(field.format(hom(G, H)) + "\n")
    return 0


def cmd_holant(args, out):
    field = parse_field(args.field)
    G = _load_graph(args.graph)
    f = parameter(args.param, field)
    out.write(field.format(f(G)) + "\n")
    return 0


def cmd_slice(args, out):
    field = parse_field(args.field)
    target = _load_target(args.target, field) if args.target else None
    if args.gens == "pset":
        gens = pset(args.k)
    else:
        data = _load_json(args.gens)
        try:
            gens = [graph_from_json(g) for g in data]
        except (TypeError, ValueError) as exc:
            raise InputError(f"{args.gens}: {exc}") from exc
    f = parameter(args.param, field, target)
    tensor = connection_slice(f, args.k, args.n, gens).tensor
    if args.format == "csv":
        rows = [{"exponent": " ".join(map(str, e)), "value": field.format(x)} for e, x in tensor.coords().items()]
        _emit_rows(rows, ["exponent", "value"], "csv", out)
    else:
        json.dump(tensor.to_json(), out, indent=2)
        out.write("\n")
    return 0


def cmd_tensor(args, out):
    field = parse_field(args.field)
    T = make_M(args.n, field.parse(args.a), field.parse(args.b), field)
    report = {"tensor": T.to_json()}
    if args.decompose:
        report["decomposition"] = decompose_M(args.n, field.parse(args.a), field.parse(args.b), field).to_json()
    if args.rank:
        r = sym_rank_bruteforce_dim2(T)
        report["symmetric_rank"] = r if r is not None else f"none <= {field.p + 1}"
    json.dump(report, out, indent=2)
    out.write("\n")
    return 0


def cmd_express(args, out):
    if parse_field(args.field) != QQ:
        raise InputError("express supports --field q only; the characteristic-2 exception "
                         "(a=0, d=2) needs a three-vertex target that is not constructed")
    res = build_wm_target(args.d, QQ.parse(args.a))
    report = verify_expressibility(res, args.trials, args.max_vertices, seed=args.seed)
    keys = ["wm", "incidence", "expanded", "moved", "hom"] + (["generic_move"] if res.d == 2 else [])
    rows = [
        {"trial": r["trial"], "vertices": r["graph"].vertex_count, "edges": r["graph"].edge_count,
         "ok": int(r["ok"]), **{k: QQ.format(r[k]) for k in keys}}
        for r in report["rows"]
    ]
    json.dump({
        "d": res.d,
        "a": QQ.format(res.a),
        "a_nodes": [QQ.format(x) for x in res.a_nodes],
        "target": res.H.to_json(),
    }, out, indent=2)
    out.write("\n")
    _emit_rows(rows, ["trial", "vertices", "edges", "ok"] + keys, args.format, out)
    if not report["passed"]:
        m = report["mismatch"]
        sys.stderr.write(f"counterexample: {graph_to_json(m['graph'])} -> "
                         + ", ".join(f"{k}={QQ.format(m[k])}" for k in keys) + "\n")
        return 1
    return 0


def cmd_lower_bound(args, out):
    rep = lower_bound_witness(args.d, QQ.parse(args.a))
    rows = [{"d": rep["d"], "a": QQ.format(rep["a"]), "matches_expansion": int(rep["matches_expansion"]),
             "prime": p, "gf_rank": "none" if r is None else r} for p, r in rep["gf_rank"].items()]
    if not rows:
        rows = [{"d": rep["d"], "a": QQ.format(rep["a"]),
                 "matches_expansion": int(rep["matches_expansion"]), "prime": "", "gf_rank": ""}]
    _emit_rows(rows, ["d", "a", "matches_expansion", "prime", "gf_rank"], args.format, out)
    return 0 if rep["matches_expansion"] and rep["rank_ok"] else 1


def cmd_pm_rank(args, out):
    rows = pm_rank_experiment(args.nmax)
    flat = [{"n": r["n"], "verified": int(r["verified"]),
             **{f"gf{p}": ("none" if x is None else x) for p, x in r["gf_rank"].items()}} for r in rows]
    _emit_rows(flat, ["n", "verified", "gf2", "gf3", "gf5"], args.format, out)
    return 0 if all(r["verified"] and r["rank_ok"] for r in rows) else 1


def cmd_hardcore(args, out):
    if args.kmax > 6:
        raise InputError("--kmax is capped at 6")
    try:
        rows = hardcore_rank_experiment(args.kmax, QQ.parse(args.lam))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit_rows(rows, ["k", "bell", "rank", "two_pow_k"], args.format, out)
    return 0 if all(r["rank"] == r["bell"] for r in rows) else 1


def cmd_selftest(args, out):
    from .acceptance import run_all

    return 0 if run_all(lambda line: out.write(line + "\n")) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homtensor", description="Exact homomorphism, Holant and connection-tensor computations.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--field", default="q", help="q (rationals, default) or gf:p")
        sp.add_argument("--format", choices=["json", "csv"], default="csv")
        return sp

    sp = add("hom", cmd_hom, "evaluate hom(G, H)")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--target", required=True)

    sp = add("holant", cmd_holant, "evaluate pm | wm:a | ec:d | vdcc")
    sp.add_argument("--param", required=True)
    sp.add_argument("--graph", required=True)

    sp = add("slice", cmd_slice, "connection-tensor slice")
    sp.add_argument("--param", required=True, help="pm | wm:a | ec:d | vdcc | hom")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--gens", default="pset", help="'pset' or a JSON file with a list of labeled graphs")
    sp.add_argument("--target", help="target graph JSON for --param hom")
    sp.set_defaults(format="json")

    sp = add("tensor", cmd_tensor, "matching tensor M_{n;a,b}, decomposition and rank")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a", default="0")
    sp.add_argument("--b", default="1")
    sp.add_argument("--decompose", action="store_true")
    sp.add_argument("--rank", action="store_true", help="brute-force symmetric rank (needs gf:p)")

    sp = add("express", cmd_express, "build and verify the degree-bounded target for wm_a")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--a", default="0")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--max-vertices", type=int, default=8)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("lower-bound", cmd_lower_bound, "restricted wm_a slice and oracle ranks")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--a", default="0")

    sp = add("pm-rank", cmd_pm_rank, "pm slices against M_{n;0,1} with oracle ranks")
    sp.add_argument("--nmax", type=int, default=8)

    sp = add("hardcore", cmd_hardcore, "rank of the hardcore partition-lattice matrix")
    sp.add_argument("--kmax", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", required=True)

    add("selftest", cmd_selftest, "run the acceptance checks")
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (InputError, ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
