"""Command-line front end: ``tfrac-lab <subcommand> ...``.

Output is JSON unless ``--format`` says otherwise.  Exit status is 0 on
success, 1 when a verification fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

from .errors import TfracError
from .poly import Poly, format_poly, parse_poly

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

POLY_KINDS = ("p_bt", "p_rt", "q_bt", "q_rt", "q_star_rt", "p_irt", "q_irt", "p_perm_star")


class UsageError(Exception):
    pass


# ----------------------------------------------------------------------
# helpers

def _scalar_or_text(p: Poly):
    """Integers stay integers in JSON; everything else is canonical text."""
    p = Poly.coerce(p)
    if p.is_constant():
        v = p.constant_term()
        if getattr(v, "denominator", 1) == 1:
            return int(v)
    return format_poly(p)


def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except ValueError as exc:
        raise UsageError("%s is not valid JSON: %s" % (what, exc)) from exc


def _specialization(text: Optional[str]):
    if not text:
        return None
    obj = _json_arg(text, "--specialize")
    if not isinstance(obj, dict):
        raise UsageError("--specialize must be a JSON object such as '{\"x1\": 1}'")
    return {k: parse_poly(v) if isinstance(v, str) else v for k, v in obj.items()}


def _emit(obj, fmt: str = "json", out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        json.dump(obj, out, indent=2, sort_keys=False, default=str)
        out.write("\n")
    elif isinstance(obj, str):
        out.write(obj if obj.endswith("\n") else obj + "\n")
    else:
        out.write(str(obj) + "\n")


def _rows_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _tree_arg(args, family: str):
    from .trees import parse_tree, worked_binary_tree, worked_irt, worked_rt
    if args.worked:
        return {"bt": worked_binary_tree, "rt": worked_rt, "irt": worked_irt}[family]()
    if not args.tree:
        raise UsageError("give a tree with --tree TEXT or use --worked")
    try:
        return parse_tree(args.tree, family)
    except (ValueError, TfracError) as exc:
        raise UsageError("cannot parse tree %r: %s" % (args.tree, exc)) from exc


# ----------------------------------------------------------------------
# subcommands

def _fraction_from_args(args):
    from .contfrac import QuasiAffineSpec, quasi_affine, spec_from_json
    given = [x for x in (args.tfraction, args.jfraction, args.sfraction) if x]
    if len(given) != 1:
        raise UsageError("give exactly one of --tfraction, --jfraction, --sfraction")
    text = given[0]
    if args.tfraction and text.startswith("quasiaffine:"):
        vals = [parse_poly(v) for v in text.split(":", 1)[1].split(",")]
        if len(vals) != 8:
            raise UsageError("quasiaffine needs 8 comma-separated values x,y,u,v,a,b,c,d")
        return quasi_affine(QuasiAffineSpec.from_tuple(vals))
    obj = _json_arg(text, "fraction spec")
    if not isinstance(obj, dict):
        raise UsageError("fraction spec must be a JSON object")
    obj = dict(obj)
    obj["kind"] = "T" if args.tfraction else ("J" if args.jfraction else "S")
    return spec_from_json(obj)


def cmd_expand(args) -> int:
    from .contfrac import expand
    spec = _fraction_from_args(args)
    series = expand(spec, args.order)
    coeffs = [_scalar_or_text(c) for c in series.coeffs]
    if args.format == "json":
        _emit({"order": args.order, "coefficients": coeffs})
    else:
        _emit(",".join(str(c) for c in coeffs), "plain")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    from .trees import enumerate_family, format_tree
    trees = enumerate_family(args.family, args.n)
    if args.count:
        count = sum(1 for _ in trees)
        _emit({"family": args.family, "n": args.n, "count": count} if args.format == "json" else str(count),
              args.format)
        return EXIT_OK
    texts = []
    for t in trees:
        if args.limit is not None and len(texts) >= args.limit:
            break
        texts.append(format_tree(t))
    if args.format == "json":
        _emit({"family": args.family, "n": args.n, "trees": texts})
    else:
        _emit("\n".join(texts), "plain")
    return EXIT_OK


def cmd_stats(args) -> int:
    from .trees import all_vertex_stats, format_tree, traversal_order
    tree = _tree_arg(args, args.family)
    stats = all_vertex_stats(tree, args.traversal)
    labels = [str(v + 1) if args.family != "irt" else "{%s}" % ",".join(map(str, tree.labels(v)))
              for v in range(len(tree.parent))]
    rows = [[labels[v], s.node_type, s.lev, s.croix, s.nid] + ([s.label_surplus] if args.family == "irt" else [])
            for v, s in enumerate(stats)]
    header = ["vertex", "type", "lev", "croix", "nid"] + (["surplus"] if args.family == "irt" else [])
    if args.format == "json":
        order = traversal_order(tree, args.traversal)
        _emit({"tree": format_tree(tree), "traversal": args.traversal,
               "order": [labels[v] for v in order],
               "vertices": [dict(zip(header, r)) for r in rows]})
    else:
        _emit(_rows_csv(header, rows), "plain")
    return EXIT_OK


def cmd_poly(args) -> int:
    from . import treepolys
    fn = getattr(treepolys, args.kind)
    spec = _specialization(args.specialize)
    if args.kind.startswith("q_"):
        p = fn(args.n, args.traversal, spec)
    else:
        p = fn(args.n, spec)
    if args.format == "json":
        _emit({"kind": args.kind, "n": args.n, "polynomial": format_poly(p)})
    else:
        _emit(format_poly(p), "plain")
    return EXIT_OK


def cmd_bijection(args) -> int:
    from . import bijections as bj
    from .paths import MOTZKIN, SCHRODER, path_from_word, render
    from .trees import format_tree
    if args.inverse:
        if not args.path:
            raise UsageError("--inverse needs --path WORD (and --labels JSON unless the family is bt)")
        if args.family == "bt":
            sigma = _json_arg(args.path, "--path")
            tree = bj.permutation_to_bt(sigma)
        else:
            labels = _json_arg(args.labels or "[]", "--labels")
            labels = [tuple(x) if isinstance(x, list) else x for x in labels]
            kind = MOTZKIN if args.family == "rt" else SCHRODER
            path = path_from_word(kind, args.path)
            if args.family == "rt":
                tree = bj.labeled_motzkin_to_rt(path, labels, args.traversal)
            else:
                tree = bj.labeled_schroder_to_irt(path, labels, args.traversal)
        _emit({"family": args.family, "tree": format_tree(tree)} if args.format == "json"
              else format_tree(tree), args.format)
        return EXIT_OK
    tree = _tree_arg(args, args.family)
    if args.family == "bt":
        sigma = bj.bt_to_permutation(tree)
        _emit({"tree": format_tree(tree), "permutation": list(sigma)} if args.format == "json"
              else " ".join(map(str, sigma)), args.format)
        return EXIT_OK
    if args.family == "rt":
        lp = bj.rt_to_labeled_motzkin(tree, args.traversal)
    else:
        lp = bj.irt_to_labeled_schroder(tree, args.traversal)
    out = {"tree": format_tree(tree), "traversal": args.traversal, "path": lp.path.word(),
           "labels": [list(x) if isinstance(x, tuple) else x for x in lp.labels]}
    if args.render:
        out["picture"] = render(lp.path)
    if args.format == "json":
        _emit(out)
    else:
        _emit(out["path"] + "\n" + " ".join(map(str, lp.labels)) + ("\n" + out["picture"] if args.render else ""),
              "plain")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .theorems import THEOREM_IDS, verify, verify_all
    if args.list:
        _emit(list(THEOREM_IDS), args.format)
        return EXIT_OK
    spec = "primes" if args.primes else _specialization(args.specialize)
    if args.all:
        report = verify_all(args.order, args.traversal, spec, args.jobs)
    elif args.id:
        if args.id not in THEOREM_IDS:
            raise UsageError("unknown theorem id %r; see 'verify --list'" % args.id)
        report = verify(args.id, order=args.order, traversal=args.traversal, specialization=spec, jobs=args.jobs)
    else:
        raise UsageError("give --all or --id THEOREM")
    if args.format == "json":
        _emit(report)
    else:
        results = report["results"] if "results" in report else [report]
        _emit(_rows_csv(["theorem", "order", "pass", "seconds"],
                        [[r["theorem"], r["order"], r["pass"], r["seconds"]] for r in results]), "plain")
    return EXIT_OK if report["pass"] else EXIT_FAIL


def cmd_conjecture(args) -> int:
    from .permstats import check_trivariate_conjecture
    report = check_trivariate_conjecture(args.nmax, args.nmin, args.jobs)
    if args.format == "json":
        _emit(report)
    else:
        _emit(_rows_csv(["n", "pass", "seconds"], [[r["n"], r["pass"], r["seconds"]] for r in report["results"]]),
              "plain")
    return EXIT_OK if report["pass"] else EXIT_FAIL


def cmd_oeis(args) -> int:
    from . import oeis
    offline = args.offline
    if args.action == "table":
        report = oeis.reproduce_table_a1(offline=offline)
    elif args.action == "first-sweep":
        report = oeis.reproduce_first_sweep(offline=offline)
    elif args.action == "sweep":
        cfg = oeis.first_sweep_config() if args.which == "first" else oeis.second_sweep_config()
        rows = oeis.sweep(cfg)
        if args.format == "json":
            _emit({"sweep": args.which, "size": len(rows),
                   "rows": [{"params": list(p), "terms": list(s)} for p, s in rows]})
        else:
            _emit(_rows_csv(["params", "terms"], [[" ".join(map(str, p)), " ".join(map(str, s))] for p, s in rows]),
                  "plain")
        return EXIT_OK
    else:
        if not args.terms:
            raise UsageError("lookup needs --terms 1,2,3,...")
        try:
            terms = [int(x) for x in args.terms.split(",")]
        except ValueError as exc:
            raise UsageError("--terms must be comma-separated integers") from exc
        found = oeis.lookup(terms, args.drop_first, offline=offline)
        _emit({"terms": terms, "matches": found} if args.format == "json" else "\n".join(found), args.format)
        return EXIT_OK
    if args.format == "json":
        _emit(report)
    else:
        _emit(oeis.table_csv(report), "plain")
    return EXIT_OK if report["pass"] else EXIT_FAIL


def _egf_list(text: str, what: str) -> List[Poly]:
    obj = _json_arg(text, what)
    if not isinstance(obj, list):
        raise UsageError("%s must be a JSON list of exponential coefficients" % what)
    return [parse_poly(x) if isinstance(x, str) else Poly.coerce(x) for x in obj]


def cmd_riordan(args) -> int:
    from . import riordan as rd
    if args.action == "lah":
        weights = _specialization(args.specialize)
        P = rd.lah_production(rd.family_phi(args.family, weights), args.n)
        col = rd.output_matrix(P).column(0)
        out = {"family": args.family, "production": P.to_strings(),
               "output_column": [_scalar_or_text(c) for c in col]}
        _emit(out if args.format == "json" else P.to_csv(), args.format)
        return EXIT_OK
    pair = rd.EgfPair(_egf_list(args.F, "--F"), _egf_list(args.G, "--G"))
    if args.action == "production":
        P = rd.production_matrix(rd.riordan_matrix(pair, args.n + 1))
        _emit({"production": P.to_strings()} if args.format == "json" else P.to_csv(), args.format)
        return EXIT_OK
    report = rd.check_exp_riordan_production(pair, args.n)
    _emit(report, "json")
    return EXIT_OK if report["pass"] else EXIT_FAIL


def cmd_grammar(args) -> int:
    from .grammar import dumont_check, tree_polynomial
    from .poly import specialize
    if args.action == "dumont":
        report = dumont_check(args.max_degree)
        _emit(report)
        return EXIT_OK if report["pass"] else EXIT_FAIL
    p = tree_polynomial(args.family, args.n)
    if args.ones:
        value = int(specialize(p, {s: 1 for s in p.symbols()}).constant_term())
        _emit({"family": args.family, "n": args.n, "value": value} if args.format == "json" else str(value),
              args.format)
    else:
        _emit({"family": args.family, "n": args.n, "polynomial": format_poly(p)} if args.format == "json"
              else format_poly(p), args.format)
    return EXIT_OK


# ----------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    from .theorems import THEOREM_IDS
    from .trees import TRAVERSALS

    ap = argparse.ArgumentParser(prog="tfrac-lab", description="Continued fractions, increasing trees and "
                                                                "their cross-checks.")
    ap.add_argument("--jobs", type=int, default=1, help="worker cap for parallel sweeps")
    ap.add_argument("--offline", action="store_true", help="never touch the network")
    ap.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    sub = ap.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        return p

    p = add("expand", cmd_expand, "expand a continued fraction as a power series")
    p.add_argument("--tfraction", help="'quasiaffine:x,y,u,v,a,b,c,d' or JSON {\"alpha\": ..., \"delta\": ...}")
    p.add_argument("--jfraction", help="JSON {\"gamma\": ..., \"beta\": ...}")
    p.add_argument("--sfraction", help="JSON {\"alpha\": ...}")
    p.add_argument("--order", type=int, default=8)

    p = add("enumerate", cmd_enumerate, "list or count trees")
    p.add_argument("--family", choices=("bt", "rt", "irt"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--limit", type=int)

    def tree_flags(p, families=("bt", "rt", "irt")):
        p.add_argument("--family", choices=families, required=True)
        p.add_argument("--tree", help="tree text, e.g. '1(L:2,R:3)'")
        p.add_argument("--worked", action="store_true", help="use the built-in worked example")
        p.add_argument("--traversal", choices=TRAVERSALS, default="preorder")

    p = add("stats", cmd_stats, "per-vertex statistics of a tree")
    tree_flags(p)

    p = add("poly", cmd_poly, "generating polynomial of a family")
    p.add_argument("--kind", choices=POLY_KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--traversal", choices=TRAVERSALS, default="preorder")
    p.add_argument("--specialize", help="JSON map from symbol names to values")

    p = add("bijection", cmd_bijection, "tree to labeled path (or permutation) and back")
    tree_flags(p)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--path", help="step word (U, D, L) or, for bt, a JSON permutation")
    p.add_argument("--labels", help="JSON label list")
    p.add_argument("--render", action="store_true", help="include an ASCII picture of the path")

    p = add("verify", cmd_verify, "run theorem checks")
    p.add_argument("--all", action="store_true")
    p.add_argument("--id", metavar="THEOREM", help="one of: " + ", ".join(THEOREM_IDS))
    p.add_argument("--list", action="store_true")
    p.add_argument("--order", type=int)
    p.add_argument("--traversal", choices=TRAVERSALS, default="preorder")
    p.add_argument("--primes", action="store_true", help="specialize every symbol to a distinct prime")
    p.add_argument("--specialize", help="JSON map from symbol names to values")

    p = add("conjecture", cmd_conjecture, "check the trivariate symmetry conjecture")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--nmin", type=int, default=1)

    p = add("oeis", cmd_oeis, "quasi-affine sweep and sequence lookup")
    p.add_argument("action", choices=("table", "first-sweep", "sweep", "lookup"))
    p.add_argument("--which", choices=("first", "second"), default="second")
    p.add_argument("--terms", help="comma-separated terms for lookup")
    p.add_argument("--drop-first", type=int, default=1)

    p = add("riordan", cmd_riordan, "exponential Riordan arrays and production matrices")
    p.add_argument("action", choices=("lah", "production", "check"))
    p.add_argument("--family", choices=("bt", "rt"), default="rt")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--F", help="JSON list: exponential coefficients of F")
    p.add_argument("--G", help="JSON list: exponential coefficients of G")
    p.add_argument("--specialize", help="JSON map for x1, x2, y1, y2, w")

    p = add("grammar", cmd_grammar, "derivative operators")
    p.add_argument("action", choices=("iterate", "dumont"))
    p.add_argument("--family", choices=("bt", "rt"), default="rt")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--ones", action="store_true", help="print the all-ones evaluation")
    p.add_argument("--max-degree", type=int, default=6)
    return ap


_GLOBAL_FLAGS = {"--offline": 0, "--jobs": 1, "--format": 1}


def _hoist_globals(argv: List[str]) -> List[str]:
    """Allow the global flags on either side of the subcommand."""
    front, rest, i = [], [], 0
    while i < len(argv):
        a = argv[i]
        key = a.split("=", 1)[0]
        if key in _GLOBAL_FLAGS:
            n = 0 if "=" in a else _GLOBAL_FLAGS[key]
            front.extend(argv[i:i + 1 + n])
            i += 1 + n
        else:
            rest.append(a)
            i += 1
    return front + rest


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_hoist_globals(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.jobs < 1:
        parser.print_usage(sys.stderr)
        print("tfrac-lab: error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print("tfrac-lab: error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (TfracError, ValueError, KeyError) as exc:
        print("tfrac-lab: error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
