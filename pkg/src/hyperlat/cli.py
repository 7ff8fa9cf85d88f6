"""Command-line entry point: hyperlat <command> [options]."""
import argparse
import json
import sys

from .lattice_core import GramLattice, LatticeError
from .verify import _plain


class UsageError(Exception):
    pass


def _emit(args, data, text):
    if args.json:
        print(json.dumps(_plain(data), sort_keys=True))
    else:
        print(text)


def _params(pairs):
    out = {}
    for item in pairs or ():
        key, sep, val = item.partition("=")
        if not sep:
            raise UsageError("parameter %r is not of the form key=value" % item)
        try:
            out[key] = int(val)
        except ValueError:
            raise UsageError("parameter %s must be an integer" % key) from None
    return out


def _load_lattice(args, which="lattice", file_attr="file"):
    from .catalog import CatalogError, make_named
    name = getattr(args, which, None)
    path = getattr(args, file_attr, None)
    if bool(name) == bool(path):
        raise UsageError("give exactly one of --%s and --%s" % (which, file_attr.replace("_", "-")))
    if path:
        with open(path) as fh:
            data = json.load(fh)
        if isinstance(data, list):
            data = {"gram": data}
        return GramLattice.from_json(data)
    try:
        return make_named(name, **_params(getattr(args, "param", None)))
    except CatalogError as exc:
        raise UsageError(str(exc)) from None


def _summary(L):
    from .disc_form import discriminant_module
    from . import linalg as la
    pos, neg, _ = la.inertia(L.gram)
    A = discriminant_module(L) if L.rank and abs(L.det) != 1 else None
    return {"name": L.name, "rank": L.rank, "det": L.det, "even": L.is_even,
            "signature": [pos, neg], "disc": A.invariant_factors() if A else []}


def _summary_text(s):
    disc = " x ".join("Z/%d" % d for d in s["disc"]) or "trivial"
    return "%s: rank %d, det %d, signature (%d, %d), %s, A = %s" % (
        s["name"] or "lattice", s["rank"], s["det"], s["signature"][0], s["signature"][1],
        "even" if s["even"] else "odd", disc)


# -- commands --------------------------------------------------------------------

def cmd_catalog(args):
    from .catalog import CATALOG, names, resolve
    if args.action == "list":
        rows = [{"name": n, "recipe": CATALOG[n].recipe, "params": list(CATALOG[n].params),
                 "description": CATALOG[n].description} for n in names()]
        _emit(args, rows, "\n".join("%-14s %-12s %s" % (r["name"], r["recipe"], r["description"])
                                    for r in rows))
        return 0
    if not args.name:
        raise UsageError("catalog dump needs a NAME")
    from .catalog import CatalogError
    try:
        r = resolve(args.name, **_params(args.param))
    except CatalogError as exc:
        raise UsageError(str(exc)) from None
    data = r.to_json()
    text = [_summary_text(_summary(r.lattice)), "status: %s" % r.status]
    if r.note:
        text.append("note: %s" % r.note)
    text += [" ".join("%4d" % x for x in row) for row in r.lattice.gram]
    _emit(args, data, "\n".join(text))
    return 0


def cmd_niemeier(args):
    from .enumerate import count_roots
    from .niemeier import NIEMEIER_TABLE, build_niemeier, expected_root_count
    if args.name not in NIEMEIER_TABLE:
        raise UsageError("unknown Niemeier lattice %r (N1 .. N24)" % args.name)
    E = build_niemeier(args.name)
    L = E.lattice
    data = {"name": args.name, "root_system": NIEMEIER_TABLE[args.name][0],
            "rank": L.rank, "det": L.det, "even": L.is_even}
    status = 0
    if args.verify:
        roots = count_roots(L)
        data["roots"] = roots
        data["expected_roots"] = expected_root_count(args.name)
        data["ok"] = L.rank == 24 and abs(L.det) == 1 and L.is_even and roots == data["expected_roots"]
        status = 0 if data["ok"] else 1
    text = "%s (%s): rank %d, det %d, %s" % (args.name, data["root_system"], L.rank, L.det,
                                            "even" if L.is_even else "odd")
    if args.verify:
        text += "\nroots %d (expected %d): %s" % (data["roots"], data["expected_roots"],
                                                  "ok" if data["ok"] else "FAIL")
    if args.gram:
        data["gram"] = L.matrix()
        text += "\n" + "\n".join(" ".join("%3d" % x for x in r) for r in L.gram)
    _emit(args, data, text)
    return status


def cmd_leech(args):
    from .niemeier import leech, verify_leech
    try:
        E = leech(args.route)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from None
    try:
        ok, reason = verify_leech(E), ""
    except LatticeError as exc:
        ok, reason = False, str(exc)
    data = {"route": args.route, "rank": E.lattice.rank, "det": E.lattice.det, "leech": ok}
    if reason:
        data["reason"] = reason
    _emit(args, data, "Leech via %s: %s%s" % (args.route, "ok" if ok else "FAIL",
                                              (" (%s)" % reason) if reason else ""))
    return 0 if ok else 1


def _witness(args):
    from .catalog import WITNESSES, Witness
    if args.witness:
        if args.witness not in WITNESSES:
            raise UsageError("unknown witness %r; choose from %s" % (args.witness, sorted(WITNESSES)))
        return WITNESSES[args.witness]
    if not args.target:
        raise UsageError("give --witness or --target")
    diagram = tuple((int(c), tag) for c, _, tag in (d.partition(":") for d in args.diagram or ()))
    return Witness(args.target, perm=tuple(args.perm) if args.perm else None,
                   glue=tuple(args.glue) if args.glue else None,
                   diagram=diagram, side=args.side)


def cmd_isometry(args):
    if args.compare:
        from .enumerate import isometry_verdict
        from .catalog import make_named
        A, B = (make_named(n) for n in args.compare)
        status, M = isometry_verdict(A, B, budget=args.budget)
        data = {"first": args.compare[0], "second": args.compare[1], "verdict": status,
                "matrix": M}
        _emit(args, data, status)
        return 0
    from .catalog import witness_isometry
    from .isometry import IsometryError, order, structure_checks
    w = _witness(args)
    try:
        g, E = witness_isometry(w)
    except IsometryError as exc:
        raise UsageError(str(exc)) from None
    rep = structure_checks(g.lattice, [g])
    data = {"witness": w.to_json(), "order": order(g), "structure": rep.to_json()}
    _emit(args, data, "order %d, R/(T+S) invariant factors %s, free action on S: %s"
          % (data["order"], rep.invariant_factors, rep.free_action))
    return 0


def cmd_coinvariant(args):
    from .catalog import reduced, witness_isometry
    from .classification import _host_name, leech_couple
    from .isometry import IsometryError
    w = _witness(args)
    try:
        g, _ = witness_isometry(w)
    except IsometryError as exc:
        raise UsageError(str(exc)) from None
    couple, fx = leech_couple(g, _host_name(w))
    S = reduced(couple.S) if couple.S.rank else couple.S
    data = {"invariant_rank": fx.T.rank, "coinvariant": _summary(S),
            "leech_couple": couple.to_json()}
    if args.gram:
        data["gram"] = S.matrix()
    text = ["invariant rank %d" % fx.T.rank, "S: " + _summary_text(data["coinvariant"]),
            "Leech couple: %s (definite %s, rootless %s, trivial action %s)"
            % (couple.is_leech_couple, couple.definite, couple.rootless, couple.trivial_action)]
    if args.gram:
        text += [" ".join("%4d" % x for x in r) for r in S.gram]
    _emit(args, data, "\n".join(text))
    return 0


def cmd_enumerate(args):
    from .enumerate import represents, short_vectors
    L = _load_lattice(args)
    if args.action == "shorts":
        if args.bound is None:
            raise UsageError("enumerate shorts needs --bound")
        census = short_vectors(L, args.bound)
        data = {"bound": args.bound, "counts": census.counts}
        _emit(args, data, "\n".join("%d: %d" % kv for kv in census.counts.items()) or "none")
        return 0
    if args.n is None:
        raise UsageError("enumerate represents needs --n")
    v = represents(L, args.n, primitive=args.primitive, div=args.div)
    _emit(args, {"n": args.n, "vector": v}, "none" if v is None else " ".join(map(str, v)))
    return 0


def cmd_embed(args):
    from .classification import ClassificationError, hilbert_embeddability
    from .catalog import CatalogError
    lo, hi = args.n_min, args.n_max
    if lo < 2 or hi < lo:
        raise UsageError("need 2 <= --n-min <= --n-max")
    try:
        res = hilbert_embeddability(args.name, range(lo, hi + 1))
    except (ClassificationError, CatalogError) as exc:
        raise UsageError(str(exc)) from None
    _emit(args, [r.to_json() for r in res],
          "\n".join("n=%d: %s (%s)" % (r.n, r.verdict, r.reason) for r in res))
    return 0


def cmd_fixed_locus(args):
    from . import fixed_locus as fl
    try:
        if args.action == "bns":
            if None in (args.p, args.a, args.m):
                raise UsageError("fixed-locus bns needs --p, --a and --m")
            v = fl.bns_dimension(fl.AutInvariants(args.p, args.a, args.m))
            _emit(args, {"p": args.p, "a": args.a, "m": args.m, "bns": v}, str(v))
        elif args.action == "census":
            if args.p not in (3, 5):
                raise UsageError("fixed-locus census supports --p 3 and --p 5")
            profs = fl.census_order3() if args.p == 3 else fl.census_order5()
            _emit(args, [pr.to_json() for pr in profs],
                  "\n".join("a=%d: %d points, K3 surfaces %s" % (pr.a, pr.total_points, list(pr.k3))
                            for pr in profs))
        elif args.action == "k3":
            if args.p is None:
                raise UsageError("fixed-locus k3 needs --p")
            c = fl.k3_census(args.shape, args.p, args.q)
            text = "counts %s" % c.counts
            if c.contradiction:
                text += "\ncontradiction: %s" % c.contradiction
            _emit(args, c.to_json(), text)
        else:
            pol = fl.vsp_polarization()
            _emit(args, pol, "l^2 = %s" % pol["square"])
    except fl.FixedLocusError as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_classify(args):
    from .classification import ClassificationError, order_bounds, prime_coinvariant_table
    if args.bounds:
        try:
            b = order_bounds(args.bounds, prime=args.prime)
        except (ClassificationError, KeyError) as exc:
            raise UsageError(str(exc)) from None
        _emit(args, b.to_json(), "%s: %s <= %d" % (b.context, b.kind, b.bound))
        return 0
    if args.p is None:
        raise UsageError("classify needs --p or --bounds")
    try:
        rows = prime_coinvariant_table(args.p, budget=args.budget)
    except ClassificationError as exc:
        raise UsageError(str(exc)) from None
    text = ["%-24s %-7s rank %2d det %6d class %d %-8s %-15s %s" % (
        r.label, r.host, r.S.rank, abs(r.S.det), r.klass, r.name or "-", r.match or "-",
        r.fixed_locus or "") for r in rows]
    _emit(args, [r.to_json() for r in rows], "\n".join(text))
    return 0


def cmd_verify(args):
    from .verify import GROUPS, run
    groups = (args.group or []) + (args.section or [])
    for g in groups:
        if g not in GROUPS:
            raise UsageError("unknown group %r; choose from %s" % (g, ", ".join(sorted(GROUPS))))
    rep = run(groups or None)
    if args.json:
        print(json.dumps(rep.to_json(), sort_keys=True, indent=1))
    else:
        print(rep.to_text())
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rep.to_json(), fh, sort_keys=True, indent=1)
    return 1 if rep.failed else 0


# -- parser -------------------------------------------------------------------------

def _budget():
    from .enumerate import default_budget
    return default_budget()


def _witness_options(p):
    p.add_argument("--witness", help="named witness from the catalog")
    p.add_argument("--target", help="N<k> or holy:N<k>")
    p.add_argument("--perm", type=int, nargs="+", help="component permutation")
    p.add_argument("--glue", type=int, nargs="+", help="glue translation (holy targets)")
    p.add_argument("--diagram", nargs="+", help="component:sigma or component:gamma")
    p.add_argument("--side", choices=("N", "Leech"), default="N")


def build_parser():
    # subcommands must not reset a --json given before the command name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    ap = argparse.ArgumentParser(prog="hyperlat",
                                 description="Exact lattice computations around Niemeier and Leech lattices.")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="named lattices")
    p.add_argument("action", choices=("list", "dump"))
    p.add_argument("name", nargs="?")
    p.add_argument("--param", nargs="+", help="key=value for parametrised entries")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("niemeier", parents=[common], help="build a Niemeier lattice")
    p.add_argument("action", choices=("build",))
    p.add_argument("name")
    p.add_argument("--verify", action="store_true", help="check unimodularity and root count")
    p.add_argument("--gram", action="store_true", help="print the Gram matrix")
    p.set_defaults(func=cmd_niemeier)

    p = sub.add_parser("leech", parents=[common], help="build and check the Leech lattice")
    p.add_argument("--route", default="mod23", help="mod23, weyl or holy:N<k>")
    p.set_defaults(func=cmd_leech)

    p = sub.add_parser("isometry", parents=[common], help="witness isometries and isometry tests")
    _witness_options(p)
    p.add_argument("--compare", nargs=2, metavar=("A", "B"), help="test two named lattices")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_isometry)

    p = sub.add_parser("coinvariant", parents=[common], help="co-invariant lattice of a witness")
    _witness_options(p)
    p.add_argument("--gram", action="store_true")
    p.set_defaults(func=cmd_coinvariant)

    p = sub.add_parser("enumerate", parents=[common], help="short vectors and representations")
    p.add_argument("action", choices=("shorts", "represents"))
    p.add_argument("--lattice", help="catalog name or summand formula")
    p.add_argument("--file", help="JSON file with a gram matrix")
    p.add_argument("--param", nargs="+")
    p.add_argument("--bound", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--primitive", action="store_true")
    p.add_argument("--div", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("embed", parents=[common], help="primitive embeddings into L_n")
    p.add_argument("name")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=9)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("fixed-locus", parents=[common], help="fixed-locus arithmetic")
    p.add_argument("action", choices=("bns", "census", "k3", "polarization"))
    p.add_argument("--p", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--shape", choices=("cyclic", "p2", "pq"), default="cyclic")
    p.set_defaults(func=cmd_fixed_locus)

    p = sub.add_parser("classify", parents=[common], help="co-invariant tables and order bounds")
    p.add_argument("--p", type=int)
    p.add_argument("--bounds", help="context for an order bound, e.g. K3n")
    p.add_argument("--prime", action="store_true", help="bound prime orders only")
    p.add_argument("--budget", type=int, default=300)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-thesis", parents=[common], help="run the batch of checks")
    p.add_argument("--group", action="append", help="restrict to a topic group (repeatable)")
    p.add_argument("--section", action="append", help="alias of --group")
    p.add_argument("--out", help="also write the JSON report here")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        args.budget = _budget()
    try:
        return args.func(args)
    except UsageError as exc:
        print("hyperlat: error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
