"""Command line interface.

Exit codes: 0 success, 1 a verification failed, 2 bad input.
"""

import argparse
import json
import random
import sys
import warnings

from .config import ConfigError, load_presentation
from .freealg import (BasisFamily, PresentationError, ClosureError, build_generating_set, check_equivalence,
                      enumerate_basis, irr_cells, quotient_dim_oracle, Presentation)
from .gs import irreducibles, verify_gs
from .opi import OpiError, make_opi
from .orders import DomainError, MonomialOrder
from .rewrite import BudgetExceeded, UnstableLeading
from .text import ParseError, parse_poly, parse_word
from .words import Alphabet

INPUT_ERRORS = (ParseError, ConfigError, OpiError, PresentationError, DomainError, UnstableLeading,
                ClosureError, ValueError)


class UsageError(Exception):
    pass


def _bound(s):
    try:
        x, p = (int(t) for t in s.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("bound must look like 3,2") from None
    if x < 0 or p < 0:
        raise argparse.ArgumentTypeError("bound entries must be nonnegative")
    return x, p


def _params(items):
    out = {}
    for it in items or ():
        for part in it.split(","):
            if not part.strip():
                continue
            if "=" not in part:
                raise UsageError("parameter %r should look like name=value" % part)
            k, v = part.split("=", 1)
            out[k.strip()] = v.strip()
    return out


def _opi_spec(s):
    # TAG or TAG:k=v,k=v
    tag, _, rest = s.partition(":")
    return make_opi(tag, _params([rest]) if rest else {})


def _out(args, obj, text):
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def cmd_order_cmp(args):
    order = MonomialOrder(args.kind, Alphabet.coerce(args.alphabet))
    u = parse_word(args.u, order.alphabet)
    v = parse_word(args.v, order.alphabet)
    r = order.cmp(u, v).name
    _out(args, {"kind": order.kind.value, "u": str(u), "v": str(v), "result": r}, r)
    return 0


def cmd_nf(args):
    alphabet = Alphabet.coerce(args.alphabet)
    opi = make_opi(args.opi, _params(args.param))
    rels = [parse_poly(r, alphabet) for r in args.relation or ()]
    p = Presentation(alphabet, tuple(rels), opi, opi.unital, args.order)
    gs, _ = build_generating_set(p)
    f = parse_poly(args.poly, alphabet)
    trace = [] if args.trace else None
    nf = gs.system.normal_form(f, trace=trace)
    o = gs.order
    if args.json:
        obj = {"input": f.format(o), "normal_form": nf.format(o), "order": o.kind.value}
        if trace is not None:
            obj["trace"] = [[str(m), r.format(o)] for m, r in trace]
        print(json.dumps(obj, sort_keys=True))
    else:
        for m, r in trace or ():
            print("%s ⇒ %s" % (m, r.format(o)))
        print(nf.format(o))
    return 0


def _load(args):
    return load_presentation(args.config)


def cmd_gs_verify(args):
    p = _load(args)
    gs, verdict = build_generating_set(p, drop_extra=args.drop_extra)
    rep = verify_gs(gs, args.bound)
    if args.json:
        for r in rep.results:
            print(json.dumps(r.record(), sort_keys=True))
        print(json.dumps({"summary": {"ok": rep.ok, "compositions": len(rep.results),
                                      "nontrivial": len(rep.failures), "skipped": rep.skipped,
                                      "unstable": len(rep.unstable), "family": verdict}}, sort_keys=True))
    else:
        print("OPI %s, order %s, %d relations, %d extra" % (p.opi, gs.order.kind.value, len(gs.relations),
                                                       len(gs.extra)))
        if verdict != "gs":
            print("family verdict: %s" % {"isomorphic": "the free object is isomorphic to A",
                                          "vanishes": "the free object vanishes"}[verdict])
        print(rep.summary())
    return 0 if rep.ok else 1


def _table(bound, cols):
    names = list(cols)
    lines = ["deg_X deg_P  " + "  ".join("%8s" % n for n in names)]
    for i in range(bound[0] + 1):
        for j in range(bound[1] + 1):
            lines.append("%5d %5d  " % (i, j) + "  ".join("%8d" % cols[n][(i, j)] for n in names))
    return "\n".join(lines)


def _cells_json(cells):
    return {"%d,%d" % k: v for k, v in sorted(cells.items())}


def cmd_basis(args):
    p = _load(args)
    family = BasisFamily.named(args.shape, p)
    words = enumerate_basis(family, p, args.bound)
    cols = {"shape": irr_cells(words, args.bound)}
    ok = True
    if args.compare_oracle:
        gs, _ = build_generating_set(p)
        cols["irr"] = irr_cells(irreducibles(gs, args.bound), args.bound)
        cols["oracle"] = quotient_dim_oracle(p, args.bound)
        ok = cols["shape"] == cols["irr"] == cols["oracle"]
    if args.json:
        obj = {"shape": family.shape, "cells": {k: _cells_json(v) for k, v in cols.items()}}
        if args.compare_oracle:
            obj["agree"] = ok
        if args.list:
            obj["words"] = [str(w) for w in words]
        print(json.dumps(obj, sort_keys=True))
    else:
        print("basis shape %s%s" % (family.shape, " (with [1] as a letter)" if family.dagger else ""))
        print(_table(args.bound, cols))
        if args.compare_oracle:
            print("agreement: %s" % ("all cells agree" if ok else "MISMATCH"))
        if args.list:
            for w in words:
                print(w)
    return 0 if ok else 1


def cmd_dim(args):
    p = _load(args)
    cells = quotient_dim_oracle(p, args.bound, drop_extra=args.drop_extra)
    _out(args, {"cells": _cells_json(cells)}, _table(args.bound, {"dim": cells}))
    return 0


def cmd_equiv(args):
    left = _opi_spec(args.left)
    right = _opi_spec(args.right)
    v = check_equivalence(left, right, Alphabet.coerce(args.alphabet), args.bound)
    _out(args, {"left": str(left), "right": str(right), "verdict": v}, v)
    return 0 if v == "Equal" else 1


def cmd_order_laws(args):
    from .laws import check_order_laws
    if args.seed is None:
        raise UsageError("--seed is required for randomized checks")
    rng = random.Random(args.seed)
    order = MonomialOrder(args.kind, Alphabet.coerce(args.alphabet))
    res = check_order_laws(order, rng, args.samples, unital=args.unital)
    _out(args, {"kind": order.kind.value, "samples": args.samples, "seed": args.seed,
                "ok": res.ok, "counterexample": res.counterexample},
         "%s: %s" % (order.kind.value, "all laws hold on %d samples" % args.samples if res.ok
                     else "violated: %s" % res.counterexample))
    return 0 if res.ok else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="opgs", description="Rewriting and Groebner-Shirshov bases for "
                                 "operated polynomial identities.")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="command", required=True)

    def order_cmp_args(sp):
        sp.add_argument("--kind", required=True, help="dlex, Dlex, dl, dl2, db or udl")
        sp.add_argument("--alphabet", required=True, help="comma separated letters, smallest first")
        sp.add_argument("u")
        sp.add_argument("v")
        sp.set_defaults(func=cmd_order_cmp)

    order_cmp_args(sub.add_parser("order-cmp", help="compare two words under a monomial order"))
    order = sub.add_parser("order", help="order utilities")
    osub = order.add_subparsers(dest="order_command", required=True)
    order_cmp_args(osub.add_parser("cmp", help="compare two words"))
    laws = osub.add_parser("laws", help="randomized check of the order laws")
    laws.add_argument("--kind", required=True)
    laws.add_argument("--alphabet", default="a,b")
    laws.add_argument("--samples", type=int, default=1000)
    laws.add_argument("--seed", type=int)
    laws.add_argument("--unital", action="store_true")
    laws.set_defaults(func=cmd_order_laws)

    nf = sub.add_parser("nf", help="normal form of a polynomial")
    nf.add_argument("--opi", required=True)
    nf.add_argument("--param", action="append", help="name=value, may repeat")
    nf.add_argument("--order")
    nf.add_argument("--alphabet", required=True)
    nf.add_argument("--relation", action="append", help="a relation of the base algebra, may repeat")
    nf.add_argument("--trace", action="store_true", help="print every rewriting step")
    nf.add_argument("poly")
    nf.set_defaults(func=cmd_nf)

    g = sub.add_parser("gs-verify", help="bounded Groebner-Shirshov check")
    g.add_argument("--config", required=True)
    g.add_argument("--bound", type=_bound, required=True)
    g.add_argument("--drop-extra", action="store_true", help="leave out the extra generators")
    g.set_defaults(func=cmd_gs_verify)

    b = sub.add_parser("basis", help="enumerate a predicted basis")
    b.add_argument("--config", required=True)
    b.add_argument("--bound", type=_bound, required=True)
    b.add_argument("--shape", default="auto")
    b.add_argument("--compare-oracle", action="store_true")
    b.add_argument("--list", action="store_true")
    b.set_defaults(func=cmd_basis)

    d = sub.add_parser("dim", help="quotient dimensions by exact rank")
    d.add_argument("--config", required=True)
    d.add_argument("--bound", type=_bound, required=True)
    d.add_argument("--drop-extra", action="store_true")
    d.set_defaults(func=cmd_dim)

    e = sub.add_parser("equiv", help="compare two OPIs by their bounded ideal spans")
    e.add_argument("--left", required=True, help="TAG or TAG:name=value,...")
    e.add_argument("--right", required=True)
    e.add_argument("--alphabet", default="z")
    e.add_argument("--bound", type=_bound, default=(3, 2))
    e.set_defaults(func=cmd_equiv)
    return ap


def main(argv=None):
    ap = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # --json is accepted anywhere on the line
    want_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    args.json = args.json or want_json
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            code = args.func(args)
        for w in caught:
            print("warning: %s" % w.message, file=sys.stderr)
        return code
    except UsageError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except BudgetExceeded as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except INPUT_ERRORS as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
