"""Command-line front end.

Exit status: 0 success, 1 internal error, 2 usage or lookup error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import abelian
from .catalog import Catalog, CatalogError, builtin, load
from .formula import (CyclicGroup, WreathSpec, d_abelian_wr_regular,
                      d_direct_abelian_almost_simple, d_iterated, DIRECT_METHOD)
from .permgrp.search import ORDER_CAP

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str = ""):
    enc = getattr(sys.stdout, "encoding", None) or "utf-8"
    try:
        text.encode(enc)
    except UnicodeEncodeError:
        text = text.replace(" ≀ ", " wr ")
    print(text)


def _print_json(obj):
    _emit(json.dumps(obj, sort_keys=True))


def _catalog(args) -> Catalog:
    return load(args.catalog) if args.catalog else builtin()


def _abelian_arg(text: str) -> abelian.AbelianGroup:
    try:
        return abelian.parse(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse abelian group {text!r}: {exc}") from None


def _acting(cat: Catalog, name: str):
    """A catalog entry, or ``C<n>`` for a cyclic acting group."""
    if name not in cat:
        m = re.fullmatch(r"C(\d+)", name)
        if m and int(m.group(1)) >= 2:
            return CyclicGroup(int(m.group(1)))
    return cat.lookup(name)


# ---------------------------------------------------------------------------
# commands

def cmd_wreath(args) -> int:
    spec = WreathSpec.from_names(args.names, _catalog(args))
    br = d_iterated(spec)
    if args.json:
        _print_json(br.to_json())
        return EXIT_OK
    _emit(f"W = {spec.expression()}")
    if args.breakdown:
        _emit(br.render())
        _emit(f"A = {br.A}; attained by: {', '.join(br.attained_by)}")
    else:
        _emit(f"d = {br.d}")
    return EXIT_OK


def _oracle_value(build, order_cap: int) -> int:
    from .permgrp.search import d_exact

    G = build()
    if G.order > order_cap:
        raise UsageError(f"group order {G.order} exceeds --order-cap {order_cap}")
    return d_exact(G, order_cap=order_cap)


def _perm_model(G):
    from .permgrp import constructions as C
    from .permgrp import models

    if isinstance(G, CyclicGroup):
        return C.cyclic(G.n)
    name = G.name
    if re.fullmatch(r"A\d+", name):
        return C.alternating(int(name[1:]))
    if re.fullmatch(r"S\d+", name):
        return C.symmetric(int(name[1:]))
    if models.has_model(name):
        return models.model(name)
    raise UsageError(f"no permutation model shipped for {name}")


def cmd_awr(args) -> int:
    A = _abelian_arg(args.A)
    G = _acting(_catalog(args), args.G)
    br = d_abelian_wr_regular(A, G)
    out = br.to_json()
    if args.oracle:
        from .permgrp import constructions as C

        def build():
            top = _perm_model(G)
            if not isinstance(G, CyclicGroup):
                top = C.regular_rep(top)
            return C.wreath_imprimitive(C.abelian_rep(A), top)

        out["oracle"] = _oracle_value(build, args.order_cap)
    if args.json:
        _print_json(out)
    elif args.breakdown:
        _emit(f"W = {A} ≀ {G.name}")
        _emit(br.render())
    else:
        _emit(str(br.d))
    if args.oracle and not args.json:
        _emit(f"oracle: {out['oracle']}")
    return EXIT_OK


def cmd_dxg(args) -> int:
    A = _abelian_arg(args.A)
    G = _acting(_catalog(args), args.G)
    value = d_direct_abelian_almost_simple(A, G)
    out = {"d": value, "method": DIRECT_METHOD}
    if args.oracle:
        from .permgrp import constructions as C

        out["oracle"] = _oracle_value(
            lambda: C.direct_product(C.abelian_rep(A), _perm_model(G)), args.order_cap)
    if args.json:
        _print_json(out)
    else:
        _emit(str(value))
        if args.oracle:
            _emit(f"oracle: {out['oracle']}")
    return EXIT_OK


def cmd_dp(args) -> int:
    A = _abelian_arg(args.A)
    try:
        p = int(args.p)
    except ValueError:
        raise UsageError(f"{args.p!r} is not an integer") from None
    if not abelian.is_prime(p):
        raise UsageError(f"{p} is not prime")
    value = abelian.d_p(A, p)
    if args.json:
        _print_json({"d_p": value, "p": p, "A": list(A.invariants)})
    else:
        _emit(str(value))
    return EXIT_OK


def cmd_catalog(args) -> int:
    cat = _catalog(args)
    if args.action == "list":
        if args.json:
            _print_json(cat.to_json())
        else:
            for e in cat:
                _emit(f"{e.name:<12} socle {e.socle_name:<10} ab={e.abelianization}  d={e.rank}")
        return EXIT_OK
    if not args.name:
        raise UsageError("catalog show needs a group name")
    e = cat.lookup(args.name)
    if args.json:
        _print_json(e.to_json())
        return EXIT_OK
    _emit(f"{e.name}: socle {e.socle_name}, |S|={e.socle_order}, ab={e.abelianization}, d={e.rank}")
    _emit(f"  |S| = {e.order_formula}")
    _emit(f"  simple: {'yes' if e.simple else 'no'}; provenance: {e.provenance}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from . import verify

    if args.suite not in verify.SUITES + ("all",):
        raise UsageError(f"unknown suite {args.suite!r}; choose from "
                         + ", ".join(verify.SUITES + ("all",)))

    def on_case(i, c):
        if args.json:
            return
        line = f"{c.verdict:<8} {c.description}: expected {c.expected}, got {c.got}"
        if args.timings:
            line += f" ({c.elapsed:.2f}s)"
        _emit(line)
        sys.stdout.flush()

    results = verify.run_suite(args.suite, seed=args.seed, workers=args.workers, on_case=on_case,
                               trials=args.trials, order_cap=args.order_cap)
    ok = True
    for r in results:
        if args.json:
            for line in r.json_lines(args.timings):
                _emit(line)
        else:
            s = r.summary(args.timings)
            tail = f" in {s['elapsed']}s" if args.timings else ""
            _emit(f"[{r.suite}] {s['pass']} pass, {s['fail']} fail, {s['evidence']} evidence{tail}")
        ok = ok and r.ok
    return EXIT_OK if ok else EXIT_INTERNAL


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--catalog", metavar="PATH", help="extra catalog JSON file")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=None)
    common.add_argument("--order-cap", type=int, default=ORDER_CAP)
    common.add_argument("--breakdown", action="store_true", help="show every term of the max")

    p = argparse.ArgumentParser(prog="wreathrank",
                                description="Generator ranks of iterated regular wreath products.")
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("wreath", parents=[common],
                       help="d(G_k wr ... wr G_1); names are given top-first (G_1 first)")
    w.add_argument("names", nargs="+")
    w.set_defaults(func=cmd_wreath)

    a = sub.add_parser("awr", parents=[common], help="d(A wr G) for the regular action of G")
    a.add_argument("A", help="invariant list, e.g. 2,12")
    a.add_argument("G", help="catalog name, or C<n> for a cyclic group")
    a.add_argument("--oracle", action="store_true", help="also run the exhaustive oracle")
    a.set_defaults(func=cmd_awr)

    x = sub.add_parser("dxg", parents=[common], help="d(A x G)")
    x.add_argument("A")
    x.add_argument("G")
    x.add_argument("--oracle", action="store_true", help="also run the exhaustive oracle")
    x.set_defaults(func=cmd_dxg)

    dp = sub.add_parser("dp", parents=[common], help="d_p(A)")
    dp.add_argument("A")
    dp.add_argument("p")
    dp.set_defaults(func=cmd_dp)

    c = sub.add_parser("catalog", parents=[common], help="browse the group table")
    c.add_argument("action", choices=["list", "show"])
    c.add_argument("name", nargs="?")
    c.set_defaults(func=cmd_catalog)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", help="abelian, direct, wreath-small, wreath-large, catalog or all")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--timings", action="store_true", help="include elapsed times")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - stable exit code for anything unexpected
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
