"""Command line interface.

Exit codes: 0 ok, 1 parse/input error, 2 no (regular) admissible order,
3 a verification check failed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import cells, homology, resolution
from .checks import plain, run_checks
from .errors import HTResError, NotDegreeIncreasing, NotLinear, ParseError, TooLarge
from .families import MAX_GENS, gen_graphic, gen_stable, gen_uniform, parse_edges
from .monomials import MonomialIdeal, infer_nvars, parse_ideal, parse_monomial
from .quotients import find_admissible_order, is_admissible, is_regular

EXIT_OK, EXIT_PARSE, EXIT_NO_ORDER, EXIT_FAIL = 0, 1, 2, 3


class NoOrder(Exception):
    pass


def load_ideal(source, n=None) -> MonomialIdeal:
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
        if source.endswith(".json"):
            try:
                return MonomialIdeal.from_json(json.loads(text))
            except (KeyError, ValueError, TypeError) as exc:
                raise ParseError(f"bad ideal JSON: {exc}") from None
    else:
        text = source
    return parse_ideal(text, n if n is not None else infer_nvars(text))


def fmt_vars(vs):
    return "{" + ", ".join(f"x{i}" for i in sorted(vs)) + "}"


def get_order(ideal, args, regular):
    if args.order:
        try:
            idx = [int(t) for t in args.order.split(",") if t.strip()]
            order = [ideal.gens[i - 1] for i in idx]
        except (ValueError, IndexError):
            raise ParseError(f"bad --order {args.order!r}; use 1-based generator indices") from None
        try:
            a = is_admissible(ideal, order)
        except (NotLinear, NotDegreeIncreasing) as exc:
            raise NoOrder(f"order rejected: {exc}") from None
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        if regular:
            ok, w = is_regular(a)
            if not ok:
                raise NoOrder(f"order is not regular, witness (j, y, z) = {w}")
        return a
    a = find_admissible_order(ideal, require_regular=regular, seed=args.seed)
    if a is None:
        raise NoOrder("no regular admissible order" if regular else "no admissible order")
    return a


def write_json(path, doc):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")


def print_order(ideal, a, out):
    print(f"ideal: {ideal}", file=out)
    print("order:", file=out)
    for j, (u, q) in enumerate(zip(a.order, a.qsets), start=1):
        print(f"  {j:>3}  {u}  q = {fmt_vars(q)}", file=out)
    ok, w = is_regular(a)
    print(f"regular: {'true' if ok else 'false'}" + ("" if ok else f"  witness (j, y, z) = {w}"),
          file=out)


def cmd_order(args, out):
    ideal = load_ideal(args.ideal, args.n)
    a = get_order(ideal, args, args.regular)
    print_order(ideal, a, out)
    write_json(args.json, a.to_json())
    return EXIT_OK


def cmd_resolve(args, out):
    ideal = load_ideal(args.ideal, args.n)
    a = get_order(ideal, args, True)
    F = resolution.build_resolution(a)
    if args.flip_sign is not None:
        F = F.flip_sign(args.flip_sign)
    table = resolution.betti_table(F)
    ok_c, w = resolution.verify_complex(F)
    ok_m = resolution.verify_minimal(F)
    print(f"ideal: {ideal}", file=out)
    print("betti: " + " ".join(str(b) for b in table.totals()), file=out)
    print(table.render(), file=out)
    print(f"d^2 = 0: {'pass' if ok_c else 'FAIL'}" + ("" if ok_c else f"  witness {w}"), file=out)
    print(f"minimal: {'pass' if ok_m else 'FAIL'}", file=out)
    write_json(args.json, {"order": a.to_json(), "complex": F.to_json(), "betti": table.to_json(),
                           "checks": {"complex": ok_c, "minimal": ok_m}})
    return EXIT_OK if ok_c and ok_m else EXIT_FAIL


def cmd_complex(args, out):
    ideal = load_ideal(args.ideal, args.n)
    a = get_order(ideal, args, True)
    X = cells.build_X(a)
    L = cells.build_lambda(a)
    print(f"ideal: {ideal}", file=out)
    print("f(X) = " + str(X.f_vector()), file=out)
    print("f(Lambda) = " + str(L.f_vector()), file=out)
    print(f"chi(X) = {X.euler_characteristic()}", file=out)
    print(f"chi(Lambda) = {L.euler_characteristic()}", file=out)
    if args.dump:
        print(X.dump(), file=out)
    write_json(args.json, {"order": a.to_json(), "cells": X.to_json(), "lambda": L.to_json()})
    return EXIT_OK


def cmd_verify(args, out):
    ideal = load_ideal(args.ideal, args.n)
    a = get_order(ideal, args, True)
    results = run_checks(a, flip_sign=args.flip_sign, taylor_bound=args.bound,
                         shelling_bound=args.shelling_bound)
    print(f"ideal: {ideal}", file=out)
    for r in results:
        line = f"{'PASS' if r.ok else 'FAIL'}  {r.name}"
        if not r.ok:
            line += f"  witness: {json.dumps(r.witness)}"
        print(line, file=out)
    all_ok = all(r.ok for r in results)
    print("all checks passed" if all_ok else "verification FAILED", file=out)
    write_json(args.json, {"ok": all_ok,
                           "checks": [{"name": r.name, "ok": r.ok, "witness": r.witness}
                                      for r in results]})
    return EXIT_OK if all_ok else EXIT_FAIL


def cmd_oracle(args, out):
    ideal = load_ideal(args.ideal, args.n)
    table = homology.taylor_betti(ideal, args.bound)
    print(f"ideal: {ideal}", file=out)
    print("betti: " + " ".join(str(b) for b in table.totals()), file=out)
    print(table.render(), file=out)
    write_json(args.json, table.to_json())
    return EXIT_OK


def cmd_gen(args, out):
    if args.family in ("stable", "sqfree"):
        if len(args.params) != 1:
            raise ParseError(f"gen {args.family} takes one argument: the seed monomials")
        text = args.params[0]
        n = args.n if args.n is not None else infer_nvars(text)
        seeds = [parse_monomial(p, n) for p in text.split(",") if p.strip()]
        ideal = gen_stable(seeds, squarefree=args.family == "sqfree", cap=args.cap)
    elif args.family == "uniform":
        try:
            k, n = (int(p) for p in args.params)
        except ValueError:
            raise ParseError("gen uniform takes two integers: k n") from None
        ideal = gen_uniform(k, n, cap=args.cap)
    else:
        if len(args.params) != 1:
            raise ParseError("gen graphic takes one argument: edges like 1-2,1-3,2-3")
        ideal = gen_graphic(parse_edges(args.params[0]), cap=args.cap)
    print(", ".join(str(g) for g in ideal.gens), file=out)
    write_json(args.json, ideal.to_json())
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="htres", description="Herzog-Takayama resolutions and "
                                "their supporting cell complexes for monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def ideal_cmd(name, fn, help, regular_flag=False):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("ideal", help="inline ideal like 'x1*x2,x2^2' or a .txt/.json file")
        sp.add_argument("-n", type=int, default=None, help="number of variables")
        sp.add_argument("--order", help="1-based generator indices, e.g. '1,3,2'")
        sp.add_argument("--seed", type=int, default=None, help="shuffle search candidates")
        sp.add_argument("--json", metavar="PATH", help="write JSON output here")
        sp.add_argument("--bound", type=int, default=homology.TAYLOR_BOUND,
                        help="max generators for the Taylor oracle")
        sp.add_argument("--shelling-bound", type=int, default=cells.SHELLING_BOUND)
        sp.add_argument("--flip-sign", type=int, default=None, metavar="K",
                        help="negate incidence K (fault injection)")
        if regular_flag:
            sp.add_argument("--regular", action="store_true", help="require a regular order")
        sp.set_defaults(func=fn)
        return sp

    ideal_cmd("order", cmd_order, "find or check an admissible order", regular_flag=True)
    ideal_cmd("resolve", cmd_resolve, "build the Herzog-Takayama resolution")
    ideal_cmd("complex", cmd_complex, "build X_I and Lambda_I").add_argument(
        "--dump", action="store_true", help="print the face poset")
    ideal_cmd("verify", cmd_verify, "run the full verification suite")
    ideal_cmd("oracle", cmd_oracle, "Betti numbers from the Taylor complex")

    g = sub.add_parser("gen", help="generate stable, squarefree stable or matroidal ideals")
    g.add_argument("family", choices=["stable", "sqfree", "uniform", "graphic"])
    g.add_argument("params", nargs="+")
    g.add_argument("-n", type=int, default=None)
    g.add_argument("--cap", type=int, default=MAX_GENS)
    g.add_argument("--json", metavar="PATH")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except NoOrder as exc:
        print(str(exc), file=out)
        return EXIT_NO_ORDER
    except (ParseError, TooLarge, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HTResError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
