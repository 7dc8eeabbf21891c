"""Command-line front end.

Subcommands: trees (count/list/binom/contract), series (mul/inv/sqrt/eval),
rebase, exp (coeff/table/translate), zeta, gamma, radius, check.  Exact
rationals print as p/q; complex values print as two decimal fields with 17
significant digits.  Exit status: 0 success, 1 domain or usage error, 2
failed check suite.
"""

from __future__ import annotations

import argparse
import cmath
import csv
import json
import sys
from fractions import Fraction

from . import checks, scalars
from .expfam import coefficient_table, exp_coeff, translation_check
from .radius import estimate_radius
from .rebase import (Germ, germ_from_json, germ_to_json, rebase_between,
                     rebase_polynomial, rebase_series)
from .series import (eval_series, left_inverse, majorants, mul2,
                     right_inverse, series_from_json, series_to_json,
                     sqrt_solve)
from .special import GammaGermSpec, ZetaGermSpec, gamma_germ, zeta_germ
from .trees import UNIT, binom, contract, count_trees, enumerate_trees, parse


class _Parser(argparse.ArgumentParser):
    # usage errors are exit status 1; argparse defaults to 2
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CliError(message)


class CliError(Exception):
    pass


def _parse_scalar(text: str):
    """Rational "p/q" (or integer) when possible, complex otherwise."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise CliError("cannot parse scalar %r" % text)


def _format_scalar(v) -> str:
    if isinstance(v, (Fraction, int)):
        return str(Fraction(v))
    return scalars.format_decimal(v)


def _load_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _emit(data, out_path):
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if out_path and out_path != "-":
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- trees ---------------------------------------------------------------------

def _cmd_trees(args) -> int:
    if args.action == "count":
        print(count_trees(args.degree, args.k))
        return 0
    if args.action == "list":
        trees = enumerate_trees(args.degree, args.k)
        if args.format == "json":
            _emit([str(t) for t in trees], args.out)
        else:
            for t in trees:
                print(t)
        return 0
    if args.action == "binom":
        if len(args.tree or ()) != 2:
            raise CliError("binom needs --tree UPPER --tree LOWER")
        upper, lower = (parse(s) for s in args.tree)
        print(binom(upper, lower))
        return 0
    if args.action == "contract":
        if len(args.tree or ()) != 1:
            raise CliError("contract needs exactly one --tree")
        print(contract(parse(args.tree[0]), args.indices))
        return 0
    raise CliError("unknown trees action %r" % args.action)


# -- series --------------------------------------------------------------------

def _cmd_series(args) -> int:
    if args.action == "mul":
        if len(args.infile or ()) != 2:
            raise CliError("mul needs two --in files")
        f = series_from_json(_load_json(args.infile[0]))
        g = series_from_json(_load_json(args.infile[1]))
        _emit(series_to_json(mul2(f, g)), args.out)
        return 0
    if not args.infile:
        raise CliError("series %s needs --in" % args.action)
    f = series_from_json(_load_json(args.infile[0]))
    if args.action == "inv":
        inverse = right_inverse if args.side == "right" else left_inverse
        _emit(series_to_json(inverse(f)), args.out)
        return 0
    if args.action == "sqrt":
        if args.a is not None:
            root0 = _parse_scalar(args.a)
        else:
            root0 = cmath.sqrt(complex(f.coeff(UNIT)))
        _emit(series_to_json(sqrt_solve(f, root0)), args.out)
        return 0
    if args.action == "eval":
        if args.a is None:
            raise CliError("eval needs --a")
        print(_format_scalar(eval_series(f, _parse_scalar(args.a))))
        return 0
    raise CliError("unknown series action %r" % args.action)


# -- rebase --------------------------------------------------------------------

def _cmd_rebase(args) -> int:
    data = _load_json(args.infile)
    if "base" in data:
        germ = germ_from_json(data)
        if args.b is None:
            raise CliError("rebasing a germ needs the new base --b")
        moved = rebase_between(germ, _parse_scalar(args.b), args.trunc)
    else:
        f = series_from_json(data)
        if args.a is None:
            raise CliError("rebasing a series needs the base --a")
        a = _parse_scalar(args.a)
        if f.is_polynomial:
            moved = rebase_polynomial(f, a, args.trunc)
        else:
            moved = rebase_series(f, a, args.trunc if args.trunc is not None
                                  else f.trunc)
    _emit(germ_to_json(moved), args.out)
    return 0


# -- exp -----------------------------------------------------------------------

def _cmd_exp(args) -> int:
    if args.action == "coeff":
        if not args.tree:
            raise CliError("exp coeff needs --tree")
        print(exp_coeff(parse(args.tree), args.k))
        return 0
    if args.action == "table":
        table = coefficient_table(args.k, args.degree)
        if args.format == "json":
            _emit([{"tree": str(t), "value": str(v)} for t, v in table], args.out)
        else:
            w = csv.writer(sys.stdout)
            w.writerow(["tree", "degree", "value"])
            for t, v in table:
                w.writerow([str(t), t.degree, str(v)])
        return 0
    if args.action == "translate":
        if args.a is None:
            raise CliError("exp translate needs the expansion point --a")
        lam = complex(_parse_scalar(args.a))
        report = translation_check(args.k, lam, args.trunc, args.tol,
                                   source_degree=args.degree)
        print("translation k=%d lam=%s trunc=%d source=%d: "
              "max discrepancy %.6g (tol %g) %s"
              % (report.k, scalars.format_decimal(report.lam), report.trunc,
                 report.source_degree, report.max_discrepancy, report.tol,
                 "PASS" if report.passed else "FAIL"))
        return 0 if report.passed else 2
    raise CliError("unknown exp action %r" % args.action)


# -- special germ tables -------------------------------------------------------

def _germ_table(germ: Germ, fmt, out_path) -> int:
    if fmt == "json":
        _emit(germ_to_json(germ), out_path)
        return 0
    w = csv.writer(sys.stdout)
    w.writerow(["tree", "degree", "re", "im"])
    for t in germ.series.support():
        v = complex(germ.series.terms[t])
        w.writerow([str(t), t.degree, "%.17g" % v.real, "%.17g" % v.imag])
    return 0


def _cmd_zeta(args) -> int:
    r = complex(_parse_scalar(args.r))
    spec = ZetaGermSpec(r=r, trunc=args.trunc, k=args.k)
    return _germ_table(zeta_germ(spec), args.format, args.out)


def _cmd_gamma(args) -> int:
    r = complex(_parse_scalar(args.r))
    spec = GammaGermSpec(r=r, trunc=args.trunc, k=args.k, quad_tol=args.tol)
    return _germ_table(gamma_germ(spec), args.format, args.out)


# -- radius --------------------------------------------------------------------

def _cmd_radius(args) -> int:
    f = series_from_json(_load_json(args.infile))
    print(estimate_radius(majorants(f)))
    return 0


# -- check ---------------------------------------------------------------------

def _cmd_check(args) -> int:
    if args.suite == "all":
        results = checks.run_all()
    else:
        try:
            results = [checks.run_suite(args.suite)]
        except KeyError:
            raise CliError("unknown suite %r; choose from %s or 'all'"
                           % (args.suite, ", ".join(checks.SUITES)))
    ok = True
    for res in results:
        print(res.line())
        ok = ok and res.passed
    return 0 if ok else 2


# -- argument wiring -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="planarps",
                  description="Planar power series computer algebra")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trees", help="enumeration, binomials, contraction")
    p.add_argument("action", choices=["count", "list", "binom", "contract"])
    p.add_argument("--degree", type=int, default=0)
    p.add_argument("--k", type=int, default=None, help="max arity bound")
    p.add_argument("--tree", action="append")
    p.add_argument("--indices", type=lambda s: [int(x) for x in s.split(",") if x],
                   default=[], help="comma-separated leaf indices")
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_trees)

    p = sub.add_parser("series", help="series arithmetic on JSON files")
    p.add_argument("action", choices=["mul", "inv", "sqrt", "eval"])
    p.add_argument("--in", dest="infile", action="append")
    p.add_argument("--out")
    p.add_argument("--a", help="evaluation point or square-root constant term")
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("rebase", help="re-expand a series or germ JSON file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.add_argument("--a", help="new base for a series input")
    p.add_argument("--b", help="new base for a germ input")
    p.add_argument("--trunc", type=int, default=None)
    p.set_defaults(fn=_cmd_rebase)

    p = sub.add_parser("exp", help="exponential coefficients and translation")
    p.add_argument("action", choices=["coeff", "table", "translate"])
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--tree")
    p.add_argument("--degree", type=int, default=14,
                   help="table degree / translation source degree")
    p.add_argument("--trunc", type=int, default=6)
    p.add_argument("--a", help="translation expansion point")
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_exp)

    p = sub.add_parser("zeta", help="zeta germ coefficient table")
    p.add_argument("--r", required=True)
    p.add_argument("--trunc", type=int, default=6)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_zeta)

    p = sub.add_parser("gamma", help="Gamma germ coefficient table")
    p.add_argument("--r", required=True)
    p.add_argument("--trunc", type=int, default=6)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_gamma)

    p = sub.add_parser("radius", help="radius estimate from a series JSON file")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(fn=_cmd_radius)

    p = sub.add_parser("check", help="run verification suites")
    p.add_argument("suite", nargs="?", default="all")
    p.set_defaults(fn=_cmd_check)

    return top


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
