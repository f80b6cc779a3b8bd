"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 precondition
violation, 4 a verification report contains a failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import eulerian, families, hyperg, ortho, transforms, weyl
from .exact import SeriesError, format_gauss
from .io import dumps, poly_from_json, poly_to_json, pyramid_from_json, pyramid_to_json, rows_to_csv

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_json(args, inline: list[str], key: str):
    """JSON from ``--input``, else inline values, else stdin."""
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            return json.load(fh)
    if inline:
        return {key: inline}
    return json.loads(sys.stdin.read())


def _verdict(report) -> int:
    return EXIT_VERIFY if any(e.get("status") == "fail" for e in report) else EXIT_OK


# -- subcommands -------------------------------------------------------------------


def cmd_reduce(args) -> int:
    e = weyl.parse_expr(args.expr)
    if args.method == "engine":
        P = weyl.reduce_balanced(e, args.strategy)
    else:
        P = weyl.reduce_via_interpolation(e)
    _emit(args, dumps(poly_to_json(P)) if args.json else P.to_text() + "\n")
    return EXIT_OK


def cmd_normal_order(args) -> int:
    nf = weyl.normal_order(weyl.parse_expr(args.expr), args.strategy)
    if args.json:
        terms = [{"q": j, "p": k, "coeff": format_gauss(c)} for (j, k), c in nf.sorted_terms()]
        _emit(args, dumps({"terms": terms}))
    else:
        _emit(args, nf.to_text() + "\n")
    return EXIT_OK


def cmd_pyramid2poly(args) -> int:
    row = pyramid_from_json(_read_json(args, args.entries, "entries"))
    P = transforms.pyramid_to_poly(row)
    _emit(args, dumps(poly_to_json(P, row.n)))
    return EXIT_OK


def cmd_poly2pyramid(args) -> int:
    P = poly_from_json(_read_json(args, args.coeffs, "coeffs"))
    n = args.n if args.n is not None else max(P.degree, 0)
    _emit(args, dumps(pyramid_to_json(transforms.poly_to_pyramid(P, n))))
    return EXIT_OK


def _family_row(name: str, n: int, power: int | None):
    key = name.replace("-", "_").lower()
    if key in families.POLY_FAMILIES:
        return families.classical_pyramid(key, n), families.family_poly(key, n)
    fam = families.OrderingFamily.parse(name, power)
    if fam.tag == "custom":
        raise transforms.PreconditionError("custom families are library-only")
    row = families.ordering_row(fam, n)
    return row, transforms.pyramid_to_poly(row)


def cmd_family(args) -> int:
    if args.csv:
        rows = []
        for n in range(args.n + 1):
            row, _ = _family_row(args.name, n, args.power)
            rows.append(transforms.integerize(row) if args.integerize else list(row))
        _emit(args, rows_to_csv(rows))
        return EXIT_OK
    row, P = _family_row(args.name, args.n, args.power)
    out = {"n": row.n, "entries": [format_gauss(a) for a in row], "coeffs": poly_to_json(P, row.n)["coeffs"]}
    if args.integerize:
        out["integerized"] = transforms.integerize(row)
    if args.text:
        _emit(args, f"{row}\n{P.to_text()}\n")
    else:
        _emit(args, dumps(out))
    return EXIT_OK


def cmd_outer_diagonal(args) -> int:
    values = []
    for n in range(args.max_n + 1):
        row, _ = _family_row(args.name, n, args.power)
        values.append(format_gauss(row[n]))
    out = {"family": args.name, "values": values}
    code = EXIT_OK
    key = args.name.replace("-", "_").lower()
    if key in ("chebyshev_t", "chebyshev_u", "hermite", "legendre") and args.max_n >= 2:
        checks = [
            e
            for e in families.outer_diagonal_identities(args.max_n)
            if e["identity"].startswith(key + ":")
        ]
        out["checks"] = checks
        code = _verdict(checks)
    _emit(args, dumps(out))
    return code


def cmd_screen(args) -> int:
    name = args.family.replace("-", "_").lower()
    if name in ("binom_pow", "binom_power", "binom"):
        report = ortho.binom_power_scan(args.max_r, args.depth)
        out = {"family": "binom_power", "depth": args.depth, "scan": report,
               "passing": [e["r"] for e in report if e["status"] == "pass"]}
        _emit(args, dumps(out))
        return EXIT_OK
    if name in families.POLY_FAMILIES:
        def get(n):
            return families.family_poly(name, n)
    else:
        fam = families.OrderingFamily.parse(args.family, args.power)

        def get(n):
            return families.ordering_poly(fam, n)
    out = {"family": args.family, "depth": args.depth}
    try:
        out["condition1"] = format_gauss(ortho.condition1(get))
        out["condition2"] = format_gauss(ortho.condition2(get)) if args.depth >= 6 else None
    except transforms.PreconditionError as exc:
        out["conditions"] = f"not applicable: {exc}"
    out["three_term"] = ortho.three_term_screen(get, args.depth).to_dict()
    _emit(args, dumps(out))
    return EXIT_OK


def cmd_identities(args) -> int:
    report = hyperg.identity_suite(args.max_n, args.max_m)
    if args.bridges:
        report = report + hyperg.bridge_checks(args.max_n, min(args.max_n, 10))
    _emit(args, dumps(report))
    return _verdict(report)


def cmd_eulerian(args) -> int:
    out = {"n": args.n, "row": eulerian.b_row(args.n)}
    report = []
    if args.check in ("gf", "all"):
        report += eulerian.b_gf_check(max(args.n, 1))
    if args.check in ("euler", "all"):
        report += eulerian.euler_sum_check(args.n)
    if args.check in ("relations", "all"):
        report += eulerian.type_ab_relations(max(args.n, 1))
    if args.check:
        out["checks"] = report
    _emit(args, dumps(out))
    return _verdict(report)


def cmd_palindromes(args) -> int:
    result = weyl.palindrome_hermitian_search(args.max_length)
    _emit(args, dumps(result))
    return EXIT_OK


# -- parser ----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="pyramids", description="Exact computations with operator-ordering pyramids.")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        return p

    p = add("reduce", cmd_reduce, "reduce a balanced expression to a polynomial in z")
    p.add_argument("expr")
    p.add_argument("--method", choices=("engine", "interpolation"), default="engine")
    p.add_argument("--strategy", choices=("kernel", "leftmost", "rightmost"), default="kernel")
    p.add_argument("--json", action="store_true")

    p = add("normal-order", cmd_normal_order, "rewrite an expression as a sum of q^j p^k")
    p.add_argument("expr")
    p.add_argument("--strategy", choices=("kernel", "leftmost", "rightmost"), default="kernel")
    p.add_argument("--json", action="store_true")

    p = add("pyramid2poly", cmd_pyramid2poly, "pyramid row JSON to polynomial JSON")
    p.add_argument("entries", nargs="*", help="row entries (otherwise --input or stdin)")
    p.add_argument("-i", "--input")

    p = add("poly2pyramid", cmd_poly2pyramid, "polynomial JSON to pyramid row JSON")
    p.add_argument("coeffs", nargs="*", help="ascending coefficients (otherwise --input or stdin)")
    p.add_argument("-i", "--input")
    p.add_argument("--n", type=int)

    p = add("family", cmd_family, "row and polynomial of a named family")
    p.add_argument("name")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--power", type=int)
    p.add_argument("--integerize", action="store_true")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON output (default)")
    fmt.add_argument("--csv", action="store_true", help="rows 0..n as CSV")
    fmt.add_argument("--text", action="store_true")

    p = add("outer-diagonal", cmd_outer_diagonal, "a_{n,n} for n <= max-n")
    p.add_argument("name")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--power", type=int)

    p = add("screen", cmd_screen, "orthogonality screen")
    p.add_argument("--family", required=True)
    p.add_argument("--power", type=int)
    p.add_argument("--max-r", type=int, default=200)
    p.add_argument("--depth", type=int, default=6)

    p = add("identities", cmd_identities, "hypergeometric identity suite")
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--max-m", type=int, default=20)
    p.add_argument("--bridges", action="store_true", help="also check the family bridges")

    p = add("eulerian", cmd_eulerian, "type-B Eulerian row and checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", choices=("gf", "euler", "relations", "all"))

    p = add("palindromes", cmd_palindromes, "compare palindromic and hermitian words")
    p.add_argument("--max-length", type=int, default=8)
    return ap


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("a subcommand is required")
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except weyl.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (transforms.PreconditionError, weyl.UnbalancedWordError, SeriesError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
