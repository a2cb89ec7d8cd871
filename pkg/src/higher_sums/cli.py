"""Command-line interface.

    $ higher-sums bernoulli --m 2
    1/6
    $ higher-sums poly --m 0 --k 3
    n^3
    $ higher-sums verify impl1 --m-max 4 --k-max 3 --format json
    $ higher-sums conjecture --m-max 6 --k-max 4 --n-max 4
    $ higher-sums appendix --format latex

Exit status is 0 when every computation and check succeeds, 1 when a
verification fails and 2 for usage errors or violated preconditions.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import appendix, identities
from . import bernoulli as bern
from . import combinatorics as comb
from . import partition_sums as ps
from . import powersums
from .render import FORMATS, Table, render, report_table, reports_json

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="higher-sums",
        description="Exact higher-order power sums, Bernoulli numbers and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, description=help)
        p.add_argument("--format", choices=FORMATS, default="text")
        return p

    p = add("bernoulli", "classical Bernoulli numbers B_m")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=_nonneg)
    g.add_argument("--m-max", type=_nonneg)

    p = add("higher-bernoulli", "higher-order Bernoulli numbers B_m^(k)")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--path", choices=bern.PATHS + ("all",), default="convolution")

    p = add("norlund", "Noerlund polynomials B_m^(k) in k")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=_nonneg)
    g.add_argument("--m-max", type=_nonneg)

    p = add("stirling", "Stirling numbers, Stirling polynomials and extended binomial rows")
    p.add_argument("--kind", choices=("second", "first", "polynomial", "extended"),
                   default="second")
    p.add_argument("--n", type=_nonneg)
    p.add_argument("--k", type=_nonneg)
    p.add_argument("--m", type=_nonneg, help="index of the Stirling polynomial f_m(k)")
    p.add_argument("--n-max", type=_nonneg, help="dump the triangle up to this row")

    p = add("powersum", "higher power sum S_m^(k)(n) checked against its polynomial")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--k", type=_positive, default=1)
    p.add_argument("--n", type=_positive, required=True)

    p = add("poly", "power-sum polynomial in n (classical when --k is omitted)")
    p.add_argument("--m", type=_nonneg, required=True)
    p.add_argument("--k", type=_positive)

    p = add("verify", "verify an identity over a parameter grid")
    p.add_argument("identity", help="one of: " + ", ".join(identities.IDENTITIES + ("all",))
                   + "; aliases " + ", ".join(identities.ALIASES) + " also work")
    p.add_argument("--m-max", type=_nonneg, default=4)
    p.add_argument("--k-max", type=_positive, default=3)
    p.add_argument("--r-max", type=_positive)
    p.add_argument("--n-max", type=_positive, default=4)

    p = add("conjecture", "residual of the related-sums relation over a grid")
    p.add_argument("--m-max", type=_nonneg, default=6)
    p.add_argument("--k-max", type=_positive, default=4)
    p.add_argument("--n-max", type=_positive, default=4)
    p.add_argument("--budget", type=_positive,
                   help=f"tuple budget per (k, n); default from ${ps.BUDGET_ENV} or {ps.DEFAULT_BUDGET}")

    add("appendix", "reproduce the Noerlund and higher Faulhaber reference tables")
    return parser


# subcommand handlers return (table or preformatted string, exit status)

def _cmd_bernoulli(args):
    ms = [args.m] if args.m is not None else range(args.m_max + 1)
    rows = [{"m": m, "value": bern.bernoulli(m)} for m in ms]
    return Table(["m", "value"], rows, {"command": "bernoulli"}, scalar=args.m is not None), EXIT_OK


def _cmd_higher_bernoulli(args):
    paths = bern.PATHS if args.path == "all" else (args.path,)
    rows = []
    for path in paths:
        if path == "norlund_recurrence" and args.k == 0:
            if args.path == "all":
                continue
            raise ValueError("the norlund_recurrence path needs k >= 1")
        rows.append({"m": args.m, "k": args.k, "path": path,
                     "value": bern.higher_bernoulli(args.m, args.k, path)})
    agree = len({r["value"] for r in rows}) == 1
    meta = {"command": "higher-bernoulli"}
    if len(rows) > 1:
        meta["paths_agree"] = agree
    table = Table(["m", "k", "path", "value"], rows, meta, scalar=len(rows) == 1)
    return table, EXIT_OK if agree else EXIT_FAILED


def _cmd_norlund(args):
    ms = [args.m] if args.m is not None else range(args.m_max + 1)
    rows = [{"m": m, "polynomial": bern.norlund_polynomial(m)} for m in ms]
    return Table(["m", "polynomial"], rows, {"command": "norlund"},
                 scalar=args.m is not None, factored=True), EXIT_OK


def _cmd_stirling(args):
    meta = {"command": "stirling", "kind": args.kind}
    if args.kind == "polynomial":
        if args.m is None:
            raise ValueError("--kind polynomial needs --m")
        rows = [{"m": args.m, "polynomial": bern.stirling_polynomial(args.m)}]
        return Table(["m", "polynomial"], rows, meta, scalar=True), EXIT_OK
    if args.kind == "extended":
        if args.k is None or args.n is None:
            raise ValueError("--kind extended needs --k and --n")
        row = comb.extended_binomial_row(args.k, args.n)
        rows = [{"k": args.k, "n": args.n, "q": q, "value": v} for q, v in enumerate(row)]
        return Table(["k", "n", "q", "value"], rows, meta), EXIT_OK
    fn = comb.stirling2 if args.kind == "second" else comb.stirling1_signed
    if args.n_max is not None:
        rows = [{"n": a, "k": b, "value": fn(a, b)}
                for a in range(args.n_max + 1) for b in range(a + 1)]
        return Table(["n", "k", "value"], rows, meta), EXIT_OK
    if args.n is None or args.k is None:
        raise ValueError("give --n and --k, or --n-max for a table")
    rows = [{"n": args.n, "k": args.k, "value": fn(args.n, args.k)}]
    return Table(["n", "k", "value"], rows, meta, scalar=True), EXIT_OK


def _cmd_powersum(args):
    report = powersums.theorem_check(powersums.PowerSumQuery(args.m, args.k, args.n))
    row = {"m": args.m, "k": args.k, "n": args.n, "lhs": report.lhs, "rhs": report.rhs,
           "residual": report.residual, "holds": report.holds}
    table = Table(list(row), [row], {"command": "powersum"})
    return table, EXIT_OK if report.holds else EXIT_FAILED


def _cmd_poly(args):
    if args.k is None:
        poly, k = powersums.faulhaber_poly(args.m), None
    else:
        poly, k = powersums.higher_faulhaber_poly(args.m, args.k), args.k
    row = {"m": args.m, "k": k, "polynomial": poly}
    return Table(["m", "k", "polynomial"], [row], {"command": "poly"}, scalar=True), EXIT_OK


def collect_reports(identity: str, m_max: int, k_max: int, r_max: int | None, n_max: int):
    names = identities.IDENTITIES if identity == "all" else (identity,)
    reports = []
    for name in names:
        reports.extend(identities.sweep(name, m_max, k_max, r_max, n_max))
        if name == "general-relation":
            reports.extend(identities.specialization_reports(m_max, k_max))
    return reports


def _cmd_verify(args):
    try:
        identity = identities.resolve(args.identity)
    except KeyError:
        raise ValueError(f"unknown identity {args.identity!r}") from None
    reports = collect_reports(identity, args.m_max, args.k_max, args.r_max, args.n_max)
    status = EXIT_OK if all(r.holds for r in reports) else EXIT_FAILED
    if args.format == "json":
        return reports_json(reports, identity), status
    table = report_table(reports, identity)
    if args.format == "text":
        table.columns = ["identity_id", "params", "holds", "residual"]
    return table, status


def _cmd_conjecture(args):
    rows = [ps.conjecture_row(m, k, n, args.budget)
            for k in range(1, args.k_max + 1)
            for n in range(1, args.n_max + 1)
            for m in range(args.m_max + 1)]
    failed = sum(1 for r in rows if not r["holds"])
    meta = {"command": "conjecture", "total": len(rows), "failed": failed,
            "verdict": "holds" if failed == 0 else "fails"}
    cols = ["m", "k", "n", "script_sum", "related_sum", "residual", "expected_residual", "holds"]
    return Table(cols, rows, meta), EXIT_OK if failed == 0 else EXIT_FAILED


def _cmd_appendix(args):
    nrows = appendix.norlund_table()
    frows = appendix.faulhaber_table()
    norlund = Table(
        ["m", "computed", "matches_tabulated", "matches_after_correction", "note"],
        [{"m": r.m, "computed": r.computed, "matches_tabulated": r.matches,
          "matches_after_correction": r.matches_after_correction, "note": r.note} for r in nrows],
        title="Noerlund polynomials B_m^(k)", factored=True,
    )
    faulhaber = Table(
        ["m", "k", "computed", "matches_tabulated"],
        [{"m": r.m, "k": r.k, "computed": r.computed, "matches_tabulated": r.matches}
         for r in frows],
        title="Higher power-sum polynomials S_m^(k)(n), k = 1..6", factored=True,
    )
    ok = all(r.matches_after_correction for r in nrows) and all(r.matches for r in frows)
    status = EXIT_OK if ok else EXIT_FAILED
    if args.format == "json":
        doc = {
            "command": "appendix",
            "norlund": json.loads(render(norlund, "json"))["rows"],
            "faulhaber": json.loads(render(faulhaber, "json"))["rows"],
            "all_match": ok,
        }
        return json.dumps(doc, indent=2), status
    return render(norlund, args.format) + "\n\n" + render(faulhaber, args.format), status


HANDLERS = {
    "bernoulli": _cmd_bernoulli,
    "higher-bernoulli": _cmd_higher_bernoulli,
    "norlund": _cmd_norlund,
    "stirling": _cmd_stirling,
    "powersum": _cmd_powersum,
    "poly": _cmd_poly,
    "verify": _cmd_verify,
    "conjecture": _cmd_conjecture,
    "appendix": _cmd_appendix,
}


def run_command(argv: Sequence[str]) -> tuple[int, str]:
    """Parse argv and run one subcommand, returning (exit status, output)."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        result, status = HANDLERS[args.command](args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE, ""
    out = result if isinstance(result, str) else render(result, args.format)
    return status, out


def main(argv: Sequence[str] | None = None) -> int:
    status, out = run_command(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
