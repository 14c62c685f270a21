"""Command line front end.

    qrsums report <p> [--float] [--json]
    qrsums scan --from A --to B [--format csv|json] [--out PATH] [--jobs N]
    qrsums verify --from A --to B [--float] [--float-cap N]
    qrsums gauss --p P

Exit codes: 0 success, 1 verification failure (or an I/O problem writing
output), 2 internal invariant violation, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO

from . import analytic, scan, verify
from .arith import InvariantError, OddPrime, is_prime
from .classnum import h_from_forms
from .residues import residue_profile
from .sums import sum_record

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INTERNAL = 2
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract here is 64
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _json_float(x: float) -> float:
    # floats are published at 12 significant digits everywhere
    return float(_fmt(x))


def _check_as_dict(r: analytic.FloatCheckResult) -> dict:
    if isinstance(r.computed, complex):
        computed = [_json_float(r.computed.real), _json_float(r.computed.imag)]
        reference = [_json_float(r.reference.real), _json_float(r.reference.imag)]
    else:
        computed = _json_float(r.computed)
        reference = _json_float(float(r.reference))
    return {
        "name": r.name,
        "computed": computed,
        "reference": reference,
        "residual": _json_float(r.residual),
        "tolerance": _json_float(r.tolerance),
        "pass": r.passed,
    }


def _print_check(r: analytic.FloatCheckResult, fh: IO[str]) -> None:
    if isinstance(r.computed, complex):
        computed = f"{_fmt(r.computed.real)}{r.computed.imag:+.12g}i"
        reference = f"{_fmt(r.reference.real)}{r.reference.imag:+.12g}i"
    else:
        computed = _fmt(r.computed)
        reference = _fmt(float(r.reference))
    status = "pass" if r.passed else "FAIL"
    fh.write(
        f"  {r.name:<24} computed={computed}  reference={reference}"
        f"  residual={_fmt(r.residual)}  tolerance={_fmt(r.tolerance)}  {status}\n"
    )


def _odd_prime_arg(value: int) -> OddPrime:
    if value < 3 or value % 2 == 0 or not is_prime(value):
        raise UsageError(f"{value} is not an odd prime")
    return OddPrime(value)


def _cmd_report(args: argparse.Namespace) -> int:
    p = _odd_prime_arg(args.p)
    out = sys.stdout

    if p.class_mod4 == 1:
        # the sums vanish here; that is all there is to check
        checks = [analytic.t_float(p), analytic.c_float(p)]
        if args.json:
            doc = {
                "p": p.value,
                "class_mod8": p.class_mod8,
                "float_checks": [_check_as_dict(r) for r in checks],
            }
            out.write(json.dumps(doc, indent=2) + "\n")
        else:
            out.write(f"p           = {p.value}\n")
            out.write(f"class_mod8  = {p.class_mod8}\n")
            out.write("vanishing checks (p = 1 mod 4):\n")
            for r in checks:
                _print_check(r, out)
        return EXIT_OK if all(r.passed for r in checks) else EXIT_FAILURE

    prof = residue_profile(p)
    rec = sum_record(p, prof)
    row = scan.compute_row(p)
    fields = scan.row_as_dict(row)
    checks = []
    if args.float:
        checks = [
            analytic.t_float(p, prof),
            analytic.c_float(p, prof),
            analytic.whiteman_sum(p, prof),
            analytic.lebesgue_float(p, prof),
            analytic.berndt_m_float(p, prof),
            analytic.bound_harmonic(p, prof),
            analytic.bound_pv(p, prof),
        ]
    if args.json:
        doc: dict = dict(fields)
        doc["t_expr"] = list(rec.t_expr)
        if checks:
            doc["float_checks"] = [_check_as_dict(r) for r in checks]
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for key, value in fields.items():
            out.write(f"{key:<11} = {value}\n")
        out.write(f"t_expr      = {list(rec.t_expr)}\n")
        if checks:
            out.write("float checks:\n")
            for r in checks:
                _print_check(r, out)
    return EXIT_OK if all(r.passed for r in checks) else EXIT_FAILURE


def _validate_range(lo: int, hi: int) -> None:
    if lo < 3:
        raise UsageError(f"--from must be >= 3, got {lo}")
    if hi < lo:
        raise UsageError(f"--to must be >= --from, got {lo}..{hi}")
    if hi >= 1 << 32:
        raise UsageError(f"--to must be < 2^32, got {hi}")


def _cmd_scan(args: argparse.Namespace) -> int:
    _validate_range(args.lo, args.hi)
    if args.jobs < 1:
        raise UsageError(f"--jobs must be >= 1, got {args.jobs}")
    rows = scan.scan_rows(args.lo, args.hi, jobs=args.jobs)
    writer = scan.write_csv if args.format == "csv" else scan.write_json
    if args.out is None:
        writer(rows, sys.stdout)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer(rows, fh)
    except OSError as exc:
        sys.stderr.write(f"qrsums: cannot write {args.out}: {exc}\n")
        return EXIT_FAILURE
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    _validate_range(args.lo, args.hi)
    report = verify.run_verify(
        args.lo, args.hi, with_float=args.float, float_cap=args.float_cap
    )
    out = sys.stdout
    lo, hi = report.range
    out.write(f"range          = [{lo}, {hi}]\n")
    out.write(f"primes_checked = {report.primes_checked}\n")
    out.write(f"checks_run     = {report.checks_run}\n")
    out.write(f"failures       = {len(report.failures)}\n")
    for f in report.failures:
        out.write(f"  p={f.p} {f.check}: expected {f.expected}, got {f.actual}\n")
    out.write("errata (published vs corrected, exact value as arbiter):\n")
    for e in report.errata_confirmations:
        tag = "disagrees" if e.discrepant else "agrees (branch unaffected)"
        out.write(
            f"  {e.identity:<22} p={e.prime:<3} published={e.published_value:<6} "
            f"corrected={e.corrected_value:<6} exact={e.exact_value:<6} "
            f"published {tag}\n"
        )
    out.write("result         = " + ("PASS\n" if report.ok else "FAIL\n"))
    return EXIT_OK if report.ok else EXIT_FAILURE


def _cmd_gauss(args: argparse.Namespace) -> int:
    p = _odd_prime_arg(args.p)
    if p.class_mod4 != 3:
        raise UsageError(f"p = {p.value} is 1 (mod 4); the pure-imaginary closed form needs 3 (mod 4)")
    checks = analytic.gauss_sum_checks(p)
    out = sys.stdout
    for r in checks:
        _print_check(r, out)
    worst = max(r.residual for r in checks)
    ok = all(r.passed for r in checks)
    out.write(
        f"p={p.value}: {len(checks)} sums, max residual {_fmt(worst)}, "
        f"tolerance {_fmt(analytic.gauss_tolerance(p.value))}, "
        + ("PASS\n" if ok else "FAIL\n")
    )
    return EXIT_OK if ok else EXIT_FAILURE


def _build_parser() -> _Parser:
    parser = _Parser(prog="qrsums", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    rep = sub.add_parser("report", help="all statistics of one prime")
    rep.add_argument("p", type=int)
    rep.add_argument("--float", action="store_true")
    rep.add_argument("--json", action="store_true")
    rep.set_defaults(func=_cmd_report)

    sc = sub.add_parser("scan", help="one row per prime = 3 (mod 4) in a range")
    sc.add_argument("--from", dest="lo", type=int, required=True)
    sc.add_argument("--to", dest="hi", type=int, required=True)
    sc.add_argument("--format", choices=("csv", "json"), default="csv")
    sc.add_argument("--out", default=None)
    sc.add_argument("--jobs", type=int, default=1)
    sc.set_defaults(func=_cmd_scan)

    ver = sub.add_parser("verify", help="run the full identity suite on a range")
    ver.add_argument("--from", dest="lo", type=int, required=True)
    ver.add_argument("--to", dest="hi", type=int, required=True)
    ver.add_argument("--float", action="store_true")
    ver.add_argument("--float-cap", dest="float_cap", type=int, default=10_000)
    ver.set_defaults(func=_cmd_verify)

    ga = sub.add_parser("gauss", help="exponential sums for every k mod p")
    ga.add_argument("--p", type=int, required=True)
    ga.set_defaults(func=_cmd_gauss)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"qrsums: {exc}\n")
        return EXIT_USAGE
    except InvariantError as exc:
        sys.stderr.write(f"qrsums: internal invariant violation: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
