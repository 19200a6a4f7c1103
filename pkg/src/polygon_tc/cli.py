"""Command-line front end.

Every command writes JSON (one object per line) unless ``--csv`` is given.
Exit status: 0 success, 2 parse error, 3 unrealizable, 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from typing import Sequence

from .cohomology import CohContext, format_monomial
from .polygons import (
    CodeParseError,
    GenericityError,
    GeneticCode,
    LengthVector,
    Unrealizable,
    enumerate_codes,
    genetic_code,
    realize,
)
from .sweeps import SweepRow, exceptional_codes, sweep
from .tc_bounds import Certificate, tc_report, verify_certificate, zcl_search
from .verify import SUITES, suite_size5, suite_size6, suite_sweep

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNREALIZABLE = 3
EXIT_MISMATCH = 4


class CliError(Exception):
    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.status = status


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _parse_lengths(text: str) -> LengthVector:
    try:
        values = [v.strip() for v in text.split(",") if v.strip()]
        return LengthVector(sorted(Fraction(v) for v in values))
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad lengths {text!r}: {exc}", EXIT_PARSE) from exc


def _load_code(args) -> GeneticCode:
    if getattr(args, "lengths", None):
        lv = _parse_lengths(args.lengths)
        try:
            return genetic_code(lv)
        except GenericityError as exc:
            raise CliError(str(exc), EXIT_PARSE) from exc
    if getattr(args, "code", None):
        try:
            return GeneticCode.parse(args.code)
        except CodeParseError as exc:
            raise CliError(str(exc), EXIT_PARSE) from exc
        except Unrealizable as exc:
            raise CliError(str(exc), EXIT_UNREALIZABLE) from exc
    raise CliError("give --lengths or --code", EXIT_PARSE)


def cmd_analyze(args) -> int:
    code = _load_code(args)
    if args.target is not None:
        ctx = CohContext(code)
        if not 1 <= args.target <= 2 * ctx.m:
            raise CliError(f"--target must lie in 1..{2 * ctx.m}", EXIT_PARSE)
        cert = zcl_search(ctx, args.target)
        _emit({"code": str(code), "target": args.target, "found": cert is not None,
               "certificate": cert.to_dict() if cert else None})
        return EXIT_OK
    report = tc_report(code, top_degree=args.top_degree)
    out = report.to_dict()
    out["dims"] = CohContext(code).dims()
    _emit(out)
    return EXIT_OK


def _write_rows(rows, as_csv: bool) -> None:
    if as_csv:
        writer = csv.DictWriter(sys.stdout, fieldnames=list(SweepRow.__dataclass_fields__), lineterminator="\n")
        writer.writeheader()
        for row, _ in rows:
            writer.writerow(row.to_dict())
        return
    for row, report in rows:
        out = row.to_dict()
        out["certificate"] = report.certificate.to_dict() if report.certificate else None
        _emit(out)


def cmd_sweep(args) -> int:
    if not 4 <= args.n <= 9:
        raise CliError("sweep supports 4 <= n <= 9", EXIT_PARSE)
    if args.n == 9 and not args.long:
        raise CliError("n = 9 takes hours; pass --long to run it", EXIT_PARSE)
    rows = sweep(args.n, jobs=args.jobs, top_degree=args.top_degree)
    _write_rows(rows, args.csv)
    summary = {"summary": True, "n": args.n, "codes": len(rows), "exceptional": exceptional_codes(rows)}
    if args.csv:
        print("# " + json.dumps(summary, sort_keys=True))
    else:
        _emit(summary)
    return EXIT_OK


VERIFY_SUITES = {
    **SUITES,
    "sweep7": lambda jobs: suite_sweep(7, jobs),
    "sweep8": lambda jobs: suite_sweep(8, jobs),
    "size5": suite_size5,
    "size6": suite_size6,
}
_TAKES_JOBS = {"sweep7", "sweep8", "size5", "size6"}


def cmd_verify(args) -> int:
    fn = VERIFY_SUITES[args.suite]
    result = fn(args.jobs) if args.suite in _TAKES_JOBS else fn()
    print(result.line())
    for entry in result.diff:
        print(f"  {entry}")
    return EXIT_OK if result.passed else EXIT_MISMATCH


def cmd_enumerate(args) -> int:
    if not 4 <= args.n <= 9:
        raise CliError("enumerate supports 4 <= n <= 9", EXIT_PARSE)
    for code in enumerate_codes(args.n, realizable_only=not args.all):
        if args.json:
            _emit({"code": str(code), "n": code.n, "gees": [g for g in code.gees]})
        else:
            print(code)
    return EXIT_OK


def cmd_realize(args) -> int:
    code = _load_code(args)
    lv = realize(code)
    _emit({"code": str(code), "lengths": [int(x) for x in lv.as_ints()]})
    return EXIT_OK


def cmd_cohomology(args) -> int:
    code = _load_code(args)
    ctx = CohContext(code)
    _emit(
        {
            "code": str(code),
            "m": ctx.m,
            "dims": ctx.dims(),
            "bases": {str(d): [format_monomial(d, s) for s in ctx.basis(d)] for d in range(ctx.m + 1)},
        }
    )
    return EXIT_OK


def _iter_certificates(stream):
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CliError(f"line {lineno}: {exc}", EXIT_PARSE) from exc
        if "certificate" in data:
            data = data["certificate"]
        if data is None or data.get("summary"):
            continue
        try:
            yield Certificate.from_dict(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise CliError(f"line {lineno}: not a certificate ({exc})", EXIT_PARSE) from exc


def cmd_verify_cert(args) -> int:
    stream = sys.stdin if args.file == "-" else open(args.file, encoding="utf-8")
    status = EXIT_OK
    try:
        for cert in _iter_certificates(stream):
            try:
                ok = verify_certificate(cert)
            except CodeParseError as exc:
                raise CliError(str(exc), EXIT_PARSE) from exc
            except Unrealizable as exc:
                raise CliError(str(exc), EXIT_UNREALIZABLE) from exc
            except ValueError as exc:
                ok = False
                print(f"  {exc}")
            print(f"{'OK' if ok else 'MISMATCH'} {cert.code} {cert.product} {tuple(cert.bidegree)}")
            if not ok:
                status = EXIT_MISMATCH
    finally:
        if stream is not sys.stdin:
            stream.close()
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polygon-tc", description="Cohomology and TC bounds of planar polygon spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def source(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--lengths", help="comma-separated side lengths, e.g. 1,1,1,1,3")
        group.add_argument("--code", help="genetic code, e.g. 86321 or 65;621")

    p = sub.add_parser("analyze", help="TC bounds and certificate for one space")
    source(p)
    p.add_argument("--top-degree", action="store_true", help="also search products of 2m zero divisors")
    p.add_argument("--target", type=int, help="only search products of exactly this many zero divisors")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="report every genetic code with n sides")
    p.add_argument("--n", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON lines (default)")
    fmt.add_argument("--csv", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--long", action="store_true", help="allow n = 9")
    p.add_argument("--top-degree", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run a reproduction suite")
    p.add_argument("suite", choices=sorted(VERIFY_SUITES))
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list genetic codes with n sides")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--all", action="store_true", help="skip the realizability check")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("realize", help="integer length vector for a code")
    p.add_argument("--code", required=True)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("cohomology", help="dimensions and monomial bases")
    source(p)
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("verify-cert", help="re-check certificates (JSON lines)")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_verify_cert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.status
    except (CodeParseError, GenericityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Unrealizable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNREALIZABLE


if __name__ == "__main__":
    sys.exit(main())
