"""Batch command-line interface.

Exit codes: 0 = all checks passed, 1 = computation ran but a check failed,
2 = invalid or unsupported input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import habiro, modforms, periods, rvtransform, zerocert
from .exactcore import RatPoly

WEIGHTS = modforms.ONE_DIM_WEIGHTS


def zeta_record_for_weight(k: int, d=None):
    """Full pipeline: odd period polynomial -> U -> zeta polynomial record,
    with both certificates."""
    rminus = periods.odd_period_polynomial(k)
    quot = periods.cfi_quotient(rminus, k)
    e = quot.e
    if d is None:
        d = e + 2
    record = rvtransform.rv_polynomial(quot.U_poly, d, weight=k)
    circle = zerocert.unit_circle_certify(quot.U_poly)
    line = zerocert.critical_line_certify(record.Q, record.critical_line, +1)
    return record, circle, line


def _emit(payload, out):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_periods(args) -> int:
    try:
        payload = periods.periods_json_dict(args.weight)
    except (modforms.UnsupportedWeightError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args.out)
    return 0


def cmd_rv(args) -> int:
    k = args.weight
    if k not in WEIGHTS:
        print(f"error: weight {k} unsupported (dim S_k = 1 weights: {WEIGHTS})",
              file=sys.stderr)
        return 2
    e = k - 12
    if args.d is not None and args.d <= e:
        print(f"error: d must exceed e = {e}", file=sys.stderr)
        return 2
    record, circle, line = zeta_record_for_weight(k, args.d)
    payload = record.to_json_dict()
    payload["unit_circle"] = circle.to_json_dict()
    payload["critical_line_certificate"] = line.to_json_dict()
    _emit(payload, args.out)
    return 0 if circle.passed and line.passed else 1


def cmd_certify(args) -> int:
    k = args.weight
    if k not in WEIGHTS:
        print(f"error: weight {k} unsupported (dim S_k = 1 weights: {WEIGHTS})",
              file=sys.stderr)
        return 2
    e = k - 12
    if args.d is not None and args.d <= e:
        print(f"error: d must exceed e = {e}", file=sys.stderr)
        return 2
    record, circle, line = zeta_record_for_weight(k, args.d)
    payload = {
        "weight": k,
        "d": record.d,
        "unit_circle": circle.to_json_dict(),
        "critical_line": line.to_json_dict(),
    }
    _emit(payload, args.out)
    return 0 if circle.passed and line.passed else 1


def cmd_habiro(args) -> int:
    if args.level < 1:
        print("error: level must be >= 1", file=sys.stderr)
        return 2
    results = habiro.habiro_battery(args.level)
    payload = {"level": args.level, "checks": results}
    _emit(payload, args.out)
    return 0 if all(results.values()) else 1


def cmd_lfun(args) -> int:
    k = args.weight
    if k not in WEIGHTS:
        print(f"error: weight {k} unsupported (dim S_k = 1 weights: {WEIGHTS})",
              file=sys.stderr)
        return 2
    f = modforms.eigenform(k)
    ss = [args.s] if args.s is not None else list(range(1, k))
    values = {}
    for s in ss:
        if not (1 <= s <= k - 1):
            print(f"error: s = {s} outside 1..{k - 1}", file=sys.stderr)
            return 2
        values[str(s)] = str(modforms.lambda_numeric(f, s, args.prec_bits).value)
    _emit({"weight": k, "prec_bits": args.prec_bits, "lambda": values}, args.out)
    return 0


def cmd_report(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = []
    any_failed = False
    for k in WEIGHTS:
        e = k - 12
        for d in range(e + 1, e + 7):
            try:
                record, circle, line = zeta_record_for_weight(k, d)
                funceq = "pass"
                uc = "pass" if circle.passed else "fail"
                cl = "pass" if line.passed else "fail"
                if not (circle.passed and line.passed):
                    any_failed = True
                if record.Q.degree > 0:
                    roots = zerocert.roots_numeric(record.Q, args.prec_bits)
                    roots_payload = {
                        "weight": k,
                        "d": d,
                        "critical_line": str(record.critical_line),
                        "roots": zerocert.roots_json(roots),
                    }
                    (out_dir / f"roots_w{k}_d{d}.json").write_text(
                        json.dumps(roots_payload, indent=2, sort_keys=True) + "\n"
                    )
            except Exception as exc:  # keep the sweep going, record the failure
                funceq = uc = cl = f"error:{type(exc).__name__}"
                any_failed = True
            rows.append([k, e, d, funceq, uc, cl])
    with open(out_dir / "summary.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["weight", "e", "d", "funceq", "unit_circle", "critical_line"])
        writer.writerows(rows)
    return 1 if any_failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetapoly",
        description="Exact zeta polynomials from cusp-form period polynomials, "
        "with Sturm certification and a truncated Habiro-ring engine.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("periods", help="odd period polynomial and its quotient U")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_periods)

    p = sub.add_parser("rv", help="zeta polynomial record with certificates")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_rv)

    p = sub.add_parser("certify", help="certificates only")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("habiro", help="run the Habiro-ring verification battery")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_habiro)

    p = sub.add_parser("lfun", help="completed L-values of the eigenform")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--prec-bits", type=int, default=128)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_lfun)

    p = sub.add_parser("report", help="sweep all weights and d = e+1..e+6")
    p.add_argument("--out-dir", default="report")
    p.add_argument("--prec-bits", type=int, default=128)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, habiro.LevelError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
