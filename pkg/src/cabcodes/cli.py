"""Command-line front end.

    cabcodes report --curve 'y^3=x^4+1' --field 2^3 --m 4
    cabcodes sweep --curve 'y^3=x^4+1' --field 7 --m-range 0:2
    cabcodes verify

Exit codes: 0 success, 2 validation error, 3 cap exceeded, 4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .code import (MAX_ENUMERATION, build_code, designed_bound_vacuous, designed_distance,
                   is_mds, minimum_distance)
from .curve import CabCurve, genus, parse_curve, parse_points, smoothness_check
from .errors import CapExceededError, ValidationError
from .field import parse_field
from .groups import DEFAULT_MAX_N, group_to_json, iso_hypothesis_check, paut, sn_expected
from .riemann_roch import Monomial, riemann_roch_dimension
from .worked_examples import verify_examples

EXIT_OK, EXIT_VALIDATION, EXIT_CAP, EXIT_VERIFY = 0, 2, 3, 4

SWEEP_COLUMNS = ["field", "curve", "m", "n", "k", "d", "d_designed", "mds",
                 "paut_order", "sn_expected", "rr_formula_k", "error"]


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _parse_monomial(text: str) -> Monomial:
    i = j = 0
    for part in text.strip().split("*"):
        part = part.strip()
        if part in ("", "1"):
            continue
        var, _, e = part.partition("^")
        e = int(e) if e else 1
        if var == "x":
            i += e
        elif var == "y":
            j += e
        else:
            raise ValidationError(f"cannot parse monomial {text!r}")
    return Monomial(i, j)


def load_curve(args) -> CabCurve:
    if args.coeffs:
        with open(args.coeffs) as fh:
            return CabCurve.from_json(json.load(fh))
    if not args.curve or not args.field:
        raise ValidationError("need --curve and --field, or --coeffs FILE")
    return parse_curve(args.curve, parse_field(args.field))


def code_report(curve: CabCurve, m: int, points=None, row_order=None,
                max_dist_enum: int = MAX_ENUMERATION, max_paut_n: int = DEFAULT_MAX_N,
                smooth_ext: int = 2) -> dict:
    """Full report for one code; raises on any failure (no partial reports)."""
    code = build_code(curve, m, point_order=points, row_order=row_order)
    d = minimum_distance(code, max_dist_enum)
    group = paut(code, max_n=max_paut_n)
    try:
        smooth = smoothness_check(curve, smooth_ext).to_json()
    except CapExceededError as exc:
        smooth = {"verdict": "unchecked", "reason": str(exc)}
    if m >= curve.b:
        iso = iso_hypothesis_check(curve, m, code.n).to_json()
    else:
        iso = {"applicable": False, "reason": f"needs m >= {curve.b}"}
    return {
        "curve": curve.to_json(),
        "genus": genus(curve),
        "n": code.n,
        "k": code.k,
        "d": d,
        "d_designed": designed_distance(code),
        "d_designed_vacuous": designed_bound_vacuous(code),
        "mds": is_mds(code, d),
        "gen": code.format_matrix(),
        "canon": code.format_matrix(code.canon),
        "provenance": code.provenance.to_json(),
        "smoothness": smooth,
        "paut": group_to_json(group),
        "sn_expected": sn_expected(code),
        "iso_hypothesis": iso,
    }


def _report_text(rep: dict) -> str:
    lines = [
        f"[n, k, d] = [{rep['n']}, {rep['k']}, {rep['d']}]  genus {rep['genus']}",
        f"designed distance {rep['d_designed']}" + (" (vacuous)" if rep["d_designed_vacuous"] else ""),
        f"MDS: {rep['mds']}",
        f"smoothness: {rep['smoothness']['verdict']}",
        f"PAut order {rep['paut']['order']}, cyclic {rep['paut']['cyclic']}, "
        f"abelian {rep['paut']['abelian']}",
    ]
    if rep["paut"]["element_orders"] is not None:
        lines.append(f"element orders {rep['paut']['element_orders']}")
    lines.append("generator matrix:")
    lines.extend(" ".join(row) for row in rep["gen"])
    lines.append("canonical form:")
    lines.extend(" ".join(row) for row in rep["canon"])
    return "\n".join(lines) + "\n"


def _emit(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
    elif fmt == "text":
        out.write(_report_text(doc))
    else:
        cols = ["n", "k", "d", "d_designed", "mds", "paut_order"]
        row = dict(doc, paut_order=doc["paut"]["order"])
        w = csv.DictWriter(out, fieldnames=cols, extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        w.writerow(row)


def cmd_report(args, out) -> int:
    curve = load_curve(args)
    points = None
    if args.points:
        with open(args.points) as fh:
            points = parse_points(fh.read(), curve)
    row_order = [_parse_monomial(t) for t in args.row_order.split(",")] if args.row_order else None
    rep = code_report(curve, args.m, points, row_order, args.max_dist_enum, args.max_paut_n)
    _emit(rep, args.format, out)
    return EXIT_OK


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValidationError(f"range must look like LO:HI (inclusive), got {text!r}")
    return range(int(lo), int(hi) + 1)


def sweep_rows(curves: Sequence[str], fields: Sequence[str], ms: range,
               max_dist_enum: int = MAX_ENUMERATION, max_paut_n: int = DEFAULT_MAX_N):
    """One row per (field, curve, m); failures land in the error column."""
    for ftxt in fields:
        field = parse_field(ftxt)
        for ctxt in curves:
            for m in ms:
                row = {c: "" for c in SWEEP_COLUMNS}
                row.update(field=ftxt, curve=ctxt, m=m)
                try:
                    curve = parse_curve(ctxt, field)
                    code = build_code(curve, m)
                    row.update(n=code.n, k=code.k, d_designed=designed_distance(code),
                               sn_expected=sn_expected(code))
                    rr = riemann_roch_dimension(curve, m)
                    row["rr_formula_k"] = "" if rr is None or m >= code.n else rr
                    d = minimum_distance(code, max_dist_enum)
                    row.update(d=d, mds=is_mds(code, d))
                    row["paut_order"] = paut(code, max_n=max_paut_n).order
                except (ValidationError, CapExceededError) as exc:
                    row["error"] = f"{type(exc).__name__}: {exc}"
                yield row


def cmd_sweep(args, out) -> int:
    ms = _parse_range(args.m_range)
    w = csv.DictWriter(out, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    w.writeheader()
    for row in sweep_rows(args.curve or [], args.field or [], ms,
                          args.max_dist_enum, args.max_paut_n):
        w.writerow(row)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    checks = verify_examples()
    width = max(len(c.name) for c in checks)
    for c in checks:
        out.write(f"{'PASS' if c.passed else 'FAIL'}  {c.name:<{width}}  {c.detail}\n")
    failed = [c.name for c in checks if not c.passed]
    out.write(f"{len(checks) - len(failed)}/{len(checks)} checks passed\n")
    return EXIT_OK if not failed else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cabcodes",
                                 description="Evaluation codes from C_{a,b} curves over finite fields.")
    sub = ap.add_subparsers(dest="command", required=True)

    def caps(p):
        p.add_argument("--max-dist-enum", type=_positive, default=MAX_ENUMERATION,
                       help="cap on q^k for exhaustive distance computation")
        p.add_argument("--max-paut-n", type=_positive, default=DEFAULT_MAX_N,
                       help="largest code length for the PAut search")

    rp = sub.add_parser("report", help="build one code and report its parameters")
    rp.add_argument("--curve", help="shorthand such as 'y^3=x^4+1' or 'y^3-y=x^4'")
    rp.add_argument("--coeffs", metavar="FILE", help="curve as JSON (includes the field)")
    rp.add_argument("--field", help="p^m, e.g. 2^3")
    rp.add_argument("--m", type=int, required=True, help="divisor multiplicity, G = m P_inf")
    rp.add_argument("--points", metavar="FILE", help="explicit point order, one 'x,y' per line")
    rp.add_argument("--row-order", help="comma-separated basis monomials, e.g. 'x,y,1'")
    rp.add_argument("--format", choices=["json", "csv", "text"], default="json")
    caps(rp)
    rp.set_defaults(func=cmd_report)

    sp = sub.add_parser("sweep", help="CSV sweep over fields, curves and m")
    sp.add_argument("--curve", action="append", help="curve shorthand (repeatable)")
    sp.add_argument("--field", action="append", help="p^m (repeatable)")
    sp.add_argument("--m-range", required=True, help="inclusive LO:HI; LO > HI is an empty sweep")
    sp.add_argument("--format", choices=["csv"], default="csv")
    caps(sp)
    sp.set_defaults(func=cmd_sweep)

    vp = sub.add_parser("verify", help="recompute the worked examples")
    vp.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except ValidationError as exc:
        code, err = EXIT_VALIDATION, exc
    except CapExceededError as exc:
        code, err = EXIT_CAP, exc
    except (OSError, json.JSONDecodeError) as exc:
        code, err = EXIT_VALIDATION, exc
    else:
        out.write(buf.getvalue())
        return code
    out.write(json.dumps({"error": {"type": type(err).__name__, "message": str(err),
                                    "exit_code": code}}) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
