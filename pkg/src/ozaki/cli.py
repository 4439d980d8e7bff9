"""Command-line front end: construction, evaluation, and verification.

Every invocation prints one machine-readable envelope to standard output::

    {"tool_version": ..., "command_echo": ..., "seed": ..., "payload": ..., "status": ...}

Exit status 0 means ok, 2 means a ledger bound check failed, 1 means a
usage or input error (with a one-line diagnostic on standard error).
Floats are printed with 17 significant digits so output round-trips through
text; rational bounds appear both as "num/den" strings and as decimals.
Complex payload values are emitted as plain numbers when the imaginary part
is zero, else as [re, im] pairs.  Field order is fixed, so repeating a
command with the same seed yields byte-identical output.
"""

from __future__ import annotations

import argparse
import io
import csv
import json
import math
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .classes import (CaratheodoryCoeffs, ClassLabel, SchwarzCoeffs,
                      build_member, build_member_from_caratheodory,
                      coeffs_from_caratheodory_direct,
                      coeffs_from_schwarz_direct, extremal_member,
                      EXTREMAL_NAMES)
from .functionals import full_report
from .gridsearch import grid_extremize
from .ledger import LEDGER, check_extremals
from .objectives import OBJECTIVES, ObjectiveId
from .sampling import SampleConfig, sample_and_check

__all__ = ["main", "run", "emit"]

_VERIFY_TOL = 1e-12
_SAMPLE_TOL = 1e-9


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit code 1 for usage problems, not argparse's 2
        raise _UsageError(message)


# ----------------------------------------------------------------------
# serialization

def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x} in output")
    return f"{x:.17g}"


def _jsonval(value: Any, indent: int) -> str:
    pad = " " * indent
    inner = " " * (indent + 2)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = ",\n".join(
            f"{inner}{json.dumps(str(k))}: {_jsonval(v, indent + 2)}"
            for k, v in value.items())
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = ",\n".join(f"{inner}{_jsonval(v, indent + 2)}" for v in value)
        return "[\n" + items + "\n" + pad + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt_float(value)
    if isinstance(value, str):
        return json.dumps(value)
    if value is None:
        return "null"
    raise TypeError(f"cannot serialize {type(value)}")


def _num(z: complex) -> Any:
    """Complex as a plain number when real, else as an [re, im] pair."""
    z = complex(z)
    if z.imag == 0.0:
        return z.real
    return [z.real, z.imag]


def _frac(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def emit(envelope: dict, fmt: str) -> str:
    """Serialize an output envelope to JSON or CSV text."""
    if fmt == "json":
        return _jsonval(envelope, 0) + "\n"
    if fmt == "csv":
        rows = envelope["payload"].get("_csv")
        if rows is None:
            raise _UsageError("csv format applies to sample and optimize output only")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in rows:
            writer.writerow([_fmt_float(v) if isinstance(v, float) else v
                             for v in row])
        return buf.getvalue()
    raise _UsageError(f"unknown format {fmt!r}")


def _envelope(command: str, payload: dict, status: str,
              seed: int | None = None) -> dict:
    env: dict[str, Any] = {"tool_version": __version__, "command_echo": command}
    if seed is not None:
        env["seed"] = seed
    env["payload"] = payload
    env["status"] = status
    return env


# ----------------------------------------------------------------------
# argument handling

def _parse_complex_list(text: str) -> tuple[complex, ...]:
    """Parse 're:im,re:im,...'; a bare 're' means imaginary part zero."""
    out = []
    for part in text.split(","):
        bits = part.strip().split(":")
        try:
            if len(bits) == 1:
                out.append(complex(float(bits[0]), 0.0))
            elif len(bits) == 2:
                out.append(complex(float(bits[0]), float(bits[1])))
            else:
                raise ValueError
        except ValueError:
            raise _UsageError(f"cannot parse complex entry {part!r}; "
                              "expected re or re:im") from None
    return tuple(out)


def _class_of(tag: str) -> ClassLabel:
    return ClassLabel.F if tag == "F" else ClassLabel.G


def _build_parser() -> _Parser:
    parser = _Parser(prog="ozaki",
                     description="Coefficient functionals and sharp-bound "
                                 "verification for the Ozaki close-to-convex "
                                 "classes F and G.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("extremal", help="coefficients of an extremal function")
    p.add_argument("name", choices=EXTREMAL_NAMES)
    p.add_argument("--order", type=int, default=8)
    add_format(p)

    p = sub.add_parser("coeffs", help="initial coefficients from Schwarz or "
                                      "Caratheodory data")
    p.add_argument("--class", dest="label", choices=("F", "G"), required=True)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--schwarz", help="c1,c2,... as re:im,re:im,...")
    src.add_argument("--caratheodory", help="p1,p2,... as re:im,re:im,...")
    p.add_argument("--order", type=int, default=8)
    add_format(p)

    p = sub.add_parser("report", help="all coefficient functionals of one function")
    p.add_argument("--extremal", choices=EXTREMAL_NAMES)
    p.add_argument("--class", dest="label", choices=("F", "G"))
    p.add_argument("--schwarz")
    p.add_argument("--caratheodory")
    p.add_argument("--order", type=int, default=8)
    add_format(p)

    p = sub.add_parser("verify", help="sharpness of every ledger bound at its witness")
    p.add_argument("--class", dest="label", choices=("F", "G", "all"), default="all")
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--tol", type=float, default=_VERIFY_TOL)
    add_format(p)

    p = sub.add_parser("optimize", help="grid extremization of the reduced objectives")
    p.add_argument("--objective", default="all",
                   choices=tuple(o.value for o in ObjectiveId) + ("all",))
    p.add_argument("--resolution", type=int, default=2000)
    p.add_argument("--refine", type=int, default=3)
    add_format(p)

    p = sub.add_parser("sample", help="randomized bound-violation search")
    p.add_argument("--class", dest="label", choices=("F", "G"), required=True)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-zeros", type=int, default=3)
    p.add_argument("--no-extremals", action="store_true",
                   help="do not inject the class extremals")
    p.add_argument("--tol", type=float, default=_SAMPLE_TOL)
    add_format(p)

    return parser


# ----------------------------------------------------------------------
# subcommand payloads

def _payload_extremal(args) -> tuple[dict, str]:
    member = extremal_member(args.name, args.order)
    payload = {
        "name": args.name,
        "label": member.label.value,
        "order": member.order,
        "coefficients": [_num(c) for c in member.f.series.coeffs],
    }
    return payload, "ok"


def _member_from_args(args):
    if getattr(args, "extremal", None):
        return extremal_member(args.extremal, args.order), {"extremal": args.extremal}
    if args.label is None or not (args.schwarz or args.caratheodory):
        raise _UsageError("need --extremal, or --class with --schwarz/--caratheodory")
    label = _class_of(args.label)
    if args.schwarz:
        w = SchwarzCoeffs(_parse_complex_list(args.schwarz))
        member = build_member(label, w, args.order)
        src = {"source": "schwarz", "input": [_num(c) for c in w.c]}
    else:
        p = CaratheodoryCoeffs(_parse_complex_list(args.caratheodory))
        member = build_member_from_caratheodory(label, p, args.order)
        src = {"source": "caratheodory", "input": [_num(v) for v in p.p]}
    return member, src


def _payload_coeffs(args) -> tuple[dict, str]:
    label = _class_of(args.label)
    member, src = _member_from_args(args)
    if args.schwarz:
        direct = coeffs_from_schwarz_direct(label, SchwarzCoeffs(
            _parse_complex_list(args.schwarz)))
    else:
        direct = coeffs_from_caratheodory_direct(label, CaratheodoryCoeffs(
            _parse_complex_list(args.caratheodory)))
    payload = {
        "label": args.label,
        **src,
        "order": member.order,
        "a2": _num(member.coeff(2)),
        "a3": _num(member.coeff(3)),
        "a4": _num(member.coeff(4)),
        "direct_formula": {"a2": _num(direct[0]), "a3": _num(direct[1]),
                           "a4": _num(direct[2])},
        "series": [_num(c) for c in member.f.series.coeffs],
    }
    return payload, "ok"


def _payload_report(args) -> tuple[dict, str]:
    member, src = _member_from_args(args)
    r = full_report(member)
    payload = {
        "label": member.label.value,
        **src,
        "order": member.order,
        "a2": _num(r.a2), "a3": _num(r.a3), "a4": _num(r.a4),
        "A2": _num(r.A2), "A3": _num(r.A3), "A4": _num(r.A4),
        "gamma1": _num(r.gamma1), "gamma2": _num(r.gamma2),
        "Gamma1": _num(r.Gamma1), "Gamma2": _num(r.Gamma2),
        "Gamma3": _num(r.Gamma3),
        "S3": _num(r.S3), "S4": _num(r.S4),
        "T21_log": r.T21_log,
        "diff_A": r.diff_A, "diff_Gamma": r.diff_Gamma,
    }
    return payload, "ok"


def _payload_verify(args) -> tuple[dict, str]:
    labels = None if args.label == "all" else (_class_of(args.label),)
    rows = check_extremals(labels=labels, order=args.order)
    wanted = LEDGER if labels is None else tuple(
        e for e in LEDGER if e.label in labels)
    entries = []
    worst = 0.0
    failures = 0
    by_key = {(r.label, r.functional, r.side): r for r in rows}
    for entry in wanted:
        checks = []
        for chk in entry.checks:
            r = by_key[(entry.label, entry.functional, chk.side)]
            ok = abs(r.residual) <= args.tol
            failures += 0 if ok else 1
            worst = max(worst, abs(r.residual))
            checks.append({
                "side": chk.side,
                "bound": _frac(chk.bound),
                "bound_value": float(chk.bound),
                "witness": chk.witness,
                "computed": r.computed,
                "residual": r.residual,
                "ok": ok,
            })
        entries.append({
            "label": entry.label.value,
            "functional": entry.functional,
            "kind": entry.kind,
            "checks": checks,
        })
    payload = {
        "order": args.order,
        "tolerance": args.tol,
        "entry_count": len(entries),
        "entries": entries,
        "max_abs_residual": worst,
        "failures": failures,
    }
    return payload, ("ok" if failures == 0 else "bound_violation")


def _payload_optimize(args) -> tuple[dict, str]:
    if args.objective == "all":
        ids = list(OBJECTIVES)
    else:
        ids = [ObjectiveId(args.objective)]
    results = []
    csv_rows = [("objective", "mode", "value", "arg_u", "arg_v",
                 "paper_value", "gap", "resolution", "refine")]
    for oid in ids:
        res = grid_extremize(oid, resolution=args.resolution,
                             refine_iters=args.refine)
        results.append({
            "objective": oid.value,
            "mode": res.mode,
            "value": res.value,
            "argpoint": [res.argpoint[0], res.argpoint[1]],
            "paper": _frac(res.paper_value),
            "paper_value": float(res.paper_value),
            "gap": res.gap,
        })
        csv_rows.append((oid.value, res.mode, res.value, res.argpoint[0],
                         res.argpoint[1], float(res.paper_value), res.gap,
                         args.resolution, args.refine))
    payload = {
        "resolution": args.resolution,
        "refine": args.refine,
        "results": results,
        "_csv": csv_rows,
    }
    return payload, "ok"


def _payload_sample(args) -> tuple[dict, str]:
    cfg = SampleConfig(label=_class_of(args.label), count=args.samples,
                       order=args.order, seed=args.seed,
                       blaschke_max_zeros=args.max_zeros,
                       include_extremals=not args.no_extremals,
                       violation_tolerance=args.tol)
    report = sample_and_check(cfg)
    bounded = {(c.functional, c.side): c for c in report.checks}
    csv_rows: list[tuple] = [("name", "empirical_min", "empirical_max",
                              "bound", "margin")]
    functionals = []
    for name, lo, hi in report.stats:
        functionals.append({"name": name, "min": lo, "max": hi})
        sides = [(f, s) for (f, s) in bounded if f == name]
        if sides:
            for f, s in sides:
                c = bounded[(f, s)]
                csv_rows.append((f"{name}_{s}", lo, hi, float(c.bound), c.margin))
        else:
            csv_rows.append((name, lo, hi, "", ""))
    checks = [{
        "functional": c.functional,
        "side": c.side,
        "bound": _frac(c.bound),
        "bound_value": float(c.bound),
        "empirical": c.empirical,
        "margin": c.margin,
        "violations": c.violations,
    } for c in report.checks]
    payload = {
        "label": args.label,
        "count": report.count,
        "order": report.order,
        "max_zeros": report.blaschke_max_zeros,
        "include_extremals": report.include_extremals,
        "tolerance": report.violation_tolerance,
        "functionals": functionals,
        "checks": checks,
        "worst_margin": report.worst_margin,
        "total_violations": report.total_violations,
        "inverse_crosscheck_residual": report.inverse_crosscheck_residual,
        "_csv": csv_rows,
    }
    return payload, ("ok" if report.ok else "bound_violation")


_DISPATCH = {
    "extremal": _payload_extremal,
    "coeffs": _payload_coeffs,
    "report": _payload_report,
    "verify": _payload_verify,
    "optimize": _payload_optimize,
    "sample": _payload_sample,
}


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Execute one command line; returns (exit status, output text)."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    payload, status = _DISPATCH[args.subcommand](args)
    seed = getattr(args, "seed", None)
    command = " ".join(argv)
    payload_out = {k: v for k, v in payload.items() if k != "_csv"}
    if args.format == "csv":
        text = emit({"payload": payload}, "csv")
    else:
        text = emit(_envelope(command, payload_out, status, seed=seed), "json")
    code = 0 if status == "ok" else 2
    return code, text


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        code, text = run(argv)
    except _UsageError as exc:
        print(f"ozaki: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError) as exc:
        print(f"ozaki: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
