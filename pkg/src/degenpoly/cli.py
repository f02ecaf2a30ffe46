"""Command-line front end.

Two subcommands:

* ``degenpoly compute`` builds one family (or the Stirling triangle, or a
  multiple polyexponential series) and emits a coefficient table as JSON
  (``{"meta": ..., "records": [...]}``) or CSV (flat ``n,monomial,coeff``
  projection, with an extra ``k`` column for the Stirling triangle).
* ``degenpoly verify`` runs identity checkers and emits a report as text or
  JSON.

Exit codes: 0 success / all cells passed, 1 at least one cell failed,
2 usage error.  Output is deterministic: identical invocations produce
byte-identical files.  Values are exact; symbolic lambda or argument is the
flag token ``sym`` / ``sym-x``, rationals are ``p/q`` or integer text, and
no floating point appears anywhere.

The only environment variable read is ``DEGENPOLY_OUT_DIR``, an optional
directory prefix for relative ``--out`` paths.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import __version__, families
from . import verify as verify_mod
from .degen import deg_multi_polyexp, stirling1_deg_recurrence
from .poly import MultiPoly, monomial_text

FAMILY_CHOICES = (
    "genocchi",
    "genocchi-r",
    "euler-r",
    "poly-genocchi",
    "multi-poly-genocchi",
    "stirling1",
    "multi-polyexp",
)

IDENTITY_CHOICES = ("thm1", "cor2", "thm3", "prop4", "eq15", "basics", "all")

STIRLING_FAMILY_ID = "Stirling1Deg"
POLYEXP_FAMILY_ID = "MultiPolyExpDeg"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenpoly",
        description="Exact degenerate Genocchi-type families: compute tables, verify identities.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="compute a family and emit a coefficient table")
    pc.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    pc.add_argument("--n-max", dest="n_max", type=int, default=8)
    pc.add_argument("--r", type=int, default=None, help="order (genocchi-r, euler-r)")
    pc.add_argument("--ks", default=None, help="comma-separated integer indices, e.g. 1,2")
    pc.add_argument("--lambda", dest="lam", default="sym", help="'sym' or a rational p/q")
    pc.add_argument(
        "--arg", default="sym-x", help="'sym-x' or a rational p/q (0 gives the numbers)"
    )
    pc.add_argument("--format", choices=("json", "csv"), default="json")
    pc.add_argument("--out", default="-", help="output path, or '-' for stdout")
    pc.set_defaults(func=cmd_compute)

    pv = sub.add_parser("verify", help="verify identities and emit a report")
    pv.add_argument("--identity", required=True, choices=IDENTITY_CHOICES)
    pv.add_argument("--n-max", dest="n_max", type=int, default=8)
    pv.add_argument("--r", default=None, help="restrict the sweep: an int or a range like 1-3")
    pv.add_argument(
        "--ks", default="sweep", help="comma-separated indices for one k-list, or 'sweep'"
    )
    pv.add_argument("--format", choices=("json", "text"), default="text")
    pv.add_argument("--out", default="-", help="output path, or '-' for stdout")
    # test hook: corrupts the x-argument multi-poly-Genocchi families
    pv.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    pv.set_defaults(func=cmd_verify)
    return parser


_RATIONAL_RE = re.compile(r"[+-]?\d+(/[1-9]\d*)?$")


def _parse_rational(text: str, what: str, parser: argparse.ArgumentParser) -> Fraction:
    # integer or p/q text only; no decimal notation anywhere
    if not _RATIONAL_RE.fullmatch(text):
        parser.error(f"{what} must be an integer or p/q, got {text!r}")
    return Fraction(text)


def _parse_ks(text: str, parser: argparse.ArgumentParser) -> tuple[int, ...]:
    try:
        ks = tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        parser.error(f"--ks must be comma-separated integers, got {text!r}")
    if not ks:
        parser.error("--ks must not be empty")
    return ks


def _parse_r_filter(text: str, parser: argparse.ArgumentParser) -> set[int]:
    try:
        if "-" in text[1:]:
            split_at = text.index("-", 1)
            lo, hi = int(text[:split_at]), int(text[split_at + 1 :])
            if lo > hi:
                raise ValueError
            return set(range(lo, hi + 1))
        return {int(text)}
    except ValueError:
        parser.error(f"--r must be an int or a range like 1-3, got {text!r}")


def _out_path(out: str) -> str | None:
    """Resolve --out; None means stdout."""
    if out in ("-", "stdout"):
        return None
    base = os.environ.get("DEGENPOLY_OUT_DIR")
    if base and not os.path.isabs(out):
        return os.path.join(base, out)
    return out


def _write_text(text: str, out: str) -> None:
    path = _out_path(out)
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _poly_record(
    family_id: str, params: dict, n: int, value: MultiPoly, k: int | None = None
) -> dict:
    record: dict = {"family_id": family_id, "params": params, "n": n}
    if k is not None:
        record["k"] = k
    record["value"] = str(value)
    record["value_terms"] = [
        [monomial_text(exps), str(coeff)] for exps, coeff in value.sorted_terms()
    ]
    return record


def _render_csv(records: list[dict]) -> str:
    has_k = any("k" in record for record in records)
    lines = ["n,k,monomial,coeff" if has_k else "n,monomial,coeff"]
    for record in records:
        prefix = f"{record['n']},{record['k']}" if has_k else str(record["n"])
        terms = record["value_terms"] or [["1", "0"]]
        for monomial, coeff in terms:
            lines.append(f"{prefix},{monomial},{coeff}")
    return "\n".join(lines) + "\n"


def cmd_compute(args, parser: argparse.ArgumentParser) -> int:
    if args.n_max < 0:
        parser.error("--n-max must be nonnegative")
    family = args.family
    lam: Fraction | None = (
        None if args.lam == "sym" else _parse_rational(args.lam, "--lambda", parser)
    )
    ks = _parse_ks(args.ks, parser) if args.ks is not None else None

    needs_ks = family in ("poly-genocchi", "multi-poly-genocchi", "multi-polyexp")
    if needs_ks and ks is None:
        parser.error(f"--family {family} requires --ks")
    if not needs_ks and ks is not None:
        parser.error(f"--family {family} does not take --ks")
    if family == "poly-genocchi" and len(ks) != 1:
        parser.error("--family poly-genocchi takes exactly one index in --ks")
    if family in ("genocchi-r", "euler-r"):
        if args.r is None or args.r < 1:
            parser.error(f"--family {family} requires --r >= 1")
    elif args.r is not None:
        if ks is None or args.r != len(ks):
            parser.error(f"--r does not apply to --family {family} (or mismatches --ks)")
    if family in ("stirling1", "multi-polyexp") and args.arg != "sym-x":
        parser.error(f"--family {family} does not take --arg")

    meta = {
        "version": __version__,
        "command": "compute",
        "family": family,
        "n_max": args.n_max,
        "r": args.r,
        "ks": list(ks) if ks else None,
        "lambda": args.lam,
        "arg": args.arg,
        "format": args.format,
    }

    def finish(value: MultiPoly) -> MultiPoly:
        return value if lam is None else value.substitute("lambda", lam)

    records: list[dict] = []
    try:
        if family == "stirling1":
            params = {"r": None, "ks": None, "argument": None, "lambda": args.lam}
            table = stirling1_deg_recurrence(args.n_max)
            for n in range(args.n_max + 1):
                for k in range(n + 1):
                    records.append(
                        _poly_record(STIRLING_FAMILY_ID, params, n, finish(table.value(n, k)), k=k)
                    )
        elif family == "multi-polyexp":
            params = {"r": len(ks), "ks": list(ks), "argument": None, "lambda": args.lam}
            series = deg_multi_polyexp(ks, args.n_max)
            for n in range(args.n_max + 1):
                records.append(
                    _poly_record(POLYEXP_FAMILY_ID, params, n, finish(series.coeffs[n]))
                )
        else:
            argument = (
                "x" if args.arg == "sym-x" else _parse_rational(args.arg, "--arg", parser)
            )
            if family == "genocchi":
                fam = families.genocchi_deg(argument, args.n_max)
            elif family == "genocchi-r":
                fam = families.genocchi_deg_order(args.r, argument, args.n_max)
            elif family == "euler-r":
                fam = families.euler_deg_order(args.r, argument, args.n_max)
            elif family == "poly-genocchi":
                fam = families.poly_genocchi_deg(ks[0], argument, args.n_max)
            else:
                fam = families.multi_poly_genocchi_deg(ks, argument, args.n_max)
            params = {
                "r": fam.r,
                "ks": list(fam.ks) if fam.ks else None,
                "argument": args.arg,
                "lambda": args.lam,
            }
            for n, value in enumerate(fam.values):
                records.append(_poly_record(fam.family_id, params, n, finish(value)))
    except ValueError as exc:
        parser.error(str(exc))

    if args.format == "json":
        text = _render_json({"meta": meta, "records": records})
    else:
        text = _render_csv(records)
    _write_text(text, args.out)
    return 0


def _render_report_text(reports: list[verify_mod.VerifyReport], passed: bool) -> str:
    lines = []
    for report in reports:
        params = " ".join(f"{key}={_fmt_param(value)}" for key, value in report.params)
        failed = [cell for cell in report.cells if not cell.passed]
        status = "PASS" if not failed else "FAIL"
        suffix = f" failed={len(failed)}" if failed else ""
        lines.append(f"{status} {report.identity_id} {params} cells={len(report.cells)}{suffix}")
        for cell in failed:
            cell_params = " ".join(f"{key}={_fmt_param(value)}" for key, value in cell.params)
            lines.append(f"  cell {cell_params}")
            lines.append(f"    lhs: {cell.lhs}")
            lines.append(f"    rhs: {cell.rhs}")
    total = len(reports)
    if passed:
        lines.append(f"all {total} reports passed")
    else:
        bad = sum(1 for report in reports if not report.passed)
        lines.append(f"{bad} of {total} reports FAILED")
    return "\n".join(lines) + "\n"


def _fmt_param(value) -> str:
    if isinstance(value, tuple):
        return ",".join(str(v) for v in value)
    return str(value)


def cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    if args.n_max < 0:
        parser.error("--n-max must be nonnegative")
    r_filter = _parse_r_filter(args.r, parser) if args.r is not None else None
    if args.ks == "sweep":
        k_lists = None
        if r_filter is not None:
            k_lists = [ks for ks in verify_mod.default_k_lists() if len(ks) in r_filter]
            if not k_lists:
                parser.error("no sweep k-lists match --r")
    else:
        k_lists = [_parse_ks(args.ks, parser)]
        if r_filter is not None and len(k_lists[0]) not in r_filter:
            parser.error("--r does not match the length of --ks")

    memo = verify_mod.FamilyMemo(corrupt=args.corrupt)
    try:
        reports = verify_mod.run_identity(args.identity, args.n_max, k_lists, memo)
    except ValueError as exc:
        parser.error(str(exc))
    passed = all(report.passed for report in reports)

    if args.format == "json":
        meta = {
            "version": __version__,
            "command": "verify",
            "identity": args.identity,
            "n_max": args.n_max,
            "r": args.r,
            "ks": args.ks,
            "format": args.format,
        }
        payload = {
            "meta": meta,
            "passed": passed,
            "reports": [report.to_dict() for report in reports],
        }
        text = _render_json(payload)
    else:
        text = _render_report_text(reports, passed)
    _write_text(text, args.out)
    return 0 if passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    raise SystemExit(main())
