"""Command line front end.

Every command builds a RunReport and serializes it as JSON, CSV or aligned
text.  Exit status is 0 on success, 1 when a verification fails and 2 on
invalid input.  Rationals are always written as exact "p/q" strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .hilbert import Variant
from .humbert import (component_count, humbert_equation, involution_reps,
                      ramification_divisor, ramification_total, survey_agrees)
from .jacobi import dim_table, trace_table, trace_wd_printed, trivial_eigenspace_scan
from .numtheory import divisors, is_squarefree, qr_solvable, unitary_divisors, xi_element
from .orthogonal import LatticeVector
from .suites import SUITES, SuiteVerdict, hilbert_case

EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2
U64 = 2 ** 64


@dataclass
class RunReport:
    command: str
    params: dict = field(default_factory=dict)
    rows: list = field(default_factory=list)
    suites: list = field(default_factory=list)   # SuiteVerdict

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "rows": self.rows,
            "suites": [{"name": s.name, "trials": s.trials, "pass": s.passed,
                        "witness": s.witness, "params": s.params} for s in self.suites],
        }


def plain(value):
    """JSON-ready copy with Fractions as "p/q" and sets sorted."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        raise TypeError("floating point values are not allowed in reports")
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return [plain(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return str(value)


def _cell(value) -> str:
    value = plain(value)
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _table(report: RunReport):
    """Header and rows for the flat formats; suite verdicts become rows too."""
    rows = list(report.rows)
    rows += [{"suite": s.name, "trials": s.trials, "pass": s.passed, "witness": s.witness}
             for s in report.suites]
    header = []
    for row in rows:
        header += [k for k in row if k not in header]
    return header, [[_cell(row.get(k)) for k in header] for row in rows]


def serialize(report: RunReport, fmt: str) -> bytes:
    if fmt == "json":
        text = json.dumps(plain(report.as_dict()), sort_keys=True, indent=2,
                          ensure_ascii=False) + "\n"
    elif fmt == "csv":
        header, rows = _table(report)
        buf = io.StringIO()
        if header:
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
        text = buf.getvalue()
    elif fmt == "text":
        text = _render_text(report)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return text.encode("utf-8")


def _render_text(report: RunReport) -> str:
    lines = []
    if report.params:
        lines.append(f"# {report.command} " + " ".join(
            f"{k}={_cell(v)}" for k, v in report.params.items()))
    header, rows = _table(report)
    if header:
        widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
        lines.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
        for r in rows:
            lines.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + ("\n" if lines else "")


# ---- commands ---------------------------------------------------------------

def _positive(name: str, value: int):
    if value < 1:
        raise ValueError(f"{name} must be positive")


def cmd_xi(args) -> RunReport:
    t = args.t
    _positive("t", t)
    report = RunReport("xi", {"t": t, "xi_group": [xi_element(t, d).value
                                                  for d in unitary_divisors(t)]})
    report.params["xi_group"].sort()
    report.rows = [{"d": d, "xi": xi_element(t, d).value} for d in unitary_divisors(t)]
    return report


def cmd_dims(args) -> RunReport:
    t = args.t
    _positive("t", t)
    report = RunReport("dims", {"t": t, "weight": 3})
    for row in trace_table(t):
        entry = {"table": "trace", "d": row.d, "trace": row.trace}
        if is_squarefree(t):
            entry["trace_printed"] = trace_wd_printed(t, row.d)
        report.rows.append(entry)
    for row in dim_table(t):
        report.rows.append({"table": "dim", "pattern": row.pattern,
                            "signs": {str(q): s for q, s in row.signs.items()},
                            "dim": row.dim})
    return report


def _signs_text(signs: dict) -> str:
    return ",".join(f"{q}:{'+' if s > 0 else '-'}" for q, s in signs.items())


def cmd_scan_trivial(args) -> RunReport:
    _positive("--max-t", args.max_t)
    scan = trivial_eigenspace_scan(args.max_t)
    report = RunReport("scan-trivial", {"max_t": args.max_t,
                                        "zero_dimension": scan.zero_dimension,
                                        "pair_count": len(scan.pairs)})
    report.rows = [{"t": t, "signs": _signs_text(signs), "dim": 0} for t, signs in scan.pairs]
    return report


def cmd_humbert(args) -> RunReport:
    t, delta = args.t, args.delta
    _positive("t", t)
    _positive("--delta", delta)
    report = RunReport("humbert", {"t": t, "delta": delta,
                                   "components": component_count(t, delta)})
    for b in range(2 * t):
        if (b * b - delta) % (4 * t):
            continue
        # a = 1 makes the vector primitive; c is then forced by the discriminant
        c = (b * b - delta) // (4 * t)
        comp = humbert_equation(LatticeVector([0, 1, Fraction(-b, 2 * t), c, 0]), t)
        te, ta, bb, cc, f = comp.equation
        report.rows.append({"b": b, "ell": list(comp.ell.coords),
                            "equation": f"{ta}*tau1 + {bb}*tau2 + {cc}*tau3 = 0",
                            "discriminant": comp.discriminant})
    return report


def cmd_ramification(args) -> RunReport:
    t = args.t
    _positive("t", t)
    if not is_squarefree(t):
        raise ValueError("the classification needs square-free t")
    ds = divisors(t)
    if args.d is not None:
        if args.d < 1 or t % args.d:
            raise ValueError(f"{args.d} does not divide {t}")
        ds = [args.d]
    total = ramification_total(t)
    report = RunReport("ramification", {"t": t, "distinct": total.distinct})
    for d in ds:
        discs = ramification_divisor(t, d)
        witnesses = []
        if qr_solvable(d, t // d):
            witnesses = [{"kind": r.kind, "abc": list(r.abc), "ell": list(r.ell.coords),
                          "discriminant": r.discriminant} for r in involution_reps(t, d)]
        report.rows.append({"d": d, "discriminants": sorted(discs),
                            "components": {str(D): component_count(t, D) for D in sorted(discs)},
                            "witnesses": witnesses})
    if args.oracle:
        bound = args.bound if args.bound is not None else 10 * t
        ok, survey = survey_agrees(t, bound)
        report.params["oracle_bound"] = bound
        report.params["oracle_consistent"] = ok
        verdict = SuiteVerdict("lemma3-8-oracle", trials=len(survey.entries),
                               params={"t": t, "bound": bound})
        if not ok:
            verdict.fail(survey={str(d): sorted(e.discriminants)
                                 for d, e in survey.entries.items()})
        report.suites.append(verdict)
    return report


def cmd_hilbert_check(args) -> RunReport:
    verdict = hilbert_case(args.t, args.variant, seed=args.seed)
    report = RunReport("hilbert-check", {"t": args.t, "variant": args.variant,
                                         "seed": args.seed})
    report.suites.append(verdict)
    return report


def cmd_verify(args) -> RunReport:
    verdict = SUITES[args.suite](args.seed, args.bound)
    report = RunReport("verify", {"suite": args.suite, "seed": args.seed,
                                  "bound": args.bound})
    report.suites.append(verdict)
    return report


# ---- argument parsing -------------------------------------------------------

def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < U64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=_seed, default=0)
    common.add_argument("--bound", type=int, default=None)
    common.add_argument("--out", default=None, help="write the report here instead of stdout")

    parser = argparse.ArgumentParser(prog="paramodular",
                                     description="Exact computations for paramodular groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("xi", parents=[common], help="the group Xi(t) and its xi_d table")
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("dims", parents=[common], help="W_d traces and eigenspace dimensions")
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("scan-trivial", parents=[common],
                       help="indices with a vanishing eigenspace")
    p.add_argument("--max-t", type=int, required=True)
    p.set_defaults(func=cmd_scan_trivial)

    p = sub.add_parser("humbert", parents=[common], help="components of H_delta")
    p.add_argument("t", type=int)
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=cmd_humbert)

    p = sub.add_parser("ramification", parents=[common],
                       help="Humbert surfaces fixed by involutions in each coset")
    p.add_argument("t", type=int)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against a brute-force reflection survey")
    p.set_defaults(func=cmd_ramification)

    p = sub.add_parser("hilbert-check", parents=[common],
                       help="identities for the Hilbert modular embedding")
    p.add_argument("t", type=int)
    p.add_argument("--variant", choices=[v.value for v in Variant], required=True)
    p.set_defaults(func=cmd_hilbert_check)

    p = sub.add_parser("verify", parents=[common], help="run a named property suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout.buffer
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        report = args.func(args)
    except ValueError as exc:
        print(f"paramodular: error: {exc}", file=stderr)
        return EXIT_INVALID
    data = serialize(report, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        stdout.write(data)
        stdout.flush()
    return EXIT_OK if report.passed else EXIT_FAILED


def main() -> None:
    sys.exit(run())
