"""Command-line front end.

    stirling-id triangle --family stirling_second --rows 5 --format csv
    stirling-id check --identity all --nmax 40
    stirling-id transform --direction roundtrip --terms 7 -3 0 2 5
    stirling-id oracle-compare --partitions 12 --cycles 9 --subsets 20
    stirling-id replay-proof --p 1 --nmax 10

Exit codes: 0 everything holds, 1 a mathematical counterexample, 2 usage or
resource-limit error. Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass

from . import oracles
from .errors import ResourceLimitError
from .exact_numbers import TriangleFamily, TriangleTable, build_triangle
from .identities import ALL_IDENTITIES, MAX_SWEEP_N, CheckReport, IdentityId, Tables, sweep
from .transforms import (
    replay_proof_identity_2,
    stirling_first_signed_transform,
    stirling_second_transform,
    verify_inversion_roundtrip,
)

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2
MAX_CLI_ROWS = 500
FORMATS = ("plain", "csv", "json")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- rendering


def render_triangle(table: TriangleTable, fmt: str) -> str:
    rows = [[str(x) for x in row] for row in table.rows]
    if fmt == "json":
        doc = {"family": table.family.value, "n_max": table.n_max, "rows": rows}
        return json.dumps(doc) + "\n"
    sep = "," if fmt == "csv" else " "
    return "".join(sep.join(row) + "\n" for row in rows)


def _counterexample_dict(report: CheckReport) -> dict | None:
    cx = report.counterexample
    if cx is None:
        return None
    return {"n": cx.n, "p": cx.p, "lhs": str(cx.sides.lhs), "rhs": str(cx.sides.rhs), "variant": cx.variant}


def render_reports(reports: list[CheckReport], n_max: int, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "n_max": n_max,
            "all_passed": all(r.passed for r in reports),
            "reports": [
                {
                    "identity": r.identity.value,
                    "status": r.status,
                    "cases_checked": r.cases_checked,
                    "counterexample": _counterexample_dict(r),
                }
                for r in reports
            ],
        }
        return json.dumps(doc) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["identity", "status", "cases_checked", "n", "p", "lhs", "rhs", "variant"])
        for r in reports:
            cx = _counterexample_dict(r) or {}
            w.writerow([r.identity.value, r.status, r.cases_checked]
                       + ["" if cx.get(f) is None else cx[f] for f in ("n", "p", "lhs", "rhs", "variant")])
        return buf.getvalue()
    lines = []
    for r in reports:
        line = f"{r.identity.value} {r.status.upper()} cases={r.cases_checked}"
        cx = r.counterexample
        if cx is not None:
            line += f" n={cx.n} p={cx.p} lhs={cx.sides.lhs} rhs={cx.sides.rhs}"
            if cx.variant:
                line += f" variant={cx.variant}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def render_sequence(seq: list[int], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([str(x) for x in seq]) + "\n"
    return ("," if fmt == "csv" else " ").join(map(str, seq)) + "\n"


# ---------------------------------------------------------------- parsing


def parse_identities(values: list[str] | None) -> list[IdentityId]:
    tokens = [tok for v in (values or ["all"]) for tok in re.split(r"[,\s]+", v) if tok]
    if not tokens or "all" in (t.lower() for t in tokens):
        if len(tokens) > 1:
            raise UsageError("'all' cannot be combined with other identities")
        return list(ALL_IDENTITIES)
    out = []
    for tok in tokens:
        try:
            ident = IdentityId(tok.upper())
        except ValueError:
            raise UsageError(f"unknown identity {tok!r}; choose from {[i.value for i in ALL_IDENTITIES]} or all")
        if ident not in out:
            out.append(ident)
    return out


def parse_terms(values: list[str]) -> list[int]:
    tokens = [tok for v in values for tok in re.split(r"[,\s]+", v.strip()) if tok]
    if not tokens:
        raise UsageError("at least one term is required")
    try:
        return [int(tok) for tok in tokens]
    except ValueError as exc:
        raise UsageError(f"terms must be decimal integers: {exc}")


# ---------------------------------------------------------------- oracle comparison


@dataclass(frozen=True)
class OracleComparison:
    entries_compared: int
    disagreement: tuple[str, int, int, int, int] | None = None  # family, n, k, table, oracle

    @property
    def agreed(self) -> bool:
        return self.disagreement is None


def compare_with_oracles(
    n_partitions: int, n_cycles: int, n_subsets: int, tables: Tables | None = None
) -> OracleComparison:
    """Check every triangle entry against its enumeration oracle; stop at the first mismatch."""
    for n, cap, what in (
        (n_partitions, oracles.PARTITION_CAP, "partitions"),
        (n_cycles, oracles.CYCLE_CAP, "cycles"),
        (n_subsets, oracles.SUBSET_CAP, "subsets"),
    ):
        if n < 0:
            raise UsageError(f"--{what} must be nonnegative")
        if n > cap:
            raise ResourceLimitError(f"--{what} {n} exceeds oracle cap {cap}")
    if tables is None:
        tables = Tables.build(max(n_partitions, n_cycles, n_subsets))
    plan = (
        (TriangleFamily.STIRLING_SECOND, n_partitions, oracles.count_set_partitions),
        (TriangleFamily.STIRLING_FIRST_UNSIGNED, n_cycles, oracles.count_permutations_by_cycles),
        (TriangleFamily.BINOMIAL, n_subsets, oracles.count_subsets),
    )
    compared = 0
    for family, n_max, oracle in plan:
        table = tables.table(family)
        for n in range(n_max + 1):
            for k in range(n + 1):
                compared += 1
                got, want = table.entry(n, k), oracle(n, k)
                if got != want:
                    return OracleComparison(compared, (family.value, n, k, got, want))
    return OracleComparison(compared)


# ---------------------------------------------------------------- commands


def cmd_triangle(args, out) -> int:
    if args.rows < 0 or args.rows > MAX_CLI_ROWS:
        raise UsageError(f"--rows must be in 0..{MAX_CLI_ROWS}, got {args.rows}")
    out.write(render_triangle(build_triangle(args.family, args.rows), args.format))
    return EXIT_OK


def cmd_check(args, out) -> int:
    if args.nmax < 0 or args.nmax > MAX_SWEEP_N:
        raise UsageError(f"--nmax must be in 0..{MAX_SWEEP_N}, got {args.nmax}")
    identities = parse_identities(args.identity)
    tables = Tables.build(args.nmax + 2)
    reports = [sweep(i, args.nmax, tables=tables) for i in identities]
    out.write(render_reports(reports, args.nmax, args.format))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_COUNTEREXAMPLE


def cmd_transform(args, out) -> int:
    terms = parse_terms(args.terms)
    if args.direction == "roundtrip":
        ok = verify_inversion_roundtrip(terms)
        out.write("ROUNDTRIP-OK\n" if ok else "ROUNDTRIP-FAIL\n")
        return EXIT_OK if ok else EXIT_COUNTEREXAMPLE
    fn = stirling_first_signed_transform if args.direction == "to_a" else stirling_second_transform
    out.write(render_sequence(fn(terms), args.format))
    return EXIT_OK


def cmd_oracle_compare(args, out) -> int:
    result = compare_with_oracles(args.partitions, args.cycles, args.subsets)
    if result.agreed:
        out.write(
            f"AGREE partitions<={args.partitions} cycles<={args.cycles} subsets<={args.subsets} "
            f"entries={result.entries_compared}\n"
        )
        return EXIT_OK
    family, n, k, got, want = result.disagreement
    out.write(f"DISAGREE family={family} n={n} k={k} table={got} oracle={want} entries={result.entries_compared}\n")
    return EXIT_COUNTEREXAMPLE


def cmd_replay_proof(args, out) -> int:
    if args.p < 0 or args.nmax < 0 or args.p > args.nmax or args.nmax > MAX_SWEEP_N:
        raise UsageError(f"need 0 <= --p <= --nmax <= {MAX_SWEEP_N}, got p={args.p} nmax={args.nmax}")
    r = replay_proof_identity_2(args.p, args.nmax)

    def line(step, label, passed, at):
        return f"{step} {label} {'PASS' if passed else f'FAIL at n={at}'}\n"

    out.write(line("STEP1", "first-kind addition formula, re-signed", r.step1_passed, r.step1_first_failure))
    out.write(line("STEP2", "identity I2 by inversion", r.step2_passed, r.step2_first_failure))
    return EXIT_OK if r.passed else EXIT_COUNTEREXAMPLE


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stirling-id",
        description="Exact Stirling/binomial triangles, identity sweeps and inverse-pair transforms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangle", help="print rows 0..ROWS of a triangle")
    p.add_argument("--family", required=True, choices=[f.value for f in TriangleFamily])
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("check", help="sweep identities for counterexamples")
    p.add_argument("--identity", action="append",
                   help="identity tag (I1..I6, ORTHO7, ORTHO7P, ADD9, ADD10) or 'all'; repeatable, comma lists allowed")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("transform", help="apply the Stirling inverse-pair transforms")
    p.add_argument("--direction", required=True, choices=("to_a", "to_b", "roundtrip"))
    p.add_argument("--terms", nargs="+", required=True, help="integers, space or comma separated")
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("oracle-compare", help="compare triangles with enumeration oracles")
    p.add_argument("--partitions", type=int, default=oracles.PARTITION_CAP)
    p.add_argument("--cycles", type=int, default=oracles.CYCLE_CAP)
    p.add_argument("--subsets", type=int, default=oracles.SUBSET_CAP)
    p.set_defaults(func=cmd_oracle_compare)

    p = sub.add_parser("replay-proof", help="rebuild identity I2 by inverting the addition formula")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.set_defaults(func=cmd_replay_proof)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ResourceLimitError) as exc:
        print(f"stirling-id {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
