"""Command-line front end.

Commands: solve, classify, table, verify, generate. JSON goes to stdout,
diagnostics to stderr. Exit codes: 0 success, 1 usage or parse error, 2 no
solution, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import NoReturn

from .census import (
    EXPECTED_PUZZLE_COUNTS,
    census,
    census_all,
    closed_form_puzzle_count,
    companion_oracle_mismatches,
    companion_scan,
    default_threads,
    TOTAL_GRIDS,
)
from .core import ClueSet, Grid, PrescriptionRegime, PuzzleFormatError
from .generate import GeneratorConfig, generate_puzzles
from .solver import solve
from .theory import build_shift_table, classify_diagonal, shift_table_to_csv


class _CliError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        # usage and parse problems exit 1; argparse's default of 2 is taken
        # by "no solution"
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _regime_name(regime: PrescriptionRegime) -> str:
    return regime.value.replace("_", "-")


def _parse_regime(text: str) -> PrescriptionRegime:
    return PrescriptionRegime.parse(text)


def _load_puzzle(path: str) -> ClueSet:
    if path == "-":
        name, text = "<stdin>", sys.stdin.read()
    else:
        name = path
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise _CliError(1, f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _CliError(
            1, f"{name}: invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})"
        ) from None
    try:
        return ClueSet.from_dict(data)
    except PuzzleFormatError as exc:
        raise _CliError(1, f"{name}: {exc}") from None


def _render_box(cell_texts: list[str], row_sums, col_sums) -> str:
    border = "+----" * 3 + "+"
    lines = []
    for i in range(3):
        lines.append(border)
        row = "".join(f"| {cell_texts[i * 3 + j]:>2} " for j in range(3))
        lines.append(f"{row}| = {row_sums[i]}")
    lines.append(border)
    lines.append("".join(f" = {s:>2}" for s in col_sums))
    return "\n".join(lines)


def render_grid(grid: Grid) -> str:
    return _render_box([str(v) for v in grid.cells], grid.row_sums(), grid.col_sums())


def render_puzzle(clue: ClueSet) -> str:
    texts = [""] * 9
    for r, c, v in clue.prescribed:
        texts[(r - 1) * 3 + (c - 1)] = str(v)
    return _render_box(texts, clue.row_sums, clue.col_sums)


def _cmd_solve(args: argparse.Namespace) -> int:
    clue = _load_puzzle(args.puzzle)
    result = solve(clue, limit=args.limit)
    shown = result.solutions if args.all else result.solutions[:1]
    for grid in shown:
        print(render_grid(grid) if args.pretty else json.dumps(grid.to_dict()))
    if result.truncated:
        print(f"{result.count}+ solutions (limit {args.limit} reached)")
    else:
        print(f"{result.count} solution{'s' if result.count != 1 else ''}")
    return 0 if result.count else 2


def _cmd_classify(args: argparse.Namespace) -> int:
    values = args.values
    if len(set(values)) != 3 or any(not 1 <= v <= 9 for v in values):
        raise _CliError(1, f"classify needs 3 distinct values in 1..9, got {values}")
    dc = classify_diagonal(values)
    shifts = ",".join(str(c) for c in sorted(dc.shifts)) if dc.shifts else "none"
    solutions = "exactly 1" if dc.rigid else "1 or 2"
    print(
        f"rigid: {'yes' if dc.rigid else 'no'}; shifts: {shifts}; "
        f"solutions per puzzle: {solutions}"
    )
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    table = build_shift_table()
    if args.format == "csv":
        sys.stdout.write(shift_table_to_csv(table))
    else:
        rows = [
            {"diagonal": list(diag), "shifts": sorted(shifts)}
            for diag, shifts in sorted(table.items())
        ]
        print(json.dumps(rows))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    regimes = list(PrescriptionRegime) if args.all else [args.regime]
    threads = args.threads if args.threads else default_threads()
    if len(regimes) > 1:
        reports = census_all(threads)
    else:
        reports = {regimes[0]: census(regimes[0], threads)}

    failures: list[str] = []

    def line(label: str, got: int, expected: int) -> None:
        status = "PASS" if got == expected else "FAIL"
        if got != expected:
            failures.append(f"{label}: got {got}, expected {expected}")
        print(f"{label}: {got} (expected {expected}) {status}")

    for regime in regimes:
        expected = EXPECTED_PUZZLE_COUNTS[regime]
        line(
            f"regime {_regime_name(regime)}: solvable puzzles",
            reports[regime].solvable_puzzles,
            expected,
        )

    if PrescriptionRegime.FULL_DIAGONAL in regimes:
        expected = EXPECTED_PUZZLE_COUNTS[PrescriptionRegime.FULL_DIAGONAL]
        cf = closed_form_puzzle_count()
        a, b, c = cf.addends
        line(f"closed form {a} + {b} + {c}", cf.total, expected)
        line("companion scan: solvable puzzles", companion_scan().solvable_puzzles, expected)
        mismatches = companion_oracle_mismatches()
        status = "PASS" if not mismatches else "FAIL"
        print(
            f"companion oracle: {TOTAL_GRIDS - len(mismatches)}/{TOTAL_GRIDS} "
            f"grids match brute force {status}"
        )
        for m in mismatches:
            failures.append(f"companion oracle: {m}")

    if failures:
        for f in failures:
            print(f"mismatch: {f}", file=sys.stderr)
        return 3
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    config = GeneratorConfig(
        regime=args.regime,
        require_unique=args.unique,
        seed=args.seed,
        count=args.count,
    )
    for clue in generate_puzzles(config):
        if args.pretty:
            print(render_puzzle(clue))
            print()
        else:
            print(json.dumps(clue.to_dict()))
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="fubuki", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve a puzzle file")
    p.add_argument("puzzle", help="path to puzzle JSON, or - for stdin")
    p.add_argument("--all", action="store_true", help="print every solution, not just the first")
    p.add_argument("--limit", type=int, default=1000, metavar="N", help="enumeration cap (default 1000)")
    p.add_argument("--pretty", action="store_true", help="render grids as boxes instead of JSON")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("classify", help="classify a diagonal's uniqueness")
    p.add_argument("values", type=int, nargs=3, metavar="V", help="the three diagonal values")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("table", help="print the 84-row diagonal/shift table")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="re-verify the census counts exhaustively")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--regime", type=_parse_regime, help="one prescription regime")
    group.add_argument("--all", action="store_true", help="all four regimes in one sweep")
    p.add_argument("--threads", type=int, default=0, metavar="N",
                   help="sweep parallelism (default: FUBUKI_THREADS or all cores)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("generate", help="emit seeded puzzles as JSON lines")
    p.add_argument("--regime", type=_parse_regime, default=PrescriptionRegime.FULL_DIAGONAL)
    p.add_argument("--unique", action="store_true", help="guarantee exactly one solution")
    p.add_argument("--seed", type=int, default=0, help="64-bit generator seed")
    p.add_argument("--count", type=int, default=1, help="number of puzzles")
    p.add_argument("--pretty", action="store_true", help="render boxes instead of JSON")
    p.set_defaults(func=_cmd_generate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"fubuki: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"fubuki: {exc}", file=sys.stderr)
        return 1
