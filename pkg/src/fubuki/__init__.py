"""Fubuki: solve, classify, enumerate, and generate 3x3 sum puzzles."""

from .census import (
    CensusReport,
    ClosedFormCount,
    CompanionScan,
    EXPECTED_PUZZLE_COUNTS,
    TOTAL_GRIDS,
    census,
    census_all,
    closed_form_puzzle_count,
    companion_oracle_mismatches,
    companion_scan,
    cross_check,
    full_diagonal_buckets,
    max_solutions_observed,
    signature_key,
)
from .core import ClueSet, Grid, PrescriptionRegime, PuzzleFormatError
from .generate import GeneratorConfig, generate_puzzles
from .rng import SplitMix64
from .solver import SolveResult, count_solutions, solve
from .theory import (
    DiagonalClass,
    Triplet,
    build_shift_table,
    classify_diagonal,
    companion_solutions,
    find_triplet,
    is_valid_shift,
    parse_shift_table_csv,
    possible_shifts,
    rigid_diagonals,
    shift_grid,
    shift_table_to_csv,
)

__version__ = "0.1.0"

__all__ = [
    "CensusReport",
    "ClosedFormCount",
    "ClueSet",
    "CompanionScan",
    "DiagonalClass",
    "EXPECTED_PUZZLE_COUNTS",
    "GeneratorConfig",
    "Grid",
    "PrescriptionRegime",
    "PuzzleFormatError",
    "SolveResult",
    "SplitMix64",
    "TOTAL_GRIDS",
    "Triplet",
    "build_shift_table",
    "census",
    "census_all",
    "classify_diagonal",
    "closed_form_puzzle_count",
    "companion_oracle_mismatches",
    "companion_scan",
    "companion_solutions",
    "count_solutions",
    "cross_check",
    "find_triplet",
    "full_diagonal_buckets",
    "generate_puzzles",
    "is_valid_shift",
    "max_solutions_observed",
    "parse_shift_table_csv",
    "possible_shifts",
    "rigid_diagonals",
    "shift_grid",
    "shift_table_to_csv",
    "signature_key",
    "solve",
]
