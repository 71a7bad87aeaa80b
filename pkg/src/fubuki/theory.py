"""Shift structure of alternate solutions sharing a diagonal and line sums.

Fix a solved grid. Any other grid with the same diagonal, row sums, and
column sums must be the original with one constant added to the cells at
(1,2), (2,3), (3,1) and subtracted from the cells at (1,3), (2,1), (3,2):
those six positions form the only degree of freedom once the diagonal and
sums are pinned. Such a shift produces a legal grid exactly when the six
off-diagonal values can be split into three pairs each differing by the
shift, with the pair bases sitting at the +shift positions. This module
computes which shifts each diagonal admits, classifies all 84 diagonals,
and derives companion solutions directly instead of searching for them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Iterable, Mapping

from .core import Grid

# Flat row-major indices of the off-diagonal cells, split by the sign the
# shift is applied with. PLUS cells gain the shift, MINUS cells lose it.
PLUS_FLAT = (1, 5, 6)  # (1,2), (2,3), (3,1)
MINUS_FLAT = (2, 3, 7)  # (1,3), (2,1), (3,2)

MAX_SHIFT = 8  # largest difference between two values in 1..9


def _check_shift(shift: int) -> int:
    if not isinstance(shift, int) or isinstance(shift, bool):
        raise ValueError(f"shift must be an integer, got {shift!r}")
    if shift == 0 or abs(shift) > MAX_SHIFT:
        raise ValueError(f"shift must be nonzero with |shift| <= {MAX_SHIFT}, got {shift}")
    return shift


@dataclass(frozen=True)
class Triplet:
    """The three pair bases of a perfect pairing of six values by one shift.

    `values` are ascending and `{v, v + shift for v in values}` is exactly the
    six-value set the triplet was derived from. For a negative shift the
    bases are the pair maxima, so they sit above their partners.
    """

    values: tuple[int, int, int]
    shift: int

    def __post_init__(self) -> None:
        _check_shift(self.shift)
        if list(self.values) != sorted(self.values):
            raise ValueError(f"triplet values must be ascending, got {self.values}")
        if len(self.covered) != 6 or not all(1 <= v <= 9 for v in self.covered):
            raise ValueError(
                f"values {self.values} with shift {self.shift} do not pair six "
                "distinct values in 1..9"
            )

    @property
    def covered(self) -> frozenset[int]:
        """All six paired values."""
        return frozenset(self.values) | frozenset(v + self.shift for v in self.values)


def _check_six(values: Iterable[int]) -> frozenset[int]:
    s = frozenset(values)
    if len(s) != 6 or not all(isinstance(v, int) and 1 <= v <= 9 for v in s):
        raise ValueError(f"expected 6 distinct values in 1..9, got {sorted(s)}")
    return s


def _check_diagonal(values: Iterable[int]) -> tuple[int, int, int]:
    t = tuple(sorted(values))
    if len(t) != 3 or len(set(t)) != 3 or not all(
        isinstance(v, int) and 1 <= v <= 9 for v in t
    ):
        raise ValueError(f"expected 3 distinct values in 1..9, got {values!r}")
    return t


def find_triplet(values: Iterable[int], shift: int) -> Triplet | None:
    """The unique pairing bases for `values` under `shift`, or None.

    For a positive shift the bases are found greedily: the minimum of what
    remains must pair with itself plus the shift, else no pairing exists.
    A negative shift admits a pairing exactly when its absolute value does,
    with the bases moved up by that amount (the maxima of the same pairs).
    """
    pool = _check_six(values)
    _check_shift(shift)
    step = abs(shift)
    remaining = set(pool)
    bases: list[int] = []
    for _ in range(3):
        low = min(remaining)
        if low + step not in remaining:
            return None
        remaining.remove(low)
        remaining.remove(low + step)
        bases.append(low)
    if shift < 0:
        bases = [b + step for b in bases]
    return Triplet((bases[0], bases[1], bases[2]), shift)


def possible_shifts(diagonal: Iterable[int]) -> frozenset[int]:
    """All positive shifts the complement of this diagonal can be paired by."""
    diag = _check_diagonal(diagonal)
    complement = frozenset(range(1, 10)) - frozenset(diag)
    return frozenset(
        c for c in range(1, MAX_SHIFT + 1) if find_triplet(complement, c) is not None
    )


@dataclass(frozen=True)
class DiagonalClass:
    """Uniqueness classification of one diagonal value set.

    A diagonal is rigid when no shift pairs its complement; every solvable
    puzzle prescribing a rigid diagonal then has exactly one solution. A
    non-rigid diagonal caps a puzzle at two solutions.
    """

    diagonal: frozenset[int]
    shifts: frozenset[int]
    rigid: bool
    max_solutions: int

    def __post_init__(self) -> None:
        assert self.rigid == (not self.shifts) == (self.max_solutions == 1)


def classify_diagonal(diagonal: Iterable[int]) -> DiagonalClass:
    diag = _check_diagonal(diagonal)
    shifts = possible_shifts(diag)
    rigid = not shifts
    return DiagonalClass(
        diagonal=frozenset(diag),
        shifts=shifts,
        rigid=rigid,
        max_solutions=1 if rigid else 2,
    )


def build_shift_table() -> dict[tuple[int, int, int], frozenset[int]]:
    """Admissible positive shifts for every 3-subset of 1..9, in lex order."""
    table = {
        diag: possible_shifts(diag) for diag in combinations(range(1, 10), 3)
    }
    assert len(table) == 84
    # empirical bound over the whole table, checked rather than assumed
    assert all(len(shifts) <= 2 for shifts in table.values())
    return table


@cache
def rigid_diagonals() -> tuple[tuple[int, int, int], ...]:
    """The diagonals admitting no shift, in lex order."""
    return tuple(d for d, shifts in build_shift_table().items() if not shifts)


def shift_table_to_csv(table: Mapping[tuple[int, int, int], frozenset[int]]) -> str:
    """CSV with header `diagonal,shifts`, rows ordered lexicographically."""
    import csv
    import io

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["diagonal", "shifts"])
    for diag in sorted(table):
        shifts = ",".join(str(c) for c in sorted(table[diag]))
        writer.writerow([",".join(str(v) for v in diag), shifts])
    return out.getvalue()


def parse_shift_table_csv(text: str) -> dict[tuple[int, ...], frozenset[int]]:
    import csv
    import io

    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["diagonal", "shifts"]:
        raise ValueError("expected header 'diagonal,shifts'")
    table: dict[tuple[int, ...], frozenset[int]] = {}
    for diag_field, shifts_field in rows[1:]:
        diag = tuple(int(v) for v in diag_field.split(","))
        table[diag] = frozenset(int(c) for c in shifts_field.split(",") if c)
    return table


def shift_cells(cells: tuple[int, ...], shift: int) -> tuple[int, ...]:
    """Apply the shift pattern to flat row-major cells; no validity check."""
    out = list(cells)
    for i in PLUS_FLAT:
        out[i] += shift
    for i in MINUS_FLAT:
        out[i] -= shift
    return tuple(out)


def shift_grid(grid: Grid, shift: int) -> tuple[tuple[int, int, int], ...]:
    """The raw shifted candidate as 3x3 rows.

    The result keeps the diagonal and the line sums but is not necessarily a
    legal grid: entries may leave 1..9 or collide. Validity is a separate
    question answered by is_valid_shift.
    """
    _check_shift(shift)
    c = shift_cells(grid.cells, shift)
    return (c[0:3], c[3:6], c[6:9])


def is_valid_shift(grid: Grid, shift: int) -> bool:
    """Whether shifting produces a second legal grid with the same clues.

    Checked directly from the definition: the six shifted off-diagonal
    entries must form exactly the original off-diagonal value set.
    """
    _check_shift(shift)
    cells = grid.cells
    original = grid.off_diagonal_values()
    shifted = {cells[i] + shift for i in PLUS_FLAT}
    shifted.update(cells[i] - shift for i in MINUS_FLAT)
    return shifted == original


@cache
def shift_match_table() -> dict[tuple[int, int, int], tuple[tuple[int, tuple[int, int, int]], ...]]:
    """For each diagonal, the shifts to try and the +cell values they need.

    Maps each sorted diagonal to ((shift, required), ...) where a grid with
    that diagonal has the shifted companion exactly when the sorted values at
    its three +shift cells equal `required`. Entries are ordered by |shift|
    ascending, positive before negative, which fixes companion order.
    """
    table: dict[tuple[int, int, int], tuple[tuple[int, tuple[int, int, int]], ...]] = {}
    for diag, shifts in build_shift_table().items():
        entries: list[tuple[int, tuple[int, int, int]]] = []
        complement = frozenset(range(1, 10)) - frozenset(diag)
        for c in sorted(shifts):
            for signed in (c, -c):
                t = find_triplet(complement, signed)
                assert t is not None  # a shift admits both signs or neither
                entries.append((signed, t.values))
        table[diag] = tuple(entries)
    return table


def companion_cells(cells: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All other cell tuples sharing this grid's diagonal and line sums."""
    diag = tuple(sorted((cells[0], cells[4], cells[8])))
    plus = tuple(sorted((cells[1], cells[5], cells[6])))
    return [
        shift_cells(cells, shift)
        for shift, required in shift_match_table()[diag]
        if plus == required
    ]


def companion_solutions(grid: Grid) -> list[Grid]:
    """All grids other than this one that answer its full-diagonal puzzle.

    Computed structurally from the shift table; the constructor re-validates
    each emitted grid. At most one companion can exist.
    """
    return [Grid(c) for c in companion_cells(grid.cells)]
