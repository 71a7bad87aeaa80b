"""Domain types for the Fubuki puzzle: grids, clue sets, prescription regimes.

A Fubuki grid is a 3x3 arrangement of the digits 1..9, each used once, and a
puzzle prescribes some cells plus the three row sums and three column sums.
All types here are immutable values; they can be shared freely between
threads and processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

TOTAL = 45  # 1 + 2 + ... + 9
MIN_LINE_SUM = 6  # 1 + 2 + 3
MAX_LINE_SUM = 24  # 7 + 8 + 9
ALL_VALUES_MASK = 0b1111111110  # bits 1..9

# Flat row-major indices of the main diagonal, in reading order.
DIAGONAL_FLAT = (0, 4, 8)


class PuzzleFormatError(ValueError):
    """A puzzle or grid document is malformed; the message names the field."""


class PrescriptionRegime(Enum):
    """Which diagonal cells a puzzle reveals in advance."""

    FULL_DIAGONAL = "full_diagonal"
    FIRST_TWO_DIAGONAL = "first_two_diagonal"
    TOP_LEFT = "top_left"
    NONE = "none"

    @property
    def cells(self) -> tuple[tuple[int, int], ...]:
        """Prescribed (row, col) positions, 1-based."""
        n = _REGIME_CELL_COUNT[self]
        return tuple((i, i) for i in range(1, n + 1))

    @property
    def flat_cells(self) -> tuple[int, ...]:
        return DIAGONAL_FLAT[: _REGIME_CELL_COUNT[self]]

    @classmethod
    def parse(cls, text: str) -> "PrescriptionRegime":
        """Accepts the canonical name with either '-' or '_' separators."""
        try:
            return cls(text.strip().lower().replace("-", "_"))
        except ValueError:
            names = ", ".join(r.value.replace("_", "-") for r in cls)
            raise ValueError(f"unknown regime {text!r}; expected one of: {names}") from None


_REGIME_CELL_COUNT = {
    PrescriptionRegime.FULL_DIAGONAL: 3,
    PrescriptionRegime.FIRST_TWO_DIAGONAL: 2,
    PrescriptionRegime.TOP_LEFT: 1,
    PrescriptionRegime.NONE: 0,
}


def _check_cell_value(v: object, what: str) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= 9:
        raise ValueError(f"{what} must be an integer in 1..9, got {v!r}")
    return v


@dataclass(frozen=True, order=True)
class Grid:
    """A completely filled board: the digits 1..9 in row-major order.

    Construction rejects any cell multiset other than exactly {1, ..., 9}.
    Ordering is lexicographic over the row-major cells, which is the
    deterministic order the solver emits.
    """

    cells: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cells", tuple(self.cells))
        if len(self.cells) != 9:
            raise ValueError(f"a grid needs exactly 9 cells, got {self.cells!r}")
        mask = 0
        for v in self.cells:
            _check_cell_value(v, "cell")
            bit = 1 << v
            if mask & bit:
                raise ValueError(f"duplicate cell value {v}")
            mask |= bit
        # mask == ALL_VALUES_MASK now holds; the total is forced but asserted anyway
        assert sum(self.cells) == TOTAL

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Grid":
        flat: list[int] = []
        for row in rows:
            flat.extend(row)
        return cls(tuple(flat))

    @property
    def rows(self) -> tuple[tuple[int, int, int], ...]:
        c = self.cells
        return (c[0:3], c[3:6], c[6:9])

    def value_at(self, row: int, col: int) -> int:
        """Cell value at 1-based (row, col)."""
        if not (1 <= row <= 3 and 1 <= col <= 3):
            raise ValueError(f"position ({row}, {col}) out of range 1..3")
        return self.cells[(row - 1) * 3 + (col - 1)]

    def row_sums(self) -> tuple[int, int, int]:
        c = self.cells
        return (c[0] + c[1] + c[2], c[3] + c[4] + c[5], c[6] + c[7] + c[8])

    def col_sums(self) -> tuple[int, int, int]:
        c = self.cells
        return (c[0] + c[3] + c[6], c[1] + c[4] + c[7], c[2] + c[5] + c[8])

    def diagonal(self) -> tuple[int, int, int]:
        c = self.cells
        return (c[0], c[4], c[8])

    def off_diagonal_values(self) -> frozenset[int]:
        c = self.cells
        return frozenset((c[1], c[2], c[3], c[5], c[6], c[7]))

    def to_dict(self) -> dict:
        return {"cells": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, data: object) -> "Grid":
        if not isinstance(data, dict) or "cells" not in data:
            raise PuzzleFormatError("grid document must be an object with a 'cells' field")
        rows = data["cells"]
        if not isinstance(rows, list) or len(rows) != 3 or any(
            not isinstance(r, list) or len(r) != 3 for r in rows
        ):
            raise PuzzleFormatError("'cells' must be a 3x3 array of integers")
        try:
            return cls.from_rows(rows)
        except ValueError as exc:
            raise PuzzleFormatError(f"'cells': {exc}") from None


@dataclass(frozen=True)
class ClueSet:
    """A puzzle: prescribed cells plus row and column sums.

    `prescribed` holds (row, col, value) triples with 1-based positions and is
    kept sorted by position. Any cell may be prescribed, not only the
    diagonal; the regimes are named presets over the diagonal. A clue set
    whose sums cannot total 45 is a legal value that simply has no solutions.
    """

    prescribed: tuple[tuple[int, int, int], ...]
    row_sums: tuple[int, int, int]
    col_sums: tuple[int, int, int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "row_sums", tuple(self.row_sums))
        object.__setattr__(self, "col_sums", tuple(self.col_sums))
        for name, sums in (("row_sums", self.row_sums), ("col_sums", self.col_sums)):
            if len(sums) != 3:
                raise ValueError(f"{name} must be a tuple of 3 integers, got {sums!r}")
            for s in sums:
                if not isinstance(s, int) or isinstance(s, bool):
                    raise ValueError(f"{name} must contain integers, got {s!r}")
                if not MIN_LINE_SUM <= s <= MAX_LINE_SUM:
                    raise ValueError(
                        f"{name} entry {s} out of range {MIN_LINE_SUM}..{MAX_LINE_SUM}"
                    )
        try:
            object.__setattr__(
                self, "prescribed", tuple(tuple(e) for e in self.prescribed)
            )
        except TypeError:
            raise ValueError(
                f"prescribed must be (row, col, value) triples, got {self.prescribed!r}"
            ) from None
        seen_pos: set[tuple[int, int]] = set()
        seen_val = 0
        for entry in self.prescribed:
            if len(entry) != 3:
                raise ValueError(f"prescribed entry must be (row, col, value), got {entry!r}")
            r, c, v = entry
            for name, x in (("row", r), ("col", c)):
                if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= 3:
                    raise ValueError(f"prescribed {name} must be in 1..3, got {x!r}")
            _check_cell_value(v, "prescribed value")
            if (r, c) in seen_pos:
                raise ValueError(f"cell ({r}, {c}) prescribed twice")
            seen_pos.add((r, c))
            if seen_val & (1 << v):
                raise ValueError(f"value {v} prescribed twice")
            seen_val |= 1 << v
        object.__setattr__(self, "prescribed", tuple(sorted(self.prescribed)))

    @classmethod
    def from_grid(cls, grid: Grid, regime: PrescriptionRegime) -> "ClueSet":
        """The puzzle this grid answers under the given regime."""
        prescribed = tuple((r, c, grid.value_at(r, c)) for r, c in regime.cells)
        return cls(prescribed, grid.row_sums(), grid.col_sums())

    def satisfied_by(self, grid: Grid) -> bool:
        return (
            all(grid.value_at(r, c) == v for r, c, v in self.prescribed)
            and grid.row_sums() == self.row_sums
            and grid.col_sums() == self.col_sums
        )

    def to_dict(self) -> dict:
        return {
            "prescribed": [
                {"row": r, "col": c, "value": v} for r, c, v in self.prescribed
            ],
            "row_sums": list(self.row_sums),
            "col_sums": list(self.col_sums),
        }

    @classmethod
    def from_dict(cls, data: object) -> "ClueSet":
        if not isinstance(data, dict):
            raise PuzzleFormatError("puzzle document must be a JSON object")
        unknown = set(data) - {"prescribed", "row_sums", "col_sums"}
        if unknown:
            raise PuzzleFormatError(f"unknown field(s): {', '.join(sorted(unknown))}")

        def sums(name: str) -> tuple[int, int, int]:
            raw = data.get(name)
            if not isinstance(raw, list) or len(raw) != 3 or any(
                not isinstance(s, int) or isinstance(s, bool) for s in raw
            ):
                raise PuzzleFormatError(f"'{name}' must be a list of 3 integers")
            return (raw[0], raw[1], raw[2])

        raw_prescribed = data.get("prescribed", [])
        if not isinstance(raw_prescribed, list):
            raise PuzzleFormatError("'prescribed' must be a list of cell objects")
        prescribed = []
        for i, item in enumerate(raw_prescribed):
            if not isinstance(item, dict) or set(item) != {"row", "col", "value"}:
                raise PuzzleFormatError(
                    f"'prescribed[{i}]' must be an object with row, col, value"
                )
            prescribed.append((item["row"], item["col"], item["value"]))
        try:
            return cls(tuple(prescribed), sums("row_sums"), sums("col_sums"))
        except ValueError as exc:
            raise PuzzleFormatError(str(exc)) from None
