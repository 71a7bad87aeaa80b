"""Exhaustive sweeps over all 362,880 grids, bucketed by clue signature.

Every grid is hashed to the packed signature of the puzzle it answers under
a regime; grids sharing a signature are exactly the solutions of one puzzle,
so one pass over the permutation space yields, per puzzle, its full solution
set. This turns questions like "how many distinct solvable puzzles are
there" or "how many puzzles pin their solution uniquely" into bucket-size
bookkeeping instead of hundreds of thousands of solver calls.

Signature packing (internal layout, not a wire contract): the two leading
row sums and two leading column sums, 5 bits each (a line sum is at most
24), then one 4-bit field per prescribed cell value in regime order. The
third sums are omitted because all nine values always total 45, so they are
forced by the first two and cannot separate two grids.
"""

from __future__ import annotations

import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice, permutations
from math import factorial
from typing import Iterable, NamedTuple

from .core import ClueSet, Grid, PrescriptionRegime
from .rng import SplitMix64
from .solver import count_solutions
from .theory import build_shift_table, companion_cells, shift_match_table

logger = logging.getLogger(__name__)

TOTAL_GRIDS = factorial(9)

EXPECTED_PUZZLE_COUNTS = {
    PrescriptionRegime.FULL_DIAGONAL: 351432,
    PrescriptionRegime.FIRST_TWO_DIAGONAL: 281304,
    PrescriptionRegime.TOP_LEFT: 163387,
    PrescriptionRegime.NONE: 46147,
}


def signature_key(cells: tuple[int, ...], regime: PrescriptionRegime) -> int:
    """Canonical packed key of the puzzle these cells answer under `regime`.

    Two grids map to the same key exactly when they induce identical clue
    sets under the regime.
    """
    r1 = cells[0] + cells[1] + cells[2]
    r2 = cells[3] + cells[4] + cells[5]
    c1 = cells[0] + cells[3] + cells[6]
    c2 = cells[1] + cells[4] + cells[7]
    key = (((r1 << 5 | r2) << 5 | c1) << 5) | c2
    for i in regime.flat_cells:
        key = key << 4 | cells[i]
    return key


def _count_chunk(
    flat_cells: tuple[tuple[int, ...], ...], start: int, stop: int
) -> list[dict[int, int]]:
    """Signature counts per regime over one lexicographic permutation slice."""
    counts: list[dict[int, int]] = [{} for _ in flat_cells]
    for p in islice(permutations(range(1, 10)), start, stop):
        r1 = p[0] + p[1] + p[2]
        r2 = p[3] + p[4] + p[5]
        c1 = p[0] + p[3] + p[6]
        c2 = p[1] + p[4] + p[7]
        sums = (((r1 << 5 | r2) << 5 | c1) << 5) | c2
        for idxs, d in zip(flat_cells, counts):
            key = sums
            for i in idxs:
                key = key << 4 | p[i]
            d[key] = d.get(key, 0) + 1
    return counts


def _signature_counts(
    regimes: tuple[PrescriptionRegime, ...], threads: int
) -> list[dict[int, int]]:
    flat_cells = tuple(r.flat_cells for r in regimes)
    if threads <= 1:
        return _count_chunk(flat_cells, 0, TOTAL_GRIDS)
    bounds = [TOTAL_GRIDS * i // threads for i in range(threads + 1)]
    merged: list[dict[int, int]] = [{} for _ in regimes]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(_count_chunk, flat_cells, bounds[i], bounds[i + 1])
            for i in range(threads)
        ]
        for fut in futures:
            for whole, part in zip(merged, fut.result()):
                for key, n in part.items():
                    whole[key] = whole.get(key, 0) + n
    return merged


@dataclass
class CensusReport:
    """Bucket-size statistics of one regime's sweep.

    `grids_by_solutions[k]` is the number of grids living in puzzles with
    exactly k solutions (these sum to 362,880); `puzzles_by_solutions[k]` is
    the number of such puzzles. `solvable_puzzles` is the total number of
    distinct clue sets answered by at least one grid, the quantity the
    published counts refer to.
    """

    regime: PrescriptionRegime
    total_grids: int
    grids_by_solutions: dict[int, int]
    puzzles_by_solutions: dict[int, int]

    @property
    def solvable_puzzles(self) -> int:
        return sum(self.puzzles_by_solutions.values())

    @property
    def single_solution_puzzles(self) -> int:
        return self.puzzles_by_solutions.get(1, 0)

    @property
    def max_solutions(self) -> int:
        return max(self.grids_by_solutions)

    def to_dict(self) -> dict:
        return {
            "regime": self.regime.value,
            "total_grids": self.total_grids,
            "solvable_puzzles": self.solvable_puzzles,
            "single_solution_puzzles": self.single_solution_puzzles,
            "grids_by_solutions": {str(k): v for k, v in sorted(self.grids_by_solutions.items())},
            "puzzles_by_solutions": {str(k): v for k, v in sorted(self.puzzles_by_solutions.items())},
        }

    @classmethod
    def from_bucket_sizes(
        cls, regime: PrescriptionRegime, sizes: Iterable[int]
    ) -> "CensusReport":
        grids: Counter[int] = Counter()
        puzzles: Counter[int] = Counter()
        for size in sizes:
            grids[size] += size
            puzzles[size] += 1
        report = cls(
            regime=regime,
            total_grids=sum(grids.values()),
            grids_by_solutions=dict(sorted(grids.items())),
            puzzles_by_solutions=dict(sorted(puzzles.items())),
        )
        assert report.total_grids == TOTAL_GRIDS
        return report


def census(regime: PrescriptionRegime, threads: int | None = None) -> CensusReport:
    """Sweep all grids once and report bucket statistics for one regime."""
    counts = _signature_counts((regime,), threads or 1)[0]
    return CensusReport.from_bucket_sizes(regime, counts.values())


def census_all(threads: int | None = None) -> dict[PrescriptionRegime, CensusReport]:
    """All four regimes from a single shared permutation sweep."""
    regimes = tuple(PrescriptionRegime)
    all_counts = _signature_counts(regimes, threads or 1)
    return {
        regime: CensusReport.from_bucket_sizes(regime, counts.values())
        for regime, counts in zip(regimes, all_counts)
    }


def max_solutions_observed(regime: PrescriptionRegime, threads: int | None = None) -> int:
    """Largest number of grids answering one puzzle under the regime."""
    return census(regime, threads).max_solutions


class ClosedFormCount(NamedTuple):
    """Count of distinct solvable full-diagonal puzzles, without enumeration.

    Per diagonal set and placement there are 6! grids. Each admissible shift
    contributes 3!*3! grids whose shifted partner is also among the 6!; the
    partner answers the same puzzle, so each such pair double-counts one clue
    sheet and half of those grids are subtracted. Diagonals split 35/45/4 by
    admitting zero, one, or two shifts, giving the three addends.
    """

    total: int
    addends: tuple[int, int, int]


def closed_form_puzzle_count() -> ClosedFormCount:
    by_shift_count = Counter(len(s) for s in build_shift_table().values())
    n0, n1, n2 = by_shift_count[0], by_shift_count[1], by_shift_count[2]
    placements = factorial(3)
    fillings = factorial(6)
    duplicates_per_shift = factorial(3) * factorial(3)
    addends = (
        n0 * placements * fillings,
        n1 * placements * (fillings - duplicates_per_shift),
        n2 * placements * (fillings - 2 * duplicates_per_shift),
    )
    return ClosedFormCount(total=sum(addends), addends=addends)


@dataclass
class CompanionScan:
    """Full-diagonal statistics derived from the shift structure alone."""

    total_grids: int
    grids_with_companion: int
    single_solution_puzzles: int
    solvable_puzzles: int


def companion_scan() -> CompanionScan:
    """Scan all grids, counting puzzles via structural companions.

    A puzzle is counted once, at its lexicographically smallest solution;
    no bucketing is involved, so this is a route to the puzzle count that is
    independent of the signature census.
    """
    table = shift_match_table()
    with_companion = 0
    puzzles = 0
    for p in permutations(range(1, 10)):
        d = (p[0], p[4], p[8])
        lo, mid, hi = sorted(d)
        plus = tuple(sorted((p[1], p[5], p[6])))
        companions = [shift for shift, req in table[(lo, mid, hi)] if req == plus]
        if not companions:
            puzzles += 1
        else:
            with_companion += 1
            if all(_shifted_less(p, shift) for shift in companions):
                puzzles += 1
    return CompanionScan(
        total_grids=TOTAL_GRIDS,
        grids_with_companion=with_companion,
        single_solution_puzzles=TOTAL_GRIDS - with_companion,
        solvable_puzzles=puzzles,
    )


def _shifted_less(p: tuple[int, ...], shift: int) -> bool:
    """Whether p precedes its shifted companion lexicographically.

    Index 0 is on the diagonal and unchanged; index 1 is the first cell the
    shift touches and it gains exactly `shift`, so the sign decides.
    """
    return shift > 0


def full_diagonal_buckets() -> dict[int, list[tuple[int, ...]]]:
    """Every grid, grouped by its full-diagonal puzzle signature."""
    regime = PrescriptionRegime.FULL_DIAGONAL
    buckets: dict[int, list[tuple[int, ...]]] = {}
    for p in permutations(range(1, 10)):
        buckets.setdefault(signature_key(p, regime), []).append(p)
    return buckets


def companion_oracle_mismatches(max_report: int = 5) -> list[str]:
    """Compare structural companions with brute-force buckets for all grids.

    Returns descriptions of the first few grids (if any) whose structurally
    derived companion set differs from the other members of their
    full-diagonal signature bucket. An empty list means the two routes agree
    on the complete solution set of every one of the 362,880 puzzles.
    """
    mismatches: list[str] = []
    for members in full_diagonal_buckets().values():
        member_set = set(members)
        for p in members:
            expected = member_set - {p}
            derived = set(companion_cells(p))
            if derived != expected:
                mismatches.append(
                    f"grid {p}: companions {sorted(derived)} != bucket {sorted(expected)}"
                )
                if len(mismatches) >= max_report:
                    return mismatches
    return mismatches


def cross_check(regime: PrescriptionRegime, sample: int, seed: int) -> bool:
    """Validate signature bucketing against the solver on sampled grids.

    For `sample` seeded-random grids, the size of the grid's signature
    bucket must equal count_solutions over the grid's clue set. Returns True
    when every sampled grid agrees; the first disagreement is logged.
    """
    if sample < 0:
        raise ValueError(f"sample must be nonnegative, got {sample}")
    if sample == 0:
        return True
    counts = _signature_counts((regime,), threads=1)[0]
    rng = SplitMix64(seed)
    values = list(range(1, 10))
    for _ in range(sample):
        rng.shuffle(values)
        cells = tuple(values)
        bucket = counts[signature_key(cells, regime)]
        solved = count_solutions(ClueSet.from_grid(Grid(cells), regime))
        if bucket != solved:
            logger.error(
                "census cross-check mismatch: grid %s bucket size %d, solver found %d",
                cells,
                bucket,
                solved,
            )
            return False
    return True


def default_threads() -> int:
    """Census parallelism: FUBUKI_THREADS if set, else the available cores."""
    raw = os.environ.get("FUBUKI_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        threads = int(raw)
    except ValueError:
        raise ValueError(f"FUBUKI_THREADS must be a positive integer, got {raw!r}") from None
    if threads < 1:
        raise ValueError(f"FUBUKI_THREADS must be a positive integer, got {raw!r}")
    return threads
