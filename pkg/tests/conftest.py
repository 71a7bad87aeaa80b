import pytest

from fubuki import ClueSet, Grid, PrescriptionRegime, census_all


@pytest.fixture
def grid_two_a() -> Grid:
    """First solution of the two-solution showcase puzzle."""
    return Grid.from_rows([(1, 4, 5), (7, 2, 6), (8, 9, 3)])


@pytest.fixture
def grid_two_b() -> Grid:
    """Second solution of the same puzzle: the first shifted by 1."""
    return Grid.from_rows([(1, 5, 4), (6, 2, 7), (9, 8, 3)])


@pytest.fixture
def grid_unique() -> Grid:
    """Sole solution of the unique-solution showcase puzzle."""
    return Grid.from_rows([(1, 4, 6), (5, 2, 7), (8, 9, 3)])


@pytest.fixture
def clue_two(grid_two_a) -> ClueSet:
    return ClueSet.from_grid(grid_two_a, PrescriptionRegime.FULL_DIAGONAL)


@pytest.fixture
def clue_unique(grid_unique) -> ClueSet:
    return ClueSet.from_grid(grid_unique, PrescriptionRegime.FULL_DIAGONAL)


@pytest.fixture(scope="session")
def census_reports():
    """One shared single-threaded sweep of all four regimes."""
    return census_all(threads=1)
