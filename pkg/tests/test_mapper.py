import pytest

from latmap.grid import LatticeDim
from latmap.mapper import (
    INCONCLUSIVE,
    NO_SOLUTION,
    SOLVED,
    PoiEvent,
    SearchBudget,
    map_function,
)
from latmap.paths import enumerate_paths
from latmap.solver import verify_witness

from goldens import MAP_EX1, MAP_EX2, MAP_EX3, MAP_EX4, f

DIM3 = LatticeDim(3, 3)


@pytest.mark.parametrize("fn", [MAP_EX1, MAP_EX2, MAP_EX3, MAP_EX4])
def test_walkthrough_examples_solve_and_verify(fn):
    r = map_function(fn, DIM3)
    assert r.status == SOLVED
    assert verify_witness(r.solution.assignment, fn)
    assert len(r.solution.order) == len(fn)


def test_single_variable_on_2x2():
    r = map_function(f({0}), LatticeDim(2, 2))
    assert r.status == SOLVED
    assert verify_witness(r.solution.assignment, f({0}))


def test_too_many_variables_is_no_solution():
    """Nine cells can never depend on ten distinct variables."""
    ten = [frozenset({v}) for v in range(10)]
    r = map_function(ten, DIM3)
    assert r.status == NO_SOLUTION


def test_term_longer_than_longest_path_fails():
    r = map_function(f({0, 1, 2}), LatticeDim(2, 2))
    assert r.status == NO_SOLUTION


def test_deterministic():
    a = map_function(MAP_EX2, DIM3)
    b = map_function(MAP_EX2, DIM3)
    assert a.solution.assignment == b.solution.assignment
    assert a.solution.poi == b.solution.poi
    assert a.solution.order == b.solution.order


def test_time_budget_yields_inconclusive():
    hard = f({998, 996, 1, 1000}, {3, 1, 4}, {3, 996, 999}, {998, 996, 999},
             {3, 1, 1000}, {3, 0, 4}, {3, 0, 999}, {998, 3})
    r = map_function(hard, DIM3, SearchBudget(time_limit=0.01))
    assert r.status == INCONCLUSIVE


def test_unbudgeted_negative_is_definite():
    hard = f({998, 996, 1, 1000}, {3, 1, 4}, {3, 996, 999}, {998, 996, 999},
             {3, 1, 1000}, {3, 0, 4}, {3, 0, 999}, {998, 3})
    assert map_function(hard, DIM3).status == NO_SOLUTION


def test_explicit_paths_accepted():
    ps = enumerate_paths(DIM3)
    r = map_function(MAP_EX1, DIM3, None, ps)
    assert r.status == SOLVED


def test_poi_text_vocabulary():
    assert PoiEvent("saved-escape-path", 0).text() == "term 1 saved escape path"
    assert (
        PoiEvent("covered-escape-multi-option", 2).text()
        == "term 3 covered escape path by picking multi options"
    )
    assert PoiEvent("path-saved-by-xxprime", 0).text() == "path 1 saved by xx'"
    assert PoiEvent("zero-on-lattice-var", 6).text() == "zero on lattice var 6"
    assert (
        PoiEvent("term-hiding", 3).text() == "term 4 was present but hiding"
    )
    assert (
        PoiEvent("placed-by-xxprime", 3).text() == "term 4 was placed by xx'"
    )
    with pytest.raises(ValueError):
        PoiEvent("nonsense", 0).text()


def test_zero_poi_reported_when_cells_unused():
    r = map_function(MAP_EX1, DIM3)
    zeroed = [e for e in r.solution.poi if e.kind == "zero-on-lattice-var"]
    grid = r.solution.assignment.codes
    assert [grid[e.subject] for e in zeroed] == [100] * len(zeroed)


def test_solution_escape_paths_are_neutralized():
    """Every path of a solution grid is matched, cancelled, zeroed or a
    superset of some target term."""
    from latmap.codes import COMPLEMENT_BASE, is_complement_code

    for fn in (MAP_EX1, MAP_EX2, MAP_EX3, MAP_EX4):
        r = map_function(fn, DIM3)
        grid = r.solution.assignment.codes
        for p in enumerate_paths(DIM3).paths:
            lits = {grid[c] for c in p}
            if 100 in lits:
                continue
            lits.discard(101)
            if any(is_complement_code(c) and COMPLEMENT_BASE - c in lits for c in lits):
                continue
            assert any(t <= lits for t in fn), (fn, p, lits)


def test_library_functions_round_trip():
    from latmap.solver import generate_library

    for e in generate_library(DIM3, 5, 15, 99):
        r = map_function(e.function, DIM3)
        assert r.status == SOLVED
        assert verify_witness(r.solution.assignment, e.function)
