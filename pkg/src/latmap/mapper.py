"""Backtracking mapper: place a function's product terms onto lattice paths.

Terms are examined in order; each term is housed on an available path
(shortest first) by assigning its literals to the path cells with constant-1
fillers, or deferred when no housing works (it may still be present as a
combination of other paths).  Dangling cells are zeroed at the end and the
candidate grid is accepted only if its solve is truth-table equivalent to
the target.  The per-order search backtracks over path choices, placements
and deferrals, so an exhausted order is a proof that no assignment exists.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .codes import (
    CONST_ONE,
    CONST_ZERO,
    COMPLEMENT_BASE,
    Sop,
    function_mask,
    is_complement_code,
    literal_masks,
    variables,
)
from .grid import LatticeDim
from .paths import PathSet, enumerate_paths

SOLVED = "solved"
NO_SOLUTION = "no-solution"
INCONCLUSIVE = "inconclusive"

# points-of-interest vocabulary
POI_SAVED_ESCAPE = "saved-escape-path"
POI_MULTI_OPTION = "covered-escape-multi-option"
POI_PATH_XXPRIME = "path-saved-by-xxprime"
POI_ZERO_ON_VAR = "zero-on-lattice-var"
POI_TERM_HIDING = "term-hiding"
POI_PLACED_XXPRIME = "placed-by-xxprime"


@dataclass(frozen=True)
class SearchBudget:
    max_orders: Optional[int] = None
    max_placements: Optional[int] = None
    time_limit: Optional[float] = None


@dataclass(frozen=True)
class PoiEvent:
    kind: str
    subject: int

    def text(self) -> str:
        if self.kind == POI_SAVED_ESCAPE:
            return f"term {self.subject + 1} saved escape path"
        if self.kind == POI_MULTI_OPTION:
            return f"term {self.subject + 1} covered escape path by picking multi options"
        if self.kind == POI_PATH_XXPRIME:
            return f"path {self.subject + 1} saved by xx'"
        if self.kind == POI_ZERO_ON_VAR:
            return f"zero on lattice var {self.subject}"
        if self.kind == POI_TERM_HIDING:
            return f"term {self.subject + 1} was present but hiding"
        if self.kind == POI_PLACED_XXPRIME:
            return f"term {self.subject + 1} was placed by xx'"
        raise ValueError(f"unknown POI kind {self.kind}")


@dataclass(frozen=True)
class MappingSolution:
    assignment: "LatticeAssignment"
    order: tuple[int, ...]
    poi: tuple[PoiEvent, ...]


@dataclass
class MapResult:
    status: str
    solution: Optional[MappingSolution] = None


@dataclass
class MappingProblem:
    function: Sop
    dim: LatticeDim
    paths: PathSet
    budget: SearchBudget = field(default_factory=SearchBudget)


def _has_xxprime(codes: set[int]) -> bool:
    return any(
        is_complement_code(c) and COMPLEMENT_BASE - c in codes for c in codes
    )


class _OrderSearch:
    """Complete backtracking search for one examination order."""

    def __init__(self, problem: MappingProblem, deadline: Optional[float]):
        f = problem.function
        self.f = f
        self.dim = problem.dim
        self.rc = problem.dim.cells
        self.paths = problem.paths.paths  # canonical = shortest first
        self.budget = problem.budget
        self.deadline = deadline
        self.truncated = False

        self.var_order = sorted(variables(f))
        nv = len(self.var_order)
        self.full = (1 << (1 << nv)) - 1
        self.lit_mask = literal_masks(self.var_order)
        self.f_mask = function_mask(f, self.var_order)

        self.grid: list[Optional[int]] = [None] * self.rc
        self.placed_by: list[Optional[int]] = [None] * self.rc
        self.through: list[list[int]] = [[] for _ in range(self.rc)]
        for pi, p in enumerate(self.paths):
            for cell in p:
                self.through[cell].append(pi)
        self.unfixed = [len(p) for p in self.paths]
        # upper bound on each path's contribution: AND of fixed literal masks
        self.path_ub = [self.full] * len(self.paths)
        self.used = [False] * len(self.paths)
        self.matched: list[Optional[int]] = [None] * len(self.paths)
        self.deferred: list[int] = []

    # -- state updates ---------------------------------------------------

    def _fix(self, cell: int, code: int, term_idx: Optional[int], log: list) -> bool:
        """Fix one cell; returns False when a completed path is a live escape.

        A fully fixed path must be neutralized: self-cancelling (a 0 cell or
        an xx' pair) or absorbed, i.e. its literal set is a superset of some
        target term.  Anything else can never be fixed later, so the branch
        dies here.
        """
        self.grid[cell] = code
        self.placed_by[cell] = term_idx
        log.append(cell)
        ok = True
        for pi in self.through[cell]:
            self.unfixed[pi] -= 1
            old = self.path_ub[pi]
            if code == CONST_ZERO:
                new = 0
            elif code == CONST_ONE:
                new = old
            else:
                new = old & self.lit_mask[code]
            if new != old:
                log.append((pi, old))
                self.path_ub[pi] = new
            if ok and self.unfixed[pi] == 0 and not self._neutralized(pi):
                ok = False
        return ok

    def _neutralized(self, pi: int) -> bool:
        codes = {self.grid[c] for c in self.paths[pi]}
        if CONST_ZERO in codes:
            return True
        codes.discard(CONST_ONE)
        if _has_xxprime(codes):
            return True
        return any(term <= codes for term in self.f)

    def _undo(self, log: list) -> None:
        for entry in reversed(log):
            if isinstance(entry, tuple):
                pi, old = entry
                self.path_ub[pi] = old
            else:
                cell = entry
                self.grid[cell] = None
                self.placed_by[cell] = None
                for pi in self.through[cell]:
                    self.unfixed[pi] += 1

    def _cancelled(self, pi: int) -> bool:
        codes = {self.grid[c] for c in self.paths[pi] if self.grid[c] is not None}
        if CONST_ZERO in codes:
            return True
        codes.discard(CONST_ONE)
        return _has_xxprime(codes)

    def _full_path_mask(self, pi: int) -> Optional[int]:
        """Product mask of a fully fixed path; None when cancelled."""
        codes = {self.grid[c] for c in self.paths[pi]}
        if CONST_ZERO in codes:
            return None
        codes.discard(CONST_ONE)
        if _has_xxprime(codes):
            return None
        m = self.full
        for code in codes:
            m &= self.lit_mask[code]
        return m

    def _coverage_ub(self) -> int:
        out = 0
        for ub in self.path_ub:
            out |= ub
            if out == self.full:
                break
        return out

    # -- placements ------------------------------------------------------

    def _placements(
        self, term: frozenset[int], path: tuple[int, ...]
    ) -> Iterator[list[tuple[int, int]]]:
        """Deterministic enumeration of literal arrangements along the path."""
        provided: set[int] = set()
        free: list[int] = []
        for cell in path:
            v = self.grid[cell]
            if v is None:
                free.append(cell)
            elif v == CONST_ONE or v in term:
                if v != CONST_ONE:
                    provided.add(v)
            else:
                return
        need = term - provided
        if len(need) > len(free):
            return
        options = sorted(term) + [CONST_ONE]
        chosen: list[int] = []

        def rec(i: int, still: frozenset[int]) -> Iterator[list[tuple[int, int]]]:
            if len(still) > len(free) - i:
                return
            if i == len(free):
                yield list(zip(free, chosen))
                return
            for code in options:
                chosen.append(code)
                yield from rec(i + 1, still - {code} if code in still else still)
                chosen.pop()

        yield from rec(0, frozenset(need))

    # -- search ----------------------------------------------------------

    def run(self, order: tuple[int, ...]) -> Optional[MappingSolution]:
        self.order = order
        return self._try_terms(0)

    def _out_of_time(self) -> bool:
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.truncated = True
            return True
        return False

    def _try_terms(self, ti: int) -> Optional[MappingSolution]:
        if self._out_of_time():
            return None
        if self.f_mask & ~self._coverage_ub():
            return None
        if ti == len(self.order):
            return self._finish()
        term_idx = self.order[ti]
        term = self.f[term_idx]
        max_pl = self.budget.max_placements
        for pi in range(len(self.paths)):
            if self.used[pi]:
                continue
            path = self.paths[pi]
            if len(term) > len(path):
                continue
            count = 0
            for placement in self._placements(term, path):
                if self._out_of_time():
                    return None
                count += 1
                if max_pl is not None and count > max_pl:
                    self.truncated = True
                    break
                log: list = []
                ok = True
                for cell, code in placement:
                    if not self._fix(cell, code, term_idx, log):
                        ok = False
                        break
                if ok:
                    self.used[pi] = True
                    self.matched[pi] = term_idx
                    sol = self._try_terms(ti + 1)
                    if sol is not None:
                        return sol
                    self.used[pi] = False
                    self.matched[pi] = None
                self._undo(log)
        # no housing works down this branch: defer, the term may be hiding
        self.deferred.append(term_idx)
        sol = self._try_terms(ti + 1)
        if sol is not None:
            return sol
        self.deferred.pop()
        return None

    def _finish(self) -> Optional[MappingSolution]:
        log: list = []
        zeroed = [cell for cell in range(self.rc) if self.grid[cell] is None]
        for cell in zeroed:
            self._fix(cell, CONST_ZERO, None, log)
        total = 0
        for pi in range(len(self.paths)):
            m = self._full_path_mask(pi)
            if m is not None:
                total |= m
        if total != self.f_mask:
            self._undo(log)
            return None
        from .solver import LatticeAssignment

        assignment = LatticeAssignment(self.dim, tuple(self.grid))  # type: ignore[arg-type]
        poi = self._derive_poi(zeroed)
        return MappingSolution(assignment, self.order, tuple(poi))

    # -- reporting -------------------------------------------------------

    def _derive_poi(self, zeroed: list[int]) -> list[PoiEvent]:
        absorbed_count: dict[int, int] = {}
        xxprime_paths: list[int] = []
        xxprime_terms: set[int] = set()
        for pi, path in enumerate(self.paths):
            if self.matched[pi] is not None:
                continue
            codes = {self.grid[c] for c in path}
            if CONST_ZERO in codes:
                continue
            codes.discard(CONST_ONE)
            if _has_xxprime(codes):
                xxprime_paths.append(pi)
                for c in path:
                    t = self.placed_by[c]
                    code = self.grid[c]
                    if t is not None and code in codes and COMPLEMENT_BASE - code in codes:
                        xxprime_terms.add(t)
                continue
            for t_idx, term in enumerate(self.f):
                if term <= codes:
                    absorbed_count[t_idx] = absorbed_count.get(t_idx, 0) + 1
                    break
        events: list[PoiEvent] = []
        for t_idx in sorted(absorbed_count):
            kind = POI_SAVED_ESCAPE if absorbed_count[t_idx] == 1 else POI_MULTI_OPTION
            events.append(PoiEvent(kind, t_idx))
        for t_idx in sorted(xxprime_terms):
            events.append(PoiEvent(POI_PLACED_XXPRIME, t_idx))
        for pi in xxprime_paths:
            events.append(PoiEvent(POI_PATH_XXPRIME, pi))
        for cell in zeroed:
            events.append(PoiEvent(POI_ZERO_ON_VAR, cell))
        for t_idx in sorted(self.deferred):
            events.append(PoiEvent(POI_TERM_HIDING, t_idx))
        return events


def _semantic_support(f_mask: int, nv: int) -> int:
    """Number of variables the truth table actually depends on."""
    from .codes import _var_mask

    count = 0
    for i in range(nv):
        m = _var_mask(i, nv)
        half = 1 << i
        # both cofactors laid out on the "variable = 0" positions
        if ((f_mask & m) >> half) != f_mask & ~m:
            count += 1
    return count


def map_function(
    f: Sop,
    dim: LatticeDim,
    budget: SearchBudget | None = None,
    paths: PathSet | None = None,
) -> MapResult:
    """STEP 1-10 mapping: backtracking over orders, paths and placements."""
    if budget is None:
        budget = SearchBudget()
    if paths is None:
        paths = enumerate_paths(dim)
    problem = MappingProblem(f, dim, paths, budget)

    var_order = sorted(variables(f))
    nv = len(var_order)
    f_mask = function_mask(f, var_order)
    if _semantic_support(f_mask, nv) > dim.cells:
        # a grid of rc cells holds at most rc distinct literals
        return MapResult(NO_SOLUTION)

    deadline = None
    if budget.time_limit is not None:
        deadline = time.monotonic() + budget.time_limit

    n = len(f)
    for k, order in enumerate(itertools.permutations(range(n))):
        if budget.max_orders is not None and k >= budget.max_orders:
            break
        search = _OrderSearch(problem, deadline)
        sol = search.run(order)
        if sol is not None:
            return MapResult(SOLVED, sol)
        if not search.truncated:
            # the per-order search is complete, so a cleanly exhausted
            # order already proves that no assignment exists
            return MapResult(NO_SOLUTION)
        if deadline is not None and time.monotonic() > deadline:
            break
    return MapResult(INCONCLUSIVE)
