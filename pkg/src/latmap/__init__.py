"""Synthesis toolkit for four-terminal switching lattice networks."""

from .codes import (
    CONST_ONE,
    CONST_ZERO,
    COMPLEMENT_BASE,
    Sop,
    Term,
    complement,
    equivalent,
    parse_function,
    pretty_function,
    serialize_function,
)
from .grid import SRC, LatticeDim, build_children, degree_histogram
from .paths import PathSet, enumerate_paths, parse_paths, serialize_paths
from .solver import (
    LatticeAssignment,
    generate_library,
    parse_lattice,
    serialize_lattice,
    solve_lattice,
    verify_witness,
)
from .mapper import (
    INCONCLUSIVE,
    NO_SOLUTION,
    SOLVED,
    MapResult,
    MappingSolution,
    SearchBudget,
    map_function,
)
from .decompose import DecomposeOutcome, decompose_two, split_schedule
from .synth import SynthesisPlan, expand_plan, split_long_terms, synthesize

__all__ = [
    "CONST_ONE",
    "CONST_ZERO",
    "COMPLEMENT_BASE",
    "Sop",
    "Term",
    "complement",
    "equivalent",
    "parse_function",
    "pretty_function",
    "serialize_function",
    "SRC",
    "LatticeDim",
    "build_children",
    "degree_histogram",
    "PathSet",
    "enumerate_paths",
    "parse_paths",
    "serialize_paths",
    "LatticeAssignment",
    "generate_library",
    "parse_lattice",
    "serialize_lattice",
    "solve_lattice",
    "verify_witness",
    "INCONCLUSIVE",
    "NO_SOLUTION",
    "SOLVED",
    "MapResult",
    "MappingSolution",
    "SearchBudget",
    "map_function",
    "DecomposeOutcome",
    "decompose_two",
    "split_schedule",
    "SynthesisPlan",
    "expand_plan",
    "split_long_terms",
    "synthesize",
]
