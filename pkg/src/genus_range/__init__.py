"""Genus ranges of 4-regular rigid-vertex graphs given as double-occurrence words."""

__version__ = "0.1.0"

from .enumeration import canonical_words, count_canonical, enumerate_canonical
from .errors import (
    CapExceeded,
    DowError,
    NotKnownRealizable,
    RealizationError,
    SurveyFileError,
    TracingError,
    UnrealizableByTheorem,
)
from .families import gamma_chain, gamma_hat, psi, realize_range, realize_singleton, repeat_word, tangled_cord
from .graph import AssemblyGraph, build
from .ribbon import GenusRange, boundary_histogram, compare_ranges, genus, genus_range, trace
from .survey import find_with_range, survey
from .words import Dow, canonicalize, cross_sum, insert_loop, insert_pretzel, parse

__all__ = [
    "__version__",
    "AssemblyGraph",
    "CapExceeded",
    "Dow",
    "DowError",
    "GenusRange",
    "NotKnownRealizable",
    "RealizationError",
    "SurveyFileError",
    "TracingError",
    "UnrealizableByTheorem",
    "boundary_histogram",
    "build",
    "canonical_words",
    "canonicalize",
    "compare_ranges",
    "count_canonical",
    "cross_sum",
    "enumerate_canonical",
    "find_with_range",
    "gamma_chain",
    "gamma_hat",
    "genus",
    "genus_range",
    "insert_loop",
    "insert_pretzel",
    "parse",
    "psi",
    "realize_range",
    "realize_singleton",
    "repeat_word",
    "survey",
    "tangled_cord",
    "trace",
]
