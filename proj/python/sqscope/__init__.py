"""Distinct squares, FS-double-squares and dense word constructions."""

from fractions import Fraction

from ._sqscope import (
    analyze_runs,
    best_i_for_j,
    build,
    count_and_length,
    density_3dp,
    distinct_squares,
    expand,
    expected_sequence,
    factorize,
    fs_positions,
    is_primitive,
    search,
    sequence,
)


def density(word: str) -> Fraction:
    """Exact distinct-square density of `word`."""
    count, length = count_and_length(word)
    return Fraction(count, length)


__all__ = [
    "analyze_runs",
    "best_i_for_j",
    "build",
    "count_and_length",
    "density",
    "density_3dp",
    "distinct_squares",
    "expand",
    "expected_sequence",
    "factorize",
    "fs_positions",
    "is_primitive",
    "search",
    "sequence",
]
