"""Exact lattice and projective-family computations."""

from ._core import (
    GlueError,
    InputError,
    LatkitError,
    Lattice,
    family,
    hnf,
    known_tags,
    overlattice,
    repro,
    snf,
)

__all__ = [
    "GlueError",
    "InputError",
    "LatkitError",
    "Lattice",
    "family",
    "hnf",
    "known_tags",
    "overlattice",
    "repro",
    "snf",
]
