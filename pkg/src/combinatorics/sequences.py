"""Reference integer sequences and closed forms used to cross-check the triangles."""

from typing import Dict, List

import sympy

from ..utils.errors import PreconditionError

# Prefixes as listed in the OEIS; ids only appear as keys.
_REGISTRY: Dict[str, List[int]] = {
    # Euler zigzag numbers E_0, E_1, ...
    "A000111": [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521],
    # Reduced tangent numbers, starting at n = 1
    "A002105": [1, 1, 4, 34, 496, 11056, 349504, 14873104, 819786496],
    # Set partitions without singletons, starting at n = 0
    "A000296": [1, 0, 1, 1, 4, 11, 41, 162, 715, 3425],
    "A126151": [1, 6, 96, 2976, 151416],
    "A080795": [1, 4, 20, 128, 1024, 9856, 110720],
    # Rows of the triangle read by rows: 1; 1; 1,1; 1,4; 1,11,4; ...
    "A094503": [1, 1, 1, 1, 1, 4, 1, 11, 4, 1, 26, 34, 1, 57, 180, 34],
}


def sequence_registry(sequence_id: str) -> List[int]:
    """The embedded reference prefix of a sequence.

    Raises:
        PreconditionError: For ids outside the registry
    """
    try:
        return list(_REGISTRY[sequence_id])
    except KeyError:
        known = ", ".join(sorted(_REGISTRY))
        raise PreconditionError(f"unknown sequence {sequence_id!r}; known: {known}")


def known_sequences() -> List[str]:
    return sorted(_REGISTRY)


def tangent_number(n: int) -> int:
    """The tangent number t_(2n-1) = 2^(2n) (2^(2n) - 1) |B_(2n)| / (2n), n >= 1."""
    if n < 1:
        raise PreconditionError("tangent numbers are indexed from 1")
    value = sympy.Integer(2) ** (2 * n) * (sympy.Integer(2) ** (2 * n) - 1) * abs(sympy.bernoulli(2 * n)) / (2 * n)
    return int(value)


def tangent_reduced(n: int) -> int:
    """t_(2n-1) / 2^(n-1); equals A_(n-1, 0)."""
    return tangent_number(n) // 2 ** (n - 1)
