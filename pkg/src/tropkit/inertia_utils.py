# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Exact inertia of symmetric rational matrices (Sylvester's law).

Symmetric Gaussian elimination by congruence: a nonzero diagonal entry is
used as a 1x1 pivot; when the remaining diagonal is zero but an entry
a_ij is not, row/column j is added to row/column i, which makes the new
diagonal entry 2 a_ij. The list of pivots is the LDL certificate.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from errors import InvalidParameters
from linalg_utils import is_symmetric, to_fraction
from debug import get_logger

logger = get_logger(__file__)


class Signature:
    """Inertia triple (n_plus, n_zero, n_minus)"""

    def __init__(self, n_plus: int, n_zero: int, n_minus: int):
        self.n_plus = n_plus
        self.n_zero = n_zero
        self.n_minus = n_minus

    @property
    def dim(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus

    @property
    def is_positive_definite(self) -> bool:
        return self.n_zero == 0 and self.n_minus == 0

    def to_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_zero, self.n_minus)

    def to_dict(self) -> dict:
        return {"n_plus": self.n_plus, "n_zero": self.n_zero, "n_minus": self.n_minus}

    def __eq__(self, other) -> bool:
        if isinstance(other, tuple):
            return self.to_tuple() == other
        if not isinstance(other, Signature):
            return NotImplemented
        return self.to_tuple() == other.to_tuple()

    def __hash__(self) -> int:
        return hash(self.to_tuple())

    def __repr__(self) -> str:
        return f"Signature{self.to_tuple()}"


def inertia(matrix: np.ndarray) -> tuple[Signature, list[Fraction]]:
    """
    Compute the inertia of a symmetric rational matrix.

    Args:
        matrix: square symmetric matrix of exact rationals

    Returns:
        tuple: (Signature, pivots) where the pivots are the nonzero diagonal
               entries of a congruent diagonal matrix, in elimination order.

    Raises:
        InvalidParameters: if the matrix is not square and symmetric
    """
    if matrix.ndim != 2 or not is_symmetric(matrix):
        raise InvalidParameters("Inertia needs a symmetric matrix", witness={"shape": list(matrix.shape)})
    n = matrix.shape[0]
    work = [[to_fraction(matrix[i, j]) for j in range(n)] for i in range(n)]
    active = list(range(n))
    pivots: list[Fraction] = []

    while active:
        pivot = next((i for i in active if work[i][i] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in active for j in active if i < j and work[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # congruence with E = I + e_i e_j^T
            for k in range(n):
                work[i][k] += work[j][k]
            for k in range(n):
                work[k][i] += work[k][j]
            pivot = i
        d = work[pivot][pivot]
        pivots.append(d)
        active.remove(pivot)
        for i in active:
            factor = work[i][pivot] / d
            if factor == 0:
                continue
            for j in active:
                work[i][j] -= factor * work[pivot][j]
        for i in active:
            work[i][pivot] = Fraction(0)
            work[pivot][i] = Fraction(0)

    n_plus = sum(1 for d in pivots if d > 0)
    n_minus = sum(1 for d in pivots if d < 0)
    signature = Signature(n_plus, n - n_plus - n_minus, n_minus)
    logger.debug("Inertia %s with pivots %s", signature, pivots)
    return signature, pivots
