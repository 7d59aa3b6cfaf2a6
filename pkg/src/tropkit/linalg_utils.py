# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Exact Rational Linear Algebra

Matrices are numpy object arrays holding `fractions.Fraction` entries, so
products (`mat_mul`) stay exact. Elimination (rref, rank, inverse,
determinant) is delegated to sympy's DomainMatrix over QQ.

Zero-sized shapes are handled here explicitly; callers never need to
special-case empty cochain groups or empty bases.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from sympy import Rational
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from debug import get_logger

logger = get_logger(__file__)

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value) -> Fraction:
    """
    Convert an exact scalar to a Fraction.

    Accepts int, Fraction, strings like "3", "-2/5", sympy Rationals and
    ground-domain elements of QQ/ZZ. Floats are rejected.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ValueError(f"Floating point value not accepted: {value!r}")
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, np.integer):
        return Fraction(int(value))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    return Fraction(int(value))


def zeros(m: int, n: int) -> np.ndarray:
    return np.full((m, n), ZERO, dtype=object)


def identity(n: int) -> np.ndarray:
    result = zeros(n, n)
    for i in range(n):
        result[i, i] = ONE
    return result


def frac_matrix(rows: Sequence[Sequence], shape: tuple[int, int] | None = None) -> np.ndarray:
    """
    Build a Fraction matrix from nested lists.

    Args:
        rows: list of rows
        shape: required when `rows` is empty but the matrix has columns

    Returns:
        np.ndarray: object array of Fractions
    """
    rows = [list(row) for row in rows]
    m = len(rows)
    if m == 0:
        return zeros(0, shape[1] if shape else 0)
    n = len(rows[0])
    result = zeros(m, n)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError("Ragged matrix rows")
        for j, value in enumerate(row):
            result[i, j] = to_fraction(value)
    return result


def frac_vector(values: Iterable) -> np.ndarray:
    values = [to_fraction(v) for v in values]
    result = np.full(len(values), ZERO, dtype=object)
    for i, value in enumerate(values):
        result[i] = value
    return result


def columns_to_matrix(columns: Sequence[Sequence], m: int) -> np.ndarray:
    """Stack vectors as the columns of an m x len(columns) matrix."""
    result = zeros(m, len(columns))
    for j, column in enumerate(columns):
        for i, value in enumerate(column):
            result[i, j] = to_fraction(value)
    return result


def hstack(blocks: Sequence[np.ndarray], m: int) -> np.ndarray:
    blocks = [b for b in blocks if b.shape[1] > 0]
    if not blocks:
        return zeros(m, 0)
    return np.concatenate(blocks, axis=1)


def vstack(blocks: Sequence[np.ndarray], n: int) -> np.ndarray:
    blocks = [b for b in blocks if b.shape[0] > 0]
    if not blocks:
        return zeros(0, n)
    return np.concatenate(blocks, axis=0)


def mat_mul(*matrices: np.ndarray) -> np.ndarray:
    """Exact product of one or more Fraction matrices."""
    result = matrices[0]
    for other in matrices[1:]:
        if result.shape[1] != other.shape[0]:
            raise ValueError(f"Shape mismatch: {result.shape} @ {other.shape}")
        if result.shape[1] == 0 or result.shape[0] == 0 or other.shape[1] == 0:
            result = zeros(result.shape[0], other.shape[1])
        else:
            result = np.asarray(result @ other, dtype=object)
    return result


def mat_vec(matrix: np.ndarray, vector: np.ndarray) -> np.ndarray:
    if matrix.shape[1] != len(vector):
        raise ValueError(f"Shape mismatch: {matrix.shape} @ {len(vector)}")
    if matrix.shape[1] == 0 or matrix.shape[0] == 0:
        return np.full(matrix.shape[0], ZERO, dtype=object)
    return np.asarray(matrix @ vector, dtype=object)


def inner(x: np.ndarray, gram: np.ndarray, y: np.ndarray) -> Fraction:
    """<x, y> with respect to the Gram matrix `gram`."""
    if len(x) == 0:
        return ZERO
    return to_fraction(np.dot(x, mat_vec(gram, y)))


def is_zero(matrix: np.ndarray) -> bool:
    return all(value == 0 for value in np.asarray(matrix).flat)


def is_symmetric(matrix: np.ndarray) -> bool:
    m, n = matrix.shape
    if m != n:
        return False
    return all(matrix[i, j] == matrix[j, i] for i in range(n) for j in range(i + 1, n))


def to_domain(matrix: np.ndarray) -> DomainMatrix:
    """Fraction matrix -> DomainMatrix over QQ."""
    m, n = matrix.shape
    if m == 0 or n == 0:
        return DomainMatrix.zeros((m, n), QQ)
    rows = []
    for row in matrix:
        converted = []
        for value in row:
            value = to_fraction(value)
            converted.append(QQ(value.numerator, value.denominator))
        rows.append(converted)
    return DomainMatrix(rows, (m, n), QQ)


def to_sparse_domain(matrix: np.ndarray) -> DomainMatrix:
    """Fraction matrix -> sparse DomainMatrix over QQ holding only the nonzero entries."""
    m, n = matrix.shape
    rows = {}
    for i, j in zip(*np.nonzero(matrix != 0)):
        value = to_fraction(matrix[i, j])
        rows.setdefault(int(i), {})[int(j)] = QQ(value.numerator, value.denominator)
    return DomainMatrix(rows, (m, n), QQ)


def product_is_zero(left: np.ndarray, right: np.ndarray) -> bool:
    """left @ right == 0, computed sparsely."""
    if left.shape[1] != right.shape[0]:
        raise ValueError(f"Shape mismatch: {left.shape} @ {right.shape}")
    return (to_sparse_domain(left) * to_sparse_domain(right)).is_zero_matrix


def from_domain(dm: DomainMatrix) -> np.ndarray:
    """DomainMatrix (any exact domain) -> Fraction matrix."""
    m, n = dm.shape
    if m == 0 or n == 0:
        return zeros(m, n)
    return frac_matrix(dm.to_Matrix().tolist())


def rref(matrix: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """
    Reduced row echelon form.

    Returns:
        tuple: (rref matrix, pivot column indices)
    """
    m, n = matrix.shape
    if m == 0 or n == 0:
        return zeros(m, n), ()
    reduced, pivots = to_sparse_domain(matrix).rref()
    return from_domain(reduced), tuple(int(p) for p in pivots)


def rank(matrix: np.ndarray) -> int:
    m, n = matrix.shape
    if m == 0 or n == 0:
        return 0
    return int(to_sparse_domain(matrix).rank())


def nullspace(matrix: np.ndarray) -> np.ndarray:
    """
    Kernel basis read off the rref: one column per free variable.

    Returns:
        np.ndarray: n x k matrix whose columns span ker(matrix)
    """
    n = matrix.shape[1]
    reduced, pivots = rref(matrix)
    free = [j for j in range(n) if j not in pivots]
    basis = zeros(n, len(free))
    for k, j in enumerate(free):
        basis[j, k] = ONE
        for i, pivot in enumerate(pivots):
            basis[pivot, k] = -reduced[i, j]
    return basis


def column_basis(matrix: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """Columns of `matrix` at the pivot positions, spanning its column space."""
    _, pivots = rref(matrix)
    return matrix[:, list(pivots)] if pivots else zeros(matrix.shape[0], 0), pivots


def inverse(matrix: np.ndarray) -> np.ndarray:
    n, m = matrix.shape
    if n != m:
        raise ValueError(f"Matrix is not square: {matrix.shape}")
    if n == 0:
        return zeros(0, 0)
    dm = to_domain(matrix)
    if dm.rank() < n:
        raise ValueError("Matrix is singular")
    return from_domain(dm.inv())


def left_inverse(matrix: np.ndarray) -> np.ndarray:
    """(B^T B)^-1 B^T for a matrix with independent columns."""
    transposed = matrix.T
    return mat_mul(inverse(mat_mul(transposed, matrix)), transposed)


def det(matrix: np.ndarray) -> Fraction:
    n = matrix.shape[0]
    if n == 0:
        return ONE
    if n == 1:
        return to_fraction(matrix[0, 0])
    if n == 2:
        return to_fraction(matrix[0, 0] * matrix[1, 1] - matrix[0, 1] * matrix[1, 0])
    return to_fraction(to_domain(matrix).det())


def leading_minors(matrix: np.ndarray) -> list[Fraction]:
    """Leading principal minors det(A[:k, :k]) for k = 1..n."""
    return [det(matrix[:k, :k]) for k in range(1, matrix.shape[0] + 1)]


def format_matrix(matrix: np.ndarray) -> list[list[str]]:
    return [[str(to_fraction(value)) for value in row] for row in matrix]
