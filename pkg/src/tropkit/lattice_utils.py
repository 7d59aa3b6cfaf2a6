# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Integer Lattice Utilities

Saturated sublattices of Z^n, their canonical bases and the quotient maps
Z^n -> Z^n / L, all through Smith and Hermite normal forms over ZZ.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, smith_normal_decomp

from linalg_utils import to_fraction
from debug import get_logger

logger = get_logger(__file__)


def primitive_vector(vector: Sequence) -> tuple[int, ...]:
    """
    Scale a nonzero rational vector by a positive factor to a primitive
    integer vector (gcd of the entries 1).

    Raises:
        ValueError: for the zero vector
    """
    values = [to_fraction(v) for v in vector]
    if all(v == 0 for v in values):
        raise ValueError("Zero vector has no primitive direction")
    denominator = lcm(*[v.denominator for v in values])
    integers = [int(v * denominator) for v in values]
    divisor = gcd(*integers)
    return tuple(i // divisor for i in integers)


def is_primitive(vector: Sequence[int]) -> bool:
    values = [int(v) for v in vector]
    return any(values) and gcd(*values) == 1


def _zz_columns(columns: Sequence[Sequence[int]], n: int) -> DomainMatrix:
    rows = [[ZZ(int(column[i])) for column in columns] for i in range(n)]
    return DomainMatrix(rows, (n, len(columns)), ZZ)


def _int_rows(dm: DomainMatrix) -> list[list[int]]:
    m, n = dm.shape
    if m == 0 or n == 0:
        return [[] for _ in range(m)]
    return [[int(value) for value in row] for row in dm.to_Matrix().tolist()]


def _unimodular_inverse(rows: list[list[int]]) -> list[list[int]]:
    n = len(rows)
    dm = DomainMatrix([[QQ(v) for v in row] for row in rows], (n, n), QQ).inv()
    return [[int(to_fraction(value)) for value in row] for row in dm.to_Matrix().tolist()]


def hnf_columns(columns: Sequence[Sequence[int]], n: int) -> list[tuple[int, ...]]:
    """Canonical basis (Hermite normal form columns) of the lattice spanned by `columns`."""
    columns = [c for c in columns if any(c)]
    if not columns:
        return []
    hnf = _int_rows(hermite_normal_form(_zz_columns(columns, n)))
    width = len(hnf[0]) if hnf else 0
    return [tuple(hnf[i][j] for i in range(n)) for j in range(width)]


def saturated_basis(generators: Sequence[Sequence], n: int) -> list[tuple[int, ...]]:
    """
    Basis of Z^n intersected with the rational span of `generators`.

    The span is saturated through the Smith decomposition D = S A T: the
    first rank(A) columns of S^-1 span the saturation, and the result is
    brought to Hermite normal form so equal lattices give equal bases.

    Args:
        generators: rational vectors of length n
        n: ambient dimension

    Returns:
        list of integer tuples, empty for the zero lattice
    """
    columns = [primitive_vector(g) for g in generators if any(to_fraction(v) != 0 for v in g)]
    if not columns or n == 0:
        return []
    diagonal, s_matrix, _ = smith_normal_decomp(_zz_columns(columns, n))
    diag_rows = _int_rows(diagonal)
    lattice_rank = sum(1 for i in range(min(n, len(columns))) if diag_rows[i][i] != 0)
    if lattice_rank == 0:
        return []
    s_inverse = _unimodular_inverse(_int_rows(s_matrix))
    saturated = [[s_inverse[i][j] for i in range(n)] for j in range(lattice_rank)]
    return hnf_columns(saturated, n)


class LatticeQuotient:
    """
    Coordinates on Z^n / L for a saturated sublattice L of rank k.

    With a Smith decomposition D = S B T of a basis B of L, the map
    x -> (S x)[k:] identifies Z^n / L with Z^(n-k). A lattice of rank 0
    uses the identity, so quotient coordinates are ambient coordinates.
    """

    def __init__(self, basis: Sequence[Sequence[int]], n: int):
        self.n = n
        self.basis = [tuple(int(v) for v in b) for b in basis]
        self.rank = len(self.basis)
        self.dim = n - self.rank
        if self.rank == 0:
            self.s_matrix = [[int(i == j) for j in range(n)] for i in range(n)]
            self.s_inverse = [row[:] for row in self.s_matrix]
            return
        diagonal, s_matrix, _ = smith_normal_decomp(_zz_columns(self.basis, n))
        diag_rows = _int_rows(diagonal)
        if any(abs(diag_rows[i][i]) != 1 for i in range(self.rank)):
            raise ValueError(f"Lattice is not saturated: {self.basis}")
        self.s_matrix = _int_rows(s_matrix)
        self.s_inverse = _unimodular_inverse(self.s_matrix)

    def project(self, vector: Sequence) -> tuple[Fraction, ...]:
        """Image of a rational vector in quotient coordinates."""
        values = [to_fraction(v) for v in vector]
        return tuple(
            sum((self.s_matrix[i][j] * values[j] for j in range(self.n)), Fraction(0))
            for i in range(self.rank, self.n)
        )

    def lift(self, vector: Sequence) -> tuple[Fraction, ...]:
        """A preimage of a quotient vector: S^-1 (0, ..., 0, w)."""
        padded = [Fraction(0)] * self.rank + [to_fraction(v) for v in vector]
        return tuple(
            sum((self.s_inverse[i][j] * padded[j] for j in range(self.n)), Fraction(0))
            for i in range(self.n)
        )

    def contains(self, vector: Sequence) -> bool:
        return all(v == 0 for v in self.project(vector))


def lattice_quotient(generators: Sequence[Sequence], n: int) -> LatticeQuotient:
    return LatticeQuotient(saturated_basis(generators, n), n)
