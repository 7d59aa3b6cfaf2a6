# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Integer polynomials in one variable (lambda), backed by sympy.Poly over ZZ.
"""

from __future__ import annotations

from typing import Sequence

from sympy import Poly, Symbol
from sympy.polys.domains import ZZ

LAMBDA = Symbol("lambda")


class IntPolynomial:
    """
    Integer polynomial with coefficients in ascending degree.

    The highest coefficient is nonzero unless the polynomial is zero, in
    which case `coefficients` is empty. `warnings` carries flags attached
    by the producer (for example "has_loops").
    """

    def __init__(self, coefficients: Sequence[int] = (), warnings: Sequence[str] = ()):
        coefficients = [int(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self.coefficients = tuple(coefficients)
        self.warnings = tuple(warnings)

    @classmethod
    def from_poly(cls, poly: Poly, warnings: Sequence[str] = ()) -> IntPolynomial:
        if poly.is_zero:
            return cls((), warnings)
        return cls([int(c) for c in reversed(poly.all_coeffs())], warnings)

    @classmethod
    def constant(cls, value: int) -> IntPolynomial:
        return cls([value])

    @classmethod
    def linear_factor(cls, root: int) -> IntPolynomial:
        """lambda - root"""
        return cls([-root, 1])

    def to_poly(self) -> Poly:
        if not self.coefficients:
            return Poly(0, LAMBDA, domain=ZZ)
        return Poly(list(reversed(self.coefficients)), LAMBDA, domain=ZZ)

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def evaluate(self, value: int) -> int:
        return int(self.to_poly().eval(value))

    def divide_exact(self, other: IntPolynomial) -> IntPolynomial:
        quotient, remainder = self.to_poly().div(other.to_poly())
        if not remainder.is_zero:
            raise ValueError(f"{other} does not divide {self}")
        return IntPolynomial.from_poly(quotient)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial.from_poly(self.to_poly() + other.to_poly())

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial.from_poly(self.to_poly() - other.to_poly())

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial.from_poly(self.to_poly() * other.to_poly())

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coefficients)})"

    def __str__(self) -> str:
        return str(self.to_poly().as_expr())

    def to_dict(self) -> dict:
        result = {"coefficients": list(self.coefficients), "text": str(self)}
        if self.warnings:
            result["warnings"] = list(self.warnings)
        return result
