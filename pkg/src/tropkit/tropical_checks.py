# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Tangent lattices, primitive normal vectors, balancing and
Q-smoothness in codimension one.

Normal vectors live in the quotient lattice Z^n / (Z^n ∩ Tan Q), written
in the Smith coordinates of `lattice_utils.LatticeQuotient`. When Tan Q is
zero the quotient coordinates are the ambient ones.
"""

from __future__ import annotations

from fractions import Fraction

from errors import InvalidParameters, NotAFacet, NotBalanced, NotPure
from job_utils import parallel_map
from lattice_utils import LatticeQuotient, primitive_vector, saturated_basis
from linalg_utils import columns_to_matrix, rank
from weighted_complex import CellKey, WeightedComplex, cell_dim, describe_key
from debug import get_logger

logger = get_logger(__file__)


class NormalVector:
    """
    Primitive normal n_{Q,P} of a facet Q of P, oriented into P.

    Attributes:
        q_cell: facet key
        p_cell: cell key
        vector: integer coordinates in the quotient lattice
        lift: a representative in Z^n
    """

    def __init__(self, q_cell: CellKey, p_cell: CellKey, vector: tuple[int, ...], lift: tuple[int, ...]):
        self.q_cell = q_cell
        self.p_cell = p_cell
        self.vector = vector
        self.lift = lift

    def to_dict(self) -> dict:
        return {
            "Q": describe_key(self.q_cell),
            "P": describe_key(self.p_cell),
            "vector": list(self.vector),
            "lift": list(self.lift),
        }

    def __repr__(self) -> str:
        return f"NormalVector({list(self.vector)}, lift={list(self.lift)})"


def tangent_lattice(complex_: WeightedComplex, cell) -> list[tuple[int, ...]]:
    """Basis of Z^n ∩ Tan(cell), in Hermite normal form."""
    key = complex_.resolve(cell)
    return saturated_basis(complex_.tangent_generators(key), complex_.ambient_dim)


def quotient_by_cell(complex_: WeightedComplex, cell) -> LatticeQuotient:
    return LatticeQuotient(tangent_lattice(complex_, cell), complex_.ambient_dim)


def extra_generator(complex_: WeightedComplex, q_key: CellKey, p_key: CellKey) -> tuple[Fraction, ...]:
    """The generator of P missing from its facet Q, as a direction from Q."""
    extra_vertices = p_key[0] - q_key[0]
    extra_rays = p_key[1] - q_key[1]
    if extra_vertices:
        (v,) = extra_vertices
        base = complex_.vertices[min(q_key[0])]
        return tuple(a - b for a, b in zip(complex_.vertices[v], base))
    (r,) = extra_rays
    return tuple(Fraction(x) for x in complex_.rays[r])


def primitive_normal(complex_: WeightedComplex, q_cell, p_cell, quotient: LatticeQuotient | None = None) -> NormalVector:
    """
    Primitive generator of (Z^n ∩ Tan P) / (Z^n ∩ Tan Q) pointing into P.

    Args:
        complex_: the ambient complex
        q_cell: id or key of the facet Q
        p_cell: id or key of P
        quotient: cached quotient for Q

    Raises:
        NotAFacet: Q is not a face of P of codimension one
    """
    q_key = complex_.resolve(q_cell)
    p_key = complex_.resolve(p_cell)
    if not (q_key[0] <= p_key[0] and q_key[1] <= p_key[1]) or cell_dim(q_key) != cell_dim(p_key) - 1:
        raise NotAFacet(
            f"{describe_key(q_key)} is not a facet of {describe_key(p_key)}",
            witness={"Q": describe_key(q_key), "P": describe_key(p_key)},
        )
    if quotient is None:
        quotient = quotient_by_cell(complex_, q_key)
    image = quotient.project(extra_generator(complex_, q_key, p_key))
    vector = primitive_vector(image)
    lift = tuple(int(x) for x in quotient.lift(vector))
    return NormalVector(q_key, p_key, vector, lift)


def codim1_cells(complex_: WeightedComplex) -> list[CellKey]:
    return complex_.cells_of_dim(complex_.dim - 1) if complex_.dim > 0 else []


def _require_pure(complex_: WeightedComplex):
    if not complex_.is_pure():
        dims = sorted({cell_dim(c) for c in complex_.maximal_cells()})
        raise NotPure(f"{complex_} is not pure-dimensional", witness={"max_cell_dims": dims})


def _normals_at(complex_: WeightedComplex, q_key: CellKey) -> list[NormalVector]:
    quotient = quotient_by_cell(complex_, q_key)
    top = complex_.dim
    return [primitive_normal(complex_, q_key, p, quotient) for p in complex_.cofaces(q_key) if cell_dim(p) == top]


def _balancing_at(complex_: WeightedComplex, q_key: CellKey) -> dict:
    normals = _normals_at(complex_, q_key)
    width = complex_.ambient_dim - len(tangent_lattice(complex_, q_key))
    defect = [0] * width
    for normal in normals:
        m = complex_.weight(normal.p_cell)
        defect = [d + m * x for d, x in zip(defect, normal.vector)]
    return {
        "cell": complex_.cell_id(q_key),
        **describe_key(q_key),
        "balanced": not any(defect),
        "defect": defect,
        "normals": [n.to_dict() for n in normals],
    }


def check_balancing(complex_: WeightedComplex, jobs: int | None = None) -> dict:
    """
    Evaluate sum_P m_P n_{Q,P} at every codimension-one cell Q.

    Returns:
        dict: {"balanced": bool, "cells": [per-cell reports]}

    Raises:
        NotPure: the complex is not pure-dimensional
    """
    _require_pure(complex_)
    cells = parallel_map(lambda q: _balancing_at(complex_, q), codim1_cells(complex_), jobs)
    balanced = all(c["balanced"] for c in cells)
    if not balanced:
        logger.info("%s is not balanced at %s", complex_, [c["cell"] for c in cells if not c["balanced"]])
    return {"balanced": balanced, "cells": cells}


def _smoothness_at(complex_: WeightedComplex, q_key: CellKey) -> dict:
    normals = _normals_at(complex_, q_key)
    width = complex_.ambient_dim - len(tangent_lattice(complex_, q_key))
    matrix = columns_to_matrix([n.vector for n in normals], width)
    kernel_dim = len(normals) - rank(matrix)
    report = {"cell": complex_.cell_id(q_key), **describe_key(q_key), "smooth": kernel_dim == 1, "kernel_dim": kernel_dim}
    if kernel_dim != 1:
        report["flags"] = ["uniquely_p_balanced_unchecked"]
    return report


def check_q_smooth_codim1(complex_: WeightedComplex, jobs: int | None = None) -> dict:
    """
    Q-smoothness in codimension one.

    At each Q the rational weights m' with sum m'_P n_{Q,P} = 0 modulo Tan Q
    form a space of dimension kernel_dim; Q is smooth when that space is
    the line through (m_P).

    Raises:
        NotPure: the complex is not pure-dimensional
        NotBalanced: the complex fails the balancing condition
    """
    balancing = check_balancing(complex_, jobs)
    if not balancing["balanced"]:
        first = next(c for c in balancing["cells"] if not c["balanced"])
        raise NotBalanced(
            f"{complex_} is not balanced at cell {first['cell']}",
            witness={"cell": first["cell"], "defect": first["defect"]},
        )
    cells = parallel_map(lambda q: _smoothness_at(complex_, q), codim1_cells(complex_), jobs)
    return {"smooth": all(c["smooth"] for c in cells), "cells": cells}


def normal_matrix(complex_: WeightedComplex, q_cell) -> list[list[int]]:
    """Quotient-coordinate normals at Q, one row per maximal coface."""
    q_key = complex_.resolve(q_cell)
    if cell_dim(q_key) != complex_.dim - 1:
        raise InvalidParameters(f"{describe_key(q_key)} is not a codimension-one cell", witness=describe_key(q_key))
    return [list(n.vector) for n in _normals_at(complex_, q_key)]
