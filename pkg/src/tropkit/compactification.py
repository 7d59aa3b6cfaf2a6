# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Canonical Compactification

Every cell P = conv(V) + cone(R) of a complex is closed off at infinity.
The cells of the compactified complex are the pairs (kappa, P) with kappa a
subset of R(P): the face of P pushed to infinity along the rays in kappa.
It lives in the stratum R^n / span(kappa), has dimension dim P - |kappa| and
is combinatorially the product of the simplex conv(V) with the cube [0, inf]
over the rays in R(P) \\ kappa. For a fan, the pairs are exactly the pairs
of cones tau ⊆ sigma.

A complex without rays compactifies to itself.
"""

from __future__ import annotations

from fractions import Fraction

from errors import NotAFan
from lattice_utils import LatticeQuotient, saturated_basis
from weighted_complex import CellKey, WeightedComplex, cell_dim, cell_key, sort_key
from debug import get_logger

logger = get_logger(__file__)

BoundedCell = tuple[frozenset[int], CellKey]


def _subsets(items):
    items = sorted(items)
    result = [[]]
    for item in items:
        result += [s + [item] for s in result]
    return [frozenset(s) for s in result]


def bounded_dim(cell: BoundedCell) -> int:
    return cell_dim(cell[1]) - len(cell[0])


def bounded_sort_key(cell: BoundedCell) -> tuple:
    return (bounded_dim(cell), sorted(cell[0]), sort_key(cell[1]))


def describe_bounded(cell: BoundedCell) -> dict:
    return {"kappa": sorted(cell[0]), "v": sorted(cell[1][0]), "r": sorted(cell[1][1])}


class CompactifiedComplex:
    """
    Bounded cell complex with per-stratum tangent data.

    Attributes:
        source: the complex being compactified
        cells: bounded cells in canonical order (dim, kappa, source order)
    """

    def __init__(self, source: WeightedComplex):
        self.source = source
        self.ambient_dim = source.ambient_dim
        cells = [(kappa, key) for key in source.cells for kappa in _subsets(key[1])]
        self.cells: list[BoundedCell] = sorted(cells, key=bounded_sort_key)
        self.cell_index = {cell: i for i, cell in enumerate(self.cells)}
        self._quotients: dict[frozenset[int], LatticeQuotient] = {}
        self._max_cells = source.maximal_cells()
        logger.debug("Compactified %s: %d cells", source, len(self.cells))

    @property
    def dim(self) -> int:
        return max((bounded_dim(c) for c in self.cells), default=-1)

    def cell_id(self, cell: BoundedCell) -> int:
        return self.cell_index[cell]

    def cells_of_dim(self, d: int) -> list[BoundedCell]:
        return [c for c in self.cells if bounded_dim(c) == d]

    def counts(self) -> list[int]:
        return [len(self.cells_of_dim(d)) for d in range(self.dim + 1)]

    def quotient(self, kappa: frozenset[int]) -> LatticeQuotient:
        """Coordinates on the stratum R^n / span(kappa)."""
        if kappa not in self._quotients:
            rays = [self.source.rays[r] for r in sorted(kappa)]
            self._quotients[kappa] = LatticeQuotient(saturated_basis(rays, self.ambient_dim), self.ambient_dim)
        return self._quotients[kappa]

    def stratum_dim(self, cell: BoundedCell) -> int:
        return self.ambient_dim - len(cell[0])

    def facets(self, cell: BoundedCell) -> list[tuple[BoundedCell, int]]:
        """
        Facets with incidence signs.

        With s = |V| - 1 and j the position of rho among the rays of P not
        in kappa: dropping vertex i has sign (-1)^i, the face at infinity
        along rho has sign (-1)^(s+j) and the face at zero along rho has
        sign -(-1)^(s+j).
        """
        kappa, (vertex_ids, ray_ids) = cell
        result = []
        vertices = sorted(vertex_ids)
        if len(vertices) >= 2:
            for i, v in enumerate(vertices):
                result.append(((kappa, cell_key(vertex_ids - {v}, ray_ids)), (-1) ** i))
        s = len(vertices) - 1
        for j, rho in enumerate(sorted(ray_ids - kappa)):
            sign = (-1) ** (s + j)
            result.append(((kappa | {rho}, (vertex_ids, ray_ids)), sign))
            result.append(((kappa, cell_key(vertex_ids, ray_ids - {rho})), -sign))
        return result

    def maximal_cofaces(self, cell: BoundedCell) -> list[CellKey]:
        """Maximal source cells P with (∅, P) containing the cell."""
        key = cell[1]
        return [p for p in self._max_cells if key[0] <= p[0] and key[1] <= p[1]]

    def is_at_infinity(self, cell: BoundedCell) -> bool:
        return bool(cell[0])

    def point(self, cell: BoundedCell) -> tuple[Fraction, ...]:
        """
        Position of a vertex in the bounded model: rays are truncated at
        length 1, so the point at infinity of v + cone(kappa) sits at
        v + sum(kappa).
        """
        kappa, (vertex_ids, _) = cell
        (v,) = vertex_ids
        position = list(self.source.vertices[v])
        for r in sorted(kappa):
            position = [x + y for x, y in zip(position, self.source.rays[r])]
        return tuple(position)

    def to_dict(self) -> dict:
        vertices = []
        for cell in self.cells_of_dim(0):
            vertices.append({
                "id": self.cell_id(cell),
                "point": [str(x) for x in self.point(cell)],
                "at_infinity": self.is_at_infinity(cell),
            })
        return {
            "ambient_dim": self.ambient_dim,
            "counts": self.counts(),
            "vertices": vertices,
            "cells": [
                {
                    "id": i,
                    "dim": bounded_dim(c),
                    **describe_bounded(c),
                    "facets": [{"id": self.cell_id(f), "sign": sign} for f, sign in self.facets(c)],
                }
                for i, c in enumerate(self.cells)
            ],
        }

    def __repr__(self) -> str:
        return f"<CompactifiedComplex of {self.source} cells={len(self.cells)}>"


def compactify(complex_: WeightedComplex) -> CompactifiedComplex:
    return CompactifiedComplex(complex_)


def canonical_compactification(fan: WeightedComplex) -> CompactifiedComplex:
    """
    Compactify a fan; cells correspond to pairs of cones tau ⊆ sigma.

    Raises:
        NotAFan: the complex is not a fan with apex at the origin
    """
    if not fan.is_fan():
        raise NotAFan(f"{fan} is not a fan with apex at the origin", witness={"vertices": len(fan.vertices)})
    return CompactifiedComplex(fan)
