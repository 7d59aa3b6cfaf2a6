# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Cellular tropical (p, q)-cohomology over Q.

For a bounded cell c in the stratum of kappa, the multi-tangent space is

    F_p(c) = sum over maximal P containing c of Λ^p (π_kappa Tan P)

written in the coordinates of Λ^p Q^m (m the stratum dimension), one
coordinate per p-subset of {0, ..., m-1} in lexicographic order. A cell c
with facet f gets the map F_p(c) -> F_p(f): an inclusion when both lie in
the same stratum, and Λ^p of the stratum projection otherwise. Cochains
are C^q = ⊕_{dim c = q} F_p(c)^* and the coboundary is the signed
transpose of these maps.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np

from compactification import BoundedCell, CompactifiedComplex, bounded_dim, compactify, describe_bounded
from errors import DegreeOutOfRange, InternalInconsistency, UnboundedInput
from job_utils import parallel_map
from linalg_utils import ONE, column_basis, columns_to_matrix, det, hstack, identity, is_zero, left_inverse, mat_mul, product_is_zero, rank, zeros
from weighted_complex import WeightedComplex
from debug import get_logger

logger = get_logger(__file__)


def exterior_power(matrix: np.ndarray, p: int) -> np.ndarray:
    """Λ^p of an m x k matrix: the C(m,p) x C(k,p) matrix of p x p minors."""
    m, k = matrix.shape
    rows = list(combinations(range(m), p))
    cols = list(combinations(range(k), p))
    result = zeros(len(rows), len(cols))
    for a, row_set in enumerate(rows):
        for b, col_set in enumerate(cols):
            result[a, b] = det(matrix[np.ix_(row_set, col_set)]) if p else ONE
    return result


def as_bounded(complex_) -> CompactifiedComplex:
    if isinstance(complex_, CompactifiedComplex):
        return complex_
    if isinstance(complex_, WeightedComplex) and complex_.has_rays():
        raise UnboundedInput(f"{complex_} has unbounded cells; compactify it first (--compactify)")
    return compactify(complex_)


class MultiTangentSystem:
    """
    Bases of the multi-tangent spaces F_p(c) and the maps between them.

    Attributes:
        complex: the bounded complex
        p: exterior degree
        bases: matrix per cell, columns spanning F_p(c)
    """

    def __init__(self, complex_: CompactifiedComplex, p: int):
        self.complex = complex_
        self.p = p
        self._tangents: dict[tuple, np.ndarray] = {}
        self._stratum_powers: dict[tuple, np.ndarray] = {}
        self._left_inverses: dict[BoundedCell, np.ndarray] = {}
        self.bases: dict[BoundedCell, np.ndarray] = {}
        for cell in complex_.cells:
            self.bases[cell] = self._span(cell)

    def _tangent_power(self, kappa: frozenset[int], p_key) -> np.ndarray:
        """Λ^p of a basis of π_kappa Tan P, in stratum coordinates."""
        if (kappa, p_key) not in self._tangents:
            quotient = self.complex.quotient(kappa)
            images = [quotient.project(g) for g in self.complex.source.tangent_generators(p_key)]
            basis, _ = column_basis(columns_to_matrix(images, quotient.dim))
            self._tangents[(kappa, p_key)] = exterior_power(basis, self.p)
        return self._tangents[(kappa, p_key)]

    def _span(self, cell: BoundedCell) -> np.ndarray:
        kappa = cell[0]
        m = self.complex.stratum_dim(cell)
        blocks = [self._tangent_power(kappa, p_key) for p_key in self.complex.maximal_cofaces(cell)]
        basis, _ = column_basis(hstack(blocks, comb(m, self.p)))
        return basis

    def dim(self, cell: BoundedCell) -> int:
        return self.bases[cell].shape[1]

    def stratum_map(self, cell: BoundedCell, face: BoundedCell) -> np.ndarray:
        """Linear map from the stratum of `cell` to the stratum of `face`."""
        if cell[0] == face[0]:
            return identity(self.complex.stratum_dim(cell))
        source = self.complex.quotient(cell[0])
        target = self.complex.quotient(face[0])
        columns = []
        for i in range(source.dim):
            unit = [0] * source.dim
            unit[i] = 1
            columns.append(target.project(source.lift(unit)))
        return columns_to_matrix(columns, target.dim)

    def stratum_power(self, cell: BoundedCell, face: BoundedCell) -> np.ndarray:
        """Λ^p of the stratum map, shared by every pair of cells in the same two strata."""
        strata = (cell[0], face[0])
        if strata not in self._stratum_powers:
            self._stratum_powers[strata] = exterior_power(self.stratum_map(cell, face), self.p)
        return self._stratum_powers[strata]

    def face_inverse(self, cell: BoundedCell) -> np.ndarray:
        """Cached left inverse of the basis of F_p(cell)."""
        if cell not in self._left_inverses:
            self._left_inverses[cell] = left_inverse(self.bases[cell])
        return self._left_inverses[cell]

    def restriction(self, cell: BoundedCell, face: BoundedCell) -> np.ndarray:
        """
        Matrix of F_p(cell) -> F_p(face) in the stored bases.

        Raises:
            InternalInconsistency: the image leaves F_p(face)
        """
        if cell[0] == face[0]:
            image = self.bases[cell]
        else:
            image = mat_mul(self.stratum_power(cell, face), self.bases[cell])
        coordinates = mat_mul(self.face_inverse(face), image)
        if not is_zero(mat_mul(self.bases[face], coordinates) - image):
            raise InternalInconsistency(
                "Multi-tangent image leaves the face space",
                witness={"cell": describe_bounded(cell), "face": describe_bounded(face)},
            )
        return coordinates

    def maps(self) -> dict[tuple[BoundedCell, BoundedCell], np.ndarray]:
        """Restriction matrices for every (cell, facet) pair."""
        return {(c, f): self.restriction(c, f) for c in self.complex.cells for f, _ in self.complex.facets(c)}

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "cells": [
                {"id": self.complex.cell_id(c), **describe_bounded(c), "dim": self.dim(c)}
                for c in self.complex.cells
            ],
        }


def build_multitangent(complex_, p: int) -> MultiTangentSystem:
    """
    Raises:
        DegreeOutOfRange: p < 0
        UnboundedInput: a complex with rays that was not compactified
        InternalInconsistency: dim F_p(P) != C(dim P, p) on a maximal cell
    """
    if p < 0:
        raise DegreeOutOfRange(f"p must be nonnegative, got {p}")
    bounded = as_bounded(complex_)
    system = MultiTangentSystem(bounded, p)
    for p_key in bounded.source.maximal_cells():
        cell = (frozenset(), p_key)
        expected = comb(bounded_dim(cell), p)
        if system.dim(cell) != expected:
            raise InternalInconsistency(
                f"dim F_{p} of a maximal cell is {system.dim(cell)}, expected {expected}",
                witness=describe_bounded(cell),
            )
    return system


class CochainComplex:
    """
    Finite cochain complex of Q-vector spaces.

    Attributes:
        dims: dim C^q for q = 0..top
        differentials: d_q as a dims[q+1] x dims[q] matrix
        labels: per degree, (cell id, basis index) for every coordinate
        p: exterior degree the complex was built for (None for loaded complexes)
    """

    def __init__(self, dims: list[int], differentials: list[np.ndarray], labels: list[list[tuple[int, int]]] | None = None, p: int | None = None):
        self.dims = list(dims)
        self.differentials = list(differentials)
        self.labels = labels
        self.p = p

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def d(self, q: int) -> np.ndarray:
        """d_q : C^q -> C^(q+1); zero outside 0..top-1."""
        if 0 <= q < len(self.differentials):
            return self.differentials[q]
        rows = self.dims[q + 1] if 0 <= q + 1 <= self.top else 0
        cols = self.dims[q] if 0 <= q <= self.top else 0
        return zeros(rows, cols)

    def d_squared_defects(self) -> list[int]:
        return [q for q in range(len(self.differentials) - 1) if not product_is_zero(self.differentials[q + 1], self.differentials[q])]

    def check(self):
        """
        Raises:
            InternalInconsistency: a shape mismatch or d_(q+1) d_q != 0
        """
        for q, d in enumerate(self.differentials):
            if d.shape != (self.dims[q + 1], self.dims[q]):
                raise InternalInconsistency(f"d_{q} has shape {d.shape}, expected {(self.dims[q + 1], self.dims[q])}")
        defects = self.d_squared_defects()
        if defects:
            raise InternalInconsistency(f"d_(q+1) d_q != 0 for q in {defects}", witness={"q": defects})
        return self

    def cohomology_dims(self, jobs: int | None = None) -> list[int]:
        ranks = parallel_map(rank, self.differentials, jobs)
        result = []
        for q, dim in enumerate(self.dims):
            incoming = ranks[q - 1] if q >= 1 else 0
            outgoing = ranks[q] if q < len(ranks) else 0
            result.append(dim - outgoing - incoming)
        return result

    def __repr__(self) -> str:
        return f"<CochainComplex p={self.p} dims={self.dims}>"


def build_cochain_complex(complex_, p: int) -> CochainComplex:
    """
    Cellular cochain complex with F_p coefficients.

    Raises:
        UnboundedInput: the input has rays and was not compactified
        InternalInconsistency: d_(q+1) d_q != 0
    """
    system = build_multitangent(complex_, p)
    bounded = system.complex
    top = max(bounded.dim, 0)
    by_degree = [bounded.cells_of_dim(q) for q in range(top + 1)]
    offsets = []
    labels = []
    for cells in by_degree:
        offset = {}
        label = []
        position = 0
        for cell in cells:
            offset[cell] = position
            label.extend((bounded.cell_id(cell), k) for k in range(system.dim(cell)))
            position += system.dim(cell)
        offsets.append(offset)
        labels.append(label)
    dims = [len(label) for label in labels]

    differentials = []
    for q in range(top):
        d = zeros(dims[q + 1], dims[q])
        for cell in by_degree[q + 1]:
            row = offsets[q + 1][cell]
            for face, sign in bounded.facets(cell):
                col = offsets[q][face]
                block = system.restriction(cell, face).T
                d[row:row + block.shape[0], col:col + block.shape[1]] = block * sign
        differentials.append(d)
    cochains = CochainComplex(dims, differentials, labels, p).check()
    logger.debug("Cochain complex for p=%d: dims %s", p, dims)
    return cochains


def cohomology_dims(complex_, p: int, jobs: int | None = None) -> list[int]:
    """dim H^{p,q} for q = 0..dim."""
    return build_cochain_complex(complex_, p).cohomology_dims(jobs)


def cohomology_table(complex_, p_values=None, jobs: int | None = None) -> dict[int, list[int]]:
    """Rows p -> [dim H^{p,0}, dim H^{p,1}, ...]; p ranges over 0..dim by default."""
    bounded = as_bounded(complex_)
    if p_values is None:
        p_values = range(max(bounded.dim, 0) + 1)
    return {p: cohomology_dims(bounded, p, jobs) for p in p_values}
