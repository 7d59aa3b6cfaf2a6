# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Chow Ring of a Matroid

A^*(M) (x) Q is generated by one variable x_F per proper nonempty flat F.
A degree-p monomial survives the incomparability relations only if its
flats form a multichain, so A^p is the span of multichains modulo the
linear relations (sum_{F contains i} x_F - sum_{F contains j} x_F) * m.
Each graded piece is computed by exact row reduction of the relation
matrix; the non-pivot multichains form the basis and the rref gives the
reduction map from raw multichains to coordinates.

The Kaehler package checks (hard Lefschetz, Hodge-Riemann, Poincare
duality) operate on these graded pieces.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable, Sequence

import numpy as np
from sympy import I, Integer

from errors import BadDegree, DegreeOverflow, InternalInconsistency, InvalidParameters, LooplessRequired, RankZero, WrongDegree
from inertia_utils import Signature, inertia
from linalg_utils import ZERO, columns_to_matrix, is_symmetric, mat_mul, nullspace, rank, rref, to_fraction, zeros
from matroid import Matroid
from debug import get_logger

logger = get_logger(__file__)

Multichain = tuple[int, ...]


class ChowElement:
    """Homogeneous element of A^p: degree plus coordinates in the basis of A^p."""

    def __init__(self, degree: int, coordinates: Iterable):
        self.degree = degree
        self.coordinates = tuple(to_fraction(c) for c in coordinates)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coordinates)

    def _check(self, other: ChowElement):
        if self.degree != other.degree:
            raise WrongDegree(f"Cannot add degree {self.degree} and degree {other.degree}")

    def __add__(self, other: ChowElement) -> ChowElement:
        self._check(other)
        return ChowElement(self.degree, [a + b for a, b in zip(self.coordinates, other.coordinates)])

    def __sub__(self, other: ChowElement) -> ChowElement:
        self._check(other)
        return ChowElement(self.degree, [a - b for a, b in zip(self.coordinates, other.coordinates)])

    def scale(self, factor) -> ChowElement:
        factor = to_fraction(factor)
        return ChowElement(self.degree, [factor * c for c in self.coordinates])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChowElement):
            return NotImplemented
        return self.degree == other.degree and self.coordinates == other.coordinates

    def __hash__(self) -> int:
        return hash((self.degree, self.coordinates))

    def __repr__(self) -> str:
        return f"ChowElement(degree={self.degree}, {[str(c) for c in self.coordinates]})"


class GradedChowRing:
    """
    Graded pieces A^0..A^r of the Chow ring of a loopless matroid.

    Attributes:
        matroid: the matroid
        r: top degree rank(M) - 1
        flats: generators, the proper nonempty flats in lattice order
        raw: raw[p] lists the degree-p multichains (tuples of flat indices)
        basis: basis[p] lists the multichains representing the basis of A^p
        reduction: reduction[p] maps raw multichain coordinates to basis coordinates
        degree_value: deg of the single basis element of A^r
    """

    def __init__(self, matroid: Matroid):
        self.matroid = matroid
        self.lattice = matroid.lattice()
        self.r = matroid.rank - 1
        self.flats = self.lattice.proper_flats()
        self.flat_index = {flat: i for i, flat in enumerate(self.flats)}
        self.raw: list[list[Multichain]] = []
        self.raw_index: list[dict[Multichain, int]] = []
        self.basis: list[list[Multichain]] = []
        self.reduction: list[np.ndarray] = []
        self.degree_value = Fraction(1)
        self.flag_count = 0

    @property
    def dims(self) -> list[int]:
        return [len(b) for b in self.basis]

    def dim(self, p: int) -> int:
        return len(self.basis[p]) if 0 <= p <= self.r else 0

    def canonical_chain(self, flat_ids: Iterable[int]) -> Multichain | None:
        """Sort a monomial into a multichain, or None if two flats are incomparable."""
        ordered = tuple(sorted(flat_ids, key=lambda i: (len(self.flats[i]), i)))
        for a, b in zip(ordered, ordered[1:]):
            if not self.flats[a] <= self.flats[b]:
                return None
        return ordered

    def reduce_raw(self, p: int, raw_vector: dict[Multichain, Fraction]) -> ChowElement:
        """Coordinates of a linear combination of degree-p multichains."""
        coordinates = [ZERO] * self.dim(p)
        table = self.reduction[p]
        for chain, value in raw_vector.items():
            if value == 0:
                continue
            column = self.raw_index[p][chain]
            for i in range(len(coordinates)):
                coordinates[i] += value * table[i, column]
        return ChowElement(p, coordinates)

    def monomial(self, flats: Sequence[Iterable[int]]) -> ChowElement:
        """Class of x_{F_1} ... x_{F_p} for the given flats."""
        p = len(flats)
        if p > self.r:
            return ChowElement(p, ())
        ids = []
        for flat in flats:
            flat = frozenset(flat)
            if flat not in self.flat_index:
                raise InvalidParameters(f"{sorted(flat)} is not a proper nonempty flat")
            ids.append(self.flat_index[flat])
        chain = self.canonical_chain(ids)
        if chain is None:
            return self.zero(p)
        return self.reduce_raw(p, {chain: Fraction(1)})

    def unit(self) -> ChowElement:
        return ChowElement(0, [1])

    def zero(self, p: int) -> ChowElement:
        return ChowElement(p, [ZERO] * self.dim(p))

    def element(self, p: int, coordinates: Iterable) -> ChowElement:
        coordinates = list(coordinates)
        if len(coordinates) != self.dim(p):
            raise WrongDegree(f"A^{p} has dimension {self.dim(p)}, got {len(coordinates)} coordinates")
        return ChowElement(p, coordinates)

    def basis_element(self, p: int, i: int) -> ChowElement:
        coordinates = [ZERO] * self.dim(p)
        coordinates[i] = Fraction(1)
        return ChowElement(p, coordinates)

    def to_dict(self) -> dict:
        return {
            "label": self.matroid.label,
            "r": self.r,
            "dims": self.dims,
            "generators": [sorted(f) for f in self.flats],
            "degree_value": str(self.degree_value),
        }


def _multichains(ring: GradedChowRing, p: int) -> list[Multichain]:
    chains = []
    for combo in combinations_with_replacement(range(len(ring.flats)), p):
        chain = ring.canonical_chain(combo)
        if chain is not None:
            chains.append(chain)
    return sorted(set(chains))


def _relation_rows(ring: GradedChowRing, p: int) -> list[dict[Multichain, Fraction]]:
    """
    (L_0 - L_j) * m for every degree-(p-1) multichain m and j = 1..n-1, where
    L_i = sum of x_F over flats containing i. Differences against element 0
    span all differences L_i - L_j.
    """
    n = ring.matroid.n
    containing = [[k for k, flat in enumerate(ring.flats) if i in flat] for i in range(n)]
    rows = []
    for m in ring.raw[p - 1]:
        for j in range(1, n):
            row: dict[Multichain, Fraction] = {}
            for sign, element in ((1, 0), (-1, j)):
                for k in containing[element]:
                    chain = ring.canonical_chain(m + (k,))
                    if chain is not None:
                        row[chain] = row.get(chain, ZERO) + sign
            row = {c: v for c, v in row.items() if v != 0}
            if row:
                rows.append(row)
    return rows


def build_chow_ring(matroid: Matroid) -> GradedChowRing:
    """
    Build A^p (x) Q for 0 <= p <= r and normalize the degree functional.

    Raises:
        RankZero: rank(M) = 0
        LooplessRequired: M has loops
        InternalInconsistency: A^r is not one-dimensional or two complete
                               flags reduce to different classes
    """
    if matroid.rank < 1:
        raise RankZero(f"{matroid} has rank 0")
    if not matroid.is_loopless():
        raise LooplessRequired(f"{matroid} has loops", witness={"loops": sorted(matroid.loops())})

    ring = GradedChowRing(matroid)
    ring.raw.append([()])
    ring.raw_index.append({(): 0})
    ring.basis.append([()])
    ring.reduction.append(columns_to_matrix([[1]], 1))

    for p in range(1, ring.r + 1):
        raw = _multichains(ring, p)
        ring.raw.append(raw)
        ring.raw_index.append({chain: i for i, chain in enumerate(raw)})
        rows = _relation_rows(ring, p)
        relations = zeros(len(rows), len(raw))
        for i, row in enumerate(rows):
            for chain, value in row.items():
                relations[i, ring.raw_index[p][chain]] = to_fraction(value)
        reduced, pivots = rref(relations)
        free = [j for j in range(len(raw)) if j not in set(pivots)]
        table = zeros(len(free), len(raw))
        position = {j: k for k, j in enumerate(free)}
        for k, j in enumerate(free):
            table[k, j] = Fraction(1)
        for i, pivot in enumerate(pivots):
            for j in free:
                table[position[j], pivot] = -reduced[i, j]
        ring.basis.append([raw[j] for j in free])
        ring.reduction.append(table)
        logger.debug("A^%d of %s: %d multichains, %d relations, dim %d", p, matroid, len(raw), len(rows), len(free))

    if ring.dim(ring.r) != 1:
        raise InternalInconsistency(f"A^{ring.r} has dimension {ring.dim(ring.r)}", witness={"dims": ring.dims})

    flags = ring.lattice.complete_flags()
    values = set()
    for flag in flags:
        values.add(ring.monomial(flag).coordinates[0])
    if len(values) != 1 or ZERO in values:
        raise InternalInconsistency("Complete flags do not reduce to one nonzero class", witness={"values": sorted(str(v) for v in values)})
    ring.degree_value = 1 / values.pop()
    ring.flag_count = len(flags)
    logger.info("Chow ring of %s: dims %s, %d flags agree", matroid, ring.dims, len(flags))
    return ring


def multiply(ring: GradedChowRing, a: ChowElement, b: ChowElement) -> ChowElement:
    """Product of homogeneous elements, reduced to coordinates in A^(p+q)."""
    p, q = a.degree, b.degree
    if p + q > ring.r:
        raise DegreeOverflow(f"deg {p} + deg {q} exceeds top degree {ring.r}")
    raw: dict[Multichain, Fraction] = {}
    for i, x in enumerate(a.coordinates):
        if x == 0:
            continue
        for j, y in enumerate(b.coordinates):
            if y == 0:
                continue
            chain = ring.canonical_chain(ring.basis[p][i] + ring.basis[q][j])
            if chain is not None:
                raw[chain] = raw.get(chain, ZERO) + x * y
    return ring.reduce_raw(p + q, raw)


def power(ring: GradedChowRing, element: ChowElement, k: int) -> ChowElement:
    """element^k, defined as 0 once the degree exceeds r."""
    if k * element.degree > ring.r:
        return ChowElement(k * element.degree, ())
    result = ring.unit()
    for _ in range(k):
        result = multiply(ring, result, element)
    return result


def degree(ring: GradedChowRing, element: ChowElement) -> Fraction:
    if element.degree != ring.r:
        raise WrongDegree(f"deg is defined on A^{ring.r}, got degree {element.degree}")
    return element.coordinates[0] * ring.degree_value


def ample_from_weights(ring: GradedChowRing, weight: Callable[[frozenset[int]], object]) -> ChowElement:
    """
    l = sum_F c(F) x_F for a strictly submodular c with c(empty) = c(E) = 0.

    Raises:
        BadDegree: r = 0
        InvalidParameters: c is not strictly submodular
    """
    if ring.r < 1:
        raise BadDegree("No ample class in degree 1 when r = 0")
    witness = submodularity_witness(weight, ring.matroid.n)
    if witness is not None:
        raise InvalidParameters("Weighting is not strictly submodular", witness=witness)
    raw = {(i,): to_fraction(weight(flat)) for i, flat in enumerate(ring.flats)}
    return ring.reduce_raw(1, raw)


def default_weight(n: int) -> Callable[[frozenset[int]], int]:
    return lambda subset: len(subset) * (n - len(subset))


def ample_default(ring: GradedChowRing) -> ChowElement:
    """Ample class from c(F) = |F| (n - |F|)."""
    return ample_from_weights(ring, default_weight(ring.matroid.n))


def submodularity_witness(weight: Callable[[frozenset[int]], object], n: int) -> dict | None:
    """
    Check c(empty) = c(E) = 0 and strict submodularity through its local form

        c(S + i) + c(S + j) > c(S) + c(S + i + j)    for i, j not in S,

    which is equivalent to c(A) + c(B) > c(A u B) + c(A n B) for incomparable
    A, B. Returns a witness {"A", "B"} or None.
    """
    values = {}
    for mask in range(1 << n):
        values[mask] = to_fraction(weight(frozenset(i for i in range(n) if mask >> i & 1)))
    full = (1 << n) - 1
    if values[0] != 0 or values[full] != 0:
        return {"reason": "c(empty) and c(E) must vanish"}
    for mask in range(1 << n):
        outside = [i for i in range(n) if not mask >> i & 1]
        for i, j in combinations(outside, 2):
            a, b = mask | 1 << i, mask | 1 << j
            if values[a] + values[b] <= values[mask] + values[a | b]:
                return {"A": _members(a, n), "B": _members(b, n)}
    return None


def _members(mask: int, n: int) -> list[int]:
    return [i for i in range(n) if mask >> i & 1]


def is_strictly_submodular(weight: Callable[[frozenset[int]], object], n: int) -> bool:
    return submodularity_witness(weight, n) is None


def lefschetz_map_matrix(ring: GradedChowRing, element: ChowElement, p: int, k: int) -> np.ndarray:
    """Matrix of a -> element^k * a from A^p to A^(p+k) (zero rows above degree r)."""
    source = ring.dim(p)
    if p + k * element.degree > ring.r:
        return zeros(0, source)
    multiplier = power(ring, element, k)
    columns = [multiply(ring, multiplier, ring.basis_element(p, i)).coordinates for i in range(source)]
    return columns_to_matrix(columns, ring.dim(p + k * element.degree))


def _check_p(ring: GradedChowRing, element: ChowElement | None, p: int):
    if p < 0 or 2 * p > ring.r:
        raise BadDegree(f"Need 0 <= p <= r/2, got p={p}, r={ring.r}", witness={"p": p, "r": ring.r})
    if element is not None and element.degree != 1:
        raise BadDegree(f"Ample class must have degree 1, got {element.degree}")


def check_hard_lefschetz(ring: GradedChowRing, element: ChowElement, p: int) -> dict:
    """
    Is a -> l^(r-2p) a an isomorphism A^p -> A^(r-p)?

    Returns:
        dict: {"is_iso", "rank", "dim_source", "dim_target"}
    """
    _check_p(ring, element, p)
    matrix = lefschetz_map_matrix(ring, element, p, ring.r - 2 * p)
    matrix_rank = rank(matrix)
    source, target = ring.dim(p), ring.dim(ring.r - p)
    is_iso = source == target and matrix_rank == source
    if not is_iso:
        logger.warning("Hard Lefschetz fails for %s at p=%d: rank %d of %dx%d", ring.matroid, p, matrix_rank, target, source)
    return {"is_iso": is_iso, "rank": matrix_rank, "dim_source": source, "dim_target": target}


def hodge_riemann_sign(p: int, q: int):
    """i^(p-q) (-1)^((p+q)(p+q-1)/2); equal to (-1)^p on the diagonal."""
    return I ** (p - q) * Integer(-1) ** ((p + q) * (p + q - 1) // 2)


def hodge_riemann_form(ring: GradedChowRing, element: ChowElement, p: int) -> np.ndarray:
    """Q_ij = sign(p, p) * deg(l^(r-2p) e_i e_j) on the basis of A^p."""
    _check_p(ring, element, p)
    sign = int(hodge_riemann_sign(p, p))
    multiplier = power(ring, element, ring.r - 2 * p)
    n = ring.dim(p)
    lifted = [multiply(ring, multiplier, ring.basis_element(p, i)) for i in range(n)]
    form = zeros(n, n)
    for i in range(n):
        for j in range(n):
            form[i, j] = sign * degree(ring, multiply(ring, lifted[i], ring.basis_element(p, j)))
    if not is_symmetric(form):
        raise InternalInconsistency(f"Hodge-Riemann form in degree {p} is not symmetric")
    return form


def primitive_subspace(ring: GradedChowRing, element: ChowElement, p: int) -> np.ndarray:
    """Columns spanning ker(l^(r-2p+1): A^p -> A^(r-p+1)); all of A^0 for p = 0."""
    _check_p(ring, element, p)
    return nullspace(lefschetz_map_matrix(ring, element, p, ring.r - 2 * p + 1))


def check_hodge_riemann(ring: GradedChowRing, element: ChowElement, p: int) -> dict:
    """
    Restrict the Hodge-Riemann form to the primitive subspace and compute
    its inertia.

    Returns:
        dict: {"holds", "signature", "pivots", "primitive_dim"}
    """
    form = hodge_riemann_form(ring, element, p)
    kernel = primitive_subspace(ring, element, p)
    restricted = mat_mul(kernel.T, form, kernel)
    signature, pivots = inertia(restricted)
    holds = signature.is_positive_definite
    if not holds:
        logger.warning("Hodge-Riemann fails for %s at p=%d: %s", ring.matroid, p, signature)
    return {"holds": holds, "signature": signature, "pivots": pivots, "primitive_dim": kernel.shape[1]}


def full_form_signature(ring: GradedChowRing, element: ChowElement, p: int) -> Signature:
    """Inertia of the Hodge-Riemann form on all of A^p."""
    signature, _ = inertia(hodge_riemann_form(ring, element, p))
    return signature


def check_poincare_duality(ring: GradedChowRing, p: int) -> dict:
    """Is the pairing A^p x A^(r-p) -> Q, (a, b) -> deg(ab), nondegenerate?"""
    if p < 0 or p > ring.r:
        raise BadDegree(f"Need 0 <= p <= r, got p={p}")
    rows, cols = ring.dim(p), ring.dim(ring.r - p)
    pairing = zeros(rows, cols)
    for i in range(rows):
        for j in range(cols):
            pairing[i, j] = degree(ring, multiply(ring, ring.basis_element(p, i), ring.basis_element(ring.r - p, j)))
    pairing_rank = rank(pairing)
    return {"holds": rows == cols == pairing_rank, "rank": pairing_rank, "dims": [rows, cols]}
