# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Weighted Rational Polyhedral Complexes

A cell is the Minkowski sum of the convex hull of some vertices and the
cone over some rays, stored as a pair (vertex ids, ray ids). Generators of
a cell are affinely independent, so dim = |V| - 1 + |R|, and the faces of
a cell are the pairs (V', R') with V' a nonempty subset of V and R' a
subset of R. Maximal cells carry nonzero integer weights.

Cells are indexed in the canonical order (dim, sorted vertex ids, sorted
ray ids); cell ids used by the CLI refer to this order.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import chain, combinations
from typing import Iterable, Sequence

from sympy import Rational
from sympy.solvers.simplex import InfeasibleLPError, UnboundedLPError, linprog

from errors import BadIntersection, CellNotFound, DimensionMismatch, InvalidParameters, MissingFace, NonPrimitiveRay, ZeroWeight
from lattice_utils import is_primitive
from linalg_utils import columns_to_matrix, det, rank, to_fraction
from debug import get_logger

logger = get_logger(__file__)

CellKey = tuple[frozenset[int], frozenset[int]]


def cell_key(vertex_ids: Iterable[int], ray_ids: Iterable[int] = ()) -> CellKey:
    return (frozenset(int(v) for v in vertex_ids), frozenset(int(r) for r in ray_ids))


def cell_dim(key: CellKey) -> int:
    return len(key[0]) - 1 + len(key[1])


def sort_key(key: CellKey) -> tuple:
    return (cell_dim(key), sorted(key[0]), sorted(key[1]))


def _subsets(items: Iterable[int], nonempty: bool = False):
    items = sorted(items)
    start = 1 if nonempty else 0
    return chain.from_iterable(combinations(items, k) for k in range(start, len(items) + 1))


def all_faces(key: CellKey) -> list[CellKey]:
    """Every face of a cell, the cell itself included."""
    return [cell_key(v, r) for v in _subsets(key[0], nonempty=True) for r in _subsets(key[1])]


class WeightedComplex:
    """
    Weighted complex in R^n with simplicial cells.

    Attributes:
        ambient_dim: n
        vertices: tuple of rational coordinate tuples
        rays: tuple of primitive integer tuples
        cells: cell keys in canonical order
        weights: weight per cell key (only maximal cells are required)
        declared_dims: optional declared intrinsic dimension per cell
        warnings: flags recorded by validation (e.g. "not_pure")
    """

    def __init__(self, ambient_dim: int, vertices: Sequence[Sequence], rays: Sequence[Sequence[int]],
                 cells: Iterable[CellKey], weights: dict[CellKey, int] | None = None,
                 declared_dims: dict[CellKey, int] | None = None, label: str = ""):
        self.ambient_dim = int(ambient_dim)
        self.vertices = tuple(tuple(to_fraction(x) for x in v) for v in vertices)
        self.rays = tuple(tuple(int(x) for x in r) for r in rays)
        self.cells = sorted(set(cells), key=sort_key)
        self.cell_index = {key: i for i, key in enumerate(self.cells)}
        self.weights = {key: int(w) for key, w in (weights or {}).items()}
        self.declared_dims = dict(declared_dims or {})
        self.label = label
        self.warnings: list[str] = []
        self._cofaces: dict[CellKey, list[CellKey]] | None = None

    @property
    def dim(self) -> int:
        return max((cell_dim(c) for c in self.cells), default=-1)

    def has_rays(self) -> bool:
        return any(key[1] for key in self.cells)

    def __contains__(self, key: CellKey) -> bool:
        return key in self.cell_index

    def cell(self, cell_id: int) -> CellKey:
        if not 0 <= cell_id < len(self.cells):
            raise CellNotFound(f"No cell with id {cell_id}", witness={"cell": cell_id})
        return self.cells[cell_id]

    def resolve(self, cell) -> CellKey:
        """Accept a cell id or a cell key."""
        if isinstance(cell, int):
            return self.cell(cell)
        key = cell_key(*cell)
        if key not in self.cell_index:
            raise CellNotFound(f"Cell {describe_key(key)} is not in the complex", witness=describe_key(key))
        return key

    def cell_id(self, key: CellKey) -> int:
        return self.cell_index[key]

    def cells_of_dim(self, d: int) -> list[CellKey]:
        return [c for c in self.cells if cell_dim(c) == d]

    def faces(self, key: CellKey) -> list[CellKey]:
        """Proper faces of a cell."""
        return [f for f in all_faces(key) if f != key]

    def facets(self, key: CellKey) -> list[CellKey]:
        return [f for f in self.faces(key) if cell_dim(f) == cell_dim(key) - 1]

    def cofaces(self, key: CellKey) -> list[CellKey]:
        """Cells strictly containing `key`, in canonical order."""
        if self._cofaces is None:
            table: dict[CellKey, list[CellKey]] = {c: [] for c in self.cells}
            for c in self.cells:
                for f in self.faces(c):
                    if f in table:
                        table[f].append(c)
            self._cofaces = table
        return list(self._cofaces.get(key, []))

    def maximal_cells(self) -> list[CellKey]:
        return [c for c in self.cells if not self.cofaces(c)]

    def is_pure(self) -> bool:
        return len({cell_dim(c) for c in self.maximal_cells()}) <= 1

    def is_fan(self) -> bool:
        return len(self.vertices) == 1 and all(x == 0 for x in self.vertices[0])

    def weight(self, key: CellKey) -> int:
        return self.weights.get(key, 0)

    def vertex_points(self, key: CellKey) -> list[tuple[Fraction, ...]]:
        return [self.vertices[v] for v in sorted(key[0])]

    def ray_vectors(self, key: CellKey) -> list[tuple[int, ...]]:
        return [self.rays[r] for r in sorted(key[1])]

    def tangent_generators(self, key: CellKey) -> list[tuple[Fraction, ...]]:
        """Differences v_i - v_0 and the rays: a rational spanning set of Tan(cell)."""
        points = self.vertex_points(key)
        base = points[0]
        differences = [tuple(a - b for a, b in zip(p, base)) for p in points[1:]]
        return differences + [tuple(Fraction(x) for x in r) for r in self.ray_vectors(key)]

    def interior_point(self, key: CellKey) -> tuple[Fraction, ...]:
        """Barycenter of the vertices plus the sum of the rays."""
        points = self.vertex_points(key)
        result = [sum((p[i] for p in points), Fraction(0)) / len(points) for i in range(self.ambient_dim)]
        for r in self.ray_vectors(key):
            result = [x + y for x, y in zip(result, r)]
        return tuple(result)

    def describe(self, key: CellKey) -> dict:
        return {"id": self.cell_index.get(key), **describe_key(key)}

    def max_weights(self) -> dict[CellKey, int]:
        return {c: self.weight(c) for c in self.maximal_cells()}

    def __repr__(self) -> str:
        name = self.label or "WeightedComplex"
        return f"<{name} n={self.ambient_dim} dim={self.dim} cells={len(self.cells)}>"


def describe_key(key: CellKey) -> dict:
    return {"v": sorted(key[0]), "r": sorted(key[1])}


def close_faces(cells: Iterable[CellKey]) -> list[CellKey]:
    """Every face of every given cell."""
    closed = set()
    for key in cells:
        closed.update(all_faces(key))
    return sorted(closed, key=sort_key)


def _generator_ids(key: CellKey) -> list[tuple[str, int]]:
    return [("v", v) for v in sorted(key[0])] + [("r", r) for r in sorted(key[1])]


def _meets_outside_common_face(complex_: WeightedComplex, first: CellKey, second: CellKey) -> bool:
    """
    True when two cells share a point outside the face spanned by their
    common generators.

    A point of the intersection is written in both cells as a convex
    combination of vertices plus a nonnegative combination of rays. If the
    homogenized generators (v, 1) and (r, 0) of both cells are linearly
    independent the two writings agree and only common generators appear.
    Otherwise an exact LP maximizes the total coefficient on generators
    the cells do not share.
    """
    n = complex_.ambient_dim

    def homogenized(gen):
        kind, i = gen
        if kind == "v":
            return [*complex_.vertices[i], Fraction(1)]
        return [Fraction(x) for x in complex_.rays[i]] + [Fraction(0)]

    union = sorted(set(_generator_ids(first)) | set(_generator_ids(second)))
    if rank(columns_to_matrix([homogenized(g) for g in union], n + 1)) == len(union):
        return False

    columns = []
    objective = []
    for sign, key, other in ((1, first, second), (-1, second, first)):
        shared = set(_generator_ids(other))
        for gen in _generator_ids(key):
            vector = homogenized(gen)
            column = [sign * x for x in vector[:n]]
            column += [vector[n], 0] if sign > 0 else [0, vector[n]]
            columns.append(column)
            objective.append(0 if gen in shared else -1)
    equalities = [[Rational(column[i].numerator, column[i].denominator) for column in columns] for i in range(n + 2)]
    rhs = [0] * n + [1, 1]
    # A x = b as A x <= b and -A x <= -b
    rows = equalities + [[-x for x in row] for row in equalities]
    try:
        optimum, _ = linprog(objective, A=rows, b=rhs + [-x for x in rhs])
    except InfeasibleLPError:
        return False
    except UnboundedLPError:
        return True
    return bool(optimum < 0)


def check_intersections(complex_: WeightedComplex) -> None:
    """
    Raises:
        BadIntersection: two maximal cells meet outside a common face
    """
    for first, second in combinations(complex_.maximal_cells(), 2):
        if _meets_outside_common_face(complex_, first, second):
            raise BadIntersection(
                f"Cells {describe_key(first)} and {describe_key(second)} do not meet in a common face",
                witness={"cells": [describe_key(first), describe_key(second)]},
            )


def validate_complex(complex_: WeightedComplex, intersections: bool = True) -> WeightedComplex:
    """
    Check the structural invariants of a complex.

    Pairwise intersections of maximal cells are checked unless
    `intersections` is False, which constructors use when the cells come
    from an already valid complex.

    Raises:
        InvalidParameters: ids out of range, cells without a vertex, repeated generators
        DimensionMismatch: wrong coordinate length, dependent generators or declared dim
        NonPrimitiveRay: a ray with gcd != 1
        MissingFace: a face of a cell is absent
        ZeroWeight: a maximal cell with weight 0
        BadIntersection: two maximal cells meet outside a common face

    Returns:
        The same complex; a non-pure complex is accepted with the
        "not_pure" warning recorded.
    """
    n = complex_.ambient_dim
    for i, vertex in enumerate(complex_.vertices):
        if len(vertex) != n:
            raise DimensionMismatch(f"Vertex {i} has {len(vertex)} coordinates, expected {n}", witness={"vertex": i})
    for i, ray in enumerate(complex_.rays):
        if len(ray) != n:
            raise DimensionMismatch(f"Ray {i} has {len(ray)} coordinates, expected {n}", witness={"ray": i})
        if not is_primitive(ray):
            raise NonPrimitiveRay(f"Ray {i} = {list(ray)} is not lattice-primitive", witness={"ray": i, "vector": list(ray)})
    if len(set(complex_.vertices)) != len(complex_.vertices):
        raise InvalidParameters("Repeated vertex coordinates")
    if len(set(complex_.rays)) != len(complex_.rays):
        raise InvalidParameters("Repeated ray directions")

    for key in complex_.cells:
        vertex_ids, ray_ids = key
        if not vertex_ids:
            raise InvalidParameters("Every cell needs at least one vertex", witness=describe_key(key))
        if any(v < 0 or v >= len(complex_.vertices) for v in vertex_ids) or any(r < 0 or r >= len(complex_.rays) for r in ray_ids):
            raise InvalidParameters(f"Cell {describe_key(key)} references unknown generators", witness=describe_key(key))
        generators = complex_.tangent_generators(key)
        if generators and rank(columns_to_matrix(generators, n)) != len(generators):
            raise DimensionMismatch(f"Generators of cell {describe_key(key)} are not affinely independent", witness=describe_key(key))
        declared = complex_.declared_dims.get(key)
        if declared is not None and declared != cell_dim(key):
            raise DimensionMismatch(
                f"Cell {describe_key(key)} declares dim {declared}, generators give {cell_dim(key)}",
                witness={**describe_key(key), "declared": declared, "actual": cell_dim(key)},
            )
        for face in complex_.faces(key):
            if face not in complex_:
                raise MissingFace(
                    f"Face {describe_key(face)} of cell {describe_key(key)} is missing",
                    witness={"cell": describe_key(key), "face": describe_key(face)},
                )

    for key in complex_.maximal_cells():
        if complex_.weight(key) == 0:
            raise ZeroWeight(f"Maximal cell {describe_key(key)} has weight 0", witness=describe_key(key))
    if intersections:
        check_intersections(complex_)

    complex_.warnings = []
    if not complex_.is_pure():
        dims = sorted({cell_dim(c) for c in complex_.maximal_cells()})
        logger.warning("%s is not pure: maximal cells of dimensions %s", complex_, dims)
        complex_.warnings.append("not_pure")
    logger.debug("Validated %s", complex_)
    return complex_


def build_complex(ambient_dim: int, vertices, rays, cells: Iterable[tuple[Iterable[int], Iterable[int], int]],
                  close: bool = True, label: str = "") -> WeightedComplex:
    """
    Build and validate a complex from (vertex ids, ray ids, weight) triples.

    With `close` every implied face is added; otherwise missing faces are
    reported by validation.
    """
    keys = []
    weights = {}
    for vertex_ids, ray_ids, weight in cells:
        key = cell_key(vertex_ids, ray_ids)
        keys.append(key)
        if weight is not None:
            weights[key] = int(weight)
    if close:
        keys = close_faces(keys)
    return validate_complex(WeightedComplex(ambient_dim, vertices, rays, keys, weights, label=label))


def transform_complex(complex_: WeightedComplex, matrix: Sequence[Sequence[int]]) -> WeightedComplex:
    """
    Apply a unimodular change of coordinates x -> U x.

    Raises:
        InvalidParameters: U is not an integer matrix with determinant +-1
    """
    n = complex_.ambient_dim
    u = [[int(x) for x in row] for row in matrix]
    if len(u) != n or any(len(row) != n for row in u) or abs(det(columns_to_matrix([[u[i][j] for i in range(n)] for j in range(n)], n))) != 1:
        raise InvalidParameters("Coordinate change must be a unimodular n x n integer matrix")

    def apply(vector):
        return tuple(sum((u[i][j] * vector[j] for j in range(n)), Fraction(0)) for i in range(n))

    vertices = [apply(v) for v in complex_.vertices]
    rays = [tuple(int(x) for x in apply(r)) for r in complex_.rays]
    result = WeightedComplex(n, vertices, rays, complex_.cells, complex_.weights, label=complex_.label)
    return validate_complex(result, intersections=False)


def scale_weights(complex_: WeightedComplex, factor: int) -> WeightedComplex:
    if factor == 0:
        raise InvalidParameters("Weights cannot be scaled by 0")
    weights = {key: factor * w for key, w in complex_.weights.items()}
    return validate_complex(WeightedComplex(complex_.ambient_dim, complex_.vertices, complex_.rays, complex_.cells, weights, label=complex_.label), intersections=False)


def with_weights(complex_: WeightedComplex, weights: dict[CellKey, int]) -> WeightedComplex:
    merged = dict(complex_.weights)
    merged.update(weights)
    return validate_complex(WeightedComplex(complex_.ambient_dim, complex_.vertices, complex_.rays, complex_.cells, merged, label=complex_.label), intersections=False)


def barycentric_subdivision(complex_: WeightedComplex) -> WeightedComplex:
    """
    Subdivide along chains of faces.

    Every cell F gets the new vertex b_F = barycenter(V(F)) + sum(R(F)). A
    chain F_0 < ... < F_k together with a subset T of the rays of F_0 gives
    the new cell conv(b_F0, ..., b_Fk) + cone(T). Recession rays are kept,
    and a new cell of full dimension inside a maximal cell inherits its weight.
    """
    cells = complex_.cells
    new_vertex = {key: i for i, key in enumerate(cells)}
    vertices = [complex_.interior_point(key) for key in cells]
    maximal = set(complex_.maximal_cells())

    chains: list[list[CellKey]] = [[key] for key in cells]
    frontier = chains[:]
    while frontier:
        extended = []
        for flag in frontier:
            for coface in complex_.cofaces(flag[-1]):
                extended.append(flag + [coface])
        chains.extend(extended)
        frontier = extended

    new_cells = set()
    weights = {}
    for flag in chains:
        bottom, top = flag[0], flag[-1]
        vertex_ids = [new_vertex[f] for f in flag]
        for ray_ids in _subsets(bottom[1]):
            key = cell_key(vertex_ids, ray_ids)
            new_cells.add(key)
            if top in maximal and cell_dim(key) == cell_dim(top):
                weights[key] = complex_.weight(top)
    result = WeightedComplex(complex_.ambient_dim, vertices, complex_.rays, new_cells, weights, label=f"sd({complex_.label})" if complex_.label else "")
    logger.debug("Barycentric subdivision: %d cells -> %d cells", len(cells), len(new_cells))
    return validate_complex(result, intersections=False)
