# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Fan constructions: star fans of cells and Bergman fans of matroids.
"""

from __future__ import annotations

from errors import InternalInconsistency, InvalidParameters, LooplessRequired
from lattice_utils import primitive_vector
from matroid import Matroid
from tropical_checks import quotient_by_cell
from weighted_complex import WeightedComplex, cell_dim, cell_key, describe_key, validate_complex
from debug import get_logger

logger = get_logger(__file__)


def star_fan(complex_: WeightedComplex, cell) -> WeightedComplex:
    """
    Star of a cell R, as a fan in Z^n / (Z^n ∩ Tan R) coordinates.

    Every cell F containing R contributes the cone spanned by the images of
    the generators of F that are not generators of R. Rays of the star are
    sorted lexicographically; maximal cones keep the weight of their cell.

    Raises:
        CellNotFound: R is not a cell of the complex
        InternalInconsistency: two cells give the same cone
    """
    r_key = complex_.resolve(cell)
    quotient = quotient_by_cell(complex_, r_key)
    base = complex_.vertices[min(r_key[0])]
    containing = [r_key] + complex_.cofaces(r_key)

    def images(f_key):
        result = []
        for v in sorted(f_key[0] - r_key[0]):
            difference = tuple(a - b for a, b in zip(complex_.vertices[v], base))
            result.append(primitive_vector(quotient.project(difference)))
        for r in sorted(f_key[1] - r_key[1]):
            result.append(primitive_vector(quotient.project(complex_.rays[r])))
        return result

    per_cell = {f: images(f) for f in containing}
    rays = sorted({ray for rays_of_f in per_cell.values() for ray in rays_of_f})
    ray_index = {ray: i for i, ray in enumerate(rays)}

    cells = []
    weights = {}
    owner = {}
    for f_key, rays_of_f in per_cell.items():
        cone = cell_key([0], [ray_index[ray] for ray in rays_of_f])
        if cone in owner or cell_dim(cone) != cell_dim(f_key) - cell_dim(r_key):
            raise InternalInconsistency(
                f"Star of {describe_key(r_key)} is not a fan: cells overlap",
                witness={"cells": [describe_key(f_key), describe_key(owner.get(cone, f_key))]},
            )
        owner[cone] = f_key
        cells.append(cone)
        if not complex_.cofaces(f_key):
            weights[cone] = complex_.weight(f_key)

    label = f"star({complex_.label}, {complex_.cell_id(r_key)})" if complex_.label else ""
    star = WeightedComplex(quotient.dim, [[0] * quotient.dim], rays, cells, weights, label=label)
    logger.debug("Star of cell %d: %d rays, %d cones", complex_.cell_id(r_key), len(rays), len(cells))
    return validate_complex(star, intersections=False)


def bergman_ray(flat, n: int) -> tuple[int, ...]:
    """e_F modulo (1, ..., 1), in the coordinates x_i - x_{n-1}."""
    last = 1 if n - 1 in flat else 0
    return tuple((1 if i in flat else 0) - last for i in range(n - 1))


def bergman_fan(matroid: Matroid) -> WeightedComplex:
    """
    Bergman fan of a loopless matroid in R^n / R(1, ..., 1) = R^(n-1).

    One ray per proper flat, one cone per chain of proper flats (the empty
    chain is the origin) and weight 1 on the cones of complete flags.

    Raises:
        LooplessRequired: the matroid has loops
        InvalidParameters: the ground set is empty
    """
    if not matroid.is_loopless():
        raise LooplessRequired(f"{matroid} has loops", witness={"loops": sorted(matroid.loops())})
    if matroid.n == 0:
        raise InvalidParameters("Bergman fan needs a nonempty ground set")
    n = matroid.n
    lattice = matroid.lattice()
    flats = lattice.proper_flats()
    rays = [bergman_ray(f, n) for f in flats]

    chains = [[]]
    frontier = [[]]
    while frontier:
        extended = [chain + [j] for chain in frontier for j in range(len(flats)) if not chain or flats[chain[-1]] < flats[j]]
        chains.extend(extended)
        frontier = extended

    top_length = matroid.rank - 1
    cells = [cell_key([0], chain) for chain in chains]
    weights = {cell_key([0], chain): 1 for chain in chains if len(chain) == top_length}
    label = f"B({matroid.label})" if matroid.label else "bergman"
    fan = WeightedComplex(n - 1, [[0] * (n - 1)], rays, cells, weights, label=label)
    logger.debug("Bergman fan of %s: %d rays, %d cones", matroid, len(rays), len(cells))
    return validate_complex(fan, intersections=False)


def flat_of_ray(matroid: Matroid, ray_id: int) -> frozenset[int]:
    """The proper flat behind ray `ray_id` of `bergman_fan(matroid)`."""
    return matroid.lattice().proper_flats()[ray_id]
