# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Weighted complexes: validation, normal vectors, balancing, Q-smoothness,
star fans and Bergman fans.
"""

from fractions import Fraction

import pytest

from errors import (
    BadIntersection,
    CellNotFound,
    DimensionMismatch,
    InvalidParameters,
    LooplessRequired,
    MissingFace,
    NonPrimitiveRay,
    NotAFacet,
    NotBalanced,
    NotPure,
    ZeroWeight,
)
from fan_utils import bergman_fan, bergman_ray, flat_of_ray, star_fan
from matroid import matroid_from_bases, matroid_uniform
from tropical_checks import check_balancing, check_q_smooth_codim1, normal_matrix, primitive_normal, tangent_lattice
from weighted_complex import (
    WeightedComplex,
    barycentric_subdivision,
    build_complex,
    cell_key,
    scale_weights,
    transform_complex,
    validate_complex,
    with_weights,
)

LINE_RAYS = [[1, 0], [0, 1], [-1, -1]]


def tropical_line_cells(weights=(1, 1, 1)):
    return [([0], [r], w) for r, w in enumerate(weights)]


class TestValidation:

    def test_faces_are_closed(self, tropical_line):
        assert len(tropical_line.cells) == 4
        assert tropical_line.dim == 1
        assert tropical_line.is_fan()
        assert tropical_line.is_pure()
        assert len(tropical_line.maximal_cells()) == 3

    def test_canonical_order(self, tropical_line):
        assert tropical_line.cell(0) == cell_key([0])
        assert tropical_line.cell(1) == cell_key([0], [0])
        with pytest.raises(CellNotFound):
            tropical_line.cell(4)

    def test_missing_face(self):
        with pytest.raises(MissingFace):
            build_complex(2, [[0, 0]], [[1, 0]], [([0], [0], 1)], close=False)

    def test_non_primitive_ray(self):
        with pytest.raises(NonPrimitiveRay):
            build_complex(2, [[0, 0]], [[2, 0]], [([0], [0], 1)])

    def test_wrong_coordinate_length(self):
        with pytest.raises(DimensionMismatch):
            build_complex(2, [[0, 0, 0]], [], [([0], [], 1)])

    def test_dependent_generators(self):
        with pytest.raises(DimensionMismatch):
            build_complex(2, [[0, 0]], [[1, 0], [-1, 0]], [([0], [0, 1], 1)])

    def test_declared_dimension(self):
        key = cell_key([0, 1])
        complex_ = WeightedComplex(1, [[0], [1]], [], [cell_key([0]), cell_key([1]), key], {key: 1}, {key: 2})
        with pytest.raises(DimensionMismatch):
            validate_complex(complex_)

    def test_zero_weight(self):
        with pytest.raises(ZeroWeight):
            build_complex(2, [[0, 0]], LINE_RAYS, tropical_line_cells((1, 0, 1)))

    def test_unknown_generator(self):
        with pytest.raises(InvalidParameters):
            build_complex(2, [[0, 0]], LINE_RAYS, [([0], [5], 1)])

    def test_overlapping_cones(self):
        with pytest.raises(BadIntersection) as info:
            build_complex(2, [[0, 0]], [[1, 0], [0, 1], [1, 1]], [([0], [0, 1], 1), ([0], [0, 2], 1)])
        assert info.value.witness == {"cells": [{"v": [0], "r": [0, 1]}, {"v": [0], "r": [0, 2]}]}

    def test_crossing_segments(self):
        with pytest.raises(BadIntersection):
            build_complex(2, [[0, 0], [2, 2], [0, 2], [2, 0]], [], [([0, 1], [], 1), ([2, 3], [], 1)])

    def test_vertex_inside_another_cell(self):
        with pytest.raises(BadIntersection):
            build_complex(2, [[0, 0], [2, 0], [1, 0], [1, 1]], [], [([0, 1], [], 1), ([2, 3], [], 1)])

    def test_ray_through_a_segment(self):
        with pytest.raises(BadIntersection):
            build_complex(2, [[0, 0], [1, -1], [1, 1]], [[1, 0]], [([0], [0], 1), ([1, 2], [], 1)])

    def test_cells_meeting_in_common_faces(self):
        quadrant = build_complex(2, [[0, 0]], [[1, 0], [0, 1], [-1, 0]], [([0], [0, 1], 1), ([0], [1, 2], 1)])
        assert len(quadrant.maximal_cells()) == 2
        parallel = build_complex(2, [[0, 0], [1, 0], [0, 1], [1, 1]], [], [([0, 1], [], 1), ([2, 3], [], 1)])
        assert len(parallel.maximal_cells()) == 2

    def test_bergman_fan_passes_the_full_check(self, u34):
        fan = bergman_fan(u34)
        assert validate_complex(fan) is fan

    def test_not_pure_is_a_warning(self):
        cells = tropical_line_cells() + [([1], [], 1)]
        complex_ = build_complex(2, [[0, 0], [3, 3]], LINE_RAYS, cells)
        assert complex_.warnings == ["not_pure"]
        with pytest.raises(NotPure):
            check_balancing(complex_)


class TestNormals:

    def test_tangent_lattice_saturates(self):
        complex_ = build_complex(2, [[0, 0], [Fraction(1, 2), Fraction(1, 2)]], [], [([0, 1], [], 1)])
        basis = tangent_lattice(complex_, cell_key([0, 1]))
        assert basis in ([(1, 1)], [(-1, -1)])

    def test_quotient_normal(self):
        # Q spanned by (1,0), P spanned by (1,0) and (1,2): the normal is the class of (0,1)
        complex_ = build_complex(2, [[0, 0]], [[1, 0], [1, 2]], [([0], [0, 1], 1)])
        normal = primitive_normal(complex_, cell_key([0], [0]), cell_key([0], [0, 1]))
        assert len(normal.vector) == 1
        assert abs(normal.vector[0]) == 1
        assert normal.lift[1] == 1

    def test_vertex_normals_are_rays(self, tropical_line):
        assert normal_matrix(tropical_line, 0) == LINE_RAYS

    def test_not_a_facet(self, tropical_line):
        with pytest.raises(NotAFacet):
            primitive_normal(tropical_line, 1, 2)


class TestBalancing:

    def test_tropical_line_is_balanced(self, tropical_line):
        result = check_balancing(tropical_line)
        assert result["balanced"]
        assert [c["defect"] for c in result["cells"]] == [[0, 0]]

    def test_heavy_ray_defect(self, tropical_line):
        heavy = with_weights(tropical_line, {cell_key([0], [2]): 2})
        result = check_balancing(heavy)
        assert not result["balanced"]
        assert result["cells"][0]["defect"] == [-1, -1]
        with pytest.raises(NotBalanced) as info:
            check_q_smooth_codim1(heavy)
        assert info.value.witness == {"cell": 0, "defect": [-1, -1]}

    def test_interval_is_not_balanced(self, interval):
        result = check_balancing(interval)
        assert not result["balanced"]
        assert sorted(c["defect"] for c in result["cells"]) == [[-1], [1]]

    def test_scaling_keeps_balancing(self, tropical_line):
        assert check_balancing(scale_weights(tropical_line, 3))["balanced"]
        with pytest.raises(InvalidParameters):
            scale_weights(tropical_line, 0)

    def test_unimodular_change_keeps_balancing(self, tropical_line):
        sheared = transform_complex(tropical_line, [[1, 1], [0, 1]])
        assert sheared.rays == ((1, 0), (1, 1), (-2, -1))
        assert check_balancing(sheared)["balanced"]
        with pytest.raises(InvalidParameters):
            transform_complex(tropical_line, [[2, 0], [0, 1]])

    def test_subdivision_keeps_balancing(self, tropical_line):
        subdivided = barycentric_subdivision(tropical_line)
        assert len(subdivided.maximal_cells()) == 6
        assert check_balancing(subdivided)["balanced"]

    def test_parallel_matches_serial(self, cross):
        assert check_balancing(cross, jobs=3) == check_balancing(cross, jobs=1)


class TestSmoothness:

    def test_tropical_line_is_smooth(self, tropical_line):
        result = check_q_smooth_codim1(tropical_line)
        assert result["smooth"]
        assert result["cells"][0]["kernel_dim"] == 1

    def test_cross_is_not_smooth(self, cross):
        result = check_q_smooth_codim1(cross)
        assert not result["smooth"]
        assert result["cells"][0]["kernel_dim"] == 2
        assert result["cells"][0]["flags"] == ["uniquely_p_balanced_unchecked"]


class TestFans:

    def test_bergman_u23(self):
        fan = bergman_fan(matroid_uniform(2, 3))
        assert fan.rays == ((1, 0), (0, 1), (-1, -1))
        assert fan.label == "B(U2,3)"
        assert all(fan.weight(c) == 1 for c in fan.maximal_cells())
        assert check_balancing(fan)["balanced"]

    def test_bergman_u34(self):
        matroid = matroid_uniform(3, 4)
        fan = bergman_fan(matroid)
        assert fan.ambient_dim == 3
        assert fan.dim == 2
        assert [len(fan.cells_of_dim(d)) for d in range(3)] == [1, 10, 12]
        assert check_balancing(fan)["balanced"]
        assert check_q_smooth_codim1(fan)["smooth"]
        assert flat_of_ray(matroid, 4) == frozenset({0, 1})
        assert fan.rays[4] == bergman_ray({0, 1}, 4) == (1, 1, 0)

    def test_bergman_with_loops(self):
        with pytest.raises(LooplessRequired) as info:
            bergman_fan(matroid_from_bases(3, [[0, 1]]))
        assert info.value.witness == {"loops": [2]}

    def test_star_of_vertex(self, tropical_line):
        star = star_fan(tropical_line, 0)
        assert star.rays == ((-1, -1), (0, 1), (1, 0))
        assert check_balancing(star)["balanced"]

    def test_star_of_maximal_cell(self, tropical_line):
        star = star_fan(tropical_line, 1)
        assert star.ambient_dim == 1
        assert star.dim == 0
        assert star.weight(cell_key([0])) == 1

    def test_star_in_bergman_fan(self):
        fan = bergman_fan(matroid_uniform(3, 4))
        ray = fan.cell_id(cell_key([0], [0]))
        star = star_fan(fan, ray)
        # the star of the ray of an atom is the tropical line of U(2,3)
        assert star.ambient_dim == 2
        assert len(star.maximal_cells()) == 3
        assert check_balancing(star)["balanced"]

    def test_star_unknown_cell(self, tropical_line):
        with pytest.raises(CellNotFound):
            star_fan(tropical_line, 17)
