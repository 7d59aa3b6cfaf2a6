# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

import networkx as nx
import pytest

from cellular_cohomology import (
    CochainComplex,
    as_bounded,
    build_cochain_complex,
    build_multitangent,
    cohomology_dims,
    cohomology_table,
    exterior_power,
)
from compactification import bounded_dim, canonical_compactification, compactify
from errors import DegreeOutOfRange, InternalInconsistency, NotAFan, UnboundedInput
from fan_utils import bergman_fan
from linalg_utils import frac_matrix, identity, mat_mul
from matroid import matroid_uniform
from weighted_complex import barycentric_subdivision, build_complex


def graph_of(bounded):
    """Vertices and edges of a one-dimensional bounded complex."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(bounded.cell_id(c) for c in bounded.cells_of_dim(0))
    for edge in bounded.cells_of_dim(1):
        ends = [bounded.cell_id(f) for f, _ in bounded.facets(edge)]
        graph.add_edge(*ends)
    return graph


def graph_cohomology(graph):
    components = nx.number_connected_components(graph)
    return [components, graph.number_of_edges() - graph.number_of_nodes() + components]


class TestExteriorPowers:

    def test_degrees(self):
        matrix = frac_matrix([[1, 2], [3, 4]])
        assert exterior_power(matrix, 0).tolist() == [[1]]
        assert exterior_power(matrix, 1).tolist() == matrix.tolist()
        assert exterior_power(matrix, 2).tolist() == [[-2]]

    def test_minors_of_tall_matrix(self):
        matrix = frac_matrix([[1, 0], [0, 1], [1, 1]])
        assert exterior_power(matrix, 2).tolist() == [[1], [1], [-1]]

    def test_identity(self):
        assert exterior_power(identity(3), 2).tolist() == identity(3).tolist()


class TestCompactification:

    def test_tropical_line_cells(self, tropical_line):
        bounded = canonical_compactification(tropical_line)
        assert bounded.counts() == [4, 3]
        at_infinity = [c for c in bounded.cells_of_dim(0) if bounded.is_at_infinity(c)]
        assert sorted(bounded.point(c) for c in at_infinity) == [(-1, -1), (0, 1), (1, 0)]

    def test_bergman_cone_pairs(self):
        # one cell per pair of cones tau ⊆ sigma
        fan = bergman_fan(matroid_uniform(3, 4))
        pairs = sum(2 ** len(key[1]) for key in fan.cells)
        bounded = canonical_compactification(fan)
        assert len(bounded.cells) == pairs == 69
        assert bounded.counts() == [1 + 10 + 12, 10 + 24, 12]

    def test_facet_signs_give_zero_boundary(self, cross):
        bounded = compactify(cross)
        for cell in bounded.cells_of_dim(1):
            assert sorted(sign for _, sign in bounded.facets(cell)) == [-1, 1]
            assert all(bounded_dim(f) == 0 for f, _ in bounded.facets(cell))

    def test_not_a_fan(self, interval):
        with pytest.raises(NotAFan):
            canonical_compactification(interval)

    def test_bounded_input_is_unchanged(self, interval):
        assert as_bounded(interval).counts() == [2, 1]

    def test_rays_need_compactification(self, tropical_line):
        with pytest.raises(UnboundedInput):
            as_bounded(tropical_line)

    def test_to_dict(self, tropical_line):
        data = canonical_compactification(tropical_line).to_dict()
        assert data["counts"] == [4, 3]
        assert sum(1 for v in data["vertices"] if v["at_infinity"]) == 3


class TestMultiTangent:

    def test_tropical_line_spaces(self, tropical_line):
        system = build_multitangent(canonical_compactification(tropical_line), 1)
        by_cell = {c: system.dim(c) for c in system.complex.cells}
        origin = (frozenset(), ((frozenset({0})), frozenset()))
        assert by_cell[origin] == 2
        assert all(system.dim(c) == 0 for c in system.complex.cells if c[0])
        assert all(system.dim(c) == 1 for c in system.complex.cells_of_dim(1))
        assert len(system.maps()) == 6

    def test_restrictions_land_in_face_spaces(self):
        bounded = canonical_compactification(bergman_fan(matroid_uniform(3, 4)))
        for p in (1, 2):
            system = build_multitangent(bounded, p)
            for (cell, face), matrix in system.maps().items():
                image = mat_mul(exterior_power(system.stratum_map(cell, face), p), system.bases[cell])
                assert mat_mul(system.bases[face], matrix).tolist() == image.tolist()

    def test_stratum_powers_are_shared(self):
        bounded = canonical_compactification(bergman_fan(matroid_uniform(3, 4)))
        system = build_multitangent(bounded, 1)
        pairs = [(c, f) for c in bounded.cells for f, _ in bounded.facets(c) if c[0] != f[0]]
        strata = (pairs[0][0][0], pairs[0][1][0])
        same = [pair for pair in pairs if (pair[0][0], pair[1][0]) == strata]
        assert len(same) > 1
        assert system.stratum_power(*same[0]) is system.stratum_power(*same[1])

    def test_negative_degree(self, interval):
        with pytest.raises(DegreeOutOfRange):
            build_multitangent(interval, -1)


class TestCohomology:

    def test_interval(self, interval):
        assert cohomology_table(interval) == {0: [1, 0], 1: [1, 0]}

    def test_point(self, point):
        assert cohomology_dims(point, 0) == [1]
        assert cohomology_dims(point, 1) == [0]

    def test_compactified_tropical_line(self, tropical_line):
        bounded = canonical_compactification(tropical_line)
        assert cohomology_table(bounded) == {0: [1, 0], 1: [0, 1]}

    def test_compactified_cross(self, cross):
        assert cohomology_table(compactify(cross)) == {0: [1, 0], 1: [0, 2]}

    def test_triangle_boundary(self):
        triangle = build_complex(2, [[0, 0], [1, 0], [0, 1]], [], [([0, 1], [], 1), ([1, 2], [], 1), ([0, 2], [], 1)])
        assert cohomology_dims(triangle, 0) == [1, 1]
        # each vertex sees the whole plane; the edge conditions are independent
        assert cohomology_dims(triangle, 1) == [3, 0]

    def test_degree_zero_matches_graph_cohomology(self, tropical_line, cross, interval):
        for bounded in (canonical_compactification(tropical_line), compactify(cross), as_bounded(interval)):
            assert cohomology_dims(bounded, 0) == graph_cohomology(graph_of(bounded))

    def test_subdivision_invariance(self, tropical_line):
        subdivided = compactify(barycentric_subdivision(tropical_line))
        assert cohomology_table(subdivided) == {0: [1, 0], 1: [0, 1]}

    def test_differentials_square_to_zero(self):
        bounded = canonical_compactification(bergman_fan(matroid_uniform(3, 4)))
        for p in range(3):
            cochains = build_cochain_complex(bounded, p)
            assert cochains.d_squared_defects() == []

    def test_parallel_ranks(self, cross):
        cochains = build_cochain_complex(compactify(cross), 1)
        assert cochains.cohomology_dims(jobs=2) == cochains.cohomology_dims(jobs=1) == [0, 2]

    def test_check_detects_defect(self):
        one = frac_matrix([[1]])
        with pytest.raises(InternalInconsistency):
            CochainComplex([1, 1, 1], [one, one]).check()
