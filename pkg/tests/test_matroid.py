# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

from itertools import combinations

import networkx as nx
import pytest

from errors import EmptyBases, ExchangeAxiomViolated, InvalidParameters, UnequalBasisSize
from matroid import (
    characteristic_polynomial,
    characteristic_polynomial_deletion_contraction,
    check_lattice_axioms,
    check_log_concavity,
    contraction,
    deletion,
    matroid_from_bases,
    matroid_from_dict,
    matroid_graphic,
    matroid_to_dict,
    matroid_uniform,
    reduced_characteristic_polynomial,
    whitney_numbers,
)

K4_EDGES = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]


class TestConstruction:

    def test_uniform(self, u23):
        assert u23.n == 3
        assert u23.rank == 2
        assert u23.sorted_bases() == [[0, 1], [0, 2], [1, 2]]
        assert u23.is_loopless()
        assert not u23.coloops()

    def test_exchange_axiom_violation(self):
        with pytest.raises(ExchangeAxiomViolated) as info:
            matroid_from_bases(4, [[0, 1], [2, 3]])
        assert set(info.value.witness) == {"B1", "B2", "x"}

    def test_empty_bases(self):
        with pytest.raises(EmptyBases):
            matroid_from_bases(3, [])

    def test_unequal_basis_size(self):
        with pytest.raises(UnequalBasisSize):
            matroid_from_bases(3, [[0], [0, 1]])

    @pytest.mark.parametrize("n, bases", [(0, [[]]), (3, [[0, 3]]), (13, [[0]])])
    def test_invalid_parameters(self, n, bases):
        with pytest.raises(InvalidParameters):
            matroid_from_bases(n, bases)

    def test_uniform_out_of_range(self):
        with pytest.raises(InvalidParameters):
            matroid_uniform(4, 3)

    def test_graphic_triangle_is_u23(self, u23):
        assert matroid_graphic([[0, 1], [1, 2], [0, 2]]) == u23

    def test_graphic_rank_matches_forests(self):
        matroid = matroid_graphic(K4_EDGES)
        assert matroid.rank == 3
        for size in range(len(K4_EDGES) + 1):
            for subset in combinations(range(len(K4_EDGES)), size):
                graph = nx.Graph()
                graph.add_nodes_from(range(4))
                graph.add_edges_from(K4_EDGES[i] for i in subset)
                assert matroid.rank_of(subset) == 4 - nx.number_connected_components(graph)

    def test_loops_and_coloops(self):
        matroid = matroid_from_bases(3, [[0, 1]])
        assert matroid.loops() == {2}
        assert matroid.coloops() == {0, 1}
        assert not matroid.is_loopless()

    def test_from_dict(self):
        assert matroid_from_dict({"type": "uniform", "r": 2, "n": 3}) == matroid_uniform(2, 3)
        data = matroid_to_dict(matroid_uniform(1, 2))
        assert matroid_from_dict(data) == matroid_uniform(1, 2)
        with pytest.raises(InvalidParameters):
            matroid_from_dict({"type": "vector"})

    def test_minors(self, u23):
        assert deletion(u23, 0) == matroid_uniform(2, 2)
        assert contraction(u23, 0) == matroid_uniform(1, 2)


class TestFlatLattice:

    def test_u23_lattice(self, u23):
        lattice = u23.lattice()
        assert [sorted(f) for f in lattice.flats] == [[], [0], [1], [2], [0, 1, 2]]
        assert lattice.mobius == [1, -1, -1, -1, 2]
        assert len(lattice.covers) == 6
        assert [sorted(f) for f in lattice.proper_flats()] == [[0], [1], [2]]

    def test_u34_flats_per_rank(self, u34):
        lattice = u34.lattice()
        assert [len(lattice.flats_of_rank(k)) for k in range(4)] == [1, 4, 6, 1]
        assert len(lattice.complete_flags()) == 12

    def test_lattice_axioms(self, u34):
        result = check_lattice_axioms(u34.lattice())
        assert result["holds"]
        assert result["atomistic"] and result["semimodular"]

    def test_k4_lattice(self):
        lattice = matroid_graphic(K4_EDGES).lattice()
        # rank 2 flats: four triangles and three pairs of disjoint edges
        assert len(lattice.flats_of_rank(2)) == 7
        assert check_lattice_axioms(lattice)["holds"]


class TestCharacteristicPolynomial:

    def test_u23(self, u23):
        chi = characteristic_polynomial(u23)
        assert chi.coefficients == (2, -3, 1)
        assert str(chi) == "lambda**2 - 3*lambda + 2"
        assert whitney_numbers(u23) == [1, 3, 2]

    def test_u11(self):
        assert whitney_numbers(matroid_uniform(1, 1)) == [1, 1]

    def test_k4(self):
        matroid = matroid_graphic(K4_EDGES)
        assert characteristic_polynomial(matroid).coefficients == (-6, 11, -6, 1)
        assert whitney_numbers(matroid) == [1, 6, 11, 6]

    def test_coloops(self):
        assert characteristic_polynomial(matroid_uniform(2, 2)).coefficients == (1, -2, 1)

    def test_loops_give_zero(self):
        chi = characteristic_polynomial(matroid_from_bases(3, [[0, 1]]))
        assert chi.is_zero
        assert chi.warnings == ("has_loops",)

    @pytest.mark.parametrize("r, n", [(1, 1), (1, 3), (2, 3), (2, 4), (3, 4), (2, 5), (3, 5), (4, 5)])
    def test_deletion_contraction_oracle(self, r, n):
        matroid = matroid_uniform(r, n)
        assert characteristic_polynomial(matroid) == characteristic_polynomial_deletion_contraction(matroid)

    def test_oracle_on_loops_and_graphs(self):
        for matroid in (matroid_from_bases(3, [[0, 1]]), matroid_graphic(K4_EDGES), matroid_uniform(2, 2)):
            assert characteristic_polynomial(matroid) == characteristic_polynomial_deletion_contraction(matroid)

    def test_reduced(self, u23):
        assert reduced_characteristic_polynomial(u23).coefficients == (-2, 1)
        with pytest.raises(InvalidParameters):
            reduced_characteristic_polynomial(matroid_from_bases(3, [[0, 1]]))


class TestLogConcavity:

    @pytest.mark.parametrize("r, n", [(2, 3), (2, 4), (3, 4), (3, 5), (4, 5)])
    def test_uniform_sequences(self, r, n):
        matroid = matroid_uniform(r, n)
        assert check_log_concavity(matroid)["holds"]
        assert check_log_concavity(matroid, reduced=True)["holds"]

    def test_sequence_reported(self):
        result = check_log_concavity(matroid_graphic(K4_EDGES))
        assert result == {"holds": True, "violations": [], "sequence": [1, 6, 11, 6]}
