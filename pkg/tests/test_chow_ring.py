# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

from fractions import Fraction

import numpy as np
import pytest

from chow_ring import (
    ample_default,
    ample_from_weights,
    build_chow_ring,
    check_hard_lefschetz,
    check_hodge_riemann,
    check_poincare_duality,
    degree,
    full_form_signature,
    hodge_riemann_sign,
    is_strictly_submodular,
    submodularity_witness,
    default_weight,
    multiply,
    power,
)
from errors import BadDegree, DegreeOverflow, InvalidParameters, LooplessRequired, RankZero, WrongDegree
from matroid import matroid_from_bases, matroid_graphic, matroid_uniform


class TestGradedPieces:

    def test_u23_dims(self, u23_ring):
        assert u23_ring.r == 1
        assert u23_ring.dims == [1, 1]

    def test_u34_dims(self, u34_ring):
        assert u34_ring.r == 2
        assert u34_ring.dims == [1, 7, 1]
        assert u34_ring.flag_count == 12

    def test_rank_one_has_only_degree_zero(self):
        ring = build_chow_ring(matroid_uniform(1, 3))
        assert ring.r == 0
        assert ring.dims == [1]

    def test_u24_and_k4(self):
        assert build_chow_ring(matroid_uniform(2, 4)).dims == [1, 1]
        k4 = build_chow_ring(matroid_graphic([[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]))
        assert k4.dims[0] == k4.dims[2] == 1
        assert k4.dims[1] == 13 - 5

    def test_rank_zero_raises(self):
        with pytest.raises(RankZero):
            build_chow_ring(matroid_from_bases(2, [[]]))

    def test_loops_raise(self):
        with pytest.raises(LooplessRequired) as info:
            build_chow_ring(matroid_from_bases(3, [[0, 1]]))
        assert info.value.witness == {"loops": [2]}


class TestProducts:

    def test_linear_relations(self, u23_ring):
        assert u23_ring.monomial([{0}]) == u23_ring.monomial([{1}]) == u23_ring.monomial([{2}])

    def test_incomparable_flats_vanish(self, u34_ring):
        assert u34_ring.monomial([{0}, {1}]).is_zero()
        assert not u34_ring.monomial([{0}, {0, 1}]).is_zero()

    def test_every_flag_has_degree_one(self, u34_ring):
        for flag in u34_ring.lattice.complete_flags():
            assert degree(u34_ring, u34_ring.monomial(flag)) == 1

    def test_degree_overflow(self, u23_ring):
        x = u23_ring.monomial([{0}])
        with pytest.raises(DegreeOverflow):
            multiply(u23_ring, x, x)
        assert power(u23_ring, x, 2).coordinates == ()

    def test_wrong_degree(self, u23_ring):
        with pytest.raises(WrongDegree):
            degree(u23_ring, u23_ring.unit())
        with pytest.raises(WrongDegree):
            u23_ring.unit() + u23_ring.monomial([{0}])

    def test_unit_is_neutral(self, u34_ring):
        x = u34_ring.monomial([{2, 3}])
        assert multiply(u34_ring, u34_ring.unit(), x) == x

    def test_commutative(self, u34_ring):
        a = u34_ring.monomial([{0}])
        b = u34_ring.monomial([{0, 1}])
        assert multiply(u34_ring, a, b) == multiply(u34_ring, b, a)

    def test_non_flat_generator(self, u34_ring):
        with pytest.raises(InvalidParameters):
            u34_ring.monomial([{0, 1, 2}])


class TestAmpleClasses:

    def test_default_weight_is_strictly_submodular(self):
        assert is_strictly_submodular(default_weight(4), 4)

    def test_square_violation_is_reported(self):
        base = default_weight(3)

        def weight(subset):
            return 4 if subset == frozenset({0, 1}) else base(subset)

        assert submodularity_witness(weight, 3) == {"A": [0], "B": [1]}

    def test_nonzero_ends_are_reported(self):
        assert submodularity_witness(lambda subset: 1, 3) == {"reason": "c(empty) and c(E) must vanish"}

    def test_local_check_agrees_with_all_pairs(self):
        n = 4
        base = default_weight(n)
        subsets = [frozenset(i for i in range(n) if mask >> i & 1) for mask in range(1 << n)]
        rng = np.random.default_rng(11)
        tables = [{s: base(s) for s in subsets}, {s: 0 for s in subsets}]
        for _ in range(40):
            noise = {s: int(x) for s, x in zip(subsets, rng.integers(-2, 3, size=len(subsets)))}
            noise[subsets[0]] = noise[subsets[-1]] = 0
            tables.append({s: 2 * base(s) + noise[s] for s in subsets})
        outcomes = set()
        for table in tables:
            pairwise = all(
                table[a] + table[b] > table[a | b] + table[a & b]
                for a in subsets for b in subsets if not a <= b and not b <= a
            )
            assert is_strictly_submodular(table.__getitem__, n) == pairwise
            outcomes.add(pairwise)
        assert outcomes == {True, False}

    def test_zero_weight_is_rejected(self, u34_ring):
        with pytest.raises(InvalidParameters):
            ample_from_weights(u34_ring, lambda subset: 0)

    def test_no_ample_class_when_r_is_zero(self):
        with pytest.raises(BadDegree):
            ample_default(build_chow_ring(matroid_uniform(1, 2)))

    def test_ample_degree(self, u23_ring):
        # c({i}) = 1 * 2 for the three atoms
        assert degree(u23_ring, ample_default(u23_ring)) == 6


class TestKaehlerPackage:

    def test_sign_convention(self):
        assert hodge_riemann_sign(0, 0) == 1
        assert hodge_riemann_sign(1, 1) == -1
        assert hodge_riemann_sign(2, 2) == 1

    def test_u23_hodge_riemann(self, u23_ring):
        result = check_hodge_riemann(u23_ring, ample_default(u23_ring), 0)
        assert result["holds"]
        assert result["signature"] == (1, 0, 0)
        assert result["pivots"] == [Fraction(6)]

    @pytest.mark.parametrize("p", [0, 1])
    def test_u34_hard_lefschetz(self, u34_ring, p):
        result = check_hard_lefschetz(u34_ring, ample_default(u34_ring), p)
        assert result["is_iso"]
        assert result["rank"] == u34_ring.dim(p)

    def test_u34_hodge_riemann(self, u34_ring):
        element = ample_default(u34_ring)
        assert check_hodge_riemann(u34_ring, element, 0)["signature"] == (1, 0, 0)
        result = check_hodge_riemann(u34_ring, element, 1)
        assert result["primitive_dim"] == 6
        assert result["signature"] == (6, 0, 0)

    def test_full_form_is_not_definite(self, u34_ring):
        # on all of A^1 the ample class itself pairs with the opposite sign
        signature = full_form_signature(u34_ring, ample_default(u34_ring), 1)
        assert signature == (6, 0, 1)

    def test_degree_outside_range(self, u34_ring):
        with pytest.raises(BadDegree):
            check_hard_lefschetz(u34_ring, ample_default(u34_ring), 2)

    def test_poincare_duality(self, u34_ring):
        for p in range(3):
            result = check_poincare_duality(u34_ring, p)
            assert result["holds"]
            assert result["rank"] == u34_ring.dim(p)
