# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
End-to-end sweeps over the built-in catalog.
"""

import numpy as np
import pytest

from cellular_cohomology import as_bounded, build_cochain_complex, cohomology_table
from chow_ring import ample_default, build_chow_ring, check_hard_lefschetz, check_hodge_riemann, check_poincare_duality
from compactification import canonical_compactification, compactify
from conftest import builtin_complex, builtin_matroid
from discrete_hodge import adjunction_defect, hodge_decompose, lefschetz_check, metrize, verify_hodge_isomorphism
from errors import BadDegree
from fan_utils import bergman_fan
from main import main
from matroid import characteristic_polynomial, characteristic_polynomial_deletion_contraction, check_log_concavity
from tropical_checks import check_balancing, check_q_smooth_codim1
from weighted_complex import barycentric_subdivision, with_weights

MATROIDS = ["U12", "U23", "U24", "U25", "U34", "U35", "U45", "K3", "K4"]
FANS = ["U23", "U24", "U25", "U34", "U35", "U45", "K3", "K4"]
HODGE_COMPLEXES = ["interval", "tropical_line", "cross", "point", "bergman:U23"]


def complex_of(entry):
    if entry.startswith("bergman:"):
        return bergman_fan(builtin_matroid(entry.split(":", 1)[1]))
    return builtin_complex(entry)


def bounded_of(complex_):
    if complex_.is_fan() and complex_.rays:
        return canonical_compactification(complex_)
    return compactify(complex_) if complex_.rays else as_bounded(complex_)


@pytest.mark.parametrize("entry", MATROIDS)
def test_characteristic_polynomial_oracle(entry):
    matroid = builtin_matroid(entry)
    assert characteristic_polynomial(matroid) == characteristic_polynomial_deletion_contraction(matroid)
    assert characteristic_polynomial(matroid).evaluate(1) == 0


@pytest.mark.parametrize("entry", MATROIDS)
def test_log_concavity(entry):
    matroid = builtin_matroid(entry)
    assert check_log_concavity(matroid)["holds"]
    assert check_log_concavity(matroid, reduced=True)["holds"]


@pytest.mark.parametrize("entry", MATROIDS)
def test_kahler_package(entry):
    ring = build_chow_ring(builtin_matroid(entry))
    for p in range(ring.r + 1):
        assert check_poincare_duality(ring, p)["holds"]
    assert ring.dims == list(reversed(ring.dims))
    if ring.r == 0:
        with pytest.raises(BadDegree):
            ample_default(ring)
        assert lefschetz_check(ring)["vacuous"]
        return
    element = ample_default(ring)
    for p in range(ring.r // 2 + 1):
        assert check_hard_lefschetz(ring, element, p)["is_iso"]
        assert check_hodge_riemann(ring, element, p)["holds"]
    assert lefschetz_check(ring, element)["holds"]


@pytest.mark.parametrize("entry", FANS)
def test_bergman_fan_cohomology_matches_chow_ring(entry):
    matroid = builtin_matroid(entry)
    ring = build_chow_ring(matroid)
    fan = bergman_fan(matroid)
    assert check_balancing(fan)["balanced"]
    assert check_q_smooth_codim1(fan)["smooth"]
    table = cohomology_table(canonical_compactification(fan))
    for p, dims in table.items():
        assert dims == [ring.dim(p) if q == p else 0 for q in range(len(dims))]


@pytest.mark.parametrize("entry", HODGE_COMPLEXES)
@pytest.mark.parametrize("seed", [0, 1, 2, 3, 4])
def test_hodge_isomorphism(entry, seed):
    complex_ = complex_of(entry)
    bounded = bounded_of(complex_)
    for p in range(max(complex_.dim, 0) + 1):
        mc = metrize(build_cochain_complex(bounded, p), f"seed:{seed}", bounded)
        assert verify_hodge_isomorphism(mc)["holds"]


@pytest.mark.parametrize("entry", ["tropical_line", "cross"])
def test_subdivision_invariance(entry):
    complex_ = builtin_complex(entry)
    assert cohomology_table(compactify(barycentric_subdivision(complex_))) == cohomology_table(compactify(complex_))


@pytest.mark.parametrize("entry", FANS)
def test_heavier_maximal_cell_breaks_balancing(entry):
    fan = bergman_fan(builtin_matroid(entry))
    for cell in fan.maximal_cells():
        result = check_balancing(with_weights(fan, {cell: 2}))
        assert not result["balanced"]
        assert any(any(c["defect"]) for c in result["cells"])


@pytest.mark.parametrize("entry", ["interval", "tropical_line", "cross"])
def test_decomposition_and_adjunction(entry):
    complex_ = builtin_complex(entry)
    bounded = bounded_of(complex_)
    rng = np.random.default_rng(7)
    for p in range(complex_.dim + 1):
        mc = metrize(build_cochain_complex(bounded, p), "seed:3", bounded)
        for q in range(mc.top + 1):
            if mc.dim(q) == 0:
                continue
            gram = mc.gram(q)
            for _ in range(100 if q < mc.top else 10):
                omega = [int(x) for x in rng.integers(-5, 6, size=mc.dim(q))]
                if q < mc.top:
                    eta = [int(x) for x in rng.integers(-5, 6, size=mc.dim(q + 1))]
                    assert adjunction_defect(mc, q, omega, eta) == 0
            parts = hodge_decompose(mc, q, omega)
            assert (parts.exact + parts.coexact + parts.harmonic).tolist() == omega
            assert parts.exact @ gram @ parts.coexact == 0
            assert parts.exact @ gram @ parts.harmonic == 0
            assert parts.coexact @ gram @ parts.harmonic == 0


@pytest.mark.parametrize("jobs", [1, 4])
def test_reports_do_not_depend_on_jobs(capsys, jobs):
    main(["--json", "--jobs", str(jobs), "matroid", "chow", "builtin:U35", "--all-p", "--check", "hl,hr,poincare"])
    first = capsys.readouterr().out
    main(["--json", "matroid", "chow", "builtin:U35", "--all-p", "--check", "hl,hr,poincare"])
    assert capsys.readouterr().out == first
