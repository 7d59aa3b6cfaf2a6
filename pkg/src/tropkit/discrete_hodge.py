# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Discrete Hodge Theory

Finite-dimensional Hodge theory on a cochain complex whose degrees carry
positive definite rational Gram matrices G_q. The codifferential is the
metric adjoint of d, the Laplacian is d delta + delta d, and every cochain
splits G-orthogonally into exact, coexact and harmonic parts. There are no
boundary conditions in finite dimensions, so the split has three summands.

The Lefschetz part works on the Chow ring, whose graded pieces play the
role of the harmonic (p, p)-spaces.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from cellular_cohomology import CochainComplex
from chow_ring import (
    GradedChowRing,
    ChowElement,
    ample_default,
    check_hard_lefschetz,
    check_hodge_riemann,
    lefschetz_map_matrix,
    primitive_subspace,
)
from compactification import CompactifiedComplex
from errors import DegreeOutOfRange, InternalInconsistency, InvalidGram, InvalidParameters
from gram_utils import make_grams
from job_utils import parallel_map
from linalg_utils import (
    column_basis,
    frac_vector,
    hstack,
    inner,
    inverse,
    is_symmetric,
    is_zero,
    leading_minors,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    vstack,
    zeros,
)
from debug import get_logger

logger = get_logger(__file__)


class MetrizedComplex:
    """
    Cochain complex with inner products.

    Raises:
        InvalidParameters: wrong number or shape of Gram matrices, or d_(q+1) d_q != 0
        InvalidGram: a Gram matrix is not symmetric positive definite
    """

    def __init__(self, cochains: CochainComplex, grams: Sequence[np.ndarray]):
        if len(grams) != len(cochains.dims):
            raise InvalidParameters(f"Expected {len(cochains.dims)} Gram matrices, got {len(grams)}")
        for q, (d, gram) in enumerate(zip(cochains.dims, grams)):
            if gram.shape != (d, d):
                raise InvalidParameters(f"G_{q} has shape {gram.shape}, expected {(d, d)}", witness={"q": q})
            if not is_symmetric(gram):
                raise InvalidGram(f"G_{q} is not symmetric", witness={"q": q})
            minors = leading_minors(gram)
            bad = next((k for k, minor in enumerate(minors, start=1) if minor <= 0), None)
            if bad is not None:
                raise InvalidGram(f"G_{q} is not positive definite: leading minor {bad} is {minors[bad - 1]}", witness={"q": q, "minor": bad})
        for q, d in enumerate(cochains.differentials):
            if d.shape != (cochains.dims[q + 1], cochains.dims[q]):
                raise InvalidParameters(f"d_{q} has shape {d.shape}", witness={"q": q})
        defects = cochains.d_squared_defects()
        if defects:
            raise InvalidParameters("Not a cochain complex: d_(q+1) d_q != 0", witness={"q": defects})
        self.cochains = cochains
        self.grams = list(grams)
        self._inverses: dict[int, np.ndarray] = {}

    @property
    def top(self) -> int:
        return self.cochains.top

    def dim(self, q: int) -> int:
        return self.cochains.dims[q] if 0 <= q <= self.top else 0

    def gram(self, q: int) -> np.ndarray:
        return self.grams[q] if 0 <= q <= self.top else zeros(0, 0)

    def gram_inverse(self, q: int) -> np.ndarray:
        if q not in self._inverses:
            self._inverses[q] = inverse(self.gram(q))
        return self._inverses[q]

    def d(self, q: int) -> np.ndarray:
        return self.cochains.d(q)

    def delta(self, q: int) -> np.ndarray:
        """delta_q : C^q -> C^(q-1), zero outside 1..top."""
        if q <= 0 or q > self.top:
            return zeros(self.dim(q - 1), self.dim(q))
        return mat_mul(self.gram_inverse(q - 1), self.d(q - 1).T, self.gram(q))

    def check_degree(self, q: int):
        if not 0 <= q <= self.top:
            raise DegreeOutOfRange(f"Degree {q} outside 0..{self.top}", witness={"q": q})

    def __repr__(self) -> str:
        return f"<MetrizedComplex dims={self.cochains.dims}>"


def metrize(cochains: CochainComplex, gram: str = "identity", complex_: CompactifiedComplex | None = None) -> MetrizedComplex:
    """Attach Gram matrices from a provider spec (identity, weighted, seed:K)."""
    grams = make_grams(gram, cochains.dims, labels=cochains.labels, complex_=complex_)
    return MetrizedComplex(cochains, grams)


def codifferential(mc: MetrizedComplex, q: int) -> np.ndarray:
    """delta_q = G_(q-1)^-1 d_(q-1)^T G_q."""
    mc.check_degree(q)
    return mc.delta(q)


def laplacian(mc: MetrizedComplex, q: int) -> np.ndarray:
    """Delta_q = d_(q-1) delta_q + delta_(q+1) d_q."""
    mc.check_degree(q)
    return mat_mul(mc.d(q - 1), mc.delta(q)) + mat_mul(mc.delta(q + 1), mc.d(q))


def adjunction_defect(mc: MetrizedComplex, q: int, omega: Sequence, eta: Sequence) -> Fraction:
    """<d omega, eta>_(q+1) - <omega, delta eta>_q for omega in C^q, eta in C^(q+1)."""
    mc.check_degree(q)
    omega = frac_vector(omega)
    eta = frac_vector(eta)
    if len(omega) != mc.dim(q) or len(eta) != mc.dim(q + 1):
        raise InvalidParameters("Cochain lengths do not match the degrees", witness={"q": q})
    left = inner(mat_vec(mc.d(q), omega), mc.gram(q + 1), eta)
    right = inner(omega, mc.gram(q), mat_vec(mc.delta(q + 1), eta))
    return left - right


def harmonic_space(mc: MetrizedComplex, q: int) -> np.ndarray:
    """
    Columns spanning ker Delta_q.

    Raises:
        InternalInconsistency: ker Delta_q differs from ker d_q ∩ ker delta_q
    """
    basis = nullspace(laplacian(mc, q))
    d_q, delta_q = mc.d(q), mc.delta(q)
    joint = vstack([d_q, delta_q], mc.dim(q))
    if rank(joint) != mc.dim(q) - basis.shape[1] or not is_zero(mat_mul(d_q, basis)) or not is_zero(mat_mul(delta_q, basis)):
        raise InternalInconsistency(f"ker Delta_{q} is not ker d ∩ ker delta", witness={"q": q})
    return basis


class HodgeDecomposition:
    """
    omega = d alpha + delta beta + h.

    Attributes:
        omega, exact, coexact, harmonic: vectors in C^q
        alpha: potential in C^(q-1)
        beta: potential in C^(q+1)
    """

    def __init__(self, q: int, omega, exact, coexact, harmonic, alpha, beta):
        self.q = q
        self.omega = omega
        self.exact = exact
        self.coexact = coexact
        self.harmonic = harmonic
        self.alpha = alpha
        self.beta = beta

    def to_dict(self) -> dict:
        def strings(vector):
            return [str(x) for x in vector]

        return {
            "q": self.q,
            "omega": strings(self.omega),
            "exact": strings(self.exact),
            "coexact": strings(self.coexact),
            "harmonic": strings(self.harmonic),
            "alpha": strings(self.alpha),
            "beta": strings(self.beta),
        }


def _project(mc: MetrizedComplex, q: int, image: np.ndarray, omega: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    G_q-orthogonal projection of omega onto the column space of `image`.

    Returns:
        tuple: (projection, potential) with image @ potential = projection;
               the potential is zero off the pivot columns.
    """
    basis, pivots = column_basis(image)
    potential = np.full(image.shape[1], Fraction(0), dtype=object)
    if not pivots:
        return np.full(len(omega), Fraction(0), dtype=object), potential
    gram = mc.gram(q)
    normal = mat_mul(basis.T, gram, basis)
    coefficients = mat_vec(mat_mul(inverse(normal), basis.T, gram), omega)
    for coefficient, pivot in zip(coefficients, pivots):
        potential[pivot] = coefficient
    return mat_vec(basis, coefficients), potential


def hodge_decompose(mc: MetrizedComplex, q: int, omega: Sequence) -> HodgeDecomposition:
    """
    Split omega into its exact, coexact and harmonic parts.

    Raises:
        DegreeOutOfRange: q outside the complex
        InvalidParameters: omega has the wrong length
        InternalInconsistency: an orthogonality or harmonicity identity fails
    """
    mc.check_degree(q)
    omega = frac_vector(omega)
    if len(omega) != mc.dim(q):
        raise InvalidParameters(f"Form has {len(omega)} entries, C^{q} has dimension {mc.dim(q)}")
    exact, alpha = _project(mc, q, mc.d(q - 1), omega)
    coexact, beta = _project(mc, q, mc.delta(q + 1), omega)
    harmonic = omega - exact - coexact
    gram = mc.gram(q)
    products = {
        "exact_coexact": inner(exact, gram, coexact),
        "exact_harmonic": inner(exact, gram, harmonic),
        "coexact_harmonic": inner(coexact, gram, harmonic),
    }
    if any(value != 0 for value in products.values()) or not is_zero(mat_vec(laplacian(mc, q), harmonic)):
        raise InternalInconsistency("Hodge components are not orthogonal", witness={k: str(v) for k, v in products.items()})
    return HodgeDecomposition(q, omega, exact, coexact, harmonic, alpha, beta)


def verify_hodge_isomorphism(mc: MetrizedComplex, jobs: int | None = None) -> dict:
    """
    Compare dim ker Delta_q with dim H^q in every degree.

    Returns:
        dict: {"holds": bool, "degrees": [{"q", "harmonic_dim", "cohomology_dim", "equal"}]}
    """
    cohomology = mc.cochains.cohomology_dims(jobs)
    harmonic = parallel_map(lambda q: harmonic_space(mc, q).shape[1], range(mc.top + 1), jobs)
    degrees = [
        {"q": q, "harmonic_dim": h, "cohomology_dim": c, "equal": h == c}
        for q, (h, c) in enumerate(zip(harmonic, cohomology))
    ]
    holds = all(entry["equal"] for entry in degrees)
    if not holds:
        logger.error("Hodge isomorphism fails: %s", degrees)
    return {"holds": holds, "degrees": degrees}


def lefschetz_check(ring: GradedChowRing, element: ChowElement | None = None, jobs: int | None = None) -> dict:
    """
    Hard Lefschetz and Hodge-Riemann for every p <= r/2, plus the primitive
    dimensions with the count dim A^p = sum_i dim Prim A^(p-i).

    A ring with r = 0 gets a vacuous report.
    """
    if ring.r == 0:
        return {"holds": True, "hl": [], "hr": [], "primitive_dims": [], "consistent": True, "vacuous": True}
    if element is None:
        element = ample_default(ring)
    degrees = list(range(ring.r // 2 + 1))

    def run(p):
        return check_hard_lefschetz(ring, element, p), check_hodge_riemann(ring, element, p)

    results = parallel_map(run, degrees, jobs)
    hl = [lefschetz["is_iso"] for lefschetz, _ in results]
    hr = [riemann["signature"] for _, riemann in results]
    primitive_dims = [riemann["primitive_dim"] for _, riemann in results]
    consistent = all(ring.dim(p) == sum(primitive_dims[: p + 1]) for p in degrees)
    holds = all(hl) and all(riemann["holds"] for _, riemann in results) and consistent
    return {
        "holds": holds,
        "hl": hl,
        "hr": hr,
        "primitive_dims": primitive_dims,
        "consistent": consistent,
        "vacuous": False,
    }


def lefschetz_decomposition(ring: GradedChowRing, element: ChowElement | None = None) -> list[dict]:
    """
    Check that A^p = ⊕_i l^i Prim A^(p-i) is a direct sum for every p <= r/2.
    """
    if ring.r == 0:
        return []
    if element is None:
        element = ample_default(ring)
    report = []
    for p in range(ring.r // 2 + 1):
        blocks = [mat_mul(lefschetz_map_matrix(ring, element, p - i, i), primitive_subspace(ring, element, p - i)) for i in range(p + 1)]
        stacked = hstack(blocks, ring.dim(p))
        summand_dims = [block.shape[1] for block in blocks]
        stacked_rank = rank(stacked)
        report.append({
            "p": p,
            "summand_dims": summand_dims,
            "rank": stacked_rank,
            "direct": stacked_rank == sum(summand_dims) == ring.dim(p),
        })
    return report
