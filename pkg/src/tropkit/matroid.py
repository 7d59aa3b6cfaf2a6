# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Matroids

Matroids on the ground set {0..n-1} stored by their bases, together with
the lattice of flats, the Moebius function, the characteristic polynomial
(Moebius sum, with deletion-contraction as an independent oracle), Whitney
numbers and log-concavity checks.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable

import networkx as nx
from sympy import Poly

from config import config
from constants import MAX_GROUND_SET
from errors import EmptyBases, ExchangeAxiomViolated, InvalidParameters, UnequalBasisSize
from polynomial_utils import LAMBDA, IntPolynomial
from debug import get_logger

logger = get_logger(__file__)


def _sorted(subset: Iterable[int]) -> list[int]:
    return sorted(int(e) for e in subset)


class Matroid:
    """Matroid given by its bases. Immutable; build it through `matroid_from_bases`."""

    def __init__(self, n: int, bases: Iterable[Iterable[int]], label: str = ""):
        self.n = int(n)
        self.bases = frozenset(frozenset(int(e) for e in b) for b in bases)
        self.label = label
        self.rank = len(next(iter(self.bases))) if self.bases else 0
        self._lattice = None

    @property
    def ground_set(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def rank_of(self, subset: Iterable[int]) -> int:
        subset = frozenset(subset)
        return max(len(b & subset) for b in self.bases)

    def closure(self, subset: Iterable[int]) -> frozenset[int]:
        subset = frozenset(subset)
        r = self.rank_of(subset)
        return subset | frozenset(e for e in range(self.n) if e not in subset and self.rank_of(subset | {e}) == r)

    def loops(self) -> frozenset[int]:
        covered = frozenset().union(*self.bases)
        return frozenset(e for e in range(self.n) if e not in covered)

    def coloops(self) -> frozenset[int]:
        return frozenset.intersection(*self.bases)

    def is_loopless(self) -> bool:
        return not self.loops()

    def lattice(self) -> FlatLattice:
        if self._lattice is None:
            self._lattice = FlatLattice(self)
        return self._lattice

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.bases == other.bases

    def __hash__(self) -> int:
        return hash((self.n, self.bases))

    def __repr__(self) -> str:
        name = self.label or "Matroid"
        return f"<{name} n={self.n} rank={self.rank} bases={len(self.bases)}>"

    def sorted_bases(self) -> list[list[int]]:
        return sorted(_sorted(b) for b in self.bases)


def check_exchange_axiom(bases: frozenset[frozenset[int]]) -> dict | None:
    """
    Brute-force basis exchange check.

    Returns:
        None when the axiom holds, otherwise a witness
        {"B1": [...], "B2": [...], "x": x}.
    """
    for b1 in bases:
        for b2 in bases:
            if b1 == b2:
                continue
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in bases for y in b2 - b1):
                    return {"B1": _sorted(b1), "B2": _sorted(b2), "x": x}
    return None


def matroid_from_bases(n: int, bases: Iterable[Iterable[int]], label: str = "") -> Matroid:
    """
    Validate a bases family and build the matroid.

    Raises:
        InvalidParameters: n out of range or elements outside {0..n-1}
        EmptyBases: no bases given
        UnequalBasisSize: bases of different cardinality
        ExchangeAxiomViolated: with the offending pair as witness
    """
    max_ground_set = config.setting("tropkit.max_ground_set", MAX_GROUND_SET)
    if n < 1 or n > max_ground_set:
        raise InvalidParameters(f"Ground set size {n} outside 1..{max_ground_set}", witness={"n": n})
    family = frozenset(frozenset(int(e) for e in b) for b in bases)
    if not family:
        raise EmptyBases("A matroid needs at least one basis")
    for basis in family:
        if any(e < 0 or e >= n for e in basis):
            raise InvalidParameters(f"Basis {_sorted(basis)} is not a subset of 0..{n - 1}", witness={"basis": _sorted(basis)})
    sizes = sorted({len(b) for b in family})
    if len(sizes) > 1:
        raise UnequalBasisSize(f"Bases have sizes {sizes}", witness={"sizes": sizes})
    witness = check_exchange_axiom(family)
    if witness is not None:
        raise ExchangeAxiomViolated(
            f"No exchange for x={witness['x']} from {witness['B1']} into {witness['B2']}", witness=witness
        )
    matroid = Matroid(n, family, label)
    logger.debug("Built %s", matroid)
    return matroid


def matroid_uniform(r: int, n: int) -> Matroid:
    """U_{r,n}: every r-subset of {0..n-1} is a basis."""
    if n < 1 or r < 0 or r > n:
        raise InvalidParameters(f"Uniform matroid needs 0 <= r <= n and n >= 1, got r={r}, n={n}", witness={"r": r, "n": n})
    return matroid_from_bases(n, combinations(range(n), r), label=f"U{r},{n}")


def matroid_graphic(edges: Iterable[Iterable[int]], label: str = "") -> Matroid:
    """
    Cycle matroid of a multigraph: element i is the i-th edge, bases are the
    edge sets of maximal spanning forests.
    """
    edges = [tuple(int(v) for v in edge) for edge in edges]
    if not edges or any(len(edge) != 2 for edge in edges):
        raise InvalidParameters("Graphic matroid needs at least one edge given as a vertex pair", witness={"edges": edges})
    vertices = sorted({v for edge in edges for v in edge})
    graph = nx.MultiGraph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(edges)
    forest_size = len(vertices) - nx.number_connected_components(graph)

    bases = []
    for subset in combinations(range(len(edges)), forest_size):
        forest = nx.MultiGraph()
        forest.add_nodes_from(vertices)
        forest.add_edges_from(edges[i] for i in subset)
        if nx.is_forest(forest):
            bases.append(subset)
    logger.debug("Graphic matroid on %d edges has %d spanning forests", len(edges), len(bases))
    return matroid_from_bases(len(edges), bases, label=label or "graphic")


def rank(matroid: Matroid, subset: Iterable[int]) -> int:
    return matroid.rank_of(subset)


def closure(matroid: Matroid, subset: Iterable[int]) -> frozenset[int]:
    return matroid.closure(subset)


def loops(matroid: Matroid) -> frozenset[int]:
    return matroid.loops()


def deletion(matroid: Matroid, element: int) -> Matroid:
    """M \\ e, relabelled onto {0..n-2}."""
    return _minor(matroid, element, contract=False)


def contraction(matroid: Matroid, element: int) -> Matroid:
    """M / e, relabelled onto {0..n-2}."""
    return _minor(matroid, element, contract=True)


def _minor(matroid: Matroid, element: int, contract: bool) -> Matroid:
    if matroid.n < 2:
        raise InvalidParameters("Minors of a one-element matroid have an empty ground set")
    relabel = {e: (e if e < element else e - 1) for e in range(matroid.n) if e != element}
    with_e = [b for b in matroid.bases if element in b]
    without_e = [b for b in matroid.bases if element not in b]
    if contract:
        chosen = [b - {element} for b in with_e] if with_e else without_e
    else:
        chosen = without_e if without_e else [b - {element} for b in with_e]
    bases = [[relabel[e] for e in b] for b in chosen]
    operator = "/" if contract else "\\"
    return Matroid(matroid.n - 1, bases, label=f"{matroid.label}{operator}{element}")


class FlatLattice:
    """
    Lattice of flats of a matroid.

    Flats are listed by rank and then lexicographically; `mobius[i]` is
    mu(bottom, flats[i]) and `covers` holds the Hasse diagram as index pairs
    (lower, upper).
    """

    def __init__(self, matroid: Matroid):
        self.matroid = matroid
        bottom = matroid.closure(())
        levels = [[bottom]]
        for _ in range(matroid.rank):
            found = set()
            for flat in levels[-1]:
                for e in range(matroid.n):
                    if e not in flat:
                        found.add(matroid.closure(flat | {e}))
            levels.append(sorted(found, key=_sorted))
        self.flats: list[frozenset[int]] = [f for level in levels for f in level]
        self.ranks: list[int] = [k for k, level in enumerate(levels) for _ in level]
        self.index = {flat: i for i, flat in enumerate(self.flats)}
        self.bottom = bottom
        self.top = self.flats[-1]
        self.covers = [
            (i, j)
            for i, lower in enumerate(self.flats)
            for j, upper in enumerate(self.flats)
            if self.ranks[j] == self.ranks[i] + 1 and lower < upper
        ]
        self.mobius: list[int] = []
        for j, flat in enumerate(self.flats):
            if j == 0:
                self.mobius.append(1)
            else:
                self.mobius.append(-sum(self.mobius[i] for i in range(j) if self.flats[i] < flat))
        logger.debug("%d flats for %s", len(self.flats), matroid)

    def flats_of_rank(self, k: int) -> list[frozenset[int]]:
        return [f for f, r in zip(self.flats, self.ranks) if r == k]

    def proper_flats(self) -> list[frozenset[int]]:
        """Flats strictly between bottom and top."""
        return [f for f in self.flats if f != self.bottom and f != self.top]

    def rank_of(self, flat: frozenset[int]) -> int:
        return self.ranks[self.index[flat]]

    def mobius_of(self, flat: frozenset[int]) -> int:
        return self.mobius[self.index[flat]]

    def join(self, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
        return self.matroid.closure(a | b)

    def meet(self, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
        return a & b

    def complete_flags(self) -> list[list[frozenset[int]]]:
        """Maximal chains bottom < F_1 < ... < F_{rk-1} < top of proper flats."""
        flags = [[]]
        for k in range(1, self.matroid.rank):
            flags = [flag + [f] for flag in flags for f in self.flats_of_rank(k) if not flag or flag[-1] < f]
        return flags

    def to_dict(self) -> dict:
        return {
            "flats": [_sorted(f) for f in self.flats],
            "ranks": list(self.ranks),
            "covers": [list(c) for c in self.covers],
            "mobius": list(self.mobius),
        }


def flat_lattice(matroid: Matroid) -> FlatLattice:
    return matroid.lattice()


def check_lattice_axioms(lattice: FlatLattice) -> dict:
    """Exhaustive atomistic and semimodular check of a flat lattice."""
    atoms = lattice.flats_of_rank(1)
    violations = []
    for flat in lattice.flats:
        below = frozenset().union(*[a for a in atoms if a <= flat]) | lattice.bottom
        if lattice.matroid.closure(below) != flat:
            violations.append({"axiom": "atomistic", "flat": _sorted(flat)})
    for i, a in enumerate(lattice.flats):
        for b in lattice.flats[i + 1:]:
            lhs = lattice.rank_of(a) + lattice.rank_of(b)
            rhs = lattice.rank_of(lattice.meet(a, b)) + lattice.rank_of(lattice.join(a, b))
            if lhs < rhs:
                violations.append({"axiom": "semimodular", "flats": [_sorted(a), _sorted(b)]})
    atomistic = not any(v["axiom"] == "atomistic" for v in violations)
    semimodular = not any(v["axiom"] == "semimodular" for v in violations)
    return {"atomistic": atomistic, "semimodular": semimodular, "holds": not violations, "violations": violations}


def characteristic_polynomial(matroid: Matroid) -> IntPolynomial:
    """
    chi_M(lambda) = sum over flats F of mu(bottom, F) lambda^(rk M - rk F).

    A matroid with loops gets the zero polynomial, flagged "has_loops".
    """
    if not matroid.is_loopless():
        logger.warning("%s has loops %s: characteristic polynomial is 0", matroid, _sorted(matroid.loops()))
        return IntPolynomial((), warnings=("has_loops",))
    lattice = matroid.lattice()
    coefficients = [0] * (matroid.rank + 1)
    for mu, r in zip(lattice.mobius, lattice.ranks):
        coefficients[matroid.rank - r] += mu
    return IntPolynomial(coefficients)


@lru_cache(maxsize=4096)
def _deletion_contraction(ground: frozenset[int], bases: frozenset[frozenset[int]]) -> Poly:
    if not ground:
        return Poly(1, LAMBDA)
    element = min(ground)
    rest = ground - {element}
    with_e = frozenset(b - {element} for b in bases if element in b)
    without_e = frozenset(b for b in bases if element not in b)
    if not with_e:
        return Poly(0, LAMBDA)
    if not without_e:
        return Poly(LAMBDA - 1, LAMBDA) * _deletion_contraction(rest, with_e)
    return _deletion_contraction(rest, without_e) - _deletion_contraction(rest, with_e)


def characteristic_polynomial_deletion_contraction(matroid: Matroid) -> IntPolynomial:
    """
    Independent oracle: chi_M = chi_(M\\e) - chi_(M/e), with chi = 0 for a
    loop, chi = (lambda - 1) chi_(M/e) for a coloop and chi = 1 on the empty set.
    """
    return IntPolynomial.from_poly(_deletion_contraction(matroid.ground_set, matroid.bases))


def reduced_characteristic_polynomial(matroid: Matroid) -> IntPolynomial:
    """chi_M / (lambda - 1) for a loopless matroid of positive rank."""
    chi = characteristic_polynomial(matroid)
    if chi.is_zero or matroid.rank == 0:
        raise InvalidParameters("Reduced characteristic polynomial needs a loopless matroid of positive rank")
    return chi.divide_exact(IntPolynomial.linear_factor(1))


def whitney_numbers(matroid: Matroid) -> list[int]:
    """w_k = |coefficient of lambda^(rk M - k)| for k = 0..rk M."""
    chi = characteristic_polynomial(matroid)
    return [abs(chi.coefficient(matroid.rank - k)) for k in range(matroid.rank + 1)]


def _log_concavity(sequence: list[int]) -> dict:
    violations = [k for k in range(1, len(sequence) - 1) if sequence[k - 1] * sequence[k + 1] > sequence[k] ** 2]
    return {"holds": not violations, "violations": violations, "sequence": list(sequence)}


def check_log_concavity(matroid: Matroid, reduced: bool = False) -> dict:
    """
    Check w_{k-1} w_{k+1} <= w_k^2 for 1 <= k <= rk(M) - 1, or the same
    inequality on the absolute coefficients of the reduced polynomial.

    Returns:
        dict: {"holds": bool, "violations": [k, ...], "sequence": [...]}
    """
    if reduced:
        chi = reduced_characteristic_polynomial(matroid)
        sequence = [abs(c) for c in reversed(chi.coefficients)]
    else:
        sequence = whitney_numbers(matroid)
    result = _log_concavity(sequence)
    if not result["holds"]:
        logger.warning("Log-concavity fails for %s at %s", matroid, result["violations"])
    return result


def matroid_to_dict(matroid: Matroid) -> dict:
    result = {"type": "bases", "n": matroid.n, "bases": matroid.sorted_bases()}
    if matroid.label:
        result["label"] = matroid.label
    return result


def matroid_from_dict(data: dict) -> Matroid:
    """
    Build a matroid from the MatroidFile schema:
    {"type": "bases", "n", "bases"} | {"type": "uniform", "r", "n"} |
    {"type": "graphic", "edges"}, each with an optional "label".
    """
    kind = data.get("type")
    label = data.get("label", "")
    match kind:
        case "bases":
            return matroid_from_bases(int(data["n"]), data["bases"], label=label)
        case "uniform":
            matroid = matroid_uniform(int(data["r"]), int(data["n"]))
            if label:
                matroid.label = label
            return matroid
        case "graphic":
            return matroid_graphic(data["edges"], label=label)
        case _:
            raise InvalidParameters(f"Unknown matroid type: {kind!r}", witness={"type": kind})
