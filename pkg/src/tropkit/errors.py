# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Exceptions raised by tropkit.

Every error carries an `error_id` (reported in JSON output and in CLI
messages) and an optional `witness` with the data that triggered it.
"""

from __future__ import annotations

from typing import Any


class TropkitError(Exception):
    """Base class of all tropkit errors"""

    error_id = "failure"

    def __init__(self, msg: str = "", witness: Any = None):
        super().__init__(msg or self.error_id)
        self.msg = msg or self.error_id
        self.witness = witness

    def to_dict(self) -> dict:
        result = {"error_id": self.error_id, "msg": self.msg}
        if self.witness is not None:
            result["witness"] = self.witness
        return result


# matroid_core
class EmptyBases(TropkitError):
    error_id = "empty_bases"


class UnequalBasisSize(TropkitError):
    error_id = "unequal_basis_size"


class ExchangeAxiomViolated(TropkitError):
    error_id = "exchange_axiom_violated"


class InvalidParameters(TropkitError):
    error_id = "invalid_parameters"


# chow_kahler
class LooplessRequired(TropkitError):
    error_id = "loopless_required"


class RankZero(TropkitError):
    error_id = "rank_zero"


class DegreeOverflow(TropkitError):
    error_id = "degree_overflow"


class WrongDegree(TropkitError):
    error_id = "wrong_degree"


class BadDegree(TropkitError):
    error_id = "bad_degree"


# tropical_complex
class MissingFace(TropkitError):
    error_id = "missing_face"


class DimensionMismatch(TropkitError):
    error_id = "dimension_mismatch"


class NonPrimitiveRay(TropkitError):
    error_id = "non_primitive_ray"


class ZeroWeight(TropkitError):
    error_id = "zero_weight"


class BadIntersection(TropkitError):
    error_id = "bad_intersection"


class NotPure(TropkitError):
    error_id = "not_pure"


class NotAFacet(TropkitError):
    error_id = "not_a_facet"


class NotBalanced(TropkitError):
    error_id = "not_balanced"


class CellNotFound(TropkitError):
    error_id = "cell_not_found"


class NotAFan(TropkitError):
    error_id = "not_a_fan"


# cellular_cohomology / discrete_hodge
class UnboundedInput(TropkitError):
    error_id = "unbounded_input"


class DegreeOutOfRange(TropkitError):
    error_id = "degree_out_of_range"


class InvalidGram(TropkitError):
    error_id = "invalid_gram"


class InternalInconsistency(TropkitError):
    """An exact identity that must hold did not"""
    error_id = "internal_inconsistency"


# cli_formats
class ParseError(TropkitError):
    error_id = "parse_error"
