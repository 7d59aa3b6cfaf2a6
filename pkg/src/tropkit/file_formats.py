# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
File Formats

JSON schemas read and written by the command line:

    matroid   {"type": "bases"|"uniform"|"graphic", ...}
    complex   {"ambient_dim", "vertices", "rays", "cells": [{"v", "r", "weight"}]}
    cochains  {"dims", "differentials", optional "grams", "p"}
    form      {"form": ["a/b", ...]}

Rationals are written as strings "a/b" (integers as "a"); bare integers are
accepted on input, floats are not.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from catalog_manager import CatalogManager
from cellular_cohomology import CochainComplex
from constants import BUILTIN_PREFIX
from errors import InvalidParameters, ParseError
from linalg_utils import format_matrix, frac_matrix
from matroid import Matroid, matroid_from_dict
from weighted_complex import WeightedComplex, cell_dim, cell_key, close_faces, validate_complex
from debug import get_logger

logger = get_logger(__file__)


def parse_rational(value) -> Fraction:
    """
    Raises:
        ParseError: floats, booleans and malformed strings
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"Rational expected as int or \"a/b\" string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"Malformed rational {value!r}") from e
    raise ParseError(f"Rational expected, got {value!r}")


def format_rational(value) -> str:
    return str(Fraction(value))


def parse_int(value, what: str = "value") -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"Integer expected for {what}, got {value!r}")
    return value


def dump_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2)


def write_json(data, path: str):
    Path(path).write_text(dump_json(data) + "\n", encoding="utf-8")
    logger.info("Wrote %s", path)


def load_json(path: str):
    """
    Raises:
        ParseError: unreadable file or malformed JSON
    """
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except OSError as e:
        raise ParseError(f"Cannot read {path}: {e.strerror}", witness={"path": path}) from e
    except json.JSONDecodeError as e:
        raise ParseError(f"Malformed JSON in {path}: {e.msg} at line {e.lineno}", witness={"path": path, "line": e.lineno}) from e


def resolve_input(spec: str):
    """File path or builtin:NAME -> parsed JSON data."""
    if spec.startswith(BUILTIN_PREFIX):
        return CatalogManager().get_data(spec[len(BUILTIN_PREFIX):])
    return load_json(spec)


def _require_object(data, what: str) -> dict:
    if not isinstance(data, dict):
        raise ParseError(f"{what} must be a JSON object")
    return data


def parse_matroid(data) -> Matroid:
    _require_object(data, "Matroid file")
    try:
        return matroid_from_dict(data)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"Malformed matroid file: {e}") from e


def parse_complex(data) -> WeightedComplex:
    """
    Parse a complex file; implied faces are added before validation.

    Raises:
        ParseError: missing keys or malformed values
        TropkitError: any validation failure of the complex
    """
    _require_object(data, "Complex file")
    try:
        ambient_dim = parse_int(data["ambient_dim"], "ambient_dim")
        vertices = [[parse_rational(x) for x in vertex] for vertex in data["vertices"]]
        rays = [[parse_int(x, "ray coordinate") for x in ray] for ray in data.get("rays", [])]
        raw_cells = data["cells"]
    except KeyError as e:
        raise ParseError(f"Complex file lacks key {e}") from e
    except TypeError as e:
        raise ParseError(f"Malformed complex file: {e}") from e
    if ambient_dim < 0:
        raise InvalidParameters("ambient_dim must be nonnegative")

    keys = []
    weights = {}
    declared = {}
    for entry in raw_cells:
        _require_object(entry, "Cell")
        vertex_ids = [parse_int(v, "vertex id") for v in entry.get("v", [])]
        ray_ids = [parse_int(r, "ray id") for r in entry.get("r", [])]
        if not vertex_ids:
            raise InvalidParameters("Every cell needs at least one vertex", witness=entry)
        key = cell_key(vertex_ids, ray_ids)
        keys.append(key)
        if "weight" in entry:
            weights[key] = parse_int(entry["weight"], "weight")
        if "dim" in entry:
            declared[key] = parse_int(entry["dim"], "dim")
    complex_ = WeightedComplex(ambient_dim, vertices, rays, close_faces(keys), weights, declared, label=str(data.get("label", "")))
    return validate_complex(complex_)


def complex_to_dict(complex_: WeightedComplex) -> dict:
    """Maximal cells only; faces are implied."""
    cells = [
        {"v": sorted(key[0]), "r": sorted(key[1]), "weight": complex_.weight(key), "dim": cell_dim(key)}
        for key in complex_.maximal_cells()
    ]
    result = {
        "ambient_dim": complex_.ambient_dim,
        "vertices": [[format_rational(x) for x in v] for v in complex_.vertices],
        "rays": [list(r) for r in complex_.rays],
        "cells": cells,
    }
    if complex_.label:
        result["label"] = complex_.label
    return result


def _parse_matrix(rows, shape: tuple[int, int], what: str) -> np.ndarray:
    try:
        matrix = frac_matrix([[parse_rational(x) for x in row] for row in rows], shape)
    except (TypeError, ValueError) as e:
        raise ParseError(f"Malformed matrix {what}") from e
    if matrix.shape != shape:
        raise InvalidParameters(f"{what} has shape {matrix.shape}, expected {shape}")
    return matrix


def parse_cochains(data) -> tuple[CochainComplex, list[np.ndarray] | None]:
    """
    Returns:
        tuple: (cochain complex, Gram matrices or None)

    Raises:
        ParseError: malformed file
        InvalidParameters: shapes that do not match `dims`
    """
    _require_object(data, "Cochain file")
    try:
        dims = [parse_int(d, "dimension") for d in data["dims"]]
        raw_differentials = data.get("differentials", [])
    except KeyError as e:
        raise ParseError(f"Cochain file lacks key {e}") from e
    if len(raw_differentials) != max(len(dims) - 1, 0):
        raise InvalidParameters(f"Expected {max(len(dims) - 1, 0)} differentials, got {len(raw_differentials)}")
    differentials = [_parse_matrix(rows, (dims[q + 1], dims[q]), f"d_{q}") for q, rows in enumerate(raw_differentials)]
    grams = None
    if "grams" in data:
        if len(data["grams"]) != len(dims):
            raise InvalidParameters(f"Expected {len(dims)} Gram matrices, got {len(data['grams'])}")
        grams = [_parse_matrix(rows, (d, d), f"G_{q}") for q, (rows, d) in enumerate(zip(data["grams"], dims))]
    labels = data.get("labels")
    if labels is not None:
        labels = [[tuple(label) for label in degree] for degree in labels]
    return CochainComplex(dims, differentials, labels, data.get("p")), grams


def cochains_to_dict(cochains: CochainComplex, grams: list[np.ndarray] | None = None) -> dict:
    result = {
        "dims": list(cochains.dims),
        "differentials": [format_matrix(d) for d in cochains.differentials],
    }
    if cochains.p is not None:
        result["p"] = cochains.p
    if cochains.labels is not None:
        result["labels"] = [[list(label) for label in degree] for degree in cochains.labels]
    if grams is not None:
        result["grams"] = [format_matrix(g) for g in grams]
    return result


def parse_form(data) -> list[Fraction]:
    _require_object(data, "Form file")
    if "form" not in data or not isinstance(data["form"], list):
        raise ParseError("Form file needs a \"form\" list")
    return [parse_rational(x) for x in data["form"]]


def form_to_dict(vector) -> dict:
    return {"form": [format_rational(x) for x in vector]}
