# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Gram matrix providers for metrized cochain complexes.

    identity   G_q = I
    weighted   G_q diagonal, the entry of a coordinate of cell c is the sum
               of |m_P| over the maximal cells P containing c
    seed:K     seeded symmetric rational matrices with a strictly dominant
               positive diagonal (positive definite by construction)
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from compactification import CompactifiedComplex
from config import config
from constants import GRAM_ENTRY_BOUND
from errors import InvalidParameters
from linalg_utils import identity, zeros
from debug import get_logger

logger = get_logger(__file__)


def identity_grams(dims: list[int], **_kwargs) -> list[np.ndarray]:
    return [identity(d) for d in dims]


def weighted_grams(dims: list[int], labels=None, complex_: CompactifiedComplex | None = None, **_kwargs) -> list[np.ndarray]:
    """
    Raises:
        InvalidParameters: no cell labels or complex to read weights from
    """
    if labels is None or complex_ is None:
        raise InvalidParameters("The weighted Gram needs a complex; cochain files only support identity and seed:K")
    source = complex_.source
    grams = []
    for d, degree_labels in zip(dims, labels):
        gram = zeros(d, d)
        for i, (cell_id, _) in enumerate(degree_labels):
            cell = complex_.cells[cell_id]
            gram[i, i] = Fraction(sum(abs(source.weight(p)) for p in complex_.maximal_cofaces(cell)))
        grams.append(gram)
    return grams


def seeded_gram(rng: np.random.Generator, d: int, bound: int) -> np.ndarray:
    gram = zeros(d, d)
    for i in range(d):
        for j in range(i + 1, d):
            value = Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))
            gram[i, j] = value
            gram[j, i] = value
    for i in range(d):
        off_diagonal = sum((abs(gram[i, j]) for j in range(d) if j != i), Fraction(0))
        gram[i, i] = off_diagonal + int(rng.integers(1, bound + 1))
    return gram


def seeded_grams(dims: list[int], seed: int = 0, bound: int | None = None, **_kwargs) -> list[np.ndarray]:
    if bound is None:
        bound = config.setting("tropkit.gram_entry_bound", GRAM_ENTRY_BOUND)
    rng = np.random.default_rng(seed)
    return [seeded_gram(rng, d, int(bound)) for d in dims]


gram_providers = {
    "identity": identity_grams,
    "weighted": weighted_grams,
    "seed": seeded_grams,
}


def parse_gram_spec(spec: str) -> tuple[str, int | None]:
    """
    "identity" | "weighted" | "seed:K"

    Raises:
        InvalidParameters: unknown provider or malformed seed
    """
    name, _, argument = spec.strip().partition(":")
    if name not in gram_providers:
        raise InvalidParameters(f"Unknown Gram provider '{spec}', expected identity, weighted or seed:K")
    if name == "seed":
        try:
            return name, int(argument)
        except ValueError as e:
            raise InvalidParameters(f"Malformed seed in '{spec}'") from e
    if argument:
        raise InvalidParameters(f"Gram provider '{name}' takes no argument")
    return name, None


def make_grams(spec: str, dims: list[int], labels=None, complex_: CompactifiedComplex | None = None) -> list[np.ndarray]:
    name, seed = parse_gram_spec(spec)
    logger.debug("Gram provider %s for dims %s", spec, dims)
    return gram_providers[name](dims, labels=labels, complex_=complex_, seed=seed)
