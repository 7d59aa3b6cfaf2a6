# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
tropkit

Exact-arithmetic construction and verification of the combinatorial objects
of tropical Hodge theory: matroid Chow rings and their Kähler package,
balanced weighted polyhedral complexes, cellular tropical (p,q)-cohomology
and finite-dimensional Hodge decompositions.
"""
