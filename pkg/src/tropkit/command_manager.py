# Copyright (C) 2024-2026 by the tropkit developers
# License: GNU General Public License v3.0 (see LICENSE file for details)

"""
Command Manager
Dispatches parsed command lines to the library and collects reports
"""

from __future__ import annotations

from argparse import Namespace
from typing import Any

from catalog_manager import CatalogManager
from cellular_cohomology import as_bounded, build_cochain_complex
from check_manager import CheckManager
from chow_ring import ample_default, build_chow_ring
from compactification import canonical_compactification, compactify
from discrete_hodge import MetrizedComplex, hodge_decompose, lefschetz_check, lefschetz_decomposition, metrize, verify_hodge_isomorphism
from errors import InvalidParameters, NotBalanced, NotPure
from fan_utils import bergman_fan, star_fan
from file_formats import (
    cochains_to_dict,
    complex_to_dict,
    parse_cochains,
    parse_complex,
    parse_form,
    parse_matroid,
    resolve_input,
    write_json,
)
from matroid import (
    characteristic_polynomial,
    characteristic_polynomial_deletion_contraction,
    check_lattice_axioms,
    matroid_to_dict,
    matroid_uniform,
    whitney_numbers,
)
from report_utils import FAIL, PASS, WARN, Report
from tropical_checks import check_q_smooth_codim1
from debug import get_logger

logger = get_logger(__file__)


def parse_uniform(spec: str) -> tuple[int, int]:
    try:
        r, n = (int(x) for x in spec.split(","))
    except ValueError as e:
        raise InvalidParameters(f"--uniform expects R,N, got '{spec}'") from e
    return r, n


class CommandManager:
    """Runs one CLI command; returns (reports, result data)"""

    def __init__(self, timing: bool = False, jobs: int | None = None):
        self.timing = timing
        self.jobs = jobs
        self.check_manager = CheckManager()

    def handle(self, args: Namespace) -> tuple[list[Report], Any]:
        logger.info("command: %s %s", args.group, getattr(args, "command", ""))
        match (args.group, getattr(args, "command", None)):
            case ("matroid", "info"):
                return self.matroid_info(args)
            case ("matroid", "chi"):
                return self.matroid_chi(args)
            case ("matroid", "logconcave"):
                return self.matroid_logconcave(args)
            case ("matroid", "chow"):
                return self.matroid_chow(args)
            case ("complex", "validate"):
                return self.complex_validate(args)
            case ("complex", "bergman"):
                return self.complex_bergman(args)
            case ("complex", "star"):
                return self.complex_star(args)
            case ("complex", "cohomology"):
                return self.complex_cohomology(args)
            case ("hodge", "verify"):
                return self.hodge_verify(args)
            case ("hodge", "decompose"):
                return self.hodge_decompose(args)
            case ("catalog", "list"):
                return self.catalog_list(args)
            case _:
                raise InvalidParameters(f"Unknown command: {args.group} {getattr(args, 'command', '')}")

    # matroids

    def load_matroid(self, spec: str):
        return parse_matroid(resolve_input(spec))

    def matroid_info(self, args):
        matroid = self.load_matroid(args.file)
        lattice = matroid.lattice()
        chi = characteristic_polynomial(matroid)
        data = {
            "matroid": matroid_to_dict(matroid),
            "rank": matroid.rank,
            "loops": sorted(matroid.loops()),
            "coloops": sorted(matroid.coloops()),
            "flats_per_rank": [len(lattice.flats_of_rank(k)) for k in range(matroid.rank + 1)],
            "characteristic_polynomial": chi,
            "whitney_numbers": whitney_numbers(matroid),
        }
        axioms = check_lattice_axioms(lattice)
        reports = [Report("lattice", PASS if axioms["holds"] else FAIL, witness=None if axioms["holds"] else axioms["violations"], details=axioms)]
        if chi.warnings:
            reports.append(Report("loops", WARN, witness={"warnings": list(chi.warnings)}))
        return reports, data

    def matroid_chi(self, args):
        matroid = self.load_matroid(args.file)
        mobius = characteristic_polynomial(matroid)
        oracle = characteristic_polynomial_deletion_contraction(matroid)
        equal = mobius == oracle
        witness = None if equal else {"mobius": mobius, "deletion_contraction": oracle}
        reports = [Report("chi_oracle", PASS if equal else FAIL, witness=witness)]
        if mobius.warnings:
            reports.append(Report("loops", WARN, witness={"warnings": list(mobius.warnings)}))
        return reports, {"characteristic_polynomial": mobius, "whitney_numbers": whitney_numbers(matroid)}

    def matroid_logconcave(self, args):
        matroid = self.load_matroid(args.file)
        report = self.check_manager.run("logconcave", matroid, timing=self.timing)
        return [report], {"matroid": matroid_to_dict(matroid)}

    def matroid_chow(self, args):
        matroid = self.load_matroid(args.file)
        check_ids = self.check_manager.parse_check_list(args.check, ("ring",))
        ring = build_chow_ring(matroid)
        if args.all_p:
            degrees = None
        elif args.p is not None:
            degrees = [args.p]
        else:
            degrees = [0]
        element = ample_default(ring) if ring.r > 0 else None
        reports = self.check_manager.run_all(check_ids, ring, timing=self.timing, element=element, degrees=degrees, jobs=self.jobs)
        data = {"ring": ring.to_dict()}
        if args.all_p:
            summary = lefschetz_check(ring, element, self.jobs)
            data["primitive_dims"] = summary["primitive_dims"]
            data["lefschetz_decomposition"] = lefschetz_decomposition(ring, element)
            if not summary["consistent"]:
                reports.append(Report("primitive_dims", FAIL, witness={"dims": ring.dims, "primitive_dims": summary["primitive_dims"]}))
        return reports, data

    # complexes

    def load_complex(self, spec: str):
        return parse_complex(resolve_input(spec))

    @staticmethod
    def complex_summary(complex_) -> dict:
        return {
            "ambient_dim": complex_.ambient_dim,
            "dim": complex_.dim,
            "counts": [len(complex_.cells_of_dim(d)) for d in range(complex_.dim + 1)],
            "maximal_cells": [complex_.describe(c) for c in complex_.maximal_cells()],
            "pure": complex_.is_pure(),
            "fan": complex_.is_fan(),
            "warnings": list(complex_.warnings),
        }

    def complex_validate(self, args):
        complex_ = self.load_complex(args.file)
        check_ids = self.check_manager.parse_check_list(args.checks, ("complex",)) if args.checks else []
        reports = [Report("structure", WARN if complex_.warnings else PASS, witness={"warnings": complex_.warnings} if complex_.warnings else None)]
        reports += self.check_manager.run_all(check_ids, complex_, timing=self.timing, jobs=self.jobs)
        return reports, self.complex_summary(complex_)

    def complex_bergman(self, args):
        if args.uniform:
            r, n = parse_uniform(args.uniform)
            matroid = matroid_uniform(r, n)
        else:
            matroid = self.load_matroid(args.file)
        fan = bergman_fan(matroid)
        data = complex_to_dict(fan)
        if args.output:
            write_json(data, args.output)
        return [], data

    def complex_star(self, args):
        complex_ = self.load_complex(args.file)
        star = star_fan(complex_, args.cell)
        return [], complex_to_dict(star)

    @staticmethod
    def bounded(complex_, compactify_input: bool):
        """Compactified complex; fans go through the canonical compactification."""
        if not compactify_input:
            return as_bounded(complex_)
        return canonical_compactification(complex_) if complex_.is_fan() else compactify(complex_)

    def smoothness_flags(self, complex_) -> list[Report]:
        """Flag cohomology results on complexes that fail Q-smoothness in codimension one."""
        try:
            result = check_q_smooth_codim1(complex_, self.jobs)
        except (NotBalanced, NotPure):
            return []
        if result["smooth"]:
            return []
        failing = [c["cell"] for c in result["cells"] if not c["smooth"]]
        return [Report("uniquely_p_balanced", WARN, witness={"not_q_smooth_at": failing, "flag": "uniquely_p_balanced_unchecked"})]

    def complex_cohomology(self, args):
        complex_ = self.load_complex(args.file)
        if args.emit_cochains and args.p is None:
            raise InvalidParameters("--emit-cochains needs --p")
        bounded = self.bounded(complex_, args.compactify)
        degrees = [args.p] if args.p is not None else list(range(max(complex_.dim, 0) + 1))
        table = {}
        cochain_dims = {}
        for p in degrees:
            cochains = build_cochain_complex(bounded, p)
            table[p] = cochains.cohomology_dims(self.jobs)
            cochain_dims[p] = cochains.dims
            if args.emit_cochains:
                write_json(cochains_to_dict(cochains), args.emit_cochains)
        reports = self.smoothness_flags(complex_) if complex_.dim > 0 else []
        return reports, {"cohomology": table, "cochain_dims": cochain_dims}

    # hodge theory

    def metrized_input(self, args) -> MetrizedComplex:
        data = resolve_input(args.file)
        if isinstance(data, dict) and "dims" in data:
            cochains, grams = parse_cochains(data)
            if grams is not None and args.gram is None:
                return MetrizedComplex(cochains, grams)
            return metrize(cochains, args.gram or "identity")
        complex_ = parse_complex(data)
        bounded = self.bounded(complex_, args.compactify)
        cochains = build_cochain_complex(bounded, args.p)
        return metrize(cochains, args.gram or "identity", bounded)

    def hodge_verify(self, args):
        mc = self.metrized_input(args)
        result = verify_hodge_isomorphism(mc, self.jobs)
        failing = [d for d in result["degrees"] if not d["equal"]]
        report = Report("hodge_isomorphism", PASS if result["holds"] else FAIL, witness=failing or None)
        return [report], result

    def hodge_decompose(self, args):
        mc = self.metrized_input(args)
        omega = parse_form(resolve_input(args.form))
        decomposition = hodge_decompose(mc, args.q, omega)
        return [Report("hodge_decomposition", PASS)], decomposition

    def catalog_list(self, _args):
        entries = CatalogManager().get_entries()
        return [], [{"id": e["entry_id"], "kind": e.get("kind", ""), "title": e.get("title", "")} for e in entries]

