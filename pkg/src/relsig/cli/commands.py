"""
Implementations of the relsig subcommands.

Each public function maps 1-to-1 to a CLI verb, takes the parsed argparse
namespace and returns the process exit code. Failures are raised as
RelsigError subclasses and turned into exit codes by `relsig.cli.main`.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from relsig.algebra.rational import parse_rational
from relsig.cli.console import fail, info, ok, section
from relsig.cli.verification import verify_structure, verify_vector
from relsig.conversions.dual import dual_domination, pathcount_generating_function
from relsig.conversions.polynomial_route import is_full_degree, system_reliability
from relsig.conversions.routes import Value, convert, coordinates, value_from_coordinates
from relsig.conversions.signature import signature_from_tail
from relsig.conversions.vectors import DominationVector, Route
from relsig.core.config import get_settings
from relsig.core.errors import DocumentError, PreconditionError, VerificationMismatchError
from relsig.dependent.qstructure import (
    dependent_polynomial,
    probability_signature,
    probability_signature_gf,
    probability_signature_via_gf,
    probability_tail,
    q_levels,
    q_structure,
)
from relsig.dependent.quality import load_quality
from relsig.schemas.documents import Representation, SystemDocument, VectorDocument
from relsig.schemas.reports import AnalysisReport, DependentReport, VerificationCheck, VerificationReport
from relsig.structure.parser import load_json, load_structure, structure_from_document, validate_document
from relsig.structure.structure_function import minimal_path_sets, phi_vector, validate_semicoherent
from relsig.structure.transforms import diagonal_section, mobius_transform

logger = logging.getLogger(__name__)

# ---------------------------------------------------------------------------
# I/O helpers
# ---------------------------------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}", path=path) from exc


def _write(document: BaseModel, output: str) -> None:
    text = document.model_dump_json(indent=2) + "\n"
    if output == "-":
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8")
        logger.info("wrote %s", output)


def _route(args: argparse.Namespace) -> Route:
    return Route(args.route or get_settings().default_route)


def _vector_from_document(document: VectorDocument, representation: Representation) -> Value:
    if document.representation is not None and document.representation is not representation:
        raise PreconditionError(
            f"document holds a {document.representation} vector, expected {representation}",
            expected=str(representation),
            got=str(document.representation),
        )
    return value_from_coordinates(representation, document.n, document.values)


# ---------------------------------------------------------------------------
# Verbs
# ---------------------------------------------------------------------------


def cmd_analyze(args: argparse.Namespace) -> int:
    """Every representation of the system in one report."""
    phi = load_structure(_read_text(args.system))
    validate_semicoherent(phi)
    n = phi.n
    h = diagonal_section(mobius_transform(phi))
    d = DominationVector(h.coefficients)
    S = convert(d, Representation.DOMINATION, Representation.TAIL, _route(args))
    s = signature_from_tail(S)

    report = AnalysisReport(
        n=n,
        minimal_pathsets=[list(p) for p in minimal_path_sets(phi)],
        signature=list(s.s),
        tail=list(S.S),
        domination=list(d.d),
        phi=list(phi_vector(phi).values),
        polynomial=list(h.coefficients),
        dual_domination=list(dual_domination(d).d),
        full_degree=is_full_degree(s),
        pathcount_gf=list(pathcount_generating_function(h, n).coefficients),
    )
    if args.at is not None:
        try:
            at = parse_rational(args.at)
        except ValueError as exc:
            raise PreconditionError(str(exc)) from exc
        report.at = at
        report.reliability = system_reliability(s, at)
    _write(report, args.output)
    return 0


def cmd_convert(args: argparse.Namespace) -> int:
    source, target = Representation(args.source), Representation(args.target)
    document = validate_document(VectorDocument, load_json(_read_text(args.vector)))
    value = _vector_from_document(document, source)
    result = convert(value, source, target, _route(args))
    _write(VectorDocument(representation=target, n=document.n, values=coordinates(result)), args.output)
    return 0


def cmd_dependent(args: argparse.Namespace) -> int:
    phi = load_structure(_read_text(args.system))
    q = load_quality(_read_text(args.quality), phi.n)
    psi = q_structure(phi, q)
    g = dependent_polynomial(psi)
    tail = probability_tail(psi)
    p = probability_signature_via_gf(psi) if _route(args) is Route.INTEGRAL else probability_signature(psi)

    report = DependentReport(
        n=psi.n,
        psi_levels=q_levels(psi),
        tail=list(tail.S),
        p=list(p.s),
        g=list(g.coefficients),
        binomial_gf=list(probability_signature_gf(psi).coefficients),
    )
    _write(report, args.output)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    """Exit 0 when every route agrees, 1 on a mismatch, 3 when a vector document breaks its own preconditions.

    The report is written in every case, so a rejected vector still shows which precondition failed.
    """
    payload: Any = load_json(_read_text(args.document))
    if isinstance(payload, dict) and "values" in payload:
        report, rejection = _verify_vector_document(payload)
    else:
        phi = structure_from_document(validate_document(SystemDocument, payload))
        report, rejection = verify_structure(phi, args.verify_caps), None

    _write(report, args.output)
    if args.summary:
        _print_summary(report)
    if rejection is not None:
        raise rejection
    if not report.passed:
        failed = [c.name for c in report.checks if not c.passed]
        raise VerificationMismatchError(
            f"{len(failed)} of {len(report.checks)} checks failed",
            failed=failed,
            counterexample=report.counterexample,
        )
    return 0


def _verify_vector_document(payload: Any) -> tuple[VerificationReport, PreconditionError | None]:
    document = validate_document(VectorDocument, payload)
    if document.representation is None:
        raise DocumentError("a vector document passed to verify must name its representation")
    name = f"valid {document.representation} vector"
    try:
        value = _vector_from_document(document, document.representation)
    except PreconditionError as exc:
        logger.warning("%s: %s", name, exc.message)
        check = VerificationCheck(name=name, passed=False, detail=exc.message)
        return VerificationReport(n=document.n, source=str(document.representation), passed=False, checks=[check]), exc
    report = verify_vector(document.representation, value)
    report.checks.insert(0, VerificationCheck(name=name, passed=True))
    return report, None


def _print_summary(report: VerificationReport) -> None:
    section(f"verify  n={report.n}  source={report.source}")
    for check in report.checks:
        if check.passed:
            ok(check.name)
        else:
            fail(f"{check.name}  ({check.detail})" if check.detail else check.name)
    passed = sum(c.passed for c in report.checks)
    info(f"{passed}/{len(report.checks)} checks passed")
