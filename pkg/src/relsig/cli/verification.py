"""
Self-verification: compute the same quantity along every available formula
and record whether the results agree exactly.

Responsibilities:
  - verify_structure: all routes for one structure function, plus the oracles
  - verify_vector:    all routes and round trips for one vector document
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

from relsig.algebra.binomial import binomial
from relsig.algebra.polynomial import Polynomial, poly_derivative
from relsig.algebra.rational import format_rational
from relsig.conversions import dual, polynomial_route, signature
from relsig.conversions.routes import Value, convert, coordinates
from relsig.conversions.vectors import DominationVector, Route
from relsig.core.config import get_settings
from relsig.core.errors import PreconditionError
from relsig.dependent.qstructure import probability_signature, q_structure
from relsig.dependent.quality import OrderDistribution, RelativeQuality
from relsig.oracle.brute_force import boland_signature, permutation_signature
from relsig.schemas.documents import Representation
from relsig.schemas.reports import VerificationCheck, VerificationReport
from relsig.structure.structure_function import (
    StructureFunction,
    dual_structure,
    phi_vector,
    validate_semicoherent,
)
from relsig.structure.transforms import diagonal_section, mobius_transform

logger = logging.getLogger(__name__)

Comparable = Value | list[Fraction] | bool


def _as_list(value: Comparable) -> list:
    if isinstance(value, bool):
        return [value]
    if isinstance(value, list):
        return value
    return coordinates(value)


def _render(values: list) -> list[str]:
    return [str(v).lower() if isinstance(v, bool) else format_rational(v) for v in values]


@dataclass
class CheckLog:
    checks: list[VerificationCheck] = field(default_factory=list)
    counterexample: dict[str, list[str]] | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def compare(self, name: str, left: Callable[[], Comparable], right: Callable[[], Comparable]) -> None:
        """Evaluate both sides; a precondition failure on either side fails the check."""
        try:
            lhs, rhs = _as_list(left()), _as_list(right())
        except PreconditionError as exc:
            self.record_failure(name, exc.message)
            return
        if lhs == rhs:
            self.checks.append(VerificationCheck(name=name, passed=True))
            return
        logger.warning("check %r failed: %s != %s", name, _render(lhs), _render(rhs))
        self.checks.append(VerificationCheck(name=name, passed=False, detail="values differ"))
        if self.counterexample is None:
            self.counterexample = {"check": [name], "left": _render(lhs), "right": _render(rhs)}

    def record_failure(self, name: str, detail: str) -> None:
        logger.warning("check %r raised: %s", name, detail)
        self.checks.append(VerificationCheck(name=name, passed=False, detail=detail))

    def report(self, n: int, source: str) -> VerificationReport:
        return VerificationReport(
            n=n, source=source, passed=self.passed, checks=self.checks, counterexample=self.counterexample
        )


def _structure_domination(phi: StructureFunction) -> DominationVector:
    return DominationVector(diagonal_section(mobius_transform(phi)).coefficients)


def verify_structure(phi: StructureFunction, oracle_cap: int | None = None) -> VerificationReport:
    validate_semicoherent(phi)
    settings = get_settings()
    oracle_cap = settings.verify_max_components if oracle_cap is None else oracle_cap
    n = phi.n
    h = diagonal_section(mobius_transform(phi))
    d = DominationVector(h.coefficients)
    counts = phi_vector(phi)
    S = signature.tail_from_phi(counts)
    s = signature.signature_from_tail(S)
    log = CheckLog()

    # vector tables
    log.compare("path counts from domination", lambda: signature.phi_from_domination(d), lambda: counts)
    log.compare("path counts from tail", lambda: signature.phi_from_tail(S), lambda: counts)
    log.compare("tail from domination, table", lambda: signature.tail_from_domination(d), lambda: S)
    log.compare("tail from domination, closed form", lambda: signature.tail_from_domination_closed(d), lambda: S)
    log.compare("domination from tail, table", lambda: signature.domination_from_tail(S), lambda: d)
    log.compare("domination from tail, closed form", lambda: signature.domination_from_tail_closed(S), lambda: d)
    log.compare("domination from signature, table", lambda: signature.domination_from_signature(s), lambda: d)
    log.compare(
        "domination from signature, closed form", lambda: signature.domination_from_signature_closed(s), lambda: d
    )
    log.compare("signature from domination, table", lambda: signature.signature_from_domination(d), lambda: s)
    log.compare(
        "signature from domination, closed form", lambda: signature.signature_from_domination_closed(d), lambda: s
    )
    log.compare("signature generating identity", lambda: signature.check_generating_identity(s, S), lambda: True)

    # reliability polynomial
    log.compare("tail by reflection", lambda: polynomial_route.tail_from_polynomial(h, n), lambda: S)
    log.compare("signature by reflection", lambda: polynomial_route.signature_from_polynomial(h, n), lambda: s)
    log.compare(
        "reflected derivative coefficients",
        lambda: polynomial_route.reflected_derivative_shift(h, n),
        lambda: [k * binomial(n, k) * s[k] for k in range(1, n + 1)],
    )
    log.compare(
        "binomially weighted signature generating function",
        lambda: polynomial_route.binomial_signature_gf(h, n),
        lambda: [Fraction(0)] + [binomial(n, k) * s[k] for k in range(1, n + 1)],
    )
    log.compare(
        "signature generating function by integration",
        lambda: polynomial_route.signature_gf_via_integral(h, n),
        lambda: signature.signature_generating_function(s),
    )
    log.compare(
        "tail generating function by integration",
        lambda: polynomial_route.tail_gf_via_integral(h, n),
        lambda: signature.tail_generating_function(S),
    )
    log.compare(
        "polynomial from tail, Bernstein sum", lambda: polynomial_route.polynomial_from_tail(S, Route.CLOSED), lambda: h
    )
    log.compare(
        "polynomial from tail, operator table", lambda: polynomial_route.polynomial_from_tail(S, Route.TABLE), lambda: h
    )
    log.compare("polynomial from signature", lambda: polynomial_route.polynomial_from_signature(s), lambda: h)
    log.compare(
        "derivative from signature, closed form",
        lambda: polynomial_route.derivative_from_signature(s, Route.CLOSED),
        lambda: poly_derivative(h),
    )
    log.compare(
        "derivative from signature, operator table",
        lambda: polynomial_route.derivative_from_signature(s, Route.TABLE),
        lambda: poly_derivative(h),
    )
    log.compare("full-degree criterion", lambda: polynomial_route.is_full_degree(s), lambda: d[n] != 0)

    # duality
    dD = dual.dual_domination(d)
    log.compare(
        "dual domination matches the dual structure",
        lambda: dD,
        lambda: _structure_domination(dual_structure(phi)),
    )
    log.compare("dual domination is an involution", lambda: dual.dual_domination(dD), lambda: d)
    log.compare("dual domination from tail", lambda: dual.dual_domination_from_tail(S), lambda: dD)
    log.compare("dual domination from signature", lambda: dual.dual_domination_from_signature(s), lambda: dD)
    log.compare("tail from dual domination", lambda: dual.tail_from_dual_domination(dD), lambda: S)
    log.compare("signature from dual domination", lambda: dual.signature_from_dual_domination(dD), lambda: s)
    log.compare(
        "dual signature is the reversed signature",
        lambda: signature.signature_from_tail(signature.tail_from_phi(phi_vector(dual_structure(phi)))),
        lambda: dual.dual_signature(s),
    )
    log.compare("path counts by reflection", lambda: dual.pathcount_generating_function(h, n), lambda: counts)
    log.compare("path counts through the dual", lambda: dual.pathcount_gf_via_dual(h, n), lambda: counts)

    # independent references
    if n <= oracle_cap:
        log.compare("subset-sum oracle", lambda: boland_signature(phi), lambda: s)
        log.compare(
            "exchangeable quality reduces to the signature",
            lambda: probability_signature(q_structure(phi, RelativeQuality.exchangeable(n))),
            lambda: s,
        )
        if n <= settings.permutation_max_components:
            log.compare(
                "failure-order oracle",
                lambda: permutation_signature(phi, OrderDistribution.uniform(n)),
                lambda: s,
            )
    else:
        logger.info("skipping oracle checks: n=%d above the cap %d", n, oracle_cap)

    return log.report(n, "system")


def verify_vector(representation: Representation, value: Value) -> VerificationReport:
    """Every route to every representation must agree, and every round trip must return the input."""
    log = CheckLog()
    n = _component_count(representation, value)
    for target in Representation:
        if target is representation:
            continue
        try:
            reference = convert(value, representation, target, Route.TABLE)
        except PreconditionError as exc:
            log.record_failure(f"{representation} to {target}", exc.message)
            continue
        for route in Route:
            if route is Route.TABLE:
                continue
            log.compare(
                f"{representation} to {target}, {route} agrees with table",
                lambda route=route, target=target: convert(value, representation, target, route),
                lambda reference=reference: reference,
            )
        log.compare(
            f"{representation} to {target} and back",
            lambda target=target, reference=reference: convert(reference, target, representation, Route.TABLE),
            lambda: value,
        )
    return log.report(n, str(representation))


def _component_count(representation: Representation, value: Value) -> int:
    if isinstance(value, Polynomial):
        return value.degree_bound
    size = len(coordinates(value))
    return size if representation is Representation.SIGNATURE else size - 1
