"""
Conversion graph over the six representations of a system.

Each direct edge maps one representation to another and may offer several
formulas keyed by Route. Pairs without a direct edge are reached along the
shortest path through the graph. Polynomials travel with degree bound n.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from relsig.algebra.polynomial import Polynomial
from relsig.conversions import dual, polynomial_route, signature
from relsig.conversions.vectors import DominationVector, PhiVector, Role, Route, SignatureVector, TailSignature
from relsig.core.errors import PreconditionError, RoleMismatchError
from relsig.schemas.documents import Representation

logger = logging.getLogger(__name__)

Value = SignatureVector | TailSignature | DominationVector | PhiVector | Polynomial
Converter = Callable[[Any], Value]


@dataclass(frozen=True)
class Edge:
    source: Representation
    target: Representation
    variants: dict[Route, Converter]
    default: Route = Route.TABLE

    def pick(self, route: Route | None) -> tuple[Route, Converter]:
        if route is not None and route in self.variants:
            return route, self.variants[route]
        return self.default, self.variants[self.default]


def _polynomial_to_domination(h: Polynomial) -> DominationVector:
    n = h.degree_bound
    return DominationVector(polynomial_route.require_reliability_polynomial(h, n).coefficients)


def _domination_to_polynomial(d: DominationVector) -> Polynomial:
    return Polynomial(d.d)


def _signature_via_integral(h: Polynomial) -> SignatureVector:
    n = h.degree_bound
    return polynomial_route.signature_from_generating_function(polynomial_route.signature_gf_via_integral(h, n), n)


def _tail_via_integral(h: Polynomial) -> TailSignature:
    n = h.degree_bound
    return polynomial_route.tail_from_generating_function(polynomial_route.tail_gf_via_integral(h, n), n)


def _tail_via_reflection(h: Polynomial) -> TailSignature:
    return polynomial_route.tail_from_polynomial(h, h.degree_bound)


def _signature_via_reflection(h: Polynomial) -> SignatureVector:
    return polynomial_route.signature_from_polynomial(h, h.degree_bound)


def _phi_via_pathcount_gf(h: Polynomial) -> PhiVector:
    return PhiVector(dual.pathcount_generating_function(h, h.degree_bound).coefficients)


def _phi_via_dual(h: Polynomial) -> PhiVector:
    return PhiVector(dual.pathcount_gf_via_dual(h, h.degree_bound).coefficients)


def _polynomial_from_tail_table(S: TailSignature) -> Polynomial:
    return polynomial_route.polynomial_from_tail(S, Route.TABLE)


def _polynomial_from_tail_closed(S: TailSignature) -> Polynomial:
    return polynomial_route.polynomial_from_tail(S, Route.CLOSED)


R = Representation

EDGES: tuple[Edge, ...] = (
    Edge(R.SIGNATURE, R.TAIL, {Route.TABLE: signature.tail_from_signature}),
    Edge(R.TAIL, R.SIGNATURE, {Route.TABLE: signature.signature_from_tail}),
    Edge(
        R.TAIL,
        R.DOMINATION,
        {Route.TABLE: signature.domination_from_tail, Route.CLOSED: signature.domination_from_tail_closed},
    ),
    Edge(
        R.DOMINATION,
        R.TAIL,
        {Route.TABLE: signature.tail_from_domination, Route.CLOSED: signature.tail_from_domination_closed},
    ),
    Edge(
        R.SIGNATURE,
        R.DOMINATION,
        {Route.TABLE: signature.domination_from_signature, Route.CLOSED: signature.domination_from_signature_closed},
    ),
    Edge(
        R.DOMINATION,
        R.SIGNATURE,
        {Route.TABLE: signature.signature_from_domination, Route.CLOSED: signature.signature_from_domination_closed},
    ),
    Edge(R.DOMINATION, R.PHI, {Route.TABLE: signature.phi_from_domination}),
    Edge(R.PHI, R.DOMINATION, {Route.TABLE: signature.domination_from_phi}),
    Edge(R.TAIL, R.PHI, {Route.TABLE: signature.phi_from_tail}),
    Edge(R.PHI, R.TAIL, {Route.TABLE: signature.tail_from_phi}),
    Edge(R.DOMINATION, R.POLYNOMIAL, {Route.TABLE: _domination_to_polynomial}),
    Edge(R.POLYNOMIAL, R.DOMINATION, {Route.TABLE: _polynomial_to_domination}),
    Edge(
        R.POLYNOMIAL,
        R.TAIL,
        {
            Route.REFLECT: _tail_via_reflection,
            Route.INTEGRAL: _tail_via_integral,
        },
        default=Route.REFLECT,
    ),
    Edge(
        R.POLYNOMIAL,
        R.SIGNATURE,
        {
            Route.REFLECT: _signature_via_reflection,
            Route.INTEGRAL: _signature_via_integral,
        },
        default=Route.REFLECT,
    ),
    Edge(
        R.POLYNOMIAL,
        R.PHI,
        {Route.REFLECT: _phi_via_pathcount_gf, Route.CLOSED: _phi_via_dual},
        default=Route.REFLECT,
    ),
    Edge(
        R.TAIL,
        R.POLYNOMIAL,
        {
            Route.TABLE: _polynomial_from_tail_table,
            Route.CLOSED: _polynomial_from_tail_closed,
        },
    ),
    Edge(R.SIGNATURE, R.POLYNOMIAL, {Route.CLOSED: polynomial_route.polynomial_from_signature}, default=Route.CLOSED),
    Edge(
        R.DOMINATION,
        R.DUAL_DOMINATION,
        {Route.CLOSED: dual.dual_domination},
        default=Route.CLOSED,
    ),
    Edge(
        R.DUAL_DOMINATION,
        R.DOMINATION,
        {Route.CLOSED: dual.dual_domination},
        default=Route.CLOSED,
    ),
    Edge(R.TAIL, R.DUAL_DOMINATION, {Route.TABLE: dual.dual_domination_from_tail}),
    Edge(R.SIGNATURE, R.DUAL_DOMINATION, {Route.TABLE: dual.dual_domination_from_signature}),
    Edge(R.DUAL_DOMINATION, R.TAIL, {Route.CLOSED: dual.tail_from_dual_domination}, default=Route.CLOSED),
    Edge(R.DUAL_DOMINATION, R.SIGNATURE, {Route.CLOSED: dual.signature_from_dual_domination}, default=Route.CLOSED),
)

_ADJACENCY: dict[Representation, list[Edge]] = {r: [e for e in EDGES if e.source is r] for r in Representation}

_EXPECTED_TYPES: dict[Representation, type] = {
    R.SIGNATURE: SignatureVector,
    R.TAIL: TailSignature,
    R.DOMINATION: DominationVector,
    R.POLYNOMIAL: Polynomial,
    R.PHI: PhiVector,
    R.DUAL_DOMINATION: DominationVector,
}


def conversion_path(source: Representation, target: Representation) -> list[Edge]:
    """Fewest edges from source to target; ties go to the edge listed first."""
    previous: dict[Representation, Edge | None] = {source: None}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        if node is target:
            break
        for edge in _ADJACENCY[node]:
            if edge.target not in previous:
                previous[edge.target] = edge
                queue.append(edge.target)
    if target not in previous:
        raise PreconditionError(f"no conversion from {source} to {target}")
    path: list[Edge] = []
    node = target
    while (edge := previous[node]) is not None:
        path.append(edge)
        node = edge.source
    return path[::-1]


def check_representation(value: Value, representation: Representation) -> None:
    expected = _EXPECTED_TYPES[representation]
    if not isinstance(value, expected):
        raise PreconditionError(f"{representation} expects a {expected.__name__}, got {type(value).__name__}")
    if isinstance(value, DominationVector):
        is_dual = value.role is Role.DUAL
        if is_dual != (representation is R.DUAL_DOMINATION):
            raise RoleMismatchError(f"{representation} given a {value.role} domination vector", got=str(value.role))


def convert(value: Value, source: Representation, target: Representation, route: Route | None = None) -> Value:
    check_representation(value, source)
    for edge in conversion_path(source, target):
        chosen, converter = edge.pick(route)
        logger.debug("convert %s -> %s via %s", edge.source, edge.target, chosen)
        value = converter(value)
    return value


def coordinates(value: Value) -> list[Fraction]:
    """The exact numbers a value is made of, in document order."""
    if isinstance(value, SignatureVector):
        return list(value.s)
    if isinstance(value, TailSignature):
        return list(value.S)
    if isinstance(value, DominationVector):
        return list(value.d)
    if isinstance(value, PhiVector):
        return list(value.values)
    return list(value.coefficients)


def value_from_coordinates(representation: Representation, n: int, values: Sequence[Fraction]) -> Value:
    """Inverse of `coordinates`; a polynomial may list fewer than n+1 coefficients."""
    expected = n if representation is R.SIGNATURE else n + 1
    if representation is R.POLYNOMIAL:
        if not 1 <= len(values) <= expected:
            raise PreconditionError(f"a polynomial for n={n} takes 1..{expected} coefficients, got {len(values)}")
        return Polynomial.of(values).padded(n)
    if len(values) != expected:
        raise PreconditionError(f"{representation} for n={n} takes {expected} values, got {len(values)}")
    if representation is R.SIGNATURE:
        return SignatureVector(tuple(values))
    if representation is R.TAIL:
        return TailSignature(tuple(values))
    if representation is R.PHI:
        return PhiVector(tuple(values))
    role = Role.DUAL if representation is R.DUAL_DOMINATION else Role.STRUCTURE
    return DominationVector(tuple(values), role)
