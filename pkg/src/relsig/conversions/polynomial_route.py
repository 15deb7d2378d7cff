"""
Conversions that go through the reliability polynomial h(x).

Extraction reads S and s off the reflected, shifted polynomials
(R^n h)(x+1) and (R^(n-1) h')(x+1). The integral forms rebuild the same
generating functions from a bivariate substitution integrated over t. The
reconstruction direction has a closed form (Bernstein sums, regularized beta)
and a table whose cells are polynomials in x.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from relsig.algebra.binomial import binomial
from relsig.algebra.bipolynomial import (
    bipoly_from_affine_substitution,
    bipoly_integrate_t_unit,
    bipoly_multiply_x,
    bipoly_reflect_in_t,
)
from relsig.algebra.polynomial import (
    ONE,
    X,
    Polynomial,
    bernstein_term,
    poly_antiderivative_from_zero,
    poly_derivative,
    poly_reflect,
    poly_shift_plus_one,
    regularized_beta,
)
from relsig.algebra.rational import Scalar, to_fraction
from relsig.conversions.vectors import Role, Route, SignatureVector, TailSignature
from relsig.core.errors import PreconditionError

logger = logging.getLogger(__name__)


def require_reliability_polynomial(h: Polynomial, n: int) -> Polynomial:
    """Check h(0) = 0, h(1) = 1 and deg h <= n; return h with degree bound exactly n."""
    if n < 1:
        raise PreconditionError(f"component count must be positive, got n={n}")
    if h.coefficient(0) != 0:
        raise PreconditionError(f"h(0) must be 0, got {h.coefficient(0)}")
    if h(1) != 1:
        raise PreconditionError(f"h(1) must be 1, got {h(1)}")
    if h.degree > n:
        raise PreconditionError(f"h has degree {h.degree} > n={n}")
    return h.padded(n)


def reflected_shift(h: Polynomial, n: int) -> Polynomial:
    """(R^n h)(x+1)."""
    return poly_shift_plus_one(poly_reflect(h, n))


def reflected_derivative_shift(h: Polynomial, n: int) -> Polynomial:
    """(R^(n-1) h')(x+1); its coefficient of x^(k-1) is k C(n,k) s_k."""
    return reflected_shift(poly_derivative(h.padded(n)), n - 1)


# ---------------------------------------------------------------------------
# h -> S, s by reflection
# ---------------------------------------------------------------------------


def tail_from_polynomial(h: Polynomial, n: int, role: Role = Role.STRUCTURE) -> TailSignature:
    h = require_reliability_polynomial(h, n)
    a = reflected_shift(h, n)
    return TailSignature(tuple(a.coefficient(k) / binomial(n, k) for k in range(n + 1)), role)


def signature_from_polynomial(h: Polynomial, n: int, role: Role = Role.STRUCTURE) -> SignatureVector:
    h = require_reliability_polynomial(h, n)
    a = reflected_derivative_shift(h, n)
    return SignatureVector(tuple(a.coefficient(k - 1) / (k * binomial(n, k)) for k in range(1, n + 1)), role)


# ---------------------------------------------------------------------------
# h -> generating functions
# ---------------------------------------------------------------------------


def binomial_signature_gf(h: Polynomial, n: int) -> Polynomial:
    """sum_k C(n,k) s_k x^k as the antiderivative of (R^(n-1) h')(t+1) from 0 to x."""
    h = require_reliability_polynomial(h, n)
    return poly_antiderivative_from_zero(reflected_derivative_shift(h, n))


def signature_gf_via_integral(h: Polynomial, n: int) -> Polynomial:
    """sum_k s_k x^k = integral over t in [0,1] of x R_t^(n-1)[(R^(n-1) h')((t-1)x + 1)]."""
    h = require_reliability_polynomial(h, n)
    g = poly_reflect(poly_derivative(h), n - 1)
    surface = bipoly_reflect_in_t(bipoly_multiply_x(bipoly_from_affine_substitution(g)), n - 1)
    gf = bipoly_integrate_t_unit(surface)
    logger.debug("signature generating function by integration n=%d", n)
    return gf.padded(n)


def tail_gf_via_integral(h: Polynomial, n: int) -> Polynomial:
    """sum_k S_k x^k = (n+1) times the integral over t in [0,1] of R_t^n[(R^n h)((t-1)x + 1)]."""
    h = require_reliability_polynomial(h, n)
    surface = bipoly_reflect_in_t(bipoly_from_affine_substitution(poly_reflect(h, n)), n)
    return (bipoly_integrate_t_unit(surface) * (n + 1)).padded(n)


def signature_from_generating_function(gf: Polynomial, n: int, role: Role = Role.STRUCTURE) -> SignatureVector:
    if gf.coefficient(0) != 0 or gf.degree > n:
        raise PreconditionError(f"not a signature generating function for n={n}")
    return SignatureVector(tuple(gf.coefficient(k) for k in range(1, n + 1)), role)


def signature_from_binomial_gf(gf: Polynomial, n: int, role: Role = Role.STRUCTURE) -> SignatureVector:
    """Inverse of binomial_signature_gf: s_k = [x^k] / C(n,k)."""
    if gf.coefficient(0) != 0 or gf.degree > n:
        raise PreconditionError(f"not a binomially weighted signature generating function for n={n}")
    return SignatureVector(tuple(gf.coefficient(k) / binomial(n, k) for k in range(1, n + 1)), role)


def tail_from_generating_function(gf: Polynomial, n: int, role: Role = Role.STRUCTURE) -> TailSignature:
    if gf.degree > n:
        raise PreconditionError(f"tail generating function has degree {gf.degree} > n={n}")
    return TailSignature(tuple(gf.coefficient(k) for k in range(n + 1)), role)


# ---------------------------------------------------------------------------
# S, s -> h
# ---------------------------------------------------------------------------


def _operator_table(seed: list[Fraction]) -> Polynomial:
    """((x Delta + I)^m f)(0) for f(i) = seed[i], m = len(seed) - 1, with polynomial cells."""
    row = [Polynomial.constant(v) for v in seed]
    complement = ONE - X
    for k in range(1, len(row)):
        for j in range(len(row) - k):
            row[j] = X * row[j + 1] + complement * row[j]
    return row[0]


def polynomial_from_tail(S: TailSignature, route: Route = Route.TABLE) -> Polynomial:
    n = S.n
    if route is Route.CLOSED:
        h = Polynomial.zero(n)
        for k in range(n + 1):
            if S.S[n - k]:
                h = h + bernstein_term(n, k) * (binomial(n, k) * S.S[n - k])
        return h
    return _operator_table([S.S[n - j] for j in range(n + 1)]).padded(n)


def derivative_from_signature(s: SignatureVector, route: Route = Route.TABLE) -> Polynomial:
    n = s.n
    if route is Route.CLOSED:
        derivative = Polynomial.zero(n - 1)
        for k in range(1, n + 1):
            if s[k]:
                derivative = derivative + bernstein_term(n - 1, n - k) * (k * binomial(n, k) * s[k])
        return derivative
    return (_operator_table([s[n - j] for j in range(n)]) * n).padded(n - 1)


def polynomial_from_signature(s: SignatureVector) -> Polynomial:
    """h(x) = sum_k s_k I_x(n-k+1, k)."""
    n = s.n
    h = Polynomial.zero(n)
    for k in range(1, n + 1):
        if s[k]:
            h = h + regularized_beta(n - k + 1, k) * s[k]
    return h


def is_full_degree(s: SignatureVector) -> bool:
    """deg h = n iff the C(n-1,k-1)-weighted sums of s over odd and even k differ."""
    n = s.n
    odd = sum((binomial(n - 1, k - 1) * s[k] for k in range(1, n + 1, 2)), Fraction(0))
    even = sum((binomial(n - 1, k - 1) * s[k] for k in range(2, n + 1, 2)), Fraction(0))
    return odd != even


def system_reliability(s: SignatureVector, p: Scalar) -> Fraction:
    """h(p) for components that each work with probability p."""
    p = to_fraction(p)
    if not 0 <= p <= 1:
        raise PreconditionError(f"component reliability must lie in [0, 1], got {p}")
    return polynomial_from_signature(s)(p)
