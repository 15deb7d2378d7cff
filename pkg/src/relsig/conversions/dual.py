"""
Conversions involving the dual structure phi^D(A) = 1 - phi(C minus A).

Vectors of the dual carry Role.DUAL; functions that read a dual domination
vector refuse primal input with RoleMismatchError.
"""

from __future__ import annotations

import logging

from relsig.algebra.binomial import binomial
from relsig.algebra.polynomial import Polynomial, poly_compose_one_minus, poly_reflect, power_of_one_plus_x
from relsig.conversions.polynomial_route import reflected_shift, require_reliability_polynomial
from relsig.conversions.signature import StepCounter, scaled_difference_diagonal
from relsig.conversions.vectors import (
    DominationVector,
    Role,
    SignatureVector,
    TailSignature,
    dual_role,
    require_role,
)

logger = logging.getLogger(__name__)


def dual_domination(d: DominationVector) -> DominationVector:
    """d^D_k = delta_{k,0} - (-1)^k sum_{j>=k} C(j,k) d_j. An involution, so it also maps d^D back to d."""
    n = d.n
    values = []
    for k in range(n + 1):
        total = sum(binomial(j, k) * d.d[j] for j in range(k, n + 1))
        values.append((1 if k == 0 else 0) - (-1) ** k * total)
    return DominationVector(tuple(values), dual_role(d.role))


def tail_from_dual_domination(dD: DominationVector) -> TailSignature:
    require_role(dD.role, Role.DUAL, "tail_from_dual_domination")
    n = dD.n
    tail = [1 - sum(binomial(k, j) * dD.d[j] / binomial(n, j) for j in range(k + 1)) for k in range(n + 1)]
    return TailSignature(tuple(tail), Role.STRUCTURE)


def signature_from_dual_domination(dD: DominationVector) -> SignatureVector:
    require_role(dD.role, Role.DUAL, "signature_from_dual_domination")
    n = dD.n
    s = [sum(binomial(k - 1, j - 1) * dD.d[j] / binomial(n, j) for j in range(1, k + 1)) for k in range(1, n + 1)]
    return SignatureVector(tuple(s), Role.STRUCTURE)


def dual_domination_from_tail(S: TailSignature, counter: StepCounter | None = None) -> DominationVector:
    """d^D_k = delta_{k,0} - C(n,k) times the k-th forward difference of S at 0."""
    require_role(S.role, Role.STRUCTURE, "dual_domination_from_tail")
    n = S.n
    diagonal = scaled_difference_diagonal(list(S.S), n, 1, counter)
    values = [(1 if k == 0 else 0) - v for k, v in enumerate(diagonal)]
    return DominationVector(tuple(values), Role.DUAL)


def dual_domination_from_signature(s: SignatureVector, counter: StepCounter | None = None) -> DominationVector:
    """d^D_k = C(n,k) times the (k-1)-th forward difference of s at 1."""
    require_role(s.role, Role.STRUCTURE, "dual_domination_from_signature")
    n = s.n
    diagonal = scaled_difference_diagonal(list(s.s), n, 2, counter)
    return DominationVector((0, *diagonal), Role.DUAL)


def dual_signature(s: SignatureVector) -> SignatureVector:
    """s^D_k = s_{n-k+1}."""
    return SignatureVector(tuple(reversed(s.s)), dual_role(s.role))


def dual_tail(S: TailSignature) -> TailSignature:
    """S^D_k = 1 - S_{n-k}."""
    return TailSignature(tuple(1 - v for v in reversed(S.S)), dual_role(S.role))


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


def dual_polynomial(h: Polynomial, n: int) -> Polynomial:
    """h^D(x) = 1 - h(1 - x)."""
    h = require_reliability_polynomial(h, n)
    return 1 - poly_compose_one_minus(h)


def pathcount_generating_function(h: Polynomial, n: int) -> Polynomial:
    """sum_k phi_k x^k = R^n((R^n h)(x+1))."""
    h = require_reliability_polynomial(h, n)
    return poly_reflect(reflected_shift(h, n), n)


def pathcount_gf_via_dual(h: Polynomial, n: int) -> Polynomial:
    """sum_k phi_k x^k = (x+1)^n - (R^n h^D)(x+1)."""
    gf = power_of_one_plus_x(n) - reflected_shift(dual_polynomial(h, n), n)
    logger.debug("path-count generating function through the dual n=%d", n)
    return gf
