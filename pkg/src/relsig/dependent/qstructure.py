"""
The q-structure function psi and the probability signature p.

psi(A) = C(n,|A|) q(A) on path sets and 0 elsewhere. Every structural
formula keeps holding once phi, d, h, s and S are replaced by psi, its
Moebius coefficients c, its diagonal g, p and the tail P, so the dependent
case reuses the structural conversions with Role.PROBABILITY.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from relsig.algebra.binomial import binomial
from relsig.algebra.polynomial import Polynomial
from relsig.conversions.polynomial_route import binomial_signature_gf, signature_from_binomial_gf
from relsig.conversions.signature import signature_from_tail
from relsig.conversions.vectors import Role, SignatureVector, TailSignature
from relsig.core.errors import DimensionMismatchError, PreconditionError
from relsig.dependent.quality import RelativeQuality
from relsig.structure.structure_function import StructureFunction, validate_semicoherent
from relsig.structure.transforms import MultilinearForm, diagonal_section, subset_mobius

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QStructure:
    n: int
    psi: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.psi) != 1 << self.n:
            raise PreconditionError(f"expected {1 << self.n} psi values for n={self.n}, got {len(self.psi)}")
        if self.psi[0] != 0:
            raise PreconditionError(f"psi of the empty set must be 0, got {self.psi[0]}")
        if self.psi[-1] != 1:
            raise PreconditionError(f"psi of the full set must be 1, got {self.psi[-1]}")

    def __getitem__(self, mask: int) -> Fraction:
        return self.psi[mask]


def q_structure(phi: StructureFunction, q: RelativeQuality) -> QStructure:
    if phi.n != q.n:
        raise DimensionMismatchError(f"structure has n={phi.n} but quality function has n={q.n}", phi_n=phi.n, q_n=q.n)
    validate_semicoherent(phi)
    n = phi.n
    psi = tuple(
        binomial(n, mask.bit_count()) * q[mask] if phi(mask) else Fraction(0) for mask in range(1 << n)
    )
    return QStructure(n, psi)


def g_multilinear(psi: QStructure) -> MultilinearForm:
    """c(A) = sum over B subset A of (-1)^(|A|-|B|) psi(B)."""
    return MultilinearForm.from_dense(psi.n, subset_mobius(psi.psi))


def dependent_polynomial(psi: QStructure) -> Polynomial:
    """g(x, ..., x); need not be increasing in each variable."""
    return diagonal_section(g_multilinear(psi))


def q_levels(psi: QStructure) -> list[Fraction]:
    """psi_k = sum of psi(A) over |A| = k."""
    levels = [Fraction(0)] * (psi.n + 1)
    for mask, value in enumerate(psi.psi):
        levels[mask.bit_count()] += value
    return levels


def probability_tail(psi: QStructure) -> TailSignature:
    n = psi.n
    levels = q_levels(psi)
    return TailSignature(tuple(levels[n - k] / binomial(n, k) for k in range(n + 1)), Role.PROBABILITY)


def probability_signature(psi: QStructure) -> SignatureVector:
    return signature_from_tail(probability_tail(psi))


def probability_signature_from_quality(phi: StructureFunction, q: RelativeQuality) -> SignatureVector:
    """p_k = sum over |A| = n-k+1 of q(A) phi(A) minus the same sum over |A| = n-k."""
    if phi.n != q.n:
        raise DimensionMismatchError(f"structure has n={phi.n} but quality function has n={q.n}", phi_n=phi.n, q_n=q.n)
    n = phi.n
    weighted = [Fraction(0)] * (n + 1)
    for mask in range(1 << n):
        if phi(mask):
            weighted[mask.bit_count()] += q[mask]
    return SignatureVector(tuple(weighted[n - k + 1] - weighted[n - k] for k in range(1, n + 1)), Role.PROBABILITY)


def probability_signature_gf(psi: QStructure) -> Polynomial:
    """sum_k C(n,k) p_k x^k, obtained from g exactly as the structural case obtains it from h."""
    g = dependent_polynomial(psi)
    logger.debug("dependent generating function n=%d deg g=%d", psi.n, g.degree)
    return binomial_signature_gf(g, psi.n)


def probability_signature_via_gf(psi: QStructure) -> SignatureVector:
    return signature_from_binomial_gf(probability_signature_gf(psi), psi.n, Role.PROBABILITY)
