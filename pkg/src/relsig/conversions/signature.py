"""
Conversions among the signature s, the tail signature S, the domination
vector d and the path counts phi.

The difference-table algorithms keep a single row and overwrite it in place;
only the first cell of each stage is ever consumed. The tables that multiply
by (n-k+1)/k run on integers after scaling by the common denominator: each
cell equals C(n,k) times an integer difference, so every division is exact.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from relsig.algebra.binomial import binomial
from relsig.algebra.polynomial import Polynomial
from relsig.algebra.rational import common_denominator
from relsig.conversions.vectors import DominationVector, PhiVector, SignatureVector, TailSignature
from relsig.core.errors import PreconditionError

logger = logging.getLogger(__name__)


@dataclass
class StepCounter:
    """Counts combine steps (one subtraction or addition plus one multiplication) in a table."""

    steps: int = 0

    def add(self, count: int = 1) -> None:
        self.steps += count


def scaled_difference_diagonal(
    values: Sequence[Fraction],
    n: int,
    first_order: int,
    counter: StepCounter | None = None,
) -> list[Fraction]:
    """
    Seed a row with C(n, first_order-1) * values and run
    D[j] := (n-k+1)/k * (D[j+1] - D[j]) for k = first_order, first_order+1, ...
    until one cell is left. Returns D[0] before the first stage and after every stage.
    """
    scale = common_denominator(values)
    leading = binomial(n, first_order - 1)
    row = [int(leading * v * scale) for v in values]
    diagonal = [row[0]]
    length = len(row)
    for stage in range(1, length):
        k = first_order + stage - 1
        factor = n - k + 1
        for j in range(length - stage):
            row[j] = factor * (row[j + 1] - row[j]) // k
        if counter is not None:
            counter.add(length - stage)
        diagonal.append(row[0])
    return [Fraction(v, scale) for v in diagonal]


# ---------------------------------------------------------------------------
# s <-> S
# ---------------------------------------------------------------------------


def tail_from_signature(s: SignatureVector) -> TailSignature:
    tail = [Fraction(0)] * (s.n + 1)
    for k in range(s.n - 1, -1, -1):
        tail[k] = tail[k + 1] + s.s[k]
    return TailSignature(tuple(tail), s.role)


def signature_from_tail(S: TailSignature) -> SignatureVector:
    return SignatureVector(tuple(S.S[k - 1] - S.S[k] for k in range(1, S.n + 1)), S.role)


# ---------------------------------------------------------------------------
# S <-> d
# ---------------------------------------------------------------------------


def domination_from_tail(S: TailSignature, counter: StepCounter | None = None) -> DominationVector:
    """d_k = C(n,k) times the k-th difference of S_{n-i} at i = 0."""
    n = S.n
    d = scaled_difference_diagonal([S.S[n - j] for j in range(n + 1)], n, 1, counter)
    logger.debug("tail -> domination n=%d steps=%s", n, counter.steps if counter else "-")
    return DominationVector(tuple(d), S.role)


def tail_from_domination(d: DominationVector, counter: StepCounter | None = None) -> TailSignature:
    n = d.n
    row = list(d.d)
    tail = [Fraction(0)] * (n + 1)
    tail[n] = row[0]
    for k in range(1, n + 1):
        for j in range(n - k + 1):
            row[j] = Fraction(j + 1, n - j) * row[j + 1] + row[j]
        if counter is not None:
            counter.add(n - k + 1)
        tail[n - k] = row[0]
    return TailSignature(tuple(tail), d.role)


def domination_from_tail_closed(S: TailSignature) -> DominationVector:
    n = S.n
    d = [
        binomial(n, k) * sum((-1) ** (k - j) * binomial(k, j) * S.S[n - j] for j in range(k + 1))
        for k in range(n + 1)
    ]
    return DominationVector(tuple(d), S.role)


def tail_from_domination_closed(d: DominationVector) -> TailSignature:
    n = d.n
    tail = [sum(Fraction(binomial(n - k, j), binomial(n, j)) * d.d[j] for j in range(n - k + 1)) for k in range(n + 1)]
    return TailSignature(tuple(tail), d.role)


# ---------------------------------------------------------------------------
# s <-> d
# ---------------------------------------------------------------------------


def domination_from_signature(s: SignatureVector, counter: StepCounter | None = None) -> DominationVector:
    """d_k = C(n,k) times the (k-1)-th difference of s_{n-i} at i = 0; the table is seeded with n s_{n-j+1}."""
    n = s.n
    d = scaled_difference_diagonal([s[n - j] for j in range(n)], n, 2, counter)
    return DominationVector((Fraction(0), *d), s.role)


def signature_from_domination(d: DominationVector, counter: StepCounter | None = None) -> SignatureVector:
    n = d.n
    row = [d.d[j] / n for j in range(1, n + 1)]  # row[j-1] holds s_{j,k}
    s = [Fraction(0)] * n
    s[n - 1] = row[0]
    for k in range(2, n + 1):
        for j in range(1, n - k + 2):
            row[j - 1] = Fraction(j + 1, n - j) * row[j] + row[j - 1]
        if counter is not None:
            counter.add(n - k + 1)
        s[n - k] = row[0]
    return SignatureVector(tuple(s), d.role)


def domination_from_signature_closed(s: SignatureVector) -> DominationVector:
    n = s.n
    d = [Fraction(0)] + [
        binomial(n, k) * sum((-1) ** (k - 1 - j) * binomial(k - 1, j) * s[n - j] for j in range(k))
        for k in range(1, n + 1)
    ]
    return DominationVector(tuple(d), s.role)


def signature_from_domination_closed(d: DominationVector) -> SignatureVector:
    n = d.n
    s = [
        sum(Fraction(binomial(n - k, j - 1), binomial(n, j)) * d.d[j] for j in range(1, n - k + 2))
        for k in range(1, n + 1)
    ]
    return SignatureVector(tuple(s), d.role)


# ---------------------------------------------------------------------------
# phi
# ---------------------------------------------------------------------------


def phi_from_domination(d: DominationVector) -> PhiVector:
    n = d.n
    return PhiVector(
        tuple(sum(binomial(n - j, k - j) * d.d[j] for j in range(k + 1)) for k in range(n + 1)),
        d.role,
    )


def domination_from_phi(phi: PhiVector) -> DominationVector:
    n = phi.n
    return DominationVector(
        tuple(
            sum((-1) ** (k - j) * binomial(n - j, k - j) * phi.values[j] for j in range(k + 1)) for k in range(n + 1)
        ),
        phi.role,
    )


def tail_from_phi(phi: PhiVector, n: int | None = None) -> TailSignature:
    n = phi.n if n is None else n
    if n != phi.n:
        raise PreconditionError(f"path-count vector has n={phi.n}, asked for n={n}")
    return TailSignature(tuple(phi.values[n - k] / binomial(n, k) for k in range(n + 1)), phi.role)


def phi_from_tail(S: TailSignature) -> PhiVector:
    n = S.n
    return PhiVector(tuple(binomial(n, k) * S.S[n - k] for k in range(n + 1)), S.role)


# ---------------------------------------------------------------------------
# Generating functions
# ---------------------------------------------------------------------------


def signature_generating_function(s: SignatureVector) -> Polynomial:
    return Polynomial.of([0, *s.s])


def tail_generating_function(S: TailSignature) -> Polynomial:
    return Polynomial.of(S.S)


def check_generating_identity(s: SignatureVector, S: TailSignature) -> bool:
    """sum s_k x^k == 1 + (x - 1) sum S_k x^k, coefficient by coefficient."""
    lhs = signature_generating_function(s)
    rhs = 1 + Polynomial.of([-1, 1]) * tail_generating_function(S)
    bound = max(lhs.degree_bound, rhs.degree_bound)
    return all(lhs.coefficient(k) == rhs.coefficient(k) for k in range(bound + 1))
