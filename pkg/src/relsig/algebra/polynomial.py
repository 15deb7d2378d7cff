from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from relsig.algebra.binomial import binomial, pascal_row
from relsig.algebra.rational import Scalar, to_fraction
from relsig.core.errors import PreconditionError


@dataclass(frozen=True)
class Polynomial:
    """
    Dense univariate polynomial with exact rational coefficients.

    `coefficients[k]` is the coefficient of x^k. The tuple length fixes the
    degree bound, which may exceed the effective degree: reflections depend on
    the ambient degree, so trailing zeros are meaningful and equality compares
    them too.
    """

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("a polynomial needs at least one coefficient")
        object.__setattr__(self, "coefficients", tuple(to_fraction(c) for c in self.coefficients))

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def of(cls, coefficients: Iterable[Scalar], degree_bound: int | None = None) -> Polynomial:
        coeffs = [to_fraction(c) for c in coefficients] or [Fraction(0)]
        if degree_bound is not None:
            poly = cls(tuple(coeffs))
            return poly.padded(degree_bound)
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, degree_bound: int = 0) -> Polynomial:
        return cls((Fraction(0),) * (degree_bound + 1))

    @classmethod
    def constant(cls, value: Scalar, degree_bound: int = 0) -> Polynomial:
        return cls.of([value], degree_bound)

    @classmethod
    def monomial(cls, power: int, value: Scalar = 1) -> Polynomial:
        return cls.of([0] * power + [value])

    # ------------------------------------------------------------------
    # Shape
    # ------------------------------------------------------------------

    @property
    def degree_bound(self) -> int:
        return len(self.coefficients) - 1

    @property
    def degree(self) -> int:
        """Effective degree; -1 for the zero polynomial."""
        for k in range(self.degree_bound, -1, -1):
            if self.coefficients[k]:
                return k
        return -1

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k <= self.degree_bound:
            return self.coefficients[k]
        return Fraction(0)

    def padded(self, degree_bound: int) -> Polynomial:
        """Same polynomial with the given degree bound (never drops a nonzero coefficient)."""
        if degree_bound < max(self.degree, 0):
            raise PreconditionError(f"degree {self.degree} exceeds the requested bound {degree_bound}")
        return Polynomial(tuple(self.coefficient(k) for k in range(degree_bound + 1)))

    def trimmed(self) -> Polynomial:
        return self.padded(max(self.degree, 0))

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other: Polynomial | Scalar) -> Polynomial:
        other = _as_polynomial(other)
        bound = max(self.degree_bound, other.degree_bound)
        return Polynomial(tuple(self.coefficient(k) + other.coefficient(k) for k in range(bound + 1)))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: Polynomial | Scalar) -> Polynomial:
        return self + (-_as_polynomial(other))

    def __rsub__(self, other: Scalar) -> Polynomial:
        return _as_polynomial(other) - self

    def __mul__(self, other: Polynomial | Scalar) -> Polynomial:
        if not isinstance(other, Polynomial):
            factor = to_fraction(other)
            return Polynomial(tuple(c * factor for c in self.coefficients))
        result = [Fraction(0)] * (self.degree_bound + other.degree_bound + 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                if b:
                    result[i + j] += a * b
        return Polynomial(tuple(result))

    __rmul__ = __mul__

    def __call__(self, x: Scalar) -> Fraction:
        return poly_eval(self, to_fraction(x))


def _as_polynomial(value: Polynomial | Scalar) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


X = Polynomial.of([0, 1])
ONE = Polynomial.constant(1)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def poly_derivative(p: Polynomial) -> Polynomial:
    if p.degree_bound == 0:
        return Polynomial.zero()
    return Polynomial(tuple(k * p.coefficients[k] for k in range(1, p.degree_bound + 1)))


def poly_antiderivative_from_zero(p: Polynomial) -> Polynomial:
    return Polynomial((Fraction(0), *(c / (k + 1) for k, c in enumerate(p.coefficients))))


def poly_reflect(p: Polynomial, n: int) -> Polynomial:
    """n-reflection: swaps the coefficients of x^k and x^(n-k), i.e. x^n p(1/x)."""
    if n < 0 or p.degree > n:
        raise PreconditionError(f"cannot take the {n}-reflection of a polynomial of degree {p.degree}")
    return Polynomial(tuple(p.coefficient(n - k) for k in range(n + 1)))


def poly_taylor_shift(p: Polynomial, c: Scalar) -> Polynomial:
    """p(x + c) by repeated synthetic division; degree bound is preserved."""
    c = to_fraction(c)
    coeffs = list(p.coefficients)
    d = p.degree_bound
    for i in range(d):
        for j in range(d - 1, i - 1, -1):
            coeffs[j] += c * coeffs[j + 1]
    return Polynomial(tuple(coeffs))


def poly_shift_plus_one(p: Polynomial) -> Polynomial:
    return poly_taylor_shift(p, 1)


def poly_compose_one_minus(p: Polynomial) -> Polynomial:
    """p(1 - x)."""
    negated = Polynomial(tuple(c if k % 2 == 0 else -c for k, c in enumerate(p.coefficients)))
    return poly_taylor_shift(negated, -1)


def poly_eval(p: Polynomial, x: Fraction) -> Fraction:
    result = Fraction(0)
    for c in reversed(p.coefficients):
        result = result * x + c
    return result


def beta_integral(n: int, k: int) -> Fraction:
    """Integral of t^(n-k) (1-t)^k over [0, 1]."""
    if not 0 <= k <= n:
        raise PreconditionError(f"beta_integral needs 0 <= k <= n, got n={n}, k={k}")
    return Fraction(1, (n + 1) * binomial(n, k))


def bernstein_term(n: int, k: int) -> Polynomial:
    """x^k (1-x)^(n-k) expanded in the power basis, degree bound n."""
    coeffs = [Fraction(0)] * (n + 1)
    for i, c in enumerate(pascal_row(n - k)):
        coeffs[k + i] = Fraction(-c if i % 2 else c)
    return Polynomial(tuple(coeffs))


def regularized_beta(a: int, b: int) -> Polynomial:
    """I_x(a, b) for positive integers: the binomial tail sum of degree a+b-1."""
    if a < 1 or b < 1:
        raise PreconditionError(f"regularized_beta needs positive integer arguments, got ({a}, {b})")
    m = a + b - 1
    result = Polynomial.zero(m)
    for i in range(a, m + 1):
        result = result + bernstein_term(m, i) * binomial(m, i)
    return result


def power_of_one_plus_x(n: int) -> Polynomial:
    return Polynomial.of(pascal_row(n))
