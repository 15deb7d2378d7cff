from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from relsig.algebra.binomial import pascal_row
from relsig.algebra.polynomial import Polynomial, poly_shift_plus_one
from relsig.core.errors import PreconditionError


@dataclass(frozen=True)
class BiPolynomial:
    """Polynomial in t whose coefficients are polynomials in x: coefficients_in_t[k] multiplies t^k."""

    coefficients_in_t: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if not self.coefficients_in_t:
            raise ValueError("a bivariate polynomial needs at least one t-coefficient")

    @property
    def degree_bound_t(self) -> int:
        return len(self.coefficients_in_t) - 1

    @property
    def degree_t(self) -> int:
        for k in range(self.degree_bound_t, -1, -1):
            if self.coefficients_in_t[k].degree >= 0:
                return k
        return -1

    def coefficient_t(self, k: int) -> Polynomial:
        if 0 <= k <= self.degree_bound_t:
            return self.coefficients_in_t[k]
        return Polynomial.zero()


def bipoly_reflect_in_t(f: BiPolynomial, n: int) -> BiPolynomial:
    if n < 0 or f.degree_t > n:
        raise PreconditionError(f"cannot take the {n}-reflection in t of a t-degree {f.degree_t} polynomial")
    return BiPolynomial(tuple(f.coefficient_t(n - k) for k in range(n + 1)))


def bipoly_integrate_t_unit(f: BiPolynomial) -> Polynomial:
    """Integral over t in [0, 1], using t^k -> 1/(k+1) exactly."""
    bound = max(c.degree_bound for c in f.coefficients_in_t)
    result = Polynomial.zero(bound)
    for k, coefficient in enumerate(f.coefficients_in_t):
        result = result + coefficient * Fraction(1, k + 1)
    return result


def bipoly_multiply_x(f: BiPolynomial) -> BiPolynomial:
    return BiPolynomial(tuple(Polynomial((Fraction(0), *c.coefficients)) for c in f.coefficients_in_t))


def bipoly_from_affine_substitution(p: Polynomial) -> BiPolynomial:
    """
    p((t-1)x + 1) as a polynomial in t and x.

    With r(y) = p(y + 1) = sum r_k y^k, the substitution is sum r_k (t-1)^k x^k;
    the t-degree and the x-degree are both bounded by p.degree_bound.
    """
    shifted = poly_shift_plus_one(p)
    d = p.degree_bound
    grid = [[Fraction(0)] * (d + 1) for _ in range(d + 1)]  # grid[t_power][x_power]
    for k, r_k in enumerate(shifted.coefficients):
        if not r_k:
            continue
        for j, c in enumerate(pascal_row(k)):
            sign = -1 if (k - j) % 2 else 1
            grid[j][k] += sign * c * r_k
    return BiPolynomial(tuple(Polynomial(tuple(row)) for row in grid))
