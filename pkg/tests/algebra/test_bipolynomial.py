from __future__ import annotations

from fractions import Fraction

import pytest

from relsig.algebra.bipolynomial import (
    BiPolynomial,
    bipoly_from_affine_substitution,
    bipoly_integrate_t_unit,
    bipoly_multiply_x,
    bipoly_reflect_in_t,
)
from relsig.algebra.polynomial import Polynomial
from relsig.core.errors import PreconditionError


def test_affine_substitution_of_x() -> None:
    # (t - 1) x + 1 = (1 - x) + t x
    surface = bipoly_from_affine_substitution(Polynomial.of([0, 1]))
    assert surface.coefficient_t(0) == Polynomial.of([1, -1])
    assert surface.coefficient_t(1) == Polynomial.of([0, 1])


def test_affine_substitution_at_t_equal_one_gives_constant() -> None:
    p = Polynomial.of([3, -1, 2])
    surface = bipoly_from_affine_substitution(p)
    total = Polynomial.zero(2)
    for coefficient in surface.coefficients_in_t:
        total = total + coefficient
    assert total == Polynomial.of([p(1), 0, 0])


def test_integrate_over_unit_interval() -> None:
    surface = bipoly_from_affine_substitution(Polynomial.of([0, 1]))
    assert bipoly_integrate_t_unit(surface) == Polynomial.of([1, Fraction(-1, 2)])


def test_reflect_in_t() -> None:
    surface = BiPolynomial((Polynomial.of([1]), Polynomial.of([2])))
    reflected = bipoly_reflect_in_t(surface, 2)
    assert reflected.coefficients_in_t == (Polynomial.zero(), Polynomial.of([2]), Polynomial.of([1]))
    with pytest.raises(PreconditionError):
        bipoly_reflect_in_t(surface, 0)


def test_multiply_x_raises_every_x_power() -> None:
    surface = BiPolynomial((Polynomial.of([1, 1]),))
    assert bipoly_multiply_x(surface).coefficient_t(0) == Polynomial.of([0, 1, 1])
    assert bipoly_multiply_x(surface).degree_t == 0
