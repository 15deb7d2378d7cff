"""Every fast route against the brute-force oracles, on every small structure."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from relsig.algebra.binomial import binomial
from relsig.conversions import dual, polynomial_route, signature
from relsig.conversions.vectors import DominationVector, Route
from relsig.dependent.quality import OrderDistribution
from relsig.oracle.brute_force import boland_signature, enumerate_semicoherent, permutation_signature
from relsig.structure.structure_function import StructureFunction, dual_structure, phi_vector
from relsig.structure.transforms import diagonal_section, mobius_transform


def _check_all_routes(phi: StructureFunction) -> None:
    n = phi.n
    expected = boland_signature(phi)
    h = diagonal_section(mobius_transform(phi))
    d = DominationVector(h.coefficients)

    assert signature.signature_from_domination(d) == expected
    assert signature.signature_from_domination_closed(d) == expected
    assert signature.signature_from_tail(signature.tail_from_phi(phi_vector(phi))) == expected
    assert polynomial_route.signature_from_polynomial(h, n) == expected
    gf = polynomial_route.signature_gf_via_integral(h, n)
    assert polynomial_route.signature_from_generating_function(gf, n) == expected
    assert polynomial_route.polynomial_from_signature(expected) == h
    assert polynomial_route.is_full_degree(expected) == (h.degree == n)

    dD = dual.dual_domination(d)
    assert dD.d == diagonal_section(mobius_transform(dual_structure(phi))).coefficients
    assert dual.signature_from_dual_domination(dD) == expected
    assert dual.pathcount_generating_function(h, n).coefficients == phi_vector(phi).values
    assert dual.pathcount_gf_via_dual(h, n).coefficients == phi_vector(phi).values

    dual_s = signature.signature_from_tail(signature.tail_from_phi(phi_vector(dual_structure(phi))))
    assert dual_s.s == tuple(reversed(expected.s))
    assert dual.dual_signature(expected).s == dual_s.s


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_every_structure_up_to_four_components(n: int) -> None:
    for phi in enumerate_semicoherent(n):
        _check_all_routes(phi)


def test_sample_of_five_component_structures() -> None:
    rng = random.Random(5)
    for phi in rng.sample(list(enumerate_semicoherent(5)), 200):
        _check_all_routes(phi)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_vector_invariants_hold_for_every_structure(n: int) -> None:
    for phi in enumerate_semicoherent(n):
        counts = phi_vector(phi)
        S = signature.tail_from_phi(counts)
        s = signature.signature_from_tail(S)
        assert s.is_nonnegative()
        assert S.is_nonincreasing()
        assert signature.domination_from_signature(s).is_integral()

        ratios = [Fraction(counts[k], binomial(n, k)) for k in range(n + 1)]
        assert ratios == sorted(ratios)

        gf = dual.pathcount_generating_function(diagonal_section(mobius_transform(phi)), n)
        assert all(0 <= c <= binomial(n, k) for k, c in enumerate(gf.coefficients))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_failure_order_oracle_agrees_with_subset_sums(n: int) -> None:
    uniform = OrderDistribution.uniform(n)
    for phi in enumerate_semicoherent(n):
        assert permutation_signature(phi, uniform).s == boland_signature(phi).s


def test_failure_order_oracle_on_sampled_six_component_systems() -> None:
    rng = random.Random(6)
    uniform = OrderDistribution.uniform(6)
    for _ in range(5):
        masks = rng.sample(range(1, 1 << 6), 3)
        bits = 0
        for mask in masks:
            bits |= 1 << mask
        phi = _upward_closure(6, bits)
        assert permutation_signature(phi, uniform).s == boland_signature(phi).s


def _upward_closure(n: int, bits: int) -> StructureFunction:
    for mask in range(1 << n):
        if bits >> mask & 1:
            for i in range(n):
                bits |= 1 << (mask | 1 << i)
    return StructureFunction(n, bits)


def test_table_and_closed_routes_agree_on_every_four_component_structure() -> None:
    for phi in enumerate_semicoherent(4):
        h = diagonal_section(mobius_transform(phi))
        S = polynomial_route.tail_from_polynomial(h, 4)
        assert polynomial_route.polynomial_from_tail(S, Route.TABLE) == h
        assert polynomial_route.polynomial_from_tail(S, Route.CLOSED) == h
