"""
Slow, formula-literal reference implementations for cross-checking.

Nothing here calls the fast conversion code: subsets are walked with
itertools, binomials come from math.comb, and structures are enumerated from
scratch. Sizes are capped through Settings.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from fractions import Fraction
from itertools import combinations

from relsig.conversions.vectors import Role, SignatureVector
from relsig.core.config import get_settings
from relsig.core.errors import BottomNotZeroError, DimensionMismatchError, ResourceCapError, TopNotOneError
from relsig.dependent.quality import OrderDistribution
from relsig.structure.structure_function import StructureFunction

logger = logging.getLogger(__name__)


def _mask(components: tuple[int, ...]) -> int:
    return sum(1 << (c - 1) for c in components)


def _weighted_level(phi: StructureFunction, size: int) -> Fraction:
    """sum over |A| = size of phi(A) / C(n, size)."""
    if not 0 <= size <= phi.n:
        return Fraction(0)
    hits = sum(phi(_mask(a)) for a in combinations(range(1, phi.n + 1), size))
    return Fraction(hits, math.comb(phi.n, size))


def boland_signature(phi: StructureFunction) -> SignatureVector:
    cap = get_settings().oracle_max_components
    if phi.n > cap:
        raise ResourceCapError("the subset-sum signature oracle", phi.n, cap)
    n = phi.n
    s = [_weighted_level(phi, n - k + 1) - _weighted_level(phi, n - k) for k in range(1, n + 1)]
    return SignatureVector(tuple(s))


def permutation_signature(phi: StructureFunction, dist: OrderDistribution) -> SignatureVector:
    """p_k = probability that the system fails exactly at the k-th component failure."""
    if phi.n != dist.n:
        raise DimensionMismatchError(f"structure has n={phi.n} but the order distribution has n={dist.n}")
    if not phi(phi.full):
        raise TopNotOneError()
    if phi(0):
        raise BottomNotZeroError()
    cap = get_settings().permutation_max_components
    if dist.implicit_uniform and phi.n > cap:
        raise ResourceCapError("the failure-order oracle", phi.n, cap)
    n = phi.n
    p = [Fraction(0)] * n
    for perm, prob in dist.orders():
        alive = phi.full
        for step, component in enumerate(perm, start=1):
            alive &= ~(1 << (component - 1))
            if not phi(alive):
                p[step - 1] += prob
                break
    return SignatureVector(tuple(p), Role.PROBABILITY)


def _monotone_tables(n: int) -> list[int]:
    """Every monotone Boolean function on n variables as a 2^n-bit truth table."""
    if n == 0:
        return [0, 1]
    half = 1 << (n - 1)
    lower = _monotone_tables(n - 1)
    return [a | b << half for a in lower for b in lower if a & ~b == 0]


def enumerate_semicoherent(n: int) -> Iterator[StructureFunction]:
    cap = get_settings().enumeration_max_components
    if n > cap:
        raise ResourceCapError("enumerating semicoherent structures", n, cap)
    top = 1 << ((1 << n) - 1)
    count = 0
    for bits in _monotone_tables(n):
        if bits & 1 == 0 and bits & top:
            count += 1
            yield StructureFunction(n, bits)
    logger.debug("enumerated %d semicoherent structures n=%d", count, n)
