from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TypeVar

from relsig.algebra.polynomial import Polynomial
from relsig.algebra.rational import Scalar
from relsig.core.errors import NonBooleanSetFunctionError
from relsig.structure.masks import format_subset
from relsig.structure.structure_function import StructureFunction

logger = logging.getLogger(__name__)

T = TypeVar("T", int, Fraction)


@dataclass(frozen=True)
class MultilinearForm:
    """Sparse coefficients d(A) of sum_A d(A) prod_{i in A} x_i; absent masks are 0."""

    n: int
    coeffs: dict[int, Scalar] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", {m: c for m, c in self.coeffs.items() if c})

    def __getitem__(self, mask: int) -> Scalar:
        return self.coeffs.get(mask, 0)

    def dense(self) -> list[Scalar]:
        values: list[Scalar] = [0] * (1 << self.n)
        for mask, c in self.coeffs.items():
            values[mask] = c
        return values

    def total(self) -> Scalar:
        return sum(self.coeffs.values())

    @classmethod
    def from_dense(cls, n: int, values: Sequence[Scalar]) -> MultilinearForm:
        return cls(n, {m: c for m, c in enumerate(values) if c})


@dataclass(frozen=True)
class SetFunction:
    """Dense set function A -> value over all 2^n masks."""

    n: int
    values: tuple[Scalar, ...]

    def __getitem__(self, mask: int) -> Scalar:
        return self.values[mask]

    def non_boolean_masks(self) -> list[int]:
        return [m for m, v in enumerate(self.values) if v not in (0, 1)]

    @property
    def is_boolean(self) -> bool:
        return not self.non_boolean_masks()

    def to_structure(self) -> StructureFunction:
        offending = self.non_boolean_masks()
        if offending:
            raise NonBooleanSetFunctionError(
                f"set function takes value {self.values[offending[0]]} at {format_subset(offending[0])}",
                masks=offending[:16],
            )
        return StructureFunction.from_values(self.n, [int(v) for v in self.values])


# ---------------------------------------------------------------------------
# Fast subset transforms, O(n 2^n)
# ---------------------------------------------------------------------------


def subset_mobius(values: Sequence[T]) -> list[T]:
    """f(A) -> sum_{B subset A} (-1)^{|A|-|B|} f(B), in place over a copy."""
    f = list(values)
    size = len(f)
    step = 1
    while step < size:
        for base in range(0, size, step << 1):
            for mask in range(base + step, base + (step << 1)):
                f[mask] -= f[mask - step]
        step <<= 1
    return f


def subset_zeta(values: Sequence[T]) -> list[T]:
    """f(A) -> sum_{B subset A} f(B)."""
    f = list(values)
    size = len(f)
    step = 1
    while step < size:
        for base in range(0, size, step << 1):
            for mask in range(base + step, base + (step << 1)):
                f[mask] += f[mask - step]
        step <<= 1
    return f


def mobius_transform(phi: StructureFunction) -> MultilinearForm:
    return MultilinearForm.from_dense(phi.n, subset_mobius(phi.values()))


def zeta_transform(form: MultilinearForm) -> SetFunction:
    """
    Inverse of mobius_transform. Non-Boolean outputs are legitimate for
    q-structures, so they are reported through SetFunction.is_boolean and a
    warning rather than an exception.
    """
    result = SetFunction(form.n, tuple(subset_zeta(form.dense())))
    if not result.is_boolean:
        logger.warning("zeta transform produced %d non-Boolean values (n=%d)", len(result.non_boolean_masks()), form.n)
    return result


def diagonal_section(form: MultilinearForm) -> Polynomial:
    """h(x, ..., x): coefficient of x^k is the sum of d(A) over |A| = k. Degree bound n."""
    coeffs = [Fraction(0)] * (form.n + 1)
    for mask, c in form.coeffs.items():
        coeffs[mask.bit_count()] += c
    return Polynomial(tuple(coeffs))
