"""
Relative quality q(A): the probability that the |A| components that survive
longest are exactly those in A. Lifetimes are assumed to have no ties.

A failure order lists components in the order they fail, so the survivors
after k failures are the last n - k positions of the order.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from relsig.algebra.binomial import binomial
from relsig.algebra.rational import Scalar, to_fraction
from relsig.core.config import get_settings
from relsig.core.errors import (
    DimensionMismatchError,
    InvalidSystemError,
    PreconditionError,
    QualityLevelSumError,
    ResourceCapError,
)
from relsig.schemas.documents import QualityDocument
from relsig.structure.masks import format_subset, full_mask, mask_of
from relsig.structure.parser import load_json, validate_document
from relsig.structure.structure_function import MAX_TABLE_COMPONENTS
from relsig.structure.transforms import SetFunction

logger = logging.getLogger(__name__)

Order = tuple[int, ...]


@dataclass(frozen=True)
class OrderDistribution:
    """
    Probability distribution over failure orders. With `implicit_uniform` set,
    `entries` is empty and every one of the n! orders has probability 1/n!.
    """

    n: int
    entries: tuple[tuple[Order, Fraction], ...] = ()
    implicit_uniform: bool = False

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidSystemError(f"an order distribution needs at least one component, got n={self.n}")
        if self.n > MAX_TABLE_COMPONENTS:
            raise ResourceCapError("an order distribution", self.n, MAX_TABLE_COMPONENTS)
        if self.implicit_uniform:
            if self.entries:
                raise PreconditionError("a uniform order distribution takes no explicit entries")
            return
        if not self.entries:
            raise PreconditionError("an order distribution needs at least one order")
        seen: set[Order] = set()
        expected = tuple(range(1, self.n + 1))
        for perm, prob in self.entries:
            if tuple(sorted(perm)) != expected:
                raise InvalidSystemError(f"{list(perm)} is not a permutation of 1..{self.n}", perm=list(perm))
            if perm in seen:
                raise InvalidSystemError(f"failure order {list(perm)} listed twice", perm=list(perm))
            seen.add(perm)
            if prob < 0:
                raise PreconditionError(f"failure order {list(perm)} has negative probability {prob}")
        total = sum(prob for _, prob in self.entries)
        if total != 1:
            raise PreconditionError(f"failure order probabilities must sum to 1, got {total}")

    @classmethod
    def of(cls, n: int, entries: Sequence[tuple[Sequence[int], Scalar]]) -> OrderDistribution:
        return cls(n, tuple((tuple(perm), to_fraction(prob)) for perm, prob in entries))

    @classmethod
    def uniform(cls, n: int) -> OrderDistribution:
        return cls(n, implicit_uniform=True)

    def orders(self) -> Iterator[tuple[Order, Fraction]]:
        if not self.implicit_uniform:
            yield from self.entries
            return
        cap = get_settings().permutation_max_components
        if self.n > cap:
            raise ResourceCapError("enumerating all failure orders", self.n, cap)
        weight = Fraction(1, math.factorial(self.n))
        for perm in permutations(range(1, self.n + 1)):
            yield perm, weight


@dataclass(frozen=True)
class RelativeQuality:
    """q indexed by subset mask; every level {A : |A| = k} sums to 1."""

    n: int
    q: tuple[Fraction, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.n > MAX_TABLE_COMPONENTS:
            raise ResourceCapError("a relative quality function", self.n, MAX_TABLE_COMPONENTS)
        object.__setattr__(self, "q", tuple(to_fraction(v) for v in self.q))
        if len(self.q) != 1 << self.n:
            raise PreconditionError(f"expected {1 << self.n} quality values for n={self.n}, got {len(self.q)}")
        for mask, value in enumerate(self.q):
            if value < 0:
                raise PreconditionError(f"q{format_subset(mask)} = {value} is negative", subset=format_subset(mask))
        for k, total in enumerate(self.level_sums()):
            if total != 1:
                raise QualityLevelSumError(
                    f"quality values over subsets of size {k} sum to {total}, expected 1",
                    level=k,
                    total=str(total),
                )

    def __getitem__(self, mask: int) -> Fraction:
        return self.q[mask]

    def level_sums(self) -> list[Fraction]:
        sums = [Fraction(0)] * (self.n + 1)
        for mask, value in enumerate(self.q):
            sums[mask.bit_count()] += value
        return sums

    @classmethod
    def exchangeable(cls, n: int) -> RelativeQuality:
        """q(A) = 1/C(n,|A|), the value for i.i.d. or exchangeable lifetimes."""
        return cls(n, tuple(Fraction(1, binomial(n, mask.bit_count())) for mask in range(1 << n)))

    @classmethod
    def from_subsets(cls, n: int, values: Mapping[tuple[int, ...], Scalar]) -> RelativeQuality:
        """Subsets not listed get 0, except the empty and the full set, whose level sums force 1."""
        if n > MAX_TABLE_COMPONENTS:
            raise ResourceCapError("a relative quality function", n, MAX_TABLE_COMPONENTS)
        dense: list[Fraction | None] = [None] * (1 << n)
        for components, value in values.items():
            for c in components:
                if not 1 <= c <= n:
                    raise InvalidSystemError(f"component index {c} out of range 1..{n}", component=c)
            mask = mask_of(components)
            if dense[mask] is not None:
                raise InvalidSystemError(f"subset {format_subset(mask)} given twice")
            dense[mask] = to_fraction(value)
        for forced in (0, full_mask(n)):
            if dense[forced] is None:
                dense[forced] = Fraction(1)
        return cls(n, tuple(Fraction(0) if v is None else v for v in dense))


def quality_from_order_distribution(dist: OrderDistribution) -> RelativeQuality:
    n = dist.n
    q = [Fraction(0)] * (1 << n)
    orders = 0
    for perm, prob in dist.orders():
        survivors = 0
        q[0] += prob
        for component in reversed(perm):
            survivors |= 1 << (component - 1)
            q[survivors] += prob
        orders += 1
    logger.debug("quality from %d failure orders n=%d", orders, n)
    return RelativeQuality(n, tuple(q))


def normalized_quality(q: RelativeQuality) -> SetFunction:
    """q~(A) = C(n,|A|) q(A); identically 1 for exchangeable lifetimes."""
    return SetFunction(q.n, tuple(binomial(q.n, mask.bit_count()) * v for mask, v in enumerate(q.q)))


# ---------------------------------------------------------------------------
# Documents
# ---------------------------------------------------------------------------


def _parse_subset_key(key: str) -> tuple[int, ...]:
    key = key.strip()
    if not key:
        return ()
    try:
        components = tuple(int(part) for part in key.split(","))
    except ValueError as exc:
        raise InvalidSystemError(f"subset key {key!r} is not a comma-separated list of component indices") from exc
    if len(set(components)) != len(components):
        raise InvalidSystemError(f"subset key {key!r} repeats a component", key=key)
    return tuple(sorted(components))


def _subset_values(raw: Mapping[str, Fraction]) -> dict[tuple[int, ...], Fraction]:
    values: dict[tuple[int, ...], Fraction] = {}
    keys: dict[tuple[int, ...], str] = {}
    for key, value in raw.items():
        components = _parse_subset_key(key)
        if components in values:
            raise InvalidSystemError(
                f"subset keys {keys[components]!r} and {key!r} name the same subset", keys=[keys[components], key]
            )
        values[components], keys[components] = value, key
    return values


def quality_from_document(document: QualityDocument, n: int | None = None) -> RelativeQuality:
    """Densify a quality document. With `n` given, the document must describe that many components."""
    if n is not None and document.n != n:
        raise DimensionMismatchError(
            f"structure has n={n} but quality function has n={document.n}", phi_n=n, q_n=document.n
        )
    if document.n > MAX_TABLE_COMPONENTS:
        raise ResourceCapError("a relative quality function", document.n, MAX_TABLE_COMPONENTS)
    if document.q is not None:
        return RelativeQuality.from_subsets(document.n, _subset_values(document.q))
    dist = OrderDistribution.of(document.n, [(entry.perm, entry.prob) for entry in document.orders or []])
    return quality_from_order_distribution(dist)


def load_quality(text: str, n: int | None = None) -> RelativeQuality:
    return quality_from_document(validate_document(QualityDocument, load_json(text)), n)
