"""Subset <-> bitmask helpers. Bit i is set iff component i+1 is in the subset."""

from __future__ import annotations

from collections.abc import Iterable


def mask_of(components: Iterable[int]) -> int:
    mask = 0
    for c in components:
        mask |= 1 << (c - 1)
    return mask


def components_of(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def clear_bit_pattern(n: int, i: int) -> int:
    """Bitset over all 2^n masks selecting the masks where bit i is clear."""
    block = (1 << (1 << i)) - 1
    period = 1 << (i + 1)
    size = 1 << n
    return block * (((1 << size) - 1) // ((1 << period) - 1))


def format_subset(mask: int) -> str:
    return "{" + ",".join(str(c) for c in components_of(mask)) + "}"
