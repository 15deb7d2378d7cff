from __future__ import annotations

import logging
from dataclasses import dataclass

from relsig.conversions.vectors import PhiVector
from relsig.core.errors import (
    BottomNotZeroError,
    InvalidSystemError,
    NonMonotoneError,
    ResourceCapError,
    TopNotOneError,
)
from relsig.structure.masks import clear_bit_pattern, components_of, full_mask, mask_of

logger = logging.getLogger(__name__)

# 2^26 table bits is 8 MB; the vector conversions never touch the table and have no such cap.
MAX_TABLE_COMPONENTS = 26


@dataclass(frozen=True)
class PathSetSpec:
    n: int
    path_sets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidSystemError(f"a system needs at least one component, got n={self.n}")
        if not self.path_sets:
            raise InvalidSystemError("at least one path set is required")
        for index, path_set in enumerate(self.path_sets):
            if not path_set:
                raise InvalidSystemError(f"path set #{index + 1} is empty", path_set=index + 1)
            for component in path_set:
                if not 1 <= component <= self.n:
                    raise InvalidSystemError(
                        f"component index {component} out of range 1..{self.n}",
                        path_set=index + 1,
                        component=component,
                    )

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(mask_of(p) for p in self.path_sets)


@dataclass(frozen=True)
class StructureFunction:
    """
    Truth table of a structure function on n components, packed into an int:
    bit A of `bits` is phi(A), where A is a subset mask.
    """

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidSystemError(f"a system needs at least one component, got n={self.n}")
        if self.n > MAX_TABLE_COMPONENTS:
            raise ResourceCapError("truth table", self.n, MAX_TABLE_COMPONENTS)
        if not 0 <= self.bits < 1 << self.size:
            raise InvalidSystemError(f"truth table has bits outside the {self.size} subsets of {self.n} components")

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def full(self) -> int:
        return full_mask(self.n)

    def __call__(self, mask: int) -> int:
        return self.bits >> mask & 1

    def values(self) -> list[int]:
        """phi(A) for every mask A = 0 .. 2^n - 1."""
        return [1 if ch == "1" else 0 for ch in self.table_string()]

    def table_string(self) -> str:
        return format(self.bits, f"0{self.size}b")[::-1]

    @classmethod
    def from_values(cls, n: int, values: list[int]) -> StructureFunction:
        if len(values) != 1 << n:
            raise InvalidSystemError(f"expected {1 << n} table entries for n={n}, got {len(values)}")
        bits = 0
        for mask, value in enumerate(values):
            if value not in (0, 1):
                raise InvalidSystemError(f"table entry at mask {mask} must be 0 or 1, got {value}")
            bits |= value << mask
        return cls(n, bits)

    @classmethod
    def from_table_string(cls, n: int, table: str) -> StructureFunction:
        if len(table) != 1 << n:
            raise InvalidSystemError(f"table must have {1 << n} characters for n={n}, got {len(table)}")
        if set(table) - {"0", "1"}:
            raise InvalidSystemError("table may only contain the characters 0 and 1")
        return cls(n, int(table[::-1], 2))

    def path_set_count(self) -> int:
        return self.bits.bit_count()


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def structure_from_pathsets(spec: PathSetSpec) -> StructureFunction:
    """phi(A) = 1 iff A contains a listed path set; computed as an upward closure over the bitset."""
    if spec.n > MAX_TABLE_COMPONENTS:
        raise ResourceCapError("truth table", spec.n, MAX_TABLE_COMPONENTS)
    bits = 0
    for mask in spec.masks:
        bits |= 1 << mask
    for i in range(spec.n):
        bits |= (bits & clear_bit_pattern(spec.n, i)) << (1 << i)
    logger.debug("n=%d path_sets=%d -> %d path sets in the table", spec.n, len(spec.path_sets), bits.bit_count())
    return StructureFunction(spec.n, bits)


def validate_semicoherent(phi: StructureFunction) -> None:
    if phi(0):
        raise BottomNotZeroError()
    if not phi(phi.full):
        raise TopNotOneError()
    witness: tuple[int, int] | None = None
    for i in range(phi.n):
        violations = phi.bits & clear_bit_pattern(phi.n, i) & ~(phi.bits >> (1 << i))
        if violations:
            lowest = (violations & -violations).bit_length() - 1
            if witness is None or lowest < witness[0]:
                witness = (lowest, i)
    if witness is not None:
        mask, i = witness
        raise NonMonotoneError(components_of(mask), i + 1)


def is_semicoherent(phi: StructureFunction) -> bool:
    try:
        validate_semicoherent(phi)
    except (BottomNotZeroError, TopNotOneError, NonMonotoneError):
        return False
    return True


def dual_structure(phi: StructureFunction) -> StructureFunction:
    """phi^D(A) = 1 - phi(C \\ A)."""
    flipped = "".join("0" if ch == "1" else "1" for ch in reversed(phi.table_string()))
    return StructureFunction.from_table_string(phi.n, flipped)


def phi_vector(phi: StructureFunction) -> PhiVector:
    """Number of path sets of each size k = 0..n."""
    counts = [0] * (phi.n + 1)
    for mask, ch in enumerate(phi.table_string()):
        if ch == "1":
            counts[mask.bit_count()] += 1
    return PhiVector(tuple(counts))


def minimal_path_sets(phi: StructureFunction) -> list[tuple[int, ...]]:
    """Path sets none of whose one-smaller subsets is a path set (exact for monotone phi)."""
    covered = 0
    for i in range(phi.n):
        covered |= (phi.bits & clear_bit_pattern(phi.n, i)) << (1 << i)
    minimal = phi.bits & ~covered
    found = []
    while minimal:
        lowest = minimal & -minimal
        found.append(components_of(lowest.bit_length() - 1))
        minimal ^= lowest
    return sorted(found, key=lambda c: (len(c), c))
