from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str.__str__(self)

        def __format__(self, format_spec: str) -> str:
            return str.__format__(str(self), format_spec)

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):
            return name.lower()
from fractions import Fraction

from relsig.algebra.binomial import binomial
from relsig.algebra.rational import Scalar, to_fraction
from relsig.core.errors import PreconditionError, RoleMismatchError


class Role(StrEnum):
    """Which system a vector describes: the structure itself, its dual, or the dependent-case q-structure."""

    STRUCTURE = "structure"
    DUAL = "dual"
    PROBABILITY = "probability"


class Route(StrEnum):
    """Alternative formulas for the same conversion."""

    CLOSED = "closed"
    TABLE = "table"
    REFLECT = "reflect"
    INTEGRAL = "integral"


def dual_role(role: Role) -> Role:
    if role is Role.STRUCTURE:
        return Role.DUAL
    if role is Role.DUAL:
        return Role.STRUCTURE
    raise RoleMismatchError("duality is only defined for structural vectors", got=str(role))


def _fractions(values: Sequence[Scalar]) -> tuple[Fraction, ...]:
    return tuple(to_fraction(v) for v in values)


@dataclass(frozen=True)
class SignatureVector:
    """s_1..s_n stored 0-based: s[k-1] is s_k."""

    s: tuple[Fraction, ...]
    role: Role = Role.STRUCTURE

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", _fractions(self.s))
        if not self.s:
            raise PreconditionError("a signature needs at least one coordinate")
        if sum(self.s) != 1:
            raise PreconditionError(f"signature coordinates must sum to 1, got {sum(self.s)}")

    @property
    def n(self) -> int:
        return len(self.s)

    def __getitem__(self, k: int) -> Fraction:
        """1-based access s_k."""
        return self.s[k - 1]

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.s)


@dataclass(frozen=True)
class TailSignature:
    """S_0..S_n."""

    S: tuple[Fraction, ...]
    role: Role = Role.STRUCTURE

    def __post_init__(self) -> None:
        object.__setattr__(self, "S", _fractions(self.S))
        if len(self.S) < 2:
            raise PreconditionError("a tail signature needs at least two coordinates")
        if self.S[0] != 1 or self.S[-1] != 0:
            raise PreconditionError(f"tail signature must start at 1 and end at 0, got {self.S[0]} .. {self.S[-1]}")

    @property
    def n(self) -> int:
        return len(self.S) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.S[k]

    def is_nonincreasing(self) -> bool:
        return all(a >= b for a, b in zip(self.S, self.S[1:]))


@dataclass(frozen=True)
class DominationVector:
    """d_0..d_n: the coefficients of the diagonal reliability polynomial."""

    d: tuple[Fraction, ...]
    role: Role = Role.STRUCTURE

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", _fractions(self.d))
        if len(self.d) < 2:
            raise PreconditionError("a domination vector needs at least two coordinates")
        if self.d[0] != 0:
            raise PreconditionError(f"d_0 must be 0, got {self.d[0]}")
        if sum(self.d) != 1:
            raise PreconditionError(f"domination coordinates must sum to 1, got {sum(self.d)}")

    @property
    def n(self) -> int:
        return len(self.d) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.d[k]

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.d)


@dataclass(frozen=True)
class PhiVector:
    """phi_0..phi_n: number of path sets of each size (rational when derived from an arbitrary d)."""

    values: tuple[Fraction, ...]
    role: Role = Role.STRUCTURE

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _fractions(self.values))
        if len(self.values) < 2:
            raise PreconditionError("a path-count vector needs at least two coordinates")
        if self.values[0] != 0:
            raise PreconditionError(f"phi_0 must be 0, got {self.values[0]}")
        if self.values[-1] != 1:
            raise PreconditionError(f"phi_n must be 1, got {self.values[-1]}")

    @property
    def n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def is_structural(self) -> bool:
        """Integer counts within 0..C(n,k) whose proportions phi_k / C(n,k) never decrease."""
        n = self.n
        if any(v.denominator != 1 or not 0 <= v <= binomial(n, k) for k, v in enumerate(self.values)):
            return False
        ratios = [v / binomial(n, k) for k, v in enumerate(self.values)]
        return all(a <= b for a, b in zip(ratios, ratios[1:]))


def require_role(role: Role, expected: Role, what: str) -> None:
    if role != expected:
        raise RoleMismatchError(
            f"{what} expects a {expected} vector, got {role}", expected=str(expected), got=str(role)
        )
