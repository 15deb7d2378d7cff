from __future__ import annotations

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

from pydantic import BaseModel, ConfigDict, Field, model_validator

from relsig.schemas.common import RationalStr


class Representation(StrEnum):
    SIGNATURE = "signature"
    TAIL = "tail"
    DOMINATION = "domination"
    POLYNOMIAL = "polynomial"
    PHI = "phi"
    DUAL_DOMINATION = "dual-domination"


class SystemDocument(BaseModel):
    """
    System definition: either the (not necessarily minimal) path sets or the
    full truth table. Exactly one of the two must be present.
    """

    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., ge=1, description="Number of components.", examples=[5])
    pathsets: list[list[int]] | None = Field(
        default=None,
        description="Path sets as lists of 1-based component indices.",
        examples=[[[1, 4], [2, 5], [1, 3, 5], [2, 3, 4]]],
    )
    table: str | None = Field(
        default=None,
        description="2^n characters of 0/1; character A is phi(A), bit i of A set iff component i+1 works.",
        examples=["0001"],
    )

    @model_validator(mode="after")
    def exactly_one_form(self) -> SystemDocument:
        if (self.pathsets is None) == (self.table is None):
            raise ValueError("exactly one of 'pathsets' or 'table' must be given")
        return self


class OrderEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    perm: list[int] = Field(
        ...,
        description="Components in failure order: position 1 fails first, the last position survives longest.",
        examples=[[1, 2, 3]],
    )
    prob: RationalStr = Field(..., description="Probability of this failure order.", examples=["1/2"])


class QualityDocument(BaseModel):
    """
    Relative quality function, given per subset or induced by a distribution of
    failure orders. Exactly one of `q` and `orders` must be present.
    """

    model_config = ConfigDict(extra="forbid")

    n: int = Field(..., ge=1, examples=[3])
    q: dict[str, RationalStr] | None = Field(
        default=None,
        description='Map from a comma-separated component list ("" for the empty set) to q(A).',
        examples=[{"1,2": "1/3", "1,3": "1/3", "2,3": "1/3"}],
    )
    orders: list[OrderEntry] | None = Field(default=None, description="Distribution over failure orders.")

    @model_validator(mode="after")
    def exactly_one_form(self) -> QualityDocument:
        if (self.q is None) == (self.orders is None):
            raise ValueError("exactly one of 'q' or 'orders' must be given")
        return self


class VectorDocument(BaseModel):
    """A single representation of a system, e.g. its signature or its reliability polynomial."""

    model_config = ConfigDict(extra="forbid")

    representation: Representation | None = Field(
        default=None,
        description="Which vector this is. Optional on input when the command names it.",
        examples=["signature"],
    )
    n: int = Field(..., ge=1, examples=[5])
    values: list[RationalStr] = Field(
        ...,
        description="Exact coordinates. Polynomials list ascending coefficients up to the degree bound.",
        examples=[["0", "1/5", "3/5", "1/5", "0"]],
    )
