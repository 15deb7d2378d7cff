from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from relsig.schemas.common import RationalStr


class AnalysisReport(BaseModel):
    """Every representation of one structure. Polynomials list ascending coefficients up to degree n."""

    model_config = ConfigDict(extra="forbid")

    n: int
    minimal_pathsets: list[list[int]]
    signature: list[RationalStr]
    tail: list[RationalStr]
    domination: list[RationalStr]
    phi: list[RationalStr]
    polynomial: list[RationalStr]
    dual_domination: list[RationalStr]
    full_degree: bool
    pathcount_gf: list[RationalStr]
    at: RationalStr | None = None
    reliability: RationalStr | None = Field(default=None, description="h(at) when --at is given.")


class DependentReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    psi_levels: list[RationalStr] = Field(..., description="psi_k: sum of psi(A) over |A| = k.")
    tail: list[RationalStr] = Field(..., description="P_0..P_n.")
    p: list[RationalStr]
    g: list[RationalStr] = Field(
        ..., description="Coefficients of g(x, ..., x): c_k, the sum of the Moebius coefficients c(A) over |A| = k."
    )
    binomial_gf: list[RationalStr] = Field(..., description="sum C(n,k) p_k x^k.")


class VerificationCheck(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: str
    passed: bool
    detail: str | None = None


class VerificationReport(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int
    source: str = Field(..., description="'system' or the representation of a vector document.")
    passed: bool
    checks: list[VerificationCheck]
    counterexample: dict[str, list[str]] | None = Field(
        default=None,
        description="Both sides of the first failing check.",
    )
