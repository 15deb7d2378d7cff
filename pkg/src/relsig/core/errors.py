from __future__ import annotations


class RelsigError(Exception):
    """Base error. `exit_code` is what the CLI exits with; `details` ends up in the stderr JSON."""

    exit_code = 1

    def __init__(self, message: str, **details: object) -> None:
        super().__init__(message)
        self.message = message
        self.details = details


class VerificationMismatchError(RelsigError):
    exit_code = 1


# ---------------------------------------------------------------------------
# Parse errors (exit 2)
# ---------------------------------------------------------------------------


class DocumentError(RelsigError):
    exit_code = 2


class DocumentSyntaxError(DocumentError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{message} at line {line} column {column}", line=line, column=column)
        self.line = line
        self.column = column


# ---------------------------------------------------------------------------
# Validation errors (exit 3)
# ---------------------------------------------------------------------------


class ValidationFailure(RelsigError):
    exit_code = 3


class InvalidSystemError(ValidationFailure):
    pass


class PreconditionError(ValidationFailure, ValueError):
    pass


class RoleMismatchError(PreconditionError):
    pass


class DimensionMismatchError(ValidationFailure):
    pass


class QualityLevelSumError(ValidationFailure):
    pass


class NonBooleanSetFunctionError(ValidationFailure):
    pass


class NotSemicoherentError(ValidationFailure):
    pass


class BottomNotZeroError(NotSemicoherentError):
    def __init__(self) -> None:
        super().__init__("structure function is 1 on the empty set")


class TopNotOneError(NotSemicoherentError):
    def __init__(self) -> None:
        super().__init__("structure function is 0 on the full component set")


class NonMonotoneError(NotSemicoherentError):
    def __init__(self, subset: tuple[int, ...], component: int) -> None:
        super().__init__(
            f"structure function is not monotone: phi({list(subset)}) = 1 but adding component {component} gives 0",
            subset=list(subset),
            component=component,
        )
        self.subset = subset
        self.component = component


# ---------------------------------------------------------------------------
# Resource caps (exit 4)
# ---------------------------------------------------------------------------


class ResourceCapError(RelsigError):
    exit_code = 4

    def __init__(self, what: str, n: int, cap: int) -> None:
        super().__init__(f"{what} supports at most {cap} components, got {n}", n=n, cap=cap)
