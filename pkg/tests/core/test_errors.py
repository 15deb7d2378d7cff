from __future__ import annotations

import pytest

from relsig.core.errors import (
    BottomNotZeroError,
    DocumentError,
    DocumentSyntaxError,
    NonMonotoneError,
    PreconditionError,
    RelsigError,
    ResourceCapError,
    RoleMismatchError,
    VerificationMismatchError,
)


@pytest.mark.parametrize(
    "exc, code",
    [
        (VerificationMismatchError("mismatch"), 1),
        (DocumentError("unreadable"), 2),
        (DocumentSyntaxError("Expecting value", 1, 5), 2),
        (PreconditionError("sum"), 3),
        (RoleMismatchError("role"), 3),
        (BottomNotZeroError(), 3),
        (ResourceCapError("oracle", 20, 12), 4),
    ],
)
def test_exit_codes(exc: RelsigError, code: int):
    assert exc.exit_code == code


def test_details_are_kept():
    exc = NonMonotoneError((1, 3), 2)
    assert exc.details == {"subset": [1, 3], "component": 2}
    assert "adding component 2" in exc.message


def test_precondition_errors_are_value_errors():
    with pytest.raises(ValueError):
        raise PreconditionError("d_0 must be 0")
