from __future__ import annotations

import random
import time
from fractions import Fraction as F

import pytest

from relsig.conversions.signature import (
    StepCounter,
    check_generating_identity,
    domination_from_phi,
    domination_from_signature,
    domination_from_signature_closed,
    domination_from_tail,
    domination_from_tail_closed,
    phi_from_domination,
    phi_from_tail,
    scaled_difference_diagonal,
    signature_from_domination,
    signature_from_domination_closed,
    signature_from_tail,
    signature_generating_function,
    tail_from_domination,
    tail_from_domination_closed,
    tail_from_phi,
    tail_from_signature,
)
from relsig.conversions.vectors import DominationVector, PhiVector, Role, SignatureVector, TailSignature
from relsig.core.errors import PreconditionError
from tests.conversions.generators import random_tail

BRIDGE_S = SignatureVector((0, F(1, 5), F(3, 5), F(1, 5), 0))
BRIDGE_TAIL = TailSignature((1, 1, F(4, 5), F(1, 5), 0, 0))
BRIDGE_D = DominationVector((0, 0, 2, 2, -5, 2))
BRIDGE_PHI = PhiVector((0, 0, 2, 8, 5, 1))

# ---------------------------------------------------------------------------
# Vector invariants
# ---------------------------------------------------------------------------


def test_signature_must_sum_to_one() -> None:
    with pytest.raises(PreconditionError, match="sum to 1"):
        SignatureVector((F(1, 2), F(1, 3)))


def test_tail_endpoints() -> None:
    with pytest.raises(PreconditionError):
        TailSignature((1, F(1, 2), F(1, 4)))
    with pytest.raises(PreconditionError):
        TailSignature((F(1, 2), 0))


def test_domination_invariants() -> None:
    with pytest.raises(PreconditionError, match="d_0"):
        DominationVector((1, 0, 0))
    with pytest.raises(PreconditionError):
        DominationVector((0, 1, 1))


def test_signature_is_one_based() -> None:
    assert BRIDGE_S[3] == F(3, 5)
    assert BRIDGE_S.n == 5


# ---------------------------------------------------------------------------
# s <-> S
# ---------------------------------------------------------------------------


def test_tail_from_signature_bridge() -> None:
    assert tail_from_signature(BRIDGE_S) == BRIDGE_TAIL
    assert signature_from_tail(BRIDGE_TAIL) == BRIDGE_S


def test_generating_identity() -> None:
    assert check_generating_identity(BRIDGE_S, BRIDGE_TAIL)
    shifted = SignatureVector((F(1, 5), 0, F(3, 5), F(1, 5), 0))
    assert not check_generating_identity(shifted, BRIDGE_TAIL)


def test_signature_generating_function_has_zero_constant() -> None:
    assert signature_generating_function(BRIDGE_S).coefficients == (0, 0, F(1, 5), F(3, 5), F(1, 5), 0)


# ---------------------------------------------------------------------------
# S <-> d
# ---------------------------------------------------------------------------


def test_domination_from_tail_bridge() -> None:
    assert domination_from_tail(BRIDGE_TAIL) == BRIDGE_D
    assert domination_from_tail_closed(BRIDGE_TAIL) == BRIDGE_D


def test_tail_from_domination_bridge() -> None:
    assert tail_from_domination(BRIDGE_D) == BRIDGE_TAIL
    assert tail_from_domination_closed(BRIDGE_D) == BRIDGE_TAIL


@pytest.mark.parametrize(
    "tail, domination",
    [
        ((1, 0, 0), (0, 0, 1)),
        ((1, 1, 0), (0, 2, -1)),
        ((1, 0), (0, 1)),
    ],
)
def test_small_systems_tail_domination(tail: tuple, domination: tuple) -> None:
    assert domination_from_tail(TailSignature(tail)) == DominationVector(domination)
    assert tail_from_domination(DominationVector(domination)) == TailSignature(tail)


# ---------------------------------------------------------------------------
# s <-> d
# ---------------------------------------------------------------------------


def test_domination_from_signature_bridge() -> None:
    assert domination_from_signature(BRIDGE_S) == BRIDGE_D
    assert domination_from_signature_closed(BRIDGE_S) == BRIDGE_D


def test_signature_from_domination_bridge() -> None:
    assert signature_from_domination(BRIDGE_D) == BRIDGE_S
    assert signature_from_domination_closed(BRIDGE_D) == BRIDGE_S


def test_two_out_of_three() -> None:
    s = SignatureVector((0, 1, 0))
    assert domination_from_signature(s) == DominationVector((0, 0, 3, -2))
    assert signature_from_domination(DominationVector((0, 0, 3, -2))) == s


def test_single_component() -> None:
    s = SignatureVector((1,))
    assert domination_from_signature(s) == DominationVector((0, 1))
    assert signature_from_domination(DominationVector((0, 1))) == s


def test_roles_are_carried_through() -> None:
    p = SignatureVector((F(1, 3), F(2, 3), 0), Role.PROBABILITY)
    assert domination_from_signature(p).role is Role.PROBABILITY
    assert tail_from_signature(p).role is Role.PROBABILITY


# ---------------------------------------------------------------------------
# phi
# ---------------------------------------------------------------------------


def test_phi_conversions_bridge() -> None:
    assert phi_from_domination(BRIDGE_D) == BRIDGE_PHI
    assert domination_from_phi(BRIDGE_PHI) == BRIDGE_D
    assert tail_from_phi(BRIDGE_PHI) == BRIDGE_TAIL
    assert phi_from_tail(BRIDGE_TAIL) == BRIDGE_PHI


def test_tail_from_phi_rejects_mismatched_n() -> None:
    with pytest.raises(PreconditionError):
        tail_from_phi(BRIDGE_PHI, 4)


def test_phi_structural_check() -> None:
    assert BRIDGE_PHI.is_structural()
    assert PhiVector((0, 2, 1)).is_structural()
    assert not PhiVector((0, 3, 0, 1)).is_structural()
    assert not PhiVector((0, 3, 1)).is_structural()


# ---------------------------------------------------------------------------
# Step counts and the integer kernel
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 5, 17, 40, 1000])
def test_step_counts_are_quadratic(n: int) -> None:
    s = SignatureVector((0,) * (n - 1) + (1,))
    tail = tail_from_signature(s)

    counter = StepCounter()
    d = domination_from_tail(tail, counter)
    assert counter.steps == n * (n + 1) // 2

    counter = StepCounter()
    tail_from_domination(d, counter)
    assert counter.steps == n * (n + 1) // 2

    counter = StepCounter()
    domination_from_signature(s, counter)
    assert counter.steps == n * (n - 1) // 2

    counter = StepCounter()
    signature_from_domination(d, counter)
    assert counter.steps == n * (n - 1) // 2


def test_random_rational_conversion_at_n_500_is_fast() -> None:
    S = random_tail(random.Random(500), 500)
    started = time.perf_counter()
    d = domination_from_tail(S)
    s = signature_from_domination(d)
    elapsed = time.perf_counter() - started
    assert tail_from_signature(s) == S
    assert elapsed < 5


def test_scaled_kernel_matches_rational_differences() -> None:
    values = [F(1, 3), F(-2, 7), F(5, 6), F(0)]
    n = 3
    diagonal = scaled_difference_diagonal(values, n, 1)
    # C(n,k) times the k-th forward difference at 0
    row = list(values)
    expected = [row[0]]
    for k in range(1, len(values)):
        row = [row[j + 1] - row[j] for j in range(len(row) - 1)]
        expected.append([1, 3, 3, 1][k] * row[0])
    assert diagonal == expected


def test_large_n_stays_exact() -> None:
    n = 200
    s = SignatureVector(tuple(F(1, n) for _ in range(n)))
    d = domination_from_signature(s)
    assert sum(d.d) == 1
    assert signature_from_domination(d) == s
