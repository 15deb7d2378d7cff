from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=512)
def pascal_row(n: int) -> tuple[int, ...]:
    """Row n of Pascal's triangle, built by the exact recurrence C(n,k+1) = C(n,k)(n-k)/(k+1)."""
    if n < 0:
        raise ValueError(f"pascal_row needs n >= 0, got {n}")
    row = [1]
    for k in range(n):
        row.append(row[-1] * (n - k) // (k + 1))
    return tuple(row)


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return pascal_row(n)[k]
