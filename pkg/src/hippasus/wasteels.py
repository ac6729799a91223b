"""Wasteels criterion: x, y > 0 with y**2 - x*y - x**2 = +/-1 are consecutive
Fibonacci numbers.  The residual here is the exact negation of the Hippasus
residual, so the two modules decide the same set from opposite directions."""
from __future__ import annotations

from dataclasses import dataclass

from .fibonacci import fib, fib_index_of, is_consecutive_fib


def wasteels_residual(x: int, y: int) -> int:
    """y**2 - x*y - x**2, exact."""
    if x < 1 or y < 1:
        raise ValueError(f"arguments must be >= 1, got ({x}, {y})")
    return y * y - x * y - x * x


@dataclass(frozen=True)
class WasteelsVerdict:
    """Outcome of the consecutive-Fibonacci test for an ordered pair (x, y).

    ``indices`` is the pair (i, i+1) with fib(i) = x and fib(i+1) = y,
    present exactly when ``consecutive`` is true.
    """

    x: int
    y: int
    residual: int
    consecutive: bool
    indices: tuple[int, int] | None


def classify(x: int, y: int) -> WasteelsVerdict:
    """Decide whether (x, y) are consecutive Fibonacci numbers, in that order.

    Consecutive means x <= y and the residual is +1 or -1.  The duplicated
    value 1 maps (1, 1) -> indices (0, 1) and (1, 2) -> indices (1, 2).
    """
    if x < 1 or y < 1:
        raise ValueError(f"arguments must be >= 1, got ({x}, {y})")
    residual = y * y - x * y - x * x
    if x > y or (residual != 1 and residual != -1):
        return WasteelsVerdict(x, y, residual, False, None)
    if x == 1:
        indices = (0, 1) if y == 1 else (1, 2)
    else:
        i = fib_index_of(x)
        assert i is not None and fib(i + 1) == y, (x, y)
        indices = (i, i + 1)
    return WasteelsVerdict(x, y, residual, True, indices)


__all__ = ["wasteels_residual", "classify", "WasteelsVerdict", "is_consecutive_fib"]
