"""Fibonacci sequence under the 1,1-start indexing, plus the Cassini residual.

Throughout this package the sequence starts F(0) = 1, F(1) = 1, so
F(2) = 2, F(3) = 3, F(4) = 5, ...  Note the value 1 occurs at the two
indices 0 and 1; index-recovery helpers break the tie toward 0.
"""
from __future__ import annotations

import threading

MAX_INDEX = 1_000_000

# Indices memoized in full; larger indices are computed by iteration from the
# cache tail without being stored (keeps worst-case memory ~10 MB).
_CACHE_LIMIT = 10_000

_cache: list[int] = [1, 1]
_cache_lock = threading.Lock()


def fib(i: int) -> int:
    """Return F(i) exactly (F(0) = F(1) = 1, F(n) = F(n-2) + F(n-1)).

    Supports 0 <= i <= MAX_INDEX; anything else raises ValueError.
    """
    if not isinstance(i, int) or isinstance(i, bool):
        raise ValueError(f"index must be an integer, got {i!r}")
    if i < 0:
        raise ValueError(f"index must be >= 0, got {i}")
    if i > MAX_INDEX:
        raise ValueError(f"index {i} exceeds the supported range (max {MAX_INDEX})")

    cache = _cache
    if i < len(cache):
        return cache[i]

    with _cache_lock:
        while len(_cache) <= min(i, _CACHE_LIMIT):
            _cache.append(_cache[-1] + _cache[-2])
        a, b = _cache[-2], _cache[-1]
        top = len(_cache) - 1
    if i <= top:
        return _cache[i]
    # beyond the memo limit: plain iteration, nothing stored
    for _ in range(i - top):
        a, b = b, a + b
    return b


def fib_index_of(n: int) -> int | None:
    """Smallest i with fib(i) == n, or None if n is not in the sequence.

    n = 1 returns 0 (the smaller of its two valid indices).  Requires n >= 1.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        return 0
    a, b, i = 1, 1, 1
    while b < n:
        a, b = b, a + b
        i += 1
    return i if b == n else None


# Immutable snapshot of consecutive pairs {(F(i), F(i+1))}; grown on demand and
# swapped atomically so readers never need the lock.
_pairs: frozenset[tuple[int, int]] = frozenset({(1, 1), (1, 2)})
_pairs_top: int = 1  # largest first component covered
_pairs_lock = threading.Lock()


def _grow_pairs(limit: int) -> frozenset[tuple[int, int]]:
    global _pairs, _pairs_top
    with _pairs_lock:
        if _pairs_top >= limit:
            return _pairs
        pairs = set(_pairs)
        a, b = 1, 1
        while a <= limit:
            pairs.add((a, b))
            a, b = b, a + b
        _pairs = frozenset(pairs)
        _pairs_top = limit
        return _pairs


def is_consecutive_fib(x: int, y: int) -> bool:
    """True iff x = F(i) and y = F(i+1) for some i; (1,1) and (1,2) both qualify."""
    if x < 1 or y < 1:
        raise ValueError(f"arguments must be >= 1, got ({x}, {y})")
    # _pairs_top is published after _pairs, so reading it first guarantees the
    # snapshot read next covers x whenever the bound check passes.
    if x > _pairs_top:
        return (x, y) in _grow_pairs(x)
    return (x, y) in _pairs


def cassini_residual(i: int) -> int:
    """F(i)*F(i+2) - F(i+1)^2, computed exactly; equals (-1)**i."""
    return fib(i) * fib(i + 2) - fib(i + 1) ** 2
