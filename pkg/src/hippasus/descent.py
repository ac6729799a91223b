"""Hippasus pairs and the subtractive-descent decision procedure.

A positive integer beta is a *Hippasus number* when some alpha >= beta makes
the residual beta*(beta + alpha) - alpha**2 equal to +1 or -1; that alpha is
a *Hippasus successor* of beta.  The Hippasus numbers are exactly the
Fibonacci numbers, and this module makes the equivalence executable in both
directions:

* ``successors`` finds the witnesses.  Every beta >= 2 has at most one
  successor, and it lies strictly inside the window (beta, 2*beta); beta = 1
  is the one ambiguous case, with successors {1, 2}.
* ``descend`` runs the subtractive descent (beta, alpha) -> (alpha - beta,
  beta).  Each step keeps the residual at magnitude 1 while flipping its
  sign, and the first components decrease strictly, so the walk is forced
  down to the terminal pattern (2, 1, 1).  Counting the steps recovers the
  Fibonacci index of the starting value.
* ``verify_no_exact_solution`` is the bounded sanity check that the residual
  is never exactly 0 -- the integer shadow of the incommensurability of a
  regular pentagon's side and diagonal.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

import numpy as np

from .fibonacci import fib


class NotHippasusError(ValueError):
    """Raised when a unique successor is requested for a non-Hippasus number."""


def hippasus_residual(beta: int, alpha: int) -> int:
    """beta*(beta + alpha) - alpha**2, exact."""
    if beta < 1 or alpha < 1:
        raise ValueError(f"arguments must be >= 1, got ({beta}, {alpha})")
    return beta * (beta + alpha) - alpha * alpha


def is_hippasus_pair(beta: int, alpha: int) -> bool:
    """True iff alpha >= beta and the residual is +1 or -1."""
    if beta < 1:
        raise ValueError(f"beta must be >= 1, got {beta}")
    if alpha < beta:
        return False
    return beta * (beta + alpha) - alpha * alpha in (1, -1)


@dataclass(frozen=True)
class HippasusPair:
    """A certified (beta, alpha, sign) triple with residual exactly `sign`."""

    beta: int
    alpha: int
    sign: int

    def __post_init__(self) -> None:
        if self.beta < 1:
            raise ValueError(f"beta must be >= 1, got {self.beta}")
        if self.alpha < self.beta:
            raise ValueError(f"alpha must be >= beta, got ({self.beta}, {self.alpha})")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        residual = self.beta * (self.beta + self.alpha) - self.alpha * self.alpha
        if residual != self.sign:
            raise ValueError(
                f"residual of ({self.beta}, {self.alpha}) is {residual}, not {self.sign}"
            )
        if self.beta > 1 and not (self.beta < self.alpha < 2 * self.beta):
            raise ValueError(
                f"alpha must lie strictly between beta and 2*beta, got ({self.beta}, {self.alpha})"
            )

    @classmethod
    def from_beta_alpha(cls, beta: int, alpha: int) -> "HippasusPair":
        """Build a pair from its two members, deriving the sign from the residual."""
        residual = hippasus_residual(beta, alpha)
        if residual not in (1, -1):
            raise NotHippasusError(
                f"({beta}, {alpha}) has residual {residual}; not a Hippasus pair"
            )
        return cls(beta, alpha, residual)


@dataclass(frozen=True)
class SuccessorSet:
    """All Hippasus successors of ``beta``, in ascending order (at most two)."""

    beta: int
    successors: tuple[int, ...]

    def __bool__(self) -> bool:
        return bool(self.successors)


@dataclass(frozen=True)
class DescentTrace:
    """The strictly decreasing walk produced by ``descend``.

    ``steps`` holds (beta_1, beta_2, ..., beta_{i+1}) with
    steps[k+2] = steps[k] - steps[k+1]; every trace of length >= 3 ends in
    (2, 1, 1), and fib(recovered_index) == steps[0].
    """

    steps: tuple[int, ...]
    recovered_index: int

    def __post_init__(self) -> None:
        steps = self.steps
        if not steps:
            raise ValueError("trace must be non-empty")
        for k in range(len(steps) - 2):
            if steps[k + 2] != steps[k] - steps[k + 1]:
                raise ValueError(f"triple rule broken at position {k}: {steps[k:k+3]}")
        if len(steps) >= 2 and not (steps[-1] == steps[-2] == 1):
            raise ValueError(f"trace must end in two 1s, got {steps[-2:]}")
        if len(steps) >= 3 and steps[-3] != 2:
            raise ValueError(f"trace must end in (2, 1, 1), got {steps[-3:]}")
        if self.recovered_index != len(steps) - 1:
            raise ValueError(
                f"recovered_index {self.recovered_index} != len(steps) - 1 = {len(steps) - 1}"
            )
        if fib(self.recovered_index) != steps[0]:
            raise ValueError(
                f"fib({self.recovered_index}) != starting value {steps[0]}"
            )


def _successors_by_scan(beta: int) -> tuple[int, ...]:
    # Reference implementation: test every alpha the window bounds allow.
    # For beta = 1 only alpha in {1, 2} can work (1*(1+n) - n^2 <= -5 for n > 2);
    # for beta >= 2 the window is the closed interval [beta+1, 2*beta-1].
    if beta == 1:
        candidates = (1, 2)
    else:
        candidates = range(beta + 1, 2 * beta)
    return tuple(
        alpha
        for alpha in candidates
        if beta * (beta + alpha) - alpha * alpha in (1, -1)
    )


def _successors_closed_form(beta: int) -> tuple[int, ...]:
    # alpha solves alpha^2 - beta*alpha - beta^2 = -/+1, so
    # alpha = (beta + sqrt(5*beta^2 -/+ 4)) / 2 -- integral iff the
    # discriminant is a perfect square of parity matching beta.
    # Differentially tested against _successors_by_scan.
    b5 = 5 * beta * beta
    found = []
    for disc in (b5 - 4, b5 + 4):
        root = isqrt(disc)
        if root * root == disc and (beta + root) % 2 == 0:
            alpha = (beta + root) // 2
            if alpha >= beta and beta * (beta + alpha) - alpha * alpha in (1, -1):
                found.append(alpha)
    return tuple(sorted(set(found)))


def successors(beta: int) -> SuccessorSet:
    """All alpha in the search window with residual +1 or -1.

    The result is empty exactly when beta is not a Hippasus number; beta = 1
    yields {1, 2}, every other Hippasus beta yields a single successor.
    """
    if beta < 1:
        raise ValueError(f"beta must be >= 1, got {beta}")
    if beta == 1:
        # only 1 and 2 can work: 1*(1+n) - n^2 <= -5 for every n > 2
        return SuccessorSet(1, tuple(a for a in (1, 2) if 1 * (1 + a) - a * a in (1, -1)))
    return SuccessorSet(beta, _successors_closed_form(beta))


def unique_successor(beta: int) -> int:
    """The single successor of a Hippasus number beta >= 2.

    Raises NotHippasusError when beta has no successor, ValueError for
    beta = 1 (ambiguous: two successors) or beta < 1.
    """
    if beta < 2:
        raise ValueError(f"beta must be >= 2, got {beta}")
    found = successors(beta).successors
    if not found:
        raise NotHippasusError(f"{beta} is not a Hippasus number")
    return found[0]


def predecessor(pair: HippasusPair) -> HippasusPair:
    """Step down: (beta, alpha) -> (alpha - beta, beta), flipping the sign.

    Requires alpha > beta; the (1, 1) pair has no predecessor.
    """
    if pair.alpha <= pair.beta:
        raise ValueError(f"pair ({pair.beta}, {pair.alpha}) has no predecessor")
    return HippasusPair(pair.alpha - pair.beta, pair.beta, -pair.sign)


def extend(pair: HippasusPair) -> HippasusPair:
    """Step up: (beta, alpha) -> (alpha, alpha + beta), flipping the sign."""
    return HippasusPair(pair.alpha, pair.alpha + pair.beta, -pair.sign)


def descend(beta: int) -> DescentTrace | None:
    """Decide membership by subtractive descent; None means not Hippasus.

    From the successor alpha of beta, iterate (b, a) -> (a - b, b) recording
    the first components.  The recorded values decrease strictly until the
    walk closes with two equal entries, which are forced to be 1, so every
    trace of length >= 3 ends in (2, 1, 1).  The trace length recovers the
    Fibonacci index: a trace (beta_1, ..., beta_{L}) gives beta_1 = fib(L-1),
    which DescentTrace re-asserts against the sequence itself.

    beta = 1 returns the degenerate single-entry trace with index 0.
    """
    if beta < 1:
        raise ValueError(f"beta must be >= 1, got {beta}")
    if beta == 1:
        return DescentTrace((1,), 0)
    found = successors(beta).successors
    if not found:
        return None
    a, b = beta, found[0]
    steps = [a]
    while a != b:
        a, b = b - a, a
        steps.append(a)
    return DescentTrace(tuple(steps), len(steps) - 1)


def is_fibonacci_by_descent(beta: int) -> bool:
    """True iff the descent procedure accepts beta."""
    return descend(beta) is not None


# numpy chunks keep the exhaustive scan fast; int64 is exact while
# beta*(beta+alpha) <= 2**62, far above any practical bound here.
_INT64_SAFE_BETA = isqrt(2**62 // 3)


def find_exact_solution(max_beta: int) -> tuple[int, int] | None:
    """Smallest (beta, alpha) with beta <= max_beta, beta <= alpha <= 2*beta
    and beta*(beta+alpha) == alpha**2, or None when no such pair exists."""
    if max_beta < 1:
        raise ValueError(f"max_beta must be >= 1, got {max_beta}")
    for beta in range(1, min(max_beta, _INT64_SAFE_BETA) + 1):
        alpha = np.arange(beta, 2 * beta + 1, dtype=np.int64)
        hits = np.nonzero(beta * (beta + alpha) == alpha * alpha)[0]
        if hits.size:
            return beta, int(alpha[hits[0]])
    for beta in range(_INT64_SAFE_BETA + 1, max_beta + 1):
        for alpha in range(beta, 2 * beta + 1):
            if beta * (beta + alpha) == alpha * alpha:
                return beta, alpha
    return None


def verify_no_exact_solution(max_beta: int) -> bool:
    """Check beta*(beta+alpha) != alpha**2 for every beta <= max_beta and
    alpha in [beta, 2*beta].  A bounded consequence check, not a proof."""
    return find_exact_solution(max_beta) is None
