"""Periodic continued fraction expansion of sqrt(d) and its convergents.

Everything here is exact integer arithmetic; no floating point is used
anywhere, so results are correct for arbitrarily large d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError, PerfectSquareError


def integer_sqrt(n: int) -> tuple[int, bool]:
    """Floor square root of a nonnegative integer, plus exactness flag.

    Newton iteration on integers, started from a power-of-two upper bound;
    the iterate decreases strictly until it lands on floor(sqrt(n)).
    Returns (root, is_exact) with root**2 <= n < (root+1)**2.
    """
    if n < 0:
        raise DomainError(f"integer_sqrt requires n >= 0, got {n}")
    if n == 0:
        return 0, True
    x = 1 << ((n.bit_length() + 1) // 2)  # x >= sqrt(n)
    while True:
        y = (x + n // x) // 2
        if y >= x:
            break
        x = y
    return x, x * x == n


@dataclass(frozen=True)
class SurdState:
    """State (p + sqrt(d)) / q of the expansion tail; q divides d - p*p."""

    p: int
    q: int
    d: int


@dataclass(frozen=True)
class CFExpansion:
    """sqrt(d) = [e; period repeated], with period[-1] == 2*e."""

    d: int
    e: int
    period: tuple[int, ...]

    @property
    def j(self) -> int:
        """Period length."""
        return len(self.period)

    def quotient(self, i: int) -> int:
        """Partial quotient a_i of the unrolled expansion (a_0 = e)."""
        if i < 0:
            raise DomainError(f"quotient index must be >= 0, got {i}")
        if i == 0:
            return self.e
        return self.period[(i - 1) % self.j]


@dataclass(frozen=True)
class Convergent:
    """Truncation num/den of the expansion; index -2 and -1 are the seeds."""

    num: int
    den: int
    index: int


def surd_steps(d: int) -> Iterator[tuple[int, SurdState]]:
    """Yield (a_n, state of alpha_n) for n = 0, 1, 2, ... indefinitely.

    alpha_0 = sqrt(d) has state (0, 1); alpha_{n+1} = 1/(alpha_n - a_n).
    """
    e = _check_nonsquare(d)
    p, q = 0, 1
    while True:
        a = (p + e) // q
        yield a, SurdState(p, q, d)
        p = a * q - p
        q = (d - p * p) // q


def expand_sqrt(d: int) -> CFExpansion:
    """Expand sqrt(d) into its periodic continued fraction.

    The period is detected by the first recurrence of the (p, q) state
    after the initial step; the classical fact that the last quotient of
    the period equals 2*e then holds as a consequence and is asserted.

    Raises PerfectSquareError if d is a perfect square, DomainError if d < 2.
    """
    e = _check_nonsquare(d)
    quotients = []
    p, q = e, d - e * e  # state of alpha_1, the start of the periodic part
    first = (p, q)
    while True:
        a = (p + e) // q
        quotients.append(a)
        p = a * q - p
        q = (d - p * p) // q
        if (p, q) == first:
            break
    assert quotients[-1] == 2 * e
    return CFExpansion(d=d, e=e, period=tuple(quotients))


def convergents(cf: CFExpansion, n: int) -> list[Convergent]:
    """Convergents of the expansion for indices -2, -1, 0, ..., n.

    num and den follow the same two-term recurrence
    v_i = a_i * v_{i-1} + v_{i-2}, seeded so that num_0 = e and den_0 = 1.
    """
    if n < 0:
        raise DomainError(f"convergents requires n >= 0, got {n}")
    out = [Convergent(0, 1, -2), Convergent(1, 0, -1)]
    num2, num1 = 0, 1
    den2, den1 = 1, 0
    for i in range(n + 1):
        a = cf.quotient(i)
        num2, num1 = num1, a * num1 + num2
        den2, den1 = den1, a * den1 + den2
        out.append(Convergent(num1, den1, i))
    return out


def _check_nonsquare(d: int) -> int:
    """Return e = floor(sqrt(d)) after rejecting d < 2 and perfect squares."""
    if d < 2:
        raise DomainError(f"d must be >= 2, got {d}")
    e, exact = integer_sqrt(d)
    if exact:
        raise PerfectSquareError(d, e)
    return e
