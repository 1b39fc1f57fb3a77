"""Fundamental solutions of X^2 - d*Y^2 = +-1 and the group they generate."""

from __future__ import annotations

from dataclasses import dataclass

from .cf import convergents, expand_sqrt
from .errors import DomainError


@dataclass(frozen=True)
class PellSolution:
    """Positive integers with x^2 - d*y^2 == sign, sign in {+1, -1}."""

    x: int
    y: int
    sign: int
    d: int

    def verify(self) -> bool:
        return self.x * self.x - self.d * self.y * self.y == self.sign


@dataclass(frozen=True)
class QuadraticSurdNumber:
    """a + b*sqrt(d), multiplied exactly in integer arithmetic."""

    a: int
    b: int
    d: int

    def __mul__(self, other: "QuadraticSurdNumber") -> "QuadraticSurdNumber":
        if self.d != other.d:
            raise DomainError("cannot multiply surds over different d")
        return QuadraticSurdNumber(
            a=self.a * other.a + self.b * other.b * self.d,
            b=self.a * other.b + self.b * other.a,
            d=self.d,
        )

    def pow(self, n: int) -> "QuadraticSurdNumber":
        if n < 1:
            raise DomainError(f"exponent must be >= 1, got {n}")
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            base = base * base
            n >>= 1
        return result


def solve_fundamental(d: int) -> PellSolution:
    """Smallest positive solution of X^2 - d*Y^2 = (-1)^j, j the period of sqrt(d).

    This is the overall smallest positive solution of either sign: it is
    read off the convergent at index j-1.
    """
    cf = expand_sqrt(d)
    last = convergents(cf, cf.j - 1)[-1]
    return PellSolution(x=last.num, y=last.den, sign=(-1) ** cf.j, d=d)


def solve_pell_plus(d: int) -> PellSolution:
    """Smallest positive solution of X^2 - d*Y^2 = +1.

    Equals the fundamental when the period is even; otherwise the square
    of the fundamental.
    """
    fund = solve_fundamental(d)
    if fund.sign == 1:
        return fund
    return power_solution(fund, 2)


def solve_pell_minus(d: int) -> PellSolution | None:
    """Smallest positive solution of X^2 - d*Y^2 = -1, or None.

    Solvable exactly when the period of sqrt(d) is odd; None means there
    is no solution at all, not merely none found.
    """
    fund = solve_fundamental(d)
    return fund if fund.sign == -1 else None


def power_solution(fund: PellSolution, n: int) -> PellSolution:
    """The solution (x_n, y_n) with x_n + y_n*sqrt(d) = (x + y*sqrt(d))^n.

    Its sign is fund.sign^n. Every positive solution arises this way from
    the fundamental one; negative/conjugate units are mirror images and
    are not enumerated.
    """
    surd = QuadraticSurdNumber(fund.x, fund.y, fund.d).pow(n)
    return PellSolution(x=surd.a, y=surd.b, sign=fund.sign ** n, d=fund.d)


def is_solution(d: int, x: int, y: int) -> int | None:
    """+1 or -1 if x^2 - d*y^2 is that value, else None."""
    if x < 0 or y < 0:
        raise DomainError("x and y must be nonnegative")
    v = x * x - d * y * y
    return v if v in (1, -1) else None
