"""The two-term sequence f_{-2}=1, f_{-1}=0, f_n = k*f_{n-1} + f_{n-2}.

These are the continuants of (k, k, ..., k); k=1 gives the Fibonacci
numbers, k=2 the Pell numbers. The closed family formulas in family.py
are built entirely from f_{m-2}, f_{m-1}, f_m.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DomainError


@dataclass(frozen=True)
class KSequence:
    """Values f_{-2}, f_{-1}, ..., f_n for one k."""

    k: int
    values: tuple[int, ...]

    def f(self, i: int) -> int:
        """f_i, for -2 <= i <= n."""
        return self.values[i + 2]


@dataclass(frozen=True)
class PolyCoeffs:
    """Coefficients of f_n as a polynomial in k: coeffs[i] multiplies k^(n-2i)."""

    n: int
    coeffs: tuple[int, ...]

    def evaluate(self, k: int) -> int:
        return sum(a * k ** (self.n - 2 * i) for i, a in enumerate(self.coeffs))


def f_seq(k: int, n: int) -> KSequence:
    """Sequence values f_{-2} ... f_n by the recurrence."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if n < -2:
        raise DomainError(f"n must be >= -2, got {n}")
    values = [1, 0]
    a, b = 1, 0
    for _ in range(n + 1):
        a, b = b, k * b + a
        values.append(b)
    return KSequence(k=k, values=tuple(values[: n + 3]))


def cassini_check(k: int, n: int) -> bool:
    """Whether f_{n-1}^2 + (-1)^n == f_n * f_{n-2} holds (it always does)."""
    if n < 1:
        raise DomainError(f"cassini_check requires n >= 1, got {n}")
    s = f_seq(k, n)
    return s.f(n - 1) ** 2 + (-1) ** n == s.f(n) * s.f(n - 2)


def congruence_check(k: int, n: int) -> bool:
    """Whether (-1)^n * f_{n-2} * f_{n-1} == k (mod f_n) holds (it always does)."""
    if n < 2:
        raise DomainError(f"congruence_check requires n >= 2, got {n}")
    s = f_seq(k, n)
    return ((-1) ** n * s.f(n - 2) * s.f(n - 1) - k) % s.f(n) == 0


def f_poly_coeffs(n: int) -> PolyCoeffs:
    """Coefficients of f_n = a_n k^n + a_{n-2} k^{n-2} + ...

    The leading coefficient is 1; for i >= 1,
    a_{n-2i} = 1 + sum_{s=1}^{n-2i} C(s+i-1, s).
    """
    if n < 0:
        raise DomainError(f"f_poly_coeffs requires n >= 0, got {n}")
    coeffs = [1]
    for i in range(1, n // 2 + 1):
        coeffs.append(1 + sum(comb(s + i - 1, s) for s in range(1, n - 2 * i + 1)))
    return PolyCoeffs(n=n, coeffs=tuple(coeffs))


def parity_of_f(k: int, n: int) -> str:
    """Parity ("even"/"odd") of f_n without computing the value.

    For even k, f_n is odd exactly when n is even; for odd k the parities
    repeat with period 3 as odd, odd, even starting at n = 0.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if n < -2:
        raise DomainError(f"n must be >= -2, got {n}")
    if k % 2 == 0:
        return "odd" if n % 2 == 0 else "even"
    return "even" if n % 3 == 2 else "odd"
