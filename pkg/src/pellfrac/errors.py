"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class PerfectSquareError(DomainError):
    """Raised when d is a perfect square: sqrt(d) is rational, no expansion exists."""

    def __init__(self, n: int, root: int):
        self.n = n
        self.root = root
        super().__init__(f"{n} is a perfect square ({root}^2)")


class NoFamilyError(ValueError):
    """No d exists with the requested uniform quotient pattern (k odd and 3 | j)."""

    def __init__(self, j: int, k: int, reason: str):
        self.j = j
        self.k = k
        self.reason = reason
        super().__init__(f"no family for j={j}, k={k}: {reason}")


class EllOutOfRangeError(ValueError):
    """The branch parameter ell is below the minimum required by the case."""
