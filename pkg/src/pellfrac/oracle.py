"""Independent brute-force checks for the main modules.

Nothing here shares code with cf/pell/family: floors come from
math.isqrt, the expansion keeps a generic (p + q*sqrt(d))/r triple
instead of the (P, Q) surd state, and Pell solutions are found by
scanning y. A shared bug therefore cannot confirm itself. Speed is a
non-goal, but the y-scans are vectorized so that verification sweeps
finish in minutes, with every accept/reject decided in exact integer
arithmetic (floats only propose square-root candidates).
"""

from __future__ import annotations

from math import gcd, isqrt

import numpy as np

from .errors import DomainError, PerfectSquareError
from .pell import PellSolution

_CHUNK = 1 << 18
# v < 2^62 keeps int64 products safe and float64 sqrt candidates within +-1
_INT64_SAFE = 1 << 62

_SQUARE_MOD64 = np.zeros(64, dtype=bool)
_SQUARE_MOD64[[(i * i) % 64 for i in range(64)]] = True

# pairwise-coprime moduli for the residue sieve in brute_solutions
_SIEVE_MODULI = (16, 9, 5, 7, 11, 13)
_SIEVE_SPAN = 720720  # product of the moduli


def brute_pell(d: int, sign: int, y_max: int) -> PellSolution | None:
    """Smallest-y solution of x^2 - d*y^2 = sign with y <= y_max, or None.

    Scans y = 1..y_max and tests d*y^2 + sign for squareness. None means
    "not found below the cutoff", which is weaker than "unsolvable":
    only the period parity of sqrt(d) proves unsolvability of the -1 case.
    """
    _require_nonsquare(d)
    _require_sign(sign)
    if y_max < 1:
        raise DomainError(f"y_max must be >= 1, got {y_max}")
    if d * y_max * y_max + 1 < _INT64_SAFE:
        y = _scan_first_hit(d, sign, y_max)
    else:
        y = next(
            (y for y in range(1, y_max + 1) if _is_square(d * y * y + sign)), None
        )
    if y is None:
        return None
    x = isqrt(d * y * y + sign)
    return PellSolution(x=x, y=y, sign=sign, d=d)


def brute_solutions(d: int, x_max: int) -> list[PellSolution]:
    """All solutions of x^2 - d*y^2 = +-1 with 1 <= x <= x_max, ascending.

    Exhaustive over y. A residue sieve (admissibility of d*y^2 + sign as a
    square modulo 16, 9, 5, 7, 11, 13) discards ~99% of y values before
    the exact square test, which keeps the scan exact but tractable up to
    x_max around 1e9.
    """
    _require_nonsquare(d)
    if x_max < 1:
        raise DomainError(f"x_max must be >= 1, got {x_max}")
    found: list[PellSolution] = []
    for sign in (-1, 1):
        y_hi = isqrt((x_max * x_max - sign) // d)
        if y_hi < 1:
            continue
        if d * y_hi * y_hi + 1 >= _INT64_SAFE:
            raise DomainError("x_max too large for the vectorized scan")
        for y in _sieved_square_hits(d, sign, y_hi):
            x = isqrt(d * y * y + sign)
            assert x * x - d * y * y == sign
            if x <= x_max:
                found.append(PellSolution(x=x, y=y, sign=sign, d=d))
    return sorted(found, key=lambda s: s.y)


def brute_cf_prefix(d: int, n_terms: int) -> list[int]:
    """First n_terms partial quotients of sqrt(d) by exact rational arithmetic.

    Maintains the tail as (p + q*sqrt(d)) / r in lowest terms with r > 0,
    inverting via the conjugate; floors are exact because
    floor(q*sqrt(d)) = isqrt(q*q*d) for non-square d.
    """
    _require_nonsquare(d)
    if n_terms < 0:
        raise DomainError(f"n_terms must be >= 0, got {n_terms}")
    out = []
    p, q, r = 0, 1, 1
    for _ in range(n_terms):
        a = (p + isqrt(q * q * d)) // r
        out.append(a)
        p, q, r = _invert_tail(p, q, r, d, a)
    return out


def pattern_scan(d_max: int, j: int, k: int) -> list[int]:
    """All non-square d <= d_max with expansion exactly [e; k,...,k, 2e], period j.

    Works entirely from the quotient stream of brute_cf_prefix's
    formulation: a quotient equal to 2e marks the end of the period, so d
    matches iff quotients 1..j-1 all equal k (and not 2e) and quotient j
    equals 2e.
    """
    if d_max < 2:
        raise DomainError(f"d_max must be >= 2, got {d_max}")
    if j < 2:
        raise DomainError(f"pattern period j must be >= 2, got {j}")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    hits = []
    e = 1
    while e * e + 1 <= d_max:
        if k != 2 * e:  # a quotient k == 2e would end the period before j
            for d in range(e * e + 1, min(e * (e + 2), d_max) + 1):
                if _matches_uniform_pattern(d, e, j, k):
                    hits.append(d)
        e += 1
    return hits


def _matches_uniform_pattern(d: int, e: int, j: int, k: int) -> bool:
    two_e = 2 * e
    p, q, r = _invert_tail(0, 1, 1, d, e)
    for _ in range(j - 1):
        a = (p + isqrt(q * q * d)) // r
        if a != k:
            return False
        p, q, r = _invert_tail(p, q, r, d, a)
    return (p + isqrt(q * q * d)) // r == two_e


def _invert_tail(p: int, q: int, r: int, d: int, a: int) -> tuple[int, int, int]:
    """Lowest-terms triple for 1 / ((p + q*sqrt(d))/r - a), denominator > 0."""
    u = p - a * r
    p1, q1, r1 = r * u, -r * q, u * u - q * q * d
    if r1 < 0:
        p1, q1, r1 = -p1, -q1, -r1
    g = gcd(p1, q1, r1)
    return p1 // g, q1 // g, r1 // g


def _is_square(v: int) -> bool:
    r = isqrt(v)
    return r * r == v


def _scan_first_hit(d: int, sign: int, y_max: int) -> int | None:
    """Smallest y in [1, y_max] with d*y^2 + sign a perfect square (int64 range)."""
    base = np.arange(_CHUNK, dtype=np.int64)
    v = np.empty(_CHUNK, dtype=np.int64)
    lo = 1
    while lo <= y_max:
        n = min(_CHUNK, y_max - lo + 1)
        ys = base[:n] + lo
        vv = v[:n]
        np.multiply(ys, ys, out=vv)
        np.multiply(vv, d, out=vv)
        np.add(vv, sign, out=vv)
        hit = _exact_square_positions(vv)
        if hit.size:
            return int(ys[hit[0]])
        lo += n
    return None


def _sieved_square_hits(d: int, sign: int, y_hi: int) -> list[int]:
    """All y in [1, y_hi] with d*y^2 + sign a perfect square (int64 range)."""
    classes = _admissible_classes(d, sign)
    if classes.size == 0:
        return []
    hits: list[int] = []
    rows = max(1, (1 << 21) // classes.size)
    span = _SIEVE_SPAN
    start = 0
    while start <= y_hi:
        n_rows = min(rows, (y_hi - start) // span + 1)
        offsets = (start + span * np.arange(n_rows, dtype=np.int64))[:, None]
        ys = (offsets + classes[None, :]).ravel()
        ys = ys[(ys >= 1) & (ys <= y_hi)]
        if ys.size:
            v = d * ys * ys + sign
            for i in _exact_square_positions(v):
                hits.append(int(ys[i]))
        start += n_rows * span
    return hits


def _admissible_classes(d: int, sign: int) -> np.ndarray:
    """Residues y mod 720720 for which d*y^2 + sign can be a perfect square."""
    r = np.arange(_SIEVE_SPAN, dtype=np.int64)
    mask = np.ones(_SIEVE_SPAN, dtype=bool)
    for mod in _SIEVE_MODULI:
        squares = {(i * i) % mod for i in range(mod)}
        lut = np.array(
            [(d * u * u + sign) % mod in squares for u in range(mod)], dtype=bool
        )
        mask &= lut[r % mod]
    return np.flatnonzero(mask).astype(np.int64)


def _exact_square_positions(v: np.ndarray) -> np.ndarray:
    """Indices i with v[i] a perfect square; v nonnegative int64 below 2^62."""
    cand = np.flatnonzero(_SQUARE_MOD64[v & 63])
    if cand.size == 0:
        return cand
    w = v[cand]
    r = np.sqrt(w.astype(np.float64)).astype(np.int64)
    ok = r * r == w
    ok |= (r + 1) * (r + 1) == w
    ok |= (r - 1) * (r - 1) == w
    return cand[ok]


def _require_nonsquare(d: int) -> None:
    if d < 2:
        raise DomainError(f"d must be >= 2, got {d}")
    root = isqrt(d)
    if root * root == d:
        raise PerfectSquareError(d, root)


def _require_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
