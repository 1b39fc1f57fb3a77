"""Closed-form enumeration of all d with sqrt(d) = [e; k,...,k, 2e].

For period j = m + 1 >= 2 such d exist iff k is even or m != 2 (mod 3),
and then every (e, d) comes from one of three closed forms, with f = f_m
and f' = f_{m-1} from the k-step sequence in kfib:

  case 1 (k even, f odd):   e = k/2 + ell*f,        d = e^2 + 2*ell*f' + 1,  ell >= 1
  case 2 (k even, f even):  e = k/2 + ell*f/2,      d = e^2 + ell*f' + 1,    ell >= 1
  case 3 (k odd, f odd):    e = (k+f)/2 + ell*f,    d = e^2 + (2*ell+1)*f' + 1,  ell >= 0

In every case the smallest solution of X^2 - d*Y^2 = (-1)^j is
x = f*e + f', y = f.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .cf import expand_sqrt, integer_sqrt
from .errors import DomainError, EllOutOfRangeError, NoFamilyError
from .kfib import f_seq, parity_of_f

NONEXISTENCE_REASON = "k odd and 3 | j"


class FamilyCase(enum.Enum):
    CASE1 = "case1"
    CASE2 = "case2"
    CASE3 = "case3"

    @property
    def ell_min(self) -> int:
        return 0 if self is FamilyCase.CASE3 else 1


@dataclass(frozen=True)
class FamilyParams:
    """Pattern parameters: period j = m + 1, repeated quotient k, branch ell."""

    j: int
    k: int
    ell: int

    @property
    def m(self) -> int:
        return self.j - 1


@dataclass(frozen=True)
class FamilyEntry:
    """One solved member of the family, with its fundamental Pell solution."""

    params: FamilyParams
    case: FamilyCase
    e: int
    d: int
    x: int
    y: int
    sign: int
    f_m: int
    f_m_minus_1: int

    @property
    def j(self) -> int:
        return self.params.j

    @property
    def k(self) -> int:
        return self.params.k

    @property
    def ell(self) -> int:
        return self.params.ell


@dataclass(frozen=True)
class EnumerationResult:
    """Entries for a (j, k) range; reason is set iff the family is empty."""

    entries: tuple[FamilyEntry, ...]
    reason: str | None = None


@dataclass(frozen=True)
class PeriodOneEntry:
    """The j=1 family d = e^2 + 1, where (x, y) = (e, 1) solves X^2 - d*Y^2 = -1."""

    e: int
    d: int
    x: int
    y: int
    sign: int = -1
    j: int = 1


class Membership(NamedTuple):
    j: int
    k: int
    ell: int
    e: int


def exists_family(j: int, k: int) -> bool:
    """Whether any d has sqrt(d) = [e; k,...,k, 2e] with period j."""
    _check_jk(j, k)
    return k % 2 == 0 or (j - 1) % 3 != 2


def case_of(j: int, k: int) -> FamilyCase:
    """Which closed form applies for (j, k); raises NoFamilyError if none."""
    if not exists_family(j, k):
        raise NoFamilyError(j, k, NONEXISTENCE_REASON)
    if k % 2 == 1:
        return FamilyCase.CASE3
    return FamilyCase.CASE1 if parity_of_f(k, j - 1) == "odd" else FamilyCase.CASE2


def make_entry(j: int, k: int, ell: int) -> FamilyEntry:
    """The family member for branch parameter ell, fully solved and checked."""
    case = case_of(j, k)
    if ell < case.ell_min:
        raise EllOutOfRangeError(
            f"{case.value} requires ell >= {case.ell_min}, got {ell}"
        )
    m = j - 1
    seq = f_seq(k, m)
    fm, fm1, fm2 = seq.f(m), seq.f(m - 1), seq.f(m - 2)
    if case is FamilyCase.CASE1:
        e = k // 2 + ell * fm
        d = e * e + 2 * ell * fm1 + 1
    elif case is FamilyCase.CASE2:
        assert fm % 2 == 0
        e = k // 2 + ell * (fm // 2)
        d = e * e + ell * fm1 + 1
    else:
        e = (k + fm) // 2 + ell * fm
        d = e * e + (2 * ell + 1) * fm1 + 1

    x = fm * e + fm1
    y = fm
    sign = (-1) ** j
    # theorem-backed sanity: exact d formula, correct floor, true period pattern
    assert (2 * fm1 * e + fm2) % fm == 0
    assert x * x - d * y * y == sign
    assert 2 * e != k
    root, exact = integer_sqrt(d)
    assert not exact and root == e
    return FamilyEntry(
        params=FamilyParams(j=j, k=k, ell=ell),
        case=case,
        e=e,
        d=d,
        x=x,
        y=y,
        sign=sign,
        f_m=fm,
        f_m_minus_1=fm1,
    )


def enumerate_family(j: int, k: int, ell_max: int) -> EnumerationResult:
    """All entries with ell from the case minimum up to ell_max, increasing.

    Non-existence is an answer, not an error: the result then carries an
    empty tuple and the reason string.
    """
    if not exists_family(j, k):
        return EnumerationResult(entries=(), reason=NONEXISTENCE_REASON)
    lo = case_of(j, k).ell_min
    entries = tuple(make_entry(j, k, ell) for ell in range(lo, ell_max + 1))
    return EnumerationResult(entries=entries)


def entries_up_to_d(j: int, k: int, d_max: int) -> Iterator[FamilyEntry]:
    """Entries in increasing ell while d <= d_max (d grows with ell)."""
    if not exists_family(j, k):
        return
    ell = case_of(j, k).ell_min
    while True:
        entry = make_entry(j, k, ell)
        if entry.d > d_max:
            return
        yield entry
        ell += 1


def period_one_family(e: int) -> PeriodOneEntry:
    """The period-1 member above e: d = e^2 + 1 with solution (e, 1)."""
    if e < 1:
        raise DomainError(f"e must be >= 1, got {e}")
    return PeriodOneEntry(e=e, d=e * e + 1, x=e, y=1)


def membership(d: int) -> Membership | None:
    """Inverse query: the (j, k, ell, e) putting d in the family, or None.

    None when the periodic block of sqrt(d) is not k,...,k,2e for a single
    k, and for period-1 d (those belong to period_one_family).
    """
    cf = expand_sqrt(d)
    if cf.j == 1:
        return None
    block = cf.period[:-1]
    k = block[0]
    if any(a != k for a in block):
        return None
    j, e = cf.j, cf.e
    case = case_of(j, k)  # pattern exists, so no NoFamilyError possible
    fm = f_seq(k, j - 1).f(j - 1)
    if case is FamilyCase.CASE1:
        num, den = 2 * e - k, 2 * fm
    elif case is FamilyCase.CASE2:
        num, den = 2 * e - k, fm
    else:
        num, den = 2 * e - k - fm, 2 * fm
    assert num >= 0 and num % den == 0
    ell = num // den
    assert ell >= case.ell_min
    return Membership(j=j, k=k, ell=ell, e=e)


def _check_jk(j: int, k: int) -> None:
    if j < 2:
        raise DomainError(f"period j must be >= 2, got {j}")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
