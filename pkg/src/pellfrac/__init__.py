"""Exact arithmetic for Fermat-Pell equations X^2 - d*Y^2 = +-1.

Expands sqrt(d) as a periodic continued fraction, reads fundamental
solutions off the convergents, and enumerates in closed form every d
whose expansion is [e; k,...,k, 2e] for a uniform quotient k, together
with brute-force oracles that verify all of it independently.
"""

from .cf import CFExpansion, Convergent, SurdState, convergents, expand_sqrt, integer_sqrt
from .errors import DomainError, EllOutOfRangeError, NoFamilyError, PerfectSquareError
from .family import (
    EnumerationResult,
    FamilyCase,
    FamilyEntry,
    FamilyParams,
    Membership,
    PeriodOneEntry,
    case_of,
    entries_up_to_d,
    enumerate_family,
    exists_family,
    make_entry,
    membership,
    period_one_family,
)
from .kfib import (
    KSequence,
    PolyCoeffs,
    cassini_check,
    congruence_check,
    f_poly_coeffs,
    f_seq,
    parity_of_f,
)
from .pell import (
    PellSolution,
    QuadraticSurdNumber,
    is_solution,
    power_solution,
    solve_fundamental,
    solve_pell_minus,
    solve_pell_plus,
)

__version__ = "0.1.0"

__all__ = [
    "CFExpansion",
    "Convergent",
    "DomainError",
    "EllOutOfRangeError",
    "EnumerationResult",
    "FamilyCase",
    "FamilyEntry",
    "FamilyParams",
    "KSequence",
    "Membership",
    "NoFamilyError",
    "PellSolution",
    "PerfectSquareError",
    "PeriodOneEntry",
    "PolyCoeffs",
    "QuadraticSurdNumber",
    "SurdState",
    "case_of",
    "cassini_check",
    "congruence_check",
    "convergents",
    "entries_up_to_d",
    "enumerate_family",
    "exists_family",
    "expand_sqrt",
    "f_poly_coeffs",
    "f_seq",
    "integer_sqrt",
    "is_solution",
    "make_entry",
    "membership",
    "parity_of_f",
    "period_one_family",
    "power_solution",
    "solve_fundamental",
    "solve_pell_minus",
    "solve_pell_plus",
]
