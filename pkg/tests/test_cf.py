"""Continued fraction engine: expansion, convergents, and their invariants."""

import math
import random

import pytest

from pellfrac.cf import (
    CFExpansion,
    convergents,
    expand_sqrt,
    integer_sqrt,
    surd_steps,
)
from pellfrac.errors import DomainError, PerfectSquareError


@pytest.mark.parametrize(
    "n,root,exact",
    [(41, 6, False), (9, 3, True), (0, 0, True), (1, 1, True), (2, 1, False)],
)
def test_integer_sqrt_examples(n, root, exact):
    assert integer_sqrt(n) == (root, exact)


def test_integer_sqrt_matches_stdlib_small():
    for n in range(0, 20000):
        root, exact = integer_sqrt(n)
        assert root == math.isqrt(n)
        assert exact == (root * root == n)


def test_integer_sqrt_huge_values():
    rng = random.Random(20240814)
    for bits in (64, 128, 256, 1024, 4096):
        for _ in range(20):
            n = rng.getrandbits(bits)
            root, exact = integer_sqrt(n)
            assert root * root <= n < (root + 1) * (root + 1)
            assert exact == (root * root == n)
    # exact squares and their neighbours at scale
    for base in (10**50, 10**100 + 12345):
        assert integer_sqrt(base * base) == (base, True)
        assert integer_sqrt(base * base - 1) == (base - 1, False)
        assert integer_sqrt(base * base + 1) == (base, False)


def test_integer_sqrt_rejects_negative():
    with pytest.raises(DomainError):
        integer_sqrt(-1)


@pytest.mark.parametrize(
    "d,e,period",
    [
        (41, 6, (2, 2, 12)),
        (7, 2, (1, 1, 1, 4)),
        (2, 1, (2,)),
        (3, 1, (1, 2)),
        (13, 3, (1, 1, 1, 1, 6)),
        (19, 4, (2, 1, 3, 1, 2, 8)),
    ],
)
def test_expand_sqrt_known_expansions(d, e, period):
    exp = expand_sqrt(d)
    assert (exp.d, exp.e, exp.period, exp.j) == (d, e, period, len(period))


def test_expand_sqrt_rejects_squares_and_small_d():
    with pytest.raises(PerfectSquareError) as err:
        expand_sqrt(9)
    assert err.value.root == 3
    for bad in (1, 0, -5):
        with pytest.raises(DomainError):
            expand_sqrt(bad)
    with pytest.raises(PerfectSquareError):
        expand_sqrt(10**40)  # (10^20)^2


def test_expand_sqrt_huge_d():
    e = 10**30
    exp = expand_sqrt(e * e + 1)
    assert exp.e == e and exp.period == (2 * e,)
    exp = expand_sqrt(e * e + 2 * e)
    assert exp.period == (1, 2 * e)


def test_convergents_d41():
    cs = convergents(expand_sqrt(41), 2)
    assert [(c.num, c.den, c.index) for c in cs] == [
        (0, 1, -2),
        (1, 0, -1),
        (6, 1, 0),
        (13, 2, 1),
        (32, 5, 2),
    ]


def test_convergents_d7_reaches_pell_solution():
    last = convergents(expand_sqrt(7), 3)[-1]
    assert (last.num, last.den) == (8, 3)
    assert 8 * 8 - 7 * 3 * 3 == 1


def test_convergent_zero_is_integer_part():
    for d in (2, 7, 41, 1000003):
        cf = expand_sqrt(d)
        c0 = convergents(cf, 0)[-1]
        assert (c0.num, c0.den) == (cf.e, 1)


def test_convergents_recurrence_and_coprimality():
    for d in (23, 41, 61, 94):
        cf = expand_sqrt(d)
        cs = convergents(cf, 25)
        for i in range(2, len(cs)):
            a = cf.quotient(cs[i].index)
            assert cs[i].num == a * cs[i - 1].num + cs[i - 2].num
            assert cs[i].den == a * cs[i - 1].den + cs[i - 2].den
        assert all(math.gcd(c.num, c.den) == 1 for c in cs if c.index >= 0)


def _nonsquares(limit):
    return (d for d in range(2, limit + 1) if math.isqrt(d) ** 2 != d)


def test_period_block_structure_sweep():
    # palindrome before the last quotient; last quotient 2e; quotients positive
    for d in _nonsquares(2000):
        exp = expand_sqrt(d)
        body = exp.period[:-1]
        assert body == body[::-1], d
        assert exp.period[-1] == 2 * exp.e, d
        assert all(a >= 1 for a in exp.period)
        assert exp.e**2 < d < (exp.e + 1) ** 2


def test_period_detection_idempotent_sweep():
    # unrolling two periods from the quotient stream repeats the same block
    for d in _nonsquares(500):
        exp = expand_sqrt(d)
        steps = surd_steps(d)
        unrolled = [next(steps)[0] for _ in range(2 * exp.j + 1)]
        assert tuple(unrolled[1 : exp.j + 1]) == exp.period
        assert tuple(unrolled[exp.j + 1 :]) == exp.period


def test_surd_state_invariants_sweep():
    for d in _nonsquares(800):
        e = math.isqrt(d)
        steps = surd_steps(d)
        for i in range(40):
            _, state = next(steps)
            assert (d - state.p * state.p) % state.q == 0, d
            if i >= 1:  # periodic part: reduced states
                assert 0 <= state.p <= e
                assert 0 < state.q <= 2 * e


def test_convergent_error_term_is_surd_denominator():
    # num_i^2 - d*den_i^2 == (-1)^(i+1) * q_{i+1}, so index j-1 gives (-1)^j
    for d in _nonsquares(300):
        cf = expand_sqrt(d)
        states = surd_steps(d)
        qs = [next(states)[1].q for _ in range(30)]
        for c in convergents(cf, 25):
            if c.index < 0:
                continue
            value = c.num**2 - d * c.den**2
            assert value == (-1) ** (c.index + 1) * qs[c.index + 1]
        head = convergents(cf, cf.j - 1)[-1]
        assert head.num**2 - d * head.den**2 == (-1) ** cf.j


def test_quotient_indexing():
    cf = expand_sqrt(41)
    assert [cf.quotient(i) for i in range(8)] == [6, 2, 2, 12, 2, 2, 12, 2]
    with pytest.raises(DomainError):
        cf.quotient(-1)
    with pytest.raises(DomainError):
        convergents(cf, -1)
    assert isinstance(cf, CFExpansion)
