"""k-step sequence f_n: recurrence, identities, polynomial form, parity."""

import pytest

from pellfrac.errors import DomainError
from pellfrac.kfib import (
    cassini_check,
    congruence_check,
    f_poly_coeffs,
    f_seq,
    parity_of_f,
)


def test_f_seq_fibonacci_and_pell():
    assert f_seq(1, 7).values == (1, 0, 1, 1, 2, 3, 5, 8, 13, 21)
    assert f_seq(2, 7).values == (1, 0, 1, 2, 5, 12, 29, 70, 169, 408)
    assert f_seq(3, 3).f(3) == 3**3 + 2 * 3 == 33


def test_f_seq_edges():
    assert f_seq(5, -2).values == (1,)
    assert f_seq(5, -1).values == (1, 0)
    assert f_seq(5, 0).values == (1, 0, 1)
    with pytest.raises(DomainError):
        f_seq(0, 5)
    with pytest.raises(DomainError):
        f_seq(1, -3)


def test_f_seq_strictly_increasing_from_one():
    for k in (1, 2, 9):
        vals = f_seq(k, 40).values
        tail = vals[3:]  # f_1 onwards
        assert all(a < b for a, b in zip(tail, tail[1:]))


def test_cassini_examples():
    assert cassini_check(2, 3)  # 5^2 - 1 == 12 * 2
    assert cassini_check(1, 2)  # 1 + 1 == 2 * 1
    assert cassini_check(5, 4)
    with pytest.raises(DomainError):
        cassini_check(2, 0)


def test_congruence_examples():
    assert congruence_check(2, 2)  # 1*2 == 2 (mod 5)
    assert congruence_check(2, 3)  # -10 == 2 (mod 12)
    assert congruence_check(3, 5)
    with pytest.raises(DomainError):
        congruence_check(2, 1)


def test_identities_small_sweep():
    for k in range(1, 13):
        seq = f_seq(k, 60)
        for n in range(1, 60):
            assert seq.f(n - 1) ** 2 + (-1) ** n == seq.f(n) * seq.f(n - 2)
        for n in range(2, 60):
            assert ((-1) ** n * seq.f(n - 2) * seq.f(n - 1) - k) % seq.f(n) == 0


@pytest.mark.parametrize(
    "n,coeffs",
    [
        (0, (1,)),
        (1, (1,)),
        (2, (1, 1)),
        (3, (1, 2)),
        (8, (1, 7, 15, 10, 1)),
        (11, (1, 10, 36, 56, 35, 6)),
    ],
)
def test_f_poly_coeffs_table(n, coeffs):
    assert f_poly_coeffs(n).coeffs == coeffs


def test_f_poly_matches_recurrence():
    for n in range(0, 41):
        poly = f_poly_coeffs(n)
        for k in range(1, 11):
            assert poly.evaluate(k) == f_seq(k, n).f(n), (n, k)


def test_parity_examples():
    assert parity_of_f(1, 2) == "even"
    assert parity_of_f(3, 4) == "odd"
    assert parity_of_f(2, 3) == "even"


def test_parity_matches_values():
    for k in range(1, 21):
        seq = f_seq(k, 100)
        for n in range(-2, 101):
            want = "even" if seq.f(n) % 2 == 0 else "odd"
            assert parity_of_f(k, n) == want, (k, n)


def _mat_mul(a, b):
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def test_matrix_power_identity():
    # [[0,1],[1,k]]^n == [[f_{n-2}, f_{n-1}], [f_{n-1}, f_n]]
    for k in (1, 2, 3, 7):
        seq = f_seq(k, 30)
        m = ((0, 1), (1, k))
        power = m
        for n in range(1, 31):
            assert power == (
                (seq.f(n - 2), seq.f(n - 1)),
                (seq.f(n - 1), seq.f(n)),
            ), (k, n)
            power = _mat_mul(power, m)


def test_gcd_of_consecutive_terms():
    import math

    for k in (1, 2, 11):
        seq = f_seq(k, 80)
        for n in range(-1, 81):
            assert math.gcd(seq.f(n), seq.f(n - 1)) == 1
