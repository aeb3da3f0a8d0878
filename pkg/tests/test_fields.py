"""Tests for field profiles: n_F, orders of roots of unity, 2-power content,
membership of roots and of the two conjugate-pair sums.

Every decision procedure here is cross-checked against the brute-force
oracle on explicit F_{q^2} towers for all prime powers q <= 49.
"""

from math import gcd

import pytest

from cyclokit import (
    PreconditionError,
    ResidueClass,
    Sign,
    canonical,
    contains_root,
    cos_sum_in_field,
    ell,
    finite_field,
    frobenius_exponent,
    n_F,
    order_of_zeta,
    parse_field,
    power,
    rational,
    render_field,
)
from cyclokit import RootSum
from cyclokit.oracle import brute_order, build_field, embed_root, evaluate_sum

from conftest import divisors, prime_powers


Q = rational()
F5 = finite_field(5)
F23 = finite_field(23)


# ---------------------------------------------------------------------------
# construction and rendering
# ---------------------------------------------------------------------------


def test_field_spec_round_trip():
    for spec in ("Q", "q:5", "q:2^4", "q:23"):
        assert render_field(parse_field(spec)) == spec


def test_finite_field_rejects_composite_characteristic():
    with pytest.raises(ValueError):
        finite_field(4)
    with pytest.raises(ValueError):
        finite_field(6)


def test_parse_field_rejects_garbage():
    for bad in ("F5", "q:", "q:4^2", "q:5^0", ""):
        with pytest.raises(ValueError):
            parse_field(bad)


# ---------------------------------------------------------------------------
# n_F / order_of_zeta / ell
# ---------------------------------------------------------------------------


def test_n_F_frozen_values():
    assert n_F(F23, 16) == 2
    assert n_F(F5, 8) == 4
    assert n_F(Q, 12) == 2


def test_order_of_zeta_frozen_values():
    assert order_of_zeta(F5, 8) == 2
    assert order_of_zeta(F23, 16) == 8
    assert order_of_zeta(Q, 3) == 3


def test_order_times_n_F_is_n():
    for field in (Q, F5, F23):
        char = field.characteristic
        for n in range(1, 80):
            if char and n % char == 0:
                continue
            assert n_F(field, n) * order_of_zeta(field, n) == n


def test_ell_frozen_values():
    assert ell(F5, 2).finite_value() == 2
    assert ell(F23, 2).finite_value() == 1
    assert ell(Q, 3).finite_value() == 0
    assert ell(Q, 2).finite_value() == 1


def test_ell_rejects_characteristic():
    with pytest.raises(PreconditionError):
        ell(F5, 5)


def test_characteristic_dividing_n_is_rejected():
    with pytest.raises(PreconditionError):
        order_of_zeta(F5, 10)
    with pytest.raises(PreconditionError):
        contains_root(F5, canonical(15, 1))


# ---------------------------------------------------------------------------
# contains_root / cos_sum_in_field
# ---------------------------------------------------------------------------


def test_contains_root_frozen_values():
    assert contains_root(F5, canonical(4, 1)) is True
    assert contains_root(F5, canonical(8, 1)) is False
    assert contains_root(Q, canonical(2, 1)) is True


def test_cos_sum_frozen_values():
    assert cos_sum_in_field(F23, 8, Sign.PLUS) is True
    assert cos_sum_in_field(F23, 16, Sign.MINUS) is True
    assert cos_sum_in_field(Q, 5, Sign.PLUS) is False


def test_cos_sum_rational_membership_tables():
    plus = [n for n in range(1, 40) if cos_sum_in_field(Q, n, Sign.PLUS)]
    assert plus == [1, 2, 3, 4, 6]
    minus = [n for n in range(1, 40) if n <= 2 or n % 2 == 0]
    got = [n for n in minus if cos_sum_in_field(Q, n, Sign.MINUS)]
    assert got == [1, 2]


def test_cos_sum_minus_rejects_odd_n():
    with pytest.raises(PreconditionError):
        cos_sum_in_field(F23, 5, Sign.MINUS)


# ---------------------------------------------------------------------------
# frobenius_exponent
# ---------------------------------------------------------------------------


def test_frobenius_exponent_frozen_values():
    assert frobenius_exponent(F23, 16) == ResidueClass(7, 16)
    assert frobenius_exponent(F5, 8) == ResidueClass(5, 8)
    assert frobenius_exponent(F5, 3) == ResidueClass(2, 3)


def test_frobenius_exponent_rejects_characteristic():
    with pytest.raises(PreconditionError):
        frobenius_exponent(F5, 15)


# ---------------------------------------------------------------------------
# oracle cross-checks over explicit towers
# ---------------------------------------------------------------------------


def test_order_of_zeta_matches_brute_force():
    for p, k, q in prime_powers(49):
        field = finite_field(p, k)
        for n in divisors(q * q - 1):
            assert order_of_zeta(field, n) == brute_order(p, k, n)


def test_contains_root_iff_order_one():
    for p, k, q in prime_powers(49):
        field = finite_field(p, k)
        for n in divisors(q * q - 1):
            assert contains_root(field, canonical(n, 1)) == (order_of_zeta(field, n) == 1)


def test_cos_sum_matches_explicit_evaluation():
    for p, k, q in prime_powers(49):
        field = finite_field(p, k)
        E = build_field(p, 2 * k)
        for n in divisors(q * q - 1):
            z = canonical(n, 1)
            plus = evaluate_sum(E, RootSum.of(z) + RootSum.of(power(z, -1)))
            assert cos_sum_in_field(field, n, Sign.PLUS) == (plus**q == plus)
            if n % 2 == 0 or n <= 2:
                minus = evaluate_sum(E, RootSum.of(z) - RootSum.of(power(z, -1)))
                assert cos_sum_in_field(field, n, Sign.MINUS) == (minus**q == minus)


def test_quadratic_odd_n_has_coprime_invariants():
    # For odd n with a degree-2 extension, the in-field part and the order
    # are coprime.
    for p, k, q in prime_powers(49):
        field = finite_field(p, k)
        for n in divisors(q * q - 1):
            if n % 2 == 0:
                continue
            if (q * q - 1) % n == 0 and (q - 1) % n != 0:
                assert gcd(n_F(field, n), order_of_zeta(field, n)) == 1
