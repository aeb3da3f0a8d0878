"""Tests for exponent-class arithmetic in the group of roots of unity.

A root is a reduced fraction j/n in Q/Z under the coherent convention
z(m) = z(N)^(N/m); multiplication is fraction addition.  The subset
algebra (mu, primitive layers, products, differences, unions) is checked
against direct enumeration.
"""

from fractions import Fraction
from math import gcd, lcm

import pytest
from hypothesis import given, settings, strategies as st

from cyclokit import (
    Difference,
    InternalProduct,
    Mu,
    PrimSet,
    RootSum,
    Union,
    as_fraction,
    canonical,
    cardinality,
    contains,
    describe,
    identity,
    inverse,
    multiply,
    parse_root,
    power,
    primitive_order,
    render_root,
)
from cyclokit.roots import enumerate as enumerate_subset

from conftest import parts_product


roots_strategy = st.builds(
    canonical,
    st.integers(min_value=1, max_value=400),
    st.integers(min_value=0, max_value=400),
)


# ---------------------------------------------------------------------------
# canonical / multiply / power / primitive_order
# ---------------------------------------------------------------------------


def test_canonical_frozen_values():
    assert canonical(8, 2) == canonical(4, 1)
    assert as_fraction(canonical(6, 5)) == Fraction(5, 6)
    assert as_fraction(canonical(12, 8)) == Fraction(2, 3)


def test_multiply_frozen_values():
    assert multiply(canonical(2, 1), canonical(3, 1)) == canonical(6, 5)
    assert multiply(canonical(4, 1), canonical(4, 1)) == canonical(2, 1)


def test_power_frozen_values():
    assert power(canonical(8, 1), 4) == canonical(2, 1)
    assert power(canonical(9, 1), 3) == canonical(3, 1)
    assert power(canonical(5, 1), -1) == canonical(5, 4)


def test_primitive_order_frozen_values():
    assert primitive_order(canonical(12, 8)) == 3
    assert primitive_order(identity) == 1
    assert primitive_order(canonical(16, 3)) == 16


def test_render_and_parse_round_trip():
    for n in range(1, 40):
        for j in range(n):
            z = canonical(n, j)
            assert parse_root(render_root(z)) == z


# ---------------------------------------------------------------------------
# group laws
# ---------------------------------------------------------------------------


@settings(max_examples=500)
@given(roots_strategy, roots_strategy, roots_strategy)
def test_group_laws(x, y, z):
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))
    assert multiply(x, y) == multiply(y, x)
    assert multiply(x, identity) == x
    assert multiply(x, inverse(x)) == identity


@settings(max_examples=300)
@given(roots_strategy, st.integers(min_value=-12, max_value=12))
def test_power_is_iterated_multiplication(z, e):
    acc = identity
    step = z if e >= 0 else inverse(z)
    for _ in range(abs(e)):
        acc = multiply(acc, step)
    assert power(z, e) == acc


@settings(max_examples=300)
@given(roots_strategy, roots_strategy)
def test_multiply_is_fraction_addition(x, y):
    want = (as_fraction(x) + as_fraction(y)) % 1
    assert as_fraction(multiply(x, y)) == want


def test_multiply_matches_fraction_addition_small_denominators():
    # Exhaustive over reduced exponent fractions with denominator <= 60.
    fracs = [(j, n) for n in range(1, 61) for j in range(n) if gcd(j, n) == 1 or (j == 0 and n == 1)]
    roots = [canonical(n, j) for j, n in fracs]
    values = [Fraction(j, n) for j, n in fracs]
    for i in range(len(roots)):
        for k in range(i, len(roots)):
            got = as_fraction(multiply(roots[i], roots[k]))
            assert got == (values[i] + values[k]) % 1


def test_coprime_product_order():
    for m in range(1, 40):
        for n in range(1, 40):
            if gcd(m, n) != 1:
                continue
            z = multiply(canonical(m, 1), canonical(n, 1))
            assert primitive_order(z) == m * n


def test_product_of_prime_power_roots_formula():
    # z(p^e) * z(p^f) = z(p^max(e,f))^(p^|e-f| + 1)
    for p in (2, 3, 5):
        for e in range(0, 6):
            for f in range(0, 6):
                lhs = multiply(canonical(p**e, 1), canonical(p**f, 1))
                rhs = power(canonical(p ** max(e, f), 1), p ** abs(e - f) + 1)
                assert lhs == rhs


def test_product_order_lcm_dichotomy():
    # The order of the product of two parts-product representatives is
    # lcm(n, m), except when n and m share the same nonzero 2-adic valuation,
    # where exactly one factor of 2 collapses.
    def eps2(n):
        e = 0
        while n % 2 == 0:
            n //= 2
            e += 1
        return e

    for n in range(1, 61):
        wn = parts_product(n)
        assert primitive_order(wn) == n
        for m in range(1, 61):
            z = multiply(wn, parts_product(m))
            big = lcm(n, m)
            if eps2(n) == eps2(m) and eps2(n) > 0:
                assert primitive_order(z) == big // 2
            else:
                assert primitive_order(z) == big


def test_finite_subgroup_closure_is_mu_of_max_order():
    # Closing any finite set of roots under multiplication yields exactly
    # mu(N) where N is the largest primitive order present in the closure.
    seeds = [
        [canonical(4, 1)],
        [canonical(6, 1), canonical(4, 1)],
        [canonical(9, 2), canonical(15, 4)],
        [canonical(8, 3), canonical(12, 5), canonical(5, 2)],
    ]
    for seed in seeds:
        closure = {identity, *seed}
        frontier = list(closure)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(closure):
                    c = multiply(a, b)
                    if c not in closure:
                        closure.add(c)
                        nxt.append(c)
            frontier = nxt
        n_max = max(primitive_order(z) for z in closure)
        assert closure == set(enumerate_subset(Mu(n_max)))


# ---------------------------------------------------------------------------
# subset algebra: mu / primitive sets / products / differences / unions
# ---------------------------------------------------------------------------


def test_enumerate_frozen_cardinalities():
    assert len(list(enumerate_subset(Mu(4)))) == 4
    assert len(list(enumerate_subset(PrimSet(8)))) == 4
    diff = Difference(Mu(8), Mu(4))
    elems = list(enumerate_subset(diff))
    assert len(elems) == 4
    assert all(primitive_order(z) == 8 for z in elems)


def test_cardinality_matches_enumeration():
    subsets = [
        Mu(1),
        Mu(12),
        PrimSet(1),
        PrimSet(12),
        Difference(Mu(24), Mu(4)),
        Difference(Mu(8), Mu(8)),
        InternalProduct((PrimSet(8), Mu(3))),
        InternalProduct((Mu(4), Mu(9))),
        Union((PrimSet(3), PrimSet(4), PrimSet(6))),
    ]
    for ms in subsets:
        elems = list(enumerate_subset(ms))
        assert cardinality(ms) == len(elems)
        assert len(set(elems)) == len(elems)


def test_contains_agrees_with_enumeration():
    subsets = [
        Mu(12),
        PrimSet(8),
        Difference(Mu(24), Mu(4)),
        InternalProduct((PrimSet(4), Mu(3))),
        Union((PrimSet(3), PrimSet(4), PrimSet(6))),
    ]
    universe = list(enumerate_subset(Mu(24)))
    for ms in subsets:
        member = set(enumerate_subset(ms))
        for z in universe:
            assert contains(ms, z) == (z in member)


def test_internal_product_enumerates_pairwise_products():
    ms = InternalProduct((PrimSet(8), Mu(3)))
    want = {
        multiply(a, b)
        for a in enumerate_subset(PrimSet(8))
        for b in enumerate_subset(Mu(3))
    }
    assert set(enumerate_subset(ms)) == want


def test_describe_frozen_renderings():
    assert describe(Difference(Mu(8), Mu(4))) == "mu(8) - mu(4)"
    assert describe(InternalProduct((PrimSet(8), Mu(1)))) == "prim(8) * mu(1)"
    assert describe(Union((PrimSet(3), PrimSet(4), PrimSet(6)))) == "prim(3) | prim(4) | prim(6)"


# ---------------------------------------------------------------------------
# formal sums
# ---------------------------------------------------------------------------


def test_root_sum_sign_normalization():
    # -z is the same term as z(2)*z with a negated coefficient, so a trace
    # like z8 + z8^(-1) renders with the 2-torsion folded into signs.
    z = canonical(8, 1)
    s = RootSum.of(z) + RootSum.of(power(z, -1))
    assert s == RootSum.of(z) - RootSum.of(canonical(8, 3))
    assert str(s) == "z(8,1) - z(8,3)"


def test_root_sum_cancellation():
    z = canonical(12, 5)
    assert (RootSum.of(z) - RootSum.of(z)).is_zero
    assert RootSum.zero().is_zero
    assert str(RootSum.zero()) == "0"


def test_root_sum_map_exponent_is_additive_on_terms():
    s = RootSum.of(canonical(16, 1)) + RootSum.of(canonical(16, 7)).scale(3)
    t = s.map_exponent(5)
    want = RootSum.of(canonical(16, 5)) + RootSum.of(canonical(16, 35)).scale(3)
    assert t == want


def test_root_sum_mul_root_shifts_each_term():
    s = RootSum.of(canonical(8, 1)) - RootSum.of(canonical(8, 3))
    shifted = s.mul_root(canonical(8, 2))
    want = RootSum.of(canonical(8, 3)) - RootSum.of(canonical(8, 5))
    assert shifted == want
    assert s.lcm_order() == 8
