"""Shared helpers for the test suite.

The recurring pattern throughout these tests is a sweep over small prime
powers q = p^k: the fields F_q are the concrete backends on which every
formula-layer result can be checked against the brute-force oracle.
"""

from cyclokit import canonical, identity, is_prime, multiply


def prime_powers(limit):
    """All prime powers q = p^k with q <= limit, as (p, k, q) triples."""
    out = []
    for p in range(2, limit + 1):
        if not is_prime(p):
            continue
        k, q = 1, p
        while q <= limit:
            out.append((p, k, q))
            k += 1
            q *= p
    return sorted(out, key=lambda t: t[2])


def odd_prime_powers(limit):
    """Prime powers q = p^k <= limit with p odd."""
    return [(p, k, q) for (p, k, q) in prime_powers(limit) if p != 2]


def divisors(n):
    """All positive divisors of n in increasing order."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def parts_product(n):
    """The primitive n-th root assembled from canonical prime-power parts.

    This is the representative for which the per-prime product formula (and
    hence the lcm-order dichotomy of root products) is an exact identity; a
    single canonical fraction 1/n is a different primitive root in general.
    """
    z = identity
    m, p = n, 2
    while m > 1:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            z = multiply(z, canonical(p**e, 1))
        p += 1
    return z
