"""Exact integer and modular arithmetic primitives.

Everything downstream (root-of-unity algebra, field profiles, moduli
descriptions) reduces to the handful of operations here: factorization,
p-adic valuations, Euler's totient, multiplicative orders, modular inverses,
the Chinese remainder theorem, signed squarefree kernels, and the two-term
power-sum recurrence.  All functions are pure and operate on plain integers
(except :func:`waring_power_sum`, which accepts any commutative ring element
supporting ``+``, ``-``, ``*`` with integers).

Residues are represented by the immutable :class:`ResidueClass`, which stores
a value already reduced into ``[0, modulus)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

__all__ = [
    "MAX_FACTOR_INPUT",
    "ResidueClass",
    "crt",
    "eps",
    "euler_phi",
    "factorize",
    "is_prime",
    "mod_inverse",
    "mult_order",
    "pfree_quotient",
    "squarefree_kernel",
    "waring_power_sum",
]

#: Largest integer :func:`factorize` accepts (64-bit signed range).
MAX_FACTOR_INPUT = 2**63 - 1

# Trial division handles everything up to this bound; beyond it the remaining
# cofactor is split with Miller-Rabin + Brent's rho.
_TRIAL_BOUND = 1 << 20


@dataclass(frozen=True)
class ResidueClass:
    """A residue ``value`` modulo ``modulus``, normalized to ``[0, modulus)``."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def __str__(self) -> str:
        return f"{self.value} mod {self.modulus}"


def is_prime(n: int) -> bool:
    """Deterministic primality test for 64-bit integers (Miller-Rabin)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # This witness set is deterministic for all n < 3.3 * 10^24.
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """Find a nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to factor {n}")  # pragma: no cover


def factorize(n: int) -> list[tuple[int, int]]:
    """Return the prime factorization of n as (prime, exponent) pairs.

    Pairs are sorted by ascending prime; ``factorize(1) == []``.
    """
    if not 1 <= n <= MAX_FACTOR_INPUT:
        raise ValueError(f"factorize input out of range: {n}")
    factors: dict[int, int] = {}
    rest = n
    for d in range(2, _TRIAL_BOUND + 1):
        if d * d > rest:
            break
        while rest % d == 0:
            factors[d] = factors.get(d, 0) + 1
            rest //= d
    # Split whatever survives trial division (product of primes > 2^20).
    stack = [rest] if rest > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
        else:
            d = _brent_rho(m)
            stack.extend((d, m // d))
    return sorted(factors.items())


def eps(n: int, p: int) -> int:
    """The p-adic valuation of n: the largest e with p^e dividing n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def pfree_quotient(n: int, p: int) -> int:
    """The p-free part of n, i.e. n divided by p^eps(n, p)."""
    return n // p ** eps(n, p)


def euler_phi(n: int) -> int:
    """Euler's totient of n."""
    result = 1
    for p, e in factorize(n):
        result *= p ** (e - 1) * (p - 1)
    return result


def mult_order(a: int, m: int) -> int:
    """The multiplicative order of a modulo m (requires gcd(a, m) = 1)."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if gcd(a, m) != 1:
        raise ValueError(f"mult_order requires gcd(a, m) = 1, got a={a}, m={m}")
    if m == 1:
        return 1
    # The order divides phi(m); strip each prime of phi(m) while possible.
    t = euler_phi(m)
    for p, _ in factorize(t):
        while t % p == 0 and pow(a, t // p, m) == 1:
            t //= p
    return t


def mod_inverse(k: int, j: int) -> ResidueClass:
    """The inverse of k modulo j as a ResidueClass (requires gcd(k, j) = 1)."""
    if j < 1:
        raise ValueError(f"modulus must be positive, got {j}")
    try:
        inv = pow(k, -1, j)
    except ValueError as exc:
        raise ValueError(f"mod_inverse requires gcd(k, j) = 1, got k={k}, j={j}") from exc
    return ResidueClass(inv, j)


def crt(classes: list[ResidueClass]) -> ResidueClass:
    """Combine residues with pairwise-coprime moduli into one class.

    Returns the unique class modulo the product of the moduli; the empty
    list yields the trivial class 0 mod 1.
    """
    value, modulus = 0, 1
    for cls in classes:
        if gcd(modulus, cls.modulus) != 1:
            raise ValueError(
                f"crt moduli must be pairwise coprime; {cls.modulus} clashes with {modulus}"
            )
        # value + modulus*t == cls.value (mod cls.modulus)
        t = (cls.value - value) * pow(modulus, -1, cls.modulus) % cls.modulus
        value += modulus * t
        modulus *= cls.modulus
    return ResidueClass(value, modulus)


def squarefree_kernel(n: int) -> int:
    """The signed squarefree part of n: the product of primes with odd exponent.

    The sign of n is preserved, so kernel(-12) == -3 and kernel(-4) == -1.
    """
    if n == 0:
        raise ValueError("squarefree_kernel requires a nonzero integer")
    sign = -1 if n < 0 else 1
    kernel = 1
    for p, e in factorize(abs(n)):
        if e % 2 == 1:
            kernel *= p
    return sign * kernel


def waring_power_sum(a, b, t: int):
    """The power sum x^t + y^t of the roots of z^2 - a*z + b, by recurrence.

    With s_0 = 2 and s_1 = a, the Newton identity s_t = a*s_{t-1} - b*s_{t-2}
    yields x^t + y^t without computing the roots.  Works for any commutative
    ring elements a, b that support arithmetic with small integers.
    """
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    if t == 0:
        return a - a + 2  # "2" coerced into the ring of a
    prev, cur = a - a + 2, a  # s_0, s_1
    for _ in range(t - 1):
        prev, cur = cur, a * cur - b * prev
    return cur
