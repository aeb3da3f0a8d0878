"""Base-field abstraction: the rationals and finite fields, by profile.

Downstream classification code never touches concrete field arithmetic; it
only needs the answers this module computes from a field's profile:

* ``n_F`` — the largest divisor d of n with a primitive d-th root of unity
  in F (gcd(n, q-1) for F_q; 1 or 2 for Q);
* ``order_of_zeta`` — the order of the primitive n-th root in the quotient
  group K*/F*, which equals n / n_F;
* ``ell`` — the largest k with a primitive p^k-th root in F (an extended
  natural, infinite never occurring for these two backends);
* membership predicates for single roots and for the two cosine-like sums
  z + 1/z and z - 1/z, by closed form.

Inputs whose order is divisible by the characteristic are rejected rather
than silently reduced; in characteristic p the p-part of a root of unity is
trivial and silent reduction would mask caller bugs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .errors import PreconditionError
from .numtheory import ResidueClass, eps, is_prime
from .roots import RootOfUnity

__all__ = [
    "ExtendedNat",
    "FieldProfile",
    "RATIONAL",
    "Sign",
    "contains_root",
    "cos_sum_in_field",
    "ell",
    "finite_field",
    "frobenius_exponent",
    "n_F",
    "order_of_zeta",
    "parse_field",
    "rational",
    "render_field",
]


@dataclass(frozen=True, order=True)
class ExtendedNat:
    """A natural number or infinity (infinity encoded as value None).

    Ordering treats infinity as greater than every finite value; arithmetic
    is only offered on finite values via :meth:`finite_value`.
    """

    _key: tuple[int, int]  # (0, n) for finite n, (1, 0) for infinity

    @classmethod
    def finite(cls, n: int) -> "ExtendedNat":
        if n < 0:
            raise ValueError(f"extended natural must be nonnegative, got {n}")
        return cls((0, n))

    @classmethod
    def infinity(cls) -> "ExtendedNat":
        return cls((1, 0))

    @property
    def is_finite(self) -> bool:
        return self._key[0] == 0

    def finite_value(self) -> int:
        if not self.is_finite:
            raise ValueError("value is infinite")
        return self._key[1]

    def __str__(self) -> str:
        return str(self._key[1]) if self.is_finite else "inf"

    def to_json(self) -> int | str:
        return self._key[1] if self.is_finite else "inf"


class Sign(enum.Enum):
    """Which cosine-like sum to test: z + 1/z (PLUS) or z - 1/z (MINUS)."""

    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class FieldProfile:
    """Profile of a supported base field: the rationals or F_(p^k).

    For the rationals, ``p == k == 0``; for finite fields, ``p`` is the
    (prime) characteristic and ``k >= 1`` the degree over the prime field.
    """

    p: int = 0
    k: int = 0

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def q(self) -> int:
        """The field size p^k (finite fields only)."""
        if self.is_rational:
            raise ValueError("the rational field has no finite size q")
        return self.p**self.k


#: The field of rational numbers.
RATIONAL = FieldProfile()


def rational() -> FieldProfile:
    """The rational-field profile."""
    return RATIONAL


def finite_field(p: int, k: int = 1) -> FieldProfile:
    """The profile of the finite field with p^k elements."""
    if not is_prime(p):
        raise ValueError(f"characteristic must be prime, got {p}")
    if k < 1:
        raise ValueError(f"degree must be positive, got {k}")
    return FieldProfile(p, k)


def parse_field(spec: str) -> FieldProfile:
    """Parse the field grammar 'Q' | 'q:<p>' | 'q:<p>^<k>'."""
    text = spec.strip()
    if text == "Q":
        return RATIONAL
    if text.startswith("q:"):
        body = text[2:]
        base, sep, exp = body.partition("^")
        try:
            p = int(base)
            k = int(exp) if sep else 1
        except ValueError as exc:
            raise ValueError(f"cannot parse field spec: {spec!r}") from exc
        return finite_field(p, k)
    raise ValueError(f"cannot parse field spec: {spec!r}")


def render_field(field: FieldProfile) -> str:
    """Inverse of :func:`parse_field`."""
    if field.is_rational:
        return "Q"
    return f"q:{field.p}" if field.k == 1 else f"q:{field.p}^{field.k}"


def _check_coprime_to_char(field: FieldProfile, n: int) -> None:
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if not field.is_rational and n % field.p == 0:
        raise PreconditionError(
            f"characteristic {field.p} divides the root order {n}"
        )


def n_F(field: FieldProfile, n: int) -> int:
    """The largest divisor d of n such that F contains a primitive d-th root.

    Equals gcd(n, q-1) over F_q, and 2 or 1 over Q by parity of n.
    """
    _check_coprime_to_char(field, n)
    if field.is_rational:
        return 2 if n % 2 == 0 else 1
    return gcd(n, field.q - 1)


def order_of_zeta(field: FieldProfile, n: int) -> int:
    """The order of the primitive n-th root of unity in K*/F*: n / n_F."""
    return n // n_F(field, n)


def ell(field: FieldProfile, p: int) -> ExtendedNat:
    """The largest k with a primitive p^k-th root of unity in F."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not field.is_rational and p == field.p:
        raise PreconditionError(f"p equals the characteristic {p}")
    if field.is_rational:
        return ExtendedNat.finite(1 if p == 2 else 0)
    return ExtendedNat.finite(eps(field.q - 1, p))


def contains_root(field: FieldProfile, z: RootOfUnity) -> bool:
    """Whether the root of unity z lies in F."""
    n = z.denominator
    _check_coprime_to_char(field, n)
    if field.is_rational:
        return n in (1, 2)
    return (field.q - 1) % n == 0


def cos_sum_in_field(field: FieldProfile, n: int, sign: Sign) -> bool:
    """Decide membership of z + 1/z (PLUS) or z - 1/z (MINUS) in F, for z of order n.

    Closed forms: over F_q, PLUS holds iff q = +-1 mod n, and MINUS holds iff
    q = 1 mod n or (n even and q = n/2 - 1 mod n); over Q, PLUS holds iff
    n in {1,2,3,4,6} and MINUS iff n in {1,2}.  The MINUS form is only
    supported for even n or n <= 2 (for larger odd n the two sums live in
    different quadratic twists and no closed form is offered).
    """
    _check_coprime_to_char(field, n)
    if sign is Sign.MINUS and n > 2 and n % 2 == 1:
        raise PreconditionError(f"minus sum unsupported for odd order {n} > 2")
    if field.is_rational:
        if sign is Sign.PLUS:
            return n in (1, 2, 3, 4, 6)
        return n in (1, 2)
    q = field.q
    if sign is Sign.PLUS:
        return q % n in (1 % n, (n - 1) % n)
    return q % n == 1 % n or (n % 2 == 0 and q % n == (n // 2 - 1) % n)


def frobenius_exponent(field: FieldProfile, n: int) -> ResidueClass:
    """The exponent by which x -> x^q acts on n-th roots of unity: q mod n."""
    if field.is_rational:
        raise PreconditionError("frobenius_exponent requires a finite field")
    if gcd(n, field.q) != 1:
        raise PreconditionError(f"order {n} shares a factor with the field size")
    return ResidueClass(field.q % n, n)
