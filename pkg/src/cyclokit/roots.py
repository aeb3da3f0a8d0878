"""Symbolic algebra of the group of all roots of unity, with no base field.

A root of unity is represented by its exponent class j/n in Q/Z under the
coherent compatibility convention: for every m dividing n, the primitive m-th
root is the (n/m)-th power of the primitive n-th root.  With that convention
fixed once, every identity between roots of unity becomes exact arithmetic on
reduced fractions: multiplication is fraction addition mod 1, powers scale the
exponent, and the denominator of the reduced fraction is the primitive order.

The module also provides:

* :class:`RootSum` — formal integer linear combinations of roots, used for
  symbolic trace/norm coefficients.  Sums are kept in a canonical form where
  each term's sign is absorbed into the order-2 component of the root (since
  -z and z times the primitive square root of unity are equal in every
  realization), so symbolic equality matches equality in any field whose
  characteristic is coprime to the orders involved.
* Finite set expressions over roots of unity (:data:`MuSubset`): full groups
  ``Mu(n)``, primitive layers ``PrimSet(n)``, internal (pointwise) products,
  differences, and unions, each with a membership test and an enumerator.
* The textual form ``z(n,j)`` used by the CLI, with a parser.
"""

from __future__ import annotations

import builtins
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .numtheory import euler_phi

__all__ = [
    "Difference",
    "InternalProduct",
    "Mu",
    "MuSubset",
    "PrimSet",
    "RootOfUnity",
    "RootSum",
    "Union",
    "canonical",
    "cardinality",
    "contains",
    "describe",
    "enumerate",
    "identity",
    "inverse",
    "multiply",
    "parse_root",
    "power",
    "primitive_order",
    "render_root",
]

_enumerate = builtins.enumerate  # this module shadows the builtin below


@dataclass(frozen=True, order=True)
class RootOfUnity:
    """The root of unity with reduced exponent class numerator/denominator.

    Instances must be created through :func:`canonical` (or the arithmetic
    helpers), which guarantee gcd(numerator, denominator) = 1 and represent
    the identity as 0/1.  The denominator is the primitive order.
    """

    denominator: int
    numerator: int

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return multiply(self, other)

    def __pow__(self, k: int) -> "RootOfUnity":
        return power(self, k)

    def __str__(self) -> str:
        return render_root(self)


def canonical(n: int, j: int) -> RootOfUnity:
    """The reduced exponent class of j/n (the j-th power of the n-th root)."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    j %= n
    g = gcd(j, n)
    return RootOfUnity(n // g, j // g)


#: The identity element (exponent class 0/1).
identity = RootOfUnity(1, 0)


def multiply(z1: RootOfUnity, z2: RootOfUnity) -> RootOfUnity:
    """Group law: exponent classes add in Q/Z."""
    n1, n2 = z1.denominator, z2.denominator
    g = gcd(n1, n2)
    lcm = n1 // g * n2
    return canonical(lcm, z1.numerator * (lcm // n1) + z2.numerator * (lcm // n2))


def power(z: RootOfUnity, k: int) -> RootOfUnity:
    """The k-th power: exponent class scaled by k (k may be negative)."""
    return canonical(z.denominator, z.numerator * k)


def inverse(z: RootOfUnity) -> RootOfUnity:
    """The group inverse of z."""
    return power(z, -1)


def primitive_order(z: RootOfUnity) -> int:
    """The least n > 0 with z^n = 1 (the reduced denominator)."""
    return z.denominator


def as_fraction(z: RootOfUnity) -> Fraction:
    """The exponent class as an exact fraction in [0, 1)."""
    return Fraction(z.numerator, z.denominator)


def render_root(z: RootOfUnity) -> str:
    """Textual form 'z(n,j)' of the exponent class j/n."""
    return f"z({z.denominator},{z.numerator})"


_ROOT_RE = re.compile(r"^z\(\s*(\d+)\s*,\s*(-?\d+)\s*\)$")


def parse_root(text: str) -> RootOfUnity:
    """Parse the textual form 'z(n,j)' back into a canonical root."""
    m = _ROOT_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse root of unity: {text!r}")
    return canonical(int(m.group(1)), int(m.group(2)))


# ---------------------------------------------------------------------------
# Formal integer linear combinations of roots of unity
# ---------------------------------------------------------------------------

_ZETA2 = RootOfUnity(2, 1)


def _sign_rep(z: RootOfUnity) -> tuple[RootOfUnity, int]:
    """Canonical representative of {z, -z} and the sign relating z to it.

    -z equals z times the order-2 root, so each such pair is normalized to
    its lexicographically smaller member (by (order, exponent)); the returned
    sign is +1 if z itself is the representative, else -1.
    """
    partner = multiply(z, _ZETA2)
    key = (z.denominator, z.numerator)
    pkey = (partner.denominator, partner.numerator)
    return (z, 1) if key <= pkey else (partner, -1)


class RootSum:
    """A formal integer linear combination of roots of unity.

    Terms are stored against sign-normalized representatives (see module
    docstring), so two sums compare equal exactly when they agree as elements
    of the group ring evaluated in any field of compatible characteristic.
    The empty sum represents zero.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[RootOfUnity, int] | None = None):
        # Accepts an already-normalized dict; use from_terms for raw input.
        self._terms: dict[RootOfUnity, int] = dict(terms or {})

    @classmethod
    def from_terms(cls, terms: list[tuple[int, RootOfUnity]]) -> "RootSum":
        """Build a sum from (coefficient, root) pairs, normalizing signs."""
        acc: dict[RootOfUnity, int] = {}
        for coeff, root in terms:
            rep, sign = _sign_rep(root)
            acc[rep] = acc.get(rep, 0) + sign * coeff
        return cls({r: c for r, c in acc.items() if c != 0})

    @classmethod
    def zero(cls) -> "RootSum":
        return cls({})

    @classmethod
    def of(cls, *roots: RootOfUnity) -> "RootSum":
        """The sum of the given roots, each with coefficient +1."""
        return cls.from_terms([(1, r) for r in roots])

    def terms(self) -> list[tuple[int, RootOfUnity]]:
        """Sorted (coefficient, representative root) pairs."""
        return sorted(
            ((c, r) for r, c in self._terms.items()),
            key=lambda t: (t[1].denominator, t[1].numerator),
        )

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "RootSum") -> "RootSum":
        acc = dict(self._terms)
        for r, c in other._terms.items():
            acc[r] = acc.get(r, 0) + c
        return RootSum({r: c for r, c in acc.items() if c != 0})

    def __neg__(self) -> "RootSum":
        return RootSum({r: -c for r, c in self._terms.items()})

    def __sub__(self, other: "RootSum") -> "RootSum":
        return self + (-other)

    def scale(self, k: int) -> "RootSum":
        """The sum multiplied by the integer k."""
        if k == 0:
            return RootSum.zero()
        return RootSum({r: k * c for r, c in self._terms.items()})

    def mul_root(self, z: RootOfUnity) -> "RootSum":
        """The sum multiplied by a single root of unity (distributes)."""
        return RootSum.from_terms([(c, multiply(r, z)) for c, r in self.terms()])

    def map_exponent(self, m: int) -> "RootSum":
        """Apply the exponent map z -> z^m to every term.

        This realizes the automorphism sending each root of unity to its m-th
        power (e.g. Frobenius for m = q); it is additive on formal sums.
        """
        return RootSum.from_terms([(c, power(r, m)) for c, r in self.terms()])

    def lcm_order(self) -> int:
        """The lcm of the primitive orders appearing in the sum (1 if zero)."""
        n = 1
        for _, r in self.terms():
            n = n // gcd(n, r.denominator) * r.denominator
        return n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for coeff, root in self.terms():
            mag = abs(coeff)
            body = render_root(root) if mag == 1 else f"{mag}*{render_root(root)}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"RootSum({self})"


# ---------------------------------------------------------------------------
# Finite set expressions over roots of unity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Mu:
    """The full group of n-th roots of unity (all orders dividing n)."""

    n: int


@dataclass(frozen=True)
class PrimSet:
    """The primitive n-th roots of unity (exactly order n)."""

    n: int


@dataclass(frozen=True)
class InternalProduct:
    """The set of pointwise products, one factor from each operand set."""

    factors: tuple["MuSubset", ...]


@dataclass(frozen=True)
class Difference:
    """Set difference left - right."""

    left: "MuSubset"
    right: "MuSubset"


@dataclass(frozen=True)
class Union:
    """Set union of the operands."""

    parts: tuple["MuSubset", ...]


MuSubset = Mu | PrimSet | InternalProduct | Difference | Union


def enumerate(ms: MuSubset) -> list[RootOfUnity]:
    """All elements of the set, canonical and duplicate-free, sorted."""
    return sorted(_enum_set(ms), key=lambda z: (z.denominator, z.numerator))


def _enum_set(ms: MuSubset) -> set[RootOfUnity]:
    if isinstance(ms, Mu):
        if ms.n < 1:
            raise ValueError(f"order must be positive, got {ms.n}")
        return {canonical(ms.n, j) for j in range(ms.n)}
    if isinstance(ms, PrimSet):
        if ms.n < 1:
            raise ValueError(f"order must be positive, got {ms.n}")
        return {canonical(ms.n, j) for j in range(ms.n) if gcd(j, ms.n) == 1}
    if isinstance(ms, InternalProduct):
        acc = {identity}
        for factor in ms.factors:
            acc = {multiply(a, b) for a in acc for b in _enum_set(factor)}
        return acc
    if isinstance(ms, Difference):
        return _enum_set(ms.left) - _enum_set(ms.right)
    if isinstance(ms, Union):
        acc: set[RootOfUnity] = set()
        for part in ms.parts:
            acc |= _enum_set(part)
        return acc
    raise TypeError(f"not a root-of-unity set expression: {ms!r}")


def contains(ms: MuSubset, z: RootOfUnity) -> bool:
    """Membership test for a set expression."""
    if isinstance(ms, Mu):
        return ms.n % z.denominator == 0
    if isinstance(ms, PrimSet):
        return z.denominator == ms.n
    if isinstance(ms, Difference):
        return contains(ms.left, z) and not contains(ms.right, z)
    if isinstance(ms, Union):
        return any(contains(part, z) for part in ms.parts)
    if isinstance(ms, InternalProduct):
        return z in _enum_set(ms)
    raise TypeError(f"not a root-of-unity set expression: {ms!r}")


def cardinality(ms: MuSubset) -> int:
    """Number of elements of the (finite) set."""
    if isinstance(ms, Mu):
        return ms.n
    if isinstance(ms, PrimSet):
        return euler_phi(ms.n)
    return len(_enum_set(ms))


def describe(ms: MuSubset) -> str:
    """Compact textual rendering of a set expression."""
    if isinstance(ms, Mu):
        return f"mu({ms.n})"
    if isinstance(ms, PrimSet):
        return f"prim({ms.n})"
    if isinstance(ms, InternalProduct):
        return " * ".join(_describe_atom(f) for f in ms.factors)
    if isinstance(ms, Difference):
        return f"{_describe_atom(ms.left)} - {_describe_atom(ms.right)}"
    if isinstance(ms, Union):
        return " | ".join(_describe_atom(p) for p in ms.parts)
    raise TypeError(f"not a root-of-unity set expression: {ms!r}")


def _describe_atom(ms: MuSubset) -> str:
    text = describe(ms)
    return text if isinstance(ms, (Mu, PrimSet)) else f"({text})"
