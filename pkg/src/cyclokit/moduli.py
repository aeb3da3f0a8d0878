"""Moduli of quadratic cyclotomic extensions: per-prime and global spaces,
the order-2 subgroup and its star product, the prime-set partition of
extension classes, and the embeddings into the quadratic-extension moduli
of the base field (square classes, Artin-Schreier classes).

All sets of roots of unity are presented as the set expressions from
:mod:`cyclokit.roots` (products, differences, and unions of mu- and
primitive-sets), with arithmetic cardinalities that the enumeration tests
cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import PreconditionError
from .field_profile import (
    FieldProfile,
    Sign,
    contains_root,
    cos_sum_in_field,
    ell,
    order_of_zeta,
)
from .numtheory import eps, factorize, pfree_quotient, squarefree_kernel
from .oracle import (
    ExplicitField,
    FFElement,
    build_field,
    evaluate_sum,
    evaluate_sum_rational,
)
from .quadcyclo import is_quadratic, kappa_class, min_poly, nu, yogh
from .roots import (
    Difference,
    InternalProduct,
    Mu,
    MuSubset,
    PrimSet,
    RootOfUnity,
    RootSum,
    Union,
    canonical,
    describe,
    multiply,
    power,
)

__all__ = [
    "ArtinSchreierClass",
    "FiniteSquareClass",
    "ModuliClass",
    "ModuliDescription",
    "RationalSquareClass",
    "SMaxClass",
    "SMaxPartition",
    "chi_as",
    "chi_rad",
    "field_equal",
    "full_moduli",
    "g2",
    "g2_membership",
    "g2_star",
    "inseparable_orbit_related",
    "m2_membership",
    "m2p",
    "quad_moduli_summary",
    "s_max",
    "s_n",
]

KIND_PER_PRIME = "PerPrime"
KIND_GLOBAL = "Global"
KIND_ORDER_TWO = "OrderTwo"


@dataclass(frozen=True)
class ModuliClass:
    """One isomorphism class of quadratic cyclotomic extensions.

    ``primes`` is the prime set attached to the class, ``representative_n``
    the order of a root generating a representative extension, and
    ``minpoly`` the rendered quadratic minimal polynomial of that root.
    """

    primes: tuple[int, ...]
    representative_n: int
    minpoly: str

    def to_json(self) -> dict:
        return {
            "primes": list(self.primes),
            "representative_n": self.representative_n,
            "minpoly": self.minpoly,
        }


@dataclass(frozen=True)
class ModuliDescription:
    """A moduli space of roots of unity generating quadratic extensions.

    ``presentation`` is a set expression whose elements are exactly the
    space, ``cardinality`` its size (computed arithmetically; the enumeration
    of the presentation must agree), and ``classes`` the extensions up to
    isomorphism, one entry per class.
    """

    kind: str
    presentation: MuSubset
    cardinality: int
    classes: tuple[ModuliClass, ...]

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "presentation": describe(self.presentation),
            "cardinality": self.cardinality,
            "classes": [c.to_json() for c in self.classes],
        }


def _class_for(field: FieldProfile, primes: tuple[int, ...], rep_n: int) -> ModuliClass:
    return ModuliClass(primes, rep_n, min_poly(field, rep_n).render())


def m2p(field: FieldProfile, p: int) -> ModuliDescription:
    """The moduli of p-power roots generating quadratic extensions.

    Presented as Mu(p^nu) - Mu(p^ell); empty (and with no extension class)
    exactly when nu = ell, otherwise a single class represented by the
    p^(ell+1)-th root.
    """
    nu_val = nu(field, p).finite_value()
    ell_val = ell(field, p).finite_value()
    presentation = Difference(Mu(p**nu_val), Mu(p**ell_val))
    classes: tuple[ModuliClass, ...] = ()
    if nu_val > ell_val:
        classes = (_class_for(field, (p,), p ** (ell_val + 1)),)
    return ModuliDescription(
        KIND_PER_PRIME, presentation, p**nu_val - p**ell_val, classes
    )


def g2(field: FieldProfile) -> ModuliDescription:
    """The group of roots of unity of order exactly 2 in K*/F*.

    Empty in characteristic 2 (presented as an empty difference); otherwise
    the product of the primitive 2^(ell+1)-th roots with the odd-order roots
    lying in F, carrying at most one extension class (the radical one).
    """
    if field.characteristic == 2:
        return ModuliDescription(KIND_ORDER_TWO, Difference(Mu(1), Mu(1)), 0, ())
    ell_val = ell(field, 2).finite_value()
    half = 2 ** (ell_val + 1)
    odd_part = 1 if field.is_rational else pfree_quotient(field.q - 1, 2)
    presentation = InternalProduct((PrimSet(half), Mu(odd_part)))
    cardinality = (half // 2) * odd_part
    return ModuliDescription(
        KIND_ORDER_TWO,
        presentation,
        cardinality,
        (_class_for(field, (2,), half),),
    )


def g2_membership(field: FieldProfile, z: RootOfUnity) -> bool:
    """Whether z has order exactly 2 in K*/F* (z^2 in F, z not in F)."""
    return order_of_zeta(field, z.denominator) == 2


def _split_two_part(z: RootOfUnity, two_part: int) -> tuple[int, RootOfUnity]:
    """Split z into its 2-power exponent and odd component.

    Requires the order of z to have 2-part exactly ``two_part``; returns
    (k, w) with z = (primitive two_part-th root)^k * w and w of odd order.
    """
    n = z.denominator
    odd = pfree_quotient(n, 2)
    if n // odd != two_part:
        raise PreconditionError(
            f"order {n} has 2-part {n // odd}, expected {two_part}"
        )
    k = z.numerator * pow(odd, -1, two_part) % two_part
    j = z.numerator * pow(two_part, -1, odd) % odd if odd > 1 else 0
    return k, canonical(odd, j)


def g2_star(field: FieldProfile, z1: RootOfUnity, z2: RootOfUnity) -> RootOfUnity:
    """The group law on order-2 roots: 2-power exponents multiply modulo
    2^(ell+1), odd components multiply as roots of unity.

    The identity element is the primitive 2^(ell+1)-th root itself.
    """
    ell_val = ell(field, 2).finite_value()
    half = 2 ** (ell_val + 1)
    for z in (z1, z2):
        if not g2_membership(field, z):
            raise PreconditionError(f"{z} does not have order 2 in K*/F*")
    k1, w1 = _split_two_part(z1, half)
    k2, w2 = _split_two_part(z2, half)
    return multiply(canonical(half, k1 * k2), multiply(w1, w2))


def _bounded_degree(field: FieldProfile, n: int) -> int:
    """The extension degree of the n-th root, collapsed to 1, 2, or 3 (">2")."""
    if contains_root(field, canonical(n, 1)):
        return 1
    if is_quadratic(field, n):
        return 2
    return 3


def field_equal(field: FieldProfile, n: int, m: int) -> bool:
    """Whether F(z_n) = F(z_m), for extensions of equal degree 1 or 2.

    Decided through the lcm: the compositum F(z_n, z_m) is F(z_lcm), so the
    two fields coincide exactly when the lcm's degree does not grow.
    """
    d_n = _bounded_degree(field, n)
    d_m = _bounded_degree(field, m)
    if d_n > 2 or d_m > 2:
        raise PreconditionError("only degrees 1 and 2 are supported")
    if d_n != d_m:
        raise PreconditionError(f"unequal degrees {d_n} and {d_m}")
    lcm = n // gcd(n, m) * m
    return _bounded_degree(field, lcm) == d_n


def s_n(field: FieldProfile, n: int) -> frozenset[int]:
    """The primes dividing the order of the n-th root in K*/F*."""
    return frozenset(p for p, _ in factorize(order_of_zeta(field, n)))


@dataclass(frozen=True)
class SMaxClass:
    """One class of the prime-set partition of quadratic cyclotomic extensions.

    ``presentation`` is the difference mu_M - mu_MF whose elements are the
    roots generating this class's extension; ``cardinality`` its size.
    """

    primes: tuple[int, ...]
    representative_n: int
    minpoly: str
    presentation: Difference
    cardinality: int

    def to_json(self) -> dict:
        return {
            "primes": list(self.primes),
            "representative_n": self.representative_n,
            "minpoly": self.minpoly,
            "presentation": describe(self.presentation),
            "cardinality": self.cardinality,
        }


@dataclass(frozen=True)
class SMaxPartition:
    """The maximal prime sets, each with its moduli presentation."""

    classes: tuple[SMaxClass, ...]

    def to_json(self) -> dict:
        return {"kind": "SMax", "classes": [c.to_json() for c in self.classes]}


def s_max(field: FieldProfile) -> SMaxPartition:
    """The partition of quadratic cyclotomic extensions by maximal prime sets.

    Over F_q there is a single class, with primes those p whose exponent in
    q^2 - 1 exceeds that in q - 1 (every quadratic cyclotomic extension is
    the quadratic field extension); over the rationals the classes are {2}
    (represented by the 4th root) and {3} (represented by the 3rd root).
    """
    if field.is_rational:
        return SMaxPartition(
            (
                SMaxClass(
                    (2,),
                    4,
                    min_poly(field, 4).render(),
                    Difference(
                        InternalProduct((Mu(4), Mu(1))),
                        InternalProduct((Mu(2), Mu(1))),
                    ),
                    2,
                ),
                SMaxClass(
                    (3,),
                    3,
                    min_poly(field, 3).render(),
                    Difference(
                        InternalProduct((Mu(3), Mu(2))),
                        InternalProduct((Mu(1), Mu(2))),
                    ),
                    4,
                ),
            )
        )
    q = field.q
    primes: list[int] = []
    rep = 1
    mu_m_factors: list[MuSubset] = []
    mu_mf_factors: list[MuSubset] = []
    remainder = 1
    for p, e2 in factorize(q * q - 1):
        e1 = eps(q - 1, p)
        if e2 > e1:
            primes.append(p)
            rep *= p ** (e1 + 1)
            mu_m_factors.append(Mu(p**e2))
            mu_mf_factors.append(Mu(p**e1))
        else:
            remainder *= p**e1
    mu_m_factors.append(Mu(remainder))
    mu_mf_factors.append(Mu(remainder))
    presentation = Difference(
        InternalProduct(tuple(mu_m_factors)), InternalProduct(tuple(mu_mf_factors))
    )
    cls = SMaxClass(
        tuple(primes),
        rep,
        min_poly(field, rep).render(),
        presentation,
        (q * q - 1) - (q - 1),
    )
    return SMaxPartition((cls,))


def m2_membership(field: FieldProfile, z: RootOfUnity) -> bool:
    """Whether z generates a quadratic extension of F.

    Computed two independent ways — the kappa-class equaliser route
    (classification datum in F, root not in F) and the direct degree route —
    which must agree; a disagreement raises RuntimeError.
    """
    by_kappa = kappa_class(field, z).in_field and not contains_root(field, z)
    by_degree = is_quadratic(field, z.denominator)
    if by_kappa != by_degree:
        raise RuntimeError(
            f"membership routes disagree at {z}: equaliser {by_kappa}, "
            f"degree {by_degree}"
        )
    return by_degree


def full_moduli(field: FieldProfile) -> ModuliDescription:
    """All roots of unity generating quadratic extensions of F.

    Over F_q this is Mu(q^2-1) - Mu(q-1) with the single class F_(q^2);
    over the rationals, the six primitive roots of orders 3, 4, and 6 in
    two classes.
    """
    if field.is_rational:
        presentation = Union((PrimSet(3), PrimSet(4), PrimSet(6)))
        classes = tuple(
            _class_for(field, cls.primes, cls.representative_n)
            for cls in s_max(field).classes
        )
        return ModuliDescription(KIND_GLOBAL, presentation, 6, classes)
    q = field.q
    partition = s_max(field)
    classes = tuple(
        _class_for(field, cls.primes, cls.representative_n)
        for cls in partition.classes
    )
    return ModuliDescription(
        KIND_GLOBAL,
        Difference(Mu(q * q - 1), Mu(q - 1)),
        (q * q - 1) - (q - 1),
        classes,
    )


@dataclass(frozen=True)
class RationalSquareClass:
    """A square class of the rationals, named by its squarefree kernel."""

    d: int

    @property
    def is_trivial(self) -> bool:
        return self.d == 1

    def __str__(self) -> str:
        return f"square class of {self.d}"

    def to_json(self) -> dict:
        return {"kind": "rational-square-class", "d": self.d}


@dataclass(frozen=True)
class FiniteSquareClass:
    """A square class of F_q (odd q): residue bit plus a witness encoding.

    ``encoding`` is the witness value's integer encoding inside the explicit
    quadratic extension field F_(q^2) built by the oracle (the value itself
    lies in the base field).
    """

    encoding: int
    is_residue: bool

    @property
    def is_trivial(self) -> bool:
        return self.is_residue

    def __str__(self) -> str:
        return "residue class" if self.is_residue else "non-residue class"

    def to_json(self) -> dict:
        return {
            "kind": "finite-square-class",
            "encoding": self.encoding,
            "is_residue": self.is_residue,
        }


@dataclass(frozen=True)
class ArtinSchreierClass:
    """An Artin-Schreier class of F_(2^k): absolute-trace bit plus witness.

    ``encoding`` is the witness's integer encoding inside the explicit
    quadratic extension F_(2^(2k)); the class is nontrivial exactly when
    the trace bit is 1.
    """

    encoding: int
    trace_bit: int

    @property
    def is_trivial(self) -> bool:
        return self.trace_bit == 0

    def __str__(self) -> str:
        return f"Artin-Schreier class with trace bit {self.trace_bit}"

    def to_json(self) -> dict:
        return {
            "kind": "artin-schreier-class",
            "encoding": self.encoding,
            "trace_bit": self.trace_bit,
        }


def _radical_square_sum(field: FieldProfile, n: int) -> RootSum:
    """The square (z - z^yogh)^2 of the radical generator, as a formal sum."""
    k = yogh(field, n).value
    z = canonical(n, 1)
    return RootSum.from_terms(
        [(1, power(z, 2)), (1, power(z, 2 * k)), (-2, power(z, k + 1))]
    )


def chi_rad(field: FieldProfile, n: int) -> RationalSquareClass | FiniteSquareClass:
    """The square class of the radical generator's square (char != 2).

    This is the image of the extension under the classification of quadratic
    extensions by square classes; it must land in a nontrivial class for a
    genuine quadratic extension.
    """
    if field.characteristic == 2:
        raise PreconditionError("square classes require characteristic != 2")
    if not is_quadratic(field, n):
        raise PreconditionError(f"extension by the {n}-th root is not quadratic")
    square = _radical_square_sum(field, n)
    if field.is_rational:
        value = evaluate_sum_rational(square)
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral radical square {value}")
        return RationalSquareClass(squarefree_kernel(int(value)))
    ext = build_field(field.p, 2 * field.k)
    v = evaluate_sum(ext, square)
    if v.is_zero:
        raise ArithmeticError("radical generator squared to zero")
    if v**field.q != v:
        raise ArithmeticError("radical square escaped the base field")
    is_residue = v ** ((field.q - 1) // 2) == ext.one
    return FiniteSquareClass(v.to_int(), is_residue)


def chi_as(field: FieldProfile, n: int) -> ArtinSchreierClass:
    """The Artin-Schreier class norm/trace^2 of the extension (char 2).

    The absolute trace (down to the prime field F_2) of the constant is the
    class invariant; it must be 1 for a genuine quadratic extension.
    """
    if field.characteristic != 2:
        raise PreconditionError("Artin-Schreier classes require characteristic 2")
    if not is_quadratic(field, n):
        raise PreconditionError(f"extension by the {n}-th root is not quadratic")
    k = yogh(field, n).value
    z = canonical(n, 1)
    ext = build_field(2, 2 * field.k)
    trace_val = evaluate_sum(ext, RootSum.of(z, power(z, k)))
    norm_val = evaluate_sum(ext, RootSum.of(power(z, k + 1)))
    if trace_val.is_zero:
        raise ArithmeticError("zero trace in a separable quadratic extension")
    a = norm_val / (trace_val * trace_val)
    if a**field.q != a:
        raise ArithmeticError("Artin-Schreier constant escaped the base field")
    trace = ext.zero
    for i in range(field.k):
        trace = trace + a ** (2**i)
    if trace == ext.zero:
        bit = 0
    elif trace == ext.one:
        bit = 1
    else:  # pragma: no cover - absolute trace lands in the prime field
        raise ArithmeticError("absolute trace outside the prime field")
    return ArtinSchreierClass(a.to_int(), bit)


def quad_moduli_summary(field: FieldProfile) -> dict:
    """Counts of quadratic-extension classes of F itself, by type.

    Finite fields have exactly one separable class (the unique quadratic
    field extension) and no inseparable ones (perfect field); the rationals
    have infinitely many separable classes, indexed by squarefree integers
    other than 1, and none inseparable.
    """
    if field.is_rational:
        return {
            "separable": "indexed by squarefree integers d != 1",
            "inseparable": 0,
        }
    return {"separable": 1, "inseparable": 0}


def inseparable_orbit_related(
    ext: ExplicitField, a: FFElement, aprime: FFElement
) -> bool:
    """The orbit relation for inseparable quadratic classes in char 2:
    a ~ c^2 a' - b^2 for some nonzero c and some b.

    Over the perfect fields supported here this relates every pair (squaring
    is onto), confirming that the inseparable moduli space is empty.
    """
    if ext.p != 2:
        raise PreconditionError("the orbit relation applies in characteristic 2")
    elements = list(ext.elements())
    for c in elements:
        if c.is_zero:
            continue
        for b in elements:
            if a == c * c * aprime - b * b:
                return True
    return False
