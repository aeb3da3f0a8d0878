"""Quadratic cyclotomic extensions: detection, conjugation exponents, minimal
polynomials, generators, and the kappa classification data.

Central objects, for a base field F and a primitive n-th root of unity z
(characteristic coprime to n):

* ``is_quadratic`` — whether adjoining z gives a degree-2 extension;
* ``yogh`` — the conjugation exponent: the unique k mod n, coprime to n,
  such that z + z^k and z^(k+1) both lie in F.  Equivalently, the nontrivial
  automorphism of the extension sends z to z^k.  It is assembled one prime
  power at a time: on each coherent prime-power component of z the nontrivial
  automorphism acts by an explicitly known exponent (fixed for components
  lying in F; inversion for odd components outside F; for the 2-power
  component one of inversion, negated inversion, or multiplication by the
  order-2 root, decided by which cosine-like sum lies in F), and the Chinese
  remainder theorem glues the components into the unique exponent mod n;
* ``min_poly`` — x^2 - (z + z^yogh) x + z^(yogh+1) with symbolic coefficients
  (formal sums of roots of unity), a case tag, a structured display shape,
  and, over finite fields, concrete coefficient values under the oracle
  embedding;
* radical and Artin-Schreier generators for the extension;
* ``t_nF``, property-C2 detection, the nu exponents, and ``kappa_class``,
  the per-element classification datum whose vanishing cuts out exactly the
  degree-2 roots of unity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import PreconditionError
from .field_profile import (
    ExtendedNat,
    FieldProfile,
    Sign,
    contains_root,
    cos_sum_in_field,
    n_F,
    order_of_zeta,
)
from .numtheory import ResidueClass, crt, eps, euler_phi, factorize
from .oracle import (
    MAX_FIELD_SIZE,
    FFElement,
    build_field,
    evaluate_sum,
    evaluate_sum_rational,
)
from .roots import RootOfUnity, RootSum, canonical, identity, multiply, power

__all__ = [
    "ArtinSchreierGenerator",
    "KappaClass",
    "QuadMinPoly",
    "RadicalGenerator",
    "TraceShape",
    "artin_schreier_generator",
    "has_property_C2",
    "is_order_two",
    "is_quadratic",
    "kappa_class",
    "min_poly",
    "nu",
    "nu_plus",
    "radical_generator",
    "t_nF",
    "yogh",
]

# Case tags for the quadratic minimal polynomial, by the order o of the root
# in K*/F*: Radical (o = 2), Odd (o odd), TwoLow (o = 2 * odd > 2),
# TwoHighPlus / TwoHighMinus (4 | o, split by which cosine-like sum of the
# 2-power component lies in F).
CASE_ODD = "Odd"
CASE_TWO_HIGH_PLUS = "TwoHighPlus"
CASE_TWO_LOW = "TwoLow"
CASE_TWO_HIGH_MINUS = "TwoHighMinus"
CASE_RADICAL = "Radical"

BRANCH_PLUS = "PlusBranch"
BRANCH_MINUS = "MinusBranch"
BRANCH_TWO_TIMES = "TwoTimesBranch"


def is_quadratic(field: FieldProfile, n: int) -> bool:
    """Whether adjoining a primitive n-th root of unity has degree 2 over F."""
    if field.is_rational:
        if n < 1:
            raise ValueError(f"order must be positive, got {n}")
        return euler_phi(n) == 2
    if n % field.p == 0 or n < 1:
        # reuse the shared validation for a consistent error
        order_of_zeta(field, n)
    q = field.q
    return (q * q - 1) % n == 0 and (q - 1) % n != 0


def t_nF(field: FieldProfile, n: int) -> int:
    """The multiplicative normalization t of the order of the n-th root.

    Built one prime power at a time from the order o_p of each coherent
    component: odd p contributes p^e when the component is outside F (else 1);
    p = 2 contributes 1, 2, or 2^e according to o_2 = 1, o_2 = 2, or o_2 > 2.
    """
    result = 1
    for p, e in factorize(n):
        o_part = order_of_zeta(field, p**e)
        if p == 2:
            if o_part == 2:
                result *= 2
            elif o_part > 2:
                result *= p**e
        else:
            if o_part != 1:
                result *= p**e
    return result


def _two_part_exponent(field: FieldProfile, e: int) -> int:
    """Action exponent of the nontrivial automorphism on the 2^e component.

    Assumes the ambient extension is quadratic, so the order of the 2-power
    component is 1, 2, or 2^(e-1).  Returns k with sigma(z) = z^k mod 2^e.
    """
    m = 2**e
    o2 = order_of_zeta(field, m)
    if o2 == 1:
        return 1
    if o2 == 2:
        return 1 + m // 2
    if o2 == m // 2 and o2 > 2:
        if cos_sum_in_field(field, m, Sign.PLUS):
            return m - 1
        if cos_sum_in_field(field, m, Sign.MINUS):
            return m // 2 - 1
    raise PreconditionError(
        f"2-power component of order {o2} is incompatible with a quadratic extension"
    )


def yogh(field: FieldProfile, n: int) -> ResidueClass:
    """The conjugation exponent of the primitive n-th root of unity.

    The unique k in [1, n-1] with gcd(k, n) = 1 such that z + z^k and
    z^(k+1) lie in F, assembled per prime-power component and glued by the
    Chinese remainder theorem (see the module docstring).
    """
    if not is_quadratic(field, n):
        raise PreconditionError(f"extension by the {n}-th root is not quadratic")
    residues: list[ResidueClass] = []
    for p, e in factorize(n):
        m = p**e
        if p == 2:
            k = _two_part_exponent(field, e)
        else:
            # Odd components are either inside F (fixed) or fully outside
            # (inverted): an odd prime cannot divide both q-1 and q+1.
            k = 1 if order_of_zeta(field, m) == 1 else m - 1
        residues.append(ResidueClass(k, m))
    result = crt(residues)
    if gcd(result.value, n) != 1:  # pragma: no cover - sanity
        raise ArithmeticError("conjugation exponent not a unit")
    if not contains_root(field, power(canonical(n, 1), result.value + 1)):
        raise ArithmeticError("norm of the conjugate pair escaped the base field")
    return result


def _case_tag(field: FieldProfile, n: int) -> str:
    o = order_of_zeta(field, n)
    if o == 2:
        return CASE_RADICAL
    if o % 2 == 1:
        return CASE_ODD
    if o % 4 != 0:
        return CASE_TWO_LOW
    m = 2 ** eps(n, 2)
    if cos_sum_in_field(field, m, Sign.PLUS):
        return CASE_TWO_HIGH_PLUS
    return CASE_TWO_HIGH_MINUS


@dataclass(frozen=True)
class TraceShape:
    """Structured display form of a quadratic trace: u * (v +- 1/v).

    ``unit_index`` and ``cos_index`` are the orders of the unit factor
    u and the oscillating factor v (taken as canonical exponent classes);
    ``sign`` picks v + 1/v or v - 1/v, and ``norm_sign`` the sign of the
    norm u^2.  The product w = u*v is a primitive root of the full order,
    and the expansion equals exactly the conjugate-pair sum w + w^yogh
    (a Galois translate of the canonical root's pair, not necessarily the
    same pair).
    """

    unit_index: int
    cos_index: int
    sign: int
    norm_sign: int

    def unit_root(self) -> RootOfUnity:
        return canonical(self.unit_index, 1)

    def cos_root(self) -> RootOfUnity:
        return canonical(self.cos_index, 1)

    def expansion(self) -> RootSum:
        """The trace u*v + sign * u/v as a formal sum."""
        u, v = self.unit_root(), self.cos_root()
        return RootSum.from_terms(
            [(1, multiply(u, v)), (self.sign, multiply(u, power(v, -1)))]
        )

    def norm_expansion(self) -> RootSum:
        """The norm norm_sign * u^2 as a formal sum."""
        u = self.unit_root()
        return RootSum.from_terms([(self.norm_sign, power(u, 2))])

    def render(self) -> str:
        op = "+" if self.sign > 0 else "-"
        u, v = self.unit_root(), self.cos_root()
        unit = "" if u == identity else f"{u}*"
        return f"{unit}({v} {op} {v}^-1)"


@dataclass(frozen=True)
class QuadMinPoly:
    """The quadratic minimal polynomial x^2 - trace x + norm of the n-th root.

    ``trace_coeff`` is the formal sum z + z^yogh and ``norm_coeff`` the formal
    single term z^(yogh+1), both for the canonical exponent class z = 1/n.
    ``shape`` carries the per-case display form (None in the radical case,
    where the trace vanishes); ``concrete`` holds the (trace, norm) values in
    an explicit quadratic extension when the field is finite and small enough
    to build.
    """

    n: int
    case_tag: str
    yogh: ResidueClass
    trace_coeff: RootSum
    norm_coeff: RootSum
    shape: TraceShape | None
    concrete: tuple[FFElement, FFElement] | None

    def render(self) -> str:
        return f"x^2 - ({self.trace_coeff})*x + ({self.norm_coeff})"

    def to_json(self) -> dict:
        doc: dict = {
            "n": self.n,
            "case": self.case_tag,
            "yogh": self.yogh.value,
            "trace_symbolic": str(self.trace_coeff),
            "norm_symbolic": str(self.norm_coeff),
        }
        if self.concrete is not None:
            trace, norm = self.concrete
            doc["trace_concrete"] = trace.value_repr()
            doc["norm_concrete"] = norm.value_repr()
        return doc


_SHAPES = {
    CASE_ODD: (1, 1, 1, 1),
    CASE_TWO_LOW: (2, 1, -1, -1),
    CASE_TWO_HIGH_PLUS: (1, 2, 1, 1),
    CASE_TWO_HIGH_MINUS: (1, 2, -1, -1),
}


def min_poly(field: FieldProfile, n: int) -> QuadMinPoly:
    """The minimal polynomial data of the primitive n-th root (degree 2).

    Symbolic coefficients come from the conjugation exponent; over a finite
    field small enough for the explicit oracle embedding (q^2 within the
    size bound) the concrete coefficient values are attached as well.
    """
    k = yogh(field, n)
    tag = _case_tag(field, n)
    z = canonical(n, 1)
    trace = RootSum.of(z, power(z, k.value))
    norm = RootSum.of(power(z, k.value + 1))
    shape: TraceShape | None = None
    if tag != CASE_RADICAL:
        unit_mult, cos_mult, sign, norm_sign = _SHAPES[tag]
        o = order_of_zeta(field, n)
        shape = TraceShape(unit_mult * n_F(field, n), cos_mult * o, sign, norm_sign)
    concrete: tuple[FFElement, FFElement] | None = None
    if not field.is_rational and field.q**2 <= MAX_FIELD_SIZE:
        ext = build_field(field.p, 2 * field.k)
        concrete = (evaluate_sum(ext, trace), evaluate_sum(ext, norm))
    return QuadMinPoly(n, tag, k, trace, norm, shape, concrete)


@dataclass(frozen=True)
class RadicalGenerator:
    """A radical generator of the quadratic extension (characteristic != 2).

    The element z - z^yogh has trace zero, so its square lies in F and
    x^2 - square is its defining polynomial.  ``square_value`` is the exact
    rational value over the rationals, a concrete field element over a finite
    field within the oracle size bound, and None otherwise.
    """

    expression: RootSum
    square: RootSum
    square_value: Fraction | FFElement | None


def radical_generator(field: FieldProfile, n: int) -> RadicalGenerator:
    """The radical generator z - z^yogh and its square (char != 2)."""
    if field.characteristic == 2:
        raise PreconditionError("radical generators require characteristic != 2")
    k = yogh(field, n).value
    z = canonical(n, 1)
    expression = RootSum.from_terms([(1, z), (-1, power(z, k))])
    square = RootSum.from_terms(
        [(1, power(z, 2)), (1, power(z, 2 * k)), (-2, power(z, k + 1))]
    )
    value: Fraction | FFElement | None
    if field.is_rational:
        value = evaluate_sum_rational(square)
    elif field.q**2 <= MAX_FIELD_SIZE:
        value = evaluate_sum(build_field(field.p, 2 * field.k), square)
    else:
        value = None
    return RadicalGenerator(expression, square, value)


@dataclass(frozen=True)
class ArtinSchreierGenerator:
    """An Artin-Schreier generator of the quadratic extension (char 2).

    The element y = z / (z + z^yogh) satisfies y^2 - y + a = 0 with
    a = norm / trace^2; both y and a are returned as concrete values in the
    explicit quadratic extension (a lies in the base field).
    """

    numerator: RootOfUnity
    denominator: RootSum
    element: FFElement
    constant: FFElement


def artin_schreier_generator(field: FieldProfile, n: int) -> ArtinSchreierGenerator:
    """The Artin-Schreier generator z/(z + z^yogh) and its constant (char 2)."""
    if field.characteristic != 2:
        raise PreconditionError("Artin-Schreier generators require characteristic 2")
    k = yogh(field, n).value
    z = canonical(n, 1)
    trace = RootSum.of(z, power(z, k))
    norm = RootSum.of(power(z, k + 1))
    ext = build_field(field.p, 2 * field.k)
    trace_val = evaluate_sum(ext, trace)
    if trace_val.is_zero:
        raise PreconditionError("zero trace: no Artin-Schreier generator")
    element = evaluate_sum(ext, RootSum.of(z)) / trace_val
    constant = evaluate_sum(ext, norm) / (trace_val * trace_val)
    return ArtinSchreierGenerator(z, trace, element, constant)


def is_order_two(field: FieldProfile, n: int) -> bool:
    """Whether the n-th root has order exactly 2 in K*/F* (radical case)."""
    return order_of_zeta(field, n) == 2


def has_property_C2(field: FieldProfile) -> int | None:
    """The unique e with the 2^e root outside F, its t-value not 2, and the
    minus sum inside F — or None when no such exponent exists.

    Characteristic 2 always yields None (the two cosine-like sums coincide).
    The search is bounded: beyond the 2-adic valuation of q^2 - 1 plus one
    (3 over the rationals) the minus-sum condition forces a degree above 2.
    """
    if field.characteristic == 2:
        return None
    bound = 3 if field.is_rational else eps(field.q**2 - 1, 2) + 1
    found: list[int] = []
    for e in range(2, bound + 1):
        m = 2**e
        o = order_of_zeta(field, m)
        if o > 2 and cos_sum_in_field(field, m, Sign.MINUS):
            found.append(e)
    if len(found) > 1:  # pragma: no cover - the witness exponent is unique
        raise ArithmeticError(f"multiple order-2 witnesses {found}")
    return found[0] if found else None


def nu_plus(field: FieldProfile, p: int) -> ExtendedNat:
    """The largest k such that the plus sum at t(p^k) lies in F.

    Over the rationals the closed form is 2, 1, 0 for p = 2, 3, and larger
    primes; over a finite field the ascending search is bounded by the p-adic
    valuation of q^2 - 1 plus one, beyond which membership is impossible.
    """
    if not field.is_rational and p == field.p:
        raise PreconditionError(f"p equals the characteristic {p}")
    if field.is_rational:
        return ExtendedNat.finite({2: 2, 3: 1}.get(p, 0))
    bound = eps(field.q**2 - 1, p) + 1
    best = 0
    for k in range(1, bound + 1):
        t = t_nF(field, p**k)
        if cos_sum_in_field(field, t, Sign.PLUS):
            best = k
    return ExtendedNat.finite(best)


def nu(field: FieldProfile, p: int) -> ExtendedNat:
    """The p-power moduli exponent: nu_plus, plus one exactly when p = 2 and
    the field has the order-2 minus-sum property."""
    base = nu_plus(field, p)
    if p == 2 and has_property_C2(field) is not None:
        return ExtendedNat.finite(base.finite_value() + 1)
    return base


@dataclass(frozen=True)
class KappaClass:
    """The kappa classification datum of a root of unity.

    ``branch`` records which of the three representative shapes applies,
    ``representative`` is the formal sum whose class in F(mu_inf)/F is
    tested, and ``in_field`` is the result of that test.
    """

    branch: str
    representative: RootSum
    in_field: bool


def _sum_in_field(field: FieldProfile, s: RootSum) -> bool:
    """Membership of a formal sum's value in F, by automorphism invariance.

    Over a finite field the sum must be fixed by the exponent map z -> z^q;
    over the rationals it must be fixed by every unit exponent map modulo the
    lcm of the orders involved.  Exact for sums of at most two distinct roots
    whose difference is not itself a root of unity (the only shapes produced
    here).
    """
    if s.is_zero:
        return True
    if field.is_rational:
        big = s.lcm_order()
        return all(
            s.map_exponent(m) == s for m in range(1, big + 1) if gcd(m, big) == 1
        )
    return s.map_exponent(field.q) == s


def kappa_class(field: FieldProfile, z: RootOfUnity) -> KappaClass:
    """The kappa classification datum of the root of unity z.

    Branch selection, for n the primitive order of z, e the 2-adic valuation
    of n, and t = t_nF(n): the two-times branch when the 2^e component has
    order exactly 2; otherwise the minus branch when e equals the order-2
    minus-sum exponent of the field; otherwise the plus branch.
    """
    n = z.denominator
    t = t_nF(field, n)
    e = eps(n, 2)
    zt = canonical(t, 1)
    o2 = order_of_zeta(field, 2**e)
    if o2 == 2:
        z2 = canonical(2**e, 1)
        rep = RootSum.from_terms(
            [(1, multiply(z2, zt)), (-1, multiply(z2, power(zt, -1)))]
        )
        return KappaClass(BRANCH_TWO_TIMES, rep, _sum_in_field(field, rep))
    c2 = has_property_C2(field)
    if c2 is not None and e == c2:
        rep = RootSum.from_terms([(1, zt), (-1, power(zt, -1))])
        return KappaClass(BRANCH_MINUS, rep, cos_sum_in_field(field, t, Sign.MINUS))
    rep = RootSum.from_terms([(1, zt), (1, power(zt, -1))])
    return KappaClass(BRANCH_PLUS, rep, cos_sum_in_field(field, t, Sign.PLUS))
