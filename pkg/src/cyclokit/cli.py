"""Batch command-line surface emitting JSON reports.

Commands:

* ``analyze --field S --n N`` — full classification data of the n-th root
  over the field: degree, orders, conjugation exponent, case tag, symbolic
  and concrete minimal polynomial, generators, kappa branch.
* ``moduli --field S [--prime P]`` — the global (or per-prime) moduli of
  quadratic cyclotomic extensions.
* ``verify --field S [--max-n N]`` — formula-vs-brute-force comparison over
  an explicit finite field; any disagreement is listed and fails the run.
* ``classify --field S`` — the prime-set partition and the embedding data
  into the field's quadratic-extension classes.

Exit codes: 0 success, 1 verification mismatches, 2 usage/parse errors,
3 unmet mathematical preconditions, 4 size bounds exceeded.  The environment
variable CYCLOKIT_MAX_Q (default 1024) caps the field size for which the
brute-force oracle is consulted.
"""

from __future__ import annotations

import functools
import json
import os
import sys
from dataclasses import dataclass, field as dataclass_field

import click

from . import moduli as moduli_mod
from . import oracle, quadcyclo
from .errors import PreconditionError, SizeBoundError
from .field_profile import (
    FieldProfile,
    ell,
    n_F,
    order_of_zeta,
    parse_field,
    render_field,
)
from .numtheory import euler_phi, factorize, is_prime, mult_order
from .roots import canonical

DEFAULT_MAX_Q = 1024


def _max_q() -> int:
    raw = os.environ.get("CYCLOKIT_MAX_Q", "")
    return int(raw) if raw.strip() else DEFAULT_MAX_Q


@dataclass
class Report:
    """One command's JSON-serializable result envelope."""

    command: str
    field: str
    results: dict
    oracle_checked: bool = False
    mismatches: list = dataclass_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "field": self.field,
            "results": self.results,
            "oracle_checked": self.oracle_checked,
            "mismatches": self.mismatches,
        }


def _emit(report: Report) -> None:
    click.echo(json.dumps(report.to_json(), indent=2))
    if report.mismatches:
        sys.exit(1)


def _parse_field_arg(spec: str) -> FieldProfile:
    try:
        return parse_field(spec)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def _math_errors(fn):
    """Map domain errors to the documented exit codes 3 and 4."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except SizeBoundError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(4)
        except PreconditionError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)

    return wrapper


def _oracle_allowed(field: FieldProfile) -> bool:
    return (
        not field.is_rational
        and field.q <= _max_q()
        and field.q**2 <= oracle.MAX_FIELD_SIZE
    )


def _divisors(m: int) -> list[int]:
    divs = [1]
    for p, e in factorize(m):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def _degree(field: FieldProfile, n: int) -> int:
    n_F(field, n)  # validates positivity and coprimality to the characteristic
    if field.is_rational:
        return euler_phi(n)
    return mult_order(field.q, n)


def _render_int_poly(c0: int, c1: int) -> str:
    parts = ["x^2"]
    if c1:
        mag = abs(c1)
        parts.append(f"{'-' if c1 < 0 else '+'} {'x' if mag == 1 else f'{mag}*x'}")
    if c0:
        parts.append(f"{'-' if c0 < 0 else '+'} {abs(c0)}")
    return " ".join(parts)


def _kappa_json(field: FieldProfile, n: int) -> dict:
    kc = quadcyclo.kappa_class(field, canonical(n, 1))
    return {
        "branch": kc.branch,
        "representative": str(kc.representative),
        "in_field": kc.in_field,
    }


def _generator_json(field: FieldProfile, n: int) -> dict:
    if field.characteristic == 2:
        gen = quadcyclo.artin_schreier_generator(field, n)
        return {
            "type": "artin-schreier",
            "numerator": str(gen.numerator),
            "denominator": str(gen.denominator),
            "element_encoding": gen.element.to_int(),
            "constant_encoding": gen.constant.to_int(),
        }
    gen = quadcyclo.radical_generator(field, n)
    doc: dict = {
        "type": "radical",
        "expression": str(gen.expression),
        "square": str(gen.square),
    }
    if gen.square_value is not None:
        value = gen.square_value
        doc["square_value"] = (
            str(value) if field.is_rational else value.value_repr()
        )
    return doc


@click.group()
def main() -> None:
    """Quadratic cyclotomic extensions: classification, moduli, verification."""


@main.command()
@click.option("--field", "field_spec", required=True, metavar="FIELD",
              help="Base field: 'Q', 'q:<p>', or 'q:<p>^<k>'.")
@click.option("--n", "n", required=True, type=click.IntRange(min=1),
              help="Order of the root of unity to analyze.")
@_math_errors
def analyze(field_spec: str, n: int) -> None:
    """Classification data of the n-th root of unity over the field."""
    field = _parse_field_arg(field_spec)
    degree = _degree(field, n)
    results: dict = {
        "n": n,
        "degree": degree,
        "quadratic": degree == 2,
        "in_field": degree == 1,
        "n_F": n_F(field, n),
        "order_of_zeta": order_of_zeta(field, n),
    }
    report = Report("analyze", render_field(field), results)
    if degree == 2:
        poly = quadcyclo.min_poly(field, n)
        results["t_nF"] = quadcyclo.t_nF(field, n)
        results["min_poly"] = poly.to_json()
        results["min_poly_rendered"] = poly.render()
        if poly.shape is not None:
            results["trace_shape"] = poly.shape.render()
        results["generator"] = _generator_json(field, n)
        results["kappa"] = _kappa_json(field, n)
        if field.is_rational:
            c0, c1, _ = oracle.rational_min_poly(n)
            results["integer_min_poly"] = _render_int_poly(c0, c1)
            report.oracle_checked = True
        elif _oracle_allowed(field):
            trace, norm = oracle.brute_min_poly(field.p, field.k, n)
            if poly.concrete != (trace, norm):
                report.mismatches.append(
                    {"n": n, "check": "min_poly_concrete"}
                )
            if field.q % n != poly.yogh.value % n:
                report.mismatches.append({"n": n, "check": "yogh_frobenius"})
            report.oracle_checked = True
    _emit(report)


@main.command("moduli")
@click.option("--field", "field_spec", required=True, metavar="FIELD",
              help="Base field: 'Q', 'q:<p>', or 'q:<p>^<k>'.")
@click.option("--prime", "prime", type=click.IntRange(min=2), default=None,
              help="Restrict to p-power roots of unity.")
@_math_errors
def moduli_command(field_spec: str, prime: int | None) -> None:
    """Moduli of quadratic cyclotomic extensions (global or per-prime)."""
    field = _parse_field_arg(field_spec)
    if prime is not None and not is_prime(prime):
        raise click.UsageError(f"--prime must be prime, got {prime}")
    if prime is not None:
        results = {
            "per_prime": moduli_mod.m2p(field, prime).to_json(),
            "nu": quadcyclo.nu(field, prime).to_json(),
            "nu_plus": quadcyclo.nu_plus(field, prime).to_json(),
            "ell": ell(field, prime).to_json(),
        }
        if prime == 2:
            results["c2"] = quadcyclo.has_property_C2(field)
    else:
        results = {
            "full_moduli": moduli_mod.full_moduli(field).to_json(),
            "s_max": moduli_mod.s_max(field).to_json(),
            "order_two": moduli_mod.g2(field).to_json(),
        }
    _emit(Report("moduli", render_field(field), results))


@main.command()
@click.option("--field", "field_spec", required=True, metavar="FIELD",
              help="Finite base field: 'q:<p>' or 'q:<p>^<k>'.")
@click.option("--max-n", "max_n", type=click.IntRange(min=1), default=None,
              help="Check orders up to this bound (default: q^2 - 1).")
@_math_errors
def verify(field_spec: str, max_n: int | None) -> None:
    """Compare every formula against the brute-force oracle."""
    field = _parse_field_arg(field_spec)
    if field.is_rational:
        raise PreconditionError("verify requires a finite field")
    if field.q > _max_q():
        raise SizeBoundError(
            f"field size {field.q} exceeds CYCLOKIT_MAX_Q={_max_q()}"
        )
    if field.q**2 > oracle.MAX_FIELD_SIZE:
        raise SizeBoundError(
            f"quadratic extension size {field.q}^2 exceeds {oracle.MAX_FIELD_SIZE}"
        )
    q = field.q
    bound = q * q - 1 if max_n is None else max_n
    mismatches: list[dict] = []
    checked = 0
    for n in _divisors(q * q - 1):
        if n > bound:
            break
        checked += 1
        order_formula = order_of_zeta(field, n)
        order_brute = oracle.brute_order(field.p, field.k, n)
        if order_formula != order_brute:
            mismatches.append(
                {"n": n, "check": "order", "formula": order_formula,
                 "oracle": order_brute}
            )
        quadratic_formula = quadcyclo.is_quadratic(field, n)
        quadratic_brute = (q * q - 1) % n == 0 and (q - 1) % n != 0
        try:
            membership = moduli_mod.m2_membership(field, canonical(n, 1))
        except RuntimeError as exc:
            mismatches.append({"n": n, "check": "equaliser", "detail": str(exc)})
            membership = quadratic_formula
        if not (quadratic_formula == quadratic_brute == membership):
            mismatches.append(
                {"n": n, "check": "quadratic", "formula": quadratic_formula,
                 "oracle": quadratic_brute, "equaliser": membership}
            )
        if moduli_mod.g2_membership(field, canonical(n, 1)) != (order_brute == 2):
            mismatches.append({"n": n, "check": "order_two"})
        if quadratic_formula:
            poly = quadcyclo.min_poly(field, n)
            if poly.yogh.value != q % n:
                mismatches.append(
                    {"n": n, "check": "yogh_frobenius", "formula": poly.yogh.value,
                     "oracle": q % n}
                )
            if poly.concrete != oracle.brute_min_poly(field.p, field.k, n):
                mismatches.append({"n": n, "check": "min_poly_concrete"})
    results = {"max_n": bound, "orders_checked": checked}
    _emit(Report("verify", render_field(field), results, True, mismatches))


@main.command()
@click.option("--field", "field_spec", required=True, metavar="FIELD",
              help="Base field: 'Q', 'q:<p>', or 'q:<p>^<k>'.")
@_math_errors
def classify(field_spec: str) -> None:
    """Prime-set partition and quadratic-extension embedding data."""
    field = _parse_field_arg(field_spec)
    partition = moduli_mod.s_max(field)
    primes = sorted({p for cls in partition.classes for p in cls.primes})
    results: dict = {
        "kind": "rational" if field.is_rational else "finite",
        "characteristic": field.characteristic,
        "s_max": partition.to_json(),
        "order_two": moduli_mod.g2(field).to_json(),
        "quad_moduli_summary": moduli_mod.quad_moduli_summary(field),
        "nu": {str(p): quadcyclo.nu(field, p).to_json() for p in primes},
    }
    if not field.is_rational:
        results["q"] = field.q
    if field.characteristic != 2:
        results["c2"] = quadcyclo.has_property_C2(field)
    _emit(Report("classify", render_field(field), results))


if __name__ == "__main__":
    main()
