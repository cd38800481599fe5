"""Exact rational scalars and shifted-factorial building blocks.

Every closed form in this package is a rational number, so all core
arithmetic runs on arbitrary-precision `fractions.Fraction` values
(canonical reduced form, positive denominator, no rounding).  This module
adds the ingredients the formulas are assembled from: rising factorials,
finite and infinite q-shifted factorials, and a logarithm that is safe for
rationals whose numerator or denominator would overflow a float.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple, Optional, Union

from .errors import DomainError

# Exact rational scalar.  Fraction already guarantees the invariants we
# need: denominator > 0 and gcd(|num|, den) = 1 after every operation.
Rational = Fraction

RationalLike = Union[Rational, int, str]


class FloatApprox(NamedTuple):
    """A float together with a rigorous absolute error bound.

    ``abs_error_bound`` is None when no rigorous bound is tracked (the
    value is then a heuristic estimate only).
    """

    value: float
    abs_error_bound: Optional[float]


def as_rational(x: RationalLike) -> Rational:
    """Coerce an int, "p/q" string, or Fraction to an exact Rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise DomainError(f"not an exact rational: {x!r}")


def format_rational(r: Rational) -> str:
    """Serialize to the "p/q" wire form ("p" when the value is integral)."""
    return str(as_rational(r))


def parse_rational(text: str) -> Rational:
    """Inverse of :func:`format_rational`; round-trips bit-exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"invalid rational literal {text!r}") from exc


def pochhammer(z: RationalLike, n: int) -> Rational:
    """Rising factorial z (z+1) ... (z+n-1), with the empty product = 1."""
    if n < 0:
        raise DomainError("pochhammer is defined here for n >= 0 only")
    z = as_rational(z)
    acc = Fraction(1)
    for j in range(n):
        acc *= z + j
    return acc


def q_pochhammer(a: RationalLike, q: RationalLike, m: int) -> Rational:
    """Finite q-shifted factorial: product of (1 - a q^j) for j = 0..m-1."""
    if m < 0:
        raise DomainError("q_pochhammer is defined here for m >= 0 only")
    a = as_rational(a)
    q = as_rational(q)
    acc = Fraction(1)
    power = Fraction(1)
    for _ in range(m):
        acc *= 1 - a * power
        power *= q
    return acc


def q_pochhammer_infinite(
    a: RationalLike, q: RationalLike, target_abs_error: float
) -> FloatApprox:
    """Infinite product of (1 - a q^m), m >= 0, as a certified float.

    The partial product over m < M is computed exactly in rational
    arithmetic and rounded once.  The tail satisfies
    |log prod_{m>=M} (1 - a q^m)| <= |a| q^M / ((1-q)(1-|a|)),
    so M is grown until |P_M| (exp(tail) - 1), plus one rounding ulp,
    drops below ``target_abs_error``; that quantity is returned as the
    error bound.
    """
    a = as_rational(a)
    q = as_rational(q)
    if not Fraction(0) < q < Fraction(1):
        raise DomainError("q must lie strictly between 0 and 1")
    if abs(a) >= 1:
        raise DomainError("the infinite product needs |a| < 1")
    if not target_abs_error > 0:
        raise DomainError("target_abs_error must be positive")
    if a == 0:
        return FloatApprox(1.0, 0.0)

    qf = float(q)
    c = float(abs(a)) / ((1.0 - qf) * (1.0 - float(abs(a))))

    partial = Fraction(1)
    power = Fraction(1)  # q^m
    m = 0
    while True:
        tail = c * qf**m
        value = float(partial)
        err = abs(value) * (math.expm1(tail) + 2.0**-52) if tail < 1.0 else math.inf
        if err <= target_abs_error:
            return FloatApprox(value, err)
        # extend the exact partial product in blocks
        for _ in range(16):
            partial *= 1 - a * power
            power *= q
            m += 1
        if m > 1_000_000:  # unreachable for sane targets; guards nontermination
            raise DomainError("target_abs_error too small to certify")


def log_abs(r: RationalLike) -> float:
    """Natural log of |r|, safe for huge numerators and denominators.

    math.log on a Python int splits off the binary exponent internally,
    so ln|num| - ln(den) never overflows no matter the bit length.
    """
    r = as_rational(r)
    if r == 0:
        raise DomainError("log_abs is undefined at 0")
    return math.log(abs(r.numerator)) - math.log(r.denominator)
