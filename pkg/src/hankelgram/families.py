"""The four moment families and their orthonormal-polynomial data.

Each family fixes a probability measure through an explicit rational
moment sequence and exposes the rows of its orthonormal polynomials
p_n(x) = sum_k a_{n,k} x^k in the split form a_{n,k} = sqrt(r_n) * b_{n,k}
with r_n > 0 and b_{n,k} rational.  Determinants, inverses and squared
evaluations built from the rows then stay inside exact rational
arithmetic.

Families:

* ``laguerre``  - moments (alpha+1)_n, Laguerre weight on [0, inf).
* ``jacobi``    - moments (alpha+1)_n / (alpha+beta+2)_n, the Jacobi
  weight moved to [0, 1] (alpha = beta = 0 gives the Hilbert matrix).
* ``qlaguerre`` - moments (t;q)_n q^(-binom(n,2)) t^(-n), the q-Laguerre
  ladder measure written in (q, t).  t plays the role of q^(alpha+1) but
  is an independent rational in (0, 1), which keeps every formula exact:
  q^alpha alone would be irrational for fractional alpha.
* ``qpoch``     - moments (t;q)_n, obtained from qlaguerre by inverting
  q and conjugating with the alternating-sign diagonal.

All values are immutable; every function is pure and cached.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

from .errors import DomainError
from .scalars import Rational, RationalLike, as_rational, pochhammer, q_pochhammer

LAGUERRE = "laguerre"
JACOBI = "jacobi"
QLAGUERRE = "qlaguerre"
QPOCH = "qpoch"

_KINDS = (LAGUERRE, JACOBI, QLAGUERRE, QPOCH)


@dataclass(frozen=True)
class Family:
    """Tagged, validated parameter set selecting one moment family."""

    kind: str
    alpha: Optional[Rational] = None
    beta: Optional[Rational] = None
    q: Optional[Rational] = None
    t: Optional[Rational] = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise DomainError(f"unknown family kind {self.kind!r}")
        if self.kind == LAGUERRE:
            self._need(alpha=True)
        elif self.kind == JACOBI:
            self._need(alpha=True, beta=True)
        else:
            self._need(q=True, t=True)

    def _need(self, alpha: bool = False, beta: bool = False, q: bool = False, t: bool = False) -> None:
        if alpha:
            if self.alpha is None or self.alpha <= -1:
                raise DomainError("alpha must exceed -1")
        if beta:
            if self.beta is None or self.beta <= -1:
                raise DomainError("beta must exceed -1")
        if q:
            if self.q is None or not Fraction(0) < self.q < Fraction(1):
                raise DomainError("q must lie strictly between 0 and 1")
        if t:
            if self.t is None or not Fraction(0) < self.t < Fraction(1):
                raise DomainError("t must lie strictly between 0 and 1")

    @classmethod
    def laguerre(cls, alpha: RationalLike) -> "Family":
        return cls(LAGUERRE, alpha=as_rational(alpha))

    @classmethod
    def jacobi(cls, alpha: RationalLike, beta: RationalLike) -> "Family":
        return cls(JACOBI, alpha=as_rational(alpha), beta=as_rational(beta))

    @classmethod
    def qlaguerre(cls, q: RationalLike, t: RationalLike) -> "Family":
        return cls(QLAGUERRE, q=as_rational(q), t=as_rational(t))

    @classmethod
    def qpoch(cls, q: RationalLike, t: RationalLike) -> "Family":
        return cls(QPOCH, q=as_rational(q), t=as_rational(t))

    @classmethod
    def parse(cls, text: str) -> "Family":
        """Parse the CLI form, e.g. ``laguerre:alpha=1/2`` or ``qpoch:q=1/2,t=1/4``."""
        head, sep, tail = text.strip().partition(":")
        kind = head.strip().lower()
        if kind not in _KINDS:
            raise DomainError(
                f"unknown family {head!r}; expected one of {', '.join(_KINDS)}"
            )
        params = {}
        if sep:
            for item in tail.split(","):
                if not item.strip():
                    continue
                key, eq, value = item.partition("=")
                if not eq:
                    raise DomainError(f"malformed parameter {item!r}; expected key=value")
                try:
                    params[key.strip().lower()] = Fraction(value.strip())
                except (ValueError, ZeroDivisionError) as exc:
                    raise DomainError(f"invalid rational literal {value!r}") from exc
        expected = {LAGUERRE: {"alpha"}, JACOBI: {"alpha", "beta"}}.get(kind, {"q", "t"})
        if set(params) != expected:
            raise DomainError(
                f"family {kind} needs parameters {sorted(expected)}, got {sorted(params)}"
            )
        return cls(kind, **params)

    def spec(self) -> str:
        """The canonical text form (inverse of :meth:`parse`)."""
        if self.kind == LAGUERRE:
            return f"laguerre:alpha={self.alpha}"
        if self.kind == JACOBI:
            return f"jacobi:alpha={self.alpha},beta={self.beta}"
        return f"{self.kind}:q={self.q},t={self.t}"

    def __str__(self) -> str:
        return self.spec()


class CoeffRow(NamedTuple):
    """Row n of the orthonormal coefficients, split exactly.

    The orthonormal coefficient is a_{n,k} = sqrt(radicand) * coeffs[k];
    radicand > 0 and the leading coefficient coeffs[n] is nonzero.
    """

    n: int
    radicand: Rational
    coeffs: tuple[Rational, ...]


class EvalData(NamedTuple):
    """Exact squared value p_n(-1)^2 of the n-th orthonormal polynomial."""

    n: int
    square: Rational


def _check_index(n: int) -> None:
    if n < 0:
        raise DomainError("the row/moment index must be >= 0")


@lru_cache(maxsize=None)
def moment(fam: Family, n: int) -> Rational:
    """Exact n-th moment of the family's measure (moment 0 is always 1)."""
    _check_index(n)
    if fam.kind == LAGUERRE:
        return pochhammer(fam.alpha + 1, n)
    if fam.kind == JACOBI:
        return pochhammer(fam.alpha + 1, n) / pochhammer(fam.alpha + fam.beta + 2, n)
    if fam.kind == QLAGUERRE:
        return q_pochhammer(fam.t, fam.q, n) * fam.q ** (-(n * (n - 1) // 2)) * fam.t ** (-n)
    return q_pochhammer(fam.t, fam.q, n)


@lru_cache(maxsize=None)
def coeff_row(fam: Family, n: int) -> CoeffRow:
    """Exact (radicand, coefficients) split of orthonormal row n.

    The global sign (-1)^n is folded into the coefficient vector, so the
    rows match the classical normalizations sign for sign; it cancels in
    every determinant, inverse, and squared evaluation.
    """
    _check_index(n)
    sign = Fraction(-1 if n % 2 else 1)

    if fam.kind == LAGUERRE:
        a1 = fam.alpha + 1
        radicand = pochhammer(a1, n) / math.factorial(n)
        coeffs = [sign]
        c = sign
        for k in range(1, n + 1):
            # next factor of (-n)_k / ((alpha+1)_k k!)
            c *= Fraction(k - 1 - n) / ((a1 + (k - 1)) * k)
            coeffs.append(c)
        return CoeffRow(n, radicand, tuple(coeffs))

    if fam.kind == JACOBI:
        a, b = fam.alpha, fam.beta
        s = a + b  # alpha+beta can be -1 on the working grid, hence the
        # cancelled product (s+2)_{n-1} instead of (s+1)_n / (s+1)
        if n == 0:
            radicand = Fraction(1)
        else:
            radicand = (
                (2 * n + s + 1)
                * pochhammer(a + 1, n)
                * pochhammer(s + 2, n - 1)
                / (pochhammer(b + 1, n) * math.factorial(n))
            )
        coeffs = [sign]
        c = sign
        for k in range(1, n + 1):
            # next factor of (-n)_k (n+alpha+beta+1)_k / ((alpha+1)_k k!)
            c *= Fraction(k - 1 - n) * (n + s + k) / ((a + k) * k)
            coeffs.append(c)
        return CoeffRow(n, radicand, tuple(coeffs))

    q, t = fam.q, fam.t
    if fam.kind == QLAGUERRE:
        radicand = q_pochhammer(t, q, n) * q**n / q_pochhammer(q, q, n)
    else:  # QPOCH
        radicand = q_pochhammer(t, q, n) / (q_pochhammer(q, q, n) * t**n)
    coeffs = [sign]
    c = sign
    for k in range(1, n + 1):
        shifted = 1 - q ** (k - 1 - n)  # next factor of (q^-n; q)_k
        denom = (1 - q**k) * (1 - t * q ** (k - 1))
        if fam.kind == QLAGUERRE:
            c *= shifted * q**k * q ** (n - 1) * t / denom
        else:
            c *= shifted * q / denom
        coeffs.append(c)
    return CoeffRow(n, radicand, tuple(coeffs))


@lru_cache(maxsize=None)
def eval_sq(fam: Family, n: int) -> EvalData:
    """p_n(-1)^2, exactly, in the family's natural variable."""
    row = coeff_row(fam, n)
    total = Fraction(0)
    for k, c in enumerate(row.coeffs):
        total += c if k % 2 == 0 else -c
    return EvalData(n, row.radicand * total * total)


def eval_sq_closed_qlaguerre(q: RationalLike, t: RationalLike, m: int) -> Rational:
    """Closed form q^m / ((q;q)_m (t;q)_m) for the qlaguerre p_m(-1)^2.

    This is the confluent q-hypergeometric evaluation of the row sum; the
    package validates it against :func:`eval_sq` at finite instances.
    """
    _check_index(m)
    q = as_rational(q)
    t = as_rational(t)
    if not Fraction(0) < q < Fraction(1):
        raise DomainError("q must lie strictly between 0 and 1")
    if not Fraction(0) < t < Fraction(1):
        raise DomainError("t must lie strictly between 0 and 1")
    return q**m / (q_pochhammer(q, q, m) * q_pochhammer(t, q, m))


def check_sign_condition(fam: Family, n: int) -> bool:
    """True iff rows 0..n each have one sign at the bound point -1.

    Checks that the nonzero values among b_{m,k} (-1)^k share a sign for
    every m <= n; the positive square root sqrt(r_m) never matters.
    """
    _check_index(n)
    for m in range(n + 1):
        row = coeff_row(fam, m)
        seen = 0
        for k, c in enumerate(row.coeffs):
            if c == 0:
                continue
            s = 1 if (c > 0) == (k % 2 == 0) else -1
            if seen == 0:
                seen = s
            elif s != seen:
                return False
    return True
