"""Closed forms for the polylogarithm at orders 0, -1, -2, ... and kin.

At non-positive integer order the polylogarithm is a rational function of
its argument.  This module constructs it by two independent routes:

* ``li_neg_operator``: apply the derivation ``z d/dz`` n times to
  ``z/(1 - z)``;
* ``li_neg_stirling``: the exact sum over k of
  ``k! {n+1 brace k+1} (z/(1-z))**(k+1)``.

Both are kept public permanently; their exact agreement is the library's
core trust story.  The odd part (Legendre chi) and the alternating odd part
(inverse tangent integral) get direct closed forms from the type-B Eulerian
row, plus cross-construction routes from the polylogarithm itself.  A
truncated-series evaluator serves as the numeric oracle inside the unit
disk.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    GaussianRational,
    Polynomial,
    RationalFunction,
    substitute,
    z_ddz,
)
from .combinatorics import eulerian_b_row, factorial, stirling2_row
from .errors import DomainError, NonConvergenceError

__all__ = [
    "PolylogClosedForm",
    "li_neg",
    "li_neg_operator",
    "li_neg_stirling",
    "chi_neg",
    "ti_neg",
    "chi_from_li",
    "ti_from_chi",
    "li_series_eval",
    "SERIES_TERM_CAP",
]

SERIES_TERM_CAP = 10**6

_LI_CACHE: dict[int, RationalFunction] = {}
_CHI_CACHE: dict[int, RationalFunction] = {}
_TI_CACHE: dict[int, RationalFunction] = {}


@dataclass(frozen=True)
class PolylogClosedForm:
    """A closed form together with the route that produced it."""

    order: int
    function: RationalFunction
    construction: str  # operator | stirling | chi_closed | ti_closed | li_difference


def _li_base() -> RationalFunction:
    return RationalFunction(Polynomial.variable(), Polynomial([1, -1]))


_LI_NUM_CACHE: dict[int, Polynomial] = {}


def _li_numerator(n: int) -> Polynomial:
    """Numerator P_n of the closed form over (1 - z)**(n+1).

    Writing the order step as a polynomial recurrence,
    P_0 = z and P_{m+1} = z (P_m' (1 - z) + (m+1) P_m), avoids re-reducing
    the quotient-rule denominator at every order.  P_n(1) = n! != 0, so the
    pair is coprime by construction.
    """
    p = _LI_NUM_CACHE.get(n)
    if p is None:
        if n == 0:
            p = Polynomial.variable()
        else:
            prev = _li_numerator(n - 1)
            p = Polynomial.variable() * (
                prev.derivative() * Polynomial([1, -1]) + prev.scale(n)
            )
        _LI_NUM_CACHE[n] = p
    return p


def li_neg(n: int) -> RationalFunction:
    """Memoized canonical closed form of the order -n polylogarithm.

    Exact equality with both public construction routes is part of the test
    suite; this accessor just builds it the cheapest way.
    """
    if n < 0:
        raise ValueError("order index n must be >= 0")
    f = _LI_CACHE.get(n)
    if f is None:
        f = RationalFunction(
            _li_numerator(n), Polynomial([1, -1]) ** (n + 1), _reduced=True
        )
        _LI_CACHE[n] = f
    return f


def li_neg_operator(n: int) -> RationalFunction:
    """Closed form by n applications of z d/dz to z/(1-z), computed afresh."""
    if n < 0:
        raise ValueError("order index n must be >= 0")
    f = _li_base()
    for _ in range(n):
        f = z_ddz(f)
    return f


def li_neg_stirling(n: int) -> RationalFunction:
    """Closed form by the Stirling-weighted sum of powers of z/(1-z)."""
    if n < 0:
        raise ValueError("order index n must be >= 0")
    base = _li_base()
    row = stirling2_row(n + 1)
    acc = RationalFunction.zero()
    power = base
    for k in range(n + 1):
        acc = acc + power * (factorial(k) * row[k + 1])
        if k < n:
            power = power * base
    return acc


def chi_neg(n: int) -> RationalFunction:
    """Legendre chi at order -n: odd numerator over (1 - z^2)**(n+1)."""
    if n < 0:
        raise ValueError("order index n must be >= 0")
    f = _CHI_CACHE.get(n)
    if f is None:
        row = eulerian_b_row(n)
        coeffs = [0] * (2 * n + 2)
        for k in range(1, n + 2):
            coeffs[2 * k - 1] = row[k - 1]
        den = Polynomial([1, 0, -1]) ** (n + 1)
        f = RationalFunction(Polynomial(coeffs), den)
        _CHI_CACHE[n] = f
    return f


def ti_neg(n: int) -> RationalFunction:
    """Inverse tangent integral at order -n: alternating numerator over (1 + z^2)**(n+1)."""
    if n < 0:
        raise ValueError("order index n must be >= 0")
    f = _TI_CACHE.get(n)
    if f is None:
        row = eulerian_b_row(n)
        coeffs = [0] * (2 * n + 2)
        for k in range(1, n + 2):
            coeffs[2 * k - 1] = -((-1) ** k) * row[k - 1]
        den = Polynomial([1, 0, 1]) ** (n + 1)
        f = RationalFunction(Polynomial(coeffs), den)
        _TI_CACHE[n] = f
    return f


def chi_from_li(n: int) -> RationalFunction:
    """Legendre chi as the odd part (f(z) - f(-z))/2 of the polylogarithm."""
    f = li_neg(n)
    return (f - substitute(f, "negate_z")) * Fraction(1, 2)


def ti_from_chi(n: int) -> RationalFunction:
    """Inverse tangent integral as -i * chi(i z), built in Gaussian arithmetic.

    The canonical result must come out with purely real coefficients; that is
    asserted rather than silently repaired.
    """
    t = substitute(chi_neg(n), "i_times_z") * GaussianRational(0, -1)
    assert t.is_real(), "ti_from_chi produced non-real coefficients (bug)"
    return t


def closed_form(kind: str, n: int) -> PolylogClosedForm:
    """Build a tagged closed form; kinds: li, li_stirling, chi, ti, chi_from_li."""
    builders = {
        "li": (li_neg_operator, "operator"),
        "li_stirling": (li_neg_stirling, "stirling"),
        "chi": (chi_neg, "chi_closed"),
        "ti": (ti_neg, "ti_closed"),
        "chi_from_li": (chi_from_li, "li_difference"),
    }
    if kind not in builders:
        raise ValueError(f"unknown closed-form kind {kind!r}")
    fn, tag = builders[kind]
    return PolylogClosedForm(n, fn(n), tag)


def li_series_eval(s: int, z, tol: float = 1e-12) -> complex:
    """Defining-series evaluation, the numeric oracle: sum of z**k / k**s.

    Requires |z| < 1 strictly; stops when the latest term drops below
    tol * (1 + |partial|); raises NonConvergenceError at the term cap
    (reachable as |z| -> 1 with s <= 0).
    """
    zc = complex(z)
    if abs(zc) >= 1:
        raise DomainError(f"series evaluation needs |z| < 1, got |z| = {abs(zc)}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    partial = 0j
    power = 1 + 0j
    for k in range(1, SERIES_TERM_CAP + 1):
        power *= zc
        term = power * k ** (-s) if s <= 0 else power / k**s
        partial += term
        if abs(term) < tol * (1 + abs(partial)):
            return partial
    raise NonConvergenceError(
        f"series for s={s}, z={zc} did not meet tol={tol} within {SERIES_TERM_CAP} terms"
    )
