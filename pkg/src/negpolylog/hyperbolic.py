"""Higher derivatives of coth, tanh, csch and sech via real exponentials.

The hyperbolic family mirrors the circular one but needs no complex detour:
substituting a real exponential turns the z d/dz ladder directly into plain
d/dx, so every evaluator here is pure real arithmetic.  That makes this
module a genuinely independent code path from the circular one.

Routes provided:

* coth/tanh derivative polynomials from the exact sum over (1 + u)^(k+1)
  with weights (-1)^k k!/2^k {n+1 brace k+1} and prefactor 2^n, checked to
  land on integers (coth and tanh satisfy the same first-order equation
  f' = 1 - f^2, so they share one polynomial family);
* csch/sech single-sum evaluators over the type-B Eulerian row with real
  exponential phases;
* the polylogarithm relations Li(e^x) = -(1/2) (d/dx)^n coth(x/2) and
  Li(-e^x) = -(1/2) (d/dx)^n tanh(x/2) for n >= 1 (at n = 0 both sides
  differ by the constant 1/2, so n = 0 is excluded from sweeps), and the
  chi/Ti relations 2*chi(e^x) = -(d/dx)^n csch x, 2*Ti(e^x) = (d/dx)^n sech x
  (these two hold at n = 0 as well: the constants cancel in the difference).

A note on the tan <-> tanh coefficient kinship: the tanh polynomials are the
tan polynomials under u -> iu up to a power of i.  There is no clean real
evaluation point to pin that bookkeeping against the jet oracle, so the
correspondence is documented here but deliberately not machine-asserted;
the recurrence cross-check covers the same ground.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .algebra import GaussianRational, Polynomial, rf_eval
from .circular import DerivativePolynomial
from .combinatorics import eulerian_b_row, factorial, stirling2_row
from .errors import SingularityError
from .jets import nth_derivative
from .polylog import chi_neg, ti_neg
from .reports import PointCheck, VerificationReport, rel_err

__all__ = [
    "HYP_GRID",
    "coth_derivative_poly",
    "tanh_derivative_poly",
    "li_relation_coth",
    "li_relation_tanh",
    "csch_derivative_eval",
    "sech_derivative_eval",
    "chi_ti_hyperbolic_relations",
]

# Fixed evaluation grid for the hyperbolic sweeps; all points avoid x = 0,
# the only singularity of coth and csch.
HYP_GRID = (0.3, 0.5, 0.8, 1.2, 2.0)

_GUARD = 1e-6


def _hyp_poly(n: int, target: str) -> DerivativePolynomial:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return DerivativePolynomial(target, 0, Polynomial([0, 1], "u"))
    base = Polynomial([1, 1], "u")  # 1 + u
    row = stirling2_row(n + 1)
    acc = Polynomial.zero("u")
    bp = base
    for k in range(n + 1):
        acc = acc + bp.scale(Fraction((-1) ** k * factorial(k), 2**k) * row[k + 1])
        if k < n:
            bp = bp * base
    acc = acc.scale(GaussianRational(2**n))
    assert acc.is_real() and acc.is_integral(), (
        f"{target} derivative polynomial failed to land on integers (bug)"
    )
    return DerivativePolynomial(target, n, acc)


def coth_derivative_poly(n: int) -> DerivativePolynomial:
    """P with (d/dx)^n coth x = P(coth x); real arithmetic throughout."""
    return _hyp_poly(n, "coth")


def tanh_derivative_poly(n: int) -> DerivativePolynomial:
    """P with (d/dx)^n tanh x = P(tanh x); identical family to coth's."""
    return _hyp_poly(n, "tanh")


def li_relation_coth(n: int, x: float) -> float:
    """RHS of Li(e^x) = -(1/2)(d/dx)^n coth(x/2), from the jet oracle.

    The matching LHS is rf_eval(li_neg(n), exp(x)); comparing the two is the
    test suite's job.  Valid for n >= 1 (the n = 0 statement misses the
    constant -1/2).
    """
    if abs(x) < _GUARD:
        raise SingularityError(f"coth(x/2) is singular at x = 0, got {x}")
    return -0.5 * 2.0**-n * nth_derivative("coth", x / 2, n)


def li_relation_tanh(n: int, x: float) -> float:
    """RHS of Li(-e^x) = -(1/2)(d/dx)^n tanh(x/2), from the jet oracle."""
    return -0.5 * 2.0**-n * nth_derivative("tanh", x / 2, n)


def csch_derivative_eval(n: int, x: float) -> float:
    """(d/dx)^n csch x by the Eulerian single sum, pure real arithmetic."""
    if abs(x) < _GUARD:
        raise SingularityError(f"csch is singular at x = 0, got {x}")
    row = eulerian_b_row(n)
    total = 0.0
    for k in range(1, n + 2):
        total += row[k - 1] * math.exp((n - 2 * k) * x)
    return ((-1) ** n / 2**n) * math.exp(2 * x) * (1.0 / math.sinh(x)) ** (n + 1) * total


def sech_derivative_eval(n: int, x: float) -> float:
    """(d/dx)^n sech x by the alternating Eulerian single sum."""
    row = eulerian_b_row(n)
    total = 0.0
    for k in range(1, n + 2):
        total += (-1) ** k * row[k - 1] * math.exp((n - 2 * k) * x)
    return -((-1) ** n / 2**n) * math.exp(2 * x) * (1.0 / math.cosh(x)) ** (n + 1) * total


def chi_ti_hyperbolic_relations(n: int, x: float, tol: float = 1e-8) -> VerificationReport:
    """Check 2*chi(e^x) = -(d/dx)^n csch x and 2*Ti(e^x) = (d/dx)^n sech x."""
    if abs(x) < _GUARD:
        raise SingularityError(f"the csch relation is singular at x = 0, got {x}")
    ex = math.exp(x)
    points = []

    lhs = 2.0 * rf_eval(chi_neg(n), ex).real
    rhs = -nth_derivative("csch", x, n)
    r = rel_err(lhs, rhs)
    points.append(PointCheck(x, lhs, rhs, r, r <= tol, label="chi-csch"))

    lhs = 2.0 * rf_eval(ti_neg(n), ex).real
    rhs = nth_derivative("sech", x, n)
    r = rel_err(lhs, rhs)
    points.append(PointCheck(x, lhs, rhs, r, r <= tol, label="ti-sech"))

    return VerificationReport("hyperbolic chi/Ti relations", n, tol, points)
