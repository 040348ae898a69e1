"""The ladder-like sum bridging two order -n polylogarithms to orders 0..-n.

The central relation,

    Li[-n](z) - Li[-n](-z) = (2/z) * sum_{k=0}^n C(n,k) (-1)^(n-k) 2^k Li[-k](z^2),

is verified exactly in the rational-function layer (no tolerances), along
with its chi and Ti restatements

    z chi[-n](z) = sum_k c_k Li[-k](z^2),
    z Ti[-n](z)  = -sum_k c_k Li[-k](-z^2),

and the rotated variant

    Li[-n](iz) - Li[-n](-iz) = (2/(iz)) sum_k c_k Li[-k](-z^2),

which is also checked numerically at circle points z = exp(ix).  The
coefficient vector is c_k = (-1)^(n-k) 2^k C(n,k).

The Leibniz route expands csc x = exp(-ix)(i + cot x) with the general
Leibniz rule, giving a further csc-derivative evaluator

    (d/dx)^n csc x = 2 i^(n-1) exp(-ix) sum_k c_k Li[-k](exp(2ix)),

used as an extra cross-check against the circular-module routes.  (Note the
summand order is -k, matching the Leibniz expansion term by term.)

Exactness is primary here and numerics secondary: everything lives in the
rational-function world where exact equality is cheap.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .algebra import I, Polynomial, RationalFunction, rf_eval, substitute
from .combinatorics import binomial
from .errors import SingularityError
from .numutil import checked_real, i_power
from .polylog import chi_neg, li_neg, ti_neg

__all__ = [
    "LadderCoefficients",
    "ladder_coefficients",
    "verify_ladder_exact",
    "chi_ladder",
    "ti_ladder",
    "verify_ladder_sec_variant",
    "leibniz_csc_route",
]

_GUARD = 1e-6


@dataclass(frozen=True)
class LadderCoefficients:
    """c[k] = (-1)^(n-k) * 2^k * C(n, k), k = 0..n."""

    n: int
    coefficients: tuple[int, ...]


def ladder_coefficients(n: int) -> LadderCoefficients:
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = tuple((-1) ** (n - k) * 2**k * binomial(n, k) for k in range(n + 1))
    return LadderCoefficients(n, coeffs)


def _li_even(k: int) -> RationalFunction:
    """Li[-k](z^2)."""
    return substitute(li_neg(k), "square_z")


def _li_even_neg(k: int) -> RationalFunction:
    """Li[-k](-z^2)."""
    return substitute(substitute(li_neg(k), "negate_z"), "square_z")


def _weighted_sum(n: int, term) -> RationalFunction:
    c = ladder_coefficients(n).coefficients
    acc = RationalFunction.zero()
    for k in range(n + 1):
        acc = acc + term(k) * c[k]
    return acc


def verify_ladder_exact(n: int) -> bool:
    """Exact check of the main relation at order -n."""
    f = li_neg(n)
    lhs = f - substitute(f, "negate_z")
    two_over_z = RationalFunction(Polynomial([2]), Polynomial.variable())
    rhs = two_over_z * _weighted_sum(n, _li_even)
    return lhs == rhs


def chi_ladder(n: int) -> bool:
    """Exact check of z * chi[-n](z) = sum_k c_k Li[-k](z^2)."""
    z = RationalFunction(Polynomial.variable(), Polynomial.one())
    return z * chi_neg(n) == _weighted_sum(n, _li_even)


def ti_ladder(n: int) -> bool:
    """Exact check of z * Ti[-n](z) = -sum_k c_k Li[-k](-z^2)."""
    z = RationalFunction(Polynomial.variable(), Polynomial.one())
    return z * ti_neg(n) == -_weighted_sum(n, _li_even_neg)


@lru_cache(maxsize=None)
def _sec_variant_exact(n: int) -> bool:
    """Exact check of the rotated relation, i.e. the main one under z -> iz."""
    f = li_neg(n)
    lhs = substitute(f, "i_times_z") - substitute(substitute(f, "negate_z"), "i_times_z")
    two_over_iz = RationalFunction(Polynomial([2]), Polynomial([0, I]))
    rhs = two_over_iz * _weighted_sum(n, _li_even_neg)
    return lhs == rhs


def verify_ladder_sec_variant(n: int, x: float, tol: float = 1e-10) -> bool:
    """Check the rotated relation numerically at z = exp(ix) and exactly.

    The numeric side evaluates Li[-n](i e^(ix)) - Li[-n](-i e^(ix)) against
    -2i e^(-ix) sum_k c_k Li[-k](-e^(2ix)).
    """
    if abs(math.remainder(x - math.pi / 2, math.pi)) < _GUARD:
        raise SingularityError(f"rotated-ladder evaluation too close to a pole, x = {x}")
    f = li_neg(n)
    w = cmath.exp(1j * x)
    lhs = rf_eval(f, 1j * w) - rf_eval(f, -1j * w)
    c = ladder_coefficients(n).coefficients
    s = 0j
    for k in range(n + 1):
        s += c[k] * rf_eval(li_neg(k), -cmath.exp(2j * x))
    rhs = -2j * cmath.exp(-1j * x) * s
    numeric_ok = abs(lhs - rhs) <= tol * (1.0 + abs(lhs))
    return numeric_ok and _sec_variant_exact(n)


def leibniz_csc_route(n: int, x: float) -> float:
    """(d/dx)^n csc x from the Leibniz expansion of exp(-ix)(i + cot x)."""
    if abs(math.remainder(x, math.pi)) < _GUARD:
        raise SingularityError(f"csc is singular within {_GUARD} of x = {x}")
    c = ladder_coefficients(n).coefficients
    z2 = cmath.exp(2j * x)
    s = 0j
    for k in range(n + 1):
        s += c[k] * rf_eval(li_neg(k), z2)
    val = 2 * i_power(n - 1) * cmath.exp(-1j * x) * s
    return checked_real(val, context=f"Leibniz csc route n={n}, x={x}")
