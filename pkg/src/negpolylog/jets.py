"""Truncated Taylor jets: the library's independent differentiation oracle.

A jet stores ``c[k] = f^(k)(x0) / k!`` up to a fixed order.  Sums, products,
quotients and square roots propagate coefficients by the standard
recurrences; truncation is exact for the coefficients that are kept, so a
jet of order N carries the first N derivatives with only rounding error.

Elementary functions are lifted directly (sin, cos, exp and the hyperbolic
pair have closed coefficient formulas; tan, cot, sec, csc and their
hyperbolic versions come from jet division).  Inverse functions are lifted
by building the jet of their derivative from rational/square-root
recurrences and integrating once, taking the constant term from the math
library.  Reciprocal-argument companions (arccsc, arcsec, arccsch, arcsech)
are composed as outer(1/x).

Jets are double precision on purpose: this oracle's job is numeric
cross-checking at tolerances of 1e-7..1e-9, while all exact checking lives
in the rational-function layer.
"""

from __future__ import annotations

import math

from .combinatorics import factorial
from .errors import DomainError, OrderExhaustedError, SingularityError

__all__ = [
    "Jet",
    "FUNCTION_IDS",
    "SINGULARITY_GUARD",
    "jet_lift",
    "nth_derivative",
    "apply_operator_power",
    "laurent_jet",
]

SINGULARITY_GUARD = 1e-6

FUNCTION_IDS = frozenset(
    {
        "exp", "log",
        "sin", "cos", "tan", "cot", "csc", "sec",
        "sinh", "cosh", "tanh", "coth", "csch", "sech",
        "arctan", "arctanh", "arccot", "arccoth",
        "arcsin", "arccos", "arcsinh", "arccosh",
        "arccsc", "arcsec", "arccsch", "arcsech",
    }
)


class Jet:
    """Taylor coefficients of a function at ``x0`` through a fixed order."""

    __slots__ = ("x0", "coeffs")

    def __init__(self, x0: float, coeffs):
        self.x0 = float(x0)
        self.coeffs = tuple(float(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a jet needs at least the order-0 coefficient")

    @classmethod
    def constant(cls, value: float, x0: float, order: int) -> "Jet":
        return cls(x0, (value,) + (0.0,) * order)

    @classmethod
    def identity(cls, x0: float, order: int) -> "Jet":
        if order == 0:
            return cls(x0, (x0,))
        return cls(x0, (x0, 1.0) + (0.0,) * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def value(self) -> float:
        return self.coeffs[0]

    def truncate(self, order: int) -> "Jet":
        if order > self.order:
            raise ValueError("cannot extend a jet by truncation")
        return Jet(self.x0, self.coeffs[: order + 1])

    def _pair(self, other: "Jet") -> tuple[tuple, tuple]:
        if self.x0 != other.x0:
            raise ValueError("jets expanded at different points")
        n = min(len(self.coeffs), len(other.coeffs))
        return self.coeffs[:n], other.coeffs[:n]

    def __add__(self, other):
        if isinstance(other, Jet):
            a, b = self._pair(other)
            return Jet(self.x0, [x + y for x, y in zip(a, b)])
        c = list(self.coeffs)
        c[0] += float(other)
        return Jet(self.x0, c)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, Jet) else -float(other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Jet(self.x0, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Jet):
            a, b = self._pair(other)
            n = len(a)
            out = [0.0] * n
            for i, ai in enumerate(a):
                if ai == 0.0:
                    continue
                for j in range(n - i):
                    out[i + j] += ai * b[j]
            return Jet(self.x0, out)
        f = float(other)
        return Jet(self.x0, [c * f for c in self.coeffs])

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet":
        b = self.coeffs
        if b[0] == 0.0:
            raise ZeroDivisionError("reciprocal of a jet with zero value")
        n = len(b)
        out = [0.0] * n
        out[0] = 1.0 / b[0]
        for k in range(1, n):
            s = 0.0
            for j in range(k):
                s += out[j] * b[k - j]
            out[k] = -s / b[0]
        return Jet(self.x0, out)

    def __truediv__(self, other):
        if isinstance(other, Jet):
            a, b = self._pair(other)
            if b[0] == 0.0:
                raise ZeroDivisionError("jet division by zero value")
            n = len(a)
            out = [0.0] * n
            for k in range(n):
                s = a[k]
                for j in range(k):
                    s -= out[j] * b[k - j]
                out[k] = s / b[0]
            return Jet(self.x0, out)
        return self * (1.0 / float(other))

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        out = Jet.constant(1.0, self.x0, self.order)
        for _ in range(k):
            out = out * self
        return out

    def sqrt(self) -> "Jet":
        c = self.coeffs
        if c[0] <= 0.0:
            raise DomainError("jet square root of a non-positive value")
        n = len(c)
        out = [0.0] * n
        out[0] = math.sqrt(c[0])
        for k in range(1, n):
            s = c[k]
            for j in range(1, k):
                s -= out[j] * out[k - j]
            out[k] = s / (2.0 * out[0])
        return Jet(self.x0, out)

    def differentiate(self) -> "Jet":
        """Jet of the derivative; consumes one order."""
        if self.order == 0:
            raise OrderExhaustedError("jet order exhausted: no derivative information left")
        return Jet(self.x0, [(k + 1) * c for k, c in enumerate(self.coeffs[1:])])

    def integrate(self, constant: float) -> "Jet":
        return Jet(self.x0, [constant] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def derivative_value(self, n: int) -> float:
        """n-th derivative at x0, i.e. n! * c[n]."""
        if n > self.order:
            raise OrderExhaustedError(f"jet of order {self.order} cannot give derivative {n}")
        return factorial(n) * self.coeffs[n]

    def __repr__(self):
        return f"Jet(x0={self.x0}, coeffs={self.coeffs})"


def _compose(outer: Jet, inner: Jet) -> Jet:
    """Jet of outer(inner(x)); requires outer.x0 == inner.value."""
    n = min(outer.order, inner.order)
    d = Jet(inner.x0, inner.coeffs[: n + 1]) - outer.x0
    acc = Jet.constant(outer.coeffs[n], inner.x0, n)
    for k in range(n - 1, -1, -1):
        acc = acc * d + outer.coeffs[k]
    return acc


def _dist_to_grid(x: float, offset: float, period: float) -> float:
    return abs(math.remainder(x - offset, period))


_PI = math.pi


def _check_point(fn: str, x0: float):
    """Raise SingularityError within the guard radius, DomainError outside the domain."""

    def sing(d: float):
        if d < SINGULARITY_GUARD:
            raise SingularityError(f"{fn} is singular within {SINGULARITY_GUARD} of x0={x0}")

    if fn in ("tan", "sec"):
        sing(_dist_to_grid(x0, _PI / 2, _PI))
    elif fn in ("cot", "csc"):
        sing(_dist_to_grid(x0, 0.0, _PI))
    elif fn in ("coth", "csch"):
        sing(abs(x0))
    elif fn == "log":
        sing(abs(x0))
        if x0 <= 0:
            raise DomainError(f"log needs x0 > 0, got {x0}")
    elif fn in ("arctanh", "arcsin", "arccos"):
        sing(min(abs(x0 - 1.0), abs(x0 + 1.0)))
        if abs(x0) >= 1:
            raise DomainError(f"{fn} needs |x0| < 1, got {x0}")
    elif fn == "arccoth":
        sing(min(abs(x0 - 1.0), abs(x0 + 1.0)))
        if abs(x0) <= 1:
            raise DomainError(f"arccoth needs |x0| > 1, got {x0}")
    elif fn == "arccosh":
        sing(abs(x0 - 1.0))
        if x0 < 1:
            raise DomainError(f"arccosh needs x0 >= 1, got {x0}")
    elif fn in ("arccsc", "arcsec"):
        sing(min(abs(x0 - 1.0), abs(x0 + 1.0)))
        if abs(x0) <= 1:
            raise DomainError(f"{fn} needs |x0| > 1, got {x0}")
    elif fn == "arccsch":
        sing(abs(x0))
    elif fn == "arcsech":
        sing(min(abs(x0), abs(x0 - 1.0)))
        if not 0 < x0 <= 1:
            raise DomainError(f"arcsech needs 0 < x0 <= 1, got {x0}")


def _cyclic(vals, x0: float, n: int) -> Jet:
    out = []
    for k in range(n + 1):
        out.append(vals[k % 4] / factorial(k))
    return Jet(x0, out)


def _build_sin(x0, n):
    s, c = math.sin(x0), math.cos(x0)
    return _cyclic((s, c, -s, -c), x0, n)


def _build_cos(x0, n):
    s, c = math.sin(x0), math.cos(x0)
    return _cyclic((c, -s, -c, s), x0, n)


def _build_exp(x0, n):
    e = math.exp(x0)
    return Jet(x0, [e / factorial(k) for k in range(n + 1)])


def _build_sinh(x0, n):
    s, c = math.sinh(x0), math.cosh(x0)
    return Jet(x0, [(s if k % 2 == 0 else c) / factorial(k) for k in range(n + 1)])


def _build_cosh(x0, n):
    s, c = math.sinh(x0), math.cosh(x0)
    return Jet(x0, [(c if k % 2 == 0 else s) / factorial(k) for k in range(n + 1)])


def _via_derivative(deriv, value):
    """Builder for functions lifted by integrating their derivative's jet."""

    def build(x0, n):
        if n == 0:
            return Jet(x0, [value(x0)])
        return deriv(x0, n - 1).integrate(value(x0))

    return build


def _one_plus_x2(x0, n):
    return Jet.identity(x0, n) ** 2 + 1.0


def _one_minus_x2(x0, n):
    return -(Jet.identity(x0, n) ** 2) + 1.0


def _x2_minus_one(x0, n):
    return Jet.identity(x0, n) ** 2 - 1.0


def _via_reciprocal_arg(outer: str):
    def build(x0, n):
        u0 = 1.0 / x0
        inner = Jet.identity(x0, n).reciprocal()
        return _compose(_BUILDERS[outer](u0, n), inner)

    return build


_BUILDERS = {
    "exp": _build_exp,
    "sin": _build_sin,
    "cos": _build_cos,
    "sinh": _build_sinh,
    "cosh": _build_cosh,
    "tan": lambda x0, n: _build_sin(x0, n) / _build_cos(x0, n),
    "cot": lambda x0, n: _build_cos(x0, n) / _build_sin(x0, n),
    "sec": lambda x0, n: _build_cos(x0, n).reciprocal(),
    "csc": lambda x0, n: _build_sin(x0, n).reciprocal(),
    "tanh": lambda x0, n: _build_sinh(x0, n) / _build_cosh(x0, n),
    "coth": lambda x0, n: _build_cosh(x0, n) / _build_sinh(x0, n),
    "sech": lambda x0, n: _build_cosh(x0, n).reciprocal(),
    "csch": lambda x0, n: _build_sinh(x0, n).reciprocal(),
    "log": _via_derivative(lambda x0, n: Jet.identity(x0, n).reciprocal(), math.log),
    "arctan": _via_derivative(lambda x0, n: _one_plus_x2(x0, n).reciprocal(), math.atan),
    "arccot": _via_derivative(
        lambda x0, n: -(_one_plus_x2(x0, n).reciprocal()), lambda x: _PI / 2 - math.atan(x)
    ),
    "arctanh": _via_derivative(lambda x0, n: _one_minus_x2(x0, n).reciprocal(), math.atanh),
    "arccoth": _via_derivative(
        lambda x0, n: _one_minus_x2(x0, n).reciprocal(), lambda x: math.atanh(1.0 / x)
    ),
    "arcsin": _via_derivative(
        lambda x0, n: _one_minus_x2(x0, n).sqrt().reciprocal(), math.asin
    ),
    "arccos": _via_derivative(
        lambda x0, n: -(_one_minus_x2(x0, n).sqrt().reciprocal()), math.acos
    ),
    "arcsinh": _via_derivative(
        lambda x0, n: _one_plus_x2(x0, n).sqrt().reciprocal(), math.asinh
    ),
    "arccosh": _via_derivative(
        lambda x0, n: _x2_minus_one(x0, n).sqrt().reciprocal(), math.acosh
    ),
    "arccsc": _via_reciprocal_arg("arcsin"),
    "arcsec": _via_reciprocal_arg("arccos"),
    "arccsch": _via_reciprocal_arg("arcsinh"),
    "arcsech": _via_reciprocal_arg("arccosh"),
}


def jet_lift(fn: str, x0: float, order: int) -> Jet:
    """Taylor coefficients of a supported function at x0 through ``order``."""
    if fn not in FUNCTION_IDS:
        raise ValueError(f"unknown function id {fn!r}")
    if order < 0:
        raise ValueError("order must be >= 0")
    _check_point(fn, float(x0))
    return _BUILDERS[fn](float(x0), order)


def nth_derivative(fn: str, x0: float, n: int) -> float:
    """n-th derivative of a supported function at x0, via a jet of order n."""
    return jet_lift(fn, x0, n).derivative_value(n)


def apply_operator_power(a, fn: str, n: int, x0: float, *, order_guard: int = 2) -> float:
    """Value at x0 of (a(x) d/dx)**n applied to fn.

    ``a`` maps (x0, order) to the coefficient function's jet.  Each round
    differentiates the running jet (consuming one order) and multiplies by
    the coefficient jet; the initial order is n + order_guard.
    """
    if n < 0:
        raise ValueError("operator power must be >= 0")
    total = n + order_guard
    f = jet_lift(fn, x0, total)
    if n == 0:
        return f.value
    a_jet = a(float(x0), total)
    for _ in range(n):
        f = a_jet * f.differentiate()
    return f.value


def laurent_jet(terms: dict[int, float]):
    """Coefficient-jet builder for sums of integer powers c_p * x**p (p may be < 0)."""

    def build(x0: float, order: int) -> Jet:
        x = Jet.identity(x0, order)
        recip = None
        acc = Jet.constant(0.0, x0, order)
        for p, c in sorted(terms.items()):
            if p == 0:
                acc = acc + Jet.constant(c, x0, order)
            elif p > 0:
                acc = acc + x**p * c
            else:
                if recip is None:
                    recip = x.reciprocal()
                acc = acc + recip ** (-p) * c
        return acc

    return build
