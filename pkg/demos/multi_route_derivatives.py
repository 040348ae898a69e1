#!/usr/bin/env python3
"""Every csc/sec/csch/sech derivative evaluator against the jet oracle.

csc has four independent routes (the Eulerian single sum, the polylogarithm
difference, the half-angle binomial expansion, and the Leibniz-rule ladder
sum); sec has three.  The hyperbolic versions run in pure real arithmetic.
"""

from negpolylog import (
    csc_derivative_binomial,
    csc_derivative_eval,
    csc_derivative_via_li,
    csch_derivative_eval,
    leibniz_csc_route,
    nth_derivative,
    sec_derivative_binomial,
    sec_derivative_eval,
    sec_derivative_via_li,
    sech_derivative_eval,
)

x = 1.0
print(f"(d/dx)^n csc x at x = {x}\n")
print(f"  {'n':>2} {'single sum':>18} {'polylog diff':>18} {'binomial':>18} "
      f"{'leibniz':>18} {'jet oracle':>18}")
for n in range(7):
    vals = [
        csc_derivative_eval(n, x),
        csc_derivative_via_li(n, x),
        csc_derivative_binomial(n, x),
        leibniz_csc_route(n, x),
        nth_derivative("csc", x, n),
    ]
    print(f"  {n:>2} " + " ".join(f"{v:>18.10f}" for v in vals))

print(f"\n(d/dx)^n sec x at x = {x}\n")
print(f"  {'n':>2} {'single sum':>18} {'polylog diff':>18} {'binomial':>18} {'jet oracle':>18}")
for n in range(7):
    vals = [
        sec_derivative_eval(n, x),
        sec_derivative_via_li(n, x),
        sec_derivative_binomial(n, x),
        nth_derivative("sec", x, n),
    ]
    print(f"  {n:>2} " + " ".join(f"{v:>18.10f}" for v in vals))

print(f"\nHyperbolic versions at x = {x} (single sum vs jet oracle)\n")
print(f"  {'n':>2} {'csch sum':>18} {'csch jet':>18} {'sech sum':>18} {'sech jet':>18}")
for n in range(7):
    print(
        f"  {n:>2} {csch_derivative_eval(n, x):>18.10f} {nth_derivative('csch', x, n):>18.10f}"
        f" {sech_derivative_eval(n, x):>18.10f} {nth_derivative('sech', x, n):>18.10f}"
    )
