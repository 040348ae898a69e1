#!/usr/bin/env python3
"""The ladder-like sum: two polylogarithms of one order from all lower orders.

Everything here is verified exactly in the rational-function layer; the
rotated (sec-flavored) variant gets a numeric spot check on the unit circle
as well.
"""

from negpolylog import (
    chi_ladder,
    ladder_coefficients,
    leibniz_csc_route,
    nth_derivative,
    ti_ladder,
    verify_ladder_exact,
    verify_ladder_sec_variant,
)

print("Li[-n](z) - Li[-n](-z) = (2/z) sum_k c_k Li[-k](z^2)\n")
for n in range(7):
    c = ladder_coefficients(n).coefficients
    terms = " + ".join(f"({ck})Li[{-k}](z^2)" for k, ck in enumerate(c))
    print(f"  n={n}: coefficients {list(c)}")
    print(f"        RHS = (2/z) [ {terms} ]")
    print(f"        exact: {verify_ladder_exact(n)}")

print("\nchi and Ti restatements, exact for n = 0..10:")
print("  chi:", all(chi_ladder(n) for n in range(11)))
print("  Ti: ", all(ti_ladder(n) for n in range(11)))

print("\nRotated variant at z = exp(0.9 i), n = 0..8 (numeric + exact):")
print(" ", all(verify_ladder_sec_variant(n, 0.9) for n in range(9)))

x, n = 1.3, 5
print(f"\nThe Leibniz expansion doubles as a csc-derivative route (n={n}, x={x}):")
print("  ladder route:", leibniz_csc_route(n, x))
print("  jet oracle:  ", nth_derivative("csc", x, n))
