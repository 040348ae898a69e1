#!/usr/bin/env python3
"""Tour of the exact closed forms.

Builds the rational closed forms of the polylogarithm at orders 0..-6, the
Legendre chi function, and the inverse tangent integral; prints them in
text, LaTeX and JSON; and cross-checks a value against the defining series.
"""

from negpolylog import (
    chi_from_li,
    chi_neg,
    li_neg,
    li_neg_operator,
    li_neg_stirling,
    li_series_eval,
    rf_eval,
    rf_to_json,
    rf_to_latex,
    rf_to_text,
    ti_neg,
)

print("Polylogarithm closed forms at orders 0..-6")
print("(two independent constructions, compared exactly)\n")
for n in range(7):
    op = li_neg_operator(n)
    st = li_neg_stirling(n)
    marker = "==" if op == st else "!!"
    print(f"  Li[{-n}](z) = {rf_to_text(op)}   [operator {marker} stirling]")

print("\nLegendre chi and inverse tangent integral, orders 0..-4\n")
for n in range(5):
    print(f"  chi[{-n}](z) = {rf_to_text(chi_neg(n)):<45} Ti[{-n}](z) = {rf_to_text(ti_neg(n))}")

print("\nThe chi closed form equals the odd part of the polylogarithm:")
for n in (0, 3, 5):
    print(f"  n={n}: chi_from_li == chi_neg -> {chi_from_li(n) == chi_neg(n)}")

print("\nOther output formats for chi at order -2:")
print("  latex:", rf_to_latex(chi_neg(2)))
print("  json: ", rf_to_json(chi_neg(2)))

z = 0.35 + 0.4j
print(f"\nNumeric cross-check at z = {z}:")
print("  closed form:", rf_eval(li_neg(4), z))
print("  series sum: ", li_series_eval(-4, z, tol=1e-13))
