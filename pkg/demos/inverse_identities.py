#!/usr/bin/env python3
"""Operator identities for the twelve inverse trig/hyperbolic functions.

Each identity evaluates a chi or Ti closed form at a transformed argument
and matches it against (n+1) applications of a first-order operator to the
inverse function, computed in jet arithmetic.
"""

import math

from negpolylog import registry, verify_generic_operand, verify_identity

print("The registry:\n")
for ident in registry():
    print(f"  {ident.name:<14} {ident.describe()}")
    print(f"  {'':<14}   domain {ident.domain}; points {ident.sample_points}")

print("\nSweep n = 0..6 at relative tolerance 1e-7:\n")
for ident in registry():
    worst = 0.0
    ok = True
    for n in range(7):
        rep = verify_identity(ident, n, tol=1e-7)
        worst = max(worst, rep.max_rel_err)
        ok = ok and rep.passed
    print(f"  {ident.name:<14} {'PASS' if ok else 'FAIL'}   worst rel err {worst:.2e}")

print("\nGeneric-operand substitution z -> f/(1+f) for f = sin, cos:\n")
for f in ("sin", "cos"):
    x = 1.0 if f == "sin" else 1.8
    for n in (0, 2, 3, 6):
        rep = verify_generic_operand(f, n, x)
        routes = ", ".join(f"{p.label}: {p.lhs:.9g} vs {p.rhs:.9g}" for p in rep.points)
        print(f"  f={f}, n={n}, x={x}: {routes}")

print("\nThe arccosh branches meet at reciprocal points:")
upper = next(i for i in registry() if i.name == "arccosh_upper")
lower = next(i for i in registry() if i.name == "arccosh_lower")
x = 1.6
print(f"  g_upper({x}) = {upper.arg(x):.12f}")
print(f"  g_lower({1/x:.6f}) = {lower.arg(1/x):.12f}")
print(f"  arcsech(1/x) == arccosh(x): {math.isclose(math.acosh(x), math.log(1/(1/x) + math.sqrt(1/(1/x)**2 - 1)))}")
