"""Command-line surface: emit closed forms, evaluate, and run verification sweeps.

Commands
--------
  li N / chi N / ti N                closed forms (text, latex or json)
  cot-poly N / tan-poly N
  coth-poly N / tanh-poly N          derivative polynomials in u
  eval KIND N Z                      evaluate a closed form at a point
  verify SUITE                       run a verification sweep
  ladder --n N                       print the ladder identity with exact coefficients

Exit codes: 0 success / all checks passed, 1 verification failure, 2 usage
error, 3 domain or pole error.  All results go to stdout, diagnostics to
stderr.  Text output is ASCII only; output is deterministic for given
arguments (the --seed flag is reserved).  Complex literals follow
FLOAT(("+"|"-")FLOAT"i")?, e.g. 0.5 or 0.3+0.2i.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys

from . import circular, hyperbolic, inverse, ladder
from .algebra import poly_text, rf_eval, rf_to_json, rf_to_latex, rf_to_text
from .circular import TRIG_GRID, DerivativePolynomial
from .errors import DomainError, NegPolylogError, PoleError, SingularityError
from .hyperbolic import HYP_GRID
from .jets import nth_derivative
from .polylog import chi_neg, li_neg, ti_neg
from .reports import PointCheck, VerificationReport, rel_err

MAX_ORDER = 64
MAX_EXACT_SWEEP = 15
MAX_NUMERIC_SWEEP = 10

_CLOSED_FORM_KINDS = ("li", "chi", "ti", "cot-poly", "tan-poly", "coth-poly", "tanh-poly")

_POLY_BUILDERS = {
    "cot-poly": circular.cot_derivative_poly,
    "tan-poly": circular.tan_derivative_poly,
    "coth-poly": hyperbolic.coth_derivative_poly,
    "tanh-poly": hyperbolic.tanh_derivative_poly,
}

_RF_BUILDERS = {"li": li_neg, "chi": chi_neg, "ti": ti_neg}

_COMPLEX_RE = re.compile(
    r"^(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"(?:(?P<sign>[+-])(?P<im>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)?$"
)


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    m = _COMPLEX_RE.match(text.strip().replace("−", "-"))
    if not m:
        raise UsageError(f"cannot parse complex literal {text!r}")
    re_part = float(m.group("re"))
    if m.group("im") is None:
        return complex(re_part, 0.0)
    im = float(m.group("im"))
    if m.group("sign") == "-":
        im = -im
    return complex(re_part, im)


def _check_order(n: int):
    if not 0 <= n <= MAX_ORDER:
        raise UsageError(f"n must be in 0..{MAX_ORDER}, got {n}")


def _emit_poly(kind: str, n: int, fmt: str) -> str:
    dp: DerivativePolynomial = _POLY_BUILDERS[kind](n)
    if fmt == "text":
        return poly_text(dp.poly)
    if fmt == "latex":
        return poly_text(dp.poly, latex=True)
    return json.dumps(
        {"target": dp.target, "n": dp.order, "coeffs": [str(c) for c in dp.coefficient_ints()]}
    )


def _emit_rf(kind: str, n: int, fmt: str) -> str:
    f = _RF_BUILDERS[kind](n)
    if fmt == "text":
        return rf_to_text(f)
    if fmt == "latex":
        return rf_to_latex(f)
    return json.dumps({"kind": kind, "n": n, **rf_to_json(f)})


def cmd_closed_form(kind: str, n: int, fmt: str) -> int:
    _check_order(n)
    if kind in _POLY_BUILDERS:
        print(_emit_poly(kind, n, fmt))
    else:
        print(_emit_rf(kind, n, fmt))
    return 0


def cmd_eval(kind: str, n: int, z_text: str, fmt: str) -> int:
    _check_order(n)
    z = parse_complex(z_text)
    if kind in _POLY_BUILDERS:
        dp = _POLY_BUILDERS[kind](n)
        val = complex(dp(z.real)) if z.imag == 0 else _poly_eval_complex(dp, z)
    else:
        val = rf_eval(_RF_BUILDERS[kind](n), z)
    if fmt == "json":
        print(json.dumps({"kind": kind, "n": n, "z": z_text, "re": val.real, "im": val.imag}))
    elif abs(val.imag) <= 1e-13 * (1.0 + abs(val.real)):
        print(val.real)
    else:
        sign = "+" if val.imag >= 0 else "-"
        print(f"{val.real} {sign} {abs(val.imag)}i")
    return 0


def _poly_eval_complex(dp: DerivativePolynomial, z: complex) -> complex:
    acc = 0j
    for c in reversed(dp.poly.coeffs):
        acc = acc * z + complex(float(c.re), float(c.im))
    return acc


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------


def _suite_trig(n_max: int, tol: float) -> list[VerificationReport]:
    reports = []
    routes = {
        "csc single-sum": circular.csc_derivative_eval,
        "csc polylog-difference": circular.csc_derivative_via_li,
        "csc binomial": circular.csc_derivative_binomial,
        "csc leibniz": ladder.leibniz_csc_route,
    }
    sec_routes = {
        "sec single-sum": circular.sec_derivative_eval,
        "sec polylog-difference": circular.sec_derivative_via_li,
        "sec binomial": circular.sec_derivative_binomial,
    }
    for name, route in {**routes, **sec_routes}.items():
        oracle_fn = "csc" if name.startswith("csc") else "sec"
        for n in range(n_max + 1):
            points = []
            for x in TRIG_GRID:
                want = nth_derivative(oracle_fn, x, n)
                got = route(n, x)
                r = rel_err(got, want)
                points.append(PointCheck(x, got, want, r, r <= tol))
            reports.append(VerificationReport(f"{name} vs jet oracle", n, tol, points))
    # double-angle consequence: 2 cot 2x = cot x - tan x
    points = []
    for i in range(1, 11):
        x = 0.11 * i
        lhs = 2.0 * math.cos(2 * x) / math.sin(2 * x)
        rhs = math.cos(x) / math.sin(x) - math.tan(x)
        r = rel_err(lhs, rhs)
        points.append(PointCheck(x, lhs, rhs, r, r <= 1e-12))
    reports.append(VerificationReport("cot double angle", 0, 1e-12, points))
    return reports


def _suite_hyperbolic(n_max: int, tol: float) -> list[VerificationReport]:
    reports = []
    for target, builder in (("coth", hyperbolic.coth_derivative_poly),
                            ("tanh", hyperbolic.tanh_derivative_poly)):
        for n in range(1, min(n_max, MAX_EXACT_SWEEP) + 1):
            same = builder(n).poly == circular.derivative_poly_recurrence(target, n).poly
            rep = VerificationReport(f"{target} polynomial vs recurrence", n, 0.0, exact=True)
            rep.points.append(PointCheck(0.0, 0.0, 0.0, 0.0 if same else 1.0, same))
            reports.append(rep)
    for name, route, fn in (("csch single-sum", hyperbolic.csch_derivative_eval, "csch"),
                            ("sech single-sum", hyperbolic.sech_derivative_eval, "sech")):
        for n in range(n_max + 1):
            points = []
            for x in HYP_GRID:
                want = nth_derivative(fn, x, n)
                got = route(n, x)
                r = rel_err(got, want)
                points.append(PointCheck(x, got, want, r, r <= tol))
            reports.append(VerificationReport(f"{name} vs jet oracle", n, tol, points))
    for n in range(1, n_max + 1):
        points = []
        for x in HYP_GRID:
            lhs = rf_eval(li_neg(n), math.exp(x)).real
            rhs = hyperbolic.li_relation_coth(n, x)
            r = rel_err(lhs, rhs)
            points.append(PointCheck(x, lhs, rhs, r, r <= tol, label="coth"))
            lhs = rf_eval(li_neg(n), -math.exp(x)).real
            rhs = hyperbolic.li_relation_tanh(n, x)
            r = rel_err(lhs, rhs)
            points.append(PointCheck(x, lhs, rhs, r, r <= tol, label="tanh"))
        reports.append(VerificationReport("polylog half-argument relations", n, tol, points))
    for n in range(1, n_max + 1):
        for x in HYP_GRID:
            reports.append(hyperbolic.chi_ti_hyperbolic_relations(n, x, tol))
    return reports


def _suite_inverse(n_max: int, tol: float, name: str | None) -> list[VerificationReport]:
    reports = []
    for ident in inverse.registry():
        if name is not None and ident.name != name:
            continue
        for n in range(n_max + 1):
            reports.append(inverse.verify_identity(ident, n, tol))
    if name is None:
        for f, xs in (("sin", (0.5, 1.0, 2.0)), ("cos", (0.4, 1.0, 1.8))):
            for n in range(min(n_max, 8) + 1):
                for x in xs:
                    reports.append(inverse.verify_generic_operand(f, n, x, 1e-9))
    return reports


def _suite_core(n_max: int) -> list[VerificationReport]:
    """Exact closed-form identities: route equality, cross-routes, duplication."""
    from .algebra import substitute
    from .polylog import chi_from_li, li_neg_operator, li_neg_stirling, ti_from_chi

    reports = []
    cap = min(n_max, MAX_EXACT_SWEEP)
    for n in range(cap + 1):
        checks = (
            ("construction route equality", li_neg_operator(n) == li_neg_stirling(n) == li_neg(n)),
            ("chi from polylog difference", chi_from_li(n) == chi_neg(n)),
            ("Ti from rotated chi", ti_from_chi(n) == ti_neg(n)),
            (
                "duplication identity",
                li_neg(n) + substitute(li_neg(n), "negate_z")
                == substitute(li_neg(n), "square_z") * (2 ** (1 + n)),
            ),
        )
        for label, ok in checks:
            rep = VerificationReport(label, n, 0.0, exact=True)
            rep.points.append(PointCheck(0.0, 0.0, 0.0, 0.0 if ok else 1.0, ok))
            reports.append(rep)
    return reports


def _suite_ladder(n_max: int) -> list[VerificationReport]:
    reports = []
    cap = min(n_max, MAX_EXACT_SWEEP)
    for n in range(cap + 1):
        for label, ok in (
            ("ladder main relation", ladder.verify_ladder_exact(n)),
            ("ladder chi form", ladder.chi_ladder(n)),
            ("ladder Ti form", ladder.ti_ladder(n)),
            ("ladder rotated variant", ladder.verify_ladder_sec_variant(n, 0.7)),
        ):
            rep = VerificationReport(label, n, 0.0, exact=True)
            rep.points.append(PointCheck(0.0, 0.0, 0.0, 0.0 if ok else 1.0, ok))
            reports.append(rep)
    return reports


def cmd_verify(suite: str, n_max: int, tol: float | None, fmt: str, name: str | None) -> int:
    if suite in ("trig", "hyperbolic", "inverse") and n_max > MAX_NUMERIC_SWEEP:
        raise UsageError(f"numeric suites support --n-max up to {MAX_NUMERIC_SWEEP}")
    if suite in ("ladder", "all") and n_max > MAX_EXACT_SWEEP:
        raise UsageError(f"exact suites support --n-max up to {MAX_EXACT_SWEEP}")
    reports: list[VerificationReport] = []
    if suite == "all":
        reports += _suite_core(n_max)
    if suite in ("trig", "all"):
        reports += _suite_trig(min(n_max, MAX_NUMERIC_SWEEP), tol or 1e-7)
    if suite in ("hyperbolic", "all"):
        reports += _suite_hyperbolic(min(n_max, MAX_NUMERIC_SWEEP), tol or 1e-8)
    if suite in ("inverse", "all"):
        reports += _suite_inverse(min(n_max, MAX_NUMERIC_SWEEP), tol or 1e-7, name)
    if suite in ("ladder", "all"):
        reports += _suite_ladder(n_max)
    if fmt == "json":
        print(json.dumps([r.to_dict() for r in reports]))
    else:
        # one summary line per identity, aggregated over n
        by_name: dict[str, list[VerificationReport]] = {}
        for r in reports:
            by_name.setdefault(r.identity, []).append(r)
        for name, group in by_name.items():
            ok = all(r.passed for r in group)
            ns = sorted({r.n for r in group})
            span = f"n={ns[0]}" if len(ns) == 1 else f"n={ns[0]}..{ns[-1]}"
            if all(r.exact for r in group):
                detail = "exact"
            else:
                detail = f"max rel err {max(r.max_rel_err for r in group):.2e}"
            print(f"{'PASS' if ok else 'FAIL'} {name} ({span}, {detail})")
        n_fail = sum(not r.passed for r in reports)
        print(f"{len(reports) - n_fail}/{len(reports)} checks passed")
    return 0 if all(r.passed for r in reports) else 1


def cmd_ladder(n: int, fmt: str, arrangement: str) -> int:
    _check_order(n)
    coeffs = ladder.ladder_coefficients(n).coefficients
    if fmt == "json":
        print(json.dumps({"n": n, "coefficients": [str(c) for c in coeffs],
                          "arrangement": arrangement}))
        return 0
    if fmt == "latex":
        li = lambda k, arg: rf"\operatorname{{Li}}_{{{-k}}}\!\left({arg}\right)"  # noqa: E731
        terms = []
        for k, c in enumerate(coeffs):
            mag = "" if abs(c) == 1 else f"{abs(c)} "
            term = f"{mag}{li(k, 'z^2')}"
            terms.append(("- " if c < 0 else "+ ") + term if k else ("-" if c < 0 else "") + term)
        rhs = " ".join(terms)
        lhs = rf"{li(n, 'z')} - {li(n, '-z')}"
        if arrangement == "standard":
            print(rf"{lhs} = \frac{{2}}{{z}}\left[{rhs}\right]")
        else:
            print(rf"\frac{{z}}{{2}}\left[{lhs}\right] = {rhs}")
        return 0
    li = lambda k, arg: f"Li[{-k}]({arg})"  # noqa: E731
    terms = []
    for k, c in enumerate(coeffs):
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        term = f"{mag}{li(k, 'z^2')}"
        terms.append(("- " if c < 0 else "+ ") + term if k else ("-" if c < 0 else "") + term)
    rhs = " ".join(terms)
    lhs = f"{li(n, 'z')} - {li(n, '-z')}"
    if arrangement == "standard":
        print(f"{lhs} = (2/z) * [{rhs}]")
    else:
        print(f"(z/2) * [{lhs}] = {rhs}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negpolylog",
        description="Exact closed forms and identity verification for negative-order "
        "polylogarithms and their derived special functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "latex", "json"), default="text")

    for kind in _CLOSED_FORM_KINDS:
        p = sub.add_parser(kind, help=f"print the {kind} closed form of index n")
        p.add_argument("n", type=int)
        add_format(p)

    p = sub.add_parser("eval", help="evaluate a closed form at a point")
    p.add_argument("kind", choices=_CLOSED_FORM_KINDS)
    p.add_argument("n", type=int)
    p.add_argument("z", help="complex literal, e.g. 0.5 or 0.3+0.2i")
    add_format(p)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("suite", choices=("trig", "hyperbolic", "inverse", "ladder", "all"))
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--tolerance", type=float, default=None,
                   help="override the per-suite default tolerance (numeric suites only)")
    p.add_argument("--name", default=None, help="restrict the inverse suite to one identity")
    add_format(p)

    p = sub.add_parser("ladder", help="print the ladder identity with exact coefficients")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--arrangement", choices=("standard", "halved"), default="standard",
                   help="factor 2/z on the right, or z/2 on the left")
    add_format(p)

    parser.add_argument("--seed", type=int, default=None, help="reserved; output is deterministic")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in _CLOSED_FORM_KINDS:
            return cmd_closed_form(args.command, args.n, args.format)
        if args.command == "eval":
            return cmd_eval(args.kind, args.n, args.z, args.format)
        if args.command == "verify":
            if args.n_max < 0:
                raise UsageError("--n-max must be >= 0")
            return cmd_verify(args.suite, args.n_max, args.tolerance, args.format, args.name)
        if args.command == "ladder":
            return cmd_ladder(args.n, args.format, args.arrangement)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PoleError, DomainError, SingularityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NegPolylogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
