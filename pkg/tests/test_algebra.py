"""Polynomial / rational-function layer: exact arithmetic, canonical form,
argument transforms, and evaluation."""

import json
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from negpolylog.algebra import (
    GaussianRational,
    I,
    Polynomial,
    RationalFunction,
    poly_text,
    rf_eval,
    rf_eval_exact,
    rf_from_json,
    rf_to_json,
    rf_to_latex,
    rf_to_text,
    substitute,
    z_ddz,
)
from negpolylog.errors import PoleError


def P(*coeffs):
    return Polynomial(coeffs)


def RF(num, den):
    return RationalFunction(Polynomial(num), Polynomial(den))


small_ints = st.integers(-5, 5)
polys = st.lists(small_ints, min_size=0, max_size=5).map(Polynomial)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
rationals = st.builds(RationalFunction, polys, nonzero_polys)


# -- polynomial arithmetic -------------------------------------------------


def test_poly_basics():
    assert P(0, 0, 1).derivative() == P(0, 2)  # d/dz z^2 = 2z
    assert P(1, -1) * P(1, 1) == P(1, 0, -1)  # (1-z)(1+z) = 1-z^2
    assert P(0, 1, 0, 1) + P(0, 0, 0, -1) == P(0, 1)  # (z+z^3) + (-z^3) = z


def test_poly_variable_mismatch():
    with pytest.raises(ValueError, match="variable mismatch"):
        Polynomial([1], "z") + Polynomial([1], "u")


def test_gaussian_rational_arithmetic():
    assert I * I == GaussianRational(-1)
    assert (GaussianRational(1, 2) * GaussianRational(1, -2)) == GaussianRational(5)
    assert GaussianRational(1, 1) / GaussianRational(1, 1) == GaussianRational(1)
    assert GaussianRational(Fraction(1, 2)) + Fraction(1, 2) == GaussianRational(1)
    assert str(GaussianRational(Fraction(-3, 2), 1)) == "-3/2+i"


# -- rational function arithmetic -------------------------------------------


def test_rf_addition_hand_value():
    # z/(1-z) + z/(1+z) = [z(1+z) + z(1-z)] / (1-z^2) = 2z/(1-z^2), by hand
    f = RF([0, 1], [1, -1])
    g = RF([0, 1], [1, 1])
    assert f + g == RF([0, 2], [1, 0, -1])


def test_rf_self_cancellation_and_division():
    f = RF([0, 1], [1, -1])
    assert (f - f).is_zero()
    assert f / f == RF([1], [1])
    with pytest.raises(ZeroDivisionError):
        f / RationalFunction.zero()
    with pytest.raises(ZeroDivisionError):
        RF([1], [0])


def test_z_ddz_examples():
    # one quotient-rule step by hand: z d/dz [z/(1-z)] = z/(1-z)^2
    assert z_ddz(RF([0, 1], [1, -1])) == RF([0, 1], [1, -2, 1])
    assert z_ddz(RF([1], [1])).is_zero()
    assert z_ddz(RF([0, 0, 1], [1])) == RF([0, 0, 2], [1])  # z * 2z = 2z^2


def test_substitute_examples():
    f = RF([0, 1], [1, -1])
    assert substitute(f, "negate_z") == RF([0, -1], [1, 1])
    assert substitute(f, "square_z") == RF([0, 0, 1], [1, 0, -1])
    # hand algebra: (1/z) / (1 - 1/z^2) = z/(z^2 - 1)
    g = RF([0, 1], [1, 0, -1])
    assert substitute(g, "invert_z") == RF([0, 1], [-1, 0, 1])
    with pytest.raises(ValueError):
        substitute(f, "cube_z")


def test_substitute_i_times():
    f = RF([0, 1], [1, -1])
    g = substitute(f, "i_times_z")  # iz/(1 - iz)
    val = rf_eval(g, 0.25)
    expect = 0.25j / (1 - 0.25j)
    assert abs(val - expect) < 1e-15


def test_rf_eval_examples():
    f = RF([0, 1], [1, -1])
    assert rf_eval(f, 0.5) == pytest.approx(1.0)
    with pytest.raises(PoleError):
        rf_eval(f, 1.0)
    g = RF([0, 1], [1, 0, -1])
    assert rf_eval(g, 2.0).real == pytest.approx(-2 / 3)  # hand arithmetic


# -- canonical-form properties ----------------------------------------------


@given(polys, nonzero_polys)
@settings(max_examples=150)
def test_canonicalization_idempotent(num, den):
    f = RationalFunction(num, den)
    again = RationalFunction(f.num, f.den)
    assert again.num.coeffs == f.num.coeffs and again.den.coeffs == f.den.coeffs


@given(
    polys,
    nonzero_polys,
    st.sampled_from(
        [2, -3, Fraction(5, 7), GaussianRational(0, 2), GaussianRational(1, 1), GaussianRational(Fraction(-2, 3), 5)]
    ),
)
@settings(max_examples=150)
def test_canonical_form_kills_common_scalars(num, den, s):
    f = RationalFunction(num, den)
    g = RationalFunction(num.scale(s), den.scale(s))
    assert f == g


@given(rationals, rationals)
@settings(max_examples=150)
def test_z_ddz_is_a_derivation(f, g):
    assert z_ddz(f * g) == z_ddz(f) * g + f * z_ddz(g)


@given(rationals, rationals)
@settings(max_examples=150)
def test_square_substitution_is_a_homomorphism(f, g):
    assert substitute(f * g, "square_z") == substitute(f, "square_z") * substitute(g, "square_z")
    assert substitute(f + g, "square_z") == substitute(f, "square_z") + substitute(g, "square_z")


@given(rationals, st.fractions(min_value=-3, max_value=3, max_denominator=7))
@settings(max_examples=200)
def test_rf_eval_matches_exact_rational_evaluation(f, z):
    den_val = f.den.horner(GaussianRational(z))
    assume(not den_val.is_zero())
    exact = rf_eval_exact(f, z)
    assume(abs(float(exact.re)) < 1e9)
    # the double path must agree with BigRational evaluation to 1e-12 relative
    got = rf_eval(f, complex(float(z)))
    want = complex(float(exact.re), float(exact.im))
    assert abs(got - want) <= 1e-12 * (1 + abs(want))


# -- rendering and serialization ---------------------------------------------


def test_poly_text_rendering():
    assert poly_text(P(-1, 0, -1).scale(1)) == "-1 - z^2"
    assert poly_text(P(0, 1, 0, 6, 0, 1)) == "z + 6z^3 + z^5"
    assert poly_text(Polynomial([], "z")) == "0"
    assert poly_text(P(Fraction(1, 2), 1)) == "1/2 + z"


def test_rf_text_rendering():
    assert rf_to_text(RF([0, 1], [1, -1])) == "z/(1-z)"
    assert rf_to_text(RF([0, 1], [1, -2, 1])) == "z/(1-z)^2"
    assert rf_to_text(RF([0, 1, 1], [1, -3, 3, -1])) == "(z + z^2)/(1-z)^3"
    assert rf_to_text(RationalFunction.zero()) == "0"
    assert rf_to_text(RF([0, 3], [2])) == "3z/2"


def test_rf_latex_rendering():
    assert rf_to_latex(RF([0, 1], [1, -1])) == r"\frac{z}{(1-z)}"
    assert rf_to_latex(RF([0, 1, 1], [1, -3, 3, -1])) == r"\frac{z + z^{2}}{(1-z)^{3}}"


def test_json_round_trip():
    f = RF([0, 1, 0, 6, 0, 1], [1, 0, -3, 0, 3, 0, -1])
    blob = json.dumps(rf_to_json(f))
    assert rf_from_json(json.loads(blob)) == f


def test_json_round_trip_gaussian():
    f = RationalFunction(Polynomial([GaussianRational(1, 2), I]), Polynomial([2, GaussianRational(0, -1)]))
    assert rf_from_json(rf_to_json(f)) == f


def test_powered_display_handles_sign_flips():
    # canonical storage normalizes the denominator's lead; display flips back
    f = RF([0, 1], [1, 0, -1])
    assert f.den.lead() == GaussianRational(1)  # stored as z^2 - 1 style
    assert rf_to_text(f) == "z/(1-z^2)"
