"""Derivative polynomials and the multi-route csc/sec evaluators."""

import math

import pytest

from negpolylog.circular import (
    TRIG_GRID,
    cot_derivative_poly,
    csc_derivative_binomial,
    csc_derivative_eval,
    csc_derivative_via_li,
    derivative_poly_recurrence,
    sec_derivative_binomial,
    sec_derivative_eval,
    sec_derivative_via_li,
    tan_derivative_poly,
)
from negpolylog.errors import SingularityError
from negpolylog.jets import nth_derivative
from negpolylog.reports import rel_err

CSC_ROUTES = (csc_derivative_eval, csc_derivative_via_li, csc_derivative_binomial)
SEC_ROUTES = (sec_derivative_eval, sec_derivative_via_li, sec_derivative_binomial)


def test_cot_polynomials():
    assert cot_derivative_poly(1).coefficient_ints() == (-1, 0, -1)
    assert cot_derivative_poly(2).coefficient_ints() == (0, 2, 0, 2)
    assert cot_derivative_poly(3).coefficient_ints() == (-2, 0, -8, 0, -6)


def test_tan_polynomials():
    assert tan_derivative_poly(1).coefficient_ints() == (1, 0, 1)
    assert tan_derivative_poly(2).coefficient_ints() == (0, 2, 0, 2)
    assert tan_derivative_poly(4).poly == derivative_poly_recurrence("tan", 4).poly


def test_recurrence_base_cases():
    assert derivative_poly_recurrence("cot", 0).coefficient_ints() == (0, 1)
    assert derivative_poly_recurrence("tan", 0).coefficient_ints() == (0, 1)
    # two steps by hand: P1 = -(1+u^2), P2 = -(1+u^2) * (-2u) = 2u + 2u^3
    assert derivative_poly_recurrence("cot", 2).coefficient_ints() == (0, 2, 0, 2)
    with pytest.raises(ValueError):
        derivative_poly_recurrence("sec", 1)


def test_polynomial_routes_agree_exactly():
    for n in range(1, 16):
        assert cot_derivative_poly(n).poly == derivative_poly_recurrence("cot", n).poly
        assert tan_derivative_poly(n).poly == derivative_poly_recurrence("tan", n).poly


def test_polynomial_shape_invariants():
    for n in range(1, 12):
        p = cot_derivative_poly(n).poly
        assert p.degree == n + 1
        # parity: only terms with k = n+1 (mod 2) survive
        for k, c in enumerate(p.coeffs):
            if (k - (n + 1)) % 2 != 0:
                assert c.is_zero(), (n, k)


def test_polynomial_evaluation_matches_jet():
    for n in (1, 3, 6):
        for x in (0.7, 2.0):
            p = cot_derivative_poly(n)
            want = nth_derivative("cot", x, n)
            got = p(math.cos(x) / math.sin(x))
            assert rel_err(got, want) < 1e-9
            q = tan_derivative_poly(n)
            want = nth_derivative("tan", x, n)
            got = q(math.tan(x))
            assert rel_err(got, want) < 1e-9


def test_csc_examples():
    assert csc_derivative_eval(0, math.pi / 2) == pytest.approx(1.0)
    assert csc_derivative_eval(1, math.pi / 2) == pytest.approx(0.0, abs=1e-12)
    got = csc_derivative_eval(4, 1.0)
    want = nth_derivative("csc", 1.0, 4)
    assert rel_err(got, want) < 1e-8
    assert csc_derivative_via_li(0, math.pi / 2) == pytest.approx(1.0)
    assert rel_err(csc_derivative_via_li(2, 0.7), csc_derivative_eval(2, 0.7)) < 1e-9
    assert rel_err(csc_derivative_via_li(6, 2.0), nth_derivative("csc", 2.0, 6)) < 1e-8
    assert csc_derivative_binomial(0, math.pi / 2) == pytest.approx(1.0)
    assert rel_err(csc_derivative_binomial(3, 1.1), csc_derivative_eval(3, 1.1)) < 1e-8


def test_sec_examples():
    assert sec_derivative_eval(0, 0.0) == pytest.approx(1.0)
    assert sec_derivative_eval(2, 0.0) == pytest.approx(1.0)
    assert rel_err(sec_derivative_binomial(3, 0.4), nth_derivative("sec", 0.4, 3)) < 1e-7
    for route in SEC_ROUTES:
        assert rel_err(route(5, 0.9), nth_derivative("sec", 0.9, 5)) < 1e-8


def test_multi_route_agreement_on_grid():
    for n in range(11):
        for x in TRIG_GRID:
            want = nth_derivative("csc", x, n)
            for route in CSC_ROUTES:
                assert rel_err(route(n, x), want) < 1e-7, (route.__name__, n, x)
            want = nth_derivative("sec", x, n)
            for route in SEC_ROUTES:
                assert rel_err(route(n, x), want) < 1e-7, (route.__name__, n, x)


def test_cot_double_angle():
    for i in range(1, 11):
        x = 0.13 * i
        lhs = 2.0 * math.cos(2 * x) / math.sin(2 * x)
        rhs = math.cos(x) / math.sin(x) - math.tan(x)
        assert rel_err(lhs, rhs) < 1e-12


def test_singularity_guards():
    with pytest.raises(SingularityError):
        csc_derivative_eval(2, math.pi)
    with pytest.raises(SingularityError):
        sec_derivative_via_li(1, math.pi / 2)
