"""Tests for the independent cross-check machinery."""

import math

import pytest

from kspecfun import ConvergenceError, DomainError, QuadratureError
from kspecfun.beta import beta_k, beta_k_deriv
from kspecfun.oracles import (
    adaptive_quad,
    alt_series_sum,
    cm_probe,
    finite_diff,
    fit_discrepancy,
)
from kspecfun.scalar import digamma


# ------------------------------------------------------------- quadrature
TRIVIAL_INTEGRALS = [
    (lambda x: x * x, 0.0, 1.0, 1.0 / 3.0),
    (lambda x: math.log(1.0 / x), 0.0, 1.0, 1.0),
    (lambda x: math.log(math.sin(x)), 0.0, math.pi, -math.pi * math.log(2.0)),
]


@pytest.mark.parametrize("f,a,b,truth", TRIVIAL_INTEGRALS)
def test_adaptive_quad_values_and_conservative_errors(f, a, b, truth):
    q = adaptive_quad(f, a, b, 1e-10)
    assert q.value == pytest.approx(truth, abs=1e-10)
    assert abs(q.value - truth) <= q.error_estimate
    assert q.subdivisions >= 1


def test_adaptive_quad_is_exact_on_degree_22():
    # validates the hardcoded Gauss-Kronrod nodes/weights
    q = adaptive_quad(lambda x: x**22, 0.0, 1.0, 1e-13)
    assert q.value == pytest.approx(1.0 / 23.0, rel=1e-14)


def test_adaptive_quad_bad_interval():
    with pytest.raises(DomainError):
        adaptive_quad(lambda x: x, 1.0, 0.0, 1e-8)
    with pytest.raises(DomainError):
        adaptive_quad(lambda x: x, 0.0, math.inf, 1e-8)


def test_adaptive_quad_depth_cap_carries_best_estimate():
    # x^(-0.99) concentrates most of its mass below any dyadic scale the
    # 50-level bisection can reach, so the cap must trip
    with pytest.raises(QuadratureError) as info:
        adaptive_quad(lambda x: x**-0.99, 0.0, 1.0, 1e-6)
    err = info.value
    assert err.value is not None and 0.0 < err.value < 100.0
    assert err.error_estimate > 1e-6
    assert err.subdivisions >= 50


# ------------------------------------------------------------- series
def test_alt_series_sum_classics():
    assert alt_series_sum(lambda n: (-1.0) ** n / (n + 1.0), 1e-5).value == pytest.approx(
        math.log(2.0), abs=1e-5
    )
    assert alt_series_sum(lambda n: (-1.0) ** n / (2.0 * n + 1.0), 1e-5).value == pytest.approx(
        math.pi / 4.0, abs=1e-5
    )
    eta2 = alt_series_sum(lambda n: (-1.0) ** n / (n + 1.0) ** 2, 1e-9)
    assert eta2.value == pytest.approx(math.pi**2 / 12.0, abs=1e-9)
    assert eta2.converged


def test_alt_series_truncation_bound_is_valid():
    term = lambda n: (-1.0) ** n / (n + 1.0) ** 2
    coarse = alt_series_sum(term, 1e-6)
    fine = alt_series_sum(term, 1e-7)
    assert abs(fine.value - coarse.value) < coarse.error_estimate


def test_alt_series_cap():
    with pytest.raises(ConvergenceError):
        alt_series_sum(lambda n: (-1.0) ** n / (n + 1.0), 1e-9, cap=1000)


# ------------------------------------------------------------- differencing
def test_finite_diff_polynomials_exact():
    assert finite_diff(lambda x: x * x, 3.0, 1) == pytest.approx(6.0, rel=1e-9)
    assert finite_diff(lambda x: 2.0 * x + 1.0, 0.3, 1) == pytest.approx(2.0, rel=1e-9)
    assert finite_diff(lambda x: x * x, 1.7, 2) == pytest.approx(2.0, rel=1e-6)


def test_finite_diff_special_functions():
    assert finite_diff(digamma, 1.0, 1) == pytest.approx(math.pi**2 / 6.0, abs=1e-6)
    assert finite_diff(lambda x: beta_k(1.0, x), 1.0, 1) == pytest.approx(
        -math.pi**2 / 12.0, abs=1e-6
    )
    assert finite_diff(lambda x: beta_k(1.0, x), 1.0, 1) == pytest.approx(
        beta_k_deriv(1.0, 1, 1.0), abs=1e-6
    )
    with pytest.raises(DomainError):
        finite_diff(digamma, 1.0, 3)


# ------------------------------------------------------------- cm probe
def test_cm_probe_exponential_passes():
    res = cm_probe(lambda x: math.exp(-x), 0.5, 5.0, 0.1, 6)
    assert res.passed
    assert res.first_violation is None


def test_cm_probe_x_beta_passes():
    res = cm_probe(lambda x: x * beta_k(1.0, x), 0.2, 5.0, 0.1, 6)
    assert res.passed


def test_cm_probe_square_fails_at_first_order():
    res = cm_probe(lambda x: x * x, 0.5, 5.0, 0.1, 6)
    assert not res.passed
    assert res.first_violation[0] == 1  # increasing, so j = 1 breaks first


def test_cm_probe_validation():
    with pytest.raises(DomainError):
        cm_probe(math.exp, 0.0, 1.0, 0.5, 6)  # 0 + 6*0.5 > 1


# ------------------------------------------------------------- fitting
def test_fit_discrepancy_ratio():
    pairs = [(2.0 * r, r) for r in (0.3, 1.7, 9.1, 44.0)]
    fit = fit_discrepancy(pairs, "ratio")
    assert fit.constant == pytest.approx(2.0, rel=1e-14)
    assert fit.residual_rms < 1e-14
    assert fit.n_points == 4


def test_fit_discrepancy_ratio_negative_constant():
    pairs = [(-0.5 * r, r) for r in (1.0, 2.0, 3.0)]
    fit = fit_discrepancy(pairs, "ratio")
    assert fit.constant == pytest.approx(-0.5, rel=1e-14)


def test_fit_discrepancy_offset():
    pairs = [(r + 0.25, r) for r in (0.0, -3.0, 7.5)]
    fit = fit_discrepancy(pairs, "offset")
    assert fit.constant == pytest.approx(0.25, abs=1e-15)
    assert fit.residual_rms < 1e-15


def test_fit_discrepancy_identity_pairs():
    pairs = [(r, r) for r in (1.0, 2.0, 3.0)]
    assert fit_discrepancy(pairs, "ratio").constant == pytest.approx(1.0, rel=1e-15)
    assert fit_discrepancy(pairs, "offset").constant == pytest.approx(0.0, abs=1e-15)


def test_fit_discrepancy_degenerate_inputs():
    with pytest.raises(DomainError):
        fit_discrepancy([(1.0, 1.0), (2.0, 2.0)], "ratio")
    with pytest.raises(DomainError):
        fit_discrepancy([(1.0, 0.0), (2.0, 2.0), (3.0, 3.0)], "ratio")
    with pytest.raises(DomainError):
        fit_discrepancy([(1.0, 1.0), (2.0, 2.0), (3.0, 3.0)], "median")
