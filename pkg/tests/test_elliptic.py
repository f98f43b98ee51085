import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gausschain import elliptic
from gausschain.elliptic import (
    HypergeomParams,
    Modulus,
    ellip_k_agm,
    ellip_k_quadrature,
    ellip_k_series,
    hypergeom_2f1,
)
from gausschain.errors import ArgumentError, ConvergenceError, DomainError

# K(k) from mpmath at 30 digits (parameter m = k^2), frozen
K_REFERENCE = {
    0.1: 1.5747455615173560,
    0.5: 1.6857503548125961,
    0.9: 2.2805491384227703,
    0.99: 3.3566005233611923,
}


def test_reference_values_are_current():
    with mpmath.workdps(30):
        for k, value in K_REFERENCE.items():
            assert float(mpmath.ellipk(mpmath.mpf(k) ** 2)) == pytest.approx(value, rel=1e-16)


@pytest.mark.parametrize("method", [ellip_k_agm, ellip_k_series, ellip_k_quadrature])
def test_k_zero(method):
    assert method(0.0) == pytest.approx(math.pi / 2, rel=1e-15)


@pytest.mark.parametrize("k, value", sorted(K_REFERENCE.items()))
def test_agm_against_reference(k, value):
    assert ellip_k_agm(k) == pytest.approx(value, rel=1e-14)


@pytest.mark.parametrize("k, value", sorted(K_REFERENCE.items()))
def test_quadrature_against_reference(k, value):
    assert ellip_k_quadrature(k) == pytest.approx(value, abs=1e-13)


def test_agm_matches_quadrature():
    assert abs(ellip_k_agm(0.5) - ellip_k_quadrature(0.5)) < 1e-12
    assert abs(ellip_k_agm(0.99) - ellip_k_quadrature(0.99)) < 1e-11


def test_series_matches():
    assert abs(ellip_k_series(0.5) - ellip_k_agm(0.5)) < 1e-12
    assert abs(ellip_k_series(0.9) - ellip_k_quadrature(0.9)) < 1e-10
    assert abs(ellip_k_quadrature(0.5) - ellip_k_series(0.5)) < 1e-10


def test_small_k_leading_term():
    k = 1e-3
    assert abs(ellip_k_quadrature(k) - math.pi / 2 - math.pi / 8 * k * k) < 1e-9


@pytest.mark.parametrize("k", [i / 10 for i in range(10)])
def test_three_way_agreement(k):
    values = [ellip_k_agm(k), ellip_k_series(k), ellip_k_quadrature(k)]
    assert max(values) - min(values) <= 1e-10


def test_monotone_on_grid():
    grid = np.linspace(0, 0.999, 100)
    values = [ellip_k_agm(k) for k in grid]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_endpoint_divergence():
    assert ellip_k_agm(0.9999) > 5
    assert ellip_k_quadrature(0.9999) == pytest.approx(ellip_k_agm(0.9999), rel=1e-12)


@pytest.mark.parametrize("k", [-0.1, 1.0, 1.5])
def test_modulus_domain(k):
    with pytest.raises(DomainError):
        Modulus(k)
    with pytest.raises(DomainError):
        ellip_k_agm(k)


def test_series_domain():
    with pytest.raises(DomainError):
        ellip_k_series(0.96)
    assert ellip_k_series(0.95) == pytest.approx(ellip_k_agm(0.95), rel=1e-13)


def test_quadrature_budget(monkeypatch):
    monkeypatch.setattr(elliptic, "QUAD_MAX_INTERVALS", 2)
    with pytest.raises(ConvergenceError):
        ellip_k_quadrature(0.9999)


def test_quadrature_tolerance_capped_by_rounding():
    assert ellip_k_quadrature(0.5, abs_tol=1e-300) == pytest.approx(K_REFERENCE[0.5], rel=1e-15)


@given(st.floats(min_value=0.0, max_value=0.9))
def test_reduction_property(k):
    f = hypergeom_2f1(HypergeomParams(0.5, 0.5, 1.0, k * k, 2000)).value
    assert f * math.pi / 2 == pytest.approx(ellip_k_series(k), rel=1e-13)


@given(st.floats(min_value=0.0, max_value=0.999), st.floats(min_value=0.0, max_value=0.999))
def test_monotonicity(k1, k2):
    if k1 < k2:
        assert ellip_k_agm(k1) <= ellip_k_agm(k2)


def test_hypergeom_examples():
    assert hypergeom_2f1(HypergeomParams(2.5, -1.3, 0.7, 0.0)).value == 1.0
    special = hypergeom_2f1(HypergeomParams(0.5, 0.5, 1.0, 0.25, 60)).value
    assert special == pytest.approx(2 / math.pi * ellip_k_quadrature(0.5), abs=1e-12)
    geometric = hypergeom_2f1(HypergeomParams(1, 1, 1, 0.5, 80)).value
    assert geometric == pytest.approx(2.0, abs=1e-12)


@pytest.mark.parametrize("a, b, c, x", [(1.5, 0.25, 2.5, 0.3), (-3, 2, 1.5, -0.7), (0.5, 1, 1.5, 0.81)])
def test_hypergeom_against_mpmath(a, b, c, x):
    expected = float(mpmath.hyp2f1(a, b, c, x))
    assert hypergeom_2f1(HypergeomParams(a, b, c, x, 400)).value == pytest.approx(expected, rel=1e-13)


def test_hypergeom_terminates_for_negative_integer_parameter():
    # 2F1(-2, b; c; x) is a quadratic polynomial
    r = hypergeom_2f1(HypergeomParams(-2, 1, 1, 0.5))
    assert r.value == pytest.approx(0.25)
    assert r.n_terms == 4 and r.error_estimate == 0


@pytest.mark.parametrize(
    "kwargs, exc",
    [({"gamma": 0}, DomainError), ({"gamma": -2.0}, DomainError), ({"x": 1.0}, DomainError),
     ({"x": math.nan}, ArgumentError), ({"n_terms": 0}, ArgumentError)],
)
def test_hypergeom_params_validation(kwargs, exc):
    base = {"alpha": 0.5, "beta": 0.5, "gamma": 1.0, "x": 0.1}
    with pytest.raises(exc):
        HypergeomParams(**{**base, **kwargs})
