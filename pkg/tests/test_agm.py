import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gausschain.agm import agm, gauss_coefficient, gauss_series, verify_agm_ode, verify_functional_equation
from gausschain.elliptic import ellip_k_quadrature
from gausschain.errors import ArgumentError

positive = st.floats(min_value=1e-3, max_value=10.0)
wide = st.floats(min_value=1e-3, max_value=1e3)


def test_fixed_point():
    r = agm(1, 1, 1e-15)
    assert r.limit == 1.0
    assert r.iterations == 1


def test_homogeneity_example():
    assert agm(2, 8).limit == pytest.approx(2 * agm(1, 4).limit, rel=1e-15)


def test_zero_argument():
    assert agm(1, 0).limit == 0.0
    assert agm(0, 3).limit == 0.0


def test_against_quadrature_oracle():
    x = 0.5
    assert agm(1 + x, 1 - x).limit == pytest.approx((math.pi / 2) / ellip_k_quadrature(x), abs=1e-12)


@pytest.mark.parametrize("a, b", [(1, 2), (24, 6), (1e-3, 1e3), (math.sqrt(2), 1)])
def test_against_mpmath(a, b):
    with mpmath.workdps(40):
        expected = float(mpmath.agm(a, b))
    assert agm(a, b).limit == pytest.approx(expected, rel=2e-15)


def test_gauss_constant():
    # 1/M(1, sqrt 2), known to 16 digits
    assert 1 / agm(1, math.sqrt(2)).limit == pytest.approx(0.8346268416740731, rel=1e-15)


@pytest.mark.parametrize(
    "a, b, tol",
    [(-1, 1, 1e-15), (1, -1, 1e-15), (0, 0, 1e-15), (math.inf, 1, 1e-15), (math.nan, 1, 1e-15),
     (1, 2, 0.0), (1, 2, 1.5), ("1", 2, 1e-15), (True, 2, 1e-15)],
)
def test_rejects_bad_input(a, b, tol):
    with pytest.raises(ArgumentError):
        agm(a, b, tol)


@given(positive, positive, positive)
def test_homogeneity(alpha, a, b):
    assert agm(alpha * a, alpha * b).limit == pytest.approx(alpha * agm(a, b).limit, rel=1e-14)


@given(positive, positive)
def test_symmetry(a, b):
    assert agm(a, b).limit == agm(b, a).limit


@given(wide, wide)
def test_sandwich_and_iteration_bound(a, b):
    r = agm(a, b)
    assert r.trace[0] == (max(a, b), min(a, b))
    assert r.iterations <= 10
    assert min(a, b) <= r.limit <= max(a, b)
    for (a0, b0), (a1, b1) in zip(r.trace, r.trace[1:]):
        ulp = math.ulp(a0)
        assert b0 <= b1 + ulp and b1 <= a1 + ulp and a1 <= a0 + ulp


@given(st.floats(min_value=0.0, max_value=0.99))
def test_evenness(x):
    assert 1 / agm(1 + x, 1 - x).limit == pytest.approx(1 / agm(1 - x, 1 + x).limit, rel=1e-14)


def test_gauss_coefficients_closed_values():
    assert gauss_series(2).coefficients == (1, Fraction(1, 4), Fraction(9, 64))
    assert gauss_series(0).coefficients == (1,)
    assert gauss_series(3).coefficients[-1] == Fraction(225, 2304) == Fraction(25, 256)


@pytest.mark.parametrize("k", range(12))
def test_gauss_coefficient_product_form(k):
    num = math.prod(range(1, 2 * k, 2))
    den = math.prod(range(2, 2 * k + 1, 2))
    assert gauss_coefficient(k) == Fraction(num, den) ** 2


@pytest.mark.parametrize("x", [0.1, 0.3, -0.5])
def test_partial_sums_converge_to_agm(x):
    assert gauss_series(120).partial_sum(x) == pytest.approx(1 / agm(1 + x, 1 - x).limit, rel=1e-14)


def test_series_representation():
    s = gauss_series(3).as_series()
    assert s.order == 6
    assert s[2] == Fraction(1, 4) and s[3] == 0


@pytest.mark.parametrize("k_max", [0, 5, 20, 40])
def test_functional_equation(k_max):
    r = verify_functional_equation(k_max)
    assert all(c == 0 for c in r.coeffs[: 2 * k_max + 1])


def test_functional_equation_detects_bad_coefficient():
    coeffs = [gauss_coefficient(k) for k in range(6)]
    coeffs[2] += Fraction(1, 1000)
    r = verify_functional_equation(5, coeffs)
    assert any(c != 0 for c in r.coeffs[:11])


@pytest.mark.parametrize("k_max", [1, 10, 50])
def test_agm_ode(k_max):
    r = verify_agm_ode(k_max)
    assert r.order == 2 * k_max - 1
    assert r.is_zero()


def test_agm_ode_empty_at_zero():
    assert verify_agm_ode(0).order == -1


def test_agm_ode_detects_bad_coefficient():
    coeffs = [gauss_coefficient(k) for k in range(11)]
    coeffs[2] += Fraction(1, 1000)
    assert not verify_agm_ode(10, coeffs).is_zero()


@pytest.mark.parametrize("fn, bad", [(gauss_series, -1), (gauss_series, 1.5), (verify_agm_ode, 101),
                                     (verify_functional_equation, 61)])
def test_size_guards(fn, bad):
    with pytest.raises(ArgumentError):
        fn(bad)
