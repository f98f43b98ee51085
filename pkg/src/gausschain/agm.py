"""Arithmetic-geometric mean and Gauss's series for ``1/M(1+x, 1-x)``.

The series coefficients are ``A_k = ((2k-1)!! / (2k)!!)^2 = (C(2k,k)/4^k)^2``.
Two exact identities pin them down independently of that closed form:

* the functional equation obtained from ``x = 2t/(1+t^2)``,
  ``sum A_k (2t/(1+t^2))^(2k) = (1 + t^2) sum A_k t^(4k)``, which follows
  from ``M(1+x, 1-x) = M(1+t^2, 1-t^2) / (1+t^2)`` under that substitution;
* the second-order ODE ``(x^3 - x) y'' + (3x^2 - 1) y' + x y = 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import ArgumentError, ConvergenceError, ResourceLimitError
from .series import TruncatedPowerSeries

__all__ = [
    "AgmResult",
    "GaussSeries",
    "agm",
    "gauss_series",
    "gauss_coefficient",
    "verify_functional_equation",
    "verify_agm_ode",
]

MAX_ITERATIONS = 64
GAUSS_SERIES_LIMIT = 200
FEQ_LIMIT = 60
ODE_LIMIT = 100


@dataclass(frozen=True)
class AgmResult:
    """Common limit of the mean iteration together with the trace.

    ``trace[0]`` is the ordered input pair ``(max(a, b), min(a, b))``;
    ``iterations`` is the number of pairs in the trace.
    """

    limit: float
    iterations: int
    trace: tuple[tuple[float, float], ...] = field(repr=False)

    def __float__(self) -> float:
        return self.limit


def _check_real(value, name: str) -> float:
    if isinstance(value, (bool, str, bytes)):
        raise ArgumentError(f"{name} must be a real number, got {value!r}")
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ArgumentError(f"{name} must be a real number, got {value!r}") from None
    if not math.isfinite(value):
        raise ArgumentError(f"{name} must be finite, got {value}")
    return value


def agm(a: float, b: float, rel_tol: float = 1e-15) -> AgmResult:
    """Arithmetic-geometric mean ``M(a, b)`` of two nonnegative reals.

    The pair is ordered so that ``a >= b`` and then iterated
    ``a, b <- (a + b)/2, sqrt(a b)`` until ``|a - b| <= rel_tol * a``.
    The midpoint of the final pair is returned. ``M(a, 0) = 0``.

    Raises:
        ArgumentError: for a nonpositive larger argument, a negative argument,
            non-finite input, or ``rel_tol`` outside ``(0, 1)``.
        ConvergenceError: if the iteration stalls (never observed for finite
            positive input).
    """
    a = _check_real(a, "a")
    b = _check_real(b, "b")
    rel_tol = _check_real(rel_tol, "rel_tol")
    if not 0 < rel_tol < 1:
        raise ArgumentError(f"rel_tol must lie in (0, 1), got {rel_tol}")
    if a < 0 or b < 0:
        raise ArgumentError(f"agm needs nonnegative arguments, got a={a}, b={b}")
    if a < b:
        a, b = b, a
    if a == 0:
        raise ArgumentError("agm needs at least one positive argument")
    if b == 0:
        return AgmResult(0.0, 1, ((a, b),))

    trace = [(a, b)]
    while abs(a - b) > rel_tol * a:
        if len(trace) >= MAX_ITERATIONS:
            raise ConvergenceError(f"agm did not converge in {MAX_ITERATIONS} iterations")
        a, b = (a + b) / 2, math.sqrt(a * b)
        # rounding can leave the geometric mean one ulp above the arithmetic one
        if b > a:
            a, b = b, a
        trace.append((a, b))
    return AgmResult((a + b) / 2, len(trace), tuple(trace))


@lru_cache(maxsize=None)
def gauss_coefficient(k: int) -> Fraction:
    """``A_k = (C(2k, k) / 4^k)^2``, the coefficient of ``x^(2k)``."""
    return Fraction(comb(2 * k, k), 4**k) ** 2


@dataclass(frozen=True)
class GaussSeries:
    """``1/M(1+x, 1-x) = sum A_k x^(2k)`` held as exact rationals."""

    k_max: int
    coefficients: tuple[Fraction, ...]

    def as_series(self) -> TruncatedPowerSeries:
        """The same data as a power series in ``x`` of order ``2 k_max``."""
        coeffs = [Fraction(0)] * (2 * self.k_max + 1)
        for k, a in enumerate(self.coefficients):
            coeffs[2 * k] = a
        return TruncatedPowerSeries(2 * self.k_max, tuple(coeffs))

    def partial_sum(self, x: float) -> float:
        x2 = x * x
        return math.fsum(float(a) * x2**k for k, a in enumerate(self.coefficients))


def _check_count(value, name: str, limit: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ArgumentError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise ArgumentError(f"{name} must be nonnegative, got {value}")
    if value > limit:
        raise ResourceLimitError(f"{name} must be <= {limit}, got {value}")
    return value


def gauss_series(k_max: int) -> GaussSeries:
    """Exact coefficients ``A_0 .. A_{k_max}``."""
    k_max = _check_count(k_max, "k_max", GAUSS_SERIES_LIMIT)
    return GaussSeries(k_max, tuple(gauss_coefficient(k) for k in range(k_max + 1)))


def _coefficients(k_max: int, coefficients) -> list[Fraction]:
    if coefficients is None:
        return [gauss_coefficient(k) for k in range(k_max + 1)]
    coefficients = [Fraction(c) for c in coefficients]
    if len(coefficients) < k_max + 1:
        raise ArgumentError(f"need {k_max + 1} coefficients, got {len(coefficients)}")
    return coefficients[: k_max + 1]


def verify_functional_equation(k_max: int, coefficients=None) -> TruncatedPowerSeries:
    """Residual of ``sum A_k (2t/(1+t^2))^(2k) - (1+t^2) sum A_k t^(4k)`` in ``t``.

    Both sums run over ``k <= k_max`` and are expanded exactly to order
    ``4 k_max``, with ``(1+t^2)^(-2k)`` taken from the binomial series. The
    left sum omits terms starting at ``t^(2 k_max + 2)``, so only the
    coefficients of ``t^0 .. t^(2 k_max)`` are certified to vanish; the rest
    are returned for inspection.
    """
    k_max = _check_count(k_max, "k_max", FEQ_LIMIT)
    a = _coefficients(k_max, coefficients)
    order = 4 * k_max
    lhs = [Fraction(0)] * (order + 1)
    for k in range(k_max + 1):
        if a[k] == 0:
            continue
        scale = a[k] * 4**k  # (2t)^(2k)
        # (1 + u)^(-2k) = sum_j (-1)^j C(2k + j - 1, j) u^j with u = t^2
        j = 0
        while 2 * k + 2 * j <= order:
            binom = comb(2 * k + j - 1, j) if k else (1 if j == 0 else 0)
            lhs[2 * k + 2 * j] += scale * (-1) ** j * binom
            j += 1
    rhs = [Fraction(0)] * (order + 1)
    for k in range(k_max + 1):
        for shift in (0, 2):
            if 4 * k + shift <= order:
                rhs[4 * k + shift] += a[k]
    return TruncatedPowerSeries(order, tuple(p - q for p, q in zip(lhs, rhs)))


def verify_agm_ode(k_max: int, coefficients=None) -> TruncatedPowerSeries:
    """Residual of ``(x^3 - x) y'' + (3x^2 - 1) y' + x y`` for the truncated series.

    With ``y`` known through ``x^(2 k_max)`` the residual is known through
    ``x^(2 k_max - 1)``; that is the order returned, and it must vanish.
    """
    k_max = _check_count(k_max, "k_max", ODE_LIMIT)
    a = _coefficients(k_max, coefficients)
    y = GaussSeries(k_max, tuple(a)).as_series()
    d1 = y.derivative()
    d2 = d1.derivative()
    residual = d2.shift(3) - d2.shift(1) + d1.shift(2) * 3 - d1 + y.shift(1)
    return residual
