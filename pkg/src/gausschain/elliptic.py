"""Complete elliptic integral of the first kind, three ways.

``K(k) = int_0^{pi/2} (1 - k^2 sin^2 phi)^(-1/2) dphi`` is evaluated

* through the AGM: ``K(k) = (pi/2) / M(1+k, 1-k)``,
* through Gauss's series ``(pi/2) sum A_j k^(2j)``,
* by adaptive Gauss-Legendre quadrature of the integrand (the oracle).

The general hypergeometric series ``2F1(a, b; c; x)`` is also here since
``K(k) = (pi/2) 2F1(1/2, 1/2; 1; k^2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .agm import agm, gauss_coefficient
from .errors import ArgumentError, ConvergenceError, DomainError, NumericError

__all__ = [
    "Modulus",
    "HypergeomParams",
    "Hyp2F1Result",
    "ellip_k_agm",
    "ellip_k_quadrature",
    "ellip_k_series",
    "hypergeom_2f1",
    "SERIES_MAX_MODULUS",
]

HALF_PI = math.pi / 2
SERIES_MAX_MODULUS = 0.95
SERIES_MAX_TERMS = 500
SERIES_REL_CUTOFF = 1e-17
QUAD_NODES = 15
QUAD_MAX_INTERVALS = 4096
# per-interval acceptance never demands more than this relative accuracy
ROUNDOFF_FLOOR = 32 * np.finfo(float).eps


@dataclass(frozen=True)
class Modulus:
    """Elliptic modulus ``0 <= k < 1``."""

    k: float

    def __post_init__(self):
        k = self.k
        if isinstance(k, bool) or not isinstance(k, (int, float)):
            raise ArgumentError(f"modulus must be a real number, got {k!r}")
        if not math.isfinite(k) or not 0 <= k < 1:
            raise DomainError(f"modulus must satisfy 0 <= k < 1, got {k}")
        object.__setattr__(self, "k", float(k))

    def __float__(self) -> float:
        return self.k


def _modulus(k) -> float:
    return k.k if isinstance(k, Modulus) else Modulus(k).k


def ellip_k_agm(k) -> float:
    """``K(k)`` from the arithmetic-geometric mean."""
    k = _modulus(k)
    return HALF_PI / agm(1.0 + k, 1.0 - k).limit


@lru_cache(maxsize=1)
def _legendre_rule(n: int = QUAD_NODES):
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return nodes, weights


def _gauss_legendre(f, a: float, b: float) -> float:
    nodes, weights = _legendre_rule()
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    return half * float(np.dot(weights, f(mid + half * nodes)))


def ellip_k_quadrature(k, abs_tol: float = 1e-14) -> float:
    """``K(k)`` by adaptive composite 15-point Gauss-Legendre quadrature.

    An interval is accepted when the rule on the whole interval and the sum
    over its two halves agree to within its share of ``abs_tol``; the halves'
    sum is kept. No interval is asked for better than ``32 eps`` relative
    agreement, so very small ``abs_tol`` is capped by rounding. Independent
    of the AGM and series routes.

    Raises:
        ConvergenceError: if more than 4096 intervals would be needed.
    """
    k = _modulus(k)
    if not abs_tol > 0:
        raise ArgumentError(f"abs_tol must be positive, got {abs_tol}")
    # 1 - k^2 sin^2 = cos^2 + k'^2 sin^2 avoids cancellation as k -> 1
    kc2 = (1.0 - k) * (1.0 + k)

    def integrand(phi):
        s = np.sin(phi)
        c = np.cos(phi)
        return 1.0 / np.sqrt(c * c + kc2 * s * s)

    total_length = HALF_PI
    accepted = []
    stack = [(0.0, HALF_PI, _gauss_legendre(integrand, 0.0, HALF_PI))]
    n_intervals = 1
    while stack:
        a, b, whole = stack.pop()
        m = 0.5 * (a + b)
        left = _gauss_legendre(integrand, a, m)
        right = _gauss_legendre(integrand, m, b)
        local_tol = max(abs_tol * (b - a) / total_length, ROUNDOFF_FLOOR * abs(left + right))
        if abs(whole - (left + right)) <= local_tol:
            accepted.extend((left, right))
            continue
        n_intervals += 1
        if n_intervals > QUAD_MAX_INTERVALS:
            raise ConvergenceError(
                f"quadrature for K({k}) did not reach abs_tol={abs_tol} "
                f"within {QUAD_MAX_INTERVALS} intervals"
            )
        stack.append((a, m, left))
        stack.append((m, b, right))
    return math.fsum(accepted)


@lru_cache(maxsize=None)
def _gauss_coefficients_float(n: int) -> tuple[float, ...]:
    return tuple(float(gauss_coefficient(j)) for j in range(n))


def ellip_k_series(k) -> float:
    """``K(k) = (pi/2) sum A_j k^(2j)`` for ``k <= 0.95``.

    Terms are added until the next one falls below ``1e-17`` of the running
    sum, or 500 terms have been used. Beyond ``k = 0.95`` the term ratio
    approaches 1; use :func:`ellip_k_agm` there.
    """
    k = _modulus(k)
    if k > SERIES_MAX_MODULUS:
        raise DomainError(
            f"series route is limited to k <= {SERIES_MAX_MODULUS} (got {k}); use ellip_k_agm"
        )
    coeffs = _gauss_coefficients_float(SERIES_MAX_TERMS)
    k2 = k * k
    terms = []
    power = 1.0
    running = 0.0
    for a in coeffs:
        term = a * power
        if terms and term < SERIES_REL_CUTOFF * running:
            break
        terms.append(term)
        running += term
        power *= k2
    return HALF_PI * math.fsum(terms)


@dataclass(frozen=True)
class HypergeomParams:
    """Arguments of the partial sum ``2F1(alpha, beta; gamma; x)`` over ``n_terms`` terms."""

    alpha: float
    beta: float
    gamma: float
    x: float
    n_terms: int = 200

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "x"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ArgumentError(f"{name} must be a finite real, got {value!r}")
        if self.gamma <= 0 and float(self.gamma).is_integer():
            raise DomainError(f"gamma must not be zero or a negative integer, got {self.gamma}")
        if not -1 < self.x < 1:
            raise DomainError(f"series argument must satisfy |x| < 1, got {self.x}")
        if isinstance(self.n_terms, bool) or not isinstance(self.n_terms, int) or self.n_terms < 1:
            raise ArgumentError(f"n_terms must be a positive integer, got {self.n_terms!r}")


@dataclass(frozen=True)
class Hyp2F1Result:
    value: float
    last_term: float
    n_terms: int

    @property
    def error_estimate(self) -> float:
        """Magnitude of the last term added."""
        return abs(self.last_term)


def hypergeom_2f1(p: HypergeomParams) -> Hyp2F1Result:
    """Partial sum of ``1 + (a b / c) x / 1! + ...`` over ``p.n_terms`` terms.

    Uses ``t_{n+1} = t_n (a + n)(b + n) x / ((c + n)(n + 1))`` starting from
    ``t_0 = 1``.
    """
    a, b, c, x = float(p.alpha), float(p.beta), float(p.gamma), float(p.x)
    term = 1.0
    terms = [term]
    for n in range(p.n_terms - 1):
        term *= (a + n) * (b + n) * x / ((c + n) * (n + 1))
        terms.append(term)
        if term == 0.0:
            break
    value = math.fsum(terms)
    if not math.isfinite(value):
        raise NumericError(f"2F1 partial sum is not finite for {p}")
    return Hyp2F1Result(value, terms[-1], len(terms))
