"""Jacobi theta constants at a real nome and sums of squares.

For ``0 <= q < 1``::

    theta2(q) = 2 sum_{n>=0} q^((n + 1/2)^2)
    theta3(q) = 1 + 2 sum_{n>=1} q^(n^2)
    theta4(q) = 1 + 2 sum_{n>=1} (-1)^n q^(n^2)

``theta3(q)^k = sum_n r_k(n) q^n`` where ``r_k(n)`` counts integer
``k``-tuples whose squares sum to ``n``. The counts are computed exactly by
powering the 0/1 polynomial ``sum_{m^2 <= N} q^(m^2)`` and checked against
direct lattice enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from math import isqrt

from .agm import agm
from .elliptic import ellip_k_agm
from .errors import ArgumentError, DomainError, ResourceLimitError

__all__ = [
    "Nome",
    "ThetaTriple",
    "SumOfSquaresTable",
    "ThetaResiduals",
    "theta_constants",
    "truncation_index",
    "jacobi_quartic_residual",
    "sum_of_squares_series",
    "sum_of_squares_bruteforce",
    "lattice_points_in_ball",
    "verify_theta_identities",
]

DEFAULT_TAIL_TOL = 1e-17
VERIFY_MAX_Q = 0.7
SERIES_MAX_K = 8
SERIES_MAX_N = 10_000
BRUTE_MAX_K = 4
BRUTE_MAX_N = 500


@dataclass(frozen=True)
class Nome:
    """Real nome ``0 <= q < 1`` with the tail tolerance used for truncation."""

    q: float
    tail_tol: float = DEFAULT_TAIL_TOL

    def __post_init__(self):
        for name in ("q", "tail_tol"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ArgumentError(f"{name} must be a finite real, got {value!r}")
        if not 0 <= self.q < 1:
            raise DomainError(f"nome must satisfy 0 <= q < 1, got {self.q}")
        if not self.tail_tol > 0:
            raise ArgumentError(f"tail_tol must be positive, got {self.tail_tol}")
        object.__setattr__(self, "q", float(self.q))
        object.__setattr__(self, "tail_tol", float(self.tail_tol))


def _nome(nome) -> Nome:
    return nome if isinstance(nome, Nome) else Nome(nome)


@dataclass(frozen=True)
class ThetaTriple:
    theta2: float
    theta3: float
    theta4: float
    terms_used: int


def truncation_index(q: float, tail_tol: float) -> int:
    """Smallest ``N >= 1`` with ``q^(N^2) / (1 - q) < tail_tol``.

    ``sum_{n>=N} q^(n^2) <= q^(N^2) / (1 - q)``, so summing indices below
    ``N`` leaves a tail bounded by ``tail_tol`` (per series, before the
    leading factor 2).
    """
    if q == 0:
        return 1
    log_q = math.log(q)
    target = math.log(tail_tol * (1 - q))
    n = max(1, math.ceil(math.sqrt(target / log_q)))
    # guard the float estimate from both sides
    while n > 1 and (n - 1) ** 2 * log_q < target:
        n -= 1
    while n * n * log_q >= target:
        n += 1
    return n


def theta_constants(nome) -> ThetaTriple:
    """Sum ``theta2, theta3, theta4`` at a real nome.

    Indices ``0 .. N-1`` are used, with ``N`` from :func:`truncation_index`;
    ``terms_used`` records ``N``. ``theta4`` is an alternating sum, so its
    error is absolute (about ``eps * theta3``); above ``q ~ 0.93`` the true
    value drops below that and the result may round to 0.
    """
    nome = _nome(nome)
    q = nome.q
    n_terms = truncation_index(q, nome.tail_tol)
    if q == 0:
        return ThetaTriple(0.0, 1.0, 1.0, n_terms)
    log_q = math.log(q)
    even = [math.exp(n * n * log_q) for n in range(1, n_terms)]
    half = [math.exp((n + 0.5) ** 2 * log_q) for n in range(n_terms)]
    theta2 = 2.0 * math.fsum(half)
    theta3 = 1.0 + 2.0 * math.fsum(even)
    theta4 = 1.0 + 2.0 * math.fsum(-t if n % 2 else t for n, t in enumerate(even, start=1))
    return ThetaTriple(theta2, theta3, theta4, n_terms)


def jacobi_quartic_residual(triple: ThetaTriple) -> float:
    """``|theta2^4 + theta4^4 - theta3^4| / theta3^4``."""
    t3_4 = triple.theta3**4
    return abs(triple.theta2**4 + triple.theta4**4 - t3_4) / t3_4


@dataclass(frozen=True)
class ThetaResiduals:
    """Absolute residuals of the theta identities at one nome."""

    landen: float
    geometric_mean: float
    agm_normalization: float
    k_bridge: float

    def as_dict(self) -> dict[str, float]:
        return {
            "landen": self.landen,
            "geometric_mean": self.geometric_mean,
            "agm_normalization": self.agm_normalization,
            "k_bridge": self.k_bridge,
        }


def verify_theta_identities(nome) -> ThetaResiduals:
    """Evaluate the duplication, AGM and elliptic-integral identities at ``q``.

    * landen: ``(theta3(q)^2 + theta4(q)^2) / 2 = theta3(q^2)^2``
    * geometric_mean: ``sqrt(theta3(q)^2 theta4(q)^2) = theta4(q^2)^2``
    * agm_normalization: ``M(theta3(q)^2, theta4(q)^2) = 1``
    * k_bridge: ``K(x) = (pi/2) theta3(q)^2`` with ``x = theta2(q)^2 / theta3(q)^2``

    The first two say that one AGM step maps ``(theta3^2, theta4^2)`` at ``q``
    to the same pair at ``q^2``; the third follows because the pair tends
    to ``(1, 1)`` as ``q -> 0``.
    """
    nome = _nome(nome)
    q = nome.q
    if not 0 < q <= VERIFY_MAX_Q:
        raise DomainError(f"identity checks need 0 < q <= {VERIFY_MAX_Q}, got {q}")
    t = theta_constants(nome)
    t_sq = theta_constants(Nome(q * q, nome.tail_tol))
    a, b = t.theta3**2, t.theta4**2
    landen = abs((a + b) / 2 - t_sq.theta3**2)
    geometric = abs(math.sqrt(a * b) - t_sq.theta4**2)
    normalization = abs(agm(a, b).limit - 1.0)
    x = t.theta2**2 / a
    bridge = abs(ellip_k_agm(x) - math.pi / 2 * a)
    return ThetaResiduals(landen, geometric, normalization, bridge)


@dataclass(frozen=True)
class SumOfSquaresTable:
    """``r[n] = r_k(n)`` for ``0 <= n <= n_max``."""

    k: int
    n_max: int
    r: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.r[n]

    def ball_count(self) -> int:
        """Lattice points of ``Z^k`` with squared norm ``<= n_max``."""
        return sum(self.r)


def _check_int(value, name: str, minimum: int, maximum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ArgumentError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ArgumentError(f"{name} must be >= {minimum}, got {value}")
    if value > maximum:
        raise ResourceLimitError(f"{name} must be <= {maximum}, got {value}")
    return value


def sum_of_squares_series(k: int, n_max: int) -> SumOfSquaresTable:
    """Coefficients of ``theta3(q)^k`` through ``q^n_max`` in exact integers."""
    k = _check_int(k, "k", 1, SERIES_MAX_K)
    n_max = _check_int(n_max, "n_max", 0, SERIES_MAX_N)
    # theta3 truncated: exponent m^2 has multiplicity 2 for m != 0
    base = [(0, 1)] + [(m * m, 2) for m in range(1, isqrt(n_max) + 1)]
    power = [0] * (n_max + 1)
    power[0] = 1
    for _ in range(k):
        nxt = [0] * (n_max + 1)
        for i, c in enumerate(power):
            if not c:
                continue
            for e, mult in base:
                if i + e > n_max:
                    break
                nxt[i + e] += c * mult
        power = nxt
    return SumOfSquaresTable(k, n_max, tuple(power))


def sum_of_squares_bruteforce(k: int, n: int) -> int:
    """Count ``(x_1..x_k) in Z^k`` with ``x_1^2 + ... + x_k^2 = n`` by enumeration.

    The first ``k - 1`` coordinates range over ``[-isqrt(n), isqrt(n)]``; the
    last is whatever integer (0, 1 or 2 choices) closes the sum.
    """
    k = _check_int(k, "k", 1, BRUTE_MAX_K)
    n = _check_int(n, "n", 0, BRUTE_MAX_N)
    s = isqrt(n)
    count = 0
    for head in product(range(-s, s + 1), repeat=k - 1):
        rest = n - sum(x * x for x in head)
        if rest < 0:
            continue
        root = isqrt(rest)
        if root * root == rest:
            count += 1 if root == 0 else 2
    return count


def lattice_points_in_ball(k: int, radius_sq: int) -> int:
    """Points of ``Z^k`` with squared norm at most ``radius_sq`` (full enumeration)."""
    s = isqrt(radius_sq)
    return sum(
        1 for p in product(range(-s, s + 1), repeat=k) if sum(x * x for x in p) <= radius_sq
    )
