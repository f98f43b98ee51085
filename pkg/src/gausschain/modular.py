"""Truncated lattice sums: Eisenstein series and the Weierstrass function.

Lattices are ``Lambda = scale * (Z tau + Z)`` with ``Im tau > 0``. Sums run
over the nonzero points inside the disc ``|m tau + n| <= R + 1/2`` (measured
before scaling). Compared with a square box in ``(m, n)`` this truncation

* depends only on the point set, so ``tau -> tau + 1`` leaves every sum
  unchanged,
* is invariant under ``omega -> -omega`` and under every rotation that maps
  the lattice to itself (``i`` for the square lattice, ``exp(i pi/3)`` for
  the hexagonal one), so the forced zeros of ``G_6(i)`` and ``G_4(rho)``
  hold term by term,
* has a vanishing continuum correction, so truncation errors shrink quickly.

The half-integer radius keeps points of the square and hexagonal lattices
(whose squared norms are integers) off the boundary circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ArgumentError, DomainError

__all__ = [
    "LatticeSpec",
    "UnimodularMatrix",
    "WeierstrassInvariants",
    "EisensteinValue",
    "ModularityCheck",
    "WpValue",
    "lattice_points",
    "eisenstein",
    "eisenstein_tail_bound",
    "verify_modularity",
    "weierstrass_invariants",
    "wp",
]

EISENSTEIN_WEIGHTS = (4, 6, 8, 10, 12)
EISENSTEIN_MIN_RADIUS = 10
WP_MIN_RADIUS = 50
MIN_IMAG_AFTER_ACTION = 0.1
POLE_GUARD = 0.05


def _complex(value, name: str) -> complex:
    if isinstance(value, bool) or not isinstance(value, (int, float, complex)):
        raise ArgumentError(f"{name} must be a number, got {value!r}")
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ArgumentError(f"{name} must be finite, got {value}")
    return value


@dataclass(frozen=True)
class LatticeSpec:
    """``scale * (Z tau + Z)`` truncated to the disc of radius ``radius + 1/2``."""

    tau: complex
    radius: int
    scale: complex = 1.0

    def __post_init__(self):
        tau = _complex(self.tau, "tau")
        if tau.imag <= 0:
            raise DomainError(f"tau must lie in the upper half-plane, got {tau}")
        if isinstance(self.radius, bool) or not isinstance(self.radius, int) or self.radius < 1:
            raise ArgumentError(f"radius must be a positive integer, got {self.radius!r}")
        scale = _complex(self.scale, "scale")
        if scale == 0:
            raise ArgumentError("scale must be nonzero")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "scale", scale)

    def with_radius(self, radius: int) -> "LatticeSpec":
        return LatticeSpec(self.tau, radius, self.scale)


@dataclass(frozen=True)
class UnimodularMatrix:
    """Integer matrix ``[[a, b], [c, d]]`` with determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ArgumentError(f"matrix entry {name} must be an integer, got {value!r}")
        if self.a * self.d - self.b * self.c != 1:
            raise ArgumentError(f"determinant must be 1, got {self.a * self.d - self.b * self.c}")

    def act(self, tau: complex) -> complex:
        return (self.a * tau + self.b) / (self.c * tau + self.d)

    def automorphy_factor(self, tau: complex) -> complex:
        return self.c * tau + self.d


def _reduce(tau: complex) -> tuple[complex, int]:
    shift = math.floor(tau.real + 0.5)
    return tau - shift, shift


@lru_cache(maxsize=16)
def _points(tau: complex, radius: int) -> np.ndarray:
    reduced, _ = _reduce(tau)
    rho = radius + 0.5
    x, y = reduced.real, reduced.imag
    m_max = math.floor(rho / y)
    rows = []
    for m in range(-m_max, m_max + 1):
        span = rho * rho - (m * y) ** 2
        if span < 0:
            continue
        span = math.sqrt(span)
        lo = math.ceil(-m * x - span)
        hi = math.floor(-m * x + span)
        if lo > hi:
            continue
        n = np.arange(lo, hi + 1, dtype=float)
        if m == 0:
            n = n[n != 0]
        rows.append(m * reduced + n)
    pts = np.concatenate(rows)
    pts.flags.writeable = False
    return pts


def lattice_points(lattice: LatticeSpec) -> np.ndarray:
    """Nonzero points of the truncated lattice, scale applied."""
    pts = _points(lattice.tau, lattice.radius)
    return pts if lattice.scale == 1 else lattice.scale * pts


@dataclass(frozen=True)
class EisensteinValue:
    """Truncated ``G_2k`` and a rigorous bound on the omitted tail."""

    value: complex
    tail_bound: float
    weight: int
    n_points: int


def _cell_geometry(tau: complex) -> tuple[float, float]:
    reduced, _ = _reduce(tau)
    area = reduced.imag
    half_diameter = 0.5 * max(abs(reduced + 1), abs(reduced - 1))
    return area, half_diameter


def eisenstein_tail_bound(lattice: LatticeSpec, weight: int) -> float:
    """Bound on ``sum |omega|^-weight`` over the points outside the disc.

    Each omitted point owns a fundamental cell of area ``A`` within distance
    ``d`` (half the cell diameter), so the tail is at most
    ``(2 pi / A) int_{rho-2d}^inf (u + d) u^-weight du`` for radius ``rho``.
    """
    area, d = _cell_geometry(lattice.tau)
    u0 = lattice.radius + 0.5 - 2 * d
    if u0 <= 0:
        return math.inf
    w = weight
    integral = u0 ** (2 - w) / (w - 2) + d * u0 ** (1 - w) / (w - 1)
    return 2 * math.pi / area * integral * abs(lattice.scale) ** (-w)


def _check_weight(weight) -> int:
    if isinstance(weight, bool) or not isinstance(weight, int):
        raise ArgumentError(f"weight must be an integer, got {weight!r}")
    if weight == 2:
        raise DomainError("weight 2 is only conditionally convergent and is not supported")
    if weight not in EISENSTEIN_WEIGHTS:
        raise DomainError(f"weight must be one of {EISENSTEIN_WEIGHTS}, got {weight}")
    return weight


def eisenstein(lattice: LatticeSpec, weight: int) -> EisensteinValue:
    """``G_weight(Lambda) = sum' omega^-weight`` over the truncated lattice."""
    weight = _check_weight(weight)
    if lattice.radius < EISENSTEIN_MIN_RADIUS:
        raise DomainError(f"radius must be >= {EISENSTEIN_MIN_RADIUS}, got {lattice.radius}")
    pts = lattice_points(lattice)
    value = complex(np.sum(pts ** (-weight)))
    return EisensteinValue(value, eisenstein_tail_bound(lattice, weight), weight, pts.size)


@dataclass(frozen=True)
class ModularityCheck:
    residual: float
    bound: float
    transformed_tau: complex

    @property
    def passed(self) -> bool:
        return self.residual <= self.bound


def verify_modularity(lattice: LatticeSpec, gamma: UnimodularMatrix, weight: int) -> ModularityCheck:
    """``|G(gamma tau) - (c tau + d)^weight G(tau)|`` at equal truncation radius.

    ``bound`` adds the tail bounds of both sums (the second scaled by
    ``|c tau + d|^weight``); the infinite sums agree exactly, so the residual
    is pure truncation and must lie below it.

    Raises:
        DomainError: if ``Im(gamma tau) < 0.1``.
    """
    weight = _check_weight(weight)
    tau = lattice.tau
    image = gamma.act(tau)
    if image.imag < MIN_IMAG_AFTER_ACTION:
        raise DomainError(
            f"Im(gamma tau) = {image.imag:.3g} is below the conditioning guard {MIN_IMAG_AFTER_ACTION}"
        )
    moved = LatticeSpec(image, lattice.radius, lattice.scale)
    factor = gamma.automorphy_factor(tau) ** weight
    g_moved = eisenstein(moved, weight)
    g_base = eisenstein(lattice, weight)
    residual = abs(g_moved.value - factor * g_base.value)
    bound = g_moved.tail_bound + abs(factor) * g_base.tail_bound
    return ModularityCheck(residual, bound, image)


@dataclass(frozen=True)
class WeierstrassInvariants:
    """``g2 = 60 G_4`` and ``g3 = 140 G_6`` at one truncation."""

    g2: complex
    g3: complex
    lattice: LatticeSpec

    def __post_init__(self):
        pts = lattice_points(self.lattice)
        g4 = complex(np.sum(pts**-4))
        g6 = complex(np.sum(pts**-6))
        if not (
            np.isclose(self.g2, 60 * g4, rtol=1e-12, atol=1e-12)
            and np.isclose(self.g3, 140 * g6, rtol=1e-12, atol=1e-12)
        ):
            raise ArgumentError("g2, g3 do not match 60 G4, 140 G6 of the given lattice")


def weierstrass_invariants(lattice: LatticeSpec) -> WeierstrassInvariants:
    pts = lattice_points(lattice)
    return WeierstrassInvariants(
        60 * complex(np.sum(pts**-4)), 140 * complex(np.sum(pts**-6)), lattice
    )


@dataclass(frozen=True)
class WpValue:
    value: complex
    derivative: complex
    ode_residual: float | None = None


def _shortest_vector(lattice: LatticeSpec) -> float:
    reduced, _ = _reduce(lattice.tau)
    candidates = [abs(m * reduced + n) for m in range(-2, 3) for n in range(-2, 3) if (m, n) != (0, 0)]
    return min(candidates) * abs(lattice.scale)


def wp(lattice: LatticeSpec, z, invariants: WeierstrassInvariants | None = None) -> WpValue:
    """Truncated ``wp(z)`` and ``wp'(z)``.

    ``wp(z) = 1/z^2 + sum' [1/(z - omega)^2 - 1/omega^2]`` and its termwise
    derivative ``-2/z^3 - 2 sum' 1/(z - omega)^3``. With ``invariants``
    supplied, also returns ``|wp'^2 - (4 wp^3 - g2 wp - g3)|``.

    Raises:
        DomainError: if ``z`` lies within ``0.05`` shortest periods of a
            lattice point, or the radius is below 50.
    """
    z = _complex(z, "z")
    if lattice.radius < WP_MIN_RADIUS:
        raise DomainError(f"radius must be >= {WP_MIN_RADIUS}, got {lattice.radius}")
    pts = lattice_points(lattice)
    nearest = min(abs(z), float(np.min(np.abs(z - pts))))
    if nearest < POLE_GUARD * _shortest_vector(lattice):
        raise DomainError(f"z={z} is within {nearest:.3g} of a lattice point")
    diff = z - pts
    inv_sq = diff**-2
    value = 1 / z**2 + complex(np.sum(inv_sq - pts**-2))
    derivative = -2 / z**3 - 2 * complex(np.sum(inv_sq / diff))
    residual = None
    if invariants is not None:
        if invariants.lattice != lattice:
            raise ArgumentError("invariants were computed for a different lattice")
        residual = abs(derivative**2 - (4 * value**3 - invariants.g2 * value - invariants.g3))
    return WpValue(value, derivative, residual)
