"""Large-amplitude period of the simple pendulum.

Energy conservation turns the quarter period into a complete elliptic
integral with modulus ``k = sin(theta0 / 2)``::

    T = 4 sqrt(L/g) K(k) = 2 pi sqrt(L/g) / M(1+k, 1-k)
      = 2 pi sqrt(L/g) 2F1(1/2, 1/2; 1; k^2)

:func:`simulate_period` integrates ``theta'' = -(g/L) sin(theta)`` with
classical RK4 as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .agm import agm
from .elliptic import HypergeomParams, ellip_k_agm, hypergeom_2f1
from .errors import (
    ArgumentError,
    DomainError,
    IntegrationQualityError,
    SimulationError,
    VerificationError,
)

__all__ = [
    "STANDARD_GRAVITY",
    "PendulumConfig",
    "PeriodResult",
    "small_angle_period",
    "exact_period",
    "simulate_period",
    "period_ratio_table",
]

STANDARD_GRAVITY = 9.80665
FORM_AGREEMENT_RTOL = 1e-12
ENERGY_DRIFT_LIMIT = 1e-8
MAX_SMALL_ANGLE_PERIODS = 10
HYPERGEOM_MAX_TERMS = 20_000


def _positive(value, name: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ArgumentError(f"{name} must be a finite real, got {value!r}")
    if value <= 0:
        raise DomainError(f"{name} must be positive, got {value}")
    return float(value)


def _amplitude(value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ArgumentError(f"amplitude must be a finite real, got {value!r}")
    if not 0 < value < math.pi:
        raise DomainError(f"amplitude must satisfy 0 < theta0 < pi, got {value}")
    return float(value)


@dataclass(frozen=True)
class PendulumConfig:
    """Rod length (m), gravitational acceleration (m/s^2) and amplitude (rad)."""

    length: float
    gravity: float
    amplitude: float

    def __post_init__(self):
        object.__setattr__(self, "length", _positive(self.length, "length"))
        object.__setattr__(self, "gravity", _positive(self.gravity, "gravity"))
        object.__setattr__(self, "amplitude", _amplitude(self.amplitude))

    @property
    def modulus(self) -> float:
        return math.sin(self.amplitude / 2)


@dataclass(frozen=True)
class PeriodResult:
    period: float
    method: str
    detail: dict = field(default_factory=dict)


def small_angle_period(length: float, gravity: float) -> float:
    """``2 pi sqrt(L/g)``."""
    return 2 * math.pi * math.sqrt(_positive(length, "length") / _positive(gravity, "gravity"))


def _hypergeometric_form(k: float) -> tuple[float | None, float]:
    """``2F1(1/2, 1/2; 1; k^2)`` and a bound on the omitted tail.

    Consecutive term ratios are below ``k^2``, so the tail after the last
    term ``t`` is at most ``t k^2 / (1 - k^2)``. Returns ``(None, bound)`` if
    the bound cannot be brought under the agreement tolerance.
    """
    x = k * k
    n_terms = 64
    while True:
        res = hypergeom_2f1(HypergeomParams(0.5, 0.5, 1.0, x, n_terms))
        tail = res.error_estimate * x / (1 - x) if x else 0.0
        if tail <= 0.1 * FORM_AGREEMENT_RTOL * res.value:
            return res.value, tail
        if n_terms >= HYPERGEOM_MAX_TERMS:
            return None, tail
        n_terms = min(4 * n_terms, HYPERGEOM_MAX_TERMS)


def exact_period(cfg: PendulumConfig) -> PeriodResult:
    """Closed-form period ``4 sqrt(L/g) K(sin(theta0/2))``.

    The two other equivalent forms (AGM and hypergeometric) are evaluated as
    well and must agree to ``1e-12`` relative. The hypergeometric series is
    skipped when ``k^2`` is so close to 1 that 20000 terms cannot certify
    the tail; ``detail["forms_checked"]`` lists what was compared.

    Raises:
        VerificationError: if two evaluated forms disagree.
    """
    root = math.sqrt(cfg.length / cfg.gravity)
    k = cfg.modulus
    elliptic_form = 4 * root * ellip_k_agm(k)
    agm_form = 2 * math.pi * root / agm(1 + k, 1 - k).limit
    forms = {"elliptic": elliptic_form, "agm": agm_form}
    hyp, _ = _hypergeometric_form(k)
    if hyp is not None:
        forms["hypergeometric"] = 2 * math.pi * root * hyp
    worst = max(abs(v - elliptic_form) / elliptic_form for v in forms.values())
    if worst > FORM_AGREEMENT_RTOL:
        raise VerificationError(
            f"period forms disagree by {worst:.3g} relative (limit {FORM_AGREEMENT_RTOL})"
        )
    return PeriodResult(
        elliptic_form,
        "closed-form",
        {"k": k, "form": "elliptic", "forms_checked": sorted(forms), "max_form_rel_diff": worst},
    )


def _hermite_root(w0: float, w1: float, d0: float, d1: float) -> float:
    """Root in ``[0, 1]`` of the cubic Hermite interpolant through a sign change.

    ``d0, d1`` are the endpoint slopes already multiplied by the step.
    """

    def h(s: float) -> float:
        s2 = s * s
        s3 = s2 * s
        return (
            (2 * s3 - 3 * s2 + 1) * w0
            + (s3 - 2 * s2 + s) * d0
            + (-2 * s3 + 3 * s2) * w1
            + (s3 - s2) * d1
        )

    lo, hi = 0.0, 1.0
    f_lo = h(lo)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        f_mid = h(mid)
        if (f_mid < 0) == (f_lo < 0) and f_mid != 0:
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def simulate_period(cfg: PendulumConfig, dt: float) -> PeriodResult:
    """Measure the period by integrating the equation of motion with RK4.

    Starts at rest at ``theta0``. The angular velocity changes sign at half
    a period (``- -> +``) and again at a full period (``+ -> -``); each
    crossing is located by a cubic Hermite fit of the velocity between the
    bracketing steps, and the period is twice the time between them.

    Raises:
        ArgumentError: if ``dt`` exceeds 1/1000 of the small-angle period.
        SimulationError: if no second crossing occurs within ten small-angle
            periods.
        IntegrationQualityError: if the relative energy drift exceeds 1e-8.
    """
    dt = _positive(dt, "dt")
    t0 = small_angle_period(cfg.length, cfg.gravity)
    if dt > t0 / 1000:
        raise ArgumentError(f"dt={dt} exceeds the resolution guard T0/1000 = {t0 / 1000}")
    w2 = cfg.gravity / cfg.length
    sin = math.sin

    theta, omega, t = cfg.amplitude, 0.0, 0.0
    e0 = w2 * (1 - math.cos(theta))
    max_drift = 0.0
    crossings: list[float] = []
    max_steps = math.ceil(MAX_SMALL_ANGLE_PERIODS * t0 / dt)
    half = 0.5 * dt
    sixth = dt / 6
    acc = -w2 * sin(theta)
    for _ in range(max_steps):
        k1t, k1w = omega, acc
        k2t, k2w = omega + half * k1w, -w2 * sin(theta + half * k1t)
        k3t, k3w = omega + half * k2w, -w2 * sin(theta + half * k2t)
        k4t, k4w = omega + dt * k3w, -w2 * sin(theta + dt * k3t)
        new_theta = theta + sixth * (k1t + 2 * k2t + 2 * k3t + k4t)
        new_omega = omega + sixth * (k1w + 2 * k2w + 2 * k3w + k4w)
        new_acc = -w2 * sin(new_theta)

        expect_rising = len(crossings) == 0
        if (expect_rising and omega < 0 <= new_omega) or (not expect_rising and omega > 0 >= new_omega):
            s = _hermite_root(omega, new_omega, acc * dt, new_acc * dt)
            crossings.append(t + s * dt)

        theta, omega, acc, t = new_theta, new_omega, new_acc, t + dt
        energy = 0.5 * omega * omega + w2 * (1 - math.cos(theta))
        max_drift = max(max_drift, abs(energy - e0) / e0)
        if len(crossings) == 2:
            break
    else:
        raise SimulationError(
            f"no full swing detected within {MAX_SMALL_ANGLE_PERIODS} small-angle periods"
        )
    if max_drift > ENERGY_DRIFT_LIMIT:
        raise IntegrationQualityError(
            f"relative energy drift {max_drift:.3g} exceeds {ENERGY_DRIFT_LIMIT}; reduce dt"
        )
    period = 2 * (crossings[1] - crossings[0])
    return PeriodResult(
        period,
        "simulated",
        {"dt": dt, "crossings": crossings, "steps": round(t / dt), "energy_drift": max_drift},
    )


def period_ratio_table(length: float, gravity: float, amplitudes) -> list[tuple[float, float]]:
    """Rows ``(theta0, T / T0)`` with ``T0 = 2 pi sqrt(L/g)``.

    The ratio is the dimensionless factor ``K(sin(theta0/2)) / (pi/2)``;
    it is cross-checked against ``exact_period / T0`` for the given L and g.
    """
    t0 = small_angle_period(length, gravity)
    rows = []
    for theta0 in amplitudes:
        cfg = PendulumConfig(length, gravity, theta0)
        ratio = ellip_k_agm(cfg.modulus) / (math.pi / 2)
        via_period = exact_period(cfg).period / t0
        if abs(via_period - ratio) > FORM_AGREEMENT_RTOL * ratio:
            raise VerificationError(f"ratio for theta0={theta0} depends on L, g")
        rows.append((cfg.amplitude, ratio))
    return rows
