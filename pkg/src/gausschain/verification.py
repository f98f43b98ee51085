"""One-shot runner for the full cross-verification suite.

Each check returns an :class:`OutputRecord` whose ``passed`` flag says
whether every residual is within its declared bound. ``quick`` caps the
oracle sizes (enumeration n <= 8, r_k up to n = 50, lattice radius <= 100);
``full`` runs the complete suite.

``fault`` injects a deliberate error so that the detector itself can be
tested: ``"gauss-coefficient"`` perturbs ``A_2`` and ``"tangent-number"``
perturbs ``T_5`` wherever those values feed a check.
"""

from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import agm as agm_mod
from . import elliptic, modular, pendulum, theta, zigzag
from .records import OutputRecord

__all__ = ["PROFILES", "FAULTS", "Profile", "verify_all", "summarize"]

KNOWN_TANGENTS = [1, 2, 16, 272, 7936, 353792, 22368256]
KNOWN_GAUSS = [Fraction(1), Fraction(1, 4), Fraction(9, 64), Fraction(25, 256)]
FAULTS = ("gauss-coefficient", "tangent-number")


@dataclass(frozen=True)
class Profile:
    name: str
    enumeration_n: int
    rk_n: int
    modularity_radii: tuple[int, ...]
    wp_radii: tuple[int, ...]


PROFILES = {
    "quick": Profile("quick", 8, 50, (25, 50, 100), (50, 100)),
    "full": Profile("full", 10, 100, (100, 200, 400), (100, 200, 400)),
}


def _strictly_decreasing(values) -> bool:
    return all(b < a for a, b in zip(values, values[1:]))


class _Faults:
    def __init__(self, fault: str | None):
        if fault is not None and fault not in FAULTS:
            raise ValueError(f"unknown fault {fault!r}; choose from {FAULTS}")
        self.fault = fault

    def gauss(self, k_max: int) -> list[Fraction]:
        coeffs = [agm_mod.gauss_coefficient(k) for k in range(k_max + 1)]
        if self.fault == "gauss-coefficient" and k_max >= 2:
            coeffs[2] += Fraction(1, 1000)
        return coeffs

    def zigzag(self, n_max: int) -> list[int]:
        counts = list(zigzag.zigzag_numbers(n_max).counts)
        if self.fault == "tangent-number" and n_max >= 5:
            counts[5] += 1
        return counts


def check_tangent_numbers(profile: Profile, faults: _Faults) -> OutputRecord:
    counts = faults.zigzag(13)
    odd = counts[1::2]
    recurrence = zigzag.tangent_numbers(13)
    passed = odd == KNOWN_TANGENTS and recurrence == KNOWN_TANGENTS
    return OutputRecord(
        "verify-all/tangent-numbers",
        {"n_max": 13},
        {"table_odd": odd, "recurrence": recurrence, "expected": KNOWN_TANGENTS},
        "alternating permutations of odd length: tan series coefficients",
        passed=passed,
    )


def check_zigzag_oracle(profile: Profile, faults: _Faults) -> OutputRecord:
    n_max = profile.enumeration_n
    counts = faults.zigzag(max(n_max, 8))
    brute = [zigzag.enumerate_alternating(n) for n in range(n_max + 1)]
    mismatches = [n for n in range(n_max + 1) if brute[n] != counts[n]]
    passed = not mismatches and brute[4] == 5 and counts[4] == 5
    return OutputRecord(
        "verify-all/zigzag-oracle",
        {"n_max": n_max},
        {"brute_force": brute, "boustrophedon": counts[: n_max + 1], "mismatches": mismatches},
        "alternating permutations: brute force vs boustrophedon triangle",
        passed=passed,
    )


def check_exact_residuals(profile: Profile, faults: _Faults) -> OutputRecord:
    tan_res = zigzag.verify_tangent_ode(40, faults.zigzag(41))
    ode_res = agm_mod.verify_agm_ode(50, faults.gauss(50))
    feq_res = agm_mod.verify_functional_equation(20, faults.gauss(20))
    certified_feq = feq_res.coeffs[: 2 * 20 + 1]
    nonzero = {
        "tangent_ode": sum(1 for c in tan_res if c),
        "agm_ode": sum(1 for c in ode_res if c),
        "functional_equation": sum(1 for c in certified_feq if c),
    }
    return OutputRecord(
        "verify-all/exact-residuals",
        {"tangent_order": 40, "agm_ode_k_max": 50, "functional_equation_k_max": 20},
        {"orders_checked": {"tangent_ode": tan_res.order, "agm_ode": ode_res.order,
                            "functional_equation": 2 * 20}},
        "exact series identities: T' = 1 + T^2, Gauss ODE, duplication substitution",
        residuals={f"{k}_nonzero_coefficients": v for k, v in nonzero.items()},
        passed=not any(nonzero.values()),
    )


def check_gauss_coefficients(profile: Profile, faults: _Faults) -> OutputRecord:
    coeffs = faults.gauss(3)
    return OutputRecord(
        "verify-all/gauss-coefficients",
        {"k_max": 3},
        {"coefficients": coeffs, "expected": KNOWN_GAUSS},
        "series for 1/M(1+x, 1-x)",
        passed=coeffs == KNOWN_GAUSS,
    )


def check_elliptic_agreement(profile: Profile, faults: _Faults) -> OutputRecord:
    worst = 0.0
    rows = {}
    for i in range(10):
        k = i / 10
        values = (
            elliptic.ellip_k_agm(k),
            elliptic.ellip_k_series(k),
            elliptic.ellip_k_quadrature(k),
        )
        spread = max(values) - min(values)
        rows[f"{k:.1f}"] = spread
        worst = max(worst, spread)
    k0 = elliptic.ellip_k_agm(0.0)
    k0_rel = abs(k0 - math.pi / 2) / (math.pi / 2)
    return OutputRecord(
        "verify-all/elliptic-agreement",
        {"k_grid": [i / 10 for i in range(10)]},
        {"bounds": {"max_pairwise": 1e-10, "k0_relative": 1e-15}, "spread_by_k": rows},
        "complete elliptic integral: AGM vs series vs quadrature",
        residuals={"max_pairwise": worst, "k0_relative": k0_rel},
        passed=worst <= 1e-10 and k0_rel <= 1e-15,
    )


def check_theta_identities(profile: Profile, faults: _Faults) -> OutputRecord:
    grid = [round(0.05 * i, 2) for i in range(1, 11)]
    worst = {"landen": 0.0, "geometric_mean": 0.0, "agm_normalization": 0.0,
             "jacobi_quartic": 0.0, "k_bridge": 0.0}
    for q in grid:
        res = theta.verify_theta_identities(q).as_dict()
        res["jacobi_quartic"] = theta.jacobi_quartic_residual(theta.theta_constants(q))
        for key, value in res.items():
            worst[key] = max(worst[key], value)
    bounds = {"landen": 1e-12, "geometric_mean": 1e-12, "agm_normalization": 1e-12,
              "jacobi_quartic": 1e-12, "k_bridge": 1e-10}
    return OutputRecord(
        "verify-all/theta-identities",
        {"q_grid": grid},
        {"bounds": bounds},
        "theta constants: duplication, Jacobi quartic, AGM normalization, K = (pi/2) theta3^2",
        residuals=worst,
        passed=all(worst[k] < bounds[k] for k in bounds),
    )


def check_sum_of_squares(profile: Profile, faults: _Faults) -> OutputRecord:
    n_max = profile.rk_n
    mismatches = []
    for k in (2, 3, 4):
        table = theta.sum_of_squares_series(k, n_max)
        for n in range(n_max + 1):
            if table[n] != theta.sum_of_squares_bruteforce(k, n):
                mismatches.append([k, n])
    r2 = list(theta.sum_of_squares_series(2, 5).r)
    return OutputRecord(
        "verify-all/sum-of-squares",
        {"k": [2, 3, 4], "n_max": n_max},
        {"r2_prefix": r2, "mismatches": mismatches},
        "theta3^k generating function vs lattice enumeration",
        passed=not mismatches and r2 == [1, 4, 4, 0, 4, 8],
    )


def check_pendulum(profile: Profile, faults: _Faults) -> OutputRecord:
    g = pendulum.STANDARD_GRAVITY
    t0 = pendulum.small_angle_period(1.0, g)
    dt = t0 / 1000
    rel_errors = {}
    orders = {}
    for theta0 in (0.1, 0.5, 1.0, 2.0):
        cfg = pendulum.PendulumConfig(1.0, g, theta0)
        exact = pendulum.exact_period(cfg).period
        e1 = abs(pendulum.simulate_period(cfg, dt).period - exact) / exact
        e2 = abs(pendulum.simulate_period(cfg, dt / 2).period - exact) / exact
        rel_errors[str(theta0)] = e1
        orders[str(theta0)] = math.log2(e1 / e2) if e2 > 0 else math.inf
    small = pendulum.exact_period(pendulum.PendulumConfig(1.0, g, 1e-4)).period / t0
    worst_err = max(rel_errors.values())
    worst_order = min(orders.values())
    return OutputRecord(
        "verify-all/pendulum",
        {"amplitudes": [0.1, 0.5, 1.0, 2.0], "dt_over_T0": 1e-3},
        {"bounds": {"relative_error": 1e-6, "min_order": 3.5, "small_angle": 1e-8},
         "relative_error_by_amplitude": rel_errors, "observed_order_by_amplitude": orders},
        "pendulum period 4 sqrt(L/g) K(sin(theta0/2)) vs RK4 simulation",
        residuals={"max_relative_error": worst_err, "min_observed_order": worst_order,
                   "small_angle_ratio_minus_1": abs(small - 1)},
        passed=worst_err <= 1e-6 and worst_order >= 3.5 and abs(small - 1) <= 1e-8,
    )


def check_modular(profile: Profile, faults: _Faults) -> OutputRecord:
    hexagonal = cmath.exp(2j * math.pi / 3)
    g6 = modular.eisenstein(modular.LatticeSpec(1j, 100), 6)
    g4 = modular.eisenstein(modular.LatticeSpec(hexagonal, 100), 4)
    tau = 0.3 + 1.1j
    base = modular.LatticeSpec(tau, 100)
    translation = modular.verify_modularity(base, modular.UnimodularMatrix(1, 1, 0, 1), 4).residual
    inversion = [
        modular.verify_modularity(base.with_radius(r), modular.UnimodularMatrix(0, -1, 1, 0), 4).residual
        for r in profile.modularity_radii
    ]
    z = 0.3 + 0.2j
    ode, periodicity = [], []
    for r in profile.wp_radii:
        lat = modular.LatticeSpec(1j, r)
        w = modular.wp(lat, z, modular.weierstrass_invariants(lat))
        ode.append(w.ode_residual)
        periodicity.append(abs(modular.wp(lat, z + 1).value - w.value))
    passed = (
        abs(g6.value) < g6.tail_bound
        and abs(g4.value) < g4.tail_bound
        and translation < 1e-10
        and _strictly_decreasing(inversion)
        and _strictly_decreasing(ode)
        and _strictly_decreasing(periodicity)
    )
    return OutputRecord(
        "verify-all/modular",
        {"tau": tau, "z": z, "modularity_radii": list(profile.modularity_radii),
         "wp_radii": list(profile.wp_radii)},
        {"tail_bounds": {"g6_square": g6.tail_bound, "g4_hexagonal": g4.tail_bound},
         "inversion_by_radius": inversion, "wp_ode_by_radius": ode,
         "wp_periodicity_by_radius": periodicity},
        "Eisenstein series weight-k transformation and wp' ^2 = 4 wp^3 - g2 wp - g3",
        residuals={"g6_square": abs(g6.value), "g4_hexagonal": abs(g4.value),
                   "translation": translation},
        passed=passed,
    )


CHECKS: tuple[Callable[[Profile, _Faults], OutputRecord], ...] = (
    check_tangent_numbers,
    check_zigzag_oracle,
    check_exact_residuals,
    check_gauss_coefficients,
    check_elliptic_agreement,
    check_theta_identities,
    check_sum_of_squares,
    check_pendulum,
    check_modular,
)


def verify_all(profile: str = "quick", fault: str | None = None, timings: bool = False) -> list[OutputRecord]:
    """Run every check and return the records sorted by command name."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; choose from {sorted(PROFILES)}")
    prof = PROFILES[profile]
    faults = _Faults(fault)
    records = []
    for check in CHECKS:
        start = time.perf_counter()
        record = check(prof, faults)
        if timings:
            record.outputs["elapsed_s"] = time.perf_counter() - start
        records.append(record)
    return sorted(records, key=lambda r: r.command)


def summarize(records: list[OutputRecord], profile: str, fault: str | None) -> OutputRecord:
    failed = [r.command for r in records if not r.passed]
    return OutputRecord(
        "verify-all",
        {"profile": profile, "fault": fault},
        {"checks": len(records), "failed": failed},
        "aggregate of all cross-verification checks",
        passed=not failed,
    )
