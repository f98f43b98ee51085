"""Acceptance criteria, each at its stated tolerance and runtime budget.

Run under pytest (a PASS/FAIL line per criterion is added to the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

import cmath
import math
import time
from fractions import Fraction

import pytest

from gausschain import elliptic, modular, pendulum, theta, zigzag
from gausschain.agm import gauss_series, verify_agm_ode, verify_functional_equation
from gausschain.cli import run

RESULTS: dict[int, tuple[bool, str]] = {}
CRITERIA = {}


def criterion(number, title, budget_s):
    def register(fn):
        CRITERIA[number] = (title, budget_s, fn)
        return fn

    return register


def evaluate(number):
    """Run one criterion; returns (passed, detail) and records it."""
    title, budget, fn = CRITERIA[number]
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # reported, not swallowed: the test re-raises below
        RESULTS[number] = (False, f"{title}: raised {exc!r}")
        raise
    elapsed = time.perf_counter() - start
    within = budget is None or elapsed < budget
    limit = f" < {budget:g} s" if budget is not None else ""
    line = f"{title}: {detail} [{elapsed:.2f} s{limit}]"
    RESULTS[number] = (ok and within, line)
    return ok and within, line


@criterion(1, "tangent numbers via CLI", 1.0)
def tangent_numbers():
    import io
    import json

    out = io.StringIO()
    status = run(["zigzag", "--n-max", "13"], out, io.StringIO())
    counts = json.loads(out.getvalue())["outputs"]["counts"]
    odd = counts[1::2]
    return status == 0 and odd == [1, 2, 16, 272, 7936, 353792, 22368256], f"odd counts {odd}"


@criterion(2, "brute force vs boustrophedon, n <= 10", 60.0)
def zigzag_oracle():
    table = zigzag.zigzag_numbers(10)
    brute = [zigzag.enumerate_alternating(n) for n in range(11)]
    ok = brute == list(table.counts) and brute[4] == 5 and table[8] == brute[8]
    return ok, f"brute {brute}"


@criterion(3, "exact ODE and functional-equation residuals", 10.0)
def exact_residuals():
    tan = zigzag.verify_tangent_ode(40)
    ode = verify_agm_ode(50)
    feq = verify_functional_equation(20)
    feq_certified = feq.coeffs[:41]
    ok = tan.is_zero() and tan.order == 40 and ode.is_zero() and not any(feq_certified)
    nonzero = sum(1 for c in tan if c) + sum(1 for c in ode if c) + sum(1 for c in feq_certified if c)
    return ok, f"tangent order {tan.order}, agm ode order {ode.order}, feq order 40; {nonzero} nonzero coefficients"


@criterion(4, "Gauss coefficients A_0..A_3", None)
def gauss_coefficients():
    coeffs = gauss_series(3).coefficients
    expected = (Fraction(1), Fraction(1, 4), Fraction(9, 64), Fraction(25, 256))
    return coeffs == expected, "A = " + ", ".join(str(c) for c in coeffs)


@criterion(5, "three-way K agreement", None)
def elliptic_agreement():
    spread = 0.0
    for i in range(10):
        k = i / 10
        values = [elliptic.ellip_k_agm(k), elliptic.ellip_k_series(k), elliptic.ellip_k_quadrature(k)]
        spread = max(spread, max(values) - min(values))
    k0 = max(abs(f(0.0) - math.pi / 2) / (math.pi / 2)
             for f in (elliptic.ellip_k_agm, elliptic.ellip_k_series, elliptic.ellip_k_quadrature))
    return spread <= 1e-10 and k0 <= 1e-15, f"max spread {spread:.2e} (<= 1e-10), K(0) rel {k0:.1e} (<= 1e-15)"


@criterion(6, "theta identity suite", 5.0)
def theta_suite():
    worst = {"landen": 0.0, "geometric_mean": 0.0, "agm_normalization": 0.0,
             "jacobi_quartic": 0.0, "k_bridge": 0.0}
    for i in range(1, 11):
        q = 0.05 * i
        res = theta.verify_theta_identities(q).as_dict()
        res["jacobi_quartic"] = theta.jacobi_quartic_residual(theta.theta_constants(q))
        for key, value in res.items():
            worst[key] = max(worst[key], value)
    bridge = worst.pop("k_bridge")
    ok = all(v < 1e-12 for v in worst.values()) and bridge < 1e-10
    return ok, f"max identity residual {max(worst.values()):.2e} (< 1e-12), K bridge {bridge:.2e} (< 1e-10)"


@criterion(7, "r_k series vs brute force, k = 2..4, n <= 100", 30.0)
def sum_of_squares():
    mismatches = 0
    for k in (2, 3, 4):
        table = theta.sum_of_squares_series(k, 100)
        mismatches += sum(table[n] != theta.sum_of_squares_bruteforce(k, n) for n in range(101))
    r2 = list(theta.sum_of_squares_series(2, 5).r)
    return mismatches == 0 and r2 == [1, 4, 4, 0, 4, 8], f"{mismatches} mismatches, r_2(0..5) = {r2}"


@criterion(8, "pendulum exact vs RK4", 60.0)
def pendulum_cross():
    g = pendulum.STANDARD_GRAVITY
    t0 = pendulum.small_angle_period(1.0, g)
    dt = t0 / 1000
    worst_err, worst_order = 0.0, math.inf
    for theta0 in (0.1, 0.5, 1.0, 2.0):
        cfg = pendulum.PendulumConfig(1.0, g, theta0)
        exact = pendulum.exact_period(cfg).period
        e1 = abs(pendulum.simulate_period(cfg, dt).period - exact) / exact
        e2 = abs(pendulum.simulate_period(cfg, dt / 2).period - exact) / exact
        worst_err = max(worst_err, e1)
        worst_order = min(worst_order, math.log2(e1 / e2))
    small = abs(pendulum.exact_period(pendulum.PendulumConfig(1.0, g, 1e-4)).period / t0 - 1)
    ok = worst_err <= 1e-6 and worst_order >= 3.5 and small <= 1e-8
    return ok, (f"max rel error {worst_err:.2e} (<= 1e-6), min order {worst_order:.2f} (>= 3.5), "
                f"small-angle |ratio - 1| {small:.1e} (<= 1e-8)")


@criterion(9, "modular suite", 120.0)
def modular_suite():
    g6 = modular.eisenstein(modular.LatticeSpec(1j, 100), 6)
    g4 = modular.eisenstein(modular.LatticeSpec(cmath.exp(2j * math.pi / 3), 100), 4)
    tau = 0.3 + 1.1j
    translation = modular.verify_modularity(
        modular.LatticeSpec(tau, 100), modular.UnimodularMatrix(1, 1, 0, 1), 4).residual
    radii = (100, 200, 400)
    inversion = [modular.verify_modularity(modular.LatticeSpec(tau, r),
                                           modular.UnimodularMatrix(0, -1, 1, 0), 4).residual
                 for r in radii]
    z = 0.3 + 0.2j
    ode, periodicity = [], []
    for r in radii:
        lat = modular.LatticeSpec(1j, r)
        w = modular.wp(lat, z, modular.weierstrass_invariants(lat))
        ode.append(w.ode_residual)
        periodicity.append(abs(modular.wp(lat, z + 1).value - w.value))

    def decreasing(xs):
        return all(b < a for a, b in zip(xs, xs[1:]))

    ok = (abs(g6.value) < g6.tail_bound and abs(g4.value) < g4.tail_bound and translation < 1e-10
          and decreasing(inversion) and decreasing(ode) and decreasing(periodicity))

    def fmt(xs):
        return " > ".join(f"{x:.1e}" for x in xs)

    return ok, (f"|G6(i)| {abs(g6.value):.1e} < {g6.tail_bound:.1e}, |G4(rho)| {abs(g4.value):.1e} "
                f"< {g4.tail_bound:.1e}, translation {translation:.1e}; inversion {fmt(inversion)}, "
                f"wp ode {fmt(ode)}, periodicity {fmt(periodicity)}")


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, line = evaluate(number)
    assert ok, line


if __name__ == "__main__":
    import sys

    failures = 0
    for n in sorted(CRITERIA):
        try:
            ok, line = evaluate(n)
        except Exception:
            ok, line = RESULTS[n]
        failures += not ok
        print(f"[{'PASS' if ok else 'FAIL'}] {n}. {line}")
    sys.exit(1 if failures else 0)
