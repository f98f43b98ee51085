"""Command-line entry point.

Every subcommand prints one JSON record per line (or CSV for tables).
Exit status: 0 success, 2 argument error, 3 numeric/convergence error,
4 verification failure.

Negative complex components must be attached with ``=``, e.g.
``--tau=-0.5,0.8660254037844386``.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import agm as agm_mod
from . import elliptic, modular, pendulum, theta, verification, zigzag
from .errors import ArgumentError, NumericError, VerificationError
from .records import OutputRecord, to_csv

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_VERIFY = 4

PROFILE_ENV = "GAUSSCHAIN_PROFILE"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ArgumentError(message)


def _complex_arg(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected RE,IM, got {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _float_list(text: str) -> list[float]:
    try:
        return [float(p) for p in text.split(",") if p]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gausschain", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("zigzag", help="alternating permutation counts")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--check-oracle", action="store_true",
                   help="compare with brute-force enumeration for n <= 10")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("agm", help="arithmetic-geometric mean and Gauss's series")
    p.add_argument("--a", type=float)
    p.add_argument("--b", type=float)
    p.add_argument("--tol", type=float, default=1e-15)
    p.add_argument("--trace", action="store_true")
    agm_sub = p.add_subparsers(dest="action", parser_class=_Parser)
    for name in ("series", "verify-ode", "verify-feq"):
        q = agm_sub.add_parser(name)
        q.add_argument("--k-max", type=int, required=True)

    p = sub.add_parser("ellipk", help="complete elliptic integral K(k)")
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--method", choices=("agm", "series", "quadrature", "all"), default="all")

    p = sub.add_parser("hyp2f1", help="Gauss hypergeometric partial sum")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--terms", type=int, default=200)

    p = sub.add_parser("theta", help="Jacobi theta constants at a real nome")
    p.add_argument("--q", type=float)
    p.add_argument("--tail-tol", type=float, default=theta.DEFAULT_TAIL_TOL)
    theta_sub = p.add_subparsers(dest="action", parser_class=_Parser)
    q = theta_sub.add_parser("verify")
    q.add_argument("--q", type=float, default=argparse.SUPPRESS)
    q.add_argument("--tail-tol", type=float, default=argparse.SUPPRESS)

    p = sub.add_parser("rk", help="sum-of-squares counts r_k(n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--check-oracle", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("pendulum", help="simple pendulum period")
    p.add_argument("--length", type=float, default=1.0)
    p.add_argument("--gravity", type=float, default=pendulum.STANDARD_GRAVITY)
    p.add_argument("--amplitude", type=float)
    p.add_argument("--method", choices=("exact", "simulate", "both"), default="exact")
    p.add_argument("--dt", type=float, help="step size (default T0/1000)")
    pend_sub = p.add_subparsers(dest="action", parser_class=_Parser)
    q = pend_sub.add_parser("sweep")
    q.add_argument("--amplitudes", type=_float_list, required=True)
    q.add_argument("--length", type=float, default=argparse.SUPPRESS)
    q.add_argument("--gravity", type=float, default=argparse.SUPPRESS)
    q.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("eisenstein", help="truncated Eisenstein series G_2k")
    p.add_argument("--tau", type=_complex_arg)
    p.add_argument("--weight", type=int, default=4)
    p.add_argument("--radius", type=int, default=100)
    eis_sub = p.add_subparsers(dest="action", parser_class=_Parser)
    q = eis_sub.add_parser("verify")
    q.add_argument("--gamma", type=_int_list, required=True)
    q.add_argument("--tau", type=_complex_arg, default=argparse.SUPPRESS)
    q.add_argument("--weight", type=int, default=argparse.SUPPRESS)
    q.add_argument("--radius", type=int, default=argparse.SUPPRESS)

    p = sub.add_parser("wp", help="Weierstrass wp and wp'")
    p.add_argument("--tau", type=_complex_arg, required=True)
    p.add_argument("--z", type=_complex_arg, required=True)
    p.add_argument("--radius", type=int, default=100)
    p.add_argument("--check-ode", action="store_true")

    p = sub.add_parser("verify-all", help="run the full cross-verification suite")
    p.add_argument("--profile", choices=sorted(verification.PROFILES),
                   default=os.environ.get(PROFILE_ENV, "quick"))
    p.add_argument("--inject-fault", choices=verification.FAULTS,
                   help="deliberately corrupt one input to exercise the detector")
    p.add_argument("--timings", action="store_true",
                   help="add wall-clock times (output is then not reproducible)")
    return parser


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise ArgumentError("missing required option(s): " + ", ".join("--" + m.replace("_", "-") for m in missing))


# -- handlers: each returns (records, csv_text_or_None) ----------------------

def _zigzag(args):
    table = zigzag.zigzag_numbers(args.n_max)
    outputs = {"counts": list(table.counts)}
    residuals = None
    passed = None
    if args.n_max >= 1:
        odd_max = args.n_max if args.n_max % 2 else args.n_max - 1
        recurrence = zigzag.tangent_numbers(odd_max)
        outputs["tangent"] = recurrence
        residuals = {"recurrence_mismatches": sum(a != b for a, b in zip(recurrence, table.tangent()))}
        passed = residuals["recurrence_mismatches"] == 0
    if args.check_oracle:
        limit = min(args.n_max, zigzag.ENUMERATION_DEFAULT_LIMIT)
        brute = [zigzag.enumerate_alternating(n) for n in range(limit + 1)]
        residuals = dict(residuals or {})
        residuals["oracle_mismatches"] = sum(a != b for a, b in zip(brute, table.counts))
        passed = (passed is not False) and residuals["oracle_mismatches"] == 0
    record = OutputRecord("zigzag", {"n_max": args.n_max}, outputs,
                          "alternating permutations: tan/sec generating functions",
                          residuals=residuals, passed=passed)
    csv_text = to_csv(("n", "count"), enumerate(table.counts)) if args.format == "csv" else None
    return [record], csv_text


def _agm(args):
    if args.action is None:
        _require(args, "a", "b")
        res = agm_mod.agm(args.a, args.b, args.tol)
        outputs = {"limit": res.limit, "iterations": res.iterations}
        if args.trace:
            outputs["trace"] = [list(pair) for pair in res.trace]
        return [OutputRecord("agm", {"a": args.a, "b": args.b, "tol": args.tol}, outputs,
                             "arithmetic-geometric mean M(a, b)")], None
    if args.action == "series":
        s = agm_mod.gauss_series(args.k_max)
        return [OutputRecord("agm series", {"k_max": args.k_max},
                             {"coefficients": list(s.coefficients)},
                             "series for 1/M(1+x, 1-x)")], None
    if args.action == "verify-ode":
        r = agm_mod.verify_agm_ode(args.k_max)
        nonzero = sum(1 for c in r if c)
        return [OutputRecord("agm verify-ode", {"k_max": args.k_max}, {"order": r.order},
                             "Gauss ODE (x^3 - x) y'' + (3x^2 - 1) y' + x y = 0",
                             residuals={"nonzero_coefficients": nonzero},
                             passed=nonzero == 0)], None
    r = agm_mod.verify_functional_equation(args.k_max)
    certified = r.coeffs[: 2 * args.k_max + 1]
    nonzero = sum(1 for c in certified if c)
    return [OutputRecord("agm verify-feq", {"k_max": args.k_max},
                         {"certified_order": 2 * args.k_max},
                         "duplication substitution x = 2t/(1+t^2)",
                         residuals={"nonzero_coefficients": nonzero},
                         passed=nonzero == 0)], None


def _ellipk(args):
    k = elliptic.Modulus(args.k)
    methods = ("agm", "series", "quadrature") if args.method == "all" else (args.method,)
    funcs = {"agm": elliptic.ellip_k_agm, "series": elliptic.ellip_k_series,
             "quadrature": elliptic.ellip_k_quadrature}
    values = {}
    for m in methods:
        if m == "series" and args.method == "all" and k.k > elliptic.SERIES_MAX_MODULUS:
            continue
        values[m] = funcs[m](k)
    residuals = None
    if len(values) > 1:
        names = sorted(values)
        residuals = {f"{a}-{b}": abs(values[a] - values[b])
                     for i, a in enumerate(names) for b in names[i + 1:]}
    return [OutputRecord("ellipk", {"k": k.k, "method": args.method}, values,
                         "complete elliptic integral of the first kind",
                         residuals=residuals)], None


def _hyp2f1(args):
    params = elliptic.HypergeomParams(args.alpha, args.beta, args.gamma, args.x, args.terms)
    res = elliptic.hypergeom_2f1(params)
    return [OutputRecord("hyp2f1",
                         {"alpha": args.alpha, "beta": args.beta, "gamma": args.gamma,
                          "x": args.x, "terms": args.terms},
                         {"value": res.value, "terms_used": res.n_terms},
                         "Gauss hypergeometric series",
                         residuals={"last_term": res.error_estimate})], None


def _theta(args):
    _require(args, "q")
    nome = theta.Nome(args.q, args.tail_tol)
    inputs = {"q": nome.q, "tail_tol": nome.tail_tol}
    if args.action == "verify":
        res = theta.verify_theta_identities(nome).as_dict()
        res["jacobi_quartic"] = theta.jacobi_quartic_residual(theta.theta_constants(nome))
        bounds = {"landen": 1e-12, "geometric_mean": 1e-12, "agm_normalization": 1e-12,
                  "jacobi_quartic": 1e-12, "k_bridge": 1e-10}
        return [OutputRecord("theta verify", inputs, {"bounds": bounds},
                             "theta constant identities",
                             residuals=res, passed=all(res[k] < bounds[k] for k in bounds))], None
    t = theta.theta_constants(nome)
    return [OutputRecord("theta", inputs,
                         {"theta2": t.theta2, "theta3": t.theta3, "theta4": t.theta4,
                          "terms_used": t.terms_used},
                         "Jacobi theta constants",
                         residuals={"jacobi_quartic": theta.jacobi_quartic_residual(t)})], None


def _rk(args):
    table = theta.sum_of_squares_series(args.k, args.n_max)
    residuals = passed = None
    if args.check_oracle:
        if args.k > theta.BRUTE_MAX_K or args.n_max > theta.BRUTE_MAX_N:
            raise ArgumentError(
                f"--check-oracle supports k <= {theta.BRUTE_MAX_K}, n <= {theta.BRUTE_MAX_N}"
            )
        mismatches = sum(table[n] != theta.sum_of_squares_bruteforce(args.k, n)
                         for n in range(args.n_max + 1))
        residuals = {"oracle_mismatches": mismatches}
        passed = mismatches == 0
    record = OutputRecord("rk", {"k": args.k, "n_max": args.n_max}, {"r": list(table.r)},
                          "theta3^k as the generating function of r_k(n)",
                          residuals=residuals, passed=passed)
    csv_text = to_csv(("n", "r"), enumerate(table.r)) if args.format == "csv" else None
    return [record], csv_text


def _pendulum(args):
    if args.action == "sweep":
        rows = pendulum.period_ratio_table(args.length, args.gravity, args.amplitudes)
        record = OutputRecord("pendulum sweep",
                              {"length": args.length, "gravity": args.gravity,
                               "amplitudes": args.amplitudes},
                              {"rows": [{"amplitude": a, "ratio": r} for a, r in rows]},
                              "period amplification T/T0 = K(sin(theta0/2)) / (pi/2)")
        csv_text = to_csv(("amplitude", "ratio"), rows) if args.format == "csv" else None
        return [record], csv_text
    _require(args, "amplitude")
    cfg = pendulum.PendulumConfig(args.length, args.gravity, args.amplitude)
    inputs = {"length": cfg.length, "gravity": cfg.gravity, "amplitude": cfg.amplitude,
              "method": args.method}
    outputs = {"small_angle_period": pendulum.small_angle_period(cfg.length, cfg.gravity)}
    residuals = None
    if args.method in ("exact", "both"):
        exact = pendulum.exact_period(cfg)
        outputs["exact_period"] = exact.period
        outputs["k"] = exact.detail["k"]
        outputs["forms_checked"] = exact.detail["forms_checked"]
    if args.method in ("simulate", "both"):
        dt = args.dt if args.dt is not None else outputs["small_angle_period"] / 1000
        inputs["dt"] = dt
        sim = pendulum.simulate_period(cfg, dt)
        outputs["simulated_period"] = sim.period
        outputs["energy_drift"] = sim.detail["energy_drift"]
    if args.method == "both":
        residuals = {"relative_difference":
                     abs(outputs["simulated_period"] - outputs["exact_period"]) / outputs["exact_period"]}
    return [OutputRecord("pendulum", inputs, outputs,
                         "pendulum period 4 sqrt(L/g) K(sin(theta0/2))",
                         residuals=residuals)], None


def _eisenstein(args):
    _require(args, "tau")
    lattice = modular.LatticeSpec(args.tau, args.radius)
    inputs = {"tau": lattice.tau, "weight": args.weight, "radius": args.radius}
    if args.action == "verify":
        if len(args.gamma) != 4:
            raise ArgumentError("--gamma needs four integers a,b,c,d")
        gamma = modular.UnimodularMatrix(*args.gamma)
        check = modular.verify_modularity(lattice, gamma, args.weight)
        inputs["gamma"] = args.gamma
        return [OutputRecord("eisenstein verify", inputs,
                             {"transformed_tau": check.transformed_tau, "bound": check.bound},
                             "Eisenstein series as a modular form of its weight",
                             residuals={"modularity": check.residual},
                             passed=check.passed)], None
    g = modular.eisenstein(lattice, args.weight)
    return [OutputRecord("eisenstein", inputs,
                         {"value": g.value, "tail_bound": g.tail_bound, "points": g.n_points},
                         "Eisenstein series G_2k as a lattice sum")], None


def _wp(args):
    lattice = modular.LatticeSpec(args.tau, args.radius)
    inv = modular.weierstrass_invariants(lattice) if args.check_ode else None
    w = modular.wp(lattice, args.z, inv)
    outputs = {"wp": w.value, "wp_prime": w.derivative}
    residuals = None
    if inv is not None:
        outputs["g2"] = inv.g2
        outputs["g3"] = inv.g3
        residuals = {"ode": w.ode_residual}
    return [OutputRecord("wp", {"tau": lattice.tau, "z": args.z, "radius": args.radius},
                         outputs, "Weierstrass wp parametrizing y^2 = 4x^3 - g2 x - g3",
                         residuals=residuals)], None


def _verify_all(args):
    records = verification.verify_all(args.profile, args.inject_fault, args.timings)
    records.append(verification.summarize(records, args.profile, args.inject_fault))
    return records, None


HANDLERS = {
    "zigzag": _zigzag,
    "agm": _agm,
    "ellipk": _ellipk,
    "hyp2f1": _hyp2f1,
    "theta": _theta,
    "rk": _rk,
    "pendulum": _pendulum,
    "eisenstein": _eisenstein,
    "wp": _wp,
    "verify-all": _verify_all,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    """Parse ``argv``, dispatch, write output and return the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        records, csv_text = HANDLERS[args.command](args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=stderr)
        return EXIT_VERIFY
    except ArgumentError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except NumericError as exc:
        print(f"numeric error: {exc}", file=stderr)
        return EXIT_NUMERIC
    if csv_text is not None:
        stdout.write(csv_text)
    else:
        for record in records:
            stdout.write(record.to_json() + "\n")
    failed = [r.command for r in records if r.passed is False]
    if failed:
        print("failed: " + ", ".join(failed), file=stderr)
        return EXIT_VERIFY
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
