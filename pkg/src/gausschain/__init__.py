"""Alternating permutations, the arithmetic-geometric mean, elliptic
integrals, theta functions, the pendulum period and lattice sums, each
computed by at least two independent routes."""

from .agm import AgmResult, GaussSeries, gauss_series, verify_agm_ode, verify_functional_equation
from .elliptic import (
    HypergeomParams,
    Modulus,
    ellip_k_agm,
    ellip_k_quadrature,
    ellip_k_series,
    hypergeom_2f1,
)
from .errors import (
    ArgumentError,
    ConvergenceError,
    DomainError,
    GausschainError,
    NumericError,
    ResourceLimitError,
    VerificationError,
)
from .modular import (
    LatticeSpec,
    UnimodularMatrix,
    eisenstein,
    verify_modularity,
    weierstrass_invariants,
    wp,
)
from .pendulum import PendulumConfig, exact_period, period_ratio_table, simulate_period
from .series import TruncatedPowerSeries
from .theta import (
    Nome,
    sum_of_squares_bruteforce,
    sum_of_squares_series,
    theta_constants,
    verify_theta_identities,
)
from .zigzag import enumerate_alternating, tangent_numbers, verify_tangent_ode, zigzag_numbers

__version__ = "0.1.0"
