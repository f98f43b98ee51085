"""Alternating (zig-zag) permutations, tangent and secant numbers.

Three independent routes to the same integers:

* brute-force enumeration of permutations (the oracle, small n only),
* the "fix the maximum" convolution recurrence for odd n,
* the Seidel boustrophedon triangle, which yields every n at once.

The exponential generating function of the odd counts is ``tan s``; the
exact ODE ``T' = 1 + T^2`` is checked coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

from .errors import ArgumentError, ResourceLimitError
from .series import TruncatedPowerSeries

__all__ = [
    "ZigzagTable",
    "enumerate_alternating",
    "tangent_numbers",
    "zigzag_numbers",
    "tangent_series",
    "verify_tangent_ode",
]

ENUMERATION_DEFAULT_LIMIT = 10
ENUMERATION_HARD_LIMIT = 12
TANGENT_LIMIT = 199
ZIGZAG_LIMIT = 500
ODE_ORDER_LIMIT = 60


@dataclass(frozen=True)
class ZigzagTable:
    """Counts of alternating permutations of length ``0..n_max``."""

    n_max: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.n_max + 1:
            raise ArgumentError("counts must hold n_max + 1 entries")

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def tangent(self) -> list[int]:
        """Odd-index entries (tangent numbers)."""
        return list(self.counts[1::2])

    def secant(self) -> list[int]:
        """Even-index entries (secant numbers)."""
        return list(self.counts[0::2])


def _check_int(value, name: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ArgumentError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise ArgumentError(f"{name} must be >= {minimum}, got {value}")
    return value


def _is_up_down(p: tuple[int, ...]) -> bool:
    # p[0] < p[1] > p[2] < p[3] ...
    for i in range(len(p) - 1):
        if (p[i] < p[i + 1]) != (i % 2 == 0):
            return False
    return True


def enumerate_alternating(n: int, *, allow_large: bool = False) -> int:
    """Count permutations of ``{1..n}`` with ``p1 < p2 > p3 < ...`` by brute force.

    This walks all ``n!`` permutations and is meant as an oracle. Sizes above
    10 require ``allow_large=True``; sizes above 12 are always refused.
    """
    n = _check_int(n, "n")
    limit = ENUMERATION_HARD_LIMIT if allow_large else ENUMERATION_DEFAULT_LIMIT
    if n > limit:
        raise ResourceLimitError(
            f"enumerating {n}! permutations exceeds the limit n <= {limit}"
            + ("" if allow_large else " (pass allow_large=True for n <= 12)")
        )
    if n == 0:
        return 1
    return sum(1 for p in permutations(range(n)) if _is_up_down(p))


def tangent_numbers(n_max: int) -> list[int]:
    """Return ``T_1, T_3, ..., T_{n_max}`` from the convolution recurrence.

    ``T_n = sum_{k odd, 1 <= k <= n-2} C(n-1, k) T_k T_{n-1-k}`` with
    ``T_1 = 1``. For odd ``n`` and odd ``k`` the index ``n-1-k`` is odd too,
    so the recurrence closes over odd indices.
    """
    n_max = _check_int(n_max, "n_max", minimum=1)
    if n_max % 2 == 0:
        raise ArgumentError(f"n_max must be odd, got {n_max}")
    if n_max > TANGENT_LIMIT:
        raise ResourceLimitError(f"n_max must be <= {TANGENT_LIMIT}, got {n_max}")
    t = {1: 1}
    for n in range(3, n_max + 1, 2):
        t[n] = sum(comb(n - 1, k) * t[k] * t[n - 1 - k] for k in range(1, n - 1, 2))
    return [t[n] for n in range(1, n_max + 1, 2)]


def zigzag_numbers(n_max: int) -> ZigzagTable:
    """Build every zig-zag number up to ``n_max`` with the Seidel boustrophedon.

    Each row starts at 0 and accumulates the previous row read backwards;
    the last entry of row ``n`` is the count for length ``n``.
    """
    n_max = _check_int(n_max, "n_max")
    if n_max > ZIGZAG_LIMIT:
        raise ResourceLimitError(f"n_max must be <= {ZIGZAG_LIMIT}, got {n_max}")
    counts = [1]
    row = [1]
    for n in range(1, n_max + 1):
        new = [0]
        for j in range(n):
            new.append(new[-1] + row[n - 1 - j])
        row = new
        counts.append(row[-1])
    return ZigzagTable(n_max, tuple(counts))


def tangent_series(order: int, counts=None) -> TruncatedPowerSeries:
    """``sum_{n odd <= order} T_n s^n / n!`` as an exact series of the given order."""
    order = _check_int(order, "order")
    if counts is None:
        counts = zigzag_numbers(order).counts
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1, 2):
        coeffs[n] = Fraction(counts[n], factorial(n))
    return TruncatedPowerSeries(order, tuple(coeffs))


def verify_tangent_ode(order: int, counts=None) -> TruncatedPowerSeries:
    """Residual of ``T'(s) - 1 - T(s)^2`` through ``s^order``.

    ``T`` is built to ``order + 1`` so that its derivative is known through
    ``order``. The returned series must vanish identically. ``counts`` lets a
    caller substitute a (possibly corrupted) table for fault-injection tests.
    """
    order = _check_int(order, "order", minimum=1)
    if order % 2:
        raise ArgumentError(f"order must be even, got {order}")
    if order > ODE_ORDER_LIMIT:
        raise ResourceLimitError(f"order must be <= {ODE_ORDER_LIMIT}, got {order}")
    t = tangent_series(order + 1, counts)
    residual = t.derivative() - 1 - t * t
    return residual.truncate(order)
