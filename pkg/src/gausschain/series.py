"""Exact truncated power series over the rationals.

A :class:`TruncatedPowerSeries` of order ``N`` stores ``c_0 .. c_N`` as
:class:`fractions.Fraction` and represents ``sum c_k s^k + O(s^(N+1))``.
Every operation tracks how many coefficients remain *known*: adding two
series keeps the smaller order, differentiating loses one order,
multiplying by ``s^m`` gains ``m``. Residual checks therefore never report
a coefficient the inputs could not determine.

An order of ``-1`` is allowed and means "nothing is known"; it arises, for
instance, when a constant is differentiated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable

from .errors import ArgumentError

__all__ = ["TruncatedPowerSeries"]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise ArgumentError(f"series coefficients must be exact rationals, got {type(value).__name__}")


@dataclass(frozen=True)
class TruncatedPowerSeries:
    """``c_0 + c_1 s + ... + c_N s^N + O(s^(N+1))`` with exact coefficients."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < -1:
            raise ArgumentError(f"order must be >= -1, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ArgumentError(
                f"a series of order {self.order} needs {self.order + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    # -- construction -----------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int | None = None) -> "TruncatedPowerSeries":
        """Build a series from leading coefficients, zero-padding up to ``order``."""
        values = [_as_fraction(c) for c in coeffs]
        if order is None:
            order = len(values) - 1
        if len(values) > order + 1:
            values = values[: order + 1]
        values.extend([Fraction(0)] * (order + 1 - len(values)))
        return cls(order, tuple(values))

    @classmethod
    def zero(cls, order: int) -> "TruncatedPowerSeries":
        return cls(order, (Fraction(0),) * (order + 1))

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedPowerSeries":
        return cls.from_coeffs([value], order)

    @classmethod
    def monomial(cls, degree: int, order: int, coefficient=1) -> "TruncatedPowerSeries":
        coeffs = [Fraction(0)] * (order + 1)
        if 0 <= degree <= order:
            coeffs[degree] = _as_fraction(coefficient)
        return cls(order, tuple(coeffs))

    # -- access -----------------------------------------------------------

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def is_zero(self) -> bool:
        """True if every known coefficient is exactly zero."""
        return all(c == 0 for c in self.coeffs)

    def nonzero_terms(self) -> list[tuple[int, Fraction]]:
        return [(k, c) for k, c in enumerate(self.coeffs) if c != 0]

    def truncate(self, order: int) -> "TruncatedPowerSeries":
        if order > self.order:
            raise ArgumentError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedPowerSeries(order, self.coeffs[: order + 1])

    def evaluate(self, x) -> Fraction | float:
        """Evaluate the polynomial part at ``x`` (Horner's rule)."""
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(acc, Fraction) else float(c))
        return acc

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "TruncatedPowerSeries":
        if isinstance(other, TruncatedPowerSeries):
            return other
        return TruncatedPowerSeries.constant(_as_fraction(other), self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedPowerSeries(n, tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedPowerSeries(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedPowerSeries):
            scalar = _as_fraction(other)
            return TruncatedPowerSeries(self.order, tuple(c * scalar for c in self.coeffs))
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        a_terms = [(i, c) for i, c in enumerate(self.coeffs[: n + 1]) if c]
        b_terms = [(j, c) for j, c in enumerate(other.coeffs[: n + 1]) if c]
        for i, a in a_terms:
            for j, b in b_terms:
                if i + j > n:
                    break
                out[i + j] += a * b
        return TruncatedPowerSeries(n, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ArgumentError("only nonnegative integer powers are supported")
        result = TruncatedPowerSeries.constant(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def derivative(self) -> "TruncatedPowerSeries":
        """d/ds; the result is known to one order less (never below -1)."""
        return TruncatedPowerSeries(
            max(self.order - 1, -1), tuple(k * c for k, c in enumerate(self.coeffs) if k > 0)
        )

    def shift(self, m: int) -> "TruncatedPowerSeries":
        """Multiply by ``s^m``; the result is known to ``m`` more orders."""
        if m < 0:
            raise ArgumentError("shift must be nonnegative")
        return TruncatedPowerSeries(self.order + m, (Fraction(0),) * m + self.coeffs)

    def compose_monomial(self, coefficient, degree: int) -> "TruncatedPowerSeries":
        """Substitute ``s -> coefficient * s^degree``."""
        if degree < 1:
            raise ArgumentError("degree must be positive")
        c = _as_fraction(coefficient)
        order = (self.order + 1) * degree - 1
        out = [Fraction(0)] * (order + 1)
        for k, a in enumerate(self.coeffs):
            out[k * degree] = a * c**k
        return TruncatedPowerSeries(order, tuple(out))

    def reciprocal(self) -> "TruncatedPowerSeries":
        """``1 / self`` to the same order; requires a nonzero constant term."""
        if self.order < 0 or self.coeffs[0] == 0:
            raise ArgumentError("reciprocal needs a nonzero constant term")
        a = self.coeffs
        inv = [Fraction(1) / a[0]]
        for n in range(1, self.order + 1):
            acc = sum((a[k] * inv[n - k] for k in range(1, n + 1)), Fraction(0))
            inv.append(-acc / a[0])
        return TruncatedPowerSeries(self.order, tuple(inv))

    def __repr__(self) -> str:
        terms = [f"{c}*s^{k}" for k, c in self.nonzero_terms()[:6]]
        body = " + ".join(terms) if terms else "0"
        return f"TruncatedPowerSeries({body} + O(s^{self.order + 1}))"

