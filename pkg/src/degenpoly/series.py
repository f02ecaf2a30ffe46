"""Truncated formal power series in t with polynomial coefficients.

A series of order N holds the ordinary coefficients ``c_0 .. c_N`` of
``f(t) = sum c_n t^n`` as :class:`~degenpoly.poly.MultiPoly` values; all
arithmetic is exact and silently drops degrees above N.  Exponential
generating coefficients (``a_n`` in ``f = sum a_n t^n / n!``) are exposed
through :meth:`TruncatedSeries.egf_coeff`, which returns ``n! * c_n``.

Binary operations require both operands to have the same order; mixing
orders raises ``ValueError`` rather than guessing a truncation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from .poly import MultiPoly, ZERO

CoeffLike = Union[MultiPoly, int, Fraction]


def _as_poly(value: CoeffLike) -> MultiPoly:
    return value if isinstance(value, MultiPoly) else MultiPoly.const(value)


class TruncatedSeries:
    """Eagerly evaluated power series truncated at a fixed order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[CoeffLike]):
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = tuple(_as_poly(c) for c in coeffs)
        if len(cs) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(cs)}")
        self.order = order
        self.coeffs = cs

    @classmethod
    def constant(cls, value: CoeffLike, order: int) -> "TruncatedSeries":
        return cls(order, [value] + [ZERO] * order)

    @classmethod
    def t(cls, order: int) -> "TruncatedSeries":
        """The series t (truncates to 0 when order is 0)."""
        coeffs = [ZERO] * (order + 1)
        if order >= 1:
            coeffs[1] = MultiPoly.const(1)
        return cls(order, coeffs)

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"series order mismatch: {self.order} vs {other.order}")

    def __add__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self._check_order(other)
            return TruncatedSeries(
                self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)]
            )
        if isinstance(other, (MultiPoly, int, Fraction)):
            coeffs = list(self.coeffs)
            coeffs[0] = coeffs[0] + _as_poly(other)
            return TruncatedSeries(self.order, coeffs)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            self._check_order(other)
            return TruncatedSeries(
                self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)]
            )
        if isinstance(other, (MultiPoly, int, Fraction)):
            coeffs = list(self.coeffs)
            coeffs[0] = coeffs[0] - _as_poly(other)
            return TruncatedSeries(self.order, coeffs)
        return NotImplemented

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, [-c for c in self.coeffs])

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (MultiPoly, int, Fraction)):
            scale = other if isinstance(other, MultiPoly) else Fraction(other)
            return TruncatedSeries(self.order, [c * scale for c in self.coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check_order(other)
        n = self.order
        out: list[MultiPoly] = [ZERO] * (n + 1)
        for i, ci in enumerate(self.coeffs):
            if not ci:
                continue
            for j in range(n - i + 1):
                cj = other.coeffs[j]
                if cj:
                    out[i + j] = out[i + j] + ci * cj
        return TruncatedSeries(n, out)

    __rmul__ = __mul__

    def __pow__(self, r: int) -> "TruncatedSeries":
        if r < 0:
            raise ValueError("negative series power; use invert() first")
        out = TruncatedSeries.constant(1, self.order)
        for _ in range(r):
            out = out * self
        return out

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; the constant term must be a nonzero rational."""
        c0 = self.coeffs[0]
        if not c0.is_constant() or not c0:
            raise ValueError(
                "series is invertible only when its constant term is a nonzero rational"
            )
        inv0 = 1 / c0.constant_value()
        g: list[MultiPoly] = [MultiPoly.const(inv0)]
        for n in range(1, self.order + 1):
            acc = ZERO
            for i in range(1, n + 1):
                fi = self.coeffs[i]
                if fi:
                    acc = acc + fi * g[n - i]
            g.append(acc * (-inv0))
        return TruncatedSeries(self.order, g)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute ``inner`` for t; ``inner`` must have zero constant term."""
        if not isinstance(inner, TruncatedSeries):
            raise TypeError("compose expects a TruncatedSeries")
        self._check_order(inner)
        if inner.coeffs[0]:
            raise ValueError("inner series must have zero constant term")
        result = TruncatedSeries.constant(self.coeffs[self.order], self.order)
        for n in range(self.order - 1, -1, -1):
            result = result * inner
            if self.coeffs[n]:
                result = result + self.coeffs[n]
        return result

    def egf_coeff(self, n: int) -> MultiPoly:
        """n-th exponential generating coefficient, ``n! * c_n``."""
        if not 0 <= n <= self.order:
            raise ValueError(f"coefficient index {n} out of range 0..{self.order}")
        return self.coeffs[n] * math.factorial(n)

    def truncate(self, order: int) -> "TruncatedSeries":
        if not 0 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {order}")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:4])
        tail = ", ..." if self.order >= 4 else ""
        return f"TruncatedSeries(order={self.order}, [{head}{tail}])"
