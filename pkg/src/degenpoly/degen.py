"""Degenerate special functions as exact truncated series.

Everything here is parameterized by the deformation symbol lambda and
reduces to a classical object at lambda = 0:

* degenerate falling factorial ``(w)_{n,lambda} = w (w - lambda) ... (w - (n-1) lambda)``
* degenerate exponential ``e_lambda^w(t) = (1 + lambda t)^{w/lambda}``,
  whose egf coefficients are the falling factorials
* degenerate logarithm ``log_lambda(1 + t)``, the compositional inverse of
  ``e_lambda(t) - 1``
* degenerate Stirling numbers of the first kind, via the triangular
  recurrence ``S(n+1, k) = S(n, k-1) + (k lambda - n) S(n, k)`` or as egf
  coefficients of ``(log_lambda(1+t))^k / k!``
* polyexponential functions: the classical polylogarithm, the modified
  polyexponential ``Ei_k``, its degenerate version ``Ei_{k,lambda}``, and the
  degenerate multiple polyexponential ``Ei_{(k_1..k_r),lambda}`` summed over
  strictly increasing index chains ``0 < n_1 < ... < n_r``.

Series weights and bases may be the symbols ``"x"``, ``"y"``, the sum
``"x+y"``, or any exact rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .poly import LAM, ONE, X, Y, ZERO, MultiPoly
from .series import TruncatedSeries

Weight = Union[str, int, Fraction]


def _base_poly(base: Weight) -> MultiPoly:
    if isinstance(base, str):
        if base == "x":
            return X
        if base == "y":
            return Y
        if base == "x+y":
            return X + Y
        raise ValueError(f"unknown symbolic base {base!r}; expected 'x', 'y' or 'x+y'")
    return MultiPoly.const(Fraction(base))


def deg_falling_factorial(base: Weight, n: int) -> MultiPoly:
    """Degenerate falling factorial ``(base)_{n,lambda}``; 1 when n = 0."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    b = _base_poly(base)
    out = ONE
    for i in range(n):
        out = out * (b - LAM * i)
    return out


def classical_falling_factorial(n: int) -> MultiPoly:
    """Ordinary falling factorial ``(x)_n = x (x-1) ... (x-n+1)``."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    out = ONE
    for i in range(n):
        out = out * (X - i)
    return out


def deg_exp(weight: Weight, order: int) -> TruncatedSeries:
    """Degenerate exponential ``e_lambda^weight(t)`` to the given order.

    The ordinary coefficient at t^n is ``(weight)_{n,lambda} / n!``.
    """
    b = _base_poly(weight)
    coeffs = []
    prod = ONE
    fact = 1
    for n in range(order + 1):
        if n:
            prod = prod * (b - LAM * (n - 1))
            fact *= n
        coeffs.append(prod * Fraction(1, fact))
    return TruncatedSeries(order, coeffs)


def deg_log(order: int) -> TruncatedSeries:
    """Degenerate logarithm ``log_lambda(1 + t)`` to the given order.

    The ordinary coefficient at t^n (n >= 1) is
    ``(lambda - 1)(lambda - 2)...(lambda - n + 1) / n!``; at lambda = 0 the
    series collapses to ``log(1 + t)``.  Satisfies
    ``e_lambda(log_lambda(1 + t)) = 1 + t`` exactly.
    """
    coeffs: list[MultiPoly] = [ZERO]
    prod = ONE
    fact = 1
    for n in range(1, order + 1):
        if n > 1:
            prod = prod * (LAM - (n - 1))
        fact *= n
        coeffs.append(prod * Fraction(1, fact))
    return TruncatedSeries(order, coeffs)


@dataclass(frozen=True)
class StirlingTable:
    """Triangle of degenerate Stirling numbers of the first kind.

    ``entries[n][k]`` holds ``S_{1,lambda}(n, k)`` for ``0 <= k <= n <= n_max``
    as polynomials in lambda.
    """

    n_max: int
    entries: tuple[tuple[MultiPoly, ...], ...]

    def value(self, n: int, k: int) -> MultiPoly:
        if not 0 <= n <= self.n_max or k < 0:
            raise ValueError(f"Stirling index ({n}, {k}) outside table range")
        return self.entries[n][k] if k <= n else ZERO


def stirling1_deg_recurrence(n_max: int) -> StirlingTable:
    """Build the Stirling triangle from the two-term recurrence.

    ``S(0,0) = 1`` and ``S(n+1, k) = S(n, k-1) + (k lambda - n) S(n, k)``.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    rows: list[tuple[MultiPoly, ...]] = [(ONE,)]
    for n in range(n_max):
        prev = rows[n]
        row: list[MultiPoly] = []
        for k in range(n + 2):
            s = prev[k - 1] if 1 <= k <= n + 1 else ZERO
            if k <= n and prev[k]:
                s = s + (LAM * k - n) * prev[k]
            row.append(s)
        rows.append(tuple(row))
    return StirlingTable(n_max, tuple(rows))


def stirling1_deg_series(n: int, k: int, order: int) -> MultiPoly:
    """``S_{1,lambda}(n, k)`` as the egf coefficient of ``(log_lambda(1+t))^k / k!``."""
    if not 0 <= k <= n <= order:
        raise ValueError(f"need 0 <= k <= n <= order, got ({n}, {k}) at order {order}")
    powered = deg_log(order) ** k
    return powered.egf_coeff(n) * Fraction(1, math.factorial(k))


def polylog(k: int, order: int) -> TruncatedSeries:
    """Polylogarithm ``Li_k(t) = sum_{n>=1} t^n / n^k`` truncated."""
    coeffs: list[MultiPoly] = [ZERO]
    for n in range(1, order + 1):
        coeffs.append(MultiPoly.const(Fraction(n) ** (-k)))
    return TruncatedSeries(order, coeffs)


def polyexp_modified(k: int, order: int) -> TruncatedSeries:
    """Modified polyexponential ``Ei_k(t) = sum_{n>=1} t^n / ((n-1)! n^k)``.

    ``Ei_1(t) = e^t - 1``.
    """
    coeffs: list[MultiPoly] = [ZERO]
    for n in range(1, order + 1):
        coeffs.append(
            MultiPoly.const(Fraction(1, math.factorial(n - 1)) * Fraction(n) ** (-k))
        )
    return TruncatedSeries(order, coeffs)


def deg_polyexp(k: int, order: int) -> TruncatedSeries:
    """Degenerate polyexponential ``Ei_{k,lambda}(t)``.

    The coefficient at t^n (n >= 1) is ``(1)_{n,lambda} / ((n-1)! n^k)``;
    ``Ei_{1,lambda}(t) = e_lambda(t) - 1``.
    """
    coeffs: list[MultiPoly] = [ZERO]
    prod = ONE
    for n in range(1, order + 1):
        prod = prod * (ONE - LAM * (n - 1)) if n > 1 else ONE
        scale = Fraction(1, math.factorial(n - 1)) * Fraction(n) ** (-k)
        coeffs.append(prod * scale)
    return TruncatedSeries(order, coeffs)


def deg_multi_polyexp(ks: Sequence[int], order: int) -> TruncatedSeries:
    """Degenerate multiple polyexponential ``Ei_{(k_1..k_r),lambda}(t)``.

    The coefficient at t^m sums over strictly increasing chains
    ``0 < n_1 < ... < n_r = m`` the products
    ``prod_i (1)_{n_i,lambda} / ((n_i - 1)! n_i^{k_i})``.  With a single
    index it reduces to ``Ei_{k,lambda}``.  Computed by one forward pass
    per index using prefix sums over the previous level.
    """
    ks = tuple(int(k) for k in ks)
    if not ks:
        raise ValueError("need at least one polyexponential index")
    if order < 0:
        raise ValueError("series order must be nonnegative")
    ones = [ONE]
    for n in range(1, order + 1):
        ones.append(ones[-1] * (ONE - LAM * (n - 1)) if n > 1 else ONE)
    level: list[MultiPoly] | None = None
    for k in ks:
        nxt: list[MultiPoly] = [ZERO] * (order + 1)
        running = ZERO
        for n in range(1, order + 1):
            if level is not None:
                running = running + level[n - 1]
            base = ones[n] * (Fraction(1, math.factorial(n - 1)) * Fraction(n) ** (-k))
            nxt[n] = base if level is None else base * running
        level = nxt
    return TruncatedSeries(order, level)
