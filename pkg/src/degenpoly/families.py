"""Degenerate Genocchi-type polynomial families from generating functions.

Each constructor assembles the exponential generating function of a family
as an exact truncated series and reads off the values ``n! * c_n``:

* ``genocchi_deg``: degenerate Genocchi, ``2t / (e_lambda(t) + 1) * e_lambda^x(t)``
* ``genocchi_deg_order``: order-r version with ``(2t / (e_lambda(t) + 1))^r``
* ``euler_deg_order``: degenerate Euler of order r, ``(2 / (e_lambda(t) + 1))^r``
* ``poly_genocchi_deg``: degenerate poly-Genocchi,
  ``2 Ei_{k,lambda}(log_lambda(1+t)) / (e_lambda(t) + 1) * e_lambda^x(t)``
* ``multi_poly_genocchi_deg``: degenerate multi-poly-Genocchi,
  ``2^r Ei_{(k_1..k_r),lambda}(log_lambda(1+t)) / (e_lambda(t) + 1)^r * e_lambda^x(t)``

The argument may be the symbol ``"x"``, the sum ``"x+y"``, or an exact
rational (0 gives the number family).  ``multi_poly_genocchi_deg`` with a
single index k equals ``poly_genocchi_deg(k, ...)``, and with k = 1 both
collapse to ``genocchi_deg``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .degen import deg_exp, deg_falling_factorial, deg_log, deg_multi_polyexp, deg_polyexp
from .poly import ZERO, MultiPoly
from .series import TruncatedSeries

Argument = Union[str, int, Fraction]

GENOCCHI = "GenocchiDeg"
GENOCCHI_ORDER = "GenocchiDegOrderR"
EULER_ORDER = "EulerDegOrderR"
POLY_GENOCCHI = "PolyGenocchiDeg"
MULTI_POLY_GENOCCHI = "MultiPolyGenocchiDeg"


def _norm_argument(argument: Argument) -> Union[str, Fraction]:
    if isinstance(argument, str):
        if argument in ("x", "x+y"):
            return argument
        raise ValueError(f"argument must be 'x', 'x+y' or a rational, got {argument!r}")
    return Fraction(argument)


@dataclass(frozen=True)
class PolyFamily:
    """A polynomial family evaluated to order ``n_max``.

    ``values[n]`` is the n-th member as an exact polynomial in lambda (and
    x, y when the argument is symbolic).  ``r`` and ``ks`` are populated for
    the order-r and poly/multi-poly variants respectively.
    """

    family_id: str
    argument: Union[str, Fraction]
    n_max: int
    values: tuple[MultiPoly, ...]
    r: int | None = None
    ks: tuple[int, ...] | None = None


def _egf_values(gen: TruncatedSeries) -> tuple[MultiPoly, ...]:
    return tuple(gen.egf_coeff(n) for n in range(gen.order + 1))


def _one_plus_exp_inverse(order: int) -> TruncatedSeries:
    return (deg_exp(1, order) + 1).invert()


def genocchi_deg(argument: Argument, n_max: int) -> PolyFamily:
    """Degenerate Genocchi polynomials ``G_{n,lambda}(argument)``."""
    arg = _norm_argument(argument)
    gen = (TruncatedSeries.t(n_max) * 2) * _one_plus_exp_inverse(n_max)
    gen = gen * deg_exp(arg, n_max)
    return PolyFamily(GENOCCHI, arg, n_max, _egf_values(gen))


def genocchi_deg_order(r: int, argument: Argument, n_max: int) -> PolyFamily:
    """Degenerate Genocchi polynomials of order r."""
    if r < 1:
        raise ValueError("order r must be at least 1")
    arg = _norm_argument(argument)
    base = (TruncatedSeries.t(n_max) * 2) * _one_plus_exp_inverse(n_max)
    gen = base**r * deg_exp(arg, n_max)
    return PolyFamily(GENOCCHI_ORDER, arg, n_max, _egf_values(gen), r=r)


def euler_deg_order(r: int, argument: Argument, n_max: int) -> PolyFamily:
    """Degenerate Euler polynomials of order r."""
    if r < 1:
        raise ValueError("order r must be at least 1")
    arg = _norm_argument(argument)
    base = _one_plus_exp_inverse(n_max) * 2
    gen = base**r * deg_exp(arg, n_max)
    return PolyFamily(EULER_ORDER, arg, n_max, _egf_values(gen), r=r)


def poly_genocchi_deg(k: int, argument: Argument, n_max: int) -> PolyFamily:
    """Degenerate poly-Genocchi polynomials ``g_{n,lambda}^{(k)}(argument)``."""
    arg = _norm_argument(argument)
    num = deg_polyexp(k, n_max).compose(deg_log(n_max))
    gen = num * 2 * _one_plus_exp_inverse(n_max) * deg_exp(arg, n_max)
    return PolyFamily(POLY_GENOCCHI, arg, n_max, _egf_values(gen), ks=(int(k),))


def multi_poly_genocchi_deg(
    ks: Sequence[int], argument: Argument, n_max: int
) -> PolyFamily:
    """Degenerate multi-poly-Genocchi polynomials for index list ``ks``."""
    ks = tuple(int(k) for k in ks)
    if not ks:
        raise ValueError("need at least one polyexponential index")
    r = len(ks)
    arg = _norm_argument(argument)
    num = deg_multi_polyexp(ks, n_max).compose(deg_log(n_max))
    gen = num * (2**r) * _one_plus_exp_inverse(n_max) ** r * deg_exp(arg, n_max)
    return PolyFamily(MULTI_POLY_GENOCCHI, arg, n_max, _egf_values(gen), r=r, ks=ks)


def expand_in_deg_falling_basis(family: PolyFamily) -> list[list[MultiPoly]]:
    """Rewrite each ``values[n]`` in the basis ``(x)_{m,lambda}``.

    Returns per-n coefficient lists ``coeffs[n][m]`` (polynomials in lambda)
    with ``values[n] = sum_m coeffs[n][m] * (x)_{m,lambda}``.  The family
    must have been built at symbolic argument ``"x"``; since
    ``(x)_{m,lambda}`` is monic of degree m in x, top-down elimination of
    leading x-coefficients terminates, and a nonzero remainder (e.g. a stray
    y term) raises ``RuntimeError``.
    """
    if family.argument != "x":
        raise ValueError("basis expansion needs a family built at argument 'x'")
    basis = [deg_falling_factorial("x", m) for m in range(family.n_max + 1)]
    out: list[list[MultiPoly]] = []
    for n, value in enumerate(family.values):
        coeffs: list[MultiPoly] = [ZERO] * (n + 1)
        rem = value
        for m in range(n, -1, -1):
            c = rem.coeff_x(m)
            coeffs[m] = c
            if c:
                rem = rem - c * basis[m]
        if rem:
            raise RuntimeError(f"basis expansion left a remainder at n={n}: {rem}")
        out.append(coeffs)
    return out
