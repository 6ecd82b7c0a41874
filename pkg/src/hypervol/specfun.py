"""Scalar special functions behind the closed-form volumes.

The Lobachevsky function

    L(x) = -integral_0^x ln|2 sin t| dt

is odd and pi-periodic; every 3-D closed form in this package is a finite
combination of its values.  The Clausen function Cl2 is its 2x rescaling,
Cl2(x) = 2 L(x/2) = Im Li2(e^{ix}).

Evaluation: range-reduce, then sum the power series

    Cl2(t) = t - t ln t + sum_{m>=1} zeta(2m) / (m (2m+1)) (t/2pi)^{2m} t

for t in [0, pi] (geometric ratio <= 1/4, so ~25 terms reach full double
precision).  A quadrature-based evaluation of the defining integral is kept
as an independent verification path.
"""

from __future__ import annotations

import math

from . import quadrature
from .errors import DomainError
from .quadrature import Tolerance

__all__ = [
    "lobachevsky",
    "lobachevsky_via_integral",
    "clausen2",
    "im_li2_unit",
]

_TWO_PI = 2.0 * math.pi


def _zeta_even(m: int) -> float:
    """zeta(2m) to double precision."""
    exact = {
        1: math.pi ** 2 / 6.0,
        2: math.pi ** 4 / 90.0,
        3: math.pi ** 6 / 945.0,
        4: math.pi ** 8 / 9450.0,
        5: math.pi ** 10 / 93555.0,
    }
    if m in exact:
        return exact[m]
    # tail beyond j=40 is < 40^(1-2m)/(2m-1) < 1e-19 for m >= 6
    return 1.0 + math.fsum(j ** (-2.0 * m) for j in range(2, 41))


# coefficients zeta(2m) / (m (2m+1) (2pi)^(2m)); 40 terms cover t <= pi
_CL2_COEF = tuple(
    _zeta_even(m) / (m * (2 * m + 1) * _TWO_PI ** (2 * m)) for m in range(1, 41)
)


def _cl2_core(t: float) -> float:
    """Cl2 on [0, pi] by the log-plus-power-series expansion."""
    if t == 0.0:
        return 0.0
    acc = t * (1.0 - math.log(t))
    t2 = t * t
    p = t
    for c in _CL2_COEF:
        p *= t2
        term = c * p
        acc += term
        if abs(term) < 1e-17 * abs(acc):
            break
    return acc


def clausen2(x: float) -> float:
    """Clausen function Cl2(x) = Im Li2(e^{ix}); odd, 2pi-periodic."""
    if not math.isfinite(x):
        raise DomainError(f"clausen2 requires a finite argument, got {x!r}")
    r = math.remainder(x, _TWO_PI)  # in [-pi, pi]
    if r < 0.0:
        return -_cl2_core(-r)
    return _cl2_core(r)


def lobachevsky(x: float) -> float:
    """Lobachevsky function L(x); odd, pi-periodic, max at pi/6."""
    if not math.isfinite(x):
        raise DomainError(f"lobachevsky requires a finite argument, got {x!r}")
    r = math.remainder(x, math.pi)  # in [-pi/2, pi/2]
    if r < 0.0:
        return -0.5 * _cl2_core(-2.0 * r)
    return 0.5 * _cl2_core(2.0 * r)


def im_li2_unit(x: float) -> float:
    """Imaginary part of Li2 on the unit circle at angle x (= Cl2(x))."""
    return clausen2(x)


def lobachevsky_via_integral(x: float, tol: Tolerance | None = None) -> float:
    """L(x) by adaptive quadrature of the defining integral.

    Independent of the series path; used to cross-check it.  The integrand
    has log singularities at multiples of pi, so the argument is reduced to
    [-pi/2, pi/2] first (the quadrature nodes themselves never touch 0).
    """
    if not math.isfinite(x):
        raise DomainError(f"lobachevsky_via_integral requires a finite argument, got {x!r}")
    tol = tol or Tolerance(rel=1e-13, abs=1e-15)
    r = math.remainder(x, math.pi)
    sign = 1.0
    if r < 0.0:
        sign, r = -1.0, -r
    if r == 0.0:
        return 0.0

    def integrand(t: float) -> float:
        return -math.log(abs(2.0 * math.sin(t)))

    return sign * quadrature.integrate_1d(integrand, 0.0, r, tol).value
