"""Adaptive one-dimensional and nested multi-dimensional quadrature.

The 1-D core is a globally adaptive Gauss-Kronrod 15(7) scheme: the worst
interval (by error estimate) is bisected until the summed error estimate
meets the tolerance or the evaluation budget runs out.  Kronrod nodes are
interior, so integrable endpoint singularities (log or algebraic) are
handled by plain subdivision; the per-interval error model is the QUADPACK
one, which keeps refinement honest next to a singularity.

Nested integration composes 1-D calls; each inner level runs at a tenth of
the tolerance of the level above it.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import ConvergenceError, DomainError

__all__ = [
    "Tolerance",
    "IntegralResult",
    "integrate_1d",
    "integrate_nested",
    "integrate_region",
]

_EPS = 2.220446049250313e-16

# Gauss-Kronrod 15(7) abscissae and weights on [-1, 1] (QUADPACK dqk15).
_XGK = (
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.000000000000000,
)
_WGK = (
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
)
_WG = (
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
)


@dataclass(frozen=True)
class Tolerance:
    """Requested accuracy: stop when error <= max(abs, rel * |value|)."""

    rel: float = 1e-10
    abs: float = 1e-14

    def __post_init__(self):
        if not (1e-14 <= self.rel <= 1e-2):
            raise DomainError(f"rel tolerance {self.rel} outside [1e-14, 1e-2]")
        if not (self.abs >= 0.0 and math.isfinite(self.abs)):
            raise DomainError(f"abs tolerance {self.abs} must be finite and >= 0")

    def tighter(self, factor: float = 10.0) -> "Tolerance":
        """Tolerance for one nesting level further in (floored at the rel limit)."""
        return Tolerance(rel=max(self.rel / factor, 1e-14), abs=self.abs / factor)


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class IntegralResult:
    value: float
    error_estimate: float
    evaluations: int


def _gk15(f, a, b):
    """One Gauss-Kronrod 15(7) panel on [a, b].

    Returns (kronrod value, error estimate, resabs).  Raises DomainError if
    the integrand produces a non-finite value.
    """
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)

    fc = f(c)
    if not math.isfinite(fc):
        raise DomainError(f"integrand returned {fc!r} at x={c!r}")
    resk = _WGK[7] * fc
    resg = _WG[3] * fc
    resabs = _WGK[7] * abs(fc)
    fv = [0.0] * 14
    for j in range(7):
        x = h * _XGK[j]
        f1 = f(c - x)
        f2 = f(c + x)
        if not (math.isfinite(f1) and math.isfinite(f2)):
            bad = c - x if not math.isfinite(f1) else c + x
            raise DomainError(f"integrand returned a non-finite value at x={bad!r}")
        fv[j] = f1
        fv[j + 7] = f2
        s = f1 + f2
        resk += _WGK[j] * s
        resabs += _WGK[j] * (abs(f1) + abs(f2))
        if j % 2 == 1:  # Kronrod odd indices carry the embedded Gauss rule
            resg += _WG[j // 2] * s

    reskh = 0.5 * resk
    resasc = _WGK[7] * abs(fc - reskh)
    for j in range(7):
        resasc += _WGK[j] * (abs(fv[j] - reskh) + abs(fv[j + 7] - reskh))
    resasc *= abs(h)
    resabs *= abs(h)

    value = resk * h
    err = abs((resk - resg) * h)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    if resabs > 1e-300:
        # roundoff floor: ~1 ulp of the panel's absolute mass (resabs is
        # additive under splitting, so the floor sum stays bounded)
        err = max(err, 2.0 * _EPS * resabs)
    return value, err, resabs


def integrate_1d(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: Tolerance = DEFAULT_TOL,
    max_evals: int = 1_000_000,
) -> IntegralResult:
    """Integrate f on [lo, hi] to the requested tolerance.

    Deterministic for fixed inputs.  Non-finite integrand values raise
    DomainError; exceeding the evaluation budget raises ConvergenceError
    with the best estimate attached.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise DomainError("integration limits must be finite")
    if lo > hi:
        raise DomainError(f"lo={lo} exceeds hi={hi}")
    if lo == hi:
        return IntegralResult(0.0, 0.0, 0)

    evals = 0
    val, err, resabs = _gk15(f, lo, hi)
    evals += 15
    # heap entries: (-err, sequence number, a, b, value, err, resabs)
    seq = 0
    heap = [(-err, seq, lo, hi, val, err, resabs)]
    stalled: list[tuple[float, float]] = []  # (value, err) of unimprovable panels
    total_val = val
    total_err = err

    def finish():
        vals = [entry[4] for entry in heap] + [sv for sv, _ in stalled]
        errs = [entry[5] for entry in heap] + [se for _, se in stalled]
        return IntegralResult(math.fsum(vals), math.fsum(errs), evals)

    while True:
        if total_err <= max(tol.abs, tol.rel * abs(total_val)):
            return finish()
        if not heap:
            # every remaining panel is roundoff-limited
            res = finish()
            if res.error_estimate <= max(tol.abs, tol.rel * abs(res.value)):
                return res
            raise ConvergenceError(
                "quadrature stalled at roundoff before reaching tolerance", best=res
            )
        if evals + 30 > max_evals:
            raise ConvergenceError(
                f"evaluation budget {max_evals} exhausted", best=finish()
            )
        _, _, a, b, v_old, e_old, r_old = heapq.heappop(heap)
        m = 0.5 * (a + b)
        if m <= a or m >= b or e_old <= 2.5 * _EPS * r_old:
            # panel at floating-point resolution or at the roundoff floor
            stalled.append((v_old, e_old))
            continue
        v1, e1, r1 = _gk15(f, a, m)
        v2, e2, r2 = _gk15(f, m, b)
        evals += 30
        total_val += (v1 + v2) - v_old
        total_err += (e1 + e2) - e_old
        seq += 1
        heapq.heappush(heap, (-e1, seq, a, m, v1, e1, r1))
        seq += 1
        heapq.heappush(heap, (-e2, seq, m, b, v2, e2, r2))


def integrate_region(
    integrand: Callable[..., float],
    bounds: Sequence[tuple],
    tol: Tolerance = DEFAULT_TOL,
    max_evals: int = 1_000_000,
) -> IntegralResult:
    """Nested integral over a region described by per-level (lo, hi) bounds.

    ``bounds`` lists one (lo, hi) pair per variable, outermost first; lo and
    hi may be numbers or callables of the already-fixed outer variables (in
    listed order).  The integrand receives the variables in the same order.
    Each inner level runs at a tenth of the tolerance of its parent.
    """
    if len(bounds) < 1:
        raise DomainError("at least one integration variable required")
    evals = 0

    def level(i, fixed, level_tol):
        nonlocal evals
        lo, hi = bounds[i]
        lo_v = float(lo(*fixed)) if callable(lo) else float(lo)
        hi_v = float(hi(*fixed)) if callable(hi) else float(hi)
        if i == len(bounds) - 1:
            def f(x):
                nonlocal evals
                evals += 1
                return integrand(*fixed, x)
        else:
            inner_tol = level_tol.tighter()

            def f(x):
                return level(i + 1, fixed + (x,), inner_tol).value

        return integrate_1d(f, lo_v, hi_v, level_tol, max_evals)

    res = level(0, (), tol)
    return IntegralResult(res.value, res.error_estimate, evals)


def integrate_nested(
    integrand: Callable[..., float],
    outer: tuple[float, float],
    bounds: Sequence[Callable[..., float]],
    tol: Tolerance = DEFAULT_TOL,
    max_evals: int = 1_000_000,
) -> IntegralResult:
    """Nested integral with zero lower limits and function-valued upper limits.

    The outermost variable runs over ``outer``; the i-th inner variable runs
    over [0, bounds[i](outer vars...)].  The integrand takes all variables,
    outermost first.
    """
    spec = [(float(outer[0]), float(outer[1]))]
    spec += [(0.0, g) for g in bounds]
    return integrate_region(integrand, spec, tol, max_evals)
