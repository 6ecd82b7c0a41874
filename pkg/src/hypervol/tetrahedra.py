"""Volume formulas for tetrahedra and related polyhedra with dihedral-angle
parameters: ideal tetrahedra, the general tetrahedron by an integral and by
a Clausen-function closed form, the Lambert cube and the ideal symmetric
octahedron.

The general tetrahedron carries dihedral angles A..F with (A, D), (B, E),
(C, F) at opposite edge pairs (the convention the coefficient
k3 = 2(sin A sin D + sin B sin E + sin C sin F) presupposes).  Realizability
is checked operationally: the auxiliary root data must be real, the root
interval nonempty and the integrand's log argument must stay in (0, 1] on a
probe grid.  All formulas are stated at curvature 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import quadrature
from .errors import DomainError, NotRealizableError
from .quadrature import DEFAULT_TOL, Tolerance
from .specfun import clausen2, lobachevsky

__all__ = [
    "TetraDihedrals",
    "DMCoefficients",
    "milnor_ideal",
    "dm_coefficients",
    "derevnin_mednykh",
    "murakami_yano",
    "lambert_cube",
    "mohanty_octahedron",
]


@dataclass(frozen=True)
class TetraDihedrals:
    """Six dihedral angles of a tetrahedron; opposite pairs (A,D), (B,E), (C,F)."""

    A: float
    B: float
    C: float
    D: float
    E: float
    F: float

    def __post_init__(self):
        for name in "ABCDEF":
            v = float(getattr(self, name))
            if not (0.0 < v < math.pi):
                raise DomainError(f"dihedral angle {name} must lie in (0, pi), got {v!r}")

    def as_tuple(self) -> tuple[float, ...]:
        return (self.A, self.B, self.C, self.D, self.E, self.F)


@dataclass(frozen=True)
class DMCoefficients:
    """Auxiliary data for the tetrahedron volume integral."""

    S: float
    k1: float
    k2: float
    k3: float
    k4: float
    z1: float
    z2: float


def milnor_ideal(A: float, B: float, C: float) -> float:
    """Ideal tetrahedron volume L(A) + L(B) + L(C), requiring A + B + C = pi."""
    A, B, C = float(A), float(B), float(C)
    if min(A, B, C) <= 0.0:
        raise DomainError("ideal tetrahedron angles must be positive")
    if abs(A + B + C - math.pi) > 1e-9:
        raise DomainError("ideal tetrahedron angles must satisfy A + B + C = pi")
    return lobachevsky(A) + lobachevsky(B) + lobachevsky(C)


def _log_argument(t: TetraDihedrals, z: float) -> tuple[float, float]:
    """Numerator and denominator of the volume integrand's log argument."""
    A, B, C, D, E, F = t.as_tuple()
    num = (
        math.cos((A + B + C + z) / 2.0)
        * math.cos((A + E + F + z) / 2.0)
        * math.cos((B + D + F + z) / 2.0)
        * math.cos((C + D + E + z) / 2.0)
    )
    den = (
        math.sin((A + B + D + E + z) / 2.0)
        * math.sin((A + C + D + F + z) / 2.0)
        * math.sin((B + C + E + F + z) / 2.0)
        * math.sin(z / 2.0)
    )
    return num, den


def dm_coefficients(t: TetraDihedrals | tuple) -> DMCoefficients:
    """Root data (S, k1..k4, z1, z2) for the tetrahedron volume integral.

    z1,2 = atan2(k2, k1) -/+ atan(k4 / k3); at these points the integrand's
    log argument equals 1 (checked as a numerator-minus-denominator
    residual, which also covers the ideal-degenerate case where both vanish).
    Raises NotRealizableError when k4 is imaginary, the interval is empty,
    or the log argument leaves (0, 1] on a probe grid.
    """
    if not isinstance(t, TetraDihedrals):
        t = TetraDihedrals(*t)
    A, B, C, D, E, F = t.as_tuple()
    # vertex links must be spherical (finite vertex) or Euclidean (ideal):
    # the three dihedral angles meeting at each vertex sum to at least pi
    for trip in ((A, B, C), (A, E, F), (B, D, F), (C, D, E)):
        if sum(trip) < math.pi - 1e-9:
            raise NotRealizableError(
                f"vertex angle sum {sum(trip):.6f} below pi: no such tetrahedron"
            )
    S = A + B + C + D + E + F
    k1 = -(
        math.cos(S) + math.cos(A + D) + math.cos(B + E) + math.cos(C + F)
        + math.cos(D + E + F) + math.cos(D + B + C) + math.cos(A + E + C)
        + math.cos(A + B + F)
    )
    k2 = (
        math.sin(S) + math.sin(A + D) + math.sin(B + E) + math.sin(C + F)
        + math.sin(D + E + F) + math.sin(D + B + C) + math.sin(A + E + C)
        + math.sin(A + B + F)
    )
    k3 = 2.0 * (
        math.sin(A) * math.sin(D) + math.sin(B) * math.sin(E) + math.sin(C) * math.sin(F)
    )
    k4sq = k1 * k1 + k2 * k2 - k3 * k3
    if k4sq < 0.0:
        raise NotRealizableError("k1^2 + k2^2 < k3^2: no real root interval")
    k4 = math.sqrt(k4sq)
    half = math.atan(k4 / k3)  # k3 > 0 for angles in (0, pi)
    center = math.atan2(k2, k1)
    z1, z2 = center - half, center + half
    if not z1 < z2:
        raise NotRealizableError("degenerate root interval (z1 >= z2)")
    # root residual: log argument equals 1, i.e. num - den vanishes
    for z in (z1, z2):
        num, den = _log_argument(t, z)
        scale = max(1.0, abs(num), abs(den))
        if abs(num - den) > 1e-8 * scale:
            raise NotRealizableError(
                f"integrand root residual {abs(num - den):.3e} at z={z!r}"
            )
    # operational realizability probe: argument within (0, 1] inside the interval
    for j in range(1, 10):
        z = z1 + (z2 - z1) * j / 10.0
        num, den = _log_argument(t, z)
        if den <= 0.0 or num <= 0.0 or num > den * (1.0 + 1e-9):
            raise NotRealizableError(
                "volume integrand not positive across the root interval"
            )
    return DMCoefficients(S, k1, k2, k3, k4, z1, z2)


def derevnin_mednykh(t: TetraDihedrals | tuple, tol: Tolerance = DEFAULT_TOL) -> float:
    """Tetrahedron volume by the root-interval integral

    -1/4 int_{z1}^{z2} log( prod cos / prod sin ) dz.

    The integrand vanishes at both endpoints (square-root approach), so
    plain adaptive subdivision is enough.
    """
    if not isinstance(t, TetraDihedrals):
        t = TetraDihedrals(*t)
    co = dm_coefficients(t)
    A, B, C, D, E, F = t.as_tuple()

    def slog(x: float) -> float:
        # integrable log zero; floor keeps an exactly-hit root finite
        return math.log(max(abs(x), 5e-324))

    def f(z: float) -> float:
        return (
            slog(math.cos((A + B + C + z) / 2.0))
            + slog(math.cos((A + E + F + z) / 2.0))
            + slog(math.cos((B + D + F + z) / 2.0))
            + slog(math.cos((C + D + E + z) / 2.0))
            - slog(math.sin((A + B + D + E + z) / 2.0))
            - slog(math.sin((A + C + D + F + z) / 2.0))
            - slog(math.sin((B + C + E + F + z) / 2.0))
            - slog(math.sin(z / 2.0))
        )

    res = quadrature.integrate_1d(f, co.z1, co.z2, tol)
    return -0.25 * res.value


def murakami_yano(t: TetraDihedrals | tuple) -> float:
    """Tetrahedron volume as a closed Clausen-function combination.

    With the same roots z1, z2 as the integral form and real arguments
    throughout, Im Li2(e^{ix}) = Cl2(x) and the volume is

    1/4 sum_{z in {z1, -z2}} sign * [ Cl2(z) + Cl2(A+B+D+E+z) + Cl2(A+C+D+F+z)
        + Cl2(B+C+E+F+z) - Cl2(pi+A+B+C+z) - Cl2(pi+A+E+F+z)
        - Cl2(pi+B+D+F+z) - Cl2(pi+C+D+E+z) ].
    """
    if not isinstance(t, TetraDihedrals):
        t = TetraDihedrals(*t)
    co = dm_coefficients(t)
    A, B, C, D, E, F = t.as_tuple()

    def im_u(z: float) -> float:
        pos = (z, A + B + D + E + z, A + C + D + F + z, B + C + E + F + z)
        neg = (
            math.pi + A + B + C + z,
            math.pi + A + E + F + z,
            math.pi + B + D + F + z,
            math.pi + C + D + E + z,
        )
        return 0.5 * (
            math.fsum(clausen2(x) for x in pos) - math.fsum(clausen2(x) for x in neg)
        )

    return 0.5 * (im_u(co.z1) - im_u(co.z2))


def lambert_cube(w0: float, w1: float, w2: float, theta: float) -> float:
    """Lambert cube volume for essential angles w0, w1, w2 and auxiliary theta:

    1/4 { sum_i (L(w_i + theta) - L(w_i - theta)) - L(2 theta) + 2 L(pi/2 - theta) }.

    theta must be supplied: its defining expression involves an edge length
    of the cube, so the angles alone do not determine it here.  For a
    geometric cube tan(theta) >= 1; the combination is returned for any
    theta in (0, pi/2] (and is 0 at theta = pi/2).
    """
    for name, w in (("w0", w0), ("w1", w1), ("w2", w2)):
        if not (0.0 < float(w) < math.pi / 2.0):
            raise DomainError(f"essential angle {name} must lie in (0, pi/2), got {w!r}")
    theta = float(theta)
    if not (0.0 < theta <= math.pi / 2.0):
        raise DomainError(f"theta must lie in (0, pi/2], got {theta!r}")
    ws = (float(w0), float(w1), float(w2))
    return 0.25 * (
        math.fsum(lobachevsky(w + theta) - lobachevsky(w - theta) for w in ws)
        - lobachevsky(2.0 * theta)
        + 2.0 * lobachevsky(math.pi / 2.0 - theta)
    )


def mohanty_octahedron(A: float, B: float, E: float) -> float:
    """Ideal symmetric octahedron volume (C = pi - A, D = pi - B, F = pi - E):

    2 [ L((pi+A+B+E)/2) + L((pi-A-B+E)/2) + L((pi+A-B-E)/2) + L((pi-A+B-E)/2) ].
    """
    for name, v in (("A", A), ("B", B), ("E", E)):
        if not (0.0 < float(v) < math.pi):
            raise DomainError(f"angle {name} must lie in (0, pi), got {v!r}")
    A, B, E = float(A), float(B), float(E)
    return 2.0 * (
        lobachevsky((math.pi + A + B + E) / 2.0)
        + lobachevsky((math.pi - A - B + E) / 2.0)
        + lobachevsky((math.pi + A - B - E) / 2.0)
        + lobachevsky((math.pi - A + B - E) / 2.0)
    )
