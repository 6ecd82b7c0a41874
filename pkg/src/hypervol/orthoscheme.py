"""Orthoscheme volumes: edge-parameterized integral, dihedral-angle closed
form, conversions between the two parameterizations, ideal-vertex limits,
the 2-D area analogue and the n-dimensional nested integral.

An orthoscheme here is the simplex built from three mutually orthogonal
edge steps a, b, c: a runs from the origin, b is perpendicular to a, and c
is perpendicular to the plane of a and b.  The three non-right dihedral
angles sit at the edge a (angle alpha), at the edge c (angle gamma) and at
the diagonal opposite the middle edge b (angle beta, at the segment of
length z with cosh z = cosh a cosh b cosh c).  The auxiliary angle delta
links the two parameterizations:

    tan delta = tanh a tan alpha = tanh c tan gamma
              = sqrt(cos^2 beta - sin^2 alpha sin^2 gamma) / (cos alpha cos gamma)

All operations fix the curvature constant to 1; general curvature follows
from v_k(a, b, c) = k^3 v_1(a/k, b/k, c/k).

A remark on the asymptotic formulas: numerically, the one-ideal-vertex
volume v1(b, c) coincides with asymptotic_cone_slice-style integrals
``bolyai_asymptotic_1(alpha, c)`` and ``bolyai_asymptotic_2(alpha, b)``
under the substitution alpha = atan(tanh c / sinh b) (observed to machine
precision on sampled parameters); the identification is recorded here for
reference but not relied upon by any computation.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import quadrature
from .errors import DomainError, NotRealizableError, UnsupportedDimensionError
from .quadrature import DEFAULT_TOL, Tolerance
from .specfun import lobachevsky

__all__ = [
    "OrthoschemeEdges",
    "OrthoschemeAngles",
    "NdimOrthoscheme",
    "edges_to_angles",
    "angles_to_edges",
    "delta_from_angles",
    "volume_edges",
    "volume_angles",
    "bolyai_integral_1",
    "bolyai_asymptotic_1",
    "bolyai_asymptotic_2",
    "volume_one_ideal",
    "volume_two_ideal",
    "volume_ideal_tetrahedron_b",
    "area_right_triangle",
    "right_triangle_angles",
    "lemma_angle",
    "volume_ndim",
    "sample_valid_angles",
]

_HALF_PI = 0.5 * math.pi


def _check_positive(name: str, v: float) -> float:
    v = float(v)
    if not (math.isfinite(v) and v > 0.0):
        raise DomainError(f"{name} must be finite and positive, got {v!r}")
    return v


@dataclass(frozen=True)
class OrthoschemeEdges:
    """Edge lengths a, b, c of an orthoscheme (a perp b, c perp plane(a, b))."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            _check_positive(f"edge {name}", getattr(self, name))

    @property
    def z(self) -> float:
        """Diagonal of the right triangle with legs a, b: cosh z = cosh a cosh b."""
        return math.acosh(math.cosh(self.a) * math.cosh(self.b))

    @property
    def z_long(self) -> float:
        """Diagonal opposite the middle edge: cosh = cosh a cosh b cosh c."""
        return math.acosh(math.cosh(self.a) * math.cosh(self.b) * math.cosh(self.c))


@dataclass(frozen=True)
class OrthoschemeAngles:
    """Non-right dihedral angles alpha, beta, gamma and the derived delta.

    alpha and gamma sit at the edges a and c; beta sits at the diagonal
    opposite the middle edge.  delta is computed from the other three when
    not supplied.  Realizability requires cos^2 beta > sin^2 alpha sin^2
    gamma and delta < min(alpha, gamma, pi/2 - beta).
    """

    alpha: float
    beta: float
    gamma: float
    delta: float = None  # type: ignore[assignment]

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            v = float(getattr(self, name))
            if not (0.0 < v < _HALF_PI):
                raise DomainError(f"{name} must lie in (0, pi/2), got {v!r}")
        if self.delta is None:
            object.__setattr__(
                self, "delta", delta_from_angles(self.alpha, self.beta, self.gamma)
            )
        d = float(self.delta)
        if not (0.0 < d < _HALF_PI):
            raise NotRealizableError(f"delta must lie in (0, pi/2), got {d!r}")
        if d >= self.alpha or d >= self.gamma or d >= _HALF_PI - self.beta:
            raise NotRealizableError(
                "delta must be dominated: delta < min(alpha, gamma, pi/2 - beta)"
            )


@dataclass(frozen=True)
class NdimOrthoscheme:
    """Edge parameters a_1 .. a_n of an n-dimensional orthoscheme.

    The build path visits the edges in the order a_n, a_1, a_2, ...; for
    n = 3 the tuple (a_1, a_2, a_3) = (b, c, a) matches the 3-D path (a, b, c).
    """

    edges: tuple[float, ...]

    def __init__(self, edges):
        e = tuple(float(v) for v in edges)
        for v in e:
            _check_positive("edge", v)
        if len(e) < 2:
            raise DomainError("an orthoscheme needs at least 2 edges")
        object.__setattr__(self, "edges", e)

    @property
    def n(self) -> int:
        return len(self.edges)


def delta_from_angles(alpha: float, beta: float, gamma: float) -> float:
    """Auxiliary angle: tan delta = sqrt(cos^2 b - sin^2 a sin^2 g) / (cos a cos g)."""
    for name, v in (("alpha", alpha), ("beta", beta), ("gamma", gamma)):
        if not (0.0 < float(v) < _HALF_PI):
            raise DomainError(f"{name} must lie in (0, pi/2), got {v!r}")
    rad = math.cos(beta) ** 2 - (math.sin(alpha) * math.sin(gamma)) ** 2
    if rad <= 0.0:
        raise NotRealizableError(
            "cos^2 beta must exceed sin^2 alpha sin^2 gamma for a real delta"
        )
    return math.atan(math.sqrt(rad) / (math.cos(alpha) * math.cos(gamma)))


def edges_to_angles(edges: OrthoschemeEdges | tuple) -> OrthoschemeAngles:
    """Dihedral angles of the orthoscheme with edges (a, b, c).

    alpha = atan(tanh c / sinh b), gamma = atan(tanh a / sinh b),
    tan delta = tanh a tanh c / sinh b, and beta from tan beta =
    tanh z / tan delta with z the long diagonal.
    """
    e = edges if isinstance(edges, OrthoschemeEdges) else OrthoschemeEdges(*edges)
    sb = math.sinh(e.b)
    alpha = math.atan(math.tanh(e.c) / sb)
    gamma = math.atan(math.tanh(e.a) / sb)
    tan_d = math.tanh(e.a) * math.tanh(e.c) / sb
    beta = math.atan(math.tanh(e.z_long) / tan_d)
    return OrthoschemeAngles(alpha, beta, gamma, math.atan(tan_d))


def angles_to_edges(angles: OrthoschemeAngles) -> OrthoschemeEdges:
    """Edge lengths from the dihedral angles, inverting edges_to_angles.

    a = atanh(tan delta / tan alpha), c = atanh(tan delta / tan gamma),
    z = atanh(tan delta tan beta) (equivalently the half-log-sine forms),
    then b from cosh z = cosh a cosh b cosh c.  Raises NotRealizableError
    when no positive b exists for the angle triple.
    """
    if not isinstance(angles, OrthoschemeAngles):
        angles = OrthoschemeAngles(*angles)
    td = math.tan(angles.delta)
    ra = td / math.tan(angles.alpha)
    rc = td / math.tan(angles.gamma)
    rz = td * math.tan(angles.beta)
    if ra >= 1.0 or rc >= 1.0 or rz >= 1.0:
        raise NotRealizableError("delta-domination violated; edges not realizable")
    a = math.atanh(ra)
    c = math.atanh(rc)
    # sinh^2 b = cosh^2 z / (cosh a cosh c)^2 - 1, in stable form
    cosh_z2 = 1.0 / ((1.0 - rz) * (1.0 + rz))
    s2 = cosh_z2 * (1.0 - ra * ra) * (1.0 - rc * rc) - 1.0
    if s2 <= 0.0:
        raise NotRealizableError(
            "angle triple admits no positive middle edge (cosh z < cosh a cosh c)"
        )
    b = math.asinh(math.sqrt(s2))
    return OrthoschemeEdges(a, b, c)


def _log_ratio(b: float, c: float | None, lam: float) -> float:
    """ln((sinh b + t sinh lam) / (sinh b - t sinh lam)) with t = tanh c.

    c = None means the ideal limit t = 1.  The denominator is evaluated in
    the cancellation-free form (sinh b - sinh lam) + (1 - t) sinh lam so the
    endpoint lam -> b stays accurate even for t extremely close to 1.
    """
    sl = math.sinh(lam)
    sb = math.sinh(b)
    diff = 2.0 * math.cosh(0.5 * (b + lam)) * math.sinh(0.5 * (b - lam))
    if c is None:
        t = 1.0
        den = diff
    else:
        em = math.exp(-2.0 * c)
        t = math.tanh(c)
        den = diff + (2.0 * em / (1.0 + em)) * sl
    num = sb + t * sl
    if den <= 0.0:
        raise DomainError("log argument not positive; lam outside [0, b)")
    return math.log(num / den)


def volume_edges(edges: OrthoschemeEdges | tuple, tol: Tolerance = DEFAULT_TOL) -> float:
    """Orthoscheme volume from the edge lengths alone (curvature 1).

    v = 1/4 int_0^b  tanh(l) sinh(a) / sqrt(tanh^2 b cosh^2 l + sinh^2 a sinh^2 l)
                     * ln((sinh b + tanh c sinh l)/(sinh b - tanh c sinh l)) dl
    """
    e = edges if isinstance(edges, OrthoschemeEdges) else OrthoschemeEdges(*edges)
    ratio = math.tanh(e.b) / math.sinh(e.a)  # underflows harmlessly for huge a

    def f(lam: float) -> float:
        T = math.tanh(lam) / math.hypot(ratio * math.cosh(lam), math.sinh(lam))
        return T * _log_ratio(e.b, e.c, lam)

    res = quadrature.integrate_1d(f, 0.0, e.b, tol)
    return 0.25 * res.value


def volume_angles(angles: OrthoschemeAngles | tuple) -> float:
    """Orthoscheme volume as the Lobachevsky-function combination

    1/4 [ L(a+d) - L(a-d) - L(pi/2 - b + d) + L(pi/2 - b - d)
          + L(g+d) - L(g-d) + 2 L(pi/2 - d) ].
    """
    if not isinstance(angles, OrthoschemeAngles):
        angles = OrthoschemeAngles(*angles)
    a, b, g, d = angles.alpha, angles.beta, angles.gamma, angles.delta
    return 0.25 * (
        lobachevsky(a + d) - lobachevsky(a - d)
        - lobachevsky(_HALF_PI - b + d) + lobachevsky(_HALF_PI - b - d)
        + lobachevsky(g + d) - lobachevsky(g - d)
        + 2.0 * lobachevsky(_HALF_PI - d)
    )


def bolyai_integral_1(edges: OrthoschemeEdges | tuple, tol: Tolerance = DEFAULT_TOL) -> float:
    """Orthoscheme volume by the classical single integral along the edge c.

    v = tan(g_p) / (2 tan(b_p)) *
        int_0^c  t sinh t / ((cosh^2 t / cos^2 alpha - 1)
                             sqrt(cosh^2 t / cos^2 g_p - 1)) dt

    with alpha the dihedral angle at a, b_p = atan(tanh b / sinh a) and
    g_p = atan(tanh c / sinh z) the planar angles at the origin vertex
    (z the diagonal with cosh z = cosh a cosh b).
    """
    e = edges if isinstance(edges, OrthoschemeEdges) else OrthoschemeEdges(*edges)
    alpha = math.atan(math.tanh(e.c) / math.sinh(e.b))
    beta_p = math.atan(math.tanh(e.b) / math.sinh(e.a))
    gamma_p = math.atan(math.tanh(e.c) / math.sinh(e.z))
    ca2 = math.cos(alpha) ** 2
    cg2 = math.cos(gamma_p) ** 2

    def f(t: float) -> float:
        ch2 = math.cosh(t) ** 2
        return t * math.sinh(t) / ((ch2 / ca2 - 1.0) * math.sqrt(ch2 / cg2 - 1.0))

    res = quadrature.integrate_1d(f, 0.0, e.c, tol)
    return 0.5 * math.tan(gamma_p) / math.tan(beta_p) * res.value


def volume_one_ideal(b: float, c: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Volume of the orthoscheme whose first edge runs to an ideal point.

    v = 1/4 int_0^b ln((sinh b + tanh c sinh l)/(sinh b - tanh c sinh l)) / cosh l dl
    """
    b = _check_positive("edge b", b)
    c = _check_positive("edge c", c)

    def f(lam: float) -> float:
        return _log_ratio(b, c, lam) / math.cosh(lam)

    return 0.25 * quadrature.integrate_1d(f, 0.0, b, tol).value


def volume_two_ideal(b: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Volume of the orthoscheme with two ideal vertices.

    v = 1/4 int_0^b ln((sinh b + sinh l)/(sinh b - sinh l)) / cosh l dl;
    the integrand has an integrable log singularity at l = b.
    """
    b = _check_positive("edge b", b)

    def f(lam: float) -> float:
        return _log_ratio(b, None, lam) / math.cosh(lam)

    return 0.25 * quadrature.integrate_1d(f, 0.0, b, tol).value


def volume_ideal_tetrahedron_b(b: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Tetrahedron with four ideal vertices built by reflecting the two-ideal
    orthoscheme twice: exactly 4x the two-ideal value."""
    return 4.0 * volume_two_ideal(b, tol)


def bolyai_asymptotic_1(alpha: float, c: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Ideal-apex orthoscheme volume, angle form:

    v = sin(2 alpha)/4 * int_0^c t / (cosh^2 t - cos^2 alpha) dt
    """
    alpha = float(alpha)
    if not (0.0 < alpha < _HALF_PI):
        raise DomainError(f"alpha must lie in (0, pi/2), got {alpha!r}")
    c = _check_positive("edge c", c)
    ca2 = math.cos(alpha) ** 2

    def f(t: float) -> float:
        return t / (math.cosh(t) ** 2 - ca2)

    return 0.25 * math.sin(2.0 * alpha) * quadrature.integrate_1d(f, 0.0, c, tol).value


def bolyai_asymptotic_2(alpha_max: float, b: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Ideal-apex orthoscheme volume, second form (upper limit is an angle):

    v = 1/2 int_0^alpha_max ln(cos p / sqrt(cos^2 p - tanh^2 b)) dp,
    requiring cos(alpha_max) > tanh b so the integrand stays real.
    """
    alpha_max = float(alpha_max)
    if not (0.0 <= alpha_max < _HALF_PI):
        raise DomainError(f"alpha_max must lie in [0, pi/2), got {alpha_max!r}")
    b = _check_positive("edge b", b)
    tb2 = math.tanh(b) ** 2
    if math.cos(alpha_max) ** 2 <= tb2:
        raise DomainError("requires cos(alpha_max) > tanh(b)")

    def f(p: float) -> float:
        c2 = math.cos(p) ** 2
        return 0.5 * math.log(c2 / (c2 - tb2))

    return 0.5 * quadrature.integrate_1d(f, 0.0, alpha_max, tol).value


def right_triangle_angles(a: float, b: float) -> tuple[float, float]:
    """Non-right angles of the right triangle with legs a (first) and b.

    Returns (alpha, beta): beta = atan(tanh b / sinh a) at the origin end of
    leg a, alpha = atan(tanh a / sinh b) at the far vertex.
    """
    a = _check_positive("leg a", a)
    b = _check_positive("leg b", b)
    return math.atan(math.tanh(a) / math.sinh(b)), math.atan(math.tanh(b) / math.sinh(a))


def area_right_triangle(a: float, b: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Area of the right triangle with legs a, b by the nested integral

    int_0^a int_0^{phi(x)} cosh y dy dx,  tanh phi(x) = (tanh b / sinh a) sinh x.

    Equals the angle defect pi/2 - alpha - beta of the same triangle.
    """
    a = _check_positive("leg a", a)
    b = _check_positive("leg b", b)
    ratio = math.tanh(b) / math.sinh(a)

    def bound(x: float) -> float:
        return math.atanh(ratio * math.sinh(x))

    res = quadrature.integrate_nested(
        lambda x, y: math.cosh(y), (0.0, a), [bound], tol
    )
    return res.value


def lemma_angle(t: float, s: float) -> float:
    """Angle atan(tanh t / sinh s) of the doubly-perpendicular configuration;
    independent of where the far point sits on its subspace."""
    t = float(t)
    s = float(s)
    if not (math.isfinite(t) and t >= 0.0):
        raise DomainError(f"t must be finite and >= 0, got {t!r}")
    if not (math.isfinite(s) and s > 0.0):
        raise DomainError(f"s must be positive, got {s!r}")
    return math.atan(math.tanh(t) / math.sinh(s))


def volume_ndim(o: NdimOrthoscheme | tuple, tol: Tolerance | None = None) -> float:
    """n-volume of the n-dimensional orthoscheme by nested quadrature.

    Integration order is x_n (outer, over [0, a_n]) then x_1 .. x_{n-1},
    each bounded by tanh(phi_{k+1}) = (tanh a_{k+1} / sinh a_k) sinh x_k
    (x_0 read as x_n), with density prod_i cosh^i(x_i).  Supported for
    2 <= n <= 4; for n = 3 this reproduces volume_edges, for n = 2
    area_right_triangle.
    """
    o = o if isinstance(o, NdimOrthoscheme) else NdimOrthoscheme(o)
    n = o.n
    if not (2 <= n <= 4):
        raise UnsupportedDimensionError(f"volume_ndim supports 2 <= n <= 4, got {n}")
    tol = tol or Tolerance(rel=1e-9, abs=1e-13)
    a = o.edges
    ratios = [math.tanh(a[0]) / math.sinh(a[n - 1])]
    ratios += [math.tanh(a[i + 1]) / math.sinh(a[i]) for i in range(n - 2)]

    bounds = [
        (lambda i: (lambda *vals: math.atanh(ratios[i] * math.sinh(vals[-1]))))(i)
        for i in range(n - 1)
    ]

    def integrand(*vals):
        # vals = (x_n, x_1, .., x_{n-1})
        d = 1.0
        for i in range(1, n):
            d *= math.cosh(vals[i]) ** i
        return d

    res = quadrature.integrate_nested(integrand, (0.0, a[n - 1]), bounds, tol)
    return res.value


def sample_valid_angles(
    count: int,
    seed: int = 20121023,
    lo: float = 0.2,
    hi: float = 1.2,
    margin: float = 0.05,
) -> list[OrthoschemeAngles]:
    """Draw realizable dihedral-angle triples for cross-validation runs.

    alpha, beta, gamma are uniform in (lo, hi); a draw is kept when delta is
    real, dominated with the given margin, and the edge recovery succeeds.
    Deterministic for a fixed seed.
    """
    rng = random.Random(seed)
    out: list[OrthoschemeAngles] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 10000 * max(count, 1):
            raise RuntimeError("angle sampling failed to find enough valid triples")
        al = rng.uniform(lo, hi)
        be = rng.uniform(lo, hi)
        ga = rng.uniform(lo, hi)
        try:
            d = delta_from_angles(al, be, ga)
        except NotRealizableError:
            continue
        if d >= min(al, ga, _HALF_PI - be) - margin:
            continue
        ang = OrthoschemeAngles(al, be, ga, d)
        try:
            angles_to_edges(ang)
        except NotRealizableError:
            continue
        out.append(ang)
    return out
