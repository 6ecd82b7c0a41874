"""Monte-Carlo volume oracle in the projective ball model.

Points are sampled uniformly in a Euclidean axis-aligned box, weighted by
the ball-model density (1 - |X/k|^2)^{-(n+1)/2} inside the region and by 0
outside.  Because geodesics and hyperplanes of the model are Euclidean
lines and planes, membership predicates for the classical solids reduce to
elementary Euclidean tests.

Randomness comes from counter-based Philox streams: shard i of a run uses
the substream spawned from (seed, i), and shard results are merged by a
fixed-order weighted average, so an estimate is a pure function of
(seed, samples, shard count).  Regions are radially truncated at
``radial_cap`` (default 1 - 1e-9, in units of k); the truncation is the
only concession made to bodies that conceptually touch the ideal boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import models
from .errors import DomainError

__all__ = [
    "Region",
    "MCEstimate",
    "estimate",
    "orthoscheme_vertices",
    "region_simplex",
    "region_ball",
    "region_barrel",
    "region_cone",
    "region_slab",
    "region_box",
    "region_empty",
    "slab_base_area",
]

_DEFAULT_CAP = 1.0 - 1e-9
_CHUNK = 1 << 17


@dataclass(frozen=True)
class Region:
    """Sampling region: vectorized membership plus a bounding box.

    ``contains`` maps an (N, dim) array of ball-model points to a boolean
    mask; it is only ever called on points with |X/k| <= radial_cap.  The
    box need not lie inside the ball (its corners may poke out); points
    outside the ball are simply non-members.
    """

    dim: int
    lo: tuple[float, ...]
    hi: tuple[float, ...]
    contains: Callable[[np.ndarray], np.ndarray]
    k: float = 1.0
    radial_cap: float = _DEFAULT_CAP
    name: str = ""

    def __post_init__(self):
        if not (2 <= self.dim <= 8):
            raise DomainError(f"region dimension {self.dim} outside 2..8")
        if len(self.lo) != self.dim or len(self.hi) != self.dim:
            raise DomainError("bounding box must match the region dimension")
        if any(l >= h for l, h in zip(self.lo, self.hi)):
            raise DomainError("bounding box must have positive extent on every axis")
        if not (0.0 < self.radial_cap <= _DEFAULT_CAP):
            raise DomainError(
                f"radial_cap {self.radial_cap} touches the boundary (max {_DEFAULT_CAP})"
            )


@dataclass(frozen=True)
class MCEstimate:
    mean: float
    stderr: float
    samples: int
    seed: int


def estimate(
    region: Region,
    samples: int,
    seed: int,
    k: float | None = None,
    shards: int = 1,
) -> MCEstimate:
    """Unbiased Monte-Carlo estimate of the region's hyperbolic volume.

    Deterministic for fixed (seed, samples, shards).  ``k`` defaults to the
    curvature the region was built with.
    """
    samples = int(samples)
    if samples < 10_000:
        raise DomainError(f"at least 10^4 samples required, got {samples}")
    shards = int(shards)
    if shards < 1:
        raise DomainError("shards must be >= 1")
    k = float(region.k if k is None else k)
    if not (math.isfinite(k) and k > 0.0):
        raise DomainError(f"curvature constant k must be positive, got {k!r}")
    n = region.dim
    lo = np.asarray(region.lo, float)
    hi = np.asarray(region.hi, float)
    box_vol = float(np.prod(hi - lo))
    cap2 = region.radial_cap ** 2
    expo = -(n + 1) / 2.0

    counts = [samples // shards + (1 if i < samples % shards else 0) for i in range(shards)]
    s1 = 0.0
    s2 = 0.0
    for shard, m_total in enumerate(counts):
        rng = np.random.Generator(
            np.random.Philox(np.random.SeedSequence(entropy=seed, spawn_key=(shard,)))
        )
        left = m_total
        while left > 0:
            m = min(left, _CHUNK)
            left -= m
            pts = lo + rng.random((m, n)) * (hi - lo)
            r2 = np.einsum("ij,ij->i", pts, pts) / (k * k)
            cand = r2 <= cap2
            if cand.any():
                member = np.zeros(m, dtype=bool)
                member[cand] = np.asarray(region.contains(pts[cand]), dtype=bool)
                w = np.where(member, (1.0 - r2) ** expo * box_vol, 0.0)
            else:
                w = np.zeros(m)
            s1 += float(w.sum())
            s2 += float((w * w).sum())
    mean = s1 / samples
    var = max(0.0, s2 / samples - mean * mean)
    if samples > 1:
        var *= samples / (samples - 1)
    return MCEstimate(mean, math.sqrt(var / samples), samples, int(seed))


# ---------------------------------------------------------------------------
# region builders
# ---------------------------------------------------------------------------

def orthoscheme_vertices(a: float, b: float, c: float, k: float = 1.0):
    """Ball-model vertices of the orthoscheme with edge path (a, b, c).

    In orthogonal coordinates the vertices are (0,0,0), (0,0,a), (b,0,a),
    (b,c,a); consecutive distances are a, b, c and the diagonals satisfy
    the hyperbolic Pythagorean products.
    """
    for name, v in (("a", a), ("b", b), ("c", c)):
        if not (math.isfinite(float(v)) and v > 0.0):
            raise DomainError(f"edge {name} must be positive, got {v!r}")
    pts = [(0.0, 0.0, 0.0), (0.0, 0.0, a), (b, 0.0, a), (b, c, a)]
    return [models.orthogonal_to_klein(p, k) for p in pts]


def region_simplex(vertices: Sequence, k: float = 1.0, radial_cap: float = _DEFAULT_CAP) -> Region:
    """Geodesic simplex spanned by dim+1 ball-model vertices.

    Geodesic convexity makes it the Euclidean simplex of the same vertices,
    so membership is a barycentric-coordinate test (boundary inclusive).
    """
    V = np.array([models._coords(v) for v in vertices], dtype=float)
    m, n = V.shape
    if m != n + 1:
        raise DomainError(f"a {n}-simplex needs {n + 1} vertices, got {m}")
    M = (V[1:] - V[0]).T
    det = np.linalg.det(M)
    if abs(det) < 1e-14:
        raise DomainError("degenerate simplex (affinely dependent vertices)")
    Minv = np.linalg.inv(M)
    v0 = V[0]

    def contains(P: np.ndarray) -> np.ndarray:
        lam = (P - v0) @ Minv.T
        return (lam >= -1e-12).all(axis=1) & (lam.sum(axis=1) <= 1.0 + 1e-12)

    return Region(
        dim=n,
        lo=tuple(V.min(axis=0)),
        hi=tuple(V.max(axis=0)),
        contains=contains,
        k=k,
        radial_cap=radial_cap,
        name="simplex",
    )


def region_ball(x: float, k: float = 1.0, n: int = 3, radial_cap: float = _DEFAULT_CAP) -> Region:
    """Ball of hyperbolic radius x about the origin (Euclidean radius k tanh(x/k))."""
    if not (math.isfinite(float(x)) and x > 0.0):
        raise DomainError(f"radius must be positive, got {x!r}")
    R = k * math.tanh(x / k)

    def contains(P: np.ndarray) -> np.ndarray:
        return np.einsum("ij,ij->i", P, P) <= R * R

    return Region(
        dim=n, lo=(-R,) * n, hi=(R,) * n, contains=contains, k=k,
        radial_cap=radial_cap, name="ball",
    )


def _cosh_dist_to_axis_point(P: np.ndarray, u: np.ndarray, k: float) -> np.ndarray:
    """cosh(d/k) from points P to (u, 0, .., 0), vectorized in both."""
    r2 = np.einsum("ij,ij->i", P, P) / (k * k)
    num = 1.0 - u * P[:, 0] / (k * k)
    den = np.sqrt((1.0 - (u / k) ** 2) * (1.0 - r2))
    return num / den


def region_barrel(p: float, q: float, k: float = 1.0, radial_cap: float = _DEFAULT_CAP) -> Region:
    """Tube of radius q around the axis segment from the origin to length p.

    Membership minimizes the point-to-segment distance by golden-section
    search on the segment parameter (tolerance 1e-12; the distance along a
    geodesic is unimodal) and additionally requires the perpendicular foot
    to fall on the segment, which excludes the spherical end caps and makes
    the region match the closed-form tube volume.
    """
    for name, v in (("p", p), ("q", q)):
        if not (math.isfinite(float(v)) and v > 0.0):
            raise DomainError(f"{name} must be positive, got {v!r}")
    L = k * math.tanh(p / k)
    cq = math.cosh(q / k)
    gr = (math.sqrt(5.0) - 1.0) / 2.0

    def contains(P: np.ndarray) -> np.ndarray:
        out = np.zeros(len(P), dtype=bool)
        sel = (P[:, 0] >= 0.0) & (P[:, 0] <= L)  # foot on the segment: no end caps
        if not sel.any():
            return out
        Q = P[sel]
        a = np.zeros(len(Q))
        b = np.full(len(Q), L)
        while float(b[0] - a[0]) > 1e-12:
            c1 = b - gr * (b - a)
            c2 = a + gr * (b - a)
            take1 = _cosh_dist_to_axis_point(Q, c1, k) < _cosh_dist_to_axis_point(Q, c2, k)
            b = np.where(take1, c2, b)
            a = np.where(take1, a, c1)
        best = _cosh_dist_to_axis_point(Q, 0.5 * (a + b), k)
        out[sel] = best <= cq
        return out

    tq = k * math.tanh(q / k)
    hi0 = k * math.tanh((p + q) / k)
    return Region(
        dim=3,
        lo=(-tq, -tq, -tq),
        hi=(hi0, tq, tq),
        contains=contains,
        k=k,
        radial_cap=radial_cap,
        name="barrel",
    )


def region_cone(b: float, beta: float, k: float = 1.0, radial_cap: float = _DEFAULT_CAP) -> Region:
    """Solid cone: apex at the origin (so the aperture test is the Euclidean
    angle), base plane perpendicular to the axis at height h with
    sinh(h/k) = tanh(b/k) / tan(beta)."""
    if not (math.isfinite(float(b)) and b > 0.0):
        raise DomainError(f"base radius must be positive, got {b!r}")
    beta = float(beta)
    if not (0.0 < beta < math.pi / 2.0):
        raise DomainError(f"half-angle must lie in (0, pi/2), got {beta!r}")
    h = k * math.asinh(math.tanh(b / k) / math.tan(beta))
    axis_hi = k * math.tanh(h / k)
    tb = math.tan(beta)

    def contains(P: np.ndarray) -> np.ndarray:
        perp = np.sqrt(P[:, 1] ** 2 + P[:, 2] ** 2)
        return (P[:, 0] >= 0.0) & (P[:, 0] <= axis_hi) & (perp <= P[:, 0] * tb)

    r_max = axis_hi * tb
    return Region(
        dim=3,
        lo=(0.0, -r_max, -r_max),
        hi=(axis_hi, r_max, r_max),
        contains=contains,
        k=k,
        radial_cap=radial_cap,
        name="cone",
    )


def slab_base_area(w1: float, w2: float, k: float = 1.0) -> float:
    """Area of the slab base: the orthogonal-coordinate box |x1| <= w1,
    |x2| <= w2 in a plane, with area 4 k w2 sinh(w1/k)."""
    return 4.0 * k * w2 * math.sinh(w1 / k)


def region_slab(half_widths: tuple[float, float], q: float, k: float = 1.0,
                radial_cap: float = _DEFAULT_CAP) -> Region:
    """One-sided equidistant body over a planar base box.

    The base is the orthogonal-coordinate box |x1| <= w1, |x2| <= w2 in the
    plane X3 = 0; membership requires X3 >= 0, the perpendicular foot
    (X1, X2, 0) inside the base, and distance to the foot at most q.
    """
    w1, w2 = (float(v) for v in half_widths)
    for name, v in (("w1", w1), ("w2", w2), ("q", q)):
        if not (math.isfinite(float(v)) and v > 0.0):
            raise DomainError(f"{name} must be positive, got {v!r}")
    cq = math.cosh(q / k)

    def contains(P: np.ndarray) -> np.ndarray:
        X1, X2, X3 = P[:, 0] / k, P[:, 1] / k, P[:, 2] / k
        f2 = X1 * X1 + X2 * X2
        ok = (X3 >= 0.0) & (f2 < 1.0)
        X2c = np.clip(X2, -1.0 + 1e-15, 1.0 - 1e-15)
        y2 = np.arctanh(X2c)
        den = np.sqrt(np.clip(1.0 - X2c * X2c, 1e-30, None))
        arg = np.clip(X1 / den, -1.0 + 1e-15, 1.0 - 1e-15)
        y1 = np.arctanh(arg)
        in_base = (np.abs(y1 * k) <= w1) & (np.abs(y2 * k) <= w2)
        r2 = f2 + X3 * X3
        coshd = np.sqrt(np.clip(1.0 - f2, 1e-300, None) / np.clip(1.0 - r2, 1e-300, None))
        return ok & in_base & (coshd <= cq)

    b1 = k * math.tanh(w1 / k)
    b2 = k * math.tanh(w2 / k)
    return Region(
        dim=3,
        lo=(-b1, -b2, 0.0),
        hi=(b1, b2, k * math.tanh(q / k)),
        contains=contains,
        k=k,
        radial_cap=radial_cap,
        name="slab",
    )


def region_box(lo: Sequence[float], hi: Sequence[float], k: float = 1.0,
               radial_cap: float = _DEFAULT_CAP) -> Region:
    """The sampling box itself (useful for estimator sanity checks)."""
    lo = tuple(float(v) for v in lo)
    hi = tuple(float(v) for v in hi)

    def contains(P: np.ndarray) -> np.ndarray:
        return np.ones(len(P), dtype=bool)

    return Region(dim=len(lo), lo=lo, hi=hi, contains=contains, k=k,
                  radial_cap=radial_cap, name="box")


def region_empty(n: int = 3, k: float = 1.0) -> Region:
    """A region with no members (estimates to 0 +- 0)."""

    def contains(P: np.ndarray) -> np.ndarray:
        return np.zeros(len(P), dtype=bool)

    return Region(dim=n, lo=(-0.1,) * n, hi=(0.1,) * n, contains=contains, k=k,
                  name="empty")
