"""Monte-Carlo oracle tests (light sample counts; the full 10^6-sample
agreement runs live in the acceptance suite)."""

import math

import numpy as np
import pytest

from hypervol import mc_oracle as mc
from hypervol import models, solids
from hypervol.errors import DomainError
from hypervol.models import coordinate_volume, klein_distance
from hypervol.orthoscheme import volume_edges, volume_ideal_tetrahedron_b


def test_determinism_bit_identical():
    r = mc.region_ball(1.0)
    e1 = mc.estimate(r, 100_000, seed=7)
    e2 = mc.estimate(r, 100_000, seed=7)
    assert e1.mean == e2.mean and e1.stderr == e2.stderr
    e3 = mc.estimate(r, 100_000, seed=8)
    assert e3.mean != e1.mean


def test_sharding_is_deterministic():
    r = mc.region_ball(1.0)
    e1 = mc.estimate(r, 100_000, seed=7, shards=4)
    e2 = mc.estimate(r, 100_000, seed=7, shards=4)
    assert e1.mean == e2.mean
    # sharded estimate stays consistent with the analytic value
    assert abs(e1.mean - solids.sphere_volume(1.0)) <= 5 * e1.stderr


def test_empty_region():
    e = mc.estimate(mc.region_empty(), 10_000, seed=1)
    assert e.mean == 0.0 and e.stderr == 0.0


def test_stderr_scaling():
    r = mc.region_ball(1.0)
    e1 = mc.estimate(r, 100_000, seed=3)
    e2 = mc.estimate(r, 200_000, seed=3)
    ratio = e2.stderr / e1.stderr
    assert abs(ratio - 1.0 / math.sqrt(2.0)) < 0.2 / math.sqrt(2.0)


def test_ball_agreement_small():
    r = mc.region_ball(1.0)
    e = mc.estimate(r, 100_000, seed=12)
    assert abs(e.mean - solids.sphere_volume(1.0)) <= 4.0 * e.stderr


def test_box_region_matches_coordinate_volume():
    lo, hi = (-0.4, -0.3, -0.2), (0.5, 0.4, 0.3)
    r = mc.region_box(lo, hi)
    e = mc.estimate(r, 200_000, seed=9)
    ref = coordinate_volume(
        "klein", [(0, lo[0], hi[0]), (1, lo[1], hi[1]), (2, lo[2], hi[2])], n=3
    ).value
    assert abs(e.mean - ref) <= 4.0 * e.stderr


def test_orthoscheme_vertices_distances():
    a, b, c = 0.8, 1.1, 0.6
    V = mc.orthoscheme_vertices(a, b, c)
    O = (0.0, 0.0, 0.0)
    assert V[0].coords == pytest.approx(O, abs=1e-15)
    assert klein_distance(V[0], V[1]) == pytest.approx(a, abs=1e-10)
    assert klein_distance(V[1], V[2]) == pytest.approx(b, abs=1e-10)
    assert klein_distance(V[2], V[3]) == pytest.approx(c, abs=1e-10)
    assert klein_distance(V[0], V[2]) == pytest.approx(
        math.acosh(math.cosh(a) * math.cosh(b)), abs=1e-10
    )
    assert klein_distance(V[0], V[3]) == pytest.approx(
        math.acosh(math.cosh(a) * math.cosh(b) * math.cosh(c)), abs=1e-10
    )


def test_simplex_membership_basics():
    V = mc.orthoscheme_vertices(1.0, 1.0, 1.0)
    r = mc.region_simplex(V)
    pts = np.array(
        [
            V[0].coords,                                  # vertex: inside
            np.mean([v.coords for v in V], axis=0),       # centroid: inside
            (0.9, 0.9, 0.9),                              # far corner: outside
        ]
    )
    got = r.contains(pts)
    assert got.tolist() == [True, True, False]


def test_simplex_degenerate_rejected():
    V = [(0.0, 0.0, 0.0), (0.1, 0.0, 0.0), (0.2, 0.0, 0.0), (0.3, 0.0, 0.0)]
    with pytest.raises(DomainError):
        mc.region_simplex(V)


def test_orthoscheme_simplex_agreement_small():
    for edges in [(1.0, 1.0, 1.0), (0.5, 1.0, 1.5)]:
        V = mc.orthoscheme_vertices(*edges)
        r = mc.region_simplex(V)
        e = mc.estimate(r, 200_000, seed=21)
        assert abs(e.mean - volume_edges(edges)) <= 4.0 * e.stderr


def test_barrel_region_agreement_small():
    r = mc.region_barrel(1.0, 1.0)
    e = mc.estimate(r, 200_000, seed=4)
    assert abs(e.mean - solids.barrel(1.0, 1.0)) <= 4.0 * e.stderr


def test_cone_region_agreement_small():
    r = mc.region_cone(1.0, math.pi / 4)
    e = mc.estimate(r, 200_000, seed=4)
    assert abs(e.mean - solids.circular_cone(1.0, math.pi / 4)) <= 4.0 * e.stderr


def test_slab_region_agreement_small():
    w1, w2, q = 0.6, 0.4, 0.7
    area = mc.slab_base_area(w1, w2)
    r = mc.region_slab((w1, w2), q)
    e = mc.estimate(r, 200_000, seed=15)
    assert abs(e.mean - solids.equidistant_body(area, q)) <= 4.0 * e.stderr


def test_ideal_tetrahedron_truncated_oracle():
    # four ideal vertices: two boundary chords, orthogonal, at common
    # perpendicular distance b; volume equals the b-parameterized integral
    b = 1.0
    u = math.tanh(b / 2)
    w = math.sqrt(1 - u * u)
    V = [(-u, w, 0.0), (-u, -w, 0.0), (u, 0.0, w), (u, 0.0, -w)]
    ref = volume_ideal_tetrahedron_b(b)
    r6 = mc.region_simplex(V, radial_cap=1 - 1e-6)
    e6 = mc.estimate(r6, 1_000_000, seed=5)
    assert abs(e6.mean - ref) <= 4.0 * e6.stderr
    # truncation control: coarser cap moves the estimate by less than stderr
    r5 = mc.region_simplex(V, radial_cap=1 - 1e-5)
    e5 = mc.estimate(r5, 1_000_000, seed=5)
    assert abs(e6.mean - e5.mean) <= e6.stderr


def test_estimate_validation():
    r = mc.region_ball(1.0)
    with pytest.raises(DomainError):
        mc.estimate(r, 9_999, seed=1)
    with pytest.raises(DomainError):
        mc.Region(dim=3, lo=(-0.1,) * 3, hi=(0.1,) * 3,
                  contains=lambda P: np.ones(len(P), bool), radial_cap=1.0)
    with pytest.raises(DomainError):
        mc.region_ball(-1.0)
    with pytest.raises(DomainError):
        mc.region_cone(1.0, 2.0)


def test_region_curvature_respected():
    # ball with k=2: volume scales like k^3 at fixed hyperbolic radius ratio
    r = mc.region_ball(1.0, k=2.0)
    e = mc.estimate(r, 200_000, seed=19)
    assert abs(e.mean - solids.sphere_volume(1.0, k=2.0)) <= 4.0 * e.stderr
