"""Orthoscheme volume and conversion tests.

The frozen edge-integral values were produced before the build with an
independent adaptive quadrature (scipy QUADPACK at 1e-13 tolerances).
"""

import math
import random

import pytest

from hypervol.errors import DomainError, NotRealizableError, UnsupportedDimensionError
from hypervol.orthoscheme import (
    NdimOrthoscheme,
    OrthoschemeAngles,
    OrthoschemeEdges,
    angles_to_edges,
    area_right_triangle,
    bolyai_asymptotic_1,
    bolyai_asymptotic_2,
    bolyai_integral_1,
    delta_from_angles,
    edges_to_angles,
    lemma_angle,
    right_triangle_angles,
    sample_valid_angles,
    volume_angles,
    volume_edges,
    volume_ideal_tetrahedron_b,
    volume_ndim,
    volume_one_ideal,
    volume_two_ideal,
)
from hypervol.quadrature import Tolerance

VOL_111 = 0.098404718929145    # scipy oracle, edges (1,1,1)
VOL_051015 = 0.070924545174    # scipy oracle, edges (0.5, 1.0, 1.5)
TWO_IDEAL_1 = 0.2412135558     # scipy oracle
REGULAR_IDEAL_MAX = 1.0149416064096536  # 3 L(pi/3)


def test_edge_type_diagonals():
    e = OrthoschemeEdges(1.0, 1.0, 1.0)
    assert e.z == pytest.approx(math.acosh(math.cosh(1.0) ** 2), rel=1e-14)
    assert e.z_long == pytest.approx(math.acosh(math.cosh(1.0) ** 3), rel=1e-14)
    assert e.z >= max(e.a, e.b)
    with pytest.raises(DomainError):
        OrthoschemeEdges(0.0, 1.0, 1.0)


def test_volume_edges_frozen_values():
    assert volume_edges((1.0, 1.0, 1.0)) == pytest.approx(VOL_111, abs=1e-9)
    assert volume_edges((0.5, 1.0, 1.5)) == pytest.approx(VOL_051015, abs=1e-9)


def test_edges_to_angles_relations():
    e = OrthoschemeEdges(1.0, 1.0, 1.0)
    ang = edges_to_angles(e)
    # defining relations of delta
    assert math.tan(ang.delta) == pytest.approx(
        math.tanh(e.a) * math.tan(ang.alpha), abs=1e-12
    )
    assert math.tan(ang.delta) == pytest.approx(
        math.tanh(e.c) * math.tan(ang.gamma), abs=1e-12
    )
    # symmetric edges give alpha = gamma
    assert ang.alpha == pytest.approx(ang.gamma, abs=1e-14)
    # all in (0, pi/2)
    for v in (ang.alpha, ang.beta, ang.gamma, ang.delta):
        assert 0.0 < v < math.pi / 2


def test_angles_to_edges_round_trip():
    rng = random.Random(42)
    for _ in range(50):
        e = OrthoschemeEdges(
            rng.uniform(0.1, 2.5), rng.uniform(0.1, 2.5), rng.uniform(0.1, 2.5)
        )
        ang = edges_to_angles(e)
        back = angles_to_edges(ang)
        assert abs(back.a - e.a) < 1e-10
        assert abs(back.b - e.b) < 1e-10
        assert abs(back.c - e.c) < 1e-10
        # delta from angles alone agrees with the conversion delta
        assert delta_from_angles(ang.alpha, ang.beta, ang.gamma) == pytest.approx(
            ang.delta, abs=1e-10
        )


def test_edges_to_angles_limits():
    # growing middle edge sends alpha, gamma, delta to 0
    ang = edges_to_angles(OrthoschemeEdges(1.0, 6.0, 1.0))
    assert ang.alpha < 4e-3 and ang.gamma < 4e-3 and ang.delta < 4e-3


def test_delta_approaches_alpha_for_long_first_edge():
    # tan delta = tanh a tan alpha -> tan alpha as a grows, and the inverse
    # map a = atanh(tan delta / tan alpha) diverges logarithmically
    d1 = edges_to_angles(OrthoschemeEdges(1.0, 0.9, 0.7))
    d2 = edges_to_angles(OrthoschemeEdges(4.0, 0.9, 0.7))
    assert d2.alpha == pytest.approx(d1.alpha, abs=1e-14)  # alpha has no a-dependence
    assert d2.alpha - d2.delta < d1.alpha - d1.delta
    assert angles_to_edges(d2).a == pytest.approx(4.0, abs=1e-9)


def test_not_realizable_angle_triples():
    with pytest.raises(NotRealizableError):
        delta_from_angles(0.3, 1.5, 0.3)
    # dominated delta but no positive middle edge
    with pytest.raises(NotRealizableError):
        angles_to_edges(OrthoschemeAngles(0.3312, 1.0167, 0.3312, 0.30))
    # domination violations are rejected at construction
    with pytest.raises(NotRealizableError):
        OrthoschemeAngles(0.3, 0.4, 0.9, 0.35)


def test_flagship_angles_vs_edges():
    for ang in sample_valid_angles(5, seed=7):
        e = angles_to_edges(ang)
        va = volume_angles(ang)
        ve = volume_edges(e)
        assert abs(va - ve) <= 1e-6 * max(1.0, va)


def test_volume_angles_symmetry_and_degenerate_limit():
    ang = edges_to_angles(OrthoschemeEdges(0.8, 1.1, 1.4))
    swapped = OrthoschemeAngles(ang.gamma, ang.beta, ang.alpha, ang.delta)
    assert volume_angles(ang) == pytest.approx(volume_angles(swapped), abs=1e-14)
    # shrinking orthoschemes have vanishing volume
    tiny = edges_to_angles(OrthoschemeEdges(1e-3, 1e-3, 1e-3))
    assert volume_angles(tiny) < 1e-8


def test_bolyai_first_integral_agrees():
    for e in [(1.0, 1.0, 1.0), (0.5, 1.0, 1.5), (1.5, 0.5, 1.0), (0.7, 0.9, 1.3)]:
        assert abs(bolyai_integral_1(e) - volume_edges(e)) <= 1e-6


def test_bolyai_first_integral_euclidean_limit():
    eps = 0.01
    v = bolyai_integral_1((eps, eps, eps))
    assert v == pytest.approx(eps ** 3 / 6.0, rel=1e-3)


def test_euclidean_limit_edge_integral():
    eps = 0.01
    v = volume_edges((eps, 2 * eps, 3 * eps))
    assert v / (eps ** 3 * 6.0 / 6.0) == pytest.approx(1.0, abs=1e-3)


def test_monotonicity_in_each_edge():
    base = (0.8, 0.9, 1.0)
    v0 = volume_edges(base)
    for i in range(3):
        bumped = list(base)
        bumped[i] += 0.2
        assert volume_edges(tuple(bumped)) > v0


def test_one_ideal_limits():
    # c -> 0 gives a flat (empty) orthoscheme
    assert volume_one_ideal(1.0, 1e-8) < 1e-7
    # a -> infinity limit of the general integral
    assert abs(volume_edges((20.0, 1.0, 1.0)) - volume_one_ideal(1.0, 1.0)) < 1e-5
    # c -> infinity approaches the two-ideal body
    assert abs(volume_one_ideal(1.0, 30.0) - volume_two_ideal(1.0)) < 1e-5


def test_two_ideal_frozen_and_bounds():
    v = volume_two_ideal(1.0)
    assert v == pytest.approx(TWO_IDEAL_1, abs=1e-9)
    assert volume_one_ideal(1.0, 1.0) < v
    assert volume_ideal_tetrahedron_b(1.0) == pytest.approx(4.0 * v, abs=1e-12)
    assert volume_ideal_tetrahedron_b(1.0) <= REGULAR_IDEAL_MAX
    assert volume_ideal_tetrahedron_b(3.0) <= REGULAR_IDEAL_MAX


def test_asymptotic_formula_c_to_zero():
    assert bolyai_asymptotic_1(0.7, 1e-8) < 1e-7


def test_asymptotic_formula_continuity_in_alpha():
    vals = [bolyai_asymptotic_1(al, 1.0) for al in
            [0.3, 0.6, 0.9, 1.2, 1.5, math.pi / 2 - 1e-3]]
    for a, b in zip(vals, vals[1:]):
        assert math.isfinite(a) and math.isfinite(b)
    # prefactor sin(2 alpha) drives the value to 0 at the right endpoint
    assert vals[-1] < 0.01


def test_asymptotic_formula_2_domain_and_limits():
    assert bolyai_asymptotic_2(0.0, 1.0) == 0.0
    assert bolyai_asymptotic_2(0.5, 1e-8) < 1e-8
    with pytest.raises(DomainError):
        bolyai_asymptotic_2(1.2, 1.0)  # cos(1.2) < tanh(1.0)


def test_recorded_asymptotic_correspondence():
    # Observed identification (documented, not part of any contract):
    # one-ideal volume(b, c) equals both asymptotic forms at
    # alpha = atan(tanh c / sinh b).
    b, c = 0.8, 1.3
    al = math.atan(math.tanh(c) / math.sinh(b))
    v = volume_one_ideal(b, c)
    assert bolyai_asymptotic_1(al, c) == pytest.approx(v, abs=1e-9)
    assert bolyai_asymptotic_2(al, b) == pytest.approx(v, abs=1e-9)


def test_area_right_triangle_matches_defect():
    rng = random.Random(55)
    for _ in range(10):
        a, b = rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0)
        alpha, beta = right_triangle_angles(a, b)
        defect = math.pi / 2 - alpha - beta
        assert area_right_triangle(a, b) == pytest.approx(defect, abs=1e-8)


def test_area_right_triangle_limits():
    assert area_right_triangle(0.01, 0.01) == pytest.approx(5e-5, rel=1e-3)
    big = area_right_triangle(8.0, 8.0)
    assert big < math.pi / 2
    assert math.pi / 2 - big < 0.01


def test_lemma_angle():
    assert lemma_angle(0.0, 1.0) == 0.0
    assert lemma_angle(1.0, 1.0) == pytest.approx(0.575006182578411853, abs=1e-14)
    assert lemma_angle(50.0, 1.0) == pytest.approx(
        math.atan(1.0 / math.sinh(1.0)), rel=1e-10
    )
    with pytest.raises(DomainError):
        lemma_angle(1.0, 0.0)


def test_ndim_matches_3d_edge_integral():
    # subscript order (a1, a2, a3) = (b, c, a) for path edges (a, b, c)
    for (a, b, c) in [(1.0, 1.0, 1.0), (0.5, 1.0, 1.5)]:
        v3 = volume_ndim((b, c, a))
        assert v3 == pytest.approx(volume_edges((a, b, c)), abs=1e-8)


def test_ndim_matches_2d_area():
    for (a, b) in [(1.0, 1.0), (0.7, 1.4)]:
        v2 = volume_ndim((b, a))
        assert v2 == pytest.approx(area_right_triangle(a, b), abs=1e-8)


def test_ndim_euclidean_limits():
    eps = 0.01
    v = volume_ndim((eps, eps, eps))
    assert v == pytest.approx(eps ** 3 / 6.0, rel=1e-3)
    v4 = volume_ndim((eps, eps, eps, eps), Tolerance(rel=1e-7, abs=1e-15))
    assert v4 == pytest.approx(eps ** 4 / 24.0, rel=1e-3)


def test_ndim_dimension_guard():
    with pytest.raises(UnsupportedDimensionError):
        volume_ndim((0.5, 0.5, 0.5, 0.5, 0.5))
    with pytest.raises(DomainError):
        NdimOrthoscheme((1.0,))


def test_curvature_scaling_against_coordinate_volume():
    # v_k(a, b, c) = k^3 v_1(a/k, b/k, c/k), checked against the k-generic
    # orthogonal-chart triple integral with the same bounds construction
    from hypervol.models import coordinate_volume

    a, b, c, k = 1.0, 0.8, 1.2, 1.7
    r1 = math.tanh(b / k) / math.sinh(a / k)
    r2 = math.tanh(c / k) / math.sinh(b / k)
    res = coordinate_volume(
        "orthogonal",
        [
            (2, 0.0, a),
            (0, 0.0, lambda x3: k * math.atanh(r1 * math.sinh(x3 / k))),
            (1, 0.0, lambda x3, x1: k * math.atanh(r2 * math.sinh(x1 / k))),
        ],
        n=3,
        k=k,
        tol=Tolerance(rel=1e-10, abs=1e-14),
    )
    scaled = k ** 3 * volume_edges((a / k, b / k, c / k))
    assert res.value == pytest.approx(scaled, rel=1e-8)


def test_sampler_is_deterministic_and_valid():
    s1 = sample_valid_angles(8, seed=99)
    s2 = sample_valid_angles(8, seed=99)
    assert [(a.alpha, a.beta, a.gamma) for a in s1] == [
        (a.alpha, a.beta, a.gamma) for a in s2
    ]
    for ang in s1:
        assert ang.delta < min(ang.alpha, ang.gamma, math.pi / 2 - ang.beta)
        angles_to_edges(ang)  # must not raise
