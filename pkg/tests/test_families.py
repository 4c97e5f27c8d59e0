import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from poncelet.geom import Conic, Line, Point, line_tangent_to_conic_residual
from poncelet.families import (
    BicentricParams,
    ConfocalParams,
    NoPoristicPair,
    TangentBranch,
    Triangle,
    bic1_config,
    bic2_config,
    bic2_envelope,
    bic2_vertices,
    bic3_caustic2,
    bic3_config,
    chapple_distance,
    conf1_config,
    conf2_config,
    conf2_envelope,
    conf3_config,
    confocal_caustic,
    critical_lambda,
    degenerate_envelope_inradius,
    envelope_points,
    kerawala_holds,
    n4_caustic,
    n6_caustic,
)

finite = dict(allow_nan=False, allow_infinity=False, allow_subnormal=False)
angles = st.floats(min_value=0.0, max_value=2.0 * math.pi, **finite)


def _side(tri: Triangle, i: int, j: int) -> Line:
    verts = tri.vertices()
    return Line.from_points(verts[i], verts[j])


def _tangency(tri: Triangle, conic: Conic, i: int, j: int) -> float:
    return abs(line_tangent_to_conic_residual(_side(tri, i, j), conic))


def test_chapple_distance_value():
    assert abs(chapple_distance(1.0, 0.25) - math.sqrt(0.5)) < 1e-15
    # defining relation d^2 = R(R - 2r)
    d = chapple_distance(2.0, 0.5)
    assert abs(d * d - 2.0 * (2.0 - 1.0)) < 1e-14


def test_kerawala_holds_at_the_degenerate_inradius():
    R, d = 1.0, 0.3
    r = degenerate_envelope_inradius(R, d)
    ok, residual = kerawala_holds(R, r, d)
    assert ok
    assert abs(residual) * r * r < 1e-12
    ok2, residual2 = kerawala_holds(R, 0.9 * r, d)
    assert not ok2
    assert abs(residual2) > 0.1


def test_degenerate_envelope_inradius_closed_form():
    R, d = 1.0, 0.3
    r = degenerate_envelope_inradius(R, d)
    want = math.sqrt((R * R - d * d) ** 2 / (2.0 * (R * R + d * d)))
    assert abs(r - want) < 1e-15


def test_critical_lambda_value():
    assert abs(critical_lambda(2.0, 1.0) - 0.98271224485687937) < 1e-15


def test_confocal_caustic_axes():
    p = ConfocalParams(2.0, 1.0, 0.5)
    ca, cb = p.caustic_semi_axes()
    assert abs(ca - math.sqrt(4.0 - 0.5)) < 1e-15
    assert abs(cb - math.sqrt(1.0 - 0.5)) < 1e-15
    # closing caustic: both semi-axes from the closing parameter
    cax, cay = confocal_caustic(2.0, 1.0)
    lam = critical_lambda(2.0, 1.0)
    assert abs(cax - math.sqrt(4.0 - lam)) < 1e-12
    assert abs(cay - math.sqrt(1.0 - lam)) < 1e-12


def test_n4_n6_caustics():
    a, b = 2.0, 1.0
    ax4, ay4 = n4_caustic(a, b)
    lam4 = a * a * b * b / (a * a + b * b)
    assert abs(ax4 - math.sqrt(a * a - lam4)) < 1e-14
    assert abs(ay4 - math.sqrt(b * b - lam4)) < 1e-14
    ax6, ay6 = n6_caustic(a, b)
    lam6 = (a * b / (a + b)) ** 2
    assert abs(ax6 - math.sqrt(a * a - lam6)) < 1e-14
    assert abs(ay6 - math.sqrt(b * b - lam6)) < 1e-14


def test_params_validation():
    with pytest.raises(ValueError):
        BicentricParams(1.0, 0.5, 0.6)  # caustic pokes outside
    with pytest.raises(ValueError):
        BicentricParams(1.0, -0.1, 0.0)
    with pytest.raises(ValueError):
        ConfocalParams(1.0, 2.0, 0.5)  # a must exceed b
    with pytest.raises(ValueError):
        ConfocalParams(2.0, 1.0, 1.0)  # lam must stay below b^2
    with pytest.raises(NoPoristicPair):
        bic1_config(1.0, 0.25).__class__(
            "bic-I", bic=BicentricParams(1.0, 0.25, 0.3)
        )
    with pytest.raises(ValueError):
        conf1_config(2.0, 1.0).__class__(
            "conf-I", conf=ConfocalParams(2.0, 1.0, 0.5)
        )
    with pytest.raises(ValueError):
        bic2_config(1.0, 0.2, 0.3).__class__(
            "bic-III", bic=BicentricParams(1.0, 0.2, 0.3)
        )


@given(t=angles)
def test_bic1_closure_all_sides_tangent(t):
    cfg = bic1_config(1.0, 0.25)
    tri = cfg.triangle(t)
    assert tri.valid
    caustic = cfg.caustics()[0]
    for i, j in ((0, 1), (1, 2), (2, 0)):
        assert _tangency(tri, caustic, i, j) < 1e-11


@given(t=angles)
def test_bic2_construction_invariants(t):
    p = BicentricParams(1.0, 0.2, 0.3)
    tri = bic2_vertices(p, t)
    # first vertex rides the outer circle at the driving angle
    assert math.dist(tri.p1, Point(math.cos(t), math.sin(t))) < 1e-12
    for v in tri.vertices():
        assert abs(math.hypot(v.x, v.y) - 1.0) < 1e-12
    # both tangent sides emanate from the driving vertex
    caustic = p.caustic()
    assert _tangency(tri, caustic, 0, 1) < 1e-11
    assert _tangency(tri, caustic, 2, 0) < 1e-11
    # the free side is generally NOT tangent to the caustic
    assert _tangency(tri, caustic, 1, 2) > 1e-4


@given(t=angles)
def test_bic3_two_caustics(t):
    cfg = bic3_config(1.0, 0.15, 0.25, u=0.4)
    tri = cfg.triangle(t)
    if not tri.valid:
        return
    c1, c2 = cfg.caustics()
    assert _tangency(tri, c1, 0, 1) < 1e-10
    assert _tangency(tri, c2, 1, 2) < 1e-10


def test_bic3_second_caustic_pencil_form():
    p = BicentricParams(1.0, 0.15, 0.25, u=0.4)
    c2 = bic3_caustic2(p)
    R, r, d, u = 1.0, 0.15, 0.25, 0.4
    assert abs(c2.center.x - d * (1.0 - u)) < 1e-14
    want_r = math.sqrt(d * d * u * u + (R * R - d * d - r * r) * u + r * r)
    assert abs(c2.semi_axes[0] - want_r) < 1e-14


def test_bic3_u_zero_reduces_to_bic2():
    """At u = 0 the second caustic coincides with the first, so each
    triangle matches a two-caustic triangle up to vertex relabeling:
    the tangent sides share the chain vertex instead of the driver."""
    p2 = BicentricParams(1.0, 0.15, 0.25)
    cfg3 = bic3_config(1.0, 0.15, 0.25, u=0.0)
    for t in np.linspace(0.0, 2.0 * math.pi, 9):
        b = cfg3.triangle(float(t))
        if not b.valid:
            continue
        apex = math.atan2(b.p2.y, b.p2.x)
        a = bic2_vertices(p2, apex)
        for vb in b.vertices():
            assert min(math.dist(va, vb) for va in a.vertices()) < 1e-9


@given(t=angles)
def test_conf2_construction_invariants(t):
    cfg = conf2_config(2.0, 1.0, 0.5)
    tri = cfg.triangle(t)
    if not tri.valid:
        return
    for v in tri.vertices():
        assert abs((v.x / 2.0) ** 2 + v.y ** 2 - 1.0) < 1e-11
    caustic = cfg.caustics()[0]
    assert _tangency(tri, caustic, 0, 1) < 1e-10
    assert _tangency(tri, caustic, 2, 0) < 1e-10


@given(t=angles)
def test_conf1_closure(t):
    cfg = conf1_config(2.0, 1.0)
    tri = cfg.triangle(t)
    if not tri.valid:
        return
    caustic = cfg.caustics()[0]
    for i, j in ((0, 1), (1, 2), (2, 0)):
        assert _tangency(tri, caustic, i, j) < 1e-9


@given(t=angles)
def test_conf3_two_caustics(t):
    cfg = conf3_config(2.0, 1.0, 0.3, 0.5)
    tri = cfg.triangle(t)
    if not tri.valid:
        return
    c1, c2 = cfg.caustics()
    assert _tangency(tri, c1, 0, 1) < 1e-9
    assert _tangency(tri, c2, 1, 2) < 1e-9


def test_free_side_matches_vertices():
    cfg2 = bic2_config(1.0, 0.2, 0.3)
    tri = cfg2.triangle(0.7)
    line = cfg2.free_side_at(0.7)
    assert abs(line.signed_distance(tri.p2)) < 1e-12
    assert abs(line.signed_distance(tri.p3)) < 1e-12
    cfg3 = bic3_config(1.0, 0.15, 0.25, u=0.4)
    tri3 = cfg3.triangle(0.7)
    line3 = cfg3.free_side_at(0.7)
    assert abs(line3.signed_distance(tri3.p3)) < 1e-12
    assert abs(line3.signed_distance(tri3.p1)) < 1e-12


def test_bic2_envelope_closed_form():
    p = BicentricParams(1.0, 0.2, 0.3)
    env = bic2_envelope(p)
    R, r, d = 1.0, 0.2, 0.3
    w = R * R - d * d
    assert abs(env.center.x - 4.0 * d * R * R * r * r / (w * w)) < 1e-14
    want_r = R * (R ** 4 - 2 * R * R * d * d - 2 * R * R * r * r + d ** 4 - 2 * d * d * r * r) / (w * w)
    assert abs(env.semi_axes[0] - want_r) < 1e-14
    # frozen values for the documented default parameters
    assert abs(env.center.x - 0.05796401400797005) < 1e-15
    assert abs(env.semi_axes[0] - 0.894698707885521) < 1e-14


@given(t=angles)
def test_bic2_free_side_tangent_to_envelope(t):
    p = BicentricParams(1.0, 0.2, 0.3)
    cfg = bic2_config(1.0, 0.2, 0.3)
    env = bic2_envelope(p)
    line = cfg.free_side_at(t)
    if line is None:
        return
    assert abs(line_tangent_to_conic_residual(line, env)) < 1e-10


def test_conf2_envelope_closed_form():
    a, b, lam = 2.0, 1.0, 0.5
    p = ConfocalParams(a, b, lam)
    env = conf2_envelope(p)
    c2 = a * a - b * b
    zeta = a * a * b * b - (a * a + b * b) * lam
    want_ax = abs(a * zeta) / (a * a * b * b - c2 * lam)
    want_ay = abs(b * zeta) / (a * a * b * b + c2 * lam)
    assert abs(env.semi_axes[0] - want_ax) < 1e-14
    assert abs(env.semi_axes[1] - want_ay) < 1e-14
    cfg = conf2_config(a, b, lam)
    for t in np.linspace(0.1, 6.2, 23):
        line = cfg.free_side_at(float(t))
        if line is not None:
            assert abs(line_tangent_to_conic_residual(line, env)) < 1e-10


def test_conf2_envelope_collapses_at_n4():
    a, b = 2.0, 1.0
    lam4 = a * a * b * b / (a * a + b * b)
    env = conf2_envelope(ConfocalParams(a, b, lam4))
    assert max(env.semi_axes) < 1e-12
    cfg = conf2_config(a, b, lam4)
    for t in np.linspace(0.1, 6.2, 23):
        line = cfg.free_side_at(float(t))
        if line is not None:
            assert abs(line.signed_distance(Point(0.0, 0.0))) < 1e-10


def test_envelope_points_on_closed_form():
    cfg = bic2_config(1.0, 0.2, 0.3)
    env = bic2_envelope(cfg.bic)
    ts = [2.0 * math.pi * k / 256.0 for k in range(256)]
    pts = envelope_points(cfg.free_side_at, ts)
    assert len(pts) > 200
    for q in pts:
        dist = math.dist(q, env.center)
        assert abs(dist - env.semi_axes[0]) < 1e-6


def test_family_config_outer_scale_and_caustic_count():
    assert bic2_config(1.0, 0.2, 0.3).outer_scale == 1.0
    assert conf2_config(2.0, 1.0, 0.5).outer_scale == 2.0
    assert len(bic2_config(1.0, 0.2, 0.3).caustics()) == 1
    assert len(bic3_config(1.0, 0.15, 0.25, u=0.4).caustics()) == 2
    assert len(conf3_config(2.0, 1.0, 0.3, 0.5).caustics()) == 2


def test_closed_form_envelope_presence():
    assert bic2_config(1.0, 0.2, 0.3).closed_form_envelope() is not None
    assert conf2_config(2.0, 1.0, 0.5).closed_form_envelope() is not None
    assert bic3_config(1.0, 0.15, 0.25, u=0.4).closed_form_envelope() is None
    assert conf3_config(2.0, 1.0, 0.3, 0.5).closed_form_envelope() is None


def test_triangle_metrics():
    tri = Triangle(Point(0.0, 0.0), Point(4.0, 0.0), Point(0.0, 3.0), 0.0)
    assert abs(tri.area() - 6.0) < 1e-15
    assert abs(tri.inradius() - 1.0) < 1e-15
    assert abs(tri.circumradius() - 2.5) < 1e-15
    s = sorted(tri.side_lengths())
    assert abs(s[0] - 3.0) < 1e-15 and abs(s[2] - 5.0) < 1e-15


def test_branches_give_distinct_triangles():
    cfg_pp = bic3_config(1.0, 0.15, 0.25, u=0.4)
    cfg_pm = bic3_config(1.0, 0.15, 0.25, u=0.4, branch=TangentBranch("plus", "minus"))
    t = 0.9
    a, b = cfg_pp.triangle(t), cfg_pm.triangle(t)
    assert math.dist(a.p3, b.p3) > 1e-3
