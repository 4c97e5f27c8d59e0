"""Poncelet triangle families between an outer conic and in-pencil caustics.

Six one-parameter families of triangles inscribed in an outer conic are
provided, each driven by the eccentric angle t of the first vertex:

* ``bic-I``   outer circle, incircle caustic (the poristic pair),
* ``bic-II``  outer circle, one interior circular caustic touching two
              sides; the third side then envelopes another circle of
              the same pencil,
* ``bic-III`` outer circle, two circular caustics from the pencil, one
              per constructed side, chosen by a tangent branch,
* ``conf-I``  outer ellipse with its confocal billiard caustic (the
              closure case, found by the critical pencil parameter),
* ``conf-II`` outer ellipse, one confocal caustic touching two sides,
* ``conf-III`` outer ellipse, confocal caustic plus a second concentric
              caustic from their pencil, built by tangent chaining.

Vertex constructions use closed forms where available (bicentric and
confocal chord maps) and the geometric tangent-chain otherwise.  All
formulas live in the canonical frame: circles centered on the x-axis
with the outer circle at the origin, ellipses concentric and
axis-parallel at the origin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

from .geom import (
    Conic,
    GeometryError,
    Line,
    Point,
    line_intersection,
    pencil_member,
    second_intersection,
    tangent_contact_points,
)

__all__ = [
    "NoPoristicPair",
    "CircularOuterUnsupported",
    "VertexInsideCaustic",
    "ImaginaryPencilCircle",
    "DegenerateTriangle",
    "PLUS",
    "MINUS",
    "TangentBranch",
    "DEFAULT_BRANCH",
    "BicentricParams",
    "ConfocalParams",
    "Triangle",
    "FamilyConfig",
    "FAMILY_KINDS",
    "chapple_distance",
    "kerawala_holds",
    "degenerate_envelope_inradius",
    "confocal_caustic",
    "critical_lambda",
    "n4_caustic",
    "n6_caustic",
    "bic2_vertices",
    "bic3_caustic2",
    "bic3_vertices",
    "conf2_vertices",
    "conf3_vertices",
    "bic2_envelope",
    "bic2_envelope_radius_pq",
    "conf2_envelope",
    "chain_step",
    "envelope_points",
    "bic1_config",
    "bic2_config",
    "bic3_config",
    "conf1_config",
    "conf2_config",
    "conf3_config",
]


class NoPoristicPair(GeometryError):
    """No poristic triangle family exists for the given circle pair."""


class CircularOuterUnsupported(GeometryError):
    """Confocal constructions need a strictly elliptical outer conic."""


class VertexInsideCaustic(GeometryError):
    """A chord step was requested from a point without real tangents."""


class ImaginaryPencilCircle(GeometryError):
    """The requested pencil circle has negative squared radius."""


class DegenerateTriangle(GeometryError):
    """Triangle with (numerically) collinear or coincident vertices."""


PLUS = "plus"
MINUS = "minus"


class TangentBranch(NamedTuple):
    """Which tangent to take at each constructed side of a triangle.

    Both components select the sign of the square root in the chord
    maps (equivalently, which of the two tangents from the moving
    vertex).  The labels are continuous along a full sweep of t.
    """

    first: str = PLUS
    second: str = PLUS


DEFAULT_BRANCH = TangentBranch(PLUS, PLUS)


def _branch_sign(label: str) -> float:
    if label == PLUS:
        return 1.0
    if label == MINUS:
        return -1.0
    raise ValueError(f"tangent branch must be {PLUS!r} or {MINUS!r}, got {label!r}")


@dataclass(frozen=True)
class BicentricParams:
    """Outer circle radius R at the origin, caustic radius r at (d, 0).

    ``u`` selects the second caustic of the three-caustic family as the
    pencil coordinate between the first caustic (u=0) and the outer
    circle (u=1).
    """

    R: float
    r: float
    d: float
    u: Optional[float] = None

    def __post_init__(self) -> None:
        if not (self.R > 0.0 and self.r > 0.0):
            raise ValueError("radii must be positive")
        if self.d < 0.0:
            raise ValueError("center offset must be nonnegative")
        if self.r + self.d >= self.R:
            raise ValueError("caustic must be strictly inside the outer circle")

    def outer_circle(self) -> Conic:
        return Conic.circle(Point(0.0, 0.0), self.R)

    def caustic(self) -> Conic:
        return Conic.circle(Point(self.d, 0.0), self.r)


@dataclass(frozen=True)
class ConfocalParams:
    """Outer ellipse semi-axes (a, b) with a > b, caustic parameter lam.

    The confocal caustic has semi-axes (sqrt(a^2-lam), sqrt(b^2-lam)),
    so lam must lie in [0, b^2).  ``pencil_u`` selects the second
    caustic of the three-caustic family inside the pencil spanned by
    the outer ellipse and the confocal caustic (u=0 caustic, u=1 outer).
    """

    a: float
    b: float
    lam: float
    pencil_u: Optional[float] = None

    def __post_init__(self) -> None:
        if not (self.a > self.b > 0.0):
            raise ValueError("need a > b > 0")
        if not (0.0 <= self.lam < self.b * self.b):
            raise ValueError("lam must lie in [0, b^2)")

    @property
    def c2(self) -> float:
        return self.a * self.a - self.b * self.b

    @property
    def delta(self) -> float:
        a2 = self.a * self.a
        b2 = self.b * self.b
        return math.sqrt(a2 * a2 - a2 * b2 + b2 * b2)

    def caustic_semi_axes(self) -> Tuple[float, float]:
        return (
            math.sqrt(self.a * self.a - self.lam),
            math.sqrt(self.b * self.b - self.lam),
        )

    def outer_ellipse(self) -> Conic:
        return Conic.axis_ellipse(Point(0.0, 0.0), self.a, self.b)

    def caustic(self) -> Conic:
        ca, cb = self.caustic_semi_axes()
        return Conic.axis_ellipse(Point(0.0, 0.0), ca, cb)


@dataclass(frozen=True)
class Triangle:
    """One family member: vertices, the driving angle, and a validity flag."""

    p1: Point
    p2: Point
    p3: Point
    t: float
    valid: bool = True

    def vertices(self) -> Tuple[Point, Point, Point]:
        return (self.p1, self.p2, self.p3)

    def side_lengths(self) -> Tuple[float, float, float]:
        """(s1, s2, s3) with s_i the length of the side opposite vertex i."""
        s1 = math.dist(self.p2, self.p3)
        s2 = math.dist(self.p3, self.p1)
        s3 = math.dist(self.p1, self.p2)
        return (s1, s2, s3)

    def sides(self) -> Tuple[Line, Line, Line]:
        """Lines (P1P2, P2P3, P3P1)."""
        return (
            Line.from_points(self.p1, self.p2),
            Line.from_points(self.p2, self.p3),
            Line.from_points(self.p3, self.p1),
        )

    def area(self) -> float:
        (x1, y1), (x2, y2), (x3, y3) = self.p1, self.p2, self.p3
        return 0.5 * abs((x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1))

    def perimeter(self) -> float:
        return sum(self.side_lengths())

    def angle_cosines(self) -> Tuple[float, float, float]:
        """Interior angle cosines at (P1, P2, P3) via the law of cosines."""
        s1, s2, s3 = self.side_lengths()
        if min(s1, s2, s3) == 0.0:
            raise DegenerateTriangle("coincident vertices")
        c1 = (s2 * s2 + s3 * s3 - s1 * s1) / (2.0 * s2 * s3)
        c2 = (s3 * s3 + s1 * s1 - s2 * s2) / (2.0 * s3 * s1)
        c3 = (s1 * s1 + s2 * s2 - s3 * s3) / (2.0 * s1 * s2)
        return (c1, c2, c3)

    def inradius(self) -> float:
        return 2.0 * self.area() / self.perimeter()

    def circumradius(self) -> float:
        s1, s2, s3 = self.side_lengths()
        area = self.area()
        if area == 0.0:
            raise DegenerateTriangle("collinear vertices")
        return s1 * s2 * s3 / (4.0 * area)


# ---------------------------------------------------------------------------
# Scalar relations between the fixed conics of each family.


def chapple_distance(R: float, r: float) -> float:
    """Center offset d with d^2 = R(R - 2r), the poristic closure condition."""
    if R < 2.0 * r:
        raise NoPoristicPair(f"need R >= 2r, got R={R}, r={r}")
    return math.sqrt(R * (R - 2.0 * r))

def kerawala_holds(R: float, r: float, d: float, tol: float = 1e-10) -> Tuple[bool, float]:
    """Whether 1/(R-d)^2 + 1/(R+d)^2 = 1/r^2 holds, plus the raw residual.

    The boolean compares |residual| * r^2 against ``tol`` so the decision
    is scale-free even though the returned residual is not.
    """
    residual = 1.0 / (R - d) ** 2 + 1.0 / (R + d) ** 2 - 1.0 / (r * r)
    return (abs(residual) * r * r <= tol, residual)


def degenerate_envelope_inradius(R: float, d: float) -> float:
    """Caustic radius making the two-caustic third-side envelope a point.

    Solves (R^2 - d^2)^2 = 2 r^2 (R^2 + d^2) for r; equivalent to the
    relation tested by kerawala_holds.
    """
    return math.sqrt((R * R - d * d) ** 2 / (2.0 * (R * R + d * d)))


def confocal_caustic(a: float, b: float) -> Tuple[float, float]:
    """Semi-axes of the confocal caustic closing billiard triangles."""
    if a == b:
        raise CircularOuterUnsupported("confocal caustic undefined for a circle")
    if not a > b > 0.0:
        raise ValueError("need a > b > 0")
    a2 = a * a
    b2 = b * b
    c2 = a2 - b2
    delta = math.sqrt(a2 * a2 - a2 * b2 + b2 * b2)
    return (a * (delta - b2) / c2, b * (a2 - delta) / c2)


def critical_lambda(a: float, b: float) -> float:
    """Pencil parameter of the confocal caustic that closes triangles."""
    if a == b:
        raise CircularOuterUnsupported("critical parameter undefined for a circle")
    if not a > b > 0.0:
        raise ValueError("need a > b > 0")
    a2 = a * a
    b2 = b * b
    c2 = a2 - b2
    delta = math.sqrt(a2 * a2 - a2 * b2 + b2 * b2)
    return a2 * b2 * (2.0 * delta - a2 - b2) / (c2 * c2)


def n4_caustic(a: float, b: float) -> Tuple[float, float]:
    """Confocal caustic whose billiard polygons close after 4 bounces."""
    root = math.sqrt(a * a + b * b)
    return (a * a / root, b * b / root)


def n6_caustic(a: float, b: float) -> Tuple[float, float]:
    """Confocal caustic whose billiard polygons close after 6 bounces."""
    s = a + b
    return (
        a * math.sqrt(a * (a + 2.0 * b)) / s,
        b * math.sqrt(b * (2.0 * a + b)) / s,
    )


# ---------------------------------------------------------------------------
# Closed-form chord maps.
#
# Given a vertex on the outer conic and an interior caustic, the chord
# map returns the second intersection with the outer conic of one of
# the two tangents from the vertex to the caustic.  The sign argument
# selects the tangent; the labeling is continuous in the vertex, so a
# fixed sign traces a single smooth family over a full sweep.


def _bic_chord_step(
    R: float, rc: float, dc: float, x1: float, y1: float, sign: float
) -> Point:
    """Chord map for an outer circle of radius R about the origin and a
    caustic circle of radius rc centered at (dc, 0)."""
    delta2 = R * R + dc * dc - 2.0 * dc * x1 - rc * rc
    if delta2 <= 0.0:
        raise VertexInsideCaustic(
            f"no real tangent from ({x1}, {y1}) to circle (d={dc}, r={rc})"
        )
    delta = sign * math.sqrt(delta2)
    den = (R * R + dc * dc - 2.0 * dc * x1) ** 2
    rr_dd = R * R - dc * dc
    x2 = (
        2.0 * rc * y1 * rr_dd * delta
        + (2.0 * dc * R * R - (R * R + dc * dc) * x1) * (delta2 - rc * rc)
    ) / den
    y2 = (
        (4.0 * R * R * dc - 2.0 * (R * R + dc * dc) * x1) * rc * delta
        - y1 * rr_dd * (delta2 - rc * rc)
    ) / den
    return Point(x2, y2)


def _conf_chord_step(
    a: float, b: float, ca: float, cb: float, x1: float, y1: float, sign: float
) -> Point:
    """Chord map for a concentric axis-parallel outer ellipse (a, b) and
    caustic ellipse (ca, cb)."""
    a2 = a * a
    b2 = b * b
    ca2 = ca * ca
    cb2 = cb * cb
    delta2 = (a2 * cb2 - ca2 * cb2) * x1 * x1 + (a2 * ca2 - a2 * ca2 * cb2 / b2) * y1 * y1
    if delta2 <= 0.0:
        raise VertexInsideCaustic(
            f"no real tangent from ({x1}, {y1}) to ellipse ({ca}, {cb})"
        )
    delta = sign * math.sqrt(delta2)
    alpha1 = a2 * (b2 - cb2) - ca2 * b2
    alpha2 = (a2 - ca2) * b2 + a2 * cb2
    alpha3 = a2 * (b2 - cb2) + ca2 * b2
    w = (alpha2 * x1) ** 2 / a2 + (alpha3 * y1) ** 2 / b2
    x2 = (2.0 * a * alpha3 * y1 * delta - alpha1 * alpha2 * x1) / w
    y2 = (-2.0 * b2 * alpha2 * x1 * delta - a * alpha1 * alpha3 * y1) / (a * w)
    return Point(x2, y2)


def chain_step(outer: Conic, caustic: Conic, vertex: Point, sign: float) -> Point:
    """Geometric tangent chain step: pick one tangent from the vertex to
    the caustic and return its second intersection with the outer conic.

    ``sign > 0`` selects the contact point lying to the left of the ray
    from the vertex to the caustic center.  That test never changes
    along a sweep because a tangent line cannot pass through the
    caustic's interior, making the branch labels globally continuous.
    """
    try:
        contacts = tangent_contact_points(vertex, caustic)
    except GeometryError as exc:
        raise VertexInsideCaustic(str(exc)) from exc
    assert caustic.center is not None
    ax = caustic.center.x - vertex.x
    ay = caustic.center.y - vertex.y
    chosen = None
    for contact in contacts:
        bx = contact.x - vertex.x
        by = contact.y - vertex.y
        cross = ax * by - ay * bx
        if (cross > 0.0) == (sign > 0.0):
            chosen = contact
            break
    if chosen is None:
        # Both contacts on one side can only happen through rounding at
        # a symmetric configuration; fall back to the first contact.
        chosen = contacts[0]
    direction = (chosen.x - vertex.x, chosen.y - vertex.y)
    return second_intersection(outer, vertex, direction)


# ---------------------------------------------------------------------------
# Family constructions.


def bic2_vertices(p: BicentricParams, t: float) -> Triangle:
    """Two-caustic bicentric triangle at angle t.

    P1 = R (cos t, sin t); P2 and P3 are the second intersections of
    the two tangents from P1 to the caustic with the outer circle.  The
    poristic family is the special case d^2 = R(R - 2r).
    """
    x1 = p.R * math.cos(t)
    y1 = p.R * math.sin(t)
    p2 = _bic_chord_step(p.R, p.r, p.d, x1, y1, 1.0)
    p3 = _bic_chord_step(p.R, p.r, p.d, x1, y1, -1.0)
    return Triangle(Point(x1, y1), p2, p3, t)


def _bic3_second_caustic(p: BicentricParams) -> Tuple[float, float]:
    """(radius, center offset) of the pencil circle at parameter u."""
    if p.u is None:
        raise ValueError("three-caustic family needs the pencil parameter u")
    u = p.u
    radicand = p.d * p.d * u * u + (p.R * p.R - p.d * p.d - p.r * p.r) * u + p.r * p.r
    if radicand <= 0.0:
        raise ImaginaryPencilCircle(f"pencil circle at u={u} is imaginary")
    return (math.sqrt(radicand), p.d * (1.0 - u))


def bic3_caustic2(p: BicentricParams) -> Conic:
    """Second circular caustic: the pencil member at parameter u with
    center (d(1-u), 0) and radius sqrt(d^2 u^2 + (R^2-d^2-r^2) u + r^2)."""
    radius, offset = _bic3_second_caustic(p)
    return Conic.circle(Point(offset, 0.0), radius)


def bic3_vertices(p: BicentricParams, t: float, branch: TangentBranch = DEFAULT_BRANCH) -> Triangle:
    """Three-caustic bicentric triangle at angle t.

    Chain construction: P1P2 is tangent to the first caustic, P2P3 to
    the pencil caustic at parameter u, all vertices on the outer
    circle.  The free side P3P1 then envelopes a third pencil circle.
    """
    r2, d2 = _bic3_second_caustic(p)
    x1 = p.R * math.cos(t)
    y1 = p.R * math.sin(t)
    s1 = _branch_sign(branch.first)
    s2 = _branch_sign(branch.second)
    p2 = _bic_chord_step(p.R, p.r, p.d, x1, y1, s1)
    p3 = _bic_chord_step(p.R, r2, d2, p2.x, p2.y, s2)
    return Triangle(Point(x1, y1), p2, p3, t)


def conf2_vertices(
    p: ConfocalParams, t: float, branch: TangentBranch = DEFAULT_BRANCH
) -> Triangle:
    """Confocal-caustic triangle at angle t.

    P1 = (a cos t, b sin t); P2 and P3 close the two tangents from P1
    to the confocal caustic.  ``branch.first`` swaps the roles of P2
    and P3 (the second component is unused since both constructed sides
    leave the same vertex).
    """
    ca, cb = p.caustic_semi_axes()
    x1 = p.a * math.cos(t)
    y1 = p.b * math.sin(t)
    s = _branch_sign(branch.first)
    p2 = _conf_chord_step(p.a, p.b, ca, cb, x1, y1, s)
    p3 = _conf_chord_step(p.a, p.b, ca, cb, x1, y1, -s)
    return Triangle(Point(x1, y1), p2, p3, t)


def conf3_vertices(
    p: ConfocalParams, t: float, branch: TangentBranch = DEFAULT_BRANCH
) -> Triangle:
    """Two-elliptic-caustic triangle at angle t, by geometric chaining.

    P1P2 is tangent to the confocal caustic, P2P3 to the concentric
    pencil caustic at parameter pencil_u; no closed form is used.
    """
    if p.pencil_u is None:
        raise ValueError("three-caustic family needs the pencil parameter pencil_u")
    outer = p.outer_ellipse()
    first = p.caustic()
    second = pencil_member(outer, first, 1.0 - p.pencil_u)
    if second.kind not in ("ellipse", "circle"):
        raise ImaginaryPencilCircle(
            f"pencil caustic at u={p.pencil_u} is not an ellipse ({second.kind})"
        )
    x1 = p.a * math.cos(t)
    y1 = p.b * math.sin(t)
    v1 = Point(x1, y1)
    v2 = chain_step(outer, first, v1, _branch_sign(branch.first))
    v3 = chain_step(outer, second, v2, _branch_sign(branch.second))
    return Triangle(v1, v2, v3, t)


# ---------------------------------------------------------------------------
# Closed-form third-side envelopes.


def bic2_envelope(p: BicentricParams) -> Conic:
    """Envelope of the third side P2P3 over the two-caustic circle family.

    A circle of the same pencil, centered at (4 d R^2 r^2/(R^2-d^2)^2, 0)
    with signed radius R (R^4 - 2R^2 d^2 - 2R^2 r^2 + d^4 - 2 d^2 r^2)
    / (R^2-d^2)^2; the absolute value is used for the returned conic and
    a zero radius yields a point conic.  The equivalent product form of
    the radius (see bic2_envelope_radius_pq) is asserted to agree.
    """
    R, r, d = p.R, p.r, p.d
    den = (R * R - d * d) ** 2
    cx = 4.0 * d * R * R * r * r / den
    radius = (
        R
        * (R ** 4 - 2.0 * R * R * d * d - 2.0 * R * R * r * r + d ** 4 - 2.0 * d * d * r * r)
        / den
    )
    if d > 1e-12 * R:
        alt = bic2_envelope_radius_pq(R, r, d)
        if abs(alt - radius) > 1e-12 * max(1.0, abs(radius), R):
            raise GeometryError("envelope radius forms disagree; parameters ill-conditioned")
    return Conic.circle(Point(cx, 0.0), abs(radius))


def bic2_envelope_radius_pq(R: float, r: float, d: float) -> float:
    """Signed envelope radius via the substitution p=(R+d)/r, q=(R-d)/r."""
    if d == 0.0:
        raise ValueError("product form needs d > 0")
    pp = (R + d) / r
    qq = (R - d) / r
    return (pp * pp * qq * qq - pp * pp - qq * qq) * (pp + qq) * d / (
        pp * pp * qq * qq * (pp - qq)
    )


def conf2_envelope(p: ConfocalParams) -> Conic:
    """Envelope of the third side P2P3 over the confocal-caustic family.

    A concentric axis-parallel ellipse with semi-axes
    |a z| / (a^2 b^2 - c^2 lam) and |b z| / (a^2 b^2 + c^2 lam) where
    z = a^2 b^2 - (a^2 + b^2) lam; z = 0 collapses it to the center.
    """
    a2 = p.a * p.a
    b2 = p.b * p.b
    zeta = a2 * b2 - (a2 + b2) * p.lam
    if abs(zeta) <= 1e-14 * a2 * b2:
        return Conic.circle(Point(0.0, 0.0), 0.0)
    ea = abs(p.a * zeta) / (a2 * b2 - p.c2 * p.lam)
    eb = abs(p.b * zeta) / (a2 * b2 + p.c2 * p.lam)
    return Conic.axis_ellipse(Point(0.0, 0.0), ea, eb)


# ---------------------------------------------------------------------------
# Envelope sampling from a one-parameter family of chords.


def envelope_points(
    line_at: Callable[[float], Optional[Line]],
    ts: Sequence[float],
    h: float = 1e-3,
) -> List[Point]:
    """Characteristic points of a chord family L(t), one per sample angle.

    Each point is the limit of intersections of neighboring chords,
    computed from the symmetric pairs (t-h, t+h) and (t-h/2, t+h/2)
    with one Richardson extrapolation step, which removes the O(h^2)
    truncation term.  Samples with missing or near-parallel chords are
    skipped.
    """

    def char_point(t: float, step: float) -> Optional[Point]:
        l1 = line_at(t - step)
        l2 = line_at(t + step)
        if l1 is None or l2 is None:
            return None
        return line_intersection(l1, l2)

    out: List[Point] = []
    for t in ts:
        coarse = char_point(t, h)
        fine = char_point(t, 0.5 * h)
        if coarse is None or fine is None:
            continue
        out.append(
            Point(
                (4.0 * fine.x - coarse.x) / 3.0,
                (4.0 * fine.y - coarse.y) / 3.0,
            )
        )
    return out


# ---------------------------------------------------------------------------
# Family configuration: one value describing a concrete family instance.


FAMILY_KINDS = ("bic-I", "bic-II", "bic-III", "conf-I", "conf-II", "conf-III")

_BIC_KINDS = ("bic-I", "bic-II", "bic-III")
_CONF_KINDS = ("conf-I", "conf-II", "conf-III")


@dataclass(frozen=True)
class FamilyConfig:
    """A concrete triangle family: kind, shape parameters, tangent branch."""

    kind: str
    bic: Optional[BicentricParams] = None
    conf: Optional[ConfocalParams] = None
    branch: TangentBranch = DEFAULT_BRANCH

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind in _BIC_KINDS:
            if self.bic is None:
                raise ValueError(f"{self.kind} needs bicentric parameters")
            if self.kind == "bic-I":
                want = chapple_distance(self.bic.R, self.bic.r)
                if abs(self.bic.d - want) > 1e-12 * max(self.bic.R, 1.0):
                    raise NoPoristicPair(
                        f"d={self.bic.d} is not the poristic offset {want}"
                    )
            if self.kind == "bic-III" and self.bic.u is None:
                raise ValueError("bic-III needs the pencil parameter u")
        else:
            if self.conf is None:
                raise ValueError(f"{self.kind} needs confocal parameters")
            if self.kind == "conf-I":
                want = critical_lambda(self.conf.a, self.conf.b)
                if abs(self.conf.lam - want) > 1e-12 * max(self.conf.b ** 2, 1.0):
                    raise ValueError(
                        f"lam={self.conf.lam} is not the closure value {want}"
                    )
            if self.kind == "conf-III" and self.conf.pencil_u is None:
                raise ValueError("conf-III needs the pencil parameter pencil_u")

    @property
    def outer_scale(self) -> float:
        if self.bic is not None:
            return self.bic.R
        assert self.conf is not None
        return self.conf.a

    def outer_conic(self) -> Conic:
        if self.kind in _BIC_KINDS:
            assert self.bic is not None
            return self.bic.outer_circle()
        assert self.conf is not None
        return self.conf.outer_ellipse()

    def caustics(self) -> Tuple[Conic, ...]:
        """The prescribed caustics (not the derived third-side envelope)."""
        if self.kind in _BIC_KINDS:
            assert self.bic is not None
            if self.kind == "bic-III":
                return (self.bic.caustic(), bic3_caustic2(self.bic))
            return (self.bic.caustic(),)
        assert self.conf is not None
        if self.kind == "conf-III":
            assert self.conf.pencil_u is not None
            second = pencil_member(
                self.conf.outer_ellipse(), self.conf.caustic(), 1.0 - self.conf.pencil_u
            )
            return (self.conf.caustic(), second)
        return (self.conf.caustic(),)

    def triangle(self, t: float) -> Triangle:
        if self.kind in ("bic-I", "bic-II"):
            assert self.bic is not None
            return bic2_vertices(self.bic, t)
        if self.kind == "bic-III":
            assert self.bic is not None
            return bic3_vertices(self.bic, t, self.branch)
        if self.kind in ("conf-I", "conf-II"):
            assert self.conf is not None
            return conf2_vertices(self.conf, t, self.branch)
        assert self.conf is not None
        return conf3_vertices(self.conf, t, self.branch)

    def free_side(self, tri: Triangle) -> Line:
        """The side not constrained to a prescribed caustic.

        P2P3 for the single-caustic families, P3P1 for the chain-built
        three-caustic families.
        """
        if self.kind in ("bic-III", "conf-III"):
            return Line.from_points(tri.p3, tri.p1)
        return Line.from_points(tri.p2, tri.p3)

    def free_side_at(self, t: float) -> Optional[Line]:
        try:
            tri = self.triangle(t)
        except GeometryError:
            return None
        return self.free_side(tri)

    def closed_form_envelope(self) -> Optional[Conic]:
        """Known envelope of the free side, where a closed form exists."""
        if self.kind == "bic-I":
            assert self.bic is not None
            return self.bic.caustic()
        if self.kind == "bic-II":
            assert self.bic is not None
            return bic2_envelope(self.bic)
        if self.kind == "conf-I":
            assert self.conf is not None
            return self.conf.caustic()
        if self.kind == "conf-II":
            assert self.conf is not None
            return conf2_envelope(self.conf)
        return None


def bic1_config(R: float, r: float) -> FamilyConfig:
    return FamilyConfig("bic-I", bic=BicentricParams(R, r, chapple_distance(R, r)))


def bic2_config(R: float, r: float, d: float) -> FamilyConfig:
    return FamilyConfig("bic-II", bic=BicentricParams(R, r, d))


def bic3_config(
    R: float, r: float, d: float, u: float, branch: TangentBranch = DEFAULT_BRANCH
) -> FamilyConfig:
    return FamilyConfig("bic-III", bic=BicentricParams(R, r, d, u=u), branch=branch)


def conf1_config(a: float, b: float) -> FamilyConfig:
    return FamilyConfig("conf-I", conf=ConfocalParams(a, b, critical_lambda(a, b)))


def conf2_config(
    a: float, b: float, lam: float, branch: TangentBranch = DEFAULT_BRANCH
) -> FamilyConfig:
    return FamilyConfig("conf-II", conf=ConfocalParams(a, b, lam), branch=branch)


def conf3_config(
    a: float,
    b: float,
    lam: float,
    pencil_u: float,
    branch: TangentBranch = DEFAULT_BRANCH,
) -> FamilyConfig:
    return FamilyConfig(
        "conf-III", conf=ConfocalParams(a, b, lam, pencil_u=pencil_u), branch=branch
    )
