"""Planar conic primitives: implicit forms, pencils, tangents, inversion.

A conic is stored as the coefficient 6-vector ``(A, B, C, D, E, F)`` of

    A x^2 + B x y + C y^2 + D x + E y + F = 0,

scaled to unit Euclidean norm with the first nonzero coefficient kept
positive.  With that normalization a pencil of two conics is a plain
linear combination of 6-vectors and every classification threshold is
scale-free.  For circles and ellipses the sign convention makes the
implicit value positive outside the curve and negative inside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Tuple

import numpy as np

__all__ = [
    "POINT",
    "CIRCLE",
    "ELLIPSE",
    "HYPERBOLA",
    "PARABOLA",
    "DEGENERATE",
    "CIRCLE_TOL",
    "DEGENERATE_TOL",
    "BOUNDARY_TOL",
    "GeometryError",
    "DegeneratePencilMember",
    "NoRealTangent",
    "TangentFromBoundary",
    "InversionOfCenter",
    "ComplexLimitingPoints",
    "Point",
    "Line",
    "Conic",
    "ConicClass",
    "CirclePencil",
    "classify_conic",
    "pencil_member",
    "conic_value",
    "conic_gradient",
    "axis_aligned_semi_axes",
    "second_intersection",
    "tangent_contact_points",
    "tangent_lines_from_point",
    "circle_inverse",
    "limiting_points",
    "line_tangent_to_conic_residual",
    "conic_span_residual",
    "line_intersection",
]

# Classification tags.
POINT = "point"
CIRCLE = "circle"
ELLIPSE = "ellipse"
HYPERBOLA = "hyperbola"
PARABOLA = "parabola"
DEGENERATE = "degenerate"

# Default tolerances.  Every threshold below applies to unit-norm
# coefficient vectors, so the defaults are scale-free; callers can
# override any of them per call.
CIRCLE_TOL = 1e-8
DEGENERATE_TOL = 1e-12
BOUNDARY_TOL = 1e-12


class GeometryError(ValueError):
    """Base class for geometric precondition failures."""


class DegeneratePencilMember(GeometryError):
    """The requested pencil combination cancels to the zero conic."""


class NoRealTangent(GeometryError):
    """Tangent lines were requested from a point inside the conic."""


class TangentFromBoundary(GeometryError):
    """Tangent lines were requested from a point on the conic itself."""


class InversionOfCenter(GeometryError):
    """Circle inversion was requested at the circle's own center."""


class ComplexLimitingPoints(GeometryError):
    """The circles of a pencil intersect; limiting points are complex."""


class Point(NamedTuple):
    x: float
    y: float


class Line(NamedTuple):
    """Oriented line ``a*x + b*y + c = 0`` with unit normal (a, b)."""

    a: float
    b: float
    c: float

    @classmethod
    def from_points(cls, p: Point, q: Point) -> "Line":
        """Line through two points; the normal is the left normal of p->q."""
        dx = q[0] - p[0]
        dy = q[1] - p[1]
        n = math.hypot(dx, dy)
        if n == 0.0:
            raise GeometryError("line through coincident points")
        a = -dy / n
        b = dx / n
        return cls(a, b, -(a * p[0] + b * p[1]))

    @classmethod
    def from_coefficients(cls, a: float, b: float, c: float) -> "Line":
        n = math.hypot(a, b)
        if n == 0.0:
            raise GeometryError("degenerate line coefficients")
        return cls(a / n, b / n, c / n)

    def signed_distance(self, p: Point) -> float:
        return self.a * p[0] + self.b * p[1] + self.c

    def distance(self, p: Point) -> float:
        return abs(self.signed_distance(p))

    def direction(self) -> Tuple[float, float]:
        return (-self.b, self.a)


def line_intersection(l1: Line, l2: Line, parallel_tol: float = 1e-14) -> Optional[Point]:
    """Intersection of two lines, or None when they are (nearly) parallel."""
    det = l1.a * l2.b - l2.a * l1.b
    if abs(det) <= parallel_tol:
        return None
    x = (-l1.c * l2.b + l2.c * l1.b) / det
    y = (-l1.a * l2.c + l2.a * l1.c) / det
    return Point(x, y)


def _unit_coeffs(values: Sequence[float]) -> Tuple[float, ...]:
    v = np.asarray(values, dtype=float)
    if v.shape != (6,):
        raise GeometryError("conic needs exactly 6 coefficients")
    if not np.all(np.isfinite(v)):
        raise GeometryError("non-finite conic coefficients")
    norm = float(np.linalg.norm(v))
    if norm == 0.0:
        raise GeometryError("zero conic")
    v = v / norm
    for entry in v:
        if entry != 0.0:
            if entry < 0.0:
                v = -v
            break
    return tuple(float(t) for t in v)


class ConicClass(NamedTuple):
    kind: str
    center: Optional[Point]
    semi_axes: Optional[Tuple[float, float]]  # (major, minor)
    axis_angle: Optional[float]  # direction of the major axis, in [0, pi)


def _conic_center(coeffs: Sequence[float]) -> Optional[Point]:
    a, b, c, d, e, _ = coeffs
    det = 4.0 * a * c - b * b
    if abs(det) < 1e-300:
        return None
    cx = (-2.0 * c * d + b * e) / det
    cy = (-2.0 * a * e + b * d) / det
    return Point(cx, cy)


def classify_conic(
    conic: "Conic | Sequence[float]",
    circle_tol: float = CIRCLE_TOL,
    degen_tol: float = DEGENERATE_TOL,
) -> ConicClass:
    """Classify a conic from its (normalized) coefficient vector.

    Returns kind plus center / semi-axes / major-axis angle where they
    exist.  The result is invariant under rescaling of the input since
    coefficients are re-normalized first.
    """
    coeffs = conic.coeffs if isinstance(conic, Conic) else _unit_coeffs(conic)
    a, b, c, d, e, f = coeffs
    m3 = np.array(
        [[a, b / 2.0, d / 2.0], [b / 2.0, c, e / 2.0], [d / 2.0, e / 2.0, f]]
    )
    det3 = float(np.linalg.det(m3))
    disc = b * b - 4.0 * a * c
    center = _conic_center(coeffs)

    if abs(det3) <= degen_tol:
        if disc < -degen_tol and center is not None:
            return ConicClass(POINT, center, (0.0, 0.0), 0.0)
        return ConicClass(DEGENERATE, center, None, None)

    if disc < -degen_tol:
        assert center is not None
        v0 = f + 0.5 * (d * center.x + e * center.y)
        if v0 >= 0.0:
            # No real points (the "imaginary ellipse" branch).
            return ConicClass(DEGENERATE, center, None, None)
        if abs(a - c) <= circle_tol and abs(b) <= circle_tol:
            radius = math.sqrt(-v0 / (0.5 * (a + c)))
            return ConicClass(CIRCLE, center, (radius, radius), 0.0)
        m2 = np.array([[a, b / 2.0], [b / 2.0, c]])
        eigvals, eigvecs = np.linalg.eigh(m2)
        major = math.sqrt(-v0 / eigvals[0])
        minor = math.sqrt(-v0 / eigvals[1])
        angle = math.atan2(eigvecs[1, 0], eigvecs[0, 0]) % math.pi
        return ConicClass(ELLIPSE, center, (major, minor), angle)

    if disc > degen_tol:
        return ConicClass(HYPERBOLA, center, None, None)
    return ConicClass(PARABOLA, None, None, None)


@dataclass(frozen=True)
class Conic:
    """Immutable conic with normalized coefficients and classification."""

    coeffs: Tuple[float, float, float, float, float, float]
    kind: str
    center: Optional[Point]
    semi_axes: Optional[Tuple[float, float]]
    axis_angle: Optional[float]

    @classmethod
    def from_coeffs(
        cls,
        values: Sequence[float],
        circle_tol: float = CIRCLE_TOL,
        degen_tol: float = DEGENERATE_TOL,
    ) -> "Conic":
        coeffs = _unit_coeffs(values)
        info = classify_conic(coeffs, circle_tol=circle_tol, degen_tol=degen_tol)
        return cls(coeffs, info.kind, info.center, info.semi_axes, info.axis_angle)

    @classmethod
    def circle(cls, center: Point, radius: float) -> "Conic":
        if radius < 0.0:
            raise GeometryError("negative radius")
        cx, cy = center
        return cls.from_coeffs(
            [1.0, 0.0, 1.0, -2.0 * cx, -2.0 * cy, cx * cx + cy * cy - radius * radius]
        )

    @classmethod
    def axis_ellipse(cls, center: Point, rx: float, ry: float) -> "Conic":
        """Axis-parallel ellipse with semi-axis rx along x and ry along y."""
        if rx <= 0.0 or ry <= 0.0:
            raise GeometryError("semi-axes must be positive")
        cx, cy = center
        ax = 1.0 / (rx * rx)
        cy2 = 1.0 / (ry * ry)
        return cls.from_coeffs(
            [ax, 0.0, cy2, -2.0 * ax * cx, -2.0 * cy2 * cy, ax * cx * cx + cy2 * cy * cy - 1.0]
        )

    def value(self, p: Point) -> float:
        return conic_value(self, p)

    def gradient(self, p: Point) -> Tuple[float, float]:
        return conic_gradient(self, p)


def conic_value(conic: Conic, p: Point) -> float:
    a, b, c, d, e, f = conic.coeffs
    x, y = p
    return a * x * x + b * x * y + c * y * y + d * x + e * y + f


def conic_gradient(conic: Conic, p: Point) -> Tuple[float, float]:
    a, b, c, d, e, _ = conic.coeffs
    x, y = p
    return (2.0 * a * x + b * y + d, b * x + 2.0 * c * y + e)


def axis_aligned_semi_axes(conic: Conic, tol: float = CIRCLE_TOL) -> Tuple[float, float]:
    """Semi-axes (along x, along y) of an axis-parallel circle or ellipse."""
    if conic.kind not in (CIRCLE, ELLIPSE, POINT):
        raise GeometryError(f"no semi-axes for kind {conic.kind!r}")
    a, b, c, d, e, f = conic.coeffs
    if abs(b) > tol:
        raise GeometryError("conic is not axis-parallel")
    if conic.kind == POINT:
        return (0.0, 0.0)
    assert conic.center is not None
    v0 = f + 0.5 * (d * conic.center.x + e * conic.center.y)
    return (math.sqrt(-v0 / a), math.sqrt(-v0 / c))


def pencil_member(c1: Conic, c2: Conic, u: float) -> Conic:
    """Normalized combination (1-u)*C1 + u*C2 of two conics.

    Before combining, each coefficient vector is rescaled so its
    quadratic trace A + C equals 2.  For circles this reproduces the
    monic representation x^2 + y^2 + ... = 0, which pins down the
    meaning of the parameter u independently of storage normalization.
    """
    if u == 0.0:
        return c1
    if u == 1.0:
        return c2
    q1 = np.asarray(c1.coeffs, dtype=float)
    q2 = np.asarray(c2.coeffs, dtype=float)
    tr1 = q1[0] + q1[2]
    tr2 = q2[0] + q2[2]
    if abs(tr1) > 1e-12 and abs(tr2) > 1e-12:
        q1 = q1 * (2.0 / tr1)
        q2 = q2 * (2.0 / tr2)
    combo = (1.0 - u) * q1 + u * q2
    scale = max(float(np.linalg.norm(q1)), float(np.linalg.norm(q2)))
    if float(np.linalg.norm(combo)) <= 1e-12 * scale:
        raise DegeneratePencilMember(f"pencil member at u={u} vanishes")
    return Conic.from_coeffs(combo)


def conic_span_residual(target: Conic, c1: Conic, c2: Conic) -> float:
    """Distance from the target's unit 6-vector to span{C1, C2}.

    Zero means the target lies in the pencil of C1 and C2 (as a linear
    family of coefficient vectors); values near 1 mean it is far away.
    """
    basis = np.stack([np.asarray(c1.coeffs), np.asarray(c2.coeffs)], axis=1)
    q, _ = np.linalg.qr(basis)
    t = np.asarray(target.coeffs)
    proj = q @ (q.T @ t)
    return float(np.linalg.norm(t - proj))


def second_intersection(conic: Conic, p: Point, direction: Tuple[float, float]) -> Point:
    """Other intersection of the line through p (on the conic) with the conic.

    The known root at p is factored out exactly, so the result stays
    accurate even when the two intersections are close together.
    """
    a, b, c, _, _, _ = conic.coeffs
    dx, dy = direction
    q2 = a * dx * dx + b * dx * dy + c * dy * dy
    if abs(q2) < 1e-300:
        raise GeometryError("direction is asymptotic for this conic")
    gx, gy = conic_gradient(conic, p)
    t = -(gx * dx + gy * dy) / q2
    return Point(p.x + t * dx, p.y + t * dy)


def _contact_sort_key(conic: Conic, contact: Point) -> float:
    cx, cy = conic.center if conic.center is not None else (0.0, 0.0)
    return math.atan2(contact.y - cy, contact.x - cx) % (2.0 * math.pi)


def tangent_contact_points(
    p: Point, conic: Conic, boundary_tol: float = BOUNDARY_TOL
) -> Tuple[Point, Point]:
    """Contact points of the two tangents from an exterior point.

    Ordered by the polar angle of the contact point about the conic
    center, counterclockwise from the positive x-axis.
    """
    if conic.kind not in (CIRCLE, ELLIPSE):
        raise GeometryError(f"tangents undefined for kind {conic.kind!r}")
    val = conic_value(conic, p)
    if abs(val) <= boundary_tol:
        raise TangentFromBoundary(f"point {p} lies on the conic")
    if val < 0.0:
        raise NoRealTangent(f"point {p} lies inside the conic")
    a, b, c, d, e, f = conic.coeffs
    # Polar line of p: M3 @ (px, py, 1).
    la = a * p.x + 0.5 * (b * p.y + d)
    lb = 0.5 * b * p.x + c * p.y + 0.5 * e
    lc = 0.5 * (d * p.x + e * p.y) + f
    n2 = la * la + lb * lb
    if n2 < 1e-300:
        raise GeometryError("degenerate polar line")
    base = Point(-lc * la / n2, -lc * lb / n2)
    dvec = (-lb / math.sqrt(n2), la / math.sqrt(n2))
    q2 = a * dvec[0] * dvec[0] + b * dvec[0] * dvec[1] + c * dvec[1] * dvec[1]
    gx, gy = conic_gradient(conic, base)
    lin = gx * dvec[0] + gy * dvec[1]
    cst = conic_value(conic, base)
    disc = lin * lin - 4.0 * q2 * cst
    if disc < 0.0:
        raise NoRealTangent(f"polar of {p} misses the conic")
    root = math.sqrt(disc)
    # Numerically stable quadratic roots.
    if lin >= 0.0:
        s1 = (-lin - root) / (2.0 * q2)
    else:
        s1 = (-lin + root) / (2.0 * q2)
    s2 = cst / (q2 * s1) if s1 != 0.0 else (-lin) / (2.0 * q2) + root / (2.0 * q2)
    t1 = Point(base.x + s1 * dvec[0], base.y + s1 * dvec[1])
    t2 = Point(base.x + s2 * dvec[0], base.y + s2 * dvec[1])
    if _contact_sort_key(conic, t1) <= _contact_sort_key(conic, t2):
        return (t1, t2)
    return (t2, t1)


def tangent_lines_from_point(
    p: Point, conic: Conic, boundary_tol: float = BOUNDARY_TOL
) -> Tuple[Line, Line]:
    """Both tangent lines from an exterior point, deterministically ordered.

    The order follows the contact points, sorted counterclockwise by
    their polar angle about the conic center.
    """
    t1, t2 = tangent_contact_points(p, conic, boundary_tol=boundary_tol)
    return (Line.from_points(p, t1), Line.from_points(p, t2))


def circle_inverse(p: Point, circle: Conic) -> Point:
    """Inverse of p in a circle: O + R^2 (p - O) / |p - O|^2."""
    if circle.kind != CIRCLE:
        raise GeometryError(f"inversion needs a circle, got {circle.kind!r}")
    assert circle.center is not None and circle.semi_axes is not None
    ox, oy = circle.center
    radius = circle.semi_axes[0]
    dx = p.x - ox
    dy = p.y - oy
    rho2 = dx * dx + dy * dy
    if rho2 == 0.0:
        raise InversionOfCenter("cannot invert the circle center")
    k = radius * radius / rho2
    return Point(ox + k * dx, oy + k * dy)


def _monic_circle(conic: Conic) -> Tuple[float, float, float]:
    """(D, E, F) of x^2 + y^2 + D x + E y + F = 0 for a circle conic."""
    a, _, _, d, e, f = conic.coeffs
    return (d / a, e / a, f / a)


@dataclass(frozen=True)
class CirclePencil:
    """The linear family spanned by two circles."""

    c1: Conic
    c2: Conic

    def __post_init__(self) -> None:
        for member in (self.c1, self.c2):
            if member.kind != CIRCLE:
                raise GeometryError("pencil members must be circles")

    @property
    def radical_axis(self) -> Line:
        d1, e1, f1 = _monic_circle(self.c1)
        d2, e2, f2 = _monic_circle(self.c2)
        return Line.from_coefficients(d1 - d2, e1 - e2, f1 - f2)

    def member(self, u: float) -> Conic:
        return pencil_member(self.c1, self.c2, u)


def limiting_points(pencil: CirclePencil) -> Tuple[Point, Point]:
    """The two zero-radius members of a circle pencil.

    For concentric circles both limiting points coincide with the
    common center.  Intersecting circles have no real limiting points
    and raise ComplexLimitingPoints.  The result is invariant under
    swapping the pencil's two circles (points are sorted by x, then y).
    """
    o1 = pencil.c1.center
    o2 = pencil.c2.center
    assert o1 is not None and o2 is not None
    _, _, f1 = _monic_circle(pencil.c1)
    _, _, f2 = _monic_circle(pencil.c2)
    vx = o2.x - o1.x
    vy = o2.y - o1.y
    sep2 = vx * vx + vy * vy
    scale = abs(pencil.c1.semi_axes[0]) + abs(pencil.c2.semi_axes[0]) + math.hypot(o1.x, o1.y)
    if sep2 <= (1e-14 * max(scale, 1e-300)) ** 2:
        return (o1, o1)
    # radius^2 along the pencil: |(1-u) O1 + u O2|^2 - ((1-u) F1 + u F2)
    alpha = sep2
    beta = 2.0 * (o1.x * vx + o1.y * vy) - (f2 - f1)
    gamma = o1.x * o1.x + o1.y * o1.y - f1
    disc = beta * beta - 4.0 * alpha * gamma
    if disc < 0.0:
        raise ComplexLimitingPoints("circles intersect; limiting points are complex")
    root = math.sqrt(disc)
    u_lo = (-beta - root) / (2.0 * alpha)
    u_hi = (-beta + root) / (2.0 * alpha)
    pts = [
        Point(o1.x + u * vx, o1.y + u * vy)
        for u in (u_lo, u_hi)
    ]
    pts.sort()
    return (pts[0], pts[1])


def line_tangent_to_conic_residual(line: Line, conic: Conic) -> float:
    """Signed tangency defect of a line against a conic.

    For circles, ellipses, and point conics this is the support
    function minus the center distance, a length: zero means tangent,
    positive means the line cuts the conic, negative means it misses.
    Other kinds fall back to the normalized discriminant of the
    restriction of the conic to the line (same sign convention).
    """
    if conic.kind in (CIRCLE, ELLIPSE, POINT):
        assert conic.center is not None and conic.semi_axes is not None
        c0 = line.signed_distance(conic.center)
        if conic.kind == CIRCLE:
            support = conic.semi_axes[0]
        elif conic.kind == POINT:
            support = 0.0
        else:
            phi = conic.axis_angle or 0.0
            nmaj = line.a * math.cos(phi) + line.b * math.sin(phi)
            nmin = -line.a * math.sin(phi) + line.b * math.cos(phi)
            major, minor = conic.semi_axes
            support = math.sqrt((major * nmaj) ** 2 + (minor * nmin) ** 2)
        return support - abs(c0)
    # Fallback: discriminant of the quadratic along the line.
    dvec = line.direction()
    base = Point(-line.c * line.a, -line.c * line.b)
    a, b, c, _, _, _ = conic.coeffs
    q2 = a * dvec[0] * dvec[0] + b * dvec[0] * dvec[1] + c * dvec[1] * dvec[1]
    gx, gy = conic_gradient(conic, base)
    lin = gx * dvec[0] + gy * dvec[1]
    cst = conic_value(conic, base)
    disc = lin * lin - 4.0 * q2 * cst
    denom = q2 * q2 + lin * lin + cst * cst
    return disc / denom if denom > 0.0 else disc
