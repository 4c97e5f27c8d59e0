"""Locus tracing, implicit curve fitting, classification, and convexity.

A locus is the path swept by a tracked point (triangle center, excenter,
or vertex) as the driving angle t of a triangle family sweeps [0, 2pi).
Classification runs a verdict ladder: stationary point, then conic
(circle/ellipse), then algebraic curves of increasing degree, and
finally "nonconic" when nothing of degree <= max_degree fits.

Fits are total-least-squares implicit fits: the sample coordinates are
centered and scaled to unit RMS radius, a design matrix over all
monomials up to the requested degree is assembled, and the smallest
right singular vector gives the coefficient vector; the residual is
the smallest singular value over sqrt(n), i.e. the RMS of the
normalized implicit values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from . import centers as _centers
from .families import BicentricParams, FamilyConfig, Triangle
from .geom import (
    ConicClass,
    GeometryError,
    Point,
    classify_conic,
    _unit_coeffs,
)

__all__ = [
    "InsufficientSamples",
    "NoConvexityRoot",
    "Tolerances",
    "DEFAULT_TOLERANCES",
    "LocusSample",
    "Locus",
    "CurveFit",
    "TRACKED_IDS",
    "tracked_point",
    "trace_locus",
    "monomial_exponents",
    "fit_curve",
    "classify_locus",
    "verdict_letter",
    "stationarity_spread",
    "convexity_check",
    "convexity_quintic_coeffs",
    "convexity_lambda_root",
    "sextic_coefficients_x2",
    "sextic_coefficients_x2_weighted",
    "verify_implicit_sextic_x2",
]


class InsufficientSamples(GeometryError):
    """Fewer valid samples than the operation requires."""


class NoConvexityRoot(GeometryError):
    """The convexity-transition quintic has no qualifying root."""


MIN_VALID_SAMPLES = 32


@dataclass(frozen=True)
class Tolerances:
    """Classification thresholds, all in normalized coordinates.

    ``elbow_factor`` guards the degree ladder against spurious
    approximants: a degree is only accepted when the next degree no
    longer improves the residual by more than this factor.  Fits of a
    sampled curve whose true degree is higher keep improving by orders
    of magnitude per degree; at the true degree the residual flattens
    out at the numerical floor."""

    point_tol: float = 1e-8
    conic_tol: float = 1e-7
    curve_tol: float = 1e-6
    max_degree: int = 8
    elbow_factor: float = 1e-2


DEFAULT_TOLERANCES = Tolerances()


class LocusSample(NamedTuple):
    t: float
    p: Point
    valid: bool


@dataclass(frozen=True)
class Locus:
    family: FamilyConfig
    tracked: str
    samples: Tuple[LocusSample, ...]

    def valid_points(self) -> List[Point]:
        return [s.p for s in self.samples if s.valid]


@dataclass(frozen=True)
class CurveFit:
    """Result of an implicit fit and/or classification.

    ``coeffs`` are unit-norm monomial coefficients in the normalized
    frame x_n = (x - shift)/scale (monomial order per
    monomial_exponents).  For degree-2 fits, ``conic`` holds the
    classification mapped back to the original frame and
    ``conic_coeffs`` the original-frame implicit 6-vector
    (x^2, xy, y^2, x, y, 1), unit-normalized.
    """

    degree: int
    coeffs: Tuple[float, ...]
    residual: float
    verdict: str
    spread: float = math.inf
    conic: Optional[ConicClass] = None
    conic_coeffs: Optional[Tuple[float, ...]] = None
    ambiguous: bool = False
    shift: Tuple[float, float] = (0.0, 0.0)
    scale: float = 1.0


# Tracked-point identifiers: vertices, excenters, or center ids like "X9".
TRACKED_IDS = ("P1", "P2", "P3", "P1'", "P2'", "P3'")

_EXCENTER_ALIASES = {
    "P1'": 0, "P2'": 1, "P3'": 2,
    "P1p": 0, "P2p": 1, "P3p": 2,
}


def tracked_point(tri: Triangle, tracked: str) -> Point:
    """Resolve a tracked-point identifier on one triangle."""
    if tracked == "P1":
        return tri.p1
    if tracked == "P2":
        return tri.p2
    if tracked == "P3":
        return tri.p3
    if tracked in _EXCENTER_ALIASES:
        return _centers.excenters(tri).vertices()[_EXCENTER_ALIASES[tracked]]
    return _centers.center(tri, tracked)


def trace_locus(
    cfg: FamilyConfig, tracked: str, n: int = 512, min_valid: Optional[int] = None
) -> Locus:
    """Trace a tracked point over n uniformly spaced driving angles.

    Family configurations where some angles are inadmissible (vertex
    inside a caustic, degenerate triangle) yield invalid samples, which
    are kept in place — marked — so the t-grid stays uniform.

    ``min_valid`` defaults to the floor classification needs; pass a
    smaller value when the samples are only being printed or plotted.
    """
    need = MIN_VALID_SAMPLES if min_valid is None else min_valid
    if n < need:
        raise InsufficientSamples(f"need at least {need} samples, got {n}")
    samples: List[LocusSample] = []
    nan = float("nan")
    for k in range(n):
        t = 2.0 * math.pi * k / n
        try:
            tri = cfg.triangle(t)
            p = tracked_point(tri, tracked)
        except GeometryError:
            samples.append(LocusSample(t, Point(nan, nan), False))
            continue
        if math.isfinite(p.x) and math.isfinite(p.y):
            samples.append(LocusSample(t, p, True))
        else:
            samples.append(LocusSample(t, Point(nan, nan), False))
    locus = Locus(cfg, tracked, tuple(samples))
    if len(locus.valid_points()) < need:
        raise InsufficientSamples(
            f"only {len(locus.valid_points())} valid samples for {tracked}"
        )
    return locus


def monomial_exponents(degree: int) -> List[Tuple[int, int]]:
    """(i, j) exponent pairs of all monomials x^i y^j with i+j <= degree,
    graded by total degree, x-dominant first within each grade."""
    out: List[Tuple[int, int]] = []
    for d in range(degree + 1):
        for i in range(d, -1, -1):
            out.append((i, d - i))
    return out


def _normalize_samples(pts: Sequence[Point]) -> Tuple[np.ndarray, Tuple[float, float], float]:
    arr = np.asarray([(p.x, p.y) for p in pts], dtype=float)
    cx, cy = arr.mean(axis=0)
    centered = arr - (cx, cy)
    s = math.sqrt(float(np.mean(centered[:, 0] ** 2 + centered[:, 1] ** 2)))
    if s <= 0.0:
        s = 1.0
    return centered / s, (float(cx), float(cy)), s


def _denormalized_conic(coeffs: Sequence[float], shift: Tuple[float, float], s: float) -> Tuple[float, ...]:
    """Map a degree-2 coefficient vector from the normalized frame back
    to original coordinates, as a unit 6-vector (x^2, xy, y^2, x, y, 1)."""
    # normalized monomial order: 1, x, y, x^2, xy, y^2
    f0, d0, e0, a0, b0, c0 = coeffs
    cx, cy = shift
    s2 = s * s
    a = a0 / s2
    b = b0 / s2
    c = c0 / s2
    d = d0 / s - (2.0 * a0 * cx + b0 * cy) / s2
    e = e0 / s - (b0 * cx + 2.0 * c0 * cy) / s2
    f = (
        f0
        - (d0 * cx + e0 * cy) / s
        + (a0 * cx * cx + b0 * cx * cy + c0 * cy * cy) / s2
    )
    return _unit_coeffs((a, b, c, d, e, f))


def fit_curve(
    samples: Sequence[Point],
    degree: int,
    tols: Tolerances = DEFAULT_TOLERANCES,
) -> CurveFit:
    """Fit one implicit algebraic curve of the given total degree.

    Requires at least twice as many samples as monomials.  The verdict
    is "circle"/"ellipse" only for degree-2 fits that meet conic_tol
    and classify accordingly; otherwise "algebraic".
    """
    exps = monomial_exponents(degree)
    if len(samples) < 2 * len(exps):
        raise InsufficientSamples(
            f"degree {degree} needs >= {2 * len(exps)} samples, got {len(samples)}"
        )
    norm, shift, s = _normalize_samples(samples)
    x = norm[:, 0]
    y = norm[:, 1]
    design = np.column_stack([x ** i * y ** j for (i, j) in exps])
    _, sigma, vt = np.linalg.svd(design, full_matrices=False)
    coeffs = vt[-1]
    for c in coeffs:
        if abs(c) > 1e-12:
            if c < 0.0:
                coeffs = -coeffs
            break
    n = len(samples)
    residual = float(sigma[-1]) / math.sqrt(n)
    ambiguous = bool(len(sigma) >= 2 and sigma[-2] <= 1e-7 * sigma[0])

    verdict = "algebraic"
    conic = None
    conic_coeffs = None
    if degree == 2:
        conic_coeffs = _denormalized_conic(coeffs, shift, s)
        conic = classify_conic(conic_coeffs)
        if residual <= tols.conic_tol and conic.kind in ("circle", "ellipse"):
            verdict = conic.kind
    return CurveFit(
        degree=degree,
        coeffs=tuple(float(c) for c in coeffs),
        residual=residual,
        verdict=verdict,
        conic=conic,
        conic_coeffs=conic_coeffs,
        ambiguous=ambiguous,
        shift=shift,
        scale=s,
    )


def stationarity_spread(locus: Locus) -> float:
    """Max pairwise distance of valid samples over the outer-conic scale."""
    pts = locus.valid_points()
    if not pts:
        return math.inf
    arr = np.asarray([(p.x, p.y) for p in pts])
    dx = arr[:, 0:1] - arr[:, 0:1].T
    dy = arr[:, 1:2] - arr[:, 1:2].T
    return float(np.sqrt(dx * dx + dy * dy).max()) / locus.family.outer_scale


def _spread_of(pts: Sequence[Point]) -> float:
    arr = np.asarray([(p.x, p.y) for p in pts])
    dx = arr[:, 0:1] - arr[:, 0:1].T
    dy = arr[:, 1:2] - arr[:, 1:2].T
    return float(np.sqrt(dx * dx + dy * dy).max())


def classify_locus(locus: Locus, tols: Tolerances = DEFAULT_TOLERANCES) -> CurveFit:
    """Verdict ladder: point, conic, smallest adequate degree, nonconic."""
    pts = locus.valid_points()
    if len(pts) < MIN_VALID_SAMPLES:
        raise InsufficientSamples(f"{len(pts)} valid samples")
    scale = locus.family.outer_scale
    spread = _spread_of(pts) / scale
    if spread <= tols.point_tol:
        return CurveFit(
            degree=1,
            coeffs=(),
            residual=0.0,
            verdict="point",
            spread=spread,
            shift=(pts[0].x, pts[0].y),
        )
    quad = fit_curve(pts, 2, tols)
    if quad.verdict in ("circle", "ellipse"):
        return CurveFit(
            degree=2,
            coeffs=quad.coeffs,
            residual=quad.residual,
            verdict=quad.verdict,
            spread=spread,
            conic=quad.conic,
            conic_coeffs=quad.conic_coeffs,
            ambiguous=quad.ambiguous,
            shift=quad.shift,
            scale=quad.scale,
        )
    fits = {2: quad}

    def fit_at(degree: int) -> CurveFit:
        if degree not in fits:
            fits[degree] = fit_curve(pts, degree, tols)
        return fits[degree]

    best = quad
    for degree in range(3, tols.max_degree + 1):
        fit = fit_at(degree)
        if fit.residual <= tols.curve_tol:
            # Elbow check: accept only once the next degree stops
            # improving dramatically; a residual that keeps dropping by
            # orders of magnitude marks an approximant of a
            # higher-degree curve, not a genuine vanishing.
            if degree < tols.max_degree and fit.residual > 0.0:
                nxt = fit_at(degree + 1)
                if nxt.residual < tols.elbow_factor * fit.residual:
                    best = fit
                    continue
            return CurveFit(
                degree=degree,
                coeffs=fit.coeffs,
                residual=fit.residual,
                verdict="algebraic",
                spread=spread,
                ambiguous=fit.ambiguous,
                shift=fit.shift,
                scale=fit.scale,
            )
        best = fit
    return CurveFit(
        degree=best.degree,
        coeffs=best.coeffs,
        residual=best.residual,
        verdict="nonconic",
        spread=spread,
        ambiguous=best.ambiguous,
        shift=best.shift,
        scale=best.scale,
    )


def verdict_letter(fit: CurveFit) -> str:
    """Compact table letter: P, C, E, the degree digit, or N."""
    if fit.verdict == "point":
        return "P"
    if fit.verdict == "circle":
        return "C"
    if fit.verdict == "ellipse":
        return "E"
    if fit.verdict == "algebraic":
        return str(fit.degree)
    return "N"


def convexity_check(points: Sequence[Point], tol: float = 1e-12) -> bool:
    """Whether an ordered closed sample loop is convex.

    Computes the cross product of consecutive edge vectors around the
    loop, normalized by the edge lengths; convex iff all signs agree.
    Normalized turn values within ``tol`` of zero are ignored, as are
    zero-length edges (repeated samples).
    """
    pts = [p for p in points]
    if len(pts) >= 2 and math.dist(pts[0], pts[-1]) == 0.0:
        pts = pts[:-1]
    n = len(pts)
    if n < 3:
        return True
    edges = []
    for i in range(n):
        q = pts[(i + 1) % n]
        p = pts[i]
        ex, ey = q.x - p.x, q.y - p.y
        norm = math.hypot(ex, ey)
        if norm > 0.0:
            edges.append((ex / norm, ey / norm))
    m = len(edges)
    if m < 3:
        return True
    has_pos = has_neg = False
    for i in range(m):
        ax, ay = edges[i]
        bx, by = edges[(i + 1) % m]
        cross = ax * by - ay * bx
        if cross > tol:
            has_pos = True
        elif cross < -tol:
            has_neg = True
        if has_pos and has_neg:
            return False
    return True


def convexity_quintic_coeffs(a: float, b: float) -> Tuple[float, ...]:
    """Coefficients (highest power first) of the degree-5 polynomial in
    the caustic parameter whose qualifying root marks the convexity
    transition of the incenter locus."""
    a2 = a * a
    b2 = b * b
    c2 = a2 - b2
    return (
        c2 ** 4,
        b2 * (3.0 * a2 * a2 - 2.0 * a2 * b2 + 3.0 * b2 * b2) * c2 * c2,
        2.0 * a2 * b2 * b2 * (a2 * a2 + 5.0 * a2 * b2 - 2.0 * b2 * b2) * c2,
        2.0 * a2 * a2 * b2 ** 3 * (a2 * a2 + b2 * b2),
        -(a2 ** 3) * (b2 ** 4) * (11.0 * a2 - 4.0 * b2),
        3.0 * (a2 ** 4) * (b2 ** 5),
    )


def convexity_lambda_root(a: float, b: float) -> float:
    """The caustic parameter at which the conf-II incenter locus stops
    being convex: the smallest positive real root of the transition
    quintic.

    The quintic typically has three real roots; the traced loci are
    convex for every caustic parameter below the smallest positive one
    and lose convexity just above it, so that root is the transition
    edge.  (Larger real roots fall in a region where sampled convexity
    is unstable and match no observed edge; selecting by an upper
    bound such as a^2 would pick one of those.)  The parameter scales
    as length^2 — scaling (a, b) by k scales every root by k^2, which
    the quintic's homogeneity confirms.
    """
    if not a > b > 0.0:
        raise ValueError("need a > b > 0")
    coeffs = convexity_quintic_coeffs(a, b)
    roots = np.roots(coeffs)
    candidates = []
    for z in roots:
        if abs(z.imag) <= 1e-9 * (1.0 + abs(z)):
            lam = float(z.real)
            # one Newton polish step on the real quintic
            p = np.polyval(coeffs, lam)
            dp = np.polyval(np.polyder(np.asarray(coeffs)), lam)
            if dp != 0.0:
                lam -= p / dp
            if lam > 0.0:
                candidates.append(lam)
    if not candidates:
        raise NoConvexityRoot(f"transition quintic has no positive real root for a={a}, b={b}")
    return float(min(candidates))


def sextic_coefficients_x2(p: BicentricParams) -> dict:
    """Monomial coefficients {(i, j): c} of the degree-6 implicit
    polynomial vanishing on the barycenter locus of the two-caustic
    circle family, in the canonical frame (outer center at the origin,
    inner center at (d, 0)).

    Obtained by eliminating the driving vertex from the closed-form
    barycenter parametrization; normalized so the leading form is
    729 (x^2 + y^2)^3.  Coefficients are rational in (R, r, d) with
    powers of w = R^2 - d^2 in the denominators (w > 0 for any valid
    parameter set)."""
    R, r, d = p.R, p.r, p.d
    R2, d2, r2 = R * R, d * d, r * r
    R4, d4, r4 = R2 * R2, d2 * d2, r2 * r2
    R6, d6, r6 = R4 * R2, d4 * d2, r4 * r2
    R8, d8 = R4 * R4, d4 * d4
    R10, d10 = R8 * R2, d8 * d2
    w = R2 - d2
    w2, w3 = w * w, w * w * w
    w4 = w2 * w2

    c: dict = {}

    def add(i: int, j: int, v: float) -> None:
        if v != 0.0:
            c[(i, j)] = c.get((i, j), 0.0) + v

    # 729 (x^2+y^2)^3
    add(6, 0, 729.0)
    add(4, 2, 3 * 729.0)
    add(2, 4, 3 * 729.0)
    add(0, 6, 729.0)

    # -1944 d (w^2 + 2 R^2 r^2) / w^2 * x (x^2+y^2)^2
    k5 = w2 + 2.0 * R2 * r2
    add(5, 0, -1944.0 * d * k5 / w2)
    add(3, 2, -3888.0 * d * k5 / w2)
    add(1, 4, -1944.0 * d * k5 / w2)

    q40 = (R6 - 24.0 * R4 * d2 - 8.0 * R4 * r2 + 45.0 * R2 * d4
           - 144.0 * R2 * d2 * r2 + 16.0 * R2 * r4 - 22.0 * d6
           + 8.0 * d4 * r2)
    add(4, 0, -81.0 * q40 / w2)

    q22 = (R10 - 16.0 * R8 * d2 - 8.0 * R8 * r2 + 54.0 * R6 * d4
           - 80.0 * R6 * d2 * r2 + 16.0 * R6 * r4 - 76.0 * R4 * d6
           + 192.0 * R4 * d4 * r2 + 49.0 * R2 * d8 - 112.0 * R2 * d6 * r2
           + 16.0 * R2 * d4 * r4 - 12.0 * d10 + 8.0 * d8 * r2)
    add(2, 2, -162.0 * q22 / w4)

    q04 = (R10 - 6.0 * R8 * d2 - 8.0 * R8 * r2 + 14.0 * R6 * d4
           - 32.0 * R6 * d2 * r2 + 16.0 * R6 * r4 - 16.0 * R4 * d6
           + 96.0 * R4 * d4 * r2 + 32.0 * R4 * d2 * r4 + 9.0 * R2 * d8
           - 64.0 * R2 * d6 * r2 + 16.0 * R2 * d4 * r4 - 2.0 * d10
           + 8.0 * d8 * r2)
    add(0, 4, -81.0 * q04 / w4)

    q30 = (-R8 + 6.0 * R6 * d2 + 8.0 * R6 * r2 - 12.0 * R4 * d4
           + 48.0 * R4 * d2 * r2 - 16.0 * R4 * r4 + 10.0 * R2 * d6
           - 60.0 * R2 * d4 * r2 + 32.0 * R2 * d2 * r4 - 3.0 * d8
           + 4.0 * d6 * r2)
    add(3, 0, -216.0 * d * q30 / w3)

    q12 = (R10 - 5.0 * R8 * d2 - 8.0 * R8 * r2 + 10.0 * R6 * d4
           - 24.0 * R6 * d2 * r2 + 16.0 * R6 * r4 - 10.0 * R4 * d6
           + 76.0 * R4 * d4 * r2 - 16.0 * R4 * d2 * r4 + 5.0 * R2 * d8
           - 48.0 * R2 * d6 * r2 + 32.0 * R2 * d4 * r4 - d10
           + 4.0 * d8 * r2)
    add(1, 2, 216.0 * d * q12 / w4)

    q20 = (22.0 * R8 - 75.0 * R6 * d2 - 168.0 * R6 * r2 + 93.0 * R4 * d4
           - 424.0 * R4 * d2 * r2 + 288.0 * R4 * r4 - 49.0 * R2 * d6
           + 616.0 * R2 * d4 * r2 - 944.0 * R2 * d2 * r4 + 128.0 * R2 * r6
           + 9.0 * d8 - 24.0 * d6 * r2 + 16.0 * d4 * r4)
    add(2, 0, -9.0 * d2 * q20 / w3)

    q02 = (-10.0 * R10 + 41.0 * R8 * d2 + 88.0 * R8 * r2 - 64.0 * R6 * d4
           - 64.0 * R6 * d2 * r2 - 224.0 * R6 * r4 + 46.0 * R4 * d6
           - 144.0 * R4 * d4 * r2 + 336.0 * R4 * d2 * r4 + 128.0 * R4 * r6
           - 14.0 * R2 * d8 + 128.0 * R2 * d6 * r2 - 320.0 * R2 * d4 * r4
           + 128.0 * R2 * d2 * r6 + d10 - 8.0 * d8 * r2 + 16.0 * d6 * r4)
    add(0, 2, 9.0 * d2 * q02 / w4)

    q10 = (-R6 + 3.0 * R4 * d2 + 8.0 * R4 * r2 - 3.0 * R2 * d4
           + 6.0 * R2 * d2 * r2 - 16.0 * R2 * r4 + d6 - 14.0 * d4 * r2
           + 24.0 * d2 * r4)
    add(1, 0, -24.0 * R2 * d2 * d * (3.0 * w + 4.0 * r2) * q10 / w4)

    add(0, 0, -R2 * d4
        * ((R + d) ** 2 - 4.0 * r2)
        * ((R - d) ** 2 - 4.0 * r2)
        * (3.0 * w + 4.0 * r2) ** 2 / w4)
    return c


def sextic_coefficients_x2_weighted(p: BicentricParams) -> dict:
    """Monomial coefficients {(i, j): c} of the degree-6 implicit
    polynomial vanishing on the companion curve swept by the barycenter
    scaled by its own chord-map weight: the point X2(t) * s(t) with
    s(t) = R^2 + d^2 - 2 d x1(t), the squared distance from the driving
    vertex to the inner-circle center.

    Same leading form 729 (x^2 + y^2)^3 as the plain barycenter sextic,
    but all lower-order coefficients differ; the weighted curve is a
    genuinely different sextic from the barycenter locus itself."""
    R, r, d = p.R, p.r, p.d
    R2, d2, r2 = R * R, d * d, r * r
    R4, d4, r4 = R2 * R2, d2 * d2, r2 * r2
    R6, d6, r6 = R4 * R2, d4 * d2, r4 * r2
    R8, d8, r8 = R4 * R4, d4 * d4, r4 * r4
    R10 = R8 * R2

    c: dict = {}

    def add(i: int, j: int, v: float) -> None:
        if v != 0.0:
            c[(i, j)] = c.get((i, j), 0.0) + v

    # 729 (x^2+y^2)^3
    add(6, 0, 729.0)
    add(4, 2, 3 * 729.0)
    add(2, 4, 3 * 729.0)
    add(0, 6, 729.0)

    # -972 d x (x^2+y^2) ((4R^2-3d^2-4r^2) x^2 + (4R^2+5d^2-4r^2) y^2)
    kx = 4.0 * R2 - 3.0 * d2 - 4.0 * r2
    ky = 4.0 * R2 + 5.0 * d2 - 4.0 * r2
    add(5, 0, -972.0 * d * kx)
    add(3, 2, -972.0 * d * (kx + ky))
    add(1, 4, -972.0 * d * ky)

    # -81 (x^2+y^2) (Kx x^2 + Ky y^2)
    Kx = (R6 - 86.0 * R4 * d2 - 8.0 * R4 * r2 + 121.0 * R2 * d4
          + 128.0 * R2 * d2 * r2 + 16.0 * R2 * r4 - 36.0 * d6
          - 72.0 * d4 * r2 - 96.0 * d2 * r4)
    Ky = (R6 - 42.0 * R4 * d2 - 8.0 * R4 * r2 - 63.0 * R2 * d4
          + 128.0 * R2 * d2 * r2 + 16.0 * R2 * r4 - 4.0 * d6
          + 24.0 * d4 * r2 - 32.0 * d2 * r4)
    add(4, 0, -81.0 * Kx)
    add(2, 2, -81.0 * (Kx + Ky))
    add(0, 4, -81.0 * Ky)

    # +108 d x (Lx x^2 + Ly y^2)
    Lx = (3.0 * R8 - 45.0 * R6 * d2 - 28.0 * R6 * r2 + 81.0 * R4 * d4
          + 44.0 * R4 * d2 * r2 + 80.0 * R4 * r4 - 39.0 * R2 * d6
          + 20.0 * R2 * d4 * r2 - 112.0 * R2 * d2 * r4 - 64.0 * R2 * r6
          - 36.0 * d6 * r2 + 64.0 * d2 * r6)
    Ly = (3.0 * R8 - 45.0 * R6 * d2 - 28.0 * R6 * r2 + 81.0 * R4 * d4
          + 76.0 * R4 * d2 * r2 + 80.0 * R4 * r4 - 39.0 * R2 * d6
          - 44.0 * R2 * d4 * r2 + 16.0 * R2 * d2 * r4 - 64.0 * R2 * r6
          - 4.0 * d6 * r2 + 64.0 * d2 * r6)
    add(3, 0, 108.0 * d * Lx)
    add(1, 2, 108.0 * d * Ly)

    # -36 d^2 (Mx x^2 + My y^2)
    Mx = (9.0 * R10 - 36.0 * R8 * d2 - 90.0 * R8 * r2 + 54.0 * R6 * d4
          - 18.0 * R6 * d2 * r2 + 312.0 * R6 * r4 - 36.0 * R4 * d6
          + 306.0 * R4 * d4 * r2 - 372.0 * R4 * d2 * r4 - 480.0 * R4 * r6
          + 9.0 * R2 * d8 - 198.0 * R2 * d6 * r2 + 96.0 * R2 * d4 * r4
          + 256.0 * R2 * d2 * r6 + 384.0 * R2 * r8 - 36.0 * d6 * r4
          + 96.0 * d4 * r6 - 64.0 * d2 * r8)
    My = (9.0 * R10 - 36.0 * R8 * d2 - 102.0 * R8 * r2 + 54.0 * R6 * d4
          + 126.0 * R6 * d2 * r2 + 392.0 * R6 * r4 - 36.0 * R4 * d6
          + 54.0 * R4 * d4 * r2 - 116.0 * R4 * d2 * r4 - 544.0 * R4 * r6
          + 9.0 * R2 * d8 - 78.0 * R2 * d6 * r2 + 160.0 * R2 * d4 * r4
          + 128.0 * R2 * r8 - 4.0 * d6 * r4 + 32.0 * d4 * r6 - 64.0 * d2 * r8)
    add(2, 0, -36.0 * d2 * Mx)
    add(0, 2, -36.0 * d2 * My)

    # +48 R^2 d^3 r^2 (3R^2-3d^2+4r^2) Q x
    Q = (3.0 * R6 - 9.0 * R4 * d2 - 28.0 * R4 * r2 + 9.0 * R2 * d4
         - 4.0 * R2 * d2 * r2 + 80.0 * R2 * r4 - 3.0 * d6
         + 32.0 * d4 * r2 - 32.0 * d2 * r4 - 64.0 * r6)
    add(1, 0, 48.0 * R2 * d2 * d * r2 * (3.0 * R2 - 3.0 * d2 + 4.0 * r2) * Q)

    # -16 R^2 d^4 r^4 ((R+d)^2-4r^2) ((R-d)^2-4r^2) (3R^2-3d^2+4r^2)^2
    add(0, 0, -16.0 * R2 * d4 * r4
        * ((R + d) ** 2 - 4.0 * r2)
        * ((R - d) ** 2 - 4.0 * r2)
        * (3.0 * R2 - 3.0 * d2 + 4.0 * r2) ** 2)
    return c


def verify_implicit_sextic_x2(p: BicentricParams, locus: Locus) -> float:
    """Max absolute value of the degree-6 implicit polynomial over the
    barycenter locus samples, normalized by the coefficient norm and
    the sixth power of the sample scale."""
    coeffs = sextic_coefficients_x2(p)
    pts = locus.valid_points()
    if not pts:
        raise InsufficientSamples("no valid samples")
    norm = math.sqrt(math.fsum(v * v for v in coeffs.values()))
    scale = max(max(abs(q.x), abs(q.y)) for q in pts)
    scale = max(scale, 1e-300)
    worst = 0.0
    items = sorted(coeffs.items())
    for q in pts:
        val = math.fsum(v * q.x ** i * q.y ** j for (i, j), v in items)
        worst = max(worst, abs(val))
    return worst / (norm * scale ** 6)
