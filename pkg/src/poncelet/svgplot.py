"""Deterministic SVG rendering of a triangle family.

One call produces a complete SVG 1.1 document showing the outer conic
(black), the prescribed caustics (brown), the free-side envelope
(dashed red), the requested center loci (green), and one sample
triangle (gray).  Identical inputs produce byte-identical output:
coordinates are formatted to fixed precision and nothing (ids,
timestamps, element order) depends on runtime state.
"""

from __future__ import annotations

import math
from typing import List, Optional, Sequence, Tuple

from .families import FamilyConfig, envelope_points
from .geom import Conic, Point
from .loci import trace_locus

__all__ = ["render_family", "DEFAULT_SIZE"]

DEFAULT_SIZE = 640
_MARGIN_FRACTION = 0.06
_SAMPLE_TRIANGLE_T = 0.4

_STYLE = """\
  <style>
    .outer { fill: none; stroke: #000000; stroke-width: 1.5; }
    .caustic { fill: none; stroke: #8b5a2b; stroke-width: 1.2; }
    .envelope { fill: none; stroke: #cc0000; stroke-width: 1.2; stroke-dasharray: 6 4; }
    .locus { fill: none; stroke: #1a7f37; stroke-width: 1.2; }
    .locus-dot { fill: #1a7f37; stroke: none; }
    .envelope-dot { fill: #cc0000; stroke: none; }
    .triangle { fill: none; stroke: #999999; stroke-width: 0.8; }
  </style>
"""


def _fmt(x: float) -> str:
    out = f"{x:.4f}"
    return "0.0000" if out == "-0.0000" else out


class _Frame:
    """World-to-pixel mapping with the y-axis flipped for SVG."""

    def __init__(self, bbox: Tuple[float, float, float, float], size: int) -> None:
        x0, y0, x1, y1 = bbox
        pad = _MARGIN_FRACTION * max(x1 - x0, y1 - y0)
        x0, y0, x1, y1 = x0 - pad, y0 - pad, x1 + pad, y1 + pad
        self.bbox = (x0, y0, x1, y1)
        self.scale = size / max(x1 - x0, y1 - y0)
        self.size = size
        self.ox = -x0 * self.scale + 0.5 * (size - (x1 - x0) * self.scale)
        self.oy = y1 * self.scale + 0.5 * (size - (y1 - y0) * self.scale)

    def to_px(self, p: Point) -> Tuple[float, float]:
        return (self.ox + p.x * self.scale, self.oy - p.y * self.scale)


def _conic_bbox(c: Conic) -> Optional[Tuple[float, float, float, float]]:
    center = c.center
    axes = c.semi_axes
    if center is None:
        return None
    if axes is None:
        return (center.x, center.y, center.x, center.y)
    rx, ry = axes
    return (center.x - rx, center.y - ry, center.x + rx, center.y + ry)


def _merge(
    box: Optional[Tuple[float, float, float, float]],
    other: Optional[Tuple[float, float, float, float]],
) -> Optional[Tuple[float, float, float, float]]:
    if other is None:
        return box
    if box is None:
        return other
    return (
        min(box[0], other[0]),
        min(box[1], other[1]),
        max(box[2], other[2]),
        max(box[3], other[3]),
    )


def _points_bbox(pts: Sequence[Point]) -> Optional[Tuple[float, float, float, float]]:
    finite = [p for p in pts if math.isfinite(p.x) and math.isfinite(p.y)]
    if not finite:
        return None
    xs = [p.x for p in finite]
    ys = [p.y for p in finite]
    return (min(xs), min(ys), max(xs), max(ys))


def _conic_element(c: Conic, css: str, frame: _Frame, label: str) -> str:
    center = c.center
    axes = c.semi_axes
    if center is None:
        return f"  <!-- {label}: not drawable -->\n"
    cx, cy = frame.to_px(center)
    if axes is None or max(axes) * frame.scale < 0.5:
        dot = "envelope-dot" if css == "envelope" else "locus-dot"
        return (
            f'  <circle class="{dot}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="2.5">'
            f"<title>{label}</title></circle>\n"
        )
    rx, ry = axes[0] * frame.scale, axes[1] * frame.scale
    if abs(rx - ry) <= 1e-9 * max(rx, ry):
        return (
            f'  <circle class="{css}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(rx)}">'
            f"<title>{label}</title></circle>\n"
        )
    return (
        f'  <ellipse class="{css}" cx="{_fmt(cx)}" cy="{_fmt(cy)}"'
        f' rx="{_fmt(rx)}" ry="{_fmt(ry)}"><title>{label}</title></ellipse>\n'
    )


def _path_runs(pts: Sequence[Optional[Point]], frame: _Frame) -> List[str]:
    """Path data strings, one per contiguous run of finite points."""
    runs: List[str] = []
    current: List[str] = []
    for p in pts:
        ok = p is not None and math.isfinite(p.x) and math.isfinite(p.y)
        if not ok:
            if len(current) > 1:
                runs.append("M " + " L ".join(current))
            current = []
            continue
        x, y = frame.to_px(p)  # type: ignore[arg-type]
        current.append(f"{_fmt(x)} {_fmt(y)}")
    if len(current) > 1:
        runs.append("M " + " L ".join(current))
    return runs


def _locus_elements(
    pts: Sequence[Optional[Point]], frame: _Frame, css: str, label: str
) -> str:
    finite = [p for p in pts if p is not None and math.isfinite(p.x) and math.isfinite(p.y)]
    if not finite:
        return f"  <!-- {label}: no drawable samples -->\n"
    spread = max(
        max(p.x for p in finite) - min(p.x for p in finite),
        max(p.y for p in finite) - min(p.y for p in finite),
    )
    if spread * frame.scale < 1.0:
        cx, cy = frame.to_px(finite[0])
        dot = "envelope-dot" if css == "envelope" else "locus-dot"
        return (
            f'  <circle class="{dot}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="2.5">'
            f"<title>{label}</title></circle>\n"
        )
    out = []
    for d in _path_runs(pts, frame):
        out.append(f'  <path class="{css}" d="{d}"><title>{label}</title></path>\n')
    return "".join(out)


def render_family(
    cfg: FamilyConfig,
    center_ids: Sequence[str] = ("X1",),
    n: int = 512,
    size: int = DEFAULT_SIZE,
    include_triangle: bool = True,
) -> str:
    """Render one family and the loci of the given tracked points."""
    outer = cfg.outer_conic()
    caustics = cfg.caustics()
    envelope = cfg.closed_form_envelope()

    loci: List[Tuple[str, List[Point]]] = []
    for cid in center_ids:
        locus = trace_locus(cfg, cid, n)
        loci.append((cid, [s.p if s.valid else None for s in locus.samples]))

    env_samples: List[Point] = []
    if envelope is None:
        ts = [2.0 * math.pi * k / max(n, 64) for k in range(max(n, 64))]
        env_samples = envelope_points(cfg.free_side_at, ts)

    tri = None
    if include_triangle:
        try:
            candidate = cfg.triangle(_SAMPLE_TRIANGLE_T)
            if candidate.valid:
                tri = candidate
        except Exception:
            tri = None

    bbox = _conic_bbox(outer)
    for c in caustics:
        bbox = _merge(bbox, _conic_bbox(c))
    if envelope is not None:
        bbox = _merge(bbox, _conic_bbox(envelope))
    else:
        bbox = _merge(bbox, _points_bbox(env_samples))
    for _, pts in loci:
        bbox = _merge(bbox, _points_bbox([p for p in pts if p is not None]))
    if tri is not None:
        bbox = _merge(bbox, _points_bbox(list(tri.vertices())))
    if bbox is None:
        raise ValueError("nothing drawable for this configuration")
    frame = _Frame(bbox, size)

    x0, y0, x1, y1 = frame.bbox
    parts: List[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1"'
        f' width="{size}" height="{size}" viewBox="0 0 {size} {size}">\n'
    )
    parts.append(
        f"  <!-- fixed viewport: world x in [{_fmt(x0)}, {_fmt(x1)}],"
        f" y in [{_fmt(y0)}, {_fmt(y1)}] mapped to {size}x{size} px,"
        f" y-axis pointing up -->\n"
    )
    parts.append(_STYLE)
    parts.append(f'  <rect width="{size}" height="{size}" fill="#ffffff"/>\n')
    parts.append(_conic_element(outer, "outer", frame, "outer conic"))
    for k, c in enumerate(caustics, start=1):
        parts.append(_conic_element(c, "caustic", frame, f"caustic {k}"))
    if envelope is not None:
        parts.append(_conic_element(envelope, "envelope", frame, "free-side envelope"))
    elif env_samples:
        parts.append(
            _locus_elements(env_samples, frame, "envelope", "free-side envelope (sampled)")
        )
    if tri is not None:
        p1, p2, p3 = (frame.to_px(v) for v in tri.vertices())
        parts.append(
            f'  <path class="triangle" d="M {_fmt(p1[0])} {_fmt(p1[1])}'
            f" L {_fmt(p2[0])} {_fmt(p2[1])} L {_fmt(p3[0])} {_fmt(p3[1])} Z\">"
            f"<title>triangle at t={_SAMPLE_TRIANGLE_T}</title></path>\n"
        )
    for cid, pts in loci:
        parts.append(_locus_elements(pts, frame, "locus", f"locus of {cid}"))
    parts.append("</svg>\n")
    return "".join(parts)
