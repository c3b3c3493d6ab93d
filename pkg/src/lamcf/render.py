"""Deterministic SVG renderer for translation axes in the upper half-plane.

A geodesic with two finite boundary endpoints is the half-circle over
them; one with an endpoint at infinity is a vertical segment.  Output is
plain SVG 1.1 with fixed six-decimal formatting, so the same input gives
the same bytes, suitable for golden-file comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotHyperbolic
from .gl2 import INFINITY, IntMat2, axis_of

SCALE = 100.0


@dataclass(frozen=True)
class RenderSpec:
    """Viewport, stroke style, matrices, and translate-orbit depth."""

    x_min: float
    x_max: float
    height: float = 2.0
    stroke_width: float = 1.5
    matrices: tuple[IntMat2, ...] = field(default_factory=tuple)
    orbit_depth: int = 0

    def __post_init__(self):
        if not self.x_min < self.x_max:
            raise ValueError("empty viewport")
        if self.height <= 0:
            raise ValueError("viewport height must be positive")
        if self.orbit_depth < 0:
            raise ValueError("orbit depth must be nonnegative")
        if not self.matrices:
            raise ValueError("nothing to draw")


def _fmt(v: float) -> str:
    v = float(v)
    if v == 0.0:
        v = 0.0  # normalize -0.0
    return f"{v:.6f}"


def render_axes(spec: RenderSpec) -> str:
    """Render every axis (and its translate orbit) to an SVG document."""
    width = (spec.x_max - spec.x_min) * SCALE
    height = spec.height * SCALE

    def x_px(x: float) -> float:
        return (x - spec.x_min) * SCALE

    base_y = height  # the real axis sits at the bottom edge
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'  <line x1="0.000000" y1="{_fmt(base_y)}" x2="{_fmt(width)}" '
        f'y2="{_fmt(base_y)}" stroke="#888888" stroke-width="1.000000"/>',
    ]
    shift = IntMat2.translation(1)
    sw = _fmt(spec.stroke_width)
    for m in spec.matrices:
        axis = axis_of(m)  # raises NotHyperbolic before any drawing
        for j in range(-spec.orbit_depth, spec.orbit_depth + 1):
            shifted = m if j == 0 else m.conjugate_by(shift ** j)
            axis = axis_of(shifted)
            finite = [e for e in axis.endpoints if e is not INFINITY]
            if len(finite) < len(axis.endpoints):
                # vertical-line geodesic: drawn as a vertical segment
                x = x_px(float(finite[0]))
                lines.append(
                    f'  <line x1="{_fmt(x)}" y1="{_fmt(base_y)}" '
                    f'x2="{_fmt(x)}" y2="0.000000" '
                    f'stroke="#000000" stroke-width="{sw}" fill="none"/>')
                continue
            lo, hi = sorted(float(e) for e in finite)
            r = (hi - lo) / 2.0 * SCALE
            lines.append(
                f'  <path d="M {_fmt(x_px(lo))} {_fmt(base_y)} '
                f'A {_fmt(r)} {_fmt(r)} 0 0 1 {_fmt(x_px(hi))} {_fmt(base_y)}" '
                f'stroke="#000000" stroke-width="{sw}" fill="none"/>')
    lines.append('</svg>')
    return "\n".join(lines) + "\n"
