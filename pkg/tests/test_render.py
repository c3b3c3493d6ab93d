"""Deterministic SVG output for geodesic axes."""

from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest

from lamcf.errors import NotHyperbolic
from lamcf.gl2 import IntMat2, axis_of
from lamcf.render import SCALE, RenderSpec, render_axes

M = IntMat2(2, 1, 1, 1)
M2 = IntMat2(5, 2, 2, 1)
SVG_NS = "{http://www.w3.org/2000/svg}"


def spec_for(*matrices, **kw):
    base = dict(x_min=-3.0, x_max=3.0, height=2.0, stroke_width=1.5,
                matrices=tuple(matrices), orbit_depth=0)
    base.update(kw)
    return RenderSpec(**base)


def test_output_is_byte_stable():
    spec = spec_for(M, M2, orbit_depth=2)
    assert render_axes(spec) == render_axes(spec)


def test_valid_svg_document():
    svg = render_axes(spec_for(M, M2))
    root = ET.fromstring(svg)
    assert root.tag == f"{SVG_NS}svg"
    assert root.get("version") == "1.1"
    assert svg.startswith('<?xml version="1.0"')
    assert svg.endswith("\n")


def test_element_counts():
    root = ET.fromstring(render_axes(spec_for(M, M2)))
    # one baseline plus one arc per matrix
    assert len(root.findall(f"{SVG_NS}line")) == 1
    assert len(root.findall(f"{SVG_NS}path")) == 2
    root = ET.fromstring(render_axes(spec_for(M, orbit_depth=2)))
    assert len(root.findall(f"{SVG_NS}path")) == 5  # shifts -2..2


def test_arc_endpoints_match_fixed_points():
    svg = render_axes(spec_for(M))
    root = ET.fromstring(svg)
    d = root.find(f"{SVG_NS}path").get("d")
    lo, hi = axis_of(M).endpoints
    x1 = SCALE * (float(lo) - (-3.0))
    x2 = SCALE * (float(hi) - (-3.0))
    assert d.startswith(f"M {x1:.6f}")
    assert d.endswith(f"{x2:.6f} 200.000000")


def test_viewport_and_stroke_controls():
    svg = render_axes(spec_for(M, x_min=0.0, x_max=5.0, height=3.0,
                               stroke_width=0.7))
    root = ET.fromstring(svg)
    assert root.get("width") == f"{5.0 * SCALE:.6f}"
    assert root.get("height") == f"{3.0 * SCALE:.6f}"
    assert root.find(f"{SVG_NS}path").get("stroke-width") == "0.700000"


def test_orbit_translates_arcs_by_whole_units():
    base = render_axes(spec_for(M))
    shifted = render_axes(spec_for(M, orbit_depth=1))
    root = ET.fromstring(shifted)
    paths = root.findall(f"{SVG_NS}path")
    starts = sorted(float(p.get("d").split()[1]) for p in paths)
    # three copies, spaced by exactly SCALE pixels
    assert len(starts) == 3
    assert starts[1] - starts[0] == pytest.approx(SCALE)
    assert starts[2] - starts[1] == pytest.approx(SCALE)
    assert ET.fromstring(base).find(f"{SVG_NS}path").get("d") \
        == sorted((p.get("d") for p in paths),
                  key=lambda d: float(d.split()[1]))[1]


def test_rejects_non_hyperbolic_matrix():
    with pytest.raises(NotHyperbolic):
        render_axes(spec_for(IntMat2.translation(1)))


def test_spec_validation():
    with pytest.raises(ValueError):
        spec_for(M, x_min=2.0, x_max=-2.0)
    with pytest.raises(ValueError):
        spec_for(M, height=0.0)
    with pytest.raises(ValueError):
        spec_for(M, orbit_depth=-1)
    with pytest.raises(ValueError):
        spec_for()  # nothing to draw


def test_negative_zero_never_printed():
    svg = render_axes(spec_for(M, x_min=-1.0, x_max=1.0))
    assert "-0.000000" not in svg
