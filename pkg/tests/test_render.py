import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from harmconv.errors import BadParameter, EvalOutsideDisk
from harmconv.harmonic import example_map
from harmconv.render import RenderSpec, auto_viewport, image_curves, render_map

SVG = "{http://www.w3.org/2000/svg}"


def polylines(svg):
    root = ET.fromstring(svg)
    out = []
    for el in root.iter(SVG + "polyline"):
        pts = np.array([[float(v) for v in p.split(",")] for p in el.get("points").split()])
        out.append((el.get("class"), pts))
    return root, out


def winding(poly, pts):
    """Winding number of the closed polygon ``poly`` (complex) around each point."""
    d = poly[None, :] - pts[:, None]
    ang = np.angle(d[:, 1:] / d[:, :-1])
    return np.rint(ang.sum(axis=1) / (2 * np.pi)).astype(int)


def test_spec_validation():
    with pytest.raises(EvalOutsideDisk):
        RenderSpec(circle_radii=(0.5, 1.0))
    with pytest.raises(BadParameter):
        RenderSpec(samples_per_circle=10)


def test_f0_curves_nested_and_confined():
    spec = RenderSpec("f0")
    f = example_map("f0")
    curves = image_curves(f, spec)
    assert len(curves) == 9
    for c in curves:
        assert np.all(c.real > -0.5)
    for inner, outer in zip(curves[:-1], curves[1:]):
        assert np.all(winding(outer, inner[::16]) == 1)


def test_f0_svg_structure():
    root, lines = polylines(render_map(RenderSpec("f0", rays=4)))
    assert root.get("version") == "1.1"
    assert [c for c, _ in lines].count("circle") == 9
    assert [c for c, _ in lines].count("ray") == 4
    w, h = float(root.get("width")), float(root.get("height"))
    for _, pts in lines:
        assert np.all((pts >= -1e-9) & (pts <= [w + 1e-9, h + 1e-9]))


def test_identity_circle():
    spec = RenderSpec("identity", circle_radii=(0.5,), viewport=(-1, 1, -1, 1), width=200)
    _, lines = polylines(render_map(spec))
    (_, pts), = lines
    # pixel scale 100 per unit, centre at (100, 100)
    r = np.hypot(pts[:, 0] - 100, pts[:, 1] - 100)
    assert np.allclose(r, 50, atol=2e-3)


def test_deterministic(tmp_path):
    a = tmp_path / "a.svg"
    b = tmp_path / "b.svg"
    render_map(RenderSpec("F1", output_path=str(a)))
    render_map(RenderSpec("F1", output_path=str(b)))
    assert a.read_bytes() == b.read_bytes()


def test_F1_flattens_against_slits():
    spec = RenderSpec("F1", circle_radii=(0.5, 0.9, 0.99))
    curves = image_curves(example_map("F1"), spec)
    far_left = curves[-1][curves[-1].real < -0.3]
    # left of the slit tips the image is a channel |Im| < pi/8 that the curve fills out
    assert far_left.size and np.all(np.abs(far_left.imag) < math.pi / 8)
    assert np.max(np.abs(far_left.imag)) > math.pi / 8 - 0.02


def test_auto_viewport_padding():
    vp = auto_viewport([np.array([0, 1 + 2j])])
    assert np.allclose(vp, (-0.05, 1.05, -0.1, 2.1))
