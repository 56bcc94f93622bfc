"""SVG images of concentric circles (and optional radii) under a harmonic map."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence, Tuple

import numpy as np

from .errors import BadParameter, EvalOutsideDisk
from .harmonic import HarmonicMap, example_map

Viewport = Tuple[float, float, float, float]  # xmin, xmax, ymin, ymax


@dataclass(frozen=True)
class RenderSpec:
    map_name: str = "f0"
    circle_radii: Sequence[float] = tuple(np.round(np.arange(1, 10) / 10, 10))
    rays: int = 0
    samples_per_circle: int = 512
    viewport: Optional[Viewport] = None
    output_path: Optional[str] = None
    width: int = 600
    order: int = 256

    def __post_init__(self):
        if any(not 0 < r < 1 for r in self.circle_radii):
            raise EvalOutsideDisk("circle radii must lie in (0, 1)")
        if self.samples_per_circle < 64:
            raise BadParameter("need at least 64 samples per circle")


def image_curves(f: HarmonicMap, spec: RenderSpec):
    """Image polylines: one per circle, then one per ray."""
    t = 2 * np.pi * np.arange(spec.samples_per_circle + 1) / spec.samples_per_circle
    r_top = max(spec.circle_radii)
    curves = [f(r * np.exp(1j * t), r_max=r_top) for r in spec.circle_radii]
    if spec.rays:
        s = np.linspace(0.0, r_top, 64)
        for k in range(spec.rays):
            curves.append(f(s * np.exp(2j * np.pi * k / spec.rays), r_max=r_top))
    return curves


def auto_viewport(curves, pad: float = 0.05) -> Viewport:
    pts = np.concatenate(curves)
    pts = pts[np.isfinite(pts)]
    x0, x1 = pts.real.min(), pts.real.max()
    y0, y1 = pts.imag.min(), pts.imag.max()
    dx = max(x1 - x0, 1e-9) * pad
    dy = max(y1 - y0, 1e-9) * pad
    return (x0 - dx, x1 + dx, y0 - dy, y1 + dy)


def render_curves(curves, viewport: Viewport, width: int = 600, n_circles: int = None) -> str:
    xmin, xmax, ymin, ymax = viewport
    # ``width`` bounds the longer side of the picture
    scale = width / max(xmax - xmin, ymax - ymin)
    height = max(1, int(round((ymax - ymin) * scale)))
    width = max(1, int(round((xmax - xmin) * scale)))

    def pix(w):
        return (w.real - xmin) * scale, (ymax - w.imag) * scale

    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    # coordinate axes when visible
    if xmin < 0 < xmax:
        x, _ = pix(0j)
        lines.append(f'<line x1="{x:.3f}" y1="0" x2="{x:.3f}" y2="{height}" stroke="#bbbbbb" stroke-width="0.5"/>')
    if ymin < 0 < ymax:
        _, y = pix(0j)
        lines.append(f'<line x1="0" y1="{y:.3f}" x2="{width}" y2="{y:.3f}" stroke="#bbbbbb" stroke-width="0.5"/>')
    n_circles = len(curves) if n_circles is None else n_circles
    for i, c in enumerate(curves):
        c = c[np.isfinite(c)]
        x, y = pix(c)
        pts = " ".join(f"{a:.3f},{b:.3f}" for a, b in zip(x, y))
        cls = "circle" if i < n_circles else "ray"
        color = "#1f4e9c" if cls == "circle" else "#b0412e"
        lines.append(f'<polyline class="{cls}" fill="none" stroke="{color}" stroke-width="1" points="{pts}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_map(spec: RenderSpec, f: HarmonicMap = None) -> str:
    """Render ``spec``; the map is looked up by name unless given explicitly."""
    if f is None:
        f = example_map(spec.map_name, spec.order)
    curves = image_curves(f, spec)
    viewport = spec.viewport or auto_viewport(curves)
    svg = render_curves(curves, viewport, spec.width, n_circles=len(spec.circle_radii))
    if spec.output_path:
        Path(spec.output_path).write_text(svg)
    return svg
