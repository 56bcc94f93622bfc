"""
Pictures of the example maps
============================

Images of concentric circles under f0, f1 and the convolutions F1, F3
are written as SVG files.  The image regions of F1, F2, F3 are then
checked numerically: the images stay clear of the excluded half-lines,
and along the level curves Im F is constant.
"""

import os
from pathlib import Path

import numpy as np

import harmconv as hc
from harmconv import certify as cert

out = Path(os.environ.get("HARMCONV_OUTPUT_DIR", Path(__file__).parent / "output"))
out.mkdir(parents=True, exist_ok=True)

radii = tuple(np.round(np.arange(1, 10) / 10, 2))
# The outer circles run off to infinity, so each picture gets a fixed window
# (xmin, xmax, ymin, ymax); without one the window is fitted to all points.
windows = {"f0": (-1, 3, -2, 2), "f1": (-1, 3, -2, 2), "F1": (-1.5, 1.5, -1, 1),
           "F3": (-1, 1.5, -1, 1.5)}
for name, window in windows.items():
    spec = hc.RenderSpec(name, circle_radii=radii + ((0.99,) if name[0] == "F" else ()),
                         rays=12, viewport=window, output_path=str(out / f"{name}.svg"))
    hc.render_map(spec)
    print("wrote", spec.output_path)

grid = hc.SweepGrid.uniform(0.99, n_radii=60, angles=512)
for which in ("F1", "F2", "F3"):
    rep = hc.region_membership(which, grid)
    print(f"{which}: clearance from excluded set {rep.value:.3e} ({'pass' if rep.passed else 'fail'})")

for which, c in (("F1", np.pi / 8), ("F2", 1.0), ("F3", 2.0)):
    rep = cert.level_curve_constancy(which, c)
    print(f"{which} level curve c = {c:.4f}: largest deviation of Im F {rep.value:.2e}")
