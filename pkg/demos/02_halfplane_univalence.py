"""
When does f0 * f stay locally univalent?
========================================

For half-plane shears with dilatation e^{i theta} z^n the convolution
f0 * f keeps |dilatation| < 1 for n = 1, 2 and loses it from n = 3 on.
The n = 1 case reduces to locating the zeros of a quadratic, which the
Cohn reduction does in one step.
"""

import numpy as np

import harmconv as hc
from harmconv import certify as cert

grid = hc.SweepGrid.uniform(0.99, n_radii=40, angles=256)

for n in (1, 2):
    rep = cert.certify_halfplane_monomial(n, grid)
    print(f"n = {n}: max |w~| on r <= 0.99 is {rep.max_modulus:.6f}  ({'pass' if rep.passed else 'fail'})")

# For n = 2 the modulus is exactly |z|^2.
print("0.99^2 =", 0.99**2)

# Zeros of z^2 + (1/2)e^{-i theta} z + (1/2)e^{-i theta}: one Cohn step leaves a line.
theta = 1.0
e = np.exp(-1j * theta)
f = hc.ComplexPolynomial([0.5 * e, 0.5 * e, 1.0])
step = hc.cohn_reduce(f)
z0 = -step.reduced.coeffs[0] / step.reduced.coeffs[1]
print("f1 root:", z0, " expected:", 1 / 3 - 2 / 3 * e)
print("zeros inside the disk:", hc.count_zeros_in_disk(f).count)

# Mobius dilatations (z + a)/(1 + a z) are fine for every a in (-1, 1).
rep = cert.certify_halfplane_mobius([-0.99, -0.5, 0.0, 0.5, 0.99], hc.SweepGrid.uniform(0.999))
print("Mobius family, max |w~| on r <= 0.999:", round(rep.max_modulus, 6), rep.passed)

# From n = 3 on there are points where |w~| > 1.
for n in (3, 4, 5, 6):
    z0, modulus = hc.remark1_witness(n)
    print(f"n = {n}: |w~({z0.real:+.4f})| = {modulus:.4f}")

# The real-direction convexity criterion for f0 * f1.
rep = hc.convexity_in_direction(hc.example_map("F1"), 0.0, hc.SweepGrid.uniform(0.9))
print("F1 convex in the real direction on r <= 0.9:", rep.passed, " min value", round(rep.min_value, 4))
