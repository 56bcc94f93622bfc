"""
Shearing half-planes and strips, then convolving with f0
=========================================================

A harmonic map f = h + conj(g) is pinned down by the analytic sum h + g
(a conformal map onto a half-plane or strip) and its dilatation g'/h'.
This script builds a few such maps and looks at what convolution with the
canonical half-plane map f0 does to them.
"""

import numpy as np

import harmconv as hc

N = 256

# The canonical map: h0 = (z - z^2/2)/(1-z)^2, g0 = -(z^2/2)/(1-z)^2.
f0 = hc.canonical_f0(N)
print("f0 coefficients  h:", f0.h.coeffs[:5].real, " g:", f0.g.coeffs[:5].real)

# Every image point of f0 stays in Re w > -1/2.
ring = 0.99 * np.exp(2j * np.pi * np.arange(720) / 720)
print("min Re f0 on |z| = 0.99:", f0(ring).real.min())

# Shearing the right half-plane along w = z gives the map f1.
f1 = hc.shear(hc.RightHalfPlane(), hc.Monomial(0.0, 1), N)
print("h1 + g1 equals z/(1-z):", (f1.h + f1.g).allclose(hc.RightHalfPlane().series(N)))

# A strip of angle pi/2 sheared along w = -z^2.
f3 = hc.shear(hc.VerticalStrip(np.pi / 2), hc.Monomial(np.pi, 2), N)
print("strip target coefficients:", np.round(hc.VerticalStrip(np.pi / 2).series(6).coeffs.real, 4))

# Convolution is the coefficient-wise product of the h parts and of the g parts.
F1 = hc.convolve(f0, f1)
# With f0 it reduces to averaging F and zF'.
print("convolve vs convolve_f0 agree:", F1.h.allclose(hc.convolve_f0(f1).h, 1e-12))

# Dilatation of f0 * f1, as a series and in closed form.
series = hc.omega_tilde_general(f1)
closed = hc.omega_tilde_halfplane(hc.Monomial(0.0, 1))
z = 0.6 * np.exp(1j * np.linspace(0, 2 * np.pi, 5))
print("series vs closed form:", np.abs(series(z) - closed(z)).max())
print("closed form numerator / denominator:", closed.numerator.coeffs, closed.denominator.coeffs)

# For the strip example the quotient cancels completely and leaves z^2.
wt3 = hc.omega_tilde_general(f3)
print("f0 * f3 dilatation, first coefficients:", np.round(wt3.coeffs[:5], 12))
