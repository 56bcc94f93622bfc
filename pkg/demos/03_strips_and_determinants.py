"""
Strip maps and the Schur-Cohn determinants
==========================================

For strip shears with Mobius dilatation the convolution's dilatation is
z times a cubic over its reciprocal.  Its zeros are inside the disk
exactly when the three Schur-Cohn determinants are positive.
"""

import numpy as np

import harmconv as hc
from harmconv import certify as cert

alphas = (np.pi / 2, 2 * np.pi / 3, 5 * np.pi / 6)
grid = hc.SweepGrid.uniform(0.999, n_radii=40, angles=256)

# Monomial dilatations, n = 1 and 2.
for n in (1, 2):
    rep = cert.certify_strip_monomial(n, alphas, grid)
    print(f"strip, n = {n}: max |w~| = {rep.max_modulus:.6f}")

# For n = 2 the rational function collapses to a monomial.
wt = hc.omega_tilde_strip(hc.Monomial(0.7, 2), 2 * np.pi / 3)
print("n = 2 form: prefactor", np.round(wt.prefactor, 6), "power", wt.power,
      "numerator degree", wt.numerator.degree)


def cubic(a, x):
    return hc.ComplexPolynomial([a * x + a / 2 - 0.5, a + 2 * a * x, 0.5 + 1.5 * a + x, 1.0])


# Determinants along a few (a, x = cos alpha) pairs.
for a, x in [(0.0, 0.0), (0.5, 0.0), (0.5, -0.5), (0.9, -0.9), (-0.5, -0.5)]:
    rep = hc.schur_cohn(cubic(a, x))
    m = ", ".join(f"{d:+.6f}" for d in rep.determinants)
    print(f"a = {a:+.1f}, x = {x:+.1f}: M = [{m}]  all inside: {rep.all_inside}")

# M3 is negative for a = -1/2, and the sweep agrees: the dilatation leaves the disk.
rep = cert.certify_strip_mobius([-0.5], [np.pi / 2], hc.SweepGrid.uniform(0.99))
print("a = -1/2, alpha = pi/2: max |w~| =", round(rep.max_modulus, 3), "pass" if rep.passed else "fail")
rep = cert.certify_strip_mobius([0.0, 0.25, 0.5, 0.75, 0.99], alphas, grid)
print("a in [0, 1): max |w~| =", round(rep.max_modulus, 6), "pass" if rep.passed else "fail")
