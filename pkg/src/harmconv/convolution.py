"""Harmonic (Hadamard) convolution and the dilatation of f0 * f.

For f = h + conj(g), convolving with f0 acts as
``h0 * F = (F + z F') / 2`` and ``g0 * F = (F - z F') / 2``, so the
dilatation of f0 * f is ``-z g'' / (2 h' + z h'')`` for any f.  For
monomial and Mobius dilatations over half-plane and strip targets this
reduces to ``prefactor * z**m * q(z) / q*(z)`` with a self-inversive
quotient, which is what :class:`RationalDilatation` stores.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadAlpha, DenominatorVanishes, UnsupportedVariant
from .harmonic import HarmonicMap, Mobius, Monomial
from .series import TAU_ZERO, ComplexPolynomial, TaylorSeries
from .zerocheck import reciprocal_adjoint


@dataclass(frozen=True)
class RationalDilatation:
    """omega(z) = prefactor * z**power * numerator(z) / denominator(z)."""

    prefactor: complex
    power: int
    numerator: ComplexPolynomial
    denominator: ComplexPolynomial

    def __post_init__(self):
        if abs(self.denominator.coeffs[0]) <= TAU_ZERO:
            raise DenominatorVanishes("denominator vanishes at the origin")

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return self.prefactor * z**self.power * self.numerator(z) / self.denominator(z)

    def is_self_inversive(self, atol: float = 1e-12) -> bool:
        return reciprocal_adjoint(self.numerator).allclose(self.denominator, atol)


def _self_inversive(prefactor, power, q: np.ndarray) -> RationalDilatation:
    """Build prefactor z^power q/q*, cancelling q/q* when it is a unimodular constant."""
    num = ComplexPolynomial(q)
    den = reciprocal_adjoint(num)
    lam = num.coeffs[-1] / den.coeffs[-1]
    if num.degree == den.degree and np.allclose(num.coeffs, lam * den.coeffs, rtol=0, atol=1e-13):
        one = ComplexPolynomial([1.0])
        return RationalDilatation(complex(prefactor * lam), power, one, one)
    return RationalDilatation(complex(prefactor), power, num, den)


# convolution ------------------------------------------------------------

def convolve(f: HarmonicMap, F: HarmonicMap) -> HarmonicMap:
    """f * F = h*H + conj(g*G), coefficient-wise."""
    if f.order != F.order:
        raise ValueError(f"truncation orders differ: {f.order} vs {F.order}")
    return HarmonicMap(f.h.hadamard(F.h), f.g.hadamard(F.g))


def convolve_f0(F: HarmonicMap) -> HarmonicMap:
    """f0 * F through the averaging identities, without forming f0."""
    zH = F.h.derivative().shift(1)
    zG = F.g.derivative().shift(1)
    return HarmonicMap(0.5 * (F.h + zH), 0.5 * (F.g - zG))


def omega_tilde_general(f: HarmonicMap) -> TaylorSeries:
    """Series of the dilatation of f0 * f, valid through order N - 2."""
    hp = f.h.derivative()
    hpp = hp.derivative()
    gpp = f.g.derivative().derivative()
    den = 2 * hp + hpp.shift(1)
    if abs(den[0]) <= TAU_ZERO:
        raise DenominatorVanishes("2h'(0) vanishes")
    wt = -gpp.shift(1) / den
    return wt.truncate(f.order - 2)


def omega_tilde_halfplane(omega) -> RationalDilatation:
    """Dilatation of f0 * f for a right half-plane shear f with dilatation ``omega``."""
    if isinstance(omega, Monomial):
        n, c = omega.n, omega.unit
        q = np.zeros(n + 2, dtype=complex)
        q[0] += (n / 2) * np.conj(c)
        q[1] += (1 - n / 2) * np.conj(c)
        q[n + 1] += 1.0
        return _self_inversive(-c**2, n, q)
    if isinstance(omega, Mobius):
        a = omega.a
        q = np.array([(1 + a) / 2, (1 + 3 * a) / 2, 1.0])
        return _self_inversive(-1.0, 1, q)
    raise UnsupportedVariant("closed form needs a Monomial or Mobius dilatation; "
                             "use omega_tilde_general for series dilatations")


def omega_tilde_strip(omega, alpha: float) -> RationalDilatation:
    """Dilatation of f0 * f for a vertical strip shear f of angle ``alpha``."""
    if not np.pi / 2 <= alpha < np.pi:
        raise BadAlpha("strip angle must lie in [pi/2, pi)")
    x = np.cos(alpha)
    if abs(x) < 1e-15:
        x = 0.0
    if isinstance(omega, Monomial):
        n, c = omega.n, omega.unit
        cb = np.conj(c)
        q = np.zeros(n + 3, dtype=complex)
        q[0] += -(n / 2) * cb
        q[1] += x * (1 - n) * cb
        q[2] += (1 - n / 2) * cb
        q[n + 1] += x
        q[n + 2] += 1.0
        return _self_inversive(c**2, n, q)
    if isinstance(omega, Mobius):
        a = omega.a
        q = np.array([a * x + a / 2 - 0.5, a + 2 * a * x, 0.5 + 1.5 * a + x, 1.0])
        return _self_inversive(1.0, 1, q)
    raise UnsupportedVariant("closed form needs a Monomial or Mobius dilatation")

