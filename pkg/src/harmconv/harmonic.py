"""Harmonic maps f = h + conj(g) of the unit disk built by shearing.

Targets are the right half-plane ``Re w > -1/2``, the slanted half-planes
``Re(e^{i gamma} w) > -1/2`` and the vertical strips of angle ``alpha`` in
``[pi/2, pi)``.  A map is recovered from its target series ``T`` and its
dilatation ``omega = g'/h'`` through ``h' = T' / (1 + omega)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

import numpy as np

from .errors import BadAlpha, BadParameter, DivisionBySingular, EvalOutsideDisk, ShearSingular
from .series import DEFAULT_ORDER, R_MAX, TaylorSeries

CLOSED_FORM_RADIUS = 0.9


# dilatations ------------------------------------------------------------

@dataclass(frozen=True)
class Monomial:
    """omega(z) = e^{i theta} z^n."""

    theta: float
    n: int = 1

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise BadParameter("monomial power must be a positive integer")

    @property
    def unit(self) -> complex:
        return complex(np.exp(1j * self.theta))

    def series(self, order: int = DEFAULT_ORDER) -> TaylorSeries:
        return TaylorSeries.monomial(self.n, order, scale=self.unit)

    def __call__(self, z):
        return self.unit * np.asarray(z, dtype=complex) ** self.n


@dataclass(frozen=True)
class Mobius:
    """omega(z) = (z + a) / (1 + a z) with real a in (-1, 1)."""

    a: float

    def __post_init__(self):
        if not -1.0 < self.a < 1.0:
            raise BadParameter("Mobius parameter must lie in (-1, 1)")

    def series(self, order: int = DEFAULT_ORDER) -> TaylorSeries:
        k = np.arange(order)
        geom = (-self.a) ** k
        c = self.a * geom
        c[1:] += geom[:-1]
        return TaylorSeries(c)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return (z + self.a) / (1 + self.a * z)


@dataclass(frozen=True, eq=False)
class SeriesDilatation:
    """Dilatation given only by its Taylor coefficients."""

    coefficients: TaylorSeries

    def series(self, order: int = DEFAULT_ORDER) -> TaylorSeries:
        return self.coefficients.truncate(order)

    def __call__(self, z):
        return self.coefficients(z)

    def sup_modulus(self, r_max: float = 0.95, n_radii: int = 20, n_angles: int = 64) -> float:
        r = np.linspace(r_max / n_radii, r_max, n_radii)
        t = 2 * np.pi * np.arange(n_angles) / n_angles
        z = (r[:, None] * np.exp(1j * t[None, :])).ravel()
        return float(np.max(np.abs(self.coefficients(z))))


Dilatation = Union[Monomial, Mobius, SeriesDilatation]


def zero_dilatation(order: int = DEFAULT_ORDER) -> SeriesDilatation:
    return SeriesDilatation(TaylorSeries.zeros(order))


# targets ----------------------------------------------------------------

@dataclass(frozen=True)
class RightHalfPlane:
    def series(self, order: int = DEFAULT_ORDER) -> TaylorSeries:
        c = np.ones(order, dtype=complex)
        c[0] = 0.0
        return TaylorSeries(c)

    @property
    def rotation(self) -> complex:
        return 1.0 + 0j


@dataclass(frozen=True)
class SlantedHalfPlane:
    """{w : Re(e^{i gamma} w) > -1/2}; the analytic target is z / (1 - z e^{i gamma})."""

    gamma: float

    def __post_init__(self):
        if not 0.0 <= self.gamma < 2 * np.pi:
            raise BadParameter("gamma must lie in [0, 2 pi)")

    def series(self, order: int = DEFAULT_ORDER) -> TaylorSeries:
        k = np.arange(order)
        c = np.exp(1j * (k - 1) * self.gamma)
        c[0] = 0.0
        return TaylorSeries(c)

    @property
    def rotation(self) -> complex:
        # h + rotation * g equals the target series
        return complex(np.exp(-2j * self.gamma))


@dataclass(frozen=True)
class VerticalStrip:
    """Strip (alpha - pi)/(2 sin alpha) < Re w < alpha/(2 sin alpha)."""

    alpha: float

    def __post_init__(self):
        if not np.pi / 2 <= self.alpha < np.pi:
            raise BadAlpha("strip angle must lie in [pi/2, pi)")

    def series(self, order: int = DEFAULT_ORDER) -> TaylorSeries:
        k = np.arange(1, order)
        c = np.zeros(order, dtype=complex)
        c[1:] = (-1.0) ** (k + 1) * np.sin(k * self.alpha) / (k * np.sin(self.alpha))
        return TaylorSeries(c)

    @property
    def rotation(self) -> complex:
        return 1.0 + 0j


TargetDomain = Union[RightHalfPlane, SlantedHalfPlane, VerticalStrip]


def target_series(target: TargetDomain, order: int = DEFAULT_ORDER) -> TaylorSeries:
    return target.series(order)


# maps -------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class HarmonicMap:
    """f = h + conj(g) with optional closed-form evaluators for h and g.

    ``target`` and ``dilatation`` record how the map was constructed, when
    known; convolutions and imported maps leave them as ``None``.
    """

    h: TaylorSeries
    g: TaylorSeries
    name: Optional[str] = None
    closed_h: Optional[Callable] = field(default=None, repr=False)
    closed_g: Optional[Callable] = field(default=None, repr=False)
    target: Optional[TargetDomain] = None
    dilatation: Optional[Dilatation] = None

    def __post_init__(self):
        if self.h.order != self.g.order:
            raise ValueError("h and g must share a truncation order")
        if abs(self.h[0]) > 1e-12 or abs(self.g[0]) > 1e-12:
            raise ValueError("harmonic maps are normalized by h(0) = g(0) = 0")

    @property
    def order(self) -> int:
        return self.h.order

    @property
    def has_closed_form(self) -> bool:
        return self.closed_h is not None and self.closed_g is not None

    def analytic(self, z, r_max: float = R_MAX):
        """Return (h(z), g(z)), preferring the closed form near the boundary."""
        z = np.asarray(z, dtype=complex)
        if np.any(np.abs(z) > r_max * (1 + 1e-12)):
            raise EvalOutsideDisk(f"|z| exceeds r_max = {r_max}")
        if not self.has_closed_form:
            return self.h(z, r_max), self.g(z, r_max)
        far = np.abs(z) > CLOSED_FORM_RADIUS
        hz = np.where(far, 0j, self.h(np.where(far, 0, z), r_max))
        gz = np.where(far, 0j, self.g(np.where(far, 0, z), r_max))
        if np.any(far):
            hz = np.where(far, self.closed_h(np.where(far, z, 0)), hz)
            gz = np.where(far, self.closed_g(np.where(far, z, 0)), gz)
        return hz, gz

    def __call__(self, z, r_max: float = R_MAX):
        hz, gz = self.analytic(z, r_max)
        return hz + np.conj(gz)

    def dilatation_at(self, z, r_max: float = R_MAX):
        """Pointwise g'(z) / h'(z) from the series."""
        return self.g.derivative()(z, r_max) / self.h.derivative()(z, r_max)


def eval_map(f: HarmonicMap, z, r_max: float = R_MAX):
    return f(z, r_max=r_max)


def shear(target: TargetDomain, omega: Dilatation, order: int = DEFAULT_ORDER,
          name: Optional[str] = None) -> HarmonicMap:
    """Shear ``target`` along the dilatation ``omega``.

    For slanted half-planes ``omega`` is the dilatation g'/h' and the
    defining identity is h + e^{-2i gamma} g = z / (1 - z e^{i gamma}).
    """
    if isinstance(omega, SeriesDilatation) and omega.sup_modulus() >= 1.0:
        raise BadParameter("series dilatation is not bounded by 1 on the check grid")
    T = target.series(order)
    w = omega.series(order)
    try:
        hp = T.derivative() / (1 + target.rotation * w)
    except DivisionBySingular as exc:
        raise ShearSingular(str(exc)) from exc
    gp = w * hp
    return HarmonicMap(hp.integral(), gp.integral(), name=name, target=target, dilatation=omega)


# closed forms -----------------------------------------------------------
# log((1+z)/(1-z)) = 2 atanh z and log((1+iz)/(1-iz)) = 2i atan z on the disk.

def _L(z):
    return 2 * np.arctanh(z)


def _Li(z):
    return 2j * np.arctan(z)


def _geom(z):
    return z / (1 - z)


CLOSED_FORMS = {
    "f0": (lambda z: (z - 0.5 * z**2) / (1 - z) ** 2,
           lambda z: -(0.5 * z**2) / (1 - z) ** 2),
    "f1": (lambda z: _L(z) / 4 + _geom(z) / 2,
           lambda z: -_L(z) / 4 + _geom(z) / 2),
    "f2": (lambda z: _L(z) / 8 + _geom(z) / 2 + z / (1 - z) ** 2 / 4,
           lambda z: -_L(z) / 8 + _geom(z) / 2 - z / (1 - z) ** 2 / 4),
    "f3": (lambda z: _L(z) / 4 - 0.25j * _Li(z),
           lambda z: -_L(z) / 4 - 0.25j * _Li(z)),
    "F1": (lambda z: _L(z) / 8 + (0.75 * z - 0.25 * z**3) / ((1 - z) ** 2 * (1 + z)),
           lambda z: -_L(z) / 8 + (0.25 * z - 0.5 * z**2 - 0.25 * z**3) / ((1 - z) ** 2 * (1 + z))),
    "F2": (lambda z: 0.5 * (_L(z) / 8 + _geom(z) / 2 + z / (1 - z) ** 2 / 4
                            + z / ((1 - z) ** 3 * (1 + z))),
           lambda z: 0.5 * (-_L(z) / 8 + _geom(z) / 2 - z / (1 - z) ** 2 / 4
                            + z**3 / ((1 - z) ** 3 * (1 + z)))),
    "F3": (lambda z: _L(z) / 8 - 0.125j * _Li(z) + 0.5 * z / (1 - z**4),
           lambda z: -_L(z) / 8 - 0.125j * _Li(z) + 0.5 * z**3 / (1 - z**4)),
    "identity": (lambda z: z, lambda z: 0 * z),
}


def _attach(f: HarmonicMap, name: str) -> HarmonicMap:
    ch, cg = CLOSED_FORMS[name]
    return HarmonicMap(f.h, f.g, name=name, closed_h=ch, closed_g=cg,
                       target=f.target, dilatation=f.dilatation)


def canonical_f0(order: int = DEFAULT_ORDER) -> HarmonicMap:
    """The canonical right half-plane map, with dilatation -z."""
    k = np.arange(order, dtype=float)
    h = (k + 1) / 2
    h[0] = 0.0
    g = -(k - 1) / 2
    g[:2] = 0.0
    f = HarmonicMap(TaylorSeries(h), TaylorSeries(g), target=RightHalfPlane(),
                    dilatation=Monomial(np.pi, 1))
    return _attach(f, "f0")


def identity_map(order: int = DEFAULT_ORDER) -> HarmonicMap:
    f = HarmonicMap(TaylorSeries.monomial(1, order), TaylorSeries.zeros(order))
    return _attach(f, "identity")


EXAMPLE_NAMES = ("f0", "f1", "f2", "f3", "F1", "F2", "F3")


def example_map(which: str, order: int = DEFAULT_ORDER) -> HarmonicMap:
    """One of the worked examples f0, f1, f2, f3 or F_i = f0 * f_i."""
    if which == "f0":
        return canonical_f0(order)
    if which == "identity":
        return identity_map(order)
    if which == "f1":
        base = shear(RightHalfPlane(), Monomial(0.0, 1), order)
    elif which == "f2":
        base = shear(RightHalfPlane(), Monomial(np.pi, 2), order)
    elif which == "f3":
        base = shear(VerticalStrip(np.pi / 2), Monomial(np.pi, 2), order)
    elif which in ("F1", "F2", "F3"):
        from .convolution import convolve_f0

        base = convolve_f0(example_map("f" + which[1], order))
    else:
        raise BadParameter(f"unknown example map {which!r}")
    return _attach(base, which)
