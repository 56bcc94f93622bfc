"""Grid certification of local univalence, directional convexity and image regions.

Every "for all z in the disk" statement is checked on a finite polar grid
up to ``r_max``; reports carry the extremal value, its location and the
pass/fail verdict.  Nothing here is a proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.optimize import bisect

from .convolution import (RationalDilatation, omega_tilde_halfplane,
                          omega_tilde_strip)
from .errors import BadParameter, NotLocallyUnivalent, RegionViolation
from .harmonic import HarmonicMap, Mobius, Monomial, example_map
from .series import R_MAX, TaylorSeries

REGION_CLEARANCE = 1e-9


@dataclass(frozen=True)
class SweepGrid:
    radii: Tuple[float, ...]
    angles_per_radius: int = 64
    r_max: float = R_MAX

    def __post_init__(self):
        r = np.asarray(self.radii, dtype=float)
        if r.size == 0 or np.any(np.diff(r) <= 0):
            raise BadParameter("radii must be strictly increasing")
        if r[0] <= 0 or r[-1] >= 1 or r[-1] > self.r_max:
            raise BadParameter("radii must lie in (0, r_max]")
        if self.angles_per_radius < 1:
            raise BadParameter("need at least one angle per radius")

    @classmethod
    def uniform(cls, r_max: float = R_MAX, n_radii: int = 40, angles: int = 256) -> "SweepGrid":
        radii = tuple(np.linspace(r_max / n_radii, r_max, n_radii))
        return cls(radii, angles, r_max)

    def angles(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.angles_per_radius) / self.angles_per_radius

    def points(self) -> np.ndarray:
        r = np.asarray(self.radii)[:, None]
        return (r * np.exp(1j * self.angles()[None, :])).ravel()

    def refined(self) -> "SweepGrid":
        return SweepGrid(self.radii, 2 * self.angles_per_radius, self.r_max)


@dataclass(frozen=True)
class CertificationReport:
    """Outcome of one sweep.

    ``kind`` is ``"bound"`` (value is a maximum modulus that must stay
    below one), ``"positivity"`` (value is a minimum that must stay above
    zero), ``"clearance"`` (minimum distance to an excluded set) or
    ``"witness"`` (a modulus that must exceed one).
    """

    claim: str
    kind: str
    value: float
    witness: complex
    passed: bool
    n_points: int = 0
    params: dict = field(default_factory=dict)

    @property
    def max_modulus(self) -> float:
        return self.value

    @property
    def min_value(self) -> float:
        return self.value

    CSV_FIELDS = ("claim", "kind", "value", "witness_re", "witness_im", "passed", "n_points", "params")

    def csv_row(self) -> list:
        params = ";".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return [self.claim, self.kind, repr(float(self.value)), repr(float(self.witness.real)),
                repr(float(self.witness.imag)), "pass" if self.passed else "fail",
                self.n_points, params]


def _bound_report(values, points, claim, params=None) -> CertificationReport:
    mod = np.abs(values)
    i = int(np.argmax(mod))
    return CertificationReport(claim, "bound", float(mod[i]), complex(points[i]),
                               bool(mod[i] < 1.0), int(mod.size), dict(params or {}))


def _positivity_report(values, points, claim, params=None) -> CertificationReport:
    i = int(np.argmin(values))
    return CertificationReport(claim, "positivity", float(values[i]), complex(points[i]),
                               bool(values[i] > 0.0), int(values.size), dict(params or {}))


# dilatation sweeps --------------------------------------------------------

def sweep_dilatation(w: Union[RationalDilatation, HarmonicMap, TaylorSeries], grid: SweepGrid,
                     claim: str = "local univalence", params: Optional[dict] = None) -> CertificationReport:
    """Maximum of |w| over the grid; a map contributes its own dilatation G'/H'."""
    z = grid.points()
    if isinstance(w, RationalDilatation):
        values = w(z)
    elif isinstance(w, HarmonicMap):
        values = w.dilatation_at(z, grid.r_max)
    elif isinstance(w, TaylorSeries):
        values = w(z, grid.r_max)
    else:
        raise TypeError(f"cannot sweep {type(w).__name__}")
    return _bound_report(values, z, claim, params)


def _merge(reports, claim, params) -> CertificationReport:
    worst = max(reports, key=lambda r: r.value)
    return CertificationReport(claim, "bound", worst.value, worst.witness,
                               all(r.passed for r in reports),
                               sum(r.n_points for r in reports), dict(params, **worst.params))


def default_thetas(count: int = 16) -> np.ndarray:
    return 2 * np.pi * np.arange(count) / count


def certify_halfplane_monomial(n: int, grid: SweepGrid, thetas: Iterable[float] = None) -> CertificationReport:
    """f0 * f for right half-plane shears with dilatation e^{i theta} z^n."""
    thetas = default_thetas() if thetas is None else thetas
    reports = [sweep_dilatation(omega_tilde_halfplane(Monomial(t, n)), grid, params={"theta": t})
               for t in thetas]
    return _merge(reports, f"half-plane monomial n={n}", {"n": n})


def certify_halfplane_mobius(a_values: Iterable[float], grid: SweepGrid) -> CertificationReport:
    reports = [sweep_dilatation(omega_tilde_halfplane(Mobius(a)), grid, params={"a": a})
               for a in a_values]
    return _merge(reports, "half-plane Mobius", {})


def certify_strip_monomial(n: int, alphas: Iterable[float], grid: SweepGrid,
                           thetas: Iterable[float] = None) -> CertificationReport:
    thetas = default_thetas() if thetas is None else list(thetas)
    reports = [sweep_dilatation(omega_tilde_strip(Monomial(t, n), al), grid,
                                params={"theta": t, "alpha": al})
               for al in alphas for t in thetas]
    return _merge(reports, f"strip monomial n={n}", {"n": n})


def certify_strip_mobius(a_values: Iterable[float], alphas: Iterable[float],
                         grid: SweepGrid) -> CertificationReport:
    alphas = list(alphas)
    reports = [sweep_dilatation(omega_tilde_strip(Mobius(a), al), grid, params={"a": a, "alpha": al})
               for a in a_values for al in alphas]
    return _merge(reports, "strip Mobius", {})


def remark1_witness(n: int) -> Tuple[complex, float]:
    """A point where f0 * f fails to be locally univalent, for omega = -+z^n, n >= 3."""
    if n < 3:
        raise BadParameter("witnesses exist only for n >= 3")
    theta = math.pi if n % 2 else 0.0
    z0 = complex(-n / (n + 1))
    wt = omega_tilde_halfplane(Monomial(theta, n))
    return z0, float(abs(wt(z0)))


def remark1_report(n: int) -> CertificationReport:
    z0, modulus = remark1_witness(n)
    return CertificationReport(f"non-univalence witness n={n}", "witness", modulus, z0,
                               modulus > 1.0, 1, {"n": n})


# directional convexity ---------------------------------------------------

def royster_ziegler_check(F: TaylorSeries, alpha: float, grid: SweepGrid,
                          claim: str = "convex in the real direction") -> CertificationReport:
    """Minimum of Re{z F'(z) / phi(z)} with phi(z) = z e^{i alpha} / (1 - z e^{i alpha})^2."""
    z = grid.points()
    rot = np.exp(1j * alpha)
    values = np.real(np.conj(rot) * (1 - z * rot) ** 2 * F.derivative()(z, grid.r_max))
    return _positivity_report(values, z, claim, {"alpha": alpha})


def convexity_in_direction(f: HarmonicMap, direction: float, grid: SweepGrid) -> CertificationReport:
    """Check that f = H + conj(G) is convex in the direction ``direction``.

    The sheared function H - e^{2i direction} G is rotated by
    e^{-i direction} and tested against the real-direction criterion with
    alpha = -direction.
    """
    lu = sweep_dilatation(f, grid)
    if not lu.passed:
        raise NotLocallyUnivalent(
            f"|G'/H'| reaches {lu.value:.6g} at {lu.witness:.6g}", lu)
    phi = np.exp(1j * direction)
    combo = (f.h - (phi**2) * f.g) * np.conj(phi)
    rep = royster_ziegler_check(combo, -direction, grid, f"convex in direction {direction:.6g}")
    return CertificationReport(rep.claim, rep.kind, rep.value, rep.witness, rep.passed,
                               rep.n_points, {"direction": direction})


# image regions -----------------------------------------------------------

@dataclass(frozen=True)
class TwoSlits:
    """Plane minus the half-lines {x +- i y_offset : x <= x_cap}."""

    y_offset: float
    x_cap: float

    def clearance(self, w):
        dx = np.maximum(w.real - self.x_cap, 0.0)
        dy = np.abs(np.abs(w.imag) - self.y_offset)
        return np.hypot(dx, dy)


@dataclass(frozen=True)
class FourHalfLines:
    """Plane minus {x <= x_cap, |y| >= y_offset}, bounded by four half-lines."""

    y_offset: float
    x_cap: float

    def clearance(self, w):
        dx = np.maximum(w.real - self.x_cap, 0.0)
        dy = np.maximum(self.y_offset - np.abs(w.imag), 0.0)
        return np.hypot(dx, dy)


@dataclass(frozen=True)
class QuadrantSlits:
    """Closed first quadrant minus {x >= offset, y >= offset}."""

    offset: float

    def clearance(self, w):
        dx = np.maximum(self.offset - w.real, 0.0)
        dy = np.maximum(self.offset - w.imag, 0.0)
        corner = np.hypot(dx, dy)
        outside = np.minimum(w.real, w.imag) < -REGION_CLEARANCE
        return np.where(outside, -1.0, corner)


REGIONS = {
    "F1": FourHalfLines(math.pi / 8, -0.25),
    "F2": TwoSlits(math.pi / 16, -0.25),
    "F3": QuadrantSlits(math.pi / 8),
}


def region_membership(which: str, grid: SweepGrid, order: int = 256,
                      raise_on_violation: bool = False) -> CertificationReport:
    """Evaluate an example map on the grid and measure clearance from its excluded set.

    F3 is evaluated on the closed first quadrant of the disk only.
    """
    if which not in REGIONS:
        raise BadParameter(f"no region claim for {which!r}")
    region = REGIONS[which]
    F = example_map(which, order)
    z = grid.points()
    z = np.concatenate([[0j], z])
    if which == "F3":
        t = np.angle(z)
        keep = (t >= -1e-15) & (t <= math.pi / 2 + 1e-15)
        z = z[keep]
    w = F(z, grid.r_max)
    clear = region.clearance(w)
    i = int(np.argmin(clear))
    rep = CertificationReport(f"{which} image region", "clearance", float(clear[i]), complex(z[i]),
                              bool(clear[i] >= REGION_CLEARANCE), int(z.size),
                              {"image_re": float(w[i].real), "image_im": float(w[i].imag)})
    if raise_on_violation and not rep.passed:
        raise RegionViolation(f"{which}({z[i]:.6g}) = {w[i]:.6g} leaves the claimed region", rep)
    return rep


# level curves ------------------------------------------------------------

def theta_c(c: float, xtol: float = 1e-10) -> float:
    """Root of tan(theta) = c - theta in (0, pi/2)."""
    if c <= 0:
        raise BadParameter("c must be positive")
    return bisect(lambda t: math.tan(t) + t - c, 0.0, math.pi / 2 - 1e-12, xtol=xtol)


LEVEL_SCALE = {"F1": 0.25, "F2": 0.125, "F3": 0.25}


def level_curve_points(example: str, c: float, samples: int = 200) -> np.ndarray:
    """Disk points on which Im of the example map equals c/4 (F1, F3) or c/8 (F2).

    Points are parameterized in zeta = (1 + z) / (1 - z) and mapped back by
    z = (zeta - 1) / (zeta + 1).  The parameter interval is open, so points
    approach the unit circle at both ends.
    """
    if c <= 0:
        raise BadParameter("c must be positive")
    if example in ("F1", "F2"):
        lo, hi = 0.0, min(c, math.pi / 2)
    elif example == "F3":
        lo, hi = theta_c(c), min(c, math.pi / 2)
    else:
        raise BadParameter(f"no level curves for {example!r}")
    if not hi > lo:
        raise BadParameter("empty parameter range")
    th = lo + (hi - lo) * np.arange(1, samples + 1) / (samples + 1)
    if example == "F1":
        zeta = np.sqrt((c - th) / np.tan(th)) + 1j * np.sqrt((c - th) * np.tan(th))
    elif example == "F2":
        zeta = np.sqrt((c - th) / np.tan(th) / 3) + 1j * np.sqrt((c - th) * np.tan(th) / 3)
    else:
        s = 2 * np.cos(th) * np.sqrt(np.tan(th) / (c - th) - 1)
        zeta = (s + np.sqrt(s * s + 4)) / 2 * np.exp(1j * th)
    return (zeta - 1) / (zeta + 1)


def level_curve_constancy(example: str, c: float, samples: int = 200,
                          r_max: float = R_MAX) -> CertificationReport:
    """Largest deviation of Im F from its level along the curve, on |z| <= r_max."""
    z = level_curve_points(example, c, samples)
    z = z[np.abs(z) <= r_max]
    F = example_map(example)
    dev = np.abs(F(z, r_max).imag - LEVEL_SCALE[example] * c)
    i = int(np.argmax(dev))
    return CertificationReport(f"{example} level curve c={c:.6g}", "deviation", float(dev[i]),
                               complex(z[i]), bool(dev[i] <= 1e-6), int(z.size), {"c": c})


# theorem-level entry points -------------------------------------------------

THEOREMS = ("2", "3", "5", "6")


def certify_theorem(number: str, grid: SweepGrid, n: int = None, a: Sequence[float] = None,
                    alphas: Sequence[float] = None, thetas: Sequence[float] = None) -> CertificationReport:
    number = str(number)
    alphas = list(alphas) if alphas is not None else [math.pi / 2, 2 * math.pi / 3, 5 * math.pi / 6]
    if number == "2":
        return certify_halfplane_monomial(n or 1, grid, thetas)
    if number == "3":
        return certify_halfplane_mobius(a if a is not None else [-0.99, -0.5, 0.0, 0.5, 0.99], grid)
    if number == "5":
        return certify_strip_monomial(n or 1, alphas, grid, thetas)
    if number == "6":
        return certify_strip_mobius(a if a is not None else [0.0, 0.25, 0.5, 0.75, 0.99], alphas, grid)
    raise BadParameter(f"no certification for theorem {number!r}")
