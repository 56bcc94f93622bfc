import math

import numpy as np
import pytest

from harmconv.errors import BadAlpha, BadParameter, EvalOutsideDisk, ShearSingular
from harmconv.harmonic import (CLOSED_FORMS, EXAMPLE_NAMES, Mobius, Monomial, RightHalfPlane,
                               SeriesDilatation, SlantedHalfPlane, VerticalStrip, canonical_f0,
                               eval_map, example_map, shear, zero_dilatation)
from harmconv.series import TaylorSeries

N = 128
RING = 0.85 * np.exp(2j * np.pi * np.arange(48) / 48)


def test_target_coefficients():
    assert RightHalfPlane().series(8)[3] == 1
    for alpha in (math.pi / 2, 2.0, 3.0):
        assert abs(VerticalStrip(alpha).series(8)[1] - 1) < 1e-15
    s = VerticalStrip(math.pi / 2).series(8)
    assert abs(s[2]) < 1e-15
    # arctan z = z - z^3/3 + ...; the sign is negative
    assert abs(s[3] + 1 / 3) < 1e-15


def test_slanted_coefficients():
    g = 0.7
    s = SlantedHalfPlane(g).series(8)
    assert np.allclose(s.coeffs[1:], np.exp(1j * g * np.arange(7)))


@pytest.mark.parametrize("alpha", [1.0, math.pi, 3.5])
def test_strip_angle_validation(alpha):
    with pytest.raises(BadAlpha):
        VerticalStrip(alpha)


def test_dilatation_validation():
    with pytest.raises(BadParameter):
        Mobius(1.0)
    with pytest.raises(BadParameter):
        Monomial(0.0, 0)
    with pytest.raises(BadParameter):
        shear(RightHalfPlane(), SeriesDilatation(TaylorSeries.monomial(1, N, 1.5)), N)


def test_mobius_series_matches_function():
    m = Mobius(-0.4)
    z = 0.5 * RING
    assert np.allclose(m.series(N)(z), m(z), atol=1e-13)


TARGETS = [RightHalfPlane(), SlantedHalfPlane(math.pi / 3), VerticalStrip(math.pi / 2),
           VerticalStrip(2.5)]
DILATATIONS = [Monomial(0.3, 1), Monomial(math.pi, 2), Mobius(0.5), Mobius(-0.7),
               zero_dilatation(N)]


@pytest.mark.parametrize("target", TARGETS, ids=repr)
@pytest.mark.parametrize("w", DILATATIONS, ids=lambda w: type(w).__name__)
def test_shear_identity(target, w):
    f = shear(target, w, N)
    assert (f.h + target.rotation * f.g).allclose(target.series(N), 1e-10)
    # g' = omega h' through the last fully determined coefficient
    lhs, rhs = f.g.derivative(), w.series(N) * f.h.derivative()
    assert lhs.truncate(N - 1).allclose(rhs.truncate(N - 1), 1e-10)


def test_shear_zero_dilatation_is_target():
    f = shear(RightHalfPlane(), zero_dilatation(N), N)
    assert f.h.allclose(RightHalfPlane().series(N), 1e-14)
    assert f.g.allclose(TaylorSeries.zeros(N), 0)


class _Degenerate:
    # bypasses the dilatation bound so that 1 + omega vanishes at the origin
    def series(self, order):
        return TaylorSeries.constant(-1.0, order)


def test_shear_singular():
    with pytest.raises(ShearSingular):
        shear(RightHalfPlane(), _Degenerate(), N)
    with pytest.raises(BadParameter):
        shear(RightHalfPlane(), SeriesDilatation(TaylorSeries.constant(-1.0, N)), N)


def test_canonical_coefficients():
    f0 = canonical_f0(N)
    assert f0.h[1] == 1 and f0.h[3] == 2 and f0.g[3] == -1
    assert f0.g[1] == 0
    assert eval_map(f0, 0) == 0


def test_canonical_is_shear_of_rhp():
    f0 = canonical_f0(N)
    ref = shear(RightHalfPlane(), Monomial(math.pi, 1), N)
    assert f0.h.allclose(ref.h, 1e-12) and f0.g.allclose(ref.g, 1e-12)


def test_f0_real_axis_and_half_plane():
    f0 = canonical_f0()
    x = np.linspace(0.05, 0.95, 10)
    v = f0(x)
    assert np.allclose(v.imag, 0, atol=1e-12)
    pts = 0.99 * np.exp(1j * np.linspace(0, 2 * np.pi, 400))
    assert np.all(f0(pts).real > -0.5)


@pytest.mark.parametrize("name", list(EXAMPLE_NAMES))
def test_series_matches_closed_form(name):
    f = example_map(name, 256)
    ch, cg = CLOSED_FORMS[name]
    assert np.allclose(f.h(RING), ch(RING), atol=1e-10)
    assert np.allclose(f.g(RING), cg(RING), atol=1e-10)


@pytest.mark.parametrize("name", ["f1", "f2", "f3"])
def test_examples_are_sense_preserving(name):
    f = example_map(name, 256)
    assert np.all(np.abs(f.dilatation_at(0.9 * RING)) < 1)


def test_f2_boundary_level():
    # the image of the upper half circle lies on Re = -1/2, Im = pi/8
    t = np.linspace(0.4, 2.7, 12)
    z = (1 - 1e-7) * np.exp(1j * t)
    ch, cg = CLOSED_FORMS["f2"]
    w = ch(z) + np.conj(cg(z))
    assert np.allclose(w.imag, math.pi / 8, atol=1e-5)
    assert np.allclose(w.real, -0.5, atol=1e-5)


def test_f3_closed_form_of_h():
    z = 0.6 * RING
    h3 = example_map("f3", 256).h(z)
    ref = 0.25 * np.log((1 + z) / (1 - z)) - 0.25j * np.log((1 + 1j * z) / (1 - 1j * z))
    assert np.allclose(h3, ref, atol=1e-12)


def test_closed_form_used_near_boundary():
    f = example_map("F1", 64)
    z = 0.995
    assert abs(f(z) - (CLOSED_FORMS["F1"][0](z) + np.conj(CLOSED_FORMS["F1"][1](z)))) < 1e-12


def test_evaluation_guard():
    with pytest.raises(EvalOutsideDisk):
        canonical_f0(16)(1.0)


def test_unknown_example():
    with pytest.raises(BadParameter):
        example_map("F9")
