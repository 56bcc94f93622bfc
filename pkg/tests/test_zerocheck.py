import numpy as np
import pytest

from harmconv.errors import BoundaryAmbiguous, IllConditioned, NotApplicable
from harmconv.series import ComplexPolynomial, poly_roots_oracle
from harmconv.zerocheck import (cohn_reduce, count_zeros_in_disk, reciprocal_adjoint,
                                schur_cohn, schur_cohn_matrix)


def P(*c):
    return ComplexPolynomial(c)


def halfplane_quadratic(theta):
    e = np.exp(-1j * theta)
    return P(0.5 * e, 0.5 * e, 1.0)


def strip_mobius_cubic(a, x):
    return P(a * x + a / 2 - 0.5, a + 2 * a * x, 0.5 + 1.5 * a + x, 1.0)


def test_reciprocal_adjoint_examples():
    theta = 0.8
    e = np.exp(1j * theta)
    assert reciprocal_adjoint(halfplane_quadratic(theta)).allclose(P(1.0, 0.5 * e, 0.5 * e), 1e-15)
    assert reciprocal_adjoint(P(1, 1)) == P(1, 1)
    f = P(1 + 2j, -0.5, 3j, 0.25)
    assert reciprocal_adjoint(reciprocal_adjoint(f)) == f


def test_reciprocal_adjoint_inverts_roots():
    f = ComplexPolynomial.from_roots([0.5j, -0.3 + 0.1j, 2.0])
    roots = poly_roots_oracle(reciprocal_adjoint(f))
    for r in (0.5j, -0.3 + 0.1j, 2.0):
        assert np.min(np.abs(roots - 1 / np.conj(r))) < 1e-10


@pytest.mark.parametrize("theta", np.linspace(0, 2 * np.pi, 7))
def test_cohn_halfplane_quadratic(theta):
    e = np.exp(-1j * theta)
    step = cohn_reduce(halfplane_quadratic(theta))
    assert step.reduced.allclose(P(0.5 * e - 0.25, 0.75), 1e-15)


@pytest.mark.parametrize("a", [-0.9, -0.2, 0.0, 0.5, 0.99])
def test_cohn_halfplane_mobius(a):
    step = cohn_reduce(P((1 + a) / 2, (1 + 3 * a) / 2, 1.0))
    ref = P((1 + 3 * a) * (1 - a) / 4, (a + 3) * (1 - a) / 4)
    assert step.reduced.allclose(ref, 1e-15)


@pytest.mark.parametrize("theta", [0.0, 1.0, 2.5])
@pytest.mark.parametrize("x", [0.0, -0.5, -0.9])
def test_cohn_strip_cubic(theta, x):
    e = np.exp(-1j * theta)
    step = cohn_reduce(P(-0.5 * e, 0, x + 0.5 * e, 1.0))
    ref = P(0.5 * e * (x + 0.5 / e), x + 0.5 * e, 0.75)
    assert step.reduced.allclose(ref, 1e-15)


def test_cohn_not_applicable():
    with pytest.raises(NotApplicable):
        cohn_reduce(P(2, 0, 1))
    assert cohn_reduce(P(2, 0, 1), strict=False).applicable is False


def test_cohn_step_removes_one_inside_zero(rng):
    for _ in range(200):
        roots = rng.uniform(0.1, 1.8, 4) * np.exp(2j * np.pi * rng.random(4))
        if np.min(np.abs(np.abs(roots) - 1)) < 1e-2:
            continue
        f = ComplexPolynomial.from_roots(roots, leading=rng.uniform(0.5, 2))
        step = cohn_reduce(f, strict=False)
        if not step.applicable:
            continue
        inside = int(np.sum(np.abs(roots) < 1))
        r1 = poly_roots_oracle(step.reduced)
        assert int(np.sum(np.abs(r1) < 1)) == inside - 1


def test_count_examples():
    assert count_zeros_in_disk(P(0, 0, 1)).count == 2
    zc = count_zeros_in_disk(halfplane_quadratic(0.0))
    assert zc.count == 2 and zc.method == "cohn_chain"
    assert abs(zc.steps[0].reduced.coeffs[0] / zc.steps[0].reduced.coeffs[1] - 1 / 3) < 1e-15
    a = 0.5
    zc = count_zeros_in_disk(P((1 + a) / 2, (1 + 3 * a) / 2, 1.0))
    f1 = zc.steps[0].reduced
    assert abs(-f1.coeffs[0] / f1.coeffs[1] + 5 / 7) < 1e-15
    assert zc.count == 2


def test_count_falls_back_to_oracle():
    # |a0| > |an| so the chain cannot start; one root inside, one outside
    zc = count_zeros_in_disk(ComplexPolynomial.from_roots([0.5, 4.0]))
    assert zc.method == "oracle" and zc.count == 1


def test_boundary_ambiguous():
    with pytest.raises(BoundaryAmbiguous):
        count_zeros_in_disk(ComplexPolynomial.from_roots([1.0, 3.0]))
    # a zero just inside the tolerance band lets the chain finish; it is only flagged
    zc = count_zeros_in_disk(ComplexPolynomial.from_roots([1 - 1e-8, 0.2]))
    assert zc.method == "cohn_chain" and zc.on_circle == 1 and zc.near_boundary


def test_schur_cohn_examples():
    assert schur_cohn(P(0, 1)).determinants == [1.0]
    x, a = 0.0, 0.5
    rep = schur_cohn(strip_mobius_cubic(a, x))
    assert abs(rep.determinants[0] - 15 / 16) < 1e-14
    assert rep.all_inside


def test_schur_cohn_matrix_layout():
    f = P(1, 2, 3, 4)
    m = schur_cohn_matrix(f, 2)
    ref = np.array([[4, 0, 1, 2], [3, 4, 0, 1], [1, 0, 4, 3], [2, 1, 0, 4]])
    assert np.array_equal(m, ref)


def M1(a, x):
    return 0.25 * (2 * a * x + a + 1) * (3 - 2 * a * x - a)


def M2(a, x):
    P_ = 2 + 4 * a * x + 4 * a + x - 2 * a**2 * x**2 - 5 * a**2 * x - 2 * a**2 - 2 * a * x**2
    return 0.25 * (1 - x) * (1 - a) * (1 - 2 * a * x - a) * P_


def M3(a, x):
    return 0.25 * (x + 1) * (1 - x) ** 3 * (1 - a) ** 3 * (1 - 2 * a * x - a) ** 2 * (1 + 3 * a)


@pytest.mark.parametrize("a", [0.0, 0.3, 0.9])
@pytest.mark.parametrize("x", [0.0, -0.4, -0.95])
def test_closed_form_factorizations(a, x):
    d = schur_cohn(strip_mobius_cubic(a, x)).determinants
    for got, ref in zip(d, (M1(a, x), M2(a, x), M3(a, x))):
        assert abs(got - ref) <= 1e-9 * abs(ref)


def test_m3_negative_for_small_a():
    rep = schur_cohn(strip_mobius_cubic(-0.5, -0.5))
    assert rep.determinants[2] < 0 and not rep.all_inside
    assert abs(rep.determinants[2] - M3(-0.5, -0.5)) < 1e-12


def test_ill_conditioned():
    with pytest.raises(IllConditioned):
        schur_cohn(P(1, 0, 1))


def test_random_equivalence(rng):
    for _ in range(300):
        n = int(rng.integers(1, 7))
        roots = rng.uniform(0.05, 2.0, n) * np.exp(2j * np.pi * rng.random(n))
        if np.min(np.abs(np.abs(roots) - 1)) < 1e-3:
            continue
        f = ComplexPolynomial.from_roots(roots)
        inside = int(np.sum(np.abs(roots) < 1))
        assert count_zeros_in_disk(f).count == inside
        try:
            assert schur_cohn(f).all_inside == (inside == n)
        except IllConditioned:
            pass


@pytest.mark.parametrize("scale", [1e-4, 1.0, 1e4])
def test_counts_do_not_depend_on_scale(scale):
    roots = [0.38, 0.5j, -0.51, 0.53 + 0.1j, 0.7j, -0.72j]
    f = ComplexPolynomial.from_roots(roots, leading=scale)
    assert count_zeros_in_disk(f).count == 6
    assert schur_cohn(f).all_inside


def test_chain_survives_large_reduced_root():
    # a reduced polynomial in this chain has a root near |z| = 107
    f = ComplexPolynomial([-0.28387948 - 0.59940128j, 2.33887852 + 0.53165029j,
                           -0.81484369 - 0.77835913j, -0.52033689 - 2.03996902j,
                           -0.46899421 - 0.57969367j, -0.66287692 - 0.54491366j,
                           -0.66604042 - 0.12735871j])
    inside = int(np.sum(np.abs(np.roots(f.coeffs[::-1])) < 1))
    assert count_zeros_in_disk(f).count == inside == 2
