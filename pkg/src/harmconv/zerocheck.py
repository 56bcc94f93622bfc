"""Zeros of complex polynomials relative to the unit circle.

Two independent deciders are provided: the Cohn reduction chain, which
removes one interior zero per step while ``|a_0| < |a_n|``, and the
Schur-Cohn determinants ``M_1 .. M_n``, all positive exactly when every
zero lies strictly inside the circle.  Both are checked against
:func:`harmconv.series.poly_roots_oracle`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from scipy.linalg import LinAlgWarning, lu_factor

from .errors import BoundaryAmbiguous, IllConditioned, NotApplicable
from .series import ComplexPolynomial, poly_roots_oracle

TAU_BOUNDARY = 1e-7
TAU_DET = 1e-12
TAU_PIVOT = 1e-14
TAU_COHN = 1e-9


def reciprocal_adjoint(f: ComplexPolynomial) -> ComplexPolynomial:
    """f*(z) = z^n conj(f(1/conj z)): coefficients reversed and conjugated."""
    return ComplexPolynomial(np.conj(f.coeffs[::-1]))


@dataclass(frozen=True)
class CohnStep:
    input: ComplexPolynomial
    reduced: Optional[ComplexPolynomial]
    applicable: bool


def cohn_reduce(f: ComplexPolynomial, strict: bool = True) -> CohnStep:
    """One step of Cohn's rule: (conj(a_n) f - a_0 f*) / z.

    With ``strict`` an inapplicable step raises :class:`NotApplicable`;
    otherwise it is returned with ``applicable=False``.
    """
    a = f.coeffs
    if f.degree < 1 or not abs(a[0]) < abs(a[-1]):
        if strict:
            raise NotApplicable(f"|a_0| = {abs(a[0]):.6g} is not below |a_n| = {abs(a[-1]):.6g}")
        return CohnStep(f, None, False)
    star = np.conj(a[::-1])
    combo = np.conj(a[-1]) * a - a[0] * star
    # the constant term cancels identically: conj(a_n) a_0 - a_0 conj(a_n)
    reduced = ComplexPolynomial(combo[1:])
    return CohnStep(f, reduced, True)


@dataclass(frozen=True)
class ZeroCount:
    """Zeros strictly inside the unit circle.

    ``on_circle`` is the oracle's count of zeros within ``TAU_BOUNDARY`` of
    the circle; ``steps`` lists the Cohn reductions that were applied, each
    taken from the previous result rescaled to unit maximum coefficient.
    """

    count: int
    method: str
    on_circle: int
    near_boundary: bool
    steps: tuple = ()


def _oracle_split(f: ComplexPolynomial, tau: float):
    roots = poly_roots_oracle(f)
    mod = np.abs(roots)
    inside = int(np.sum(mod < 1 - tau))
    on = int(np.sum(np.abs(mod - 1) <= tau))
    return inside, on


def count_zeros_in_disk(f: ComplexPolynomial, tau_boundary: float = TAU_BOUNDARY) -> ZeroCount:
    """Number of zeros of ``f`` with modulus below one."""
    if f.degree < 1:
        raise ValueError("degree must be at least 1")
    _, on_circle = _oracle_split(f, tau_boundary)
    steps = []
    current = f
    while current.degree >= 1:
        a = current.coeffs
        # a step with |a_0| ~ |a_n| would cancel the new leading term
        if not abs(a[0]) < abs(a[-1]) * (1 - TAU_COHN):
            break
        step = cohn_reduce(current)
        steps.append(step)
        # each step roughly squares the coefficient scale; undo that
        current = ComplexPolynomial(step.reduced.coeffs / np.max(np.abs(step.reduced.coeffs)))
    if current.degree == 0:
        return ZeroCount(len(steps), "cohn_chain", on_circle, on_circle > 0, tuple(steps))
    inside, on = _oracle_split(current, tau_boundary)
    if on:
        raise BoundaryAmbiguous(
            "Cohn chain stalled and a remaining zero lies within "
            f"{tau_boundary:g} of the unit circle")
    return ZeroCount(len(steps) + inside, "oracle", on_circle, on_circle > 0, tuple(steps))


@dataclass(frozen=True)
class SchurCohnReport:
    determinants: List[float]
    all_inside: bool


def schur_cohn_matrix(f: ComplexPolynomial, nu: int) -> np.ndarray:
    """The 2nu x 2nu block matrix [[B*, A], [A*, B]] of order ``nu``."""
    a = f.coeffs
    n = f.degree
    A = np.zeros((nu, nu), dtype=complex)
    B = np.zeros((nu, nu), dtype=complex)
    for i in range(nu):
        for j in range(i, nu):
            A[i, j] = a[j - i]
            B[i, j] = np.conj(a[n - (j - i)])
    return np.block([[B.conj().T, A], [A.conj().T, B]])


def _det(m: np.ndarray) -> complex:
    with warnings.catch_warnings():
        # exact singularity is reported through the pivot check below
        warnings.simplefilter("ignore", LinAlgWarning)
        lu, piv = lu_factor(m, check_finite=True)
    diag = np.diag(lu)
    if np.min(np.abs(diag)) < TAU_PIVOT:
        raise IllConditioned("LU pivot below 1e-14; determinant is numerically zero")
    swaps = int(np.sum(piv != np.arange(piv.size)))
    return complex(np.prod(diag) * (-1) ** swaps)


def schur_cohn(f: ComplexPolynomial, tau_det: float = TAU_DET) -> SchurCohnReport:
    if f.degree < 1:
        raise ValueError("degree must be at least 1")
    dets, positive = [], True
    lead = abs(f.coeffs[-1])
    for nu in range(1, f.degree + 1):
        d = _det(schur_cohn_matrix(f, nu))
        if abs(d.imag) > 1e-9 * max(1.0, abs(d.real)):
            raise IllConditioned(f"M_{nu} has imaginary part {d.imag:.3g}")
        dets.append(d.real)
        # M_nu scales as |a_n|^(2 nu); the threshold applies to the monic polynomial
        positive &= d.real > tau_det * lead ** (2 * nu)
    return SchurCohnReport(dets, positive)
