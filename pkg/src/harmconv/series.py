"""Truncated complex power series, complex polynomials and a root oracle.

A :class:`TaylorSeries` of order ``N`` stores the coefficients of
``z**0 .. z**(N-1)``; every arithmetic operation is exact through that
order. Values are immutable: the coefficient array is marked read-only.
"""

from __future__ import annotations

import numpy as np
from scipy.signal import lfilter

from .errors import DivisionBySingular, EvalOutsideDisk, NoConvergence

DEFAULT_ORDER = 256
TAU_ZERO = 1e-12
TAU_ROOT = 1e-8
R_MAX = 0.999


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=complex)
    if arr.ndim != 1:
        raise ValueError("coefficients must be one-dimensional")
    if not np.all(np.isfinite(arr)):
        raise ValueError("coefficients must be finite")
    arr.setflags(write=False)
    return arr


def _check_disk(z, r_max):
    z = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(z)):
        raise ValueError("evaluation point must be finite")
    if np.any(np.abs(z) > r_max * (1 + 1e-12)):
        raise EvalOutsideDisk(f"|z| exceeds r_max = {r_max}")
    return z


class TaylorSeries:
    """Power series truncated to ``order`` coefficients."""

    __slots__ = ("coeffs",)
    # numpy scalars must defer to the reflected operators below
    __array_ufunc__ = None

    def __init__(self, coeffs):
        arr = _frozen(coeffs)
        if arr.size < 2:
            raise ValueError("a TaylorSeries needs at least two coefficients")
        self.coeffs = arr

    # constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, order: int = DEFAULT_ORDER) -> "TaylorSeries":
        return cls(np.zeros(order, dtype=complex))

    @classmethod
    def constant(cls, value, order: int = DEFAULT_ORDER) -> "TaylorSeries":
        c = np.zeros(order, dtype=complex)
        c[0] = value
        return cls(c)

    @classmethod
    def monomial(cls, power: int, order: int = DEFAULT_ORDER, scale=1.0) -> "TaylorSeries":
        c = np.zeros(order, dtype=complex)
        if power < order:
            c[power] = scale
        return cls(c)

    @classmethod
    def from_function(cls, coefficient, order: int = DEFAULT_ORDER) -> "TaylorSeries":
        """Build from a callable ``k -> coefficient`` evaluated on ``0..order-1``."""
        k = np.arange(order)
        return cls(np.asarray(coefficient(k), dtype=complex) * np.ones(order))

    # basic protocol -----------------------------------------------------

    @property
    def order(self) -> int:
        return self.coeffs.size

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, k):
        return self.coeffs[k]

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:4])
        return f"TaylorSeries([{head}, ...], order={self.order})"

    def _coerce(self, other) -> np.ndarray:
        if isinstance(other, TaylorSeries):
            if other.order != self.order:
                raise ValueError(
                    f"truncation orders differ: {self.order} vs {other.order}")
            return other.coeffs
        if np.isscalar(other):
            c = np.zeros(self.order, dtype=complex)
            c[0] = other
            return c
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return TaylorSeries(self.coeffs + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return TaylorSeries(self.coeffs - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return TaylorSeries(o - self.coeffs)

    def __neg__(self):
        return TaylorSeries(-self.coeffs)

    def __mul__(self, other):
        if np.isscalar(other):
            return TaylorSeries(self.coeffs * other)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return TaylorSeries(np.convolve(self.coeffs, o)[: self.order])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if np.isscalar(other):
            if abs(other) <= TAU_ZERO:
                raise DivisionBySingular("division by a zero scalar")
            return TaylorSeries(self.coeffs / other)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if abs(o[0]) <= TAU_ZERO:
            raise DivisionBySingular(
                "divisor has a vanishing constant term; factor out powers of z first")
        # q * o = self, solved as a recursive filter
        return TaylorSeries(lfilter([1.0], o, self.coeffs))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return TaylorSeries(o) / self

    # calculus -----------------------------------------------------------

    def derivative(self, pad: bool = True) -> "TaylorSeries":
        """Term-wise derivative; with ``pad`` the order is kept by a trailing zero."""
        k = np.arange(1, self.order)
        d = self.coeffs[1:] * k
        if pad:
            d = np.append(d, 0.0)
        return TaylorSeries(d)

    def integral(self) -> "TaylorSeries":
        """Antiderivative with zero constant term, truncated to the same order."""
        c = np.zeros(self.order, dtype=complex)
        c[1:] = self.coeffs[:-1] / np.arange(1, self.order)
        return TaylorSeries(c)

    def shift(self, power: int = 1) -> "TaylorSeries":
        """Multiply by ``z**power`` (truncating)."""
        c = np.zeros(self.order, dtype=complex)
        c[power:] = self.coeffs[: self.order - power]
        return TaylorSeries(c)

    def truncate(self, order: int) -> "TaylorSeries":
        if order <= self.order:
            return TaylorSeries(self.coeffs[:order])
        return TaylorSeries(np.concatenate([self.coeffs, np.zeros(order - self.order)]))

    def hadamard(self, other: "TaylorSeries") -> "TaylorSeries":
        """Coefficient-wise product."""
        return TaylorSeries(self.coeffs * self._coerce(other))

    def __call__(self, z, r_max: float = R_MAX):
        z = _check_disk(z, r_max)
        return np.polyval(self.coeffs[::-1], z)

    def allclose(self, other: "TaylorSeries", atol: float = 1e-10) -> bool:
        return bool(np.max(np.abs(self.coeffs - self._coerce(other))) <= atol)


def series_eval(a: TaylorSeries, z, r_max: float = R_MAX):
    return a(z, r_max=r_max)


def series_derivative(a: TaylorSeries, pad: bool = True) -> TaylorSeries:
    return a.derivative(pad=pad)


def series_arith(a: TaylorSeries, b: TaylorSeries, op: str) -> TaylorSeries:
    ops = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    try:
        return ops[op](b)
    except KeyError:
        raise ValueError(f"unknown series operation {op!r}") from None


class ComplexPolynomial:
    """Polynomial ``a_0 + a_1 z + ... + a_n z**n`` with ascending coefficients.

    Leading coefficients of modulus at most ``TAU_ZERO`` times the largest
    coefficient are dropped on construction, so ``degree`` is the numerical
    degree whatever the overall scale.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.array(coeffs, dtype=complex).ravel()
        scale = np.max(np.abs(arr)) if arr.size else 0.0
        if not scale > 0:
            raise ValueError("zero polynomial")
        n = arr.size
        while n > 1 and abs(arr[n - 1]) <= TAU_ZERO * scale:
            n -= 1
        arr = arr[:n]
        self.coeffs = _frozen(arr)

    @classmethod
    def from_roots(cls, roots, leading=1.0) -> "ComplexPolynomial":
        c = np.array([leading], dtype=complex)
        for r in roots:
            c = np.convolve(c, [-r, 1.0])
        return cls(c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, z):
        return np.polyval(self.coeffs[::-1], np.asarray(z, dtype=complex))

    def __eq__(self, other):
        if not isinstance(other, ComplexPolynomial):
            return NotImplemented
        return self.degree == other.degree and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(self.coeffs.tobytes())

    def __repr__(self):
        terms = ", ".join(f"{c:.6g}" for c in self.coeffs)
        return f"ComplexPolynomial([{terms}])"

    def allclose(self, other: "ComplexPolynomial", atol: float = 1e-12) -> bool:
        if self.degree != other.degree:
            return False
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= atol)


def poly_roots_oracle(p: ComplexPolynomial, max_iter: int = 500, tol: float = TAU_ROOT) -> np.ndarray:
    """All roots of ``p`` by Aberth-Ehrlich simultaneous iteration.

    Seeds lie on the circle of radius ``1 + max|a_k / a_n|`` at angles
    ``2 pi k / n + 0.4``, so results are reproducible.  Each returned root
    has ``|p(z)| <= tol * max|a_k| * sum |z|**k``; otherwise :class:`NoConvergence`.
    """
    a = p.coeffs
    n = p.degree
    if n < 1:
        raise ValueError("degree must be at least 1")
    monic = a / a[-1]
    desc = monic[::-1]
    ddesc = np.polyder(desc)
    radius = 1.0 + np.max(np.abs(monic[:-1]))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    if n == 1:
        return np.array([-monic[0]])

    eps = np.finfo(float).eps
    for _ in range(max_iter):
        pz = np.polyval(desc, z)
        dpz = np.polyval(ddesc, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        recip = 1.0 / diff
        np.fill_diagonal(recip, 0.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(pz == 0, 0.0, pz / dpz)
            step = ratio / (1.0 - ratio * recip.sum(axis=1))
        step = np.where(np.isfinite(step), step, 0.0)
        z = z - step
        if np.all(np.abs(step) <= 4 * eps * np.maximum(1.0, np.abs(z))):
            break
    # normwise backward error: meaningful for both very large and clustered roots
    absz = np.abs(z)
    resid = np.abs(p(z)) / (np.max(np.abs(a)) * np.polyval(np.ones(n + 1), absz))
    if np.any(resid > tol):
        raise NoConvergence(
            f"relative root residual {resid.max():.3g} above {tol:g} after {max_iter} iterations")
    return z
