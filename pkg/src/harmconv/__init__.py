"""Harmonic shears of half-planes and strips, their convolutions, and
grid-based certification of univalence, convexity and image regions."""

from .certify import (CertificationReport, SweepGrid, certify_theorem, convexity_in_direction,
                      region_membership, remark1_witness, royster_ziegler_check)
from .convolution import (RationalDilatation, convolve, convolve_f0, omega_tilde_general,
                          omega_tilde_halfplane, omega_tilde_strip)
from .harmonic import (HarmonicMap, Mobius, Monomial, RightHalfPlane, SeriesDilatation,
                       SlantedHalfPlane, VerticalStrip, canonical_f0, eval_map, example_map,
                       shear)
from .render import RenderSpec, render_map
from .series import ComplexPolynomial, TaylorSeries, poly_roots_oracle
from .zerocheck import cohn_reduce, count_zeros_in_disk, reciprocal_adjoint, schur_cohn

__version__ = "0.1.0"

__all__ = [
    "CertificationReport", "ComplexPolynomial", "HarmonicMap", "Mobius", "Monomial",
    "RationalDilatation", "RenderSpec", "RightHalfPlane", "SeriesDilatation", "SlantedHalfPlane",
    "SweepGrid", "TaylorSeries", "VerticalStrip", "canonical_f0", "certify_theorem",
    "cohn_reduce", "convexity_in_direction", "convolve", "convolve_f0", "count_zeros_in_disk",
    "eval_map", "example_map", "omega_tilde_general", "omega_tilde_halfplane",
    "omega_tilde_strip", "poly_roots_oracle", "reciprocal_adjoint", "region_membership",
    "remark1_witness", "render_map", "royster_ziegler_check", "schur_cohn", "shear",
]
