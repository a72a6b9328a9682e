"""Invariants of natural automorphisms of Hilbert schemes of points on
surfaces: Fock-space traces, twisted Hodge numbers, and fixed loci."""

from .algebra import CyclotomicNumber, GradedEigenvalues, TruncatedSeries, root_of_unity
from .errors import (BoundExceeded, ConventionError, HilbAutError, InputError,
                     NonIntegralError, SpecValidationError)
from .fixed_points import enumerate_fixed_components, monomial_tangent_weights
from .fock import (FockTraceOptions, enumerate_basis, entropy, fock_trace_series,
                   induced_spectral_radius, lefschetz_number, poincare_series)
from .hodge import HodgeRow, HodgeTable, aut_dimension, conjectural_hodge_series, h_top_minus_one, hodge_p0_series
from .surface import AutomorphismSpec, LocalFixedDatum, SurfaceSpec, lefschetz_on_surface, preset, validate

__all__ = [
    "CyclotomicNumber",
    "GradedEigenvalues",
    "TruncatedSeries",
    "root_of_unity",
    "BoundExceeded",
    "ConventionError",
    "HilbAutError",
    "InputError",
    "NonIntegralError",
    "SpecValidationError",
    "enumerate_fixed_components",
    "monomial_tangent_weights",
    "FockTraceOptions",
    "enumerate_basis",
    "entropy",
    "fock_trace_series",
    "induced_spectral_radius",
    "lefschetz_number",
    "poincare_series",
    "HodgeRow",
    "HodgeTable",
    "aut_dimension",
    "conjectural_hodge_series",
    "h_top_minus_one",
    "hodge_p0_series",
    "AutomorphismSpec",
    "LocalFixedDatum",
    "SurfaceSpec",
    "lefschetz_on_surface",
    "preset",
    "validate",
]
