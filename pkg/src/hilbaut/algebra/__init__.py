"""Exact scalars, truncated series and basic trace generating functions."""

from .cyclotomic import (
    CyclotomicNumber,
    cyc_as_integer,
    cyc_normalize,
    cyclotomic_polynomial,
    euler_phi,
    root_of_unity,
)
from .series import (
    DEFAULT_TRUNCATION,
    ScalarKindError,
    TruncatedSeries,
    TruncationError,
    format_series,
    series_product,
)
from .traces import (
    GradedEigenvalues,
    eigenvalues,
    ext_trace_series,
    sym_trace_series,
    tensor_trace_series,
)

__all__ = [
    "CyclotomicNumber",
    "cyc_as_integer",
    "cyc_normalize",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
    "DEFAULT_TRUNCATION",
    "ScalarKindError",
    "TruncatedSeries",
    "TruncationError",
    "format_series",
    "series_product",
    "GradedEigenvalues",
    "eigenvalues",
    "ext_trace_series",
    "sym_trace_series",
    "tensor_trace_series",
]
