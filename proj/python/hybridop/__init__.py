"""Hybrid Baskakov-Szasz operator: evaluation, moments, and tail mass."""

from ._core import (
    OperatorValue,
    apply,
    central_moments,
    derivative,
    function_names,
    lambda_norm,
    mgf,
    raw_moment,
    tail_mass,
)

__all__ = [
    "OperatorValue",
    "apply",
    "central_moments",
    "derivative",
    "function_names",
    "lambda_norm",
    "mgf",
    "raw_moment",
    "tail_mass",
]
