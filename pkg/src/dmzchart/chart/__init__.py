"""Conjugate charts: data model, file format, and pointwise DMZ predicates."""

from .core import ConjugateChart, Grid, ambient_gram, conj_point
from .fileio import load_chart, load_curve_pair, parse_chart_text
from .ops import (
    DmzResidualReport, GeometricReport, IntegrabilityResult, LaplaceInvariants,
    dmz_apply, geometric_consistency, integrability_residual,
    intersection_type_residual, laplace_invariants,
)

__all__ = [
    "ConjugateChart", "Grid", "ambient_gram", "conj_point",
    "load_chart", "load_curve_pair", "parse_chart_text",
    "DmzResidualReport", "GeometricReport", "IntegrabilityResult",
    "LaplaceInvariants", "dmz_apply", "geometric_consistency",
    "integrability_residual", "intersection_type_residual",
    "laplace_invariants",
]
