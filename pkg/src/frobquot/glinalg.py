"""Homogeneous linear algebra over graded polynomial bases, in one namespace.

Scalars live in :mod:`frobquot.field`, polynomials and homogeneous matrices in
:mod:`frobquot.poly`, and the graded diagonalization over K[z] in
:mod:`frobquot.zlinalg`.
"""

from .field import FieldError, PrimeField, RationalField, make_field
from .poly import (
    FreeGradedModule,
    GradedBase,
    HomogeneityError,
    HomogMatrix,
    HomPoly,
    PolySyntaxError,
    WindowError,
    parse_poly,
    slice_matrix,
    univariate_base,
    variable_map,
    window_instantiate,
)
from .zlinalg import GradedDiag, ZMat, column_rank, graded_diag

__all__ = [
    "FieldError",
    "FreeGradedModule",
    "GradedBase",
    "GradedDiag",
    "HomPoly",
    "HomogMatrix",
    "HomogeneityError",
    "PolySyntaxError",
    "PrimeField",
    "RationalField",
    "WindowError",
    "ZMat",
    "column_rank",
    "graded_diag",
    "make_field",
    "parse_poly",
    "slice_matrix",
    "univariate_base",
    "variable_map",
    "window_instantiate",
]
