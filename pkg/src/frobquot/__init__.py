"""Exact computations with Frobenius quotients, inflation categories and
matrix factorizations over weighted projective lines."""

from .field import PrimeField, RationalField, make_field
from .grading import GradingGroup, group_L, group_trivial, group_V4, group_Z
from .inflation import GridObject, grid_stable_hom, is_projinj, validate_grid
from .kernels import BACKEND
from .mfact import Factorization, FactMorphism, fact_stable_hom_dim, psi, validate_factorization
from .functors import cok_functor, coset_restrict, inf_cok, theta_assemble, theta_disassemble
from .serialize import dumps, load, loads, save
from .tmod import BarModule, decompose, stable_hom_dim
from .wpl import MCMPresentation, dcok_direct, dcok_staged, line_bundle, rank2_bundle

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BarModule",
    "FactMorphism",
    "Factorization",
    "GradingGroup",
    "GridObject",
    "MCMPresentation",
    "PrimeField",
    "RationalField",
    "cok_functor",
    "coset_restrict",
    "dcok_direct",
    "dcok_staged",
    "decompose",
    "dumps",
    "fact_stable_hom_dim",
    "grid_stable_hom",
    "group_L",
    "group_V4",
    "group_Z",
    "group_trivial",
    "inf_cok",
    "is_projinj",
    "line_bundle",
    "load",
    "loads",
    "make_field",
    "psi",
    "rank2_bundle",
    "save",
    "stable_hom_dim",
    "theta_assemble",
    "theta_disassemble",
    "validate_factorization",
    "validate_grid",
]
