"""Exact n-th powers of 2x2 matrices and the combinatorial identities they yield."""
from .closed_form import (
    NonRationalEigenvalueError,
    theorem1_power,
    williams_eigen_power,
    williams_power,
    y_explicit,
    y_recurrence,
    z_explicit,
)
from .exact import GaussianRational, binomial, gaussian_div, int_pow
from .mat2 import Mat2, mat_mul, pow_binary, pow_naive
from .poly import Poly

__version__ = "0.1.0"
