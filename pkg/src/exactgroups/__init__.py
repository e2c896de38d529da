"""Exact-arithmetic toolkit for matrix groups over Z and Q.

Subpackages cover: exact integer/rational linear algebra with Hermite and
Smith normal forms, SL2(Z) element machinery and congruence subgroups,
Z^2-valued 1-cocycles and coboundary solvers, the affine groups
Z^n x| SL_n(Z) with ICC and invariant-lattice analysis, and the Bruhat
decomposition of invertible 3x3 rational matrices.
"""

__version__ = "0.1.0"

from .lattice import LatticeBasis, fixed_sublattice, hnf, snf, solve_integer
from .matrix import ExactError, Matrix, PreconditionError, ShapeError

__all__ = [
    "ExactError",
    "LatticeBasis",
    "Matrix",
    "PreconditionError",
    "ShapeError",
    "__version__",
    "fixed_sublattice",
    "hnf",
    "snf",
    "solve_integer",
]
