"""Multi-point interpolation in generalized Schur classes on the unit disk.

The package solves and verifies the tangential problem of prescribing a
finite Taylor jet at each of several nodes inside the disk, for functions
that are meromorphic with a bounded number of poles and contractive away
from them. The main entry points are:

- ``InterpProblem`` and ``pick_system`` for the data and its Pick matrix,
- ``build_theta`` for the rational coefficient matrix of the linear
  fractional parametrization,
- ``lft_apply`` / ``lft_invert`` for moving between parameters and
  solutions,
- ``verify_solution``, ``classify_parameter``, ``divisor_remainder`` and
  ``omega_check`` for independent verification routes.
"""

from .errors import SchurInterpError
from .hermlin import Inertia, SystemMatrices, build_system, inertia, stein_series, stein_solve
from .interp import (
    ClassifyReport,
    DivisorRemainder,
    InterpProblem,
    LFTResult,
    OmegaVerdict,
    ParamPair,
    PickSystem,
    Theta,
    ThetaReport,
    Verdict,
    admissible,
    big_kernel_negsquares,
    build_theta,
    classify_parameter,
    divisor_remainder,
    hermite_phi,
    lft_apply,
    lft_invert,
    moment_vector,
    omega_check,
    pick_system,
    schwarz_pick_matrix,
    theta_blaschke,
    theta_selfcheck,
    verify_solution,
)
from .ratfun import Jet, Poly, RatFun, boundary_sup, const, identity, poly_roots, ratfun_jet, ratfun_reduce
from .schurclass import (
    Blaschke,
    ContourSpec,
    KreinLanger,
    blaschke_from_zeros,
    class_index,
    kernel_negsquares,
    winding_count,
    zeros_in_disk,
)

__version__ = "0.1.0"

__all__ = [
    "Blaschke",
    "ClassifyReport",
    "ContourSpec",
    "DivisorRemainder",
    "Inertia",
    "InterpProblem",
    "Jet",
    "KreinLanger",
    "LFTResult",
    "OmegaVerdict",
    "ParamPair",
    "PickSystem",
    "Poly",
    "RatFun",
    "SchurInterpError",
    "SystemMatrices",
    "Theta",
    "ThetaReport",
    "Verdict",
    "admissible",
    "big_kernel_negsquares",
    "blaschke_from_zeros",
    "boundary_sup",
    "build_system",
    "build_theta",
    "class_index",
    "classify_parameter",
    "const",
    "divisor_remainder",
    "hermite_phi",
    "identity",
    "inertia",
    "kernel_negsquares",
    "lft_apply",
    "lft_invert",
    "moment_vector",
    "omega_check",
    "pick_system",
    "poly_roots",
    "ratfun_jet",
    "ratfun_reduce",
    "schwarz_pick_matrix",
    "stein_series",
    "stein_solve",
    "theta_blaschke",
    "theta_selfcheck",
    "verify_solution",
    "winding_count",
    "zeros_in_disk",
]
