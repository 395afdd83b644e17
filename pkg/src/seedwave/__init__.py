"""Band-limited wavelets generated by sinc interpolation of finite seed sequences."""
from .construct import ConstructionSystem, assemble_system, build_symmetric_wavelet, solve_dense
from .exceptions import (
    AdmissibilityError,
    ConvergenceError,
    DegenerateInputError,
    FileFormatError,
    NotCenteredError,
    ParityError,
    SeedwaveError,
    SingularMatrixError,
    ValidationError,
)
from .moments import MomentReport, analytic_moment, moment_fd_oracle, moment_matrix, vanishing_order
from .quadrature import QuadratureConfig, central_difference, integrate
from .seedseq import SeedSequence, decompose_even_odd, mean, new_seed, random_seed, reverse
from .transform import CwtGrid, SeedCWT, cwt, dilate_shift
from .wavelet import SeedWavelet, admissibility_constant, energy, evaluate, evaluate_grid, spectrum

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityError",
    "ConstructionSystem",
    "ConvergenceError",
    "CwtGrid",
    "DegenerateInputError",
    "FileFormatError",
    "MomentReport",
    "NotCenteredError",
    "ParityError",
    "QuadratureConfig",
    "SeedCWT",
    "SeedSequence",
    "SeedWavelet",
    "SeedwaveError",
    "SingularMatrixError",
    "ValidationError",
    "admissibility_constant",
    "analytic_moment",
    "assemble_system",
    "build_symmetric_wavelet",
    "central_difference",
    "cwt",
    "decompose_even_odd",
    "dilate_shift",
    "energy",
    "evaluate",
    "evaluate_grid",
    "integrate",
    "mean",
    "moment_fd_oracle",
    "moment_matrix",
    "new_seed",
    "random_seed",
    "reverse",
    "solve_dense",
    "spectrum",
    "vanishing_order",
]
