"""Frames generated by iterating operators: analysis, duals, scaling.

The package splits into a small numerical kernel (eigen/SVD/feasibility
with explicit tolerances), frame analysis, iterated-system dynamics and
sampling, scalability certification with an independent diagram-vector
oracle, structured constructions, and a JSON command-line surface.
"""

from .errors import (AllZeroCoefficients, CriterionFailed, DegenerateTrace,
                     DimensionMismatch, DynframeError, IndexMismatch,
                     IndexOutOfRange, InputError, KTooSmall, NotAFrame,
                     NotHermitian, NotNormal, NumericalFailure, ShapeMismatch,
                     SingularTransport, TemplateMismatch, ZeroVector)
from .numkernel import (DEFAULT_TOL, Feasible, InfeasibleWitness, fro,
                        hermitian_eig, inner, nonneg_feasible, svd_rank,
                        unitary_diagonalize)
from .frames import (Frame, FrameReport, FusionDecomposition, analyze,
                     canonical_dual, frame_operator, fusion_check,
                     verify_duality)
from .dynamics import (DualSystem, DynamicalSystemSpec, SampleSet,
                       TransportResult, diagonal_reduce, dynamical_dual,
                       iterate, reconstruct, take_samples, transport)
from .scalability import (DiagonalScalingSystem, DiagramVector,
                          ScalingCertificate, build_diagonal_system,
                          diagram_vector, gramian_scaling_check,
                          normal_scalability, real_one_vector_obstruction,
                          solve_diagonal_system, solve_scaling,
                          support_pattern_check, tight_via_diagram)
from .constructions import (BlockDiagSpec, CompanionSpec, TwoParamBlock,
                            block_diag, check_2scale, check_2x4, companion,
                            embed, harmonic, multigen_rotation, r3_structured,
                            rotation_system, tight_2x3)
from .verify import SUITE_NAMES, SuiteResult, run_suite, run_suites

__all__ = [
    "AllZeroCoefficients", "CriterionFailed", "DegenerateTrace",
    "DimensionMismatch", "DynframeError", "IndexMismatch", "IndexOutOfRange",
    "InputError", "KTooSmall", "NotAFrame", "NotHermitian", "NotNormal",
    "NumericalFailure", "ShapeMismatch", "SingularTransport",
    "TemplateMismatch", "ZeroVector",
    "DEFAULT_TOL", "Feasible", "InfeasibleWitness", "fro", "hermitian_eig",
    "inner", "nonneg_feasible", "svd_rank", "unitary_diagonalize",
    "Frame", "FrameReport", "FusionDecomposition", "analyze",
    "canonical_dual", "frame_operator", "fusion_check", "verify_duality",
    "DualSystem", "DynamicalSystemSpec", "SampleSet", "TransportResult",
    "diagonal_reduce", "dynamical_dual", "iterate", "reconstruct",
    "take_samples", "transport",
    "DiagonalScalingSystem", "DiagramVector", "ScalingCertificate",
    "build_diagonal_system", "diagram_vector", "gramian_scaling_check",
    "normal_scalability", "real_one_vector_obstruction",
    "solve_diagonal_system", "solve_scaling", "support_pattern_check",
    "tight_via_diagram",
    "BlockDiagSpec", "CompanionSpec", "TwoParamBlock", "block_diag",
    "check_2scale", "check_2x4", "companion", "embed", "harmonic",
    "multigen_rotation", "r3_structured", "rotation_system", "tight_2x3",
    "SUITE_NAMES", "SuiteResult", "run_suite", "run_suites",
    "__version__",
]

__version__ = "0.1.0"
