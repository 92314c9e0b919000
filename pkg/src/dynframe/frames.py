"""Frame-level analysis: bounds, duals, duality checks, fusion decompositions.

A frame is stored through its synthesis matrix F (columns f_i).  All
spectral questions about the frame reduce to the frame operator
S = F F*, which is Hermitian positive semidefinite; bounds are its
extreme eigenvalues.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DimensionMismatch, NotAFrame, ShapeMismatch, ZeroVector
from .numkernel import DEFAULT_TOL, as_matrix, field_of, fro, hermitian_eig, svd_rank


@dataclass(frozen=True)
class Frame:
    """Finite frame candidate: an n x k synthesis matrix with nonzero columns.

    Column order is meaningful; scaling certificates index weights by
    position.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if m.shape[1] == 0:
            raise ValueError("a frame needs at least one vector")
        norms = np.linalg.norm(m, axis=0)
        if np.any(norms == 0.0):
            bad = int(np.argmin(norms))
            raise ZeroVector(f"vector {bad} is zero")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_vectors(cls, vectors) -> "Frame":
        cols = [np.asarray(v).ravel() for v in vectors]
        if not cols:
            raise ValueError("a frame needs at least one vector")
        dims = {c.shape[0] for c in cols}
        if len(dims) != 1:
            raise DimensionMismatch(f"mixed vector dimensions {sorted(dims)}")
        return cls(np.column_stack(cols))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def size(self) -> int:
        return self.matrix.shape[1]

    @property
    def field(self) -> str:
        return field_of(self.matrix)

    @property
    def vectors(self):
        return [self.matrix[:, i] for i in range(self.size)]

    def close_to(self, other: "Frame", tol: float = DEFAULT_TOL) -> bool:
        """Entrywise order-sensitive comparison."""
        if self.matrix.shape != other.matrix.shape:
            return False
        return fro(self.matrix - other.matrix) <= tol * max(1.0, fro(self.matrix))


@dataclass(frozen=True)
class FrameReport:
    lower_bound: float
    upper_bound: float
    is_frame: bool
    is_tight: bool
    tight_constant: Optional[float]
    parseval: bool


@dataclass(frozen=True)
class FusionDecomposition:
    subspaces: list          # orthonormal bases of the W_s
    lower_bound: float       # C
    upper_bound: float       # D
    is_fusion_frame: bool


def frame_operator(frame: Frame) -> np.ndarray:
    """S = F F* = sum_i f_i f_i*."""
    f = frame.matrix
    s = f @ f.conj().T
    return (s + s.conj().T) / 2.0


def analyze(frame: Frame, tol: float = DEFAULT_TOL) -> FrameReport:
    """Frame bounds A = lambda_min(S), B = lambda_max(S) and derived flags.

    Rank-deficient systems come back with is_frame false rather than an
    error; tightness is decided spectrally here (the diagram-vector test
    in the scalability module is an independent oracle for the same
    question).
    """
    lam, _ = hermitian_eig(frame_operator(frame), tol)
    upper = float(lam[0])
    lower = float(lam[-1])
    is_frame = lower > tol
    is_tight = is_frame and (upper - lower) <= tol * upper
    constant = (upper + lower) / 2.0 if is_tight else None
    parseval = is_tight and abs(lower - 1.0) <= tol
    return FrameReport(lower_bound=lower, upper_bound=upper, is_frame=is_frame,
                       is_tight=is_tight, tight_constant=constant, parseval=parseval)


def canonical_dual(frame: Frame, tol: float = DEFAULT_TOL) -> Frame:
    """The canonical dual {S^{-1} f_i}."""
    report = analyze(frame, tol)
    if not report.is_frame:
        raise NotAFrame(f"lower bound {report.lower_bound:.3e} is not positive")
    s = frame_operator(frame)
    dual = np.linalg.solve(s, frame.matrix)
    return Frame(dual)


def verify_duality(frame: Frame, dual: Frame, tol: float = DEFAULT_TOL) -> bool:
    """True iff F G* = I within tol."""
    if frame.matrix.shape != dual.matrix.shape:
        raise ShapeMismatch(
            f"frame is {frame.matrix.shape}, candidate dual is {dual.matrix.shape}")
    prod = frame.matrix @ dual.matrix.conj().T
    return fro(prod - np.eye(frame.dim)) <= tol


def fusion_check(subframes, tol: float = DEFAULT_TOL) -> FusionDecomposition:
    """Check whether the spans W_s of the subframes form a fusion frame.

    Each W_s is the numerical column span of its subframe; the fusion
    bounds C, D are the extreme eigenvalues of sum_s P_s where P_s is
    the orthogonal projection onto W_s.
    """
    subframes = list(subframes)
    if not subframes:
        raise ValueError("need at least one subframe")
    n = subframes[0].dim
    for i, sub in enumerate(subframes):
        if sub.dim != n:
            raise DimensionMismatch(f"subframe {i} has dim {sub.dim}, expected {n}")
    bases = []
    total = np.zeros((n, n), dtype=complex if any(s.field == "complex" for s in subframes) else float)
    for sub in subframes:
        _, _, basis = svd_rank(sub.matrix, tol)
        bases.append(basis)
        total = total + basis @ basis.conj().T
    lam, _ = hermitian_eig(total, tol)
    lower = float(lam[-1])
    upper = float(lam[0])
    return FusionDecomposition(subspaces=bases, lower_bound=lower,
                               upper_bound=upper, is_fusion_frame=lower > tol)
