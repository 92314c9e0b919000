"""Dense small-scale numeric substrate.

Field-tagged scalars live in plain numpy arrays (float64 = real,
complex128 = complex).  Everything here is a pure function over small
dense matrices; no state, no caching.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg
from scipy.optimize import linprog

from .errors import NotHermitian, NotNormal, NumericalFailure

DEFAULT_TOL = 1e-9

# Margin values saturate here when the max-min program is unbounded
# (degenerate rays such as x1 = x2 free); real scaling problems are
# trace-bounded and never reach it.
MARGIN_CAP = 1e6

_LP_OPTIONS = {
    "primal_feasibility_tolerance": 1e-10,
    "dual_feasibility_tolerance": 1e-10,
}


def field_of(arr) -> str:
    return "complex" if np.iscomplexobj(arr) else "real"


def as_matrix(data, field=None):
    """Validate and freeze a 2-d array; entries must be finite."""
    dtype = complex if field == "complex" else (float if field == "real" else None)
    m = np.array(data, dtype=dtype)
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={m.ndim}")
    if m.dtype not in (np.float64, np.complex128):
        m = m.astype(complex if np.iscomplexobj(m) else float)
    if not np.all(np.isfinite(m.view(float) if m.dtype == np.float64 else m)):
        raise ValueError("matrix entries must be finite")
    m.setflags(write=False)
    return m


def as_vector(data, field=None):
    dtype = complex if field == "complex" else (float if field == "real" else None)
    v = np.array(data, dtype=dtype)
    if v.ndim != 1:
        raise ValueError(f"expected a vector, got ndim={v.ndim}")
    if v.dtype not in (np.float64, np.complex128):
        v = v.astype(complex if np.iscomplexobj(v) else float)
    if not np.all(np.isfinite(v) if v.dtype == np.float64 else np.isfinite(v.real) & np.isfinite(v.imag)):
        raise ValueError("vector entries must be finite")
    v.setflags(write=False)
    return v


def inner(x, y):
    """<x, y>, linear in x and conjugate-linear in y."""
    return complex(np.vdot(y, x)) if np.iscomplexobj(x) or np.iscomplexobj(y) else float(np.dot(x, y))


def fro(m) -> float:
    return float(np.linalg.norm(m))


def hermitian_eig(m, tol: float = DEFAULT_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues descending, eigenvector matrix V) with
    m = V diag(lam) V*.  Raises NotHermitian when the symmetry defect
    exceeds tol relative to ||m||.
    """
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("hermitian_eig needs a square matrix")
    defect = fro(m - m.conj().T)
    if defect > tol * max(1.0, fro(m)):
        raise NotHermitian(f"symmetry defect {defect:.3e} exceeds tolerance")
    try:
        lam, vecs = np.linalg.eigh((m + m.conj().T) / 2.0)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(str(exc)) from exc
    order = np.argsort(lam)[::-1]
    return lam[order], vecs[:, order]


def _canonical_order(vals):
    # descending real part, then descending imaginary part
    return np.lexsort((-vals.imag, -vals.real))


def unitary_diagonalize(a, tol: float = DEFAULT_TOL):
    """Unitary diagonalization a = U D U* of a normal matrix.

    Output stays real-typed when a is symmetric real; otherwise it is
    complex (rotations and other real normal matrices have non-real
    spectra).  Eigenvalues are ordered by descending real part, ties
    broken by descending imaginary part.
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("unitary_diagonalize needs a square matrix")
    comm = a @ a.conj().T - a.conj().T @ a
    if fro(comm) > tol * max(1.0, fro(a) ** 2):
        raise NotNormal(f"commutator norm {fro(comm):.3e} exceeds tolerance")

    if fro(a - a.conj().T) <= tol * max(1.0, fro(a)):
        lam, u = hermitian_eig(a, tol)
        return u, np.diag(lam).astype(u.dtype)

    try:
        t, u = scipy.linalg.schur(a.astype(complex), output="complex")
    except Exception as exc:  # LAPACK failures surface as various types
        raise NumericalFailure(str(exc)) from exc
    d = np.diag(t).copy()
    order = _canonical_order(d)
    u = u[:, order]
    d = d[order]
    dm = np.diag(d)
    if fro(a - u @ dm @ u.conj().T) > 10 * tol * max(1.0, fro(a)):
        raise NumericalFailure("diagonalization residual out of tolerance")
    return u, dm


def svd_rank(m, tol: float = DEFAULT_TOL):
    """Singular values, numerical rank, and an orthonormal column basis."""
    m = np.asarray(m)
    try:
        u, s, _ = np.linalg.svd(m, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(str(exc)) from exc
    smax = s[0] if s.size else 0.0
    rank = int(np.sum(s > tol * smax)) if smax > 0 else 0
    return s, rank, u[:, :rank]


@dataclass(frozen=True)
class Feasible:
    """Nonnegative solution of an equality system, with its min-entry margin."""

    x: np.ndarray
    margin: float


@dataclass(frozen=True)
class InfeasibleWitness:
    """Farkas certificate: y with y'Aeq <= 0 componentwise and y'beq > 0."""

    y: np.ndarray
    gap: float            # y' beq
    max_violation: float  # max entry of y' Aeq
    system_matrix: np.ndarray
    system_rhs: np.ndarray


def nonneg_feasible(aeq, beq, strict: bool = False, tol: float = DEFAULT_TOL):
    """Solve aeq @ x = beq, x >= 0, maximizing the smallest entry of x.

    Returns Feasible(x, margin) where margin is the maximized min entry
    (capped at MARGIN_CAP on unbounded rays), or an InfeasibleWitness.
    The same program is solved whether or not strict is set; callers
    decide strictness by comparing margin against their tolerance, so
    results are identical across both modes.
    """
    aeq = np.asarray(aeq, dtype=float)
    beq = np.asarray(beq, dtype=float).ravel()
    if aeq.ndim != 2:
        raise ValueError("aeq must be a matrix")
    nrows, ncols = aeq.shape
    if beq.shape[0] != nrows:
        raise ValueError("beq length must equal aeq row count")
    if ncols == 0:
        raise ValueError("system has no unknowns")
    if not (np.all(np.isfinite(aeq)) and np.all(np.isfinite(beq))):
        raise ValueError("system entries must be finite")

    # variables (x_0..x_{k-1}, t); maximize t with x_i >= t
    cost = np.zeros(ncols + 1)
    cost[-1] = -1.0
    a_ub = np.hstack([-np.eye(ncols), np.ones((ncols, 1))])
    a_eq = np.hstack([aeq, np.zeros((nrows, 1))])
    bounds = [(0.0, None)] * ncols + [(0.0, MARGIN_CAP)]
    res = linprog(cost, A_ub=a_ub, b_ub=np.zeros(ncols), A_eq=a_eq, b_eq=beq,
                  bounds=bounds, method="highs", options=_LP_OPTIONS)

    if res.status == 0:
        x = np.array(res.x[:ncols])
        # project back onto the equality set; LP vertices are accurate but
        # a least-squares polish costs nothing at this scale
        residual = beq - aeq @ x
        if np.linalg.norm(residual, np.inf) > 1e-14:
            dx = np.linalg.lstsq(aeq, residual, rcond=None)[0]
            x2 = x + dx
            if x2.min() >= -1e-11:
                x = np.clip(x2, 0.0, None)
        return Feasible(x=x, margin=float(x.min()))

    if res.status == 2:
        w = linprog(-beq, A_ub=aeq.T, b_ub=np.zeros(ncols),
                    bounds=[(-1.0, 1.0)] * nrows, method="highs", options=_LP_OPTIONS)
        if w.status != 0:
            raise NumericalFailure("witness program did not solve")
        y = np.array(w.x)
        gap = float(beq @ y)
        viol = float(np.max(aeq.T @ y)) if ncols else 0.0
        if gap <= tol or viol > tol:
            raise NumericalFailure("infeasibility reported but no valid Farkas witness found")
        return InfeasibleWitness(y=y, gap=gap, max_violation=viol,
                                 system_matrix=aeq, system_rhs=beq)

    raise NumericalFailure(f"linear program ended with status {res.status}")
