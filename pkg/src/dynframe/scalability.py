"""Tightness and scalability: diagram vectors, weight certificates, diagonal systems.

Two independent decision routes are kept deliberately separate:

* the direct feasibility formulation sum_i x_i f_i f_i* = I over x = w^2
  (primary, no unit-norm assumption), and
* the diagram-vector Gramian test on the unit-normalized frame (oracle).

Their agreement is a checked invariant, never assumed.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (NumericalFailure, ShapeMismatch, TemplateMismatch, ZeroVector)
from .frames import Frame
from .numkernel import (DEFAULT_TOL, Feasible, InfeasibleWitness, as_vector, fro,
                        hermitian_eig, nonneg_feasible)


@dataclass(frozen=True)
class DiagramVector:
    """Real-equivalent diagram vector of a single frame vector.

    Real field: n(n-1) entries, all pairs i<j contributing one
    difference f(i)^2 - f(j)^2 and one product sqrt(2n) f(i) f(j).
    Complex field: 3n(n-1)/2 entries; differences |f(i)|^2 - |f(j)|^2
    followed by the products sqrt(n) f(i) conj(f(j)) stored re/im per
    pair.  Everything carries the 1/sqrt(n-1) prefactor; n = 1 gives an
    empty vector.
    """

    dim: int
    field: str
    entries: np.ndarray


@dataclass(frozen=True)
class ScalingCertificate:
    """Nonnegative weights making {w_i f_i} tight (Parseval: lambda = 1)."""

    weights: np.ndarray      # w_i
    squares: np.ndarray      # x_i = w_i^2, the LP variables
    tight_constant: float
    residual: float          # || sum x_i f_i f_i* - lambda I ||_F
    strict: bool
    margin: float            # maximized min x_i


@dataclass(frozen=True)
class DiagonalScalingSystem:
    """Equality system for weights of an iterated diagonal-operator frame.

    Unknowns w^2_{s,j} are ordered generators-outer, powers-inner, the
    same order iterate() lists the frame vectors.  Rows: one per
    diagonal index i (rhs 1), then the real parts for pairs i<j (rhs 0),
    then, over a complex field, the imaginary parts for those pairs.
    """

    diag: np.ndarray         # a_1..a_n
    generators: tuple        # coordinate vectors x_s
    iters: tuple             # L_s per generator
    matrix: np.ndarray       # real equality matrix
    rhs: np.ndarray
    unknown_index: tuple     # ((s, j), ...) column labels


def _pairs(n: int):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def diagram_vector(f, field: Optional[str] = None) -> DiagramVector:
    """Diagram vector of a nonzero vector, in the frame's field convention."""
    f = as_vector(f)
    if np.linalg.norm(f) == 0.0:
        raise ZeroVector("diagram vector of the zero vector is undefined")
    if field is None:
        field = "complex" if np.iscomplexobj(f) else "real"
    n = f.shape[0]
    if n == 1:
        return DiagramVector(dim=1, field=field, entries=np.zeros(0))
    scale = 1.0 / np.sqrt(n - 1.0)
    pairs = _pairs(n)
    if field == "real":
        fr = np.asarray(f, dtype=float)
        diffs = [fr[i] ** 2 - fr[j] ** 2 for i, j in pairs]
        prods = [np.sqrt(2.0 * n) * fr[i] * fr[j] for i, j in pairs]
        entries = scale * np.array(diffs + prods)
    else:
        fc = np.asarray(f, dtype=complex)
        diffs = [(fc[i] * fc[i].conjugate() - fc[j] * fc[j].conjugate()).real
                 for i, j in pairs]
        prods = []
        for i, j in pairs:
            p = np.sqrt(float(n)) * fc[i] * fc[j].conjugate()
            prods.extend([p.real, p.imag])
        entries = scale * np.array(diffs + prods)
    return DiagramVector(dim=n, field=field, entries=entries)


def tight_via_diagram(frame: Frame, tol: float = DEFAULT_TOL) -> bool:
    """Tightness test: the diagram vectors of a tight frame sum to zero."""
    total = None
    for v in frame.vectors:
        d = diagram_vector(v, field=frame.field)
        total = d.entries if total is None else total + d.entries
    mass = float(sum(np.linalg.norm(v) ** 2 for v in frame.vectors))
    return float(np.linalg.norm(total)) <= tol * mass


def _scaling_system(frame: Frame):
    """Rows of sum_i x_i vech(f_i f_i*) = vech(I), split re/im."""
    f = frame.matrix
    n, k = f.shape
    pairs = _pairs(n)
    rows = []
    rhs = []
    for i in range(n):
        rows.append(np.abs(f[i, :]) ** 2)
        rhs.append(1.0)
    offdiag = [f[i, :] * f[j, :].conjugate() for i, j in pairs]
    for row in offdiag:
        rows.append(row.real)
        rhs.append(0.0)
    if frame.field == "complex":
        for row in offdiag:
            rows.append(row.imag)
            rhs.append(0.0)
    return np.array(rows, dtype=float), np.array(rhs)


def scaling_residual(frame: Frame, squares) -> float:
    x = np.asarray(squares, dtype=float)
    f = frame.matrix
    s = (f * x) @ f.conj().T
    return fro(s - np.eye(frame.dim))


def _certificate(frame: Frame, feas: Feasible, tol: float) -> ScalingCertificate:
    x = np.clip(feas.x, 0.0, None)
    residual = scaling_residual(frame, x)
    if residual > tol:
        raise NumericalFailure(
            f"scaling residual {residual:.3e} exceeds tolerance {tol:.1e}")
    return ScalingCertificate(weights=np.sqrt(x), squares=x, tight_constant=1.0,
                              residual=residual, strict=feas.margin > tol,
                              margin=feas.margin)


def solve_scaling(frame: Frame, strict: bool = False, tol: float = DEFAULT_TOL):
    """Weights w_i >= 0 with sum w_i^2 f_i f_i* = I, or a Farkas witness.

    The solver always maximizes the minimum of x = w^2, so the margin
    field is meaningful whether or not strict is requested; the strict
    flag on the certificate records margin > tol.
    """
    aeq, beq = _scaling_system(frame)
    res = nonneg_feasible(aeq, beq, strict=strict, tol=tol)
    if isinstance(res, InfeasibleWitness):
        return res
    return _certificate(frame, res, tol)


def gramian_scaling_check(frame: Frame, tol: float = DEFAULT_TOL):
    """Diagram-Gramian scalability oracle.

    Vectors are unit-normalized first (the characterization is stated
    for unit-norm frames; rescaling is absorbed into the weights).
    Returns (Gramian of the diagram vectors, orthonormal basis of its
    null space, whether a nonnegative nonzero null vector exists).
    """
    cols = [v / np.linalg.norm(v) for v in frame.vectors]
    diag = np.column_stack([diagram_vector(v, field=frame.field).entries
                            for v in cols]) if frame.dim > 1 else np.zeros((0, len(cols)))
    gram = diag.T @ diag
    gram = (gram + gram.T) / 2.0
    k = gram.shape[0]

    lam, vecs = hermitian_eig(gram, tol)
    null_mask = lam <= tol * max(1.0, float(lam[0]))
    null_basis = vecs[:, null_mask]

    sys_matrix = np.vstack([gram, np.ones((1, k))])
    sys_rhs = np.concatenate([np.zeros(k), [1.0]])
    res = nonneg_feasible(sys_matrix, sys_rhs, tol=tol)
    found = isinstance(res, Feasible)
    return gram, null_basis, found


def build_diagonal_system(a, generators, iters) -> DiagonalScalingSystem:
    """Weight equations for the frame {D^j v_s} with D = diag(a).

    Diagonal rows demand sum_s |x_s(i)|^2 sum_j w^2_{s,j} |a_i|^{2j} = 1;
    each pair i<j demands sum_s x_s(i) conj(x_s(j)) sum_j w^2_{s,j}
    (a_i conj(a_j))^j = 0, split into real and imaginary parts over a
    complex field.
    """
    a = as_vector(a)
    n = a.shape[0]
    gens = tuple(as_vector(v) for v in generators)
    iters = tuple(int(l) for l in iters)
    if not gens:
        raise ShapeMismatch("need at least one generator")
    if len(iters) != len(gens):
        raise ShapeMismatch(f"{len(iters)} iteration counts for {len(gens)} generators")
    for s, v in enumerate(gens):
        if v.shape[0] != n:
            raise ShapeMismatch(f"generator {s} has dim {v.shape[0]}, expected {n}")
    if any(l < 0 for l in iters):
        raise ValueError("iteration counts must be nonnegative")

    complex_field = np.iscomplexobj(a) or any(np.iscomplexobj(v) for v in gens)
    unknowns = [(s, j) for s in range(len(gens)) for j in range(iters[s] + 1)]
    ncols = len(unknowns)
    pairs = _pairs(n)

    diag_rows = np.zeros((n, ncols))
    for col, (s, j) in enumerate(unknowns):
        v = gens[s]
        for i in range(n):
            diag_rows[i, col] = abs(v[i]) ** 2 * abs(a[i]) ** (2 * j)

    pair_rows = np.zeros((len(pairs), ncols), dtype=complex)
    for col, (s, j) in enumerate(unknowns):
        v = gens[s]
        for r, (i, l) in enumerate(pairs):
            pair_rows[r, col] = v[i] * np.conj(v[l]) * (a[i] * np.conj(a[l])) ** j

    blocks = [diag_rows, pair_rows.real]
    rhs = [np.ones(n), np.zeros(len(pairs))]
    if complex_field:
        blocks.append(pair_rows.imag)
        rhs.append(np.zeros(len(pairs)))
    return DiagonalScalingSystem(diag=a, generators=gens, iters=iters,
                                 matrix=np.vstack(blocks), rhs=np.concatenate(rhs),
                                 unknown_index=tuple(unknowns))


def solve_diagonal_system(system: DiagonalScalingSystem, tol: float = DEFAULT_TOL):
    """Run the feasibility solver on a diagonal scaling system.

    Returns a certificate whose weights follow the system's unknown
    order (which matches iterate() on the corresponding spec), or the
    solver's witness.
    """
    res = nonneg_feasible(system.matrix, system.rhs, tol=tol)
    if isinstance(res, InfeasibleWitness):
        return res
    cols = []
    for s, j in system.unknown_index:
        cols.append(system.diag ** j * system.generators[s])
    frame = Frame(np.column_stack(cols))
    return _certificate(frame, res, tol)


def normal_scalability(a, generators, iters, tol: float = DEFAULT_TOL):
    """Scalability of {A^j f_s} for normal A, via the diagonal model.

    Diagonalizes A = U D U*, assembles the diagonal system on the
    rotated generators U* f_s, and solves.  Weights transfer verbatim
    to the original iterated frame, where the certificate residual is
    evaluated.
    """
    from .dynamics import DynamicalSystemSpec, diagonal_reduce, iterate

    gens = tuple(as_vector(f) for f in generators)
    iters = tuple(int(l) for l in iters)
    spec = DynamicalSystemSpec(operators=(a,), generators=gens,
                               triples=tuple((0, s, l) for s, l in enumerate(iters)))
    _, d, reduced = diagonal_reduce(spec, tol)
    system = build_diagonal_system(np.diag(d), reduced.generators, iters)
    res = nonneg_feasible(system.matrix, system.rhs, tol=tol)
    if isinstance(res, InfeasibleWitness):
        return res
    return _certificate(iterate(spec), res, tol)


def real_one_vector_obstruction(a) -> bool:
    """Whether a real diagonal blocks strict scalability from one generator.

    Strictness forces a_i a_j < 0 for every index pair; three or more
    diagonal entries make that sign pattern impossible, so any n >= 3
    real diagonal is obstructed regardless of the entries.
    """
    a = np.asarray(a, dtype=float).ravel()
    return a.shape[0] >= 3


def support_pattern_check(frame: Frame, tol: float = DEFAULT_TOL) -> bool:
    """Necessary support condition on basis-plus-two-vector templates.

    The frame must consist of n or n-1 distinct standard basis vectors
    together with exactly two others, f and g.  Scalability of such a
    system forces f and g to have exactly two nonzero entries, in the
    same coordinate pair; the check returns that condition.
    """
    n = frame.dim
    basis_idx = []
    extras = []
    for v in frame.vectors:
        mags = np.abs(v)
        top = int(np.argmax(mags))
        if abs(v[top] - 1.0) <= tol and np.all(np.delete(mags, top) <= tol):
            basis_idx.append(top)
        else:
            extras.append(v)
    k = frame.size
    distinct = len(set(basis_idx)) == len(basis_idx)
    shape_full = len(basis_idx) == n and k == n + 2
    shape_short = len(basis_idx) == n - 1 and k == n + 1
    if len(extras) != 2 or not distinct or not (shape_full or shape_short):
        raise TemplateMismatch(
            f"{k} vectors with {len(basis_idx)} basis columns fits neither template")
    f, g = extras
    supp_f = np.flatnonzero(np.abs(f) > tol)
    supp_g = np.flatnonzero(np.abs(g) > tol)
    return (len(supp_f) == 2 and len(supp_g) == 2
            and bool(np.array_equal(supp_f, supp_g)))
