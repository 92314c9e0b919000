import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynframe.errors import NotHermitian, NotNormal
from dynframe.instances import random_normal_matrix, random_unitary
from dynframe.numkernel import (DEFAULT_TOL, Feasible, InfeasibleWitness, fro,
                                hermitian_eig, inner, nonneg_feasible,
                                svd_rank, unitary_diagonalize)


class TestHermitianEig:
    def test_diagonal_input(self):
        lam, v = hermitian_eig(np.diag([2.0, 1.0]))
        assert np.allclose(lam, [2.0, 1.0])
        assert np.allclose(v, np.eye(2))

    def test_swap_matrix(self):
        # hand eigensolve: eigenpairs (1, (1,1)/sqrt 2) and (-1, (1,-1)/sqrt 2)
        lam, v = hermitian_eig(np.array([[0.0, 1.0], [1.0, 0.0]]))
        assert np.allclose(lam, [1.0, -1.0])
        s = 1.0 / np.sqrt(2.0)
        assert np.allclose(np.abs(v), [[s, s], [s, s]])
        assert np.allclose(v[:, 0] / v[0, 0], [1.0, 1.0])
        assert np.allclose(v[:, 1] / v[0, 1], [1.0, -1.0])

    def test_identity(self):
        lam, _ = hermitian_eig(np.eye(3))
        assert np.allclose(lam, 1.0)

    def test_rejects_asymmetric(self):
        with pytest.raises(NotHermitian):
            hermitian_eig(np.array([[0.0, 1.0], [2.0, 0.0]]))

    def test_descending_order(self, rng):
        for _ in range(20):
            m = rng.standard_normal((4, 4))
            m = (m + m.T) / 2
            lam, _ = hermitian_eig(m)
            assert np.all(np.diff(lam) <= 1e-12)

    def test_roundtrip_residual(self, rng):
        tol = DEFAULT_TOL
        for _ in range(200):
            n = int(rng.integers(2, 7))
            m = rng.standard_normal((n, n))
            m = (m + m.T) / 2
            lam, v = hermitian_eig(m, tol)
            scale = max(1.0, fro(m))
            assert fro(m - v @ np.diag(lam) @ v.conj().T) <= 10 * tol * scale
            assert fro(v.conj().T @ v - np.eye(n)) <= 10 * tol


class TestUnitaryDiagonalize:
    def test_already_diagonal(self):
        u, d = unitary_diagonalize(np.diag([1.0, -1.0]))
        assert np.allclose(u, np.eye(2))
        assert np.allclose(d, np.diag([1.0, -1.0]))

    def test_rotation_eigenstructure(self):
        w = 2 * np.pi / 3
        rot = np.array([[np.cos(w), -np.sin(w)], [np.sin(w), np.cos(w)]])
        u, d = unitary_diagonalize(rot)
        assert np.allclose(np.diag(d), [np.exp(1j * w), np.exp(-1j * w)])
        # columns are (1, -i)/sqrt 2 and (1, i)/sqrt 2 up to a unit phase
        ref0 = np.array([1.0, -1.0j]) / np.sqrt(2.0)
        ref1 = np.array([1.0, 1.0j]) / np.sqrt(2.0)
        assert abs(abs(inner(u[:, 0], ref0)) - 1.0) < 1e-12
        assert abs(abs(inner(u[:, 1], ref1)) - 1.0) < 1e-12

    def test_rejects_nilpotent(self):
        with pytest.raises(NotNormal):
            unitary_diagonalize(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_roundtrip_on_random_normal(self, rng):
        # QLQ* construction keeps the inputs exactly normal
        tol = DEFAULT_TOL
        for t in range(1000):
            n = int(rng.integers(2, 6))
            field = "complex" if t % 2 else "real"
            a = random_normal_matrix(rng, n, field=field)
            u, d = unitary_diagonalize(a, tol)
            scale = max(1.0, fro(a))
            assert fro(a - u @ d @ u.conj().T) <= 10 * tol * scale
            assert fro(u.conj().T @ u - np.eye(n)) <= 10 * tol
            assert fro(d - np.diag(np.diag(d))) == 0.0


class TestSvdRank:
    def test_rank_one_projector(self):
        s, rank, basis = svd_rank(np.array([[1.0, 0.0], [0.0, 0.0]]))
        assert np.allclose(s, [1.0, 0.0])
        assert rank == 1
        assert basis.shape == (2, 1)

    def test_repeated_column_still_full_rank(self):
        m = np.array([[1.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
        _, rank, _ = svd_rank(m)
        assert rank == 2

    def test_ones_matrix(self):
        s, rank, _ = svd_rank(np.ones((2, 2)))
        assert np.allclose(s, [2.0, 0.0], atol=1e-12)
        assert rank == 1

    def test_column_basis_orthonormal(self, rng):
        for _ in range(20):
            m = rng.standard_normal((4, 6))
            _, rank, basis = svd_rank(m)
            assert basis.shape == (4, rank)
            assert np.allclose(basis.conj().T @ basis, np.eye(rank))


class TestNonnegFeasible:
    def test_simplex_margin(self):
        res = nonneg_feasible(np.array([[1.0, 1.0]]), np.array([1.0]))
        assert isinstance(res, Feasible)
        assert np.allclose(res.x, [0.5, 0.5], atol=1e-9)
        assert abs(res.margin - 0.5) < 1e-9

    def test_symmetric_ray_strict(self):
        res = nonneg_feasible(np.array([[1.0, -1.0]]), np.array([0.0]), strict=True)
        assert isinstance(res, Feasible)
        assert abs(res.x[0] - res.x[1]) < 1e-9
        assert res.margin > DEFAULT_TOL

    def test_contradictory_rows(self):
        res = nonneg_feasible(np.array([[1.0], [-1.0]]), np.array([1.0, 1.0]))
        assert isinstance(res, InfeasibleWitness)
        assert res.y @ res.system_rhs > DEFAULT_TOL
        assert np.max(res.system_matrix.T @ res.y) <= DEFAULT_TOL

    def test_deterministic(self, rng):
        a = rng.standard_normal((3, 6))
        b = a @ rng.uniform(0.1, 1.0, size=6)
        r1 = nonneg_feasible(a, b)
        r2 = nonneg_feasible(a, b)
        assert np.array_equal(r1.x, r2.x)
        assert r1.margin == r2.margin

    @settings(max_examples=30, deadline=None)
    @given(st.integers(1, 4), st.integers(2, 7), st.integers(0, 2 ** 31 - 1))
    def test_feasible_by_construction(self, rows, cols, seed):
        rng = np.random.default_rng(seed)
        a = rng.standard_normal((rows, cols))
        x0 = rng.uniform(0.2, 1.5, size=cols)
        res = nonneg_feasible(a, a @ x0)
        assert isinstance(res, Feasible)
        assert np.all(res.x >= 0.0)
        assert np.linalg.norm(a @ res.x - a @ x0) <= 1e-7 * max(1.0, np.linalg.norm(a @ x0))

    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 5), st.integers(0, 2 ** 31 - 1))
    def test_witness_inequalities(self, cols, seed):
        # start from any system, then push the target strictly outside the
        # cone by projecting it against a random direction
        rng = np.random.default_rng(seed)
        a = rng.standard_normal((3, cols))
        y0 = rng.standard_normal(3)
        y0 /= np.linalg.norm(y0)
        a = a - np.outer(y0, np.clip(y0 @ a, 0.0, None))
        reachable = a @ rng.uniform(0.0, 1.0, size=cols)
        # lift past whatever the cone can reach along y0, so y0 itself
        # separates b from the cone
        shift = 1.0 + max(0.0, -float(y0 @ reachable))
        b = reachable + shift * y0
        res = nonneg_feasible(a, b)
        assert isinstance(res, InfeasibleWitness)
        assert res.y @ b > DEFAULT_TOL
        assert np.max(a.T @ res.y) <= DEFAULT_TOL


class TestInnerConvention:
    def test_linear_in_first_argument(self):
        x = np.array([1.0 + 1.0j, 0.0])
        y = np.array([1.0, 1.0j])
        assert np.isclose(inner(2.0 * x, y), 2.0 * inner(x, y))
        assert np.isclose(inner(x, y), np.conj(inner(y, x)))

    def test_unitary_preserves_inner(self, rng):
        u = random_unitary(rng, 3, field="complex")
        x = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        y = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        assert np.isclose(inner(u @ x, u @ y), inner(x, y))
