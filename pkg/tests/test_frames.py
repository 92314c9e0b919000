import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dynframe.errors import DimensionMismatch, NotAFrame, ShapeMismatch, ZeroVector
from dynframe.frames import (Frame, analyze, canonical_dual, frame_operator,
                             fusion_check, verify_duality)
from dynframe.instances import random_frame


def cols(*vectors):
    return Frame(np.column_stack([np.asarray(v, dtype=float) for v in vectors]))


PARSEVAL_PM = cols([0.5, 0.5], [0.5, -0.5], [0.5, 0.5], [0.5, -0.5])


class TestFrameType:
    def test_rejects_zero_vector(self):
        with pytest.raises(ZeroVector):
            cols([1.0, 0.0], [0.0, 0.0])

    def test_rejects_mixed_dims(self):
        with pytest.raises(DimensionMismatch):
            Frame.from_vectors([np.array([1.0, 0.0]), np.array([1.0, 0.0, 0.0])])

    def test_field_tag(self):
        assert cols([1, 0], [0, 1]).field == "real"
        assert Frame(np.array([[1.0 + 0j, 1j]])).field == "complex"


class TestFrameOperator:
    def test_orthonormal_basis(self):
        assert np.array_equal(frame_operator(cols([1, 0], [0, 1])), np.eye(2))

    def test_repeated_vector(self):
        s = frame_operator(cols([1, 0], [1, 0], [0, 1]))
        assert np.array_equal(s, np.diag([2.0, 1.0]))

    def test_sign_flip_orbit_is_parseval(self):
        assert np.allclose(frame_operator(PARSEVAL_PM), np.eye(2))


class TestAnalyze:
    def test_unbalanced_bounds(self):
        rep = analyze(cols([1, 0], [1, 0], [0, 1]))
        assert (rep.lower_bound, rep.upper_bound) == (1.0, 2.0)
        assert rep.is_frame and not rep.is_tight
        assert rep.tight_constant is None

    def test_basis_plus_repeat_and_its_scaling(self):
        fr = cols([1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 0])
        rep = analyze(fr)
        assert (rep.lower_bound, rep.upper_bound) == (1.0, 2.0)
        s = 2.0 ** -0.5
        scaled = cols([s, 0, 0], [0, 1, 0], [0, 0, 1], [s, 0, 0])
        assert analyze(scaled).parseval

    def test_rank_deficient(self):
        rep = analyze(Frame(np.array([[1.0], [0.0]])))
        assert not rep.is_frame

    def test_parseval_flags(self):
        rep = analyze(PARSEVAL_PM)
        assert rep.is_tight and rep.parseval
        assert rep.tight_constant == pytest.approx(1.0, abs=1e-12)


class TestCanonicalDual:
    def test_diagonal_frame_operator(self):
        dual = canonical_dual(cols([1, 0], [1, 0], [0, 1]))
        expect = np.column_stack([[0.5, 0.0], [0.5, 0.0], [0.0, 1.0]])
        assert np.allclose(dual.matrix, expect)

    def test_parseval_is_self_dual(self):
        dual = canonical_dual(PARSEVAL_PM)
        assert dual.close_to(PARSEVAL_PM, 1e-12)

    def test_two_by_two_hand_inverse(self):
        dual = canonical_dual(cols([1, 0], [1, 1]))
        expect = np.column_stack([[1.0, -1.0], [0.0, 1.0]])
        assert np.allclose(dual.matrix, expect)

    def test_not_a_frame(self):
        with pytest.raises(NotAFrame):
            canonical_dual(Frame(np.array([[1.0], [0.0]])))

    def test_double_dual_returns_original(self, rng):
        for _ in range(20):
            n = int(rng.integers(2, 7))
            k = int(rng.integers(n, 13))
            fr = random_frame(rng, n, k)
            again = canonical_dual(canonical_dual(fr))
            assert again.close_to(fr, 1e-8)


class TestVerifyDuality:
    def test_basis_self_duality(self):
        b = cols([1, 0], [0, 1])
        assert verify_duality(b, b)

    def test_explicit_dual_pair(self):
        f = cols([1, 0], [1, 0], [0, 1])
        g = cols([0.5, 0], [0.5, 0], [0, 1])
        assert verify_duality(f, g)

    def test_rejects_wrong_pair(self):
        assert not verify_duality(cols([1, 0], [0, 1]), cols([1, 0], [1, 0]))

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            verify_duality(cols([1, 0], [0, 1]), cols([1, 0], [0, 1], [1, 1]))

    def test_canonical_dual_always_passes(self, rng):
        for _ in range(10):
            fr = random_frame(rng, 3, 7)
            assert verify_duality(fr, canonical_dual(fr))


class TestFusionCheck:
    def test_orthogonal_lines(self):
        dec = fusion_check([cols([1, 0]), cols([0, 1])])
        assert dec.lower_bound == pytest.approx(1.0)
        assert dec.upper_bound == pytest.approx(1.0)
        assert dec.is_fusion_frame

    def test_line_plus_plane(self):
        dec = fusion_check([cols([1, 0]), cols([1, 0], [0, 1])])
        assert dec.lower_bound == pytest.approx(1.0)
        assert dec.upper_bound == pytest.approx(2.0)

    def test_repeated_line_is_not_fusion(self):
        dec = fusion_check([cols([1, 0]), cols([1, 0])])
        assert dec.lower_bound == pytest.approx(0.0, abs=1e-12)
        assert not dec.is_fusion_frame

    def test_bases_orthonormal(self, rng):
        subs = [random_frame(rng, 4, 2), random_frame(rng, 4, 3)]
        dec = fusion_check(subs)
        for basis in dec.subspaces:
            k = basis.shape[1]
            assert np.allclose(basis.conj().T @ basis, np.eye(k))

    def test_positive_fusion_bound_gives_frame_union(self, rng):
        for _ in range(10):
            subs = [random_frame(rng, 3, int(rng.integers(1, 4))) for _ in range(3)]
            dec = fusion_check(subs)
            if dec.lower_bound > 1e-9:
                union = Frame(np.column_stack([s.matrix for s in subs]))
                assert analyze(union).is_frame


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 6), st.integers(0, 6), st.integers(0, 2 ** 31 - 1))
def test_frame_inequality_on_random_frames(n, extra, seed):
    rng = np.random.default_rng(seed)
    k = min(n + extra, 12)
    fr = random_frame(rng, n, k)
    rep = analyze(fr)
    assert rep.is_frame
    for _ in range(100):
        f = rng.standard_normal(n)
        total = float(np.sum(np.abs(fr.matrix.conj().T @ f) ** 2))
        norm2 = float(f @ f)
        assert rep.lower_bound * norm2 <= total * (1 + 1e-8) + 1e-12
        assert total <= rep.upper_bound * norm2 * (1 + 1e-8) + 1e-12
