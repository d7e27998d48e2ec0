import numpy as np
import pytest

from specvar import linalg, matching
from specvar.errors import InvalidMatrix


def ginibre(n, seed):
    rng = np.random.default_rng(seed)
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def gram_power_iteration(M, tol=1e-13, max_iters=200_000):
    """Independent operator-norm oracle: power iteration on M^H M."""
    G = M.conj().T @ M
    rng = np.random.default_rng(12345)
    v = rng.standard_normal(M.shape[0]) + 1j * rng.standard_normal(M.shape[0])
    v /= np.linalg.norm(v)
    lam = 0.0
    for _ in range(max_iters):
        w = G @ v
        nxt = float(np.linalg.norm(w))
        v = w / nxt
        if abs(nxt - lam) <= tol * nxt:
            return float(np.sqrt(nxt))
        lam = nxt
    raise AssertionError("power iteration did not settle")


def charpoly_roots(M):
    """Independent eigenvalue oracle: Faddeev-LeVerrier coefficients + np.roots."""
    n = M.shape[0]
    coeffs = [1.0 + 0.0j]
    B = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        MB = M @ B
        ck = -np.trace(MB) / k
        coeffs.append(ck)
        B = MB + ck * np.eye(n)
    return np.roots(coeffs)


class TestOpNorm:
    def test_identity(self):
        assert linalg.op_norm(np.eye(4)) == pytest.approx(1.0, abs=1e-14)

    def test_diagonal(self):
        assert linalg.op_norm(np.diag([0.3, 0.9])) == pytest.approx(0.9, abs=1e-14)

    def test_matches_power_iteration_oracle(self):
        M = ginibre(6, 0)
        assert linalg.op_norm(M) == pytest.approx(gram_power_iteration(M), abs=1e-10)

    def test_dominates_spectral_radius(self):
        for seed in range(10):
            M = ginibre(5, seed)
            assert linalg.op_norm(M) >= linalg.spectral_radius(M) - 1e-9

    def test_submultiplicative(self):
        for seed in range(20):
            A, B = ginibre(4, seed), ginibre(4, 1000 + seed)
            assert linalg.op_norm(A @ B) <= linalg.op_norm(A) * linalg.op_norm(B) + 1e-9

    def test_rejects_bad_input(self):
        with pytest.raises(InvalidMatrix):
            linalg.op_norm(np.ones((2, 3)))
        with pytest.raises(InvalidMatrix):
            linalg.op_norm(np.array([[np.nan, 0], [0, 1]]))
        with pytest.raises(InvalidMatrix):
            linalg.op_norm(np.array([[np.inf + 0j, 0], [0, 1]]))


class TestSpectralRadius:
    def test_nilpotent_jordan_block(self):
        J = np.diag(np.ones(2), 1)
        assert linalg.spectral_radius(J) == pytest.approx(0.0, abs=1e-12)

    def test_diagonal(self):
        assert linalg.spectral_radius(np.diag([0.5, -0.7j])) == pytest.approx(0.7, abs=1e-14)

    def test_matches_charpoly_oracle(self):
        for seed in range(20):
            n = 2 + seed % 3
            M = ginibre(n, seed)
            M *= 0.8 / linalg.op_norm(M)
            expected = float(np.max(np.abs(charpoly_roots(M))))
            assert linalg.spectral_radius(M) == pytest.approx(expected, abs=1e-8)


class TestEigenvalues:
    def test_triangular_gives_diagonal(self):
        M = np.array([[1.0, 2.0, 3.0], [0, -0.5j, 1.0], [0, 0, 0.25]])
        got = np.sort_complex(linalg.eigenvalues(M))
        want = np.sort_complex(np.array([1.0, -0.5j, 0.25]))
        np.testing.assert_allclose(got, want, atol=1e-10)

    def test_jordan_block(self):
        got = linalg.eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))
        np.testing.assert_allclose(got, [0.0, 0.0], atol=1e-12)

    def test_companion_matrix_of_z2_minus_1(self):
        C = np.array([[0.0, 1.0], [1.0, 0.0]])
        got = np.sort(linalg.eigenvalues(C).real)
        np.testing.assert_allclose(got, [-1.0, 1.0], atol=1e-12)

    def test_backward_stable_residuals(self):
        # sigma_min(M - lambda I) small <=> some unit vector has small residual
        M = ginibre(6, 3)
        for lam in linalg.eigenvalues(M):
            smin = np.linalg.svd(M - lam * np.eye(6), compute_uv=False)[-1]
            assert smin <= 1e-8 * linalg.op_norm(M)

    def test_similarity_invariant(self):
        rng = np.random.default_rng(7)
        for seed in range(10):
            M = ginibre(5, seed)
            u, _ = np.linalg.qr(ginibre(5, 100 + seed))
            v, _ = np.linalg.qr(ginibre(5, 200 + seed))
            S = u @ np.diag(rng.uniform(0.1, 1.0, 5)) @ v  # condition <= 10
            moved = np.linalg.solve(S, M @ S)
            assert matching.d_euclid(linalg.eigenvalues(M), linalg.eigenvalues(moved)) <= 1e-6

    def test_dimension_cap(self):
        with pytest.raises(InvalidMatrix):
            linalg.eigenvalues(np.eye(65))


class TestMinPolyDegree:
    def test_identity(self):
        assert linalg.min_poly_degree(np.eye(5)) == 1

    def test_jordan_block_full_degree(self):
        J = np.diag(np.ones(5), 1)
        assert linalg.min_poly_degree(J) == 6

    def test_diagonalizable_counts_distinct_eigenvalues(self):
        M = np.diag([0.2, 0.2, 0.5])
        assert linalg.min_poly_degree(M) == len(np.unique(np.diag(M)))

    def test_ginibre_nonderogatory(self):
        for seed in range(10):
            n = 3 + seed % 4
            assert linalg.min_poly_degree(ginibre(n, seed)) == n


class TestMatrixJson:
    def test_round_trip_bit_exact(self):
        M = ginibre(4, 9) / 3.0
        text = linalg.matrix_to_json(M)
        M2 = linalg.matrix_from_json(text)
        assert linalg.matrix_to_json(M2) == text
        assert np.array_equal(M, M2)

    def test_file_round_trip(self, tmp_path):
        M = ginibre(3, 10)
        path = tmp_path / "m.json"
        linalg.save_matrix(M, path)
        assert np.array_equal(linalg.load_matrix(path), M)

    def test_malformed_reports_position(self):
        with pytest.raises(InvalidMatrix, match=r"line \d+ column \d+"):
            linalg.matrix_from_json('{"n": 2, "entries": [[1, 0],')

    def test_schema_violations(self):
        with pytest.raises(InvalidMatrix):
            linalg.matrix_from_json('{"n": 2, "entries": [[1, 0]]}')
        with pytest.raises(InvalidMatrix):
            linalg.matrix_from_json('{"entries": []}')
        with pytest.raises(InvalidMatrix):
            linalg.matrix_from_json('[1, 2]')
