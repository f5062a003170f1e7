import numpy as np
import pytest

from opineq import radii
from opineq.errors import BadRange

from conftest import random_complex, random_hermitian

NILPOTENT = np.array([[0, 1], [0, 0]], dtype=complex)


class TestOperatorNorm:
    def test_diagonal(self):
        assert radii.operator_norm(np.diag([3.0, -1.0]).astype(complex)) == \
            pytest.approx(3.0, rel=1e-10)

    def test_shift(self):
        A = np.array([[0, 2], [0, 0]], dtype=complex)
        assert radii.operator_norm(A) == pytest.approx(2.0, rel=1e-10)

    def test_unitary(self, rng):
        Q, _ = np.linalg.qr(random_complex(rng, 5))
        assert radii.operator_norm(Q) == pytest.approx(1.0, rel=1e-10)


class TestSpectralRadius:
    def test_nilpotent(self):
        assert radii.spectral_radius(NILPOTENT) == pytest.approx(0.0, abs=1e-12)

    def test_diagonal(self):
        assert radii.spectral_radius(np.diag([2.0, -3.0]).astype(complex)) == \
            pytest.approx(3.0)

    def test_rotation(self):
        A = np.array([[0, -1], [1, 0]], dtype=complex)
        assert radii.spectral_radius(A) == pytest.approx(1.0)

    def test_bounded_by_norm(self, rng):
        for _ in range(100):
            A = random_complex(rng, int(rng.integers(2, 9)))
            assert radii.spectral_radius(A) <= radii.operator_norm(A) + 1e-8


class TestGelfand:
    def test_diagonal_fast(self):
        est = radii.spectral_radius_gelfand(np.diag([2.0, -3.0]).astype(complex), 10)
        assert est == pytest.approx(3.0, abs=1e-6)

    def test_nilpotent_zero(self):
        for k in (1, 5, 40):
            assert radii.spectral_radius_gelfand(NILPOTENT, k) == 0.0

    def test_jordan_block_slow_convergence(self):
        J = np.array([[1, 1], [0, 1]], dtype=complex)
        assert radii.spectral_radius_gelfand(J, 40) == pytest.approx(1.0, abs=1e-4)

    def test_large_norm_no_overflow(self):
        A = 1e8 * np.array([[2.0, 1.0], [0.0, 0.5]]).astype(complex)
        est = radii.spectral_radius_gelfand(A, 50)
        assert est == pytest.approx(2e8, rel=1e-6)

    def test_doublings_range(self):
        with pytest.raises(BadRange):
            radii.spectral_radius_gelfand(NILPOTENT, 0)
        with pytest.raises(BadRange):
            radii.spectral_radius_gelfand(NILPOTENT, 61)

    def test_agrees_with_qr_on_normal_fixtures(self, rng):
        # Gelfand is the independent oracle for the QR eigenvalue path
        for _ in range(60):
            n = int(rng.integers(2, 9))
            Q, _ = np.linalg.qr(random_complex(rng, n))
            lam = rng.uniform(0.2, 3.0, n) * np.exp(2j * np.pi * rng.uniform(0, 1, n))
            A = (Q * lam) @ Q.conj().T
            r_qr = radii.spectral_radius(A)
            r_gf = radii.spectral_radius_gelfand(A, 40)
            assert abs(r_qr - r_gf) <= 1e-5 * max(1.0, r_qr)


class TestNumericalRadius:
    def test_nilpotent_half(self):
        # analytic: sup |conj(x1) x2| over the unit sphere is 1/2 (AM-GM)
        est = radii.numerical_radius(NILPOTENT, 1e-10)
        assert est.value == pytest.approx(0.5, abs=1e-8)
        assert est.lo <= est.value <= est.hi
        assert est.hi - est.lo <= 1e-10

    def test_hermitian_collapse(self):
        est = radii.numerical_radius(np.diag([2.0, -5.0]).astype(complex), 1e-10)
        assert est.value == pytest.approx(5.0, abs=1e-8)

    def test_zero_matrix(self):
        est = radii.numerical_radius(np.zeros((3, 3), dtype=complex), 1e-10)
        assert est.value == 0.0
        assert est.hi == 0.0

    def test_normal_matrix_max_modulus(self):
        est = radii.numerical_radius(np.diag([1j, -1j]).astype(complex), 1e-10)
        assert est.value == pytest.approx(1.0, abs=1e-8)

    def test_interval_width_tracks_tol(self, rng):
        A = random_complex(rng, 4)
        for tol in (1e-6, 1e-9, 1e-12):
            est = radii.numerical_radius(A, tol)
            assert est.hi - est.lo <= tol

    def test_tol_floor(self):
        with pytest.raises(BadRange):
            radii.numerical_radius(NILPOTENT, 1e-13)

    def test_sandwich_2000(self, rng):
        for _ in range(2000):
            n = int(rng.integers(2, 9))
            A = random_complex(rng, n) * rng.uniform(0.2, 3.0)
            w = radii.numerical_radius(A, 1e-9).value
            nrm = radii.operator_norm(A)
            assert 0.5 * nrm - 1e-8 <= w <= nrm + 1e-8

    def test_hermitian_collapse_random(self, rng):
        for _ in range(200):
            H = random_hermitian(rng, int(rng.integers(2, 9)))
            w = radii.numerical_radius(H, 1e-9).value
            nrm = radii.operator_norm(H)
            assert abs(w - nrm) <= 1e-8 * max(1.0, nrm)

    def test_scale_equivariance(self, rng):
        A = random_complex(rng, 4)
        w = radii.numerical_radius(A, 1e-10).value
        r = radii.spectral_radius(A)
        nrm = radii.operator_norm(A)
        for c in (2.0, -3.0, 1j):
            cA = c * A
            assert radii.numerical_radius(cA, 1e-10).value == pytest.approx(
                abs(c) * w, rel=1e-10, abs=1e-10)
            assert radii.spectral_radius(cA) == pytest.approx(
                abs(c) * r, rel=1e-9)
            assert radii.operator_norm(cA) == pytest.approx(
                abs(c) * nrm, rel=1e-10)


class TestGridOracle:
    def test_nilpotent(self):
        assert radii.numerical_radius_grid_oracle(NILPOTENT, 10 ** 5) == \
            pytest.approx(0.5, abs=1e-6)

    def test_identity_coarse(self):
        assert radii.numerical_radius_grid_oracle(np.eye(2, dtype=complex), 4) == \
            pytest.approx(1.0)

    def test_normal(self):
        A = np.diag([1j, -1j]).astype(complex)
        assert radii.numerical_radius_grid_oracle(A, 10 ** 5) == \
            pytest.approx(1.0, abs=1e-6)

    def test_odd_grid(self):
        assert radii.numerical_radius_grid_oracle(NILPOTENT, 101) == \
            pytest.approx(0.5, abs=1e-3)

    def test_minimum_points(self):
        with pytest.raises(BadRange):
            radii.numerical_radius_grid_oracle(NILPOTENT, 3)

    def test_lower_bound_and_agreement(self, rng):
        for _ in range(30):
            n = int(rng.integers(2, 9))
            A = random_complex(rng, n) * rng.uniform(0.2, 3.0)
            w = radii.numerical_radius(A, 1e-9).value
            oracle = radii.numerical_radius_grid_oracle(A, 10 ** 5)
            assert oracle <= w + 1e-12
            assert abs(w - oracle) <= 1e-6 * max(1.0, w)


class TestAluthge:
    def test_psd_fixed_point(self, rng):
        H = random_hermitian(rng, 3)
        M = H @ H.conj().T + 0.2 * np.eye(3)
        assert np.allclose(radii.aluthge(M), M, atol=1e-8)

    def test_nilpotent_vanishes(self):
        assert np.allclose(radii.aluthge(NILPOTENT), 0.0, atol=1e-12)

    def test_unitary_fixed_point(self, rng):
        Q, _ = np.linalg.qr(random_complex(rng, 4))
        assert np.allclose(radii.aluthge(Q), Q, atol=1e-8)

    def test_spectrum_preserved_invertible(self, rng):
        for _ in range(40):
            n = int(rng.integers(2, 7))
            A = random_complex(rng, n) + 1.5 * np.eye(n)
            r1 = radii.spectral_radius(A)
            r2 = radii.spectral_radius(radii.aluthge(A))
            assert abs(r1 - r2) <= 1e-6 * max(1.0, r1)

    def test_radius_never_grows(self, rng):
        # w(aluthge(T)) <= w(T), the ingredient behind the refinement chain
        for _ in range(25):
            A = random_complex(rng, int(rng.integers(2, 7)))
            w1 = radii.numerical_radius(A, 1e-9).value
            w2 = radii.numerical_radius(radii.aluthge(A), 1e-9).value
            assert w2 <= w1 + 1e-8
