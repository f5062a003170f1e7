import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opineq import linalg
from opineq.errors import DimensionMismatch, NotHermitian, NotPSD

from conftest import random_complex, random_hermitian


def eig2x2_hermitian(a, b, d):
    """Characteristic-polynomial oracle for [[a, b], [conj(b), d]]."""
    mid = 0.5 * (a + d)
    rad = math.sqrt((0.5 * (a - d)) ** 2 + abs(b) ** 2)
    return mid - rad, mid + rad


class TestAdjoint:
    def test_scalar_conjugation(self):
        A = np.array([[1j]])
        assert linalg.adjoint(A)[0, 0] == -1j

    def test_real_transpose(self):
        A = np.array([[0, 2], [0, 0]], dtype=complex)
        assert np.array_equal(linalg.adjoint(A), np.array([[0, 0], [2, 0]]))

    def test_hermitian_fixed_point(self, rng):
        H = random_hermitian(rng, 4)
        assert np.allclose(linalg.adjoint(H), H)

    def test_involution(self, rng):
        A = random_complex(rng, 5)
        assert np.array_equal(linalg.adjoint(linalg.adjoint(A)), A)


class TestHermitianEigen:
    def test_diagonal(self):
        e = linalg.hermitian_eigen(np.diag([3.0, -1.0]).astype(complex))
        assert np.allclose(e.values, [-1.0, 3.0])
        # eigenvectors form a permutation of the identity
        assert np.allclose(np.abs(e.vectors), np.eye(2)[:, [1, 0]])

    def test_offdiagonal_characteristic_polynomial(self):
        H = np.array([[0, 1], [1, 0]], dtype=complex)
        e = linalg.hermitian_eigen(H)
        assert np.allclose(e.values, [-1.0, 1.0], atol=1e-12)

    def test_identity(self):
        e = linalg.hermitian_eigen(np.eye(3, dtype=complex))
        assert np.allclose(e.values, 1.0)
        resid = np.linalg.norm(e.vectors.conj().T @ e.vectors - np.eye(3))
        assert resid <= 1e-10 * 3

    def test_2x2_oracle_sweep(self, rng):
        for _ in range(200):
            a, d = rng.standard_normal(2)
            b = complex(*rng.standard_normal(2))
            H = np.array([[a, b], [np.conjugate(b), d]])
            lo, hi = eig2x2_hermitian(a, b, d)
            e = linalg.hermitian_eigen(H)
            assert abs(e.values[0] - lo) <= 1e-12 * max(1, abs(lo))
            assert abs(e.values[1] - hi) <= 1e-12 * max(1, abs(hi))

    def test_reconstruction_and_unitarity(self, rng):
        for n in (2, 3, 5, 8):
            H = random_hermitian(rng, n)
            e = linalg.hermitian_eigen(H)
            fro = np.linalg.norm(H)
            resid = np.linalg.norm(H @ e.vectors - e.vectors * e.values)
            assert resid <= 1e-10 * max(1.0, fro)
            orth = np.linalg.norm(e.vectors.conj().T @ e.vectors - np.eye(n))
            assert orth <= 1e-10 * n
            assert np.all(np.diff(e.values) >= 0)

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            linalg.hermitian_eigen(np.array([[0, 1], [0, 0]], dtype=complex))


class TestGeneralEigenvalues:
    def test_nilpotent(self):
        eigs = linalg.general_eigenvalues(np.array([[0, 1], [0, 0]], dtype=complex))
        assert np.allclose(eigs, 0.0)

    def test_diagonal(self):
        eigs = linalg.general_eigenvalues(np.diag([2.0, -3.0]).astype(complex))
        assert sorted(e.real for e in eigs) == pytest.approx([-3.0, 2.0])

    def test_rotation_characteristic_polynomial(self):
        # lambda^2 + 1 = 0
        eigs = linalg.general_eigenvalues(np.array([[0, -1], [1, 0]], dtype=complex))
        assert sorted(e.imag for e in eigs) == pytest.approx([-1.0, 1.0], abs=1e-10)
        assert max(abs(e.real) for e in eigs) < 1e-10

    def test_multiplicity_count(self, rng):
        for n in (1, 3, 6):
            assert len(linalg.general_eigenvalues(random_complex(rng, n))) == n

    def test_residual_contract(self, rng):
        # every eigenvalue nearly annihilates some unit vector
        for _ in range(25):
            n = int(rng.integers(2, 9))
            A = random_complex(rng, n)
            fro = np.linalg.norm(A)
            for lam in linalg.general_eigenvalues(A):
                smin = np.linalg.svd(A - lam * np.eye(n), compute_uv=False)[-1]
                assert smin <= 1e-7 * max(1.0, fro)

    def test_matches_jacobi_on_hermitian(self, rng):
        for _ in range(30):
            n = int(rng.integers(2, 8))
            H = random_hermitian(rng, n)
            qr_eigs = np.sort(linalg.general_eigenvalues(H).real)
            jac = linalg.hermitian_eigen(H).values
            assert np.allclose(qr_eigs, jac, atol=1e-9 * max(1, np.abs(jac).max()))


class TestAbsoluteValue:
    def test_shift_block(self):
        A = np.array([[0, 2], [0, 0]], dtype=complex)
        assert np.allclose(linalg.absolute_value(A), np.diag([0.0, 2.0]))

    def test_psd_fixed_point(self, rng):
        H = random_hermitian(rng, 4)
        M = H @ H.conj().T + 0.1 * np.eye(4)
        assert np.allclose(linalg.absolute_value(M), M, atol=1e-9 * np.linalg.norm(M))

    def test_unitary_gives_identity(self, rng):
        Q, _ = np.linalg.qr(random_complex(rng, 5))
        assert np.allclose(linalg.absolute_value(Q), np.eye(5), atol=1e-10)

    def test_square_matches_gram(self, rng):
        for _ in range(50):
            n = int(rng.integers(1, 9))
            A = random_complex(rng, n)
            M = linalg.absolute_value(A)
            gram = A.conj().T @ A
            err = np.linalg.norm(M @ M - gram)
            assert err <= 1e-9 * max(1.0, np.linalg.norm(gram))
            assert linalg.hermitian_eigen(M).values[0] >= -1e-9 * np.linalg.norm(A)


class TestPolar:
    def test_diagonal(self):
        p = linalg.polar(np.diag([2.0, 3.0]).astype(complex))
        assert np.allclose(p.unitary, np.eye(2), atol=1e-12)
        assert np.allclose(p.modulus, np.diag([2.0, 3.0]), atol=1e-12)

    def test_singular_completion(self):
        # completion of the partial isometry for the nilpotent shift
        A = np.array([[0, 1], [0, 0]], dtype=complex)
        p = linalg.polar(A)
        assert np.allclose(p.modulus, np.diag([0.0, 1.0]), atol=1e-12)
        assert np.allclose(p.unitary @ p.modulus, A, atol=1e-12)
        assert np.allclose(p.unitary.conj().T @ p.unitary, np.eye(2), atol=1e-12)

    def test_unitary_input(self, rng):
        Q, _ = np.linalg.qr(random_complex(rng, 4))
        p = linalg.polar(Q)
        assert np.allclose(p.modulus, np.eye(4), atol=1e-9)
        assert np.allclose(p.unitary, Q, atol=1e-8)

    def test_ginibre_invariant_1000(self, rng):
        # the contract: U |A| = A and U unitary, across 1000 random draws
        for _ in range(1000):
            n = int(rng.integers(2, 9))
            A = random_complex(rng, n)
            p = linalg.polar(A)
            fro = np.linalg.norm(A)
            assert np.linalg.norm(p.unitary @ p.modulus - A) <= 1e-9 * max(1.0, fro)
            assert np.linalg.norm(
                p.unitary.conj().T @ p.unitary - np.eye(n)) <= 1e-9 * n
            herm = np.linalg.norm(p.modulus - p.modulus.conj().T)
            assert herm <= 1e-10 * max(1.0, fro)


class TestCartesian:
    def test_shift_block(self):
        A = np.array([[0, 2], [0, 0]], dtype=complex)
        c = linalg.cartesian(A)
        assert np.allclose(c.real_part, np.array([[0, 1], [1, 0]]))
        assert np.allclose(c.imag_part, np.array([[0, -1j], [1j, 0]]) * 1.0)

    def test_hermitian(self, rng):
        H = random_hermitian(rng, 3)
        c = linalg.cartesian(H)
        assert np.allclose(c.real_part, H)
        assert np.allclose(c.imag_part, 0.0)

    def test_skew_input(self, rng):
        H = random_hermitian(rng, 3)
        c = linalg.cartesian(1j * H)
        assert np.allclose(c.real_part, 0.0, atol=1e-14)
        assert np.allclose(c.imag_part, H)

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 10 ** 6), n=st.integers(1, 8))
    def test_reassembly_exact(self, seed, n):
        g = np.random.default_rng(seed)
        A = random_complex(g, n)
        c = linalg.cartesian(A)
        err = np.linalg.norm(c.real_part + 1j * c.imag_part - A)
        assert err <= 1e-14 * max(1.0, np.linalg.norm(A))
        for part in (c.real_part, c.imag_part):
            assert np.linalg.norm(part - part.conj().T) <= 1e-12


class TestApplyFunction:
    def test_sqrt_on_diagonal(self):
        out = linalg.apply_function(math.sqrt, np.diag([4.0, 9.0]).astype(complex))
        assert np.allclose(out, np.diag([2.0, 3.0]))

    def test_power_on_identity(self):
        for alpha in (0.0, 0.3, 1.0):
            pair = linalg.power_split(alpha)
            out = linalg.apply_function(pair.f, np.eye(3, dtype=complex))
            assert np.allclose(out, np.eye(3))

    def test_product_identity(self, rng):
        # f(M) g(M) = M for the power family
        for alpha in (0.0, 0.25, 0.5, 0.75, 1.0):
            pair = linalg.power_split(alpha)
            H = random_hermitian(rng, 4)
            M = H @ H.conj().T
            fM = linalg.apply_function(pair.f, M)
            gM = linalg.apply_function(pair.g, M)
            assert np.allclose(fM @ gM, M, atol=1e-8 * max(1, np.linalg.norm(M)))

    def test_clamps_rounding_negatives(self):
        M = np.diag([1.0, -1e-12]).astype(complex)
        out = linalg.apply_function(math.sqrt, M)
        assert np.allclose(out, np.diag([1.0, 0.0]))

    def test_rejects_indefinite(self):
        with pytest.raises(NotPSD):
            linalg.apply_function(math.sqrt, np.diag([1.0, -0.5]).astype(complex))


class TestArithmetic:
    def test_inner_basis(self):
        e1 = np.array([1, 0], dtype=complex)
        e2 = np.array([0, 1], dtype=complex)
        assert linalg.inner(e1, e1) == 1
        assert linalg.inner(e1, e2) == 0

    def test_inner_conjugate_linear_second(self, rng):
        x = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        y = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        c = 2.0 - 1.5j
        assert linalg.inner(c * x, y) == pytest.approx(c * linalg.inner(x, y))
        assert linalg.inner(x, c * y) == pytest.approx(
            np.conjugate(c) * linalg.inner(x, y))

    def test_inner_matches_operator_pairing(self, rng):
        A = random_complex(rng, 3)
        x = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        y = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        lhs = linalg.inner(A @ x, y)
        rhs = linalg.inner(x, A.conj().T @ y)
        assert lhs == pytest.approx(rhs)

    def test_frobenius(self):
        assert linalg.frobenius_norm(np.eye(3, dtype=complex)) == pytest.approx(
            math.sqrt(3))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            linalg.matmul(np.eye(2, dtype=complex), np.eye(3, dtype=complex))
        with pytest.raises(DimensionMismatch):
            linalg.add(np.eye(2, dtype=complex), np.eye(3, dtype=complex))
        with pytest.raises(DimensionMismatch):
            linalg.inner(np.ones(2, dtype=complex), np.ones(3, dtype=complex))


class TestFunctionPair:
    def test_power_family_valid(self):
        for alpha in (0.0, 0.5, 1.0):
            pair = linalg.power_split(alpha)
            assert pair.parameters["alpha"] == alpha

    def test_rejects_bad_pair(self):
        with pytest.raises(ValueError):
            linalg.FunctionPair(name="bad", f=lambda t: t, g=lambda t: t)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            linalg.FunctionPair(name="neg", f=lambda t: -t, g=lambda t: -1.0)

    def test_rejects_alpha_outside_range(self):
        with pytest.raises(ValueError):
            linalg.power_split(1.5)


class TestMatrixFormat:
    def test_round_trip(self, rng):
        A = random_complex(rng, 3)
        B = linalg.matrix_from_dict(linalg.matrix_to_dict(A))
        assert np.array_equal(A, B)

    def test_file_round_trip(self, tmp_path, rng):
        A = random_complex(rng, 4)
        path = tmp_path / "m.json"
        linalg.save_matrix(path, A)
        assert np.array_equal(linalg.load_matrix(path), A)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            linalg.matrix_from_dict({"n": 2, "entries": [[[1, 0]], [[1, 0]]]})

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            linalg.matrix_from_dict(
                {"n": 1, "entries": [[[float("nan"), 0.0]]]})

    def test_rejects_bad_dimension(self):
        with pytest.raises(ValueError):
            linalg.matrix_from_dict({"n": 0, "entries": []})
