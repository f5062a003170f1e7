import numpy as np
import pytest

from opineq import generators, linalg, radii
from opineq.errors import BadDimension, BadRange, NotInvertible


def bit_identical(a, b):
    return a.keys() == b.keys() and all(np.array_equal(a[k], b[k]) for k in a)


class TestRngDiscipline:
    def test_split_is_stable(self):
        s1 = generators.split_seed(42, "thm1", 4, 0)
        s2 = generators.split_seed(42, "thm1", 4, 0)
        assert s1 == s2
        assert s1 != generators.split_seed(42, "thm1", 4, 1)

    def test_ginibre_deterministic(self):
        A = generators.ginibre(3, generators.make_rng(7))
        B = generators.ginibre(3, generators.make_rng(7))
        assert np.array_equal(A, B)

    def test_bundles_bit_identical(self):
        for recipe in ("thm1", "ld", "reid", "multi:2", "normal_pair",
                       "psd", "ginibre", "hermitian_pair", "scalar_pair"):
            b1 = generators.build_instance(recipe, 3, generators.make_rng(11, recipe))
            b2 = generators.build_instance(recipe, 3, generators.make_rng(11, recipe))
            assert bit_identical(b1.operators, b2.operators)
            assert b1.certificates == b2.certificates
            assert b1.scalars == b2.scalars


class TestGinibre:
    def test_single_entry(self):
        A = generators.ginibre(1, generators.make_rng(0))
        assert A.shape == (1, 1) and np.isfinite(A).all()

    def test_second_moment(self):
        rng = generators.make_rng(123)
        vals = [np.linalg.norm(generators.ginibre(4, rng)) ** 2 / 16
                for _ in range(200)]
        assert abs(np.mean(vals) - 1.0) < 0.15

    def test_dimension_guard(self):
        with pytest.raises(BadDimension):
            generators.ginibre(0, generators.make_rng(0))
        with pytest.raises(BadDimension):
            generators.ginibre(65, generators.make_rng(0))


class TestRandomPsd:
    def test_flat_spectrum_is_identity(self):
        M = generators.random_psd(4, (1.0, 1.0), generators.make_rng(3))
        assert np.allclose(M, np.eye(4), atol=1e-12)

    def test_spectrum_window(self):
        M = generators.random_psd(6, (0.5, 2.0), generators.make_rng(4))
        vals = linalg.hermitian_eigen(M).values
        assert np.all(vals >= 0.5 - 1e-9) and np.all(vals <= 2.0 + 1e-9)

    def test_determinant_floor(self):
        lo = 0.3
        M = generators.random_psd(5, (lo, 2.0), generators.make_rng(5))
        det = float(np.prod(linalg.hermitian_eigen(M).values))
        assert det >= lo ** 5 - 1e-9

    def test_range_guard(self):
        with pytest.raises(BadRange):
            generators.random_psd(3, (0.0, 1.0), generators.make_rng(0))


class TestMakeAWithModuli:
    def test_trivial_frames(self):
        A, mod, mod_star = generators.compose_from_svd(
            np.eye(2, dtype=complex), np.array([1.0, 2.0]), np.eye(2, dtype=complex))
        assert np.allclose(A, np.diag([1.0, 2.0]))
        assert np.allclose(mod, A) and np.allclose(mod_star, A)

    def test_moduli_match_construction(self):
        for seed in range(10):
            A, mod, mod_star = generators.make_A_with_moduli(
                4, generators.make_rng(seed))
            assert np.linalg.norm(linalg.absolute_value(A) - mod) <= 1e-8
            assert np.linalg.norm(
                linalg.absolute_value(A.conj().T) - mod_star) <= 1e-8

    def test_singular_values_in_window(self):
        A, mod, _ = generators.make_A_with_moduli(5, generators.make_rng(9))
        s = linalg.hermitian_eigen(mod).values
        assert np.all(s >= 0.1 - 1e-9) and np.all(s <= 2.0 + 1e-9)

    def test_moduli_share_spectrum(self):
        _, mod, mod_star = generators.make_A_with_moduli(4, generators.make_rng(2))
        s1 = linalg.hermitian_eigen(mod).values
        s2 = linalg.hermitian_eigen(mod_star).values
        assert np.allclose(s1, s2, atol=1e-8)


class TestIntertwinedOperator:
    def test_hand_example(self):
        M = np.diag([1.0, 4.0]).astype(complex)
        # with the Hermitian seed [[0,1],[1,0]] the similarity gives [[0,2],[.5,0]]
        H = np.array([[0, 1], [1, 0]], dtype=complex)
        M_half = np.diag([1.0, 2.0])
        M_inv_half = np.diag([1.0, 0.5])
        B = M_inv_half @ H @ M_half
        assert np.allclose(B, np.array([[0, 2], [0.5, 0]]))
        assert np.allclose(M @ B, np.array([[0, 2], [2, 0]]))
        assert np.allclose(M @ B, B.conj().T @ M)

    def test_identity_weight_gives_hermitian(self):
        B = generators.intertwined_operator(np.eye(3, dtype=complex),
                                            generators.make_rng(1))
        assert np.linalg.norm(B - B.conj().T) <= 1e-12

    def test_residual_and_real_spectrum(self):
        rng = generators.make_rng(17)
        for _ in range(50):
            n = int(rng.integers(2, 7))
            M = generators.random_psd(n, (0.1, 2.0), rng)
            B = generators.intertwined_operator(M, rng)
            resid = generators.intertwine_residual(M, B)
            scale = np.linalg.norm(M) * np.linalg.norm(B)
            assert resid <= 1e-8 * scale
            eigs = linalg.general_eigenvalues(B)
            assert np.max(np.abs(eigs.imag)) <= 1e-8 * max(1.0, np.abs(eigs).max())

    def test_spectral_radius_matches_seed(self):
        # r(B) = max |eig(H)| under the similarity
        rng = generators.make_rng(21)
        M = generators.random_psd(4, (0.1, 2.0), rng)
        e = linalg.hermitian_eigen(M)
        H = (rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4)))
        H = 0.5 * (H + H.conj().T)
        M_half = (e.vectors * np.sqrt(e.values)) @ e.vectors.conj().T
        M_inv_half = (e.vectors / np.sqrt(e.values)) @ e.vectors.conj().T
        B = M_inv_half @ H @ M_half
        rB = radii.spectral_radius(B)
        rH = float(np.abs(linalg.hermitian_eigen(H).values).max())
        assert abs(rB - rH) <= 1e-8 * max(1.0, rH)

    def test_rejects_near_singular_weight(self):
        M = np.diag([1e-9, 1.0]).astype(complex)
        with pytest.raises(NotInvertible):
            generators.intertwined_operator(M, generators.make_rng(0))


class TestRecipes:
    def test_theorem1_signature(self):
        b = generators.theorem1_instance(3, generators.make_rng(5))
        assert set(b.operators) == {"A", "B", "C"}
        assert set(b.certificates) == {"intertwine_A_B", "intertwine_Astar_C"}
        for v in b.certificates.values():
            assert v <= 1e-10

    def test_identity_roles_admissible(self):
        # B = C = identity satisfies the hypotheses with zero residual
        A, mod, mod_star = generators.make_A_with_moduli(3, generators.make_rng(1))
        eye = np.eye(3, dtype=complex)
        assert generators.intertwine_residual(mod, eye) <= 1e-12
        assert generators.intertwine_residual(mod_star, eye) <= 1e-12

    def test_diagonal_hand_check(self):
        # A = diag(1,2) is its own modulus; the certificates vanish exactly
        mod = np.diag([1.0, 2.0]).astype(complex)
        B = generators.intertwined_operator(mod, generators.make_rng(8))
        assert generators.intertwine_residual(mod, B) <= 1e-12

    def test_lin_dragomir_construction(self):
        T = np.diag([1.0, 2.0]).astype(complex)
        H = np.array([[0, 1], [1, 0]], dtype=complex)
        S = np.linalg.inv(T) @ H
        assert np.allclose(S, np.array([[0, 1], [0.5, 0]]))
        assert np.allclose(T @ S, H)  # TS selfadjoint by construction

    def test_lin_dragomir_certificates_100(self):
        for seed in range(100):
            b = generators.lin_dragomir_instance(3, generators.make_rng(seed))
            assert set(b.certificates) == {
                "ts_selfadjoint", "tc_selfadjoint", "a_selfadjoint",
                "b_selfadjoint", "t_positive"}
            ops = b.operators
            scale = np.linalg.norm(ops["T"] @ ops["S"])
            assert b.certificates["ts_selfadjoint"] <= 1e-8 * max(1.0, scale)
            assert b.certificates["t_positive"] == 0.0

    def test_reid_identity_weight(self):
        b = generators.reid_instance(3, generators.make_rng(2))
        assert set(b.certificates) == {"ab_selfadjoint", "a_positive"}
        AB = b.operators["A"] @ b.operators["B"]
        assert np.linalg.norm(AB - AB.conj().T) <= 1e-8 * np.linalg.norm(AB)

    def test_multi_reduces_to_single(self):
        b = generators.multi_operator_instance(3, 1, generators.make_rng(4))
        assert set(b.operators) == {"A_1", "B_1", "C_1"}
        assert len(b.certificates) == 2

    def test_multi_certificates(self):
        count = 3
        b = generators.multi_operator_instance(2, count, generators.make_rng(6))
        assert len(b.certificates) == 2 * count
        for v in b.certificates.values():
            assert v <= 1e-8

    def test_multi_count_guard(self):
        with pytest.raises(BadRange):
            generators.multi_operator_instance(2, 0, generators.make_rng(0))

    def test_normal_pair_moduli_agree(self):
        b = generators.normal_pair_instance(4, generators.make_rng(3))
        A = b.operators["A"]
        mod = linalg.absolute_value(A)
        mod_star = linalg.absolute_value(A.conj().T)
        assert np.linalg.norm(mod - mod_star) <= 1e-8

    def test_unknown_recipe(self):
        with pytest.raises(BadRange):
            generators.build_instance("nope", 2, generators.make_rng(0))


class TestUnitVectors:
    def test_unit_norm(self):
        for n in (1, 3, 8):
            v = generators.random_unit_vector(n, generators.make_rng(n))
            assert abs(np.linalg.norm(v) - 1.0) <= 1e-12

    def test_deterministic(self):
        v1 = generators.random_unit_vector(4, generators.make_rng(9))
        v2 = generators.random_unit_vector(4, generators.make_rng(9))
        assert np.array_equal(v1, v2)

    def test_basis_vector_admissible(self):
        e1 = np.zeros(3, dtype=complex)
        e1[0] = 1.0
        assert abs(np.linalg.norm(e1) - 1.0) == 0.0


class TestMutation:
    def test_small_noise_breaks_certificate(self):
        # the intertwining certificate is not vacuous
        rng = generators.make_rng(33)
        b = generators.theorem1_instance(4, rng)
        noise = generators.ginibre(4, rng)
        broken = generators.perturb_role(b, "B", noise, 1e-3)
        mod = linalg.absolute_value(broken.operators["A"])
        resid = generators.intertwine_residual(mod, broken.operators["B"])
        scale = np.linalg.norm(mod) * np.linalg.norm(broken.operators["B"])
        assert resid > 1e-8 * scale

    def test_perturb_role_leaves_original(self):
        rng = generators.make_rng(34)
        b = generators.theorem1_instance(3, rng)
        before = b.operators["B"].copy()
        generators.perturb_role(b, "B", generators.ginibre(3, rng), 0.5)
        assert np.array_equal(b.operators["B"], before)
