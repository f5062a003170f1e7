"""Seeded random operators and certified instance bundles.

Instances are built so the hypotheses of the catalog entries hold
exactly by construction (up to rounding), and every bundle carries the
recomputable residual of each constraint as a certificate.  The
intertwining recipe is weighted similarity of a Hermitian seed:

    B = M^(-1/2) H M^(1/2)

which satisfies M B = B* M exactly for invertible PSD M and keeps the
spectrum of B real (it is similar to a Hermitian matrix).

Randomness: numpy PCG64 streams.  Independent streams are derived by
hashing (seed, labels...) with SHA-256, so adding consumers never
perturbs existing draws.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import BadDimension, BadRange, NotInvertible

RNG_ALGORITHM = "pcg64+sha256-split"
MAX_DIM = 64
SINGULAR_VALUE_RANGE = (0.1, 2.0)
MIN_MODULUS_EIGENVALUE = 1e-6
CERT_RTOL = 1e-8


def split_seed(seed: int, *parts) -> int:
    """Derive a 64-bit child seed from a master seed and a key path."""
    key = "|".join([str(int(seed))] + [str(p) for p in parts])
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def make_rng(seed: int, *parts) -> np.random.Generator:
    if parts:
        seed = split_seed(seed, *parts)
    return np.random.Generator(np.random.PCG64(seed))


def _check_dim(n: int) -> None:
    if not 1 <= int(n) <= MAX_DIM:
        raise BadDimension(f"dimension must lie in [1, {MAX_DIM}], got {n}")


def ginibre(n: int, rng: np.random.Generator) -> np.ndarray:
    """n x n matrix of independent standard complex Gaussians."""
    _check_dim(n)
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)


def hermitian_gaussian(n: int, rng: np.random.Generator) -> np.ndarray:
    """Hermitian matrix from a symmetrized Gaussian draw."""
    _check_dim(n)
    A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (A + A.conj().T)


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a Ginibre draw."""
    _check_dim(n)
    Q, R = np.linalg.qr(ginibre(n, rng))
    d = np.diag(R)
    return Q * (d / np.abs(d))


def random_unit_vector(n: int, rng: np.random.Generator) -> np.ndarray:
    _check_dim(n)
    while True:
        v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        nv = np.linalg.norm(v)
        if nv > 1e-12:
            return v / nv


def random_psd(n: int, spectrum, rng: np.random.Generator) -> np.ndarray:
    """Hermitian PSD matrix with eigenvalues uniform in [lo, hi], lo > 0."""
    _check_dim(n)
    lo, hi = float(spectrum[0]), float(spectrum[1])
    if not 0.0 < lo <= hi:
        raise BadRange(f"spectrum must satisfy 0 < lo <= hi, got [{lo}, {hi}]")
    Q = haar_unitary(n, rng)
    lam = rng.uniform(lo, hi, n)
    M = (Q * lam) @ Q.conj().T
    return 0.5 * (M + M.conj().T)


def compose_from_svd(W: np.ndarray, s: np.ndarray, V: np.ndarray):
    """Assemble A = W diag(s) V* together with |A| and |A*|."""
    A = (W * s) @ V.conj().T
    mod_a = (V * s) @ V.conj().T
    mod_a_star = (W * s) @ W.conj().T
    sym = lambda M: 0.5 * (M + M.conj().T)
    return A, sym(mod_a), sym(mod_a_star)


def make_A_with_moduli(n: int, rng: np.random.Generator,
                       s_range=SINGULAR_VALUE_RANGE):
    """Operator with prescribed singular values, plus its two moduli.

    Values are drawn away from zero so |A| and |A*| are invertible and
    the similarity recipe below is applicable.
    """
    _check_dim(n)
    W = haar_unitary(n, rng)
    V = haar_unitary(n, rng)
    s = rng.uniform(s_range[0], s_range[1], n)
    return compose_from_svd(W, s, V)


def intertwined_operator(M: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Operator B with M B = B* M, built as M^(-1/2) H M^(1/2).

    M must be Hermitian PSD with smallest eigenvalue at least 1e-6.
    The spectrum of B equals the (real) spectrum of the Hermitian seed.
    """
    e = linalg.hermitian_eigen(M)
    if float(e.values[0]) < MIN_MODULUS_EIGENVALUE:
        raise NotInvertible(
            f"weight matrix eigenvalue {e.values[0]:.3g} below "
            f"{MIN_MODULUS_EIGENVALUE:g}"
        )
    V = e.vectors
    root = np.sqrt(e.values)
    M_half = (V * root) @ V.conj().T
    M_inv_half = (V / root) @ V.conj().T
    H = hermitian_gaussian(M.shape[0], rng)
    return M_inv_half @ H @ M_half


@dataclass
class InstanceBundle:
    """A generated operator tuple plus certified hypothesis residuals."""

    recipe: str
    n: int
    seed: int | None = None
    operators: dict = field(default_factory=dict)
    scalars: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)


# --- certificate helpers (all return plain residuals; scales are handled
# --- by the consumer, see certificate_ok)


def intertwine_residual(M: np.ndarray, B: np.ndarray) -> float:
    return linalg.frobenius_norm(M @ B - B.conj().T @ M)


def selfadjoint_residual(X: np.ndarray) -> float:
    return linalg.frobenius_norm(X - X.conj().T)


def positivity_residual(H: np.ndarray) -> float:
    """max(0, -lambda_min(H)): zero exactly when H is PSD."""
    vals = linalg.hermitian_eigenvalues(H)
    return float(max(0.0, -vals[0]))


def certificate_ok(residual: float, scale: float, rtol: float = CERT_RTOL) -> bool:
    return residual <= rtol * max(1.0, scale)


def theorem1_instance(n: int, rng: np.random.Generator) -> InstanceBundle:
    """Roles A, B, C with |A| B = B* |A| and |A*| C = C* |A*|."""
    A, mod_a, mod_a_star = make_A_with_moduli(n, rng)
    B = intertwined_operator(mod_a, rng)
    C = intertwined_operator(mod_a_star, rng)
    return InstanceBundle(
        recipe="thm1", n=n,
        operators={"A": A, "B": B, "C": C},
        certificates={
            "intertwine_A_B": intertwine_residual(mod_a, B),
            "intertwine_Astar_C": intertwine_residual(mod_a_star, C),
        },
    )


def lin_dragomir_instance(n: int, rng: np.random.Generator) -> InstanceBundle:
    """Roles T (PSD invertible), S, C with T S and T C selfadjoint, plus
    independent Hermitian A and B."""
    T = random_psd(n, SINGULAR_VALUE_RANGE, rng)
    e = linalg.hermitian_eigen(T)
    T_inv = (e.vectors / e.values) @ e.vectors.conj().T
    H = hermitian_gaussian(n, rng)
    K = hermitian_gaussian(n, rng)
    S = T_inv @ H
    C = T_inv @ K
    A = hermitian_gaussian(n, rng)
    B = hermitian_gaussian(n, rng)
    return InstanceBundle(
        recipe="ld", n=n,
        operators={"T": T, "S": S, "C": C, "A": A, "B": B},
        certificates={
            "ts_selfadjoint": selfadjoint_residual(T @ S),
            "tc_selfadjoint": selfadjoint_residual(T @ C),
            "a_selfadjoint": selfadjoint_residual(A),
            "b_selfadjoint": selfadjoint_residual(B),
            "t_positive": positivity_residual(T),
        },
    )


def reid_instance(n: int, rng: np.random.Generator) -> InstanceBundle:
    """Roles A (PSD invertible) and B with A B selfadjoint."""
    A = random_psd(n, SINGULAR_VALUE_RANGE, rng)
    e = linalg.hermitian_eigen(A)
    A_inv = (e.vectors / e.values) @ e.vectors.conj().T
    B = A_inv @ hermitian_gaussian(n, rng)
    return InstanceBundle(
        recipe="reid", n=n,
        operators={"A": A, "B": B},
        certificates={
            "ab_selfadjoint": selfadjoint_residual(A @ B),
            "a_positive": positivity_residual(A),
        },
    )


def multi_operator_instance(n: int, count: int,
                            rng: np.random.Generator) -> InstanceBundle:
    """count certified triples A_i, B_i, C_i (1-based role suffixes)."""
    if count < 1:
        raise BadRange(f"count must be at least 1, got {count}")
    operators = {}
    certificates = {}
    for i in range(1, count + 1):
        A, mod_a, mod_a_star = make_A_with_moduli(n, rng)
        B = intertwined_operator(mod_a, rng)
        C = intertwined_operator(mod_a_star, rng)
        operators[f"A_{i}"] = A
        operators[f"B_{i}"] = B
        operators[f"C_{i}"] = C
        certificates[f"intertwine_A_{i}_B_{i}"] = intertwine_residual(mod_a, B)
        certificates[f"intertwine_Astar_{i}_C_{i}"] = intertwine_residual(mod_a_star, C)
    return InstanceBundle(recipe=f"multi:{count}", n=n,
                          operators=operators, certificates=certificates)


def normal_pair_instance(n: int, rng: np.random.Generator) -> InstanceBundle:
    """Normal A (so |A| = |A*|) plus one C intertwined with both moduli."""
    U = haar_unitary(n, rng)
    mod_vals = rng.uniform(*SINGULAR_VALUE_RANGE, n)
    phases = np.exp(2j * np.pi * rng.uniform(0.0, 1.0, n))
    A = (U * (mod_vals * phases)) @ U.conj().T
    M = (U * mod_vals) @ U.conj().T
    M = 0.5 * (M + M.conj().T)
    C = intertwined_operator(M, rng)
    return InstanceBundle(
        recipe="normal_pair", n=n,
        operators={"A": A, "C": C},
        certificates={
            "intertwine_A_C": intertwine_residual(M, C),
            "intertwine_Astar_C": intertwine_residual(M, C),
        },
    )


def _scaled(rng, A):
    return rng.uniform(0.25, 4.0) * A


def generic_instance(n, rng):
    return InstanceBundle(recipe="ginibre", n=n,
                          operators={"A": _scaled(rng, ginibre(n, rng))})


def generic_hermitian_instance(n, rng):
    A = _scaled(rng, hermitian_gaussian(n, rng))
    return InstanceBundle(recipe="hermitian", n=n, operators={"A": A},
                          certificates={"a_selfadjoint": selfadjoint_residual(A)})


def generic_pair_instance(n, rng):
    return InstanceBundle(recipe="ginibre_pair", n=n,
                          operators={"A": _scaled(rng, ginibre(n, rng)),
                                     "B": _scaled(rng, ginibre(n, rng))})


def generic_triple_instance(n, rng):
    return InstanceBundle(recipe="ginibre_triple", n=n,
                          operators={"A": _scaled(rng, ginibre(n, rng)),
                                     "D": ginibre(n, rng),
                                     "C": ginibre(n, rng)})


def psd_instance(n, rng):
    A = random_psd(n, (0.05, 2.0), rng)
    return InstanceBundle(recipe="psd", n=n, operators={"A": A},
                          certificates={"a_positive": positivity_residual(A)})


def psd_pair_instance(n, rng):
    A = random_psd(n, (0.05, 2.0), rng)
    B = random_psd(n, (0.05, 2.0), rng)
    return InstanceBundle(recipe="psd_pair", n=n,
                          operators={"A": A, "B": B},
                          certificates={"a_positive": positivity_residual(A),
                                        "b_positive": positivity_residual(B)})


def hermitian_pair_instance(n, rng):
    B = hermitian_gaussian(n, rng)
    C = hermitian_gaussian(n, rng)
    return InstanceBundle(recipe="hermitian_pair", n=n,
                          operators={"B": B, "C": C},
                          certificates={"b_selfadjoint": selfadjoint_residual(B),
                                        "c_selfadjoint": selfadjoint_residual(C)})


def scalar_pair_instance(n, rng):
    a, b = rng.uniform(0.0, 3.0, 2)
    return InstanceBundle(recipe="scalar_pair", n=n,
                          scalars={"a": float(a), "b": float(b)})


def perturb_role(bundle: InstanceBundle, role: str, noise: np.ndarray,
                 rel: float) -> InstanceBundle:
    """Fresh bundle with one operator perturbed by rel * scale * noise.

    The noise is rescaled to rel times the Frobenius norm of the target
    operator.  Certificates are copied unchanged (they describe the
    original construction); hypothesis validators recompute residuals
    from the operators, so a large enough perturbation fails them.
    """
    ops = dict(bundle.operators)
    target = ops[role]
    scale = linalg.frobenius_norm(target) / max(linalg.frobenius_norm(noise), 1e-300)
    ops[role] = target + rel * scale * noise
    return InstanceBundle(recipe=bundle.recipe, n=bundle.n, seed=bundle.seed,
                          operators=ops, scalars=dict(bundle.scalars),
                          certificates=dict(bundle.certificates))


_RECIPES = {
    "thm1": theorem1_instance,
    "ld": lin_dragomir_instance,
    "reid": reid_instance,
    "ginibre": generic_instance,
    "hermitian": generic_hermitian_instance,
    "ginibre_pair": generic_pair_instance,
    "ginibre_triple": generic_triple_instance,
    "psd": psd_instance,
    "psd_pair": psd_pair_instance,
    "hermitian_pair": hermitian_pair_instance,
    "normal_pair": normal_pair_instance,
    "scalar_pair": scalar_pair_instance,
}


def recipe_labels():
    return sorted(_RECIPES) + ["multi:k"]


def build_instance(recipe: str, n: int, rng: np.random.Generator) -> InstanceBundle:
    """Dispatch a recipe label, including the parametric multi:k family."""
    if recipe.startswith("multi:"):
        count = int(recipe.split(":", 1)[1])
        return multi_operator_instance(n, count, rng)
    try:
        builder = _RECIPES[recipe]
    except KeyError:
        raise BadRange(f"unknown recipe {recipe!r}") from None
    return builder(n, rng)
