"""Dense complex linear algebra core.

All operators are square numpy arrays of complex128.  Inputs are
validated at the boundary (:func:`as_matrix`) and every operation is a
pure function of its arguments.  The eigensolvers live in
:mod:`opineq._kernels`; this module provides the contracts, the
decompositions built on top of them, and the spectral functional
calculus used by the inequality catalog.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import _kernels
from .errors import (
    DimensionMismatch,
    NoConvergence,
    NotHermitian,
    NotPSD,
)

# Default tolerances; tests may override per call.
JACOBI_TOL_FACTOR = 1e-13
JACOBI_MAX_SWEEPS = 100
QR_DEFLATION_FACTOR = 1e-12
QR_ITERATION_FACTOR = 100
HERMITIAN_PRE_RTOL = 1e-8
PSD_CLAMP_RTOL = 1e-8


def as_matrix(obj) -> np.ndarray:
    """Coerce to a validated square complex matrix (always a copy)."""
    A = np.array(obj, dtype=np.complex128, order="C")
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise DimensionMismatch(f"expected a square matrix, got shape {A.shape}")
    if not (np.all(np.isfinite(A.real)) and np.all(np.isfinite(A.imag))):
        raise DimensionMismatch("matrix entries must be finite")
    return A


def as_vector(obj) -> np.ndarray:
    v = np.array(obj, dtype=np.complex128, order="C")
    if v.ndim != 1 or v.shape[0] < 1:
        raise DimensionMismatch(f"expected a vector, got shape {v.shape}")
    if not (np.all(np.isfinite(v.real)) and np.all(np.isfinite(v.imag))):
        raise DimensionMismatch("vector entries must be finite")
    return v


def adjoint(A: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return A.conj().T.copy()


def frobenius_norm(A: np.ndarray) -> float:
    return float(np.linalg.norm(A))


def matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape[1] != B.shape[0]:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    return A @ B


def add(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    if A.shape != B.shape:
        raise DimensionMismatch(f"cannot add {A.shape} and {B.shape}")
    return A + B


def scale(c: complex, A: np.ndarray) -> np.ndarray:
    return c * A


def inner(x: np.ndarray, y: np.ndarray) -> complex:
    """Inner product, conjugate-linear in the second argument.

    Matches the <Ax, y> convention: inner(x, y) = sum_i x_i * conj(y_i).
    """
    if x.shape != y.shape:
        raise DimensionMismatch(f"vector shapes differ: {x.shape} vs {y.shape}")
    return complex(np.vdot(y, x))


def vec_norm(x: np.ndarray) -> float:
    return float(np.linalg.norm(x))


@dataclass(frozen=True)
class HermitianEigen:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending."""

    values: np.ndarray
    vectors: np.ndarray


@dataclass(frozen=True)
class PolarParts:
    unitary: np.ndarray
    modulus: np.ndarray


@dataclass(frozen=True)
class CartesianParts:
    real_part: np.ndarray
    imag_part: np.ndarray


def hermitian_residual(H: np.ndarray) -> float:
    """Relative deviation from selfadjointness."""
    return frobenius_norm(H - H.conj().T) / max(1.0, frobenius_norm(H))


def hermitian_eigen(H: np.ndarray,
                    tol_factor: float = JACOBI_TOL_FACTOR,
                    max_sweeps: int = JACOBI_MAX_SWEEPS) -> HermitianEigen:
    """Full eigendecomposition of a Hermitian matrix by cyclic Jacobi.

    Raises NotHermitian when the input deviates from selfadjointness by
    more than the precondition tolerance, NoConvergence when the sweep
    cap is exhausted.
    """
    H = np.asarray(H, dtype=np.complex128)
    if hermitian_residual(H) > HERMITIAN_PRE_RTOL:
        raise NotHermitian(
            f"matrix is not Hermitian within {HERMITIAN_PRE_RTOL:g} relative"
        )
    Hs = 0.5 * (H + H.conj().T)
    vals, vecs, ok = _kernels.jacobi_hermitian(Hs, True, tol_factor, max_sweeps)
    if not ok:
        raise NoConvergence("Jacobi sweep limit exceeded")
    order = np.argsort(vals, kind="stable")
    return HermitianEigen(values=vals[order], vectors=vecs[:, order])


def hermitian_eigenvalues(H: np.ndarray) -> np.ndarray:
    """Eigenvalues only (ascending) of a Hermitian matrix."""
    H = np.asarray(H, dtype=np.complex128)
    Hs = 0.5 * (H + H.conj().T)
    vals, _, ok = _kernels.jacobi_hermitian(
        Hs, False, JACOBI_TOL_FACTOR, JACOBI_MAX_SWEEPS
    )
    if not ok:
        raise NoConvergence("Jacobi sweep limit exceeded")
    return np.sort(vals)


def general_eigenvalues(A: np.ndarray,
                        deflation_factor: float = QR_DEFLATION_FACTOR,
                        iteration_factor: int = QR_ITERATION_FACTOR) -> np.ndarray:
    """Eigenvalues (with multiplicity) of a general complex matrix.

    Hessenberg reduction plus shifted QR; deflation threshold is
    deflation_factor times the Frobenius norm, the iteration cap is
    iteration_factor * n**2.
    """
    A = as_matrix(A)
    n = A.shape[0]
    tol = deflation_factor * frobenius_norm(A)
    eigs, ok = _kernels.qr_eigvals(A, tol, iteration_factor * n * n)
    if not ok:
        raise NoConvergence("shifted QR iteration cap exceeded")
    return eigs


def _psd_eigen(M: np.ndarray, clamp_rtol: float = PSD_CLAMP_RTOL) -> HermitianEigen:
    """Eigendecomposition of a PSD matrix with the negative-rounding clamp.

    Eigenvalues in [-clamp_rtol * ||M||, 0) are treated as exact zeros;
    anything below that margin raises NotPSD.
    """
    e = hermitian_eigen(M)
    scale_ = float(np.max(np.abs(e.values))) if e.values.size else 0.0
    floor = -clamp_rtol * scale_
    vals = e.values.copy()
    if np.any(vals < floor):
        raise NotPSD(
            f"eigenvalue {vals.min():.6g} below PSD clamp {floor:.6g}"
        )
    vals[vals < 0.0] = 0.0
    return HermitianEigen(values=vals, vectors=e.vectors)


def apply_function(side: Callable[[float], float], M: np.ndarray) -> np.ndarray:
    """Spectral functional calculus side(M) for Hermitian PSD M.

    side is one function of a FunctionPair (or any real scalar map that
    is defined on the clamped spectrum).
    """
    M = np.asarray(M, dtype=np.complex128)
    e = _psd_eigen(M)
    fvals = np.array([float(side(float(t))) for t in e.values])
    return (e.vectors * fvals) @ e.vectors.conj().T


def absolute_value(A: np.ndarray) -> np.ndarray:
    """Operator modulus (A* A)^(1/2)."""
    A = as_matrix(A)
    e = _psd_eigen(A.conj().T @ A)
    s = np.sqrt(e.values)
    return (e.vectors * s) @ e.vectors.conj().T


def polar(A: np.ndarray) -> PolarParts:
    """Polar factorization A = U |A| with U unitary.

    For invertible A this is the canonical U = A |A|^(-1).  For singular
    A the partial isometry is completed to a full unitary by a
    deterministic Gram-Schmidt sweep against the standard basis.
    """
    A = as_matrix(A)
    n = A.shape[0]
    e = _psd_eigen(A.conj().T @ A)
    sigma = np.sqrt(e.values)
    V = e.vectors
    modulus = (V * sigma) @ V.conj().T
    smax = float(sigma[-1])
    rank_tol = 1e-12 * smax if smax > 0 else 0.0
    W = np.zeros((n, n), dtype=np.complex128)
    filled = np.zeros(n, dtype=bool)
    # columns with significant singular values, processed largest first
    for i in range(n - 1, -1, -1):
        if sigma[i] > rank_tol and smax > 0:
            w = A @ V[:, i] / sigma[i]
            for j in range(n):
                if filled[j]:
                    w = w - W[:, j] * np.vdot(W[:, j], w)
            nw = np.linalg.norm(w)
            if nw > 0.5:
                W[:, i] = w / nw
                filled[i] = True
    # complete to a unitary: greedily add the standard basis vector with
    # the largest residual until all columns are filled
    for i in range(n):
        if filled[i]:
            continue
        best = -1.0
        bestw = None
        for j in range(n):
            w = np.zeros(n, dtype=np.complex128)
            w[j] = 1.0
            for k in range(n):
                if filled[k]:
                    w = w - W[:, k] * np.vdot(W[:, k], w)
            nw = np.linalg.norm(w)
            if nw > best:
                best = nw
                bestw = w
        W[:, i] = bestw / best
        filled[i] = True
    U = W @ V.conj().T
    return PolarParts(unitary=U, modulus=modulus)


def cartesian(A: np.ndarray) -> CartesianParts:
    """Cartesian split A = P + iQ with P, Q Hermitian."""
    A = as_matrix(A)
    P = 0.5 * (A + A.conj().T)
    Q = (A - A.conj().T) / 2j
    return CartesianParts(real_part=P, imag_part=Q)


# ---------------------------------------------------------------------------
# function pairs


@dataclass(frozen=True)
class FunctionPair:
    """A pair (f, g) of nonnegative maps on [0, inf) with f(t) g(t) = t.

    Validated on construction by sampling: the product identity must
    hold to 1e-9 relative on 64 points of [0, 10] and both sides must be
    nonnegative there.
    """

    name: str
    f: Callable[[float], float]
    g: Callable[[float], float]
    parameters: dict = field(default_factory=dict)

    def __post_init__(self):
        ts = np.linspace(0.0, 10.0, 64)
        for t in ts:
            ft = float(self.f(float(t)))
            gt = float(self.g(float(t)))
            if ft < 0.0 or gt < 0.0:
                raise ValueError(f"function pair {self.name!r} negative at t={t}")
            if abs(ft * gt - t) > 1e-9 * max(1.0, t):
                raise ValueError(
                    f"function pair {self.name!r} violates f*g = t at t={t}"
                )


def power_split(alpha: float) -> FunctionPair:
    """The power family f(t) = t**alpha, g(t) = t**(1-alpha)."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")

    def f(t, a=alpha):
        return t ** a

    def g(t, a=alpha):
        return t ** (1.0 - a)

    return FunctionPair(name=f"power({alpha:g})", f=f, g=g,
                        parameters={"alpha": alpha})


# ---------------------------------------------------------------------------
# matrix file format


def matrix_to_dict(A: np.ndarray) -> dict:
    A = as_matrix(A)
    n = A.shape[0]
    return {
        "n": n,
        "entries": [[[float(A[i, j].real), float(A[i, j].imag)]
                     for j in range(n)] for i in range(n)],
    }


def matrix_from_dict(d: dict) -> np.ndarray:
    if not isinstance(d, dict) or "n" not in d or "entries" not in d:
        raise ValueError("matrix object must have keys 'n' and 'entries'")
    n = d["n"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"bad dimension {n!r}")
    rows = d["entries"]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError("entries grid is not n x n")
    A = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        for j, cell in enumerate(row):
            if len(cell) != 2:
                raise ValueError("each entry must be a [re, im] pair")
            re, im = float(cell[0]), float(cell[1])
            if not (math.isfinite(re) and math.isfinite(im)):
                raise ValueError("matrix entries must be finite")
            A[i, j] = complex(re, im)
    return A


def load_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return matrix_from_dict(json.load(fh))


def save_matrix(path, A: np.ndarray) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(matrix_to_dict(A), fh)
        fh.write("\n")
