"""Compiled numerical kernels.

Everything here is written against plain complex128 arrays and compiled
with numba so the campaign hot paths (hundreds of thousands of small
eigenproblems) run at native speed.  The algorithms are deliberately
classical and self-contained:

* cyclic Jacobi rotations for full Hermitian eigendecompositions,
* Householder tridiagonalization + Sturm-count bisection when only the
  extreme eigenvalues of a Hermitian matrix are needed,
* Householder Hessenberg reduction + single-shift QR with deflation for
  general complex spectra.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _frobenius2(A):
    n = A.shape[0]
    s = 0.0
    for i in range(n):
        for j in range(n):
            v = A[i, j]
            s += v.real * v.real + v.imag * v.imag
    return s


@njit(cache=True)
def _offdiag2(A):
    n = A.shape[0]
    s = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                v = A[i, j]
                s += v.real * v.real + v.imag * v.imag
    return s


@njit(cache=True)
def jacobi_hermitian(H, compute_vectors, tol_factor, max_sweeps):
    """Cyclic Jacobi for a Hermitian matrix.

    Sweeps row-cyclically over the strict upper triangle and annihilates
    each pivot with a unitary plane rotation (a real Givens rotation
    composed with a phase).  Converges when the off-diagonal Frobenius
    mass drops below tol_factor times the Frobenius norm of the input.

    Returns (diagonal, V, ok); eigenvalues are unsorted, V has the
    eigenvectors as columns when compute_vectors is set.
    """
    n = H.shape[0]
    A = H.copy()
    if compute_vectors:
        V = np.eye(n, dtype=np.complex128)
    else:
        V = np.eye(1, dtype=np.complex128)
    vals = np.empty(n)
    fro = np.sqrt(_frobenius2(A))
    if fro == 0.0 or n == 1:
        for i in range(n):
            vals[i] = A[i, i].real
        return vals, V, True
    thresh = tol_factor * fro
    ok = False
    for _sweep in range(max_sweeps):
        if np.sqrt(_offdiag2(A)) <= thresh:
            ok = True
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                aab = abs(apq)
                if aab < 1e-300:
                    continue
                app = A[p, p].real
                aqq = A[q, q].real
                phi = apq / aab
                phib = np.conj(phi)
                tau = (aqq - app) / (2.0 * aab)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # A <- G* A G with G acting on the (p, q) plane:
                # G[p,p]=c, G[p,q]=s*phi, G[q,p]=-s*phib, G[q,q]=c
                for k in range(n):
                    akp = A[k, p]
                    akq = A[k, q]
                    A[k, p] = c * akp - s * phib * akq
                    A[k, q] = s * phi * akp + c * akq
                for k in range(n):
                    apk = A[p, k]
                    aqk = A[q, k]
                    A[p, k] = c * apk - s * phi * aqk
                    A[q, k] = s * phib * apk + c * aqk
                A[p, p] = complex(A[p, p].real, 0.0)
                A[q, q] = complex(A[q, q].real, 0.0)
                if compute_vectors:
                    for k in range(n):
                        vkp = V[k, p]
                        vkq = V[k, q]
                        V[k, p] = c * vkp - s * phib * vkq
                        V[k, q] = s * phi * vkp + c * vkq
    else:
        ok = np.sqrt(_offdiag2(A)) <= thresh
    for i in range(n):
        vals[i] = A[i, i].real
    return vals, V, ok


@njit(cache=True)
def tridiagonalize(H):
    """Householder reduction of Hermitian H to real tridiagonal data.

    Returns (d, e2): the diagonal and the squared moduli of the
    subdiagonal.  The characteristic polynomial of a Hermitian
    tridiagonal matrix depends on the subdiagonal only through |e|^2,
    so phases need not be carried.
    """
    n = H.shape[0]
    A = H.copy()
    d = np.empty(n)
    e2 = np.empty(max(n - 1, 1))
    v = np.empty(n, dtype=np.complex128)
    w = np.empty(n, dtype=np.complex128)
    _tridiag_ws(A, d, e2, v, w)
    return d, e2


@njit(cache=True)
def _negcount(d, e2, x):
    """Number of eigenvalues of the tridiagonal matrix strictly below x."""
    n = d.shape[0]
    cnt = 0
    q = d[0] - x
    if q < 0.0:
        cnt += 1
    for i in range(1, n):
        if q == 0.0:
            q = -1e-300
        q = d[i] - x - e2[i - 1] / q
        if q < 0.0:
            cnt += 1
    return cnt


@njit(cache=True)
def _extreme_from_tridiag(d, e2, want_max):
    """Largest (or smallest) eigenvalue of a tridiagonal matrix by bisection."""
    n = d.shape[0]
    lo = d[0]
    hi = d[0]
    for i in range(n):
        r = 0.0
        if i > 0:
            r += np.sqrt(e2[i - 1])
        if i < n - 1:
            r += np.sqrt(e2[i])
        if d[i] + r > hi:
            hi = d[i] + r
        if d[i] - r < lo:
            lo = d[i] - r
    scale = max(abs(lo), abs(hi), 1e-300)
    tol = 1e-15 * scale
    if want_max:
        # largest x with negcount(x) < n
        a = lo
        b = hi
        for _ in range(200):
            if b - a <= tol:
                break
            mid = 0.5 * (a + b)
            if _negcount(d, e2, mid) == n:
                b = mid
            else:
                a = mid
        return 0.5 * (a + b)
    a = lo
    b = hi
    for _ in range(200):
        if b - a <= tol:
            break
        mid = 0.5 * (a + b)
        if _negcount(d, e2, mid) >= 1:
            b = mid
        else:
            a = mid
    return 0.5 * (a + b)


@njit(cache=True)
def lambda_max_hermitian(H):
    """Largest eigenvalue of Hermitian H (tridiagonalize + bisect)."""
    n = H.shape[0]
    if n == 1:
        return H[0, 0].real
    if n == 2:
        mid = 0.5 * (H[0, 0].real + H[1, 1].real)
        dev = 0.5 * (H[0, 0].real - H[1, 1].real)
        z = H[0, 1]
        return mid + np.sqrt(dev * dev + z.real * z.real + z.imag * z.imag)
    d, e2 = tridiagonalize(H)
    return _extreme_from_tridiag(d, e2, True)


@njit(cache=True)
def _tridiag_ws(A, d, e2, v, w):
    """In-place Householder tridiagonalization into preallocated buffers.

    A is destroyed; d and e2 receive the diagonal and squared
    subdiagonal moduli; v and w are length-n scratch vectors.
    """
    n = A.shape[0]
    for k in range(n - 2):
        alpha2 = 0.0
        for i in range(k + 1, n):
            z = A[i, k]
            alpha2 += z.real * z.real + z.imag * z.imag
        if alpha2 == 0.0:
            continue
        a0 = A[k + 1, k]
        alpha = np.sqrt(alpha2)
        if abs(a0) > 0.0:
            phase = a0 / abs(a0)
        else:
            phase = 1.0 + 0.0j
        m = n - k - 1
        v[0] = a0 + phase * alpha
        for i in range(1, m):
            v[i] = A[k + 1 + i, k]
        vn2 = 0.0
        for i in range(m):
            vn2 += v[i].real * v[i].real + v[i].imag * v[i].imag
        if vn2 == 0.0:
            continue
        beta = 2.0 / vn2
        s = 0.0 + 0.0j
        for i in range(m):
            s += np.conj(v[i]) * A[k + 1 + i, k]
        s *= beta
        for i in range(m):
            A[k + 1 + i, k] -= s * v[i]
            A[k, k + 1 + i] = np.conj(A[k + 1 + i, k])
        for i in range(m):
            acc = 0.0 + 0.0j
            for j in range(m):
                acc += A[k + 1 + i, k + 1 + j] * v[j]
            w[i] = beta * acc
        kc = 0.0 + 0.0j
        for i in range(m):
            kc += np.conj(v[i]) * w[i]
        kc *= 0.5 * beta
        for i in range(m):
            w[i] -= kc * v[i]
        for i in range(m):
            for j in range(m):
                A[k + 1 + i, k + 1 + j] -= (
                    v[i] * np.conj(w[j]) + w[i] * np.conj(v[j])
                )
    for i in range(n):
        d[i] = A[i, i].real
    for i in range(n - 1):
        z = A[i + 1, i]
        e2[i] = z.real * z.real + z.imag * z.imag


@njit(cache=True)
def radius_grid_scan(P, Q, m):
    """Values of theta -> lambda_max(cos(theta) P - sin(theta) Q) on a
    uniform m-point grid over [0, 2*pi).

    P and Q are the Hermitian Cartesian parts of the operator, so the
    matrix at theta + pi is the negation of the one at theta; for even m
    each tridiagonalization therefore serves two grid points (lambda_max
    at theta, -lambda_min at theta + pi).
    """
    n = P.shape[0]
    out = np.empty(m)
    H = np.empty((n, n), dtype=np.complex128)
    d = np.empty(n)
    e2 = np.empty(max(n - 1, 1))
    v = np.empty(n, dtype=np.complex128)
    w = np.empty(n, dtype=np.complex128)
    pairwise = m % 2 == 0
    loops = m // 2 if pairwise else m
    for g in range(loops):
        t = 2.0 * np.pi * g / m
        ct = np.cos(t)
        st = np.sin(t)
        for i in range(n):
            for j in range(n):
                H[i, j] = ct * P[i, j] - st * Q[i, j]
        if n == 1:
            out[g] = H[0, 0].real
            if pairwise:
                out[g + m // 2] = -H[0, 0].real
            continue
        if n == 2:
            # closed form for the 2x2 Hermitian extremes
            mid = 0.5 * (H[0, 0].real + H[1, 1].real)
            dev = 0.5 * (H[0, 0].real - H[1, 1].real)
            z = H[0, 1]
            rad = np.sqrt(dev * dev + z.real * z.real + z.imag * z.imag)
            out[g] = mid + rad
            if pairwise:
                out[g + m // 2] = -(mid - rad)
            continue
        _tridiag_ws(H, d, e2, v, w)
        out[g] = _extreme_from_tridiag(d, e2, True)
        if pairwise:
            out[g + m // 2] = -_extreme_from_tridiag(d, e2, False)
    if not pairwise:
        for g in range(loops, m):
            t = 2.0 * np.pi * g / m
            ct = np.cos(t)
            st = np.sin(t)
            for i in range(n):
                for j in range(n):
                    H[i, j] = ct * P[i, j] - st * Q[i, j]
            out[g] = lambda_max_hermitian(H)
    return out


@njit(cache=True)
def direction_eval(P, Q, t):
    """lambda_max(cos(t) P - sin(t) Q) at a single angle t."""
    n = P.shape[0]
    H = np.empty((n, n), dtype=np.complex128)
    ct = np.cos(t)
    st = np.sin(t)
    for i in range(n):
        for j in range(n):
            H[i, j] = ct * P[i, j] - st * Q[i, j]
    return lambda_max_hermitian(H)


@njit(cache=True)
def _hessenberg(A):
    """Householder reduction to upper Hessenberg form (copy of A)."""
    n = A.shape[0]
    H = A.copy()
    for k in range(n - 2):
        alpha2 = 0.0
        for i in range(k + 1, n):
            v = H[i, k]
            alpha2 += v.real * v.real + v.imag * v.imag
        if alpha2 == 0.0:
            continue
        a0 = H[k + 1, k]
        alpha = np.sqrt(alpha2)
        if abs(a0) > 0.0:
            phase = a0 / abs(a0)
        else:
            phase = 1.0 + 0.0j
        m = n - k - 1
        v = np.empty(m, dtype=np.complex128)
        v[0] = a0 + phase * alpha
        for i in range(1, m):
            v[i] = H[k + 1 + i, k]
        vn2 = 0.0
        for i in range(m):
            vn2 += v[i].real * v[i].real + v[i].imag * v[i].imag
        if vn2 == 0.0:
            continue
        beta = 2.0 / vn2
        for j in range(k, n):
            s = 0.0 + 0.0j
            for i in range(m):
                s += np.conj(v[i]) * H[k + 1 + i, j]
            s *= beta
            for i in range(m):
                H[k + 1 + i, j] -= s * v[i]
        for i in range(n):
            s = 0.0 + 0.0j
            for j in range(m):
                s += H[i, k + 1 + j] * v[j]
            s *= beta
            for j in range(m):
                H[i, k + 1 + j] -= s * np.conj(v[j])
        for i in range(k + 2, n):
            H[i, k] = 0.0
    return H


@njit(cache=True)
def qr_eigvals(A, deflate_tol, max_iter):
    """Eigenvalues of a general complex matrix.

    Hessenberg reduction followed by explicit single-shift QR steps with
    Wilkinson shifts, Givens rotations, and trailing deflation.  A
    stagnation counter injects an exceptional shift every twenty steps
    on the same block.  Returns (eigenvalues, ok).
    """
    n = A.shape[0]
    eigs = np.zeros(n, dtype=np.complex128)
    if n == 1:
        eigs[0] = A[0, 0]
        return eigs, True
    H = _hessenberg(A)
    eps = 2.220446049250313e-16
    hi = n - 1
    it_total = 0
    stagnant = 0
    cs = np.empty(n)
    sn = np.empty(n, dtype=np.complex128)
    while hi >= 0:
        if it_total > max_iter:
            return eigs, False
        for i in range(1, hi + 1):
            t = abs(H[i - 1, i - 1]) + abs(H[i, i])
            if abs(H[i, i - 1]) <= max(deflate_tol, eps * t):
                H[i, i - 1] = 0.0
        if hi == 0:
            eigs[0] = H[0, 0]
            hi = -1
            continue
        if H[hi, hi - 1] == 0.0:
            eigs[hi] = H[hi, hi]
            hi -= 1
            stagnant = 0
            continue
        if hi == 1 or H[hi - 1, hi - 2] == 0.0:
            a = H[hi - 1, hi - 1]
            b = H[hi - 1, hi]
            c = H[hi, hi - 1]
            d = H[hi, hi]
            tr2 = 0.5 * (a + d)
            disc = np.sqrt(tr2 * tr2 - (a * d - b * c))
            eigs[hi - 1] = tr2 + disc
            eigs[hi] = tr2 - disc
            hi -= 2
            stagnant = 0
            continue
        lo = hi
        while lo > 0 and H[lo, lo - 1] != 0.0:
            lo -= 1
        a = H[hi - 1, hi - 1]
        b = H[hi - 1, hi]
        c = H[hi, hi - 1]
        d = H[hi, hi]
        stagnant += 1
        if stagnant % 20 == 0:
            mu = d + complex(abs(H[hi, hi - 1]) + abs(H[hi - 1, hi - 2]), 0.0)
        else:
            tr2 = 0.5 * (a + d)
            disc = np.sqrt(tr2 * tr2 - (a * d - b * c))
            l1 = tr2 + disc
            l2 = tr2 - disc
            if abs(l1 - d) < abs(l2 - d):
                mu = l1
            else:
                mu = l2
        for i in range(lo, hi + 1):
            H[i, i] -= mu
        for i in range(lo, hi):
            x = H[i, i]
            y = H[i + 1, i]
            nrm = np.sqrt(x.real * x.real + x.imag * x.imag
                          + y.real * y.real + y.imag * y.imag)
            if nrm == 0.0:
                cs[i] = 1.0
                sn[i] = 0.0
                continue
            ax = abs(x)
            if ax == 0.0:
                cs[i] = 0.0
                sn[i] = 1.0 + 0.0j
            else:
                cs[i] = ax / nrm
                sn[i] = (x / ax) * np.conj(y) / nrm
            for j in range(i, hi + 1):
                hij = H[i, j]
                h1j = H[i + 1, j]
                H[i, j] = cs[i] * hij + sn[i] * h1j
                H[i + 1, j] = -np.conj(sn[i]) * hij + cs[i] * h1j
        for i in range(lo, hi):
            top = min(i + 2, hi)
            for k in range(lo, top + 1):
                hki = H[k, i]
                hki1 = H[k, i + 1]
                H[k, i] = hki * cs[i] + hki1 * np.conj(sn[i])
                H[k, i + 1] = -hki * sn[i] + hki1 * cs[i]
        for i in range(lo, hi + 1):
            H[i, i] += mu
        it_total += 1
    return eigs, True


def warm_up():
    """Force compilation of all kernels on a tiny problem."""
    A = np.array([[1.0 + 0.0j, 0.5j], [-0.5j, -1.0]])
    jacobi_hermitian(A, True, 1e-13, 100)
    jacobi_hermitian(A, False, 1e-13, 100)
    lambda_max_hermitian(A)
    P = A
    Q = np.zeros((2, 2), dtype=np.complex128)
    radius_grid_scan(P, Q, 8)
    radius_grid_scan(P, Q, 7)
    direction_eval(P, Q, 0.3)
    qr_eigvals(np.array([[0.0 + 0.0j, 1.0], [0.0, 0.0]]), 1e-14, 400)
