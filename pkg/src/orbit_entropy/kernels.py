"""Hot numeric kernels: complex cyclic Jacobi and batched eigenvalue sweeps.

Each kernel exists twice, once as a numba ``@njit`` loop nest and once as a
numpy implementation of the same rotation sequence.  ``jacobi_hermitian`` and
``batch_eigvalsh`` dispatch on :func:`orbit_entropy._accel.use_numba`, which
reads ``ORBIT_ENTROPY_BACKEND`` at call time.
"""

import math

import numpy as np

from ._accel import njit, use_numba

DEFAULT_REL_TOL = 1e-14
DEFAULT_MAX_SWEEPS = 100


def _rotation(app, aqq, apq):
    # Returns (c, s, phase) such that G = [[c, s], [-s*conj(phase), c*conj(phase)]]
    # zeroes the (p, q) entry of G^H A G.
    mag = abs(apq)
    phase = apq / mag
    theta = (aqq - app) / (2.0 * mag)
    if theta >= 0.0:
        t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
    else:
        t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    return c, t * c, phase


_rotation_nb = njit(cache=True)(_rotation)


@njit(cache=True)
def _offdiag_norm_nb(a):
    n = a.shape[0]
    acc = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                z = a[i, j]
                acc += z.real * z.real + z.imag * z.imag
    return math.sqrt(acc)


@njit(cache=True)
def _jacobi_nb(a, tol, max_sweeps):
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    sweeps = 0
    while _offdiag_norm_nb(a) > tol:
        if sweeps >= max_sweeps:
            return np.empty(0), v, -1
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq.real == 0.0 and apq.imag == 0.0:
                    continue
                c, s, ph = _rotation_nb(a[p, p].real, a[q, q].real, apq)
                gqp = -s * np.conj(ph)
                gqq = c * np.conj(ph)
                # A <- A G
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp + gqp * akq
                    a[k, q] = s * akp + gqq * akq
                # A <- G^H A
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk + np.conj(gqp) * aqk
                    a[q, k] = s * apk + np.conj(gqq) * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp + gqp * vkq
                    v[k, q] = s * vkp + gqq * vkq
    w = np.empty(n)
    for i in range(n):
        w[i] = a[i, i].real
    return w, v, sweeps


def _offdiag_norm_np(a):
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def _jacobi_np(a, tol, max_sweeps):
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    sweeps = 0
    while _offdiag_norm_np(a) > tol:
        if sweeps >= max_sweeps:
            return np.empty(0), v, -1
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = complex(a[p, q])
                if apq == 0:
                    continue
                c, s, ph = _rotation(a[p, p].real, a[q, q].real, apq)
                gqp = -s * ph.conjugate()
                gqq = c * ph.conjugate()
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p + gqp * col_q
                a[:, q] = s * col_p + gqq * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p + gqp.conjugate() * row_q
                a[q, :] = s * row_p + gqq.conjugate() * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp + gqp * vq
                v[:, q] = s * vp + gqq * vq
    return np.diag(a).real.copy(), v, sweeps


def jacobi_hermitian(a, rel_tol=DEFAULT_REL_TOL, max_sweeps=DEFAULT_MAX_SWEEPS, backend=None):
    """Diagonalize a Hermitian matrix by cyclic complex Jacobi rotations.

    Returns ``(values, vectors, sweeps)`` in raw Jacobi order (unsorted).
    ``sweeps`` is -1 when the off-diagonal Frobenius norm did not drop below
    ``rel_tol * ||a||_F`` within ``max_sweeps`` sweeps.
    """
    work = np.array(a, dtype=np.complex128, order="C", copy=True)
    tol = rel_tol * np.linalg.norm(work)
    if backend is None:
        backend = "numba" if use_numba() else "numpy"
    if backend == "numba":
        return _jacobi_nb(work, tol, max_sweeps)
    return _jacobi_np(work, tol, max_sweeps)


@njit(cache=True)
def _batch_eigvalsh_nb(stack, rel_tol, max_sweeps):
    m = stack.shape[0]
    n = stack.shape[1]
    out = np.empty((m, n))
    for i in range(m):
        work = stack[i].copy()
        tol = rel_tol * math.sqrt(np.sum(np.abs(work) ** 2))
        w, _, sweeps = _jacobi_nb(work, tol, max_sweeps)
        if sweeps < 0:
            out[i, :] = np.nan
        else:
            out[i, :] = w
    return out


def batch_eigvalsh(stack, rel_tol=DEFAULT_REL_TOL, max_sweeps=DEFAULT_MAX_SWEEPS, backend=None):
    """Eigenvalues (unsorted) of each Hermitian matrix in an ``(m, d, d)`` stack.

    Rows that fail to converge come back as NaN.
    """
    stack = np.ascontiguousarray(stack, dtype=np.complex128)
    if backend is None:
        backend = "numba" if use_numba() else "numpy"
    if backend == "numba":
        return _batch_eigvalsh_nb(stack, rel_tol, max_sweeps)
    out = np.empty(stack.shape[:2])
    for i, mat in enumerate(stack):
        w, _, sweeps = jacobi_hermitian(mat, rel_tol, max_sweeps, backend="numpy")
        out[i] = w if sweeps >= 0 else np.nan
    return out
