"""Dense complex matrix substrate: validation, Hermitian eigensolver, unitaries.

Matrices travel as read-only ``complex128`` ndarrays.  The constructors
:func:`hermitian` and :func:`unitary` are the validation points; everything
downstream assumes their invariants.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (
    EigensolverNonConvergence,
    InvalidMatrix,
    NonHermitianInput,
    NotPositiveDefinite,
    NotUnitary,
    ParameterOutOfRange,
)
from .spectrum import Spectrum

UNITARY_TOL = 1e-10
HERMITIAN_TOL = 1e-8
PD_EPS = 1e-12


def _frozen(a):
    a.setflags(write=False)
    return a


def as_matrix(a):
    """Validate a square, finite, non-empty complex matrix and return a copy."""
    m = np.array(a, dtype=np.complex128, copy=True)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise InvalidMatrix(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidMatrix("matrix has non-finite entries")
    return m


def hermitian_residual(a):
    """Max-norm distance between ``a`` and its Hermitian part."""
    a = np.asarray(a)
    return float(np.max(np.abs(a - a.conj().T))) / 2.0 if a.size else 0.0


def hermitian(a, tol=HERMITIAN_TOL):
    """Return the Hermitian part of ``a`` as a read-only array.

    Raises NonHermitianInput when ``a`` is further than ``tol`` (relative to
    its max entry, floored at 1) from its Hermitian part.
    """
    m = as_matrix(a)
    scale = max(1.0, float(np.max(np.abs(m))))
    resid = hermitian_residual(m)
    if resid > tol * scale:
        raise NonHermitianInput(f"matrix is not Hermitian: residual {resid:.3g}")
    return _frozen((m + m.conj().T) / 2.0)


def unitarity_error(u):
    u = np.asarray(u)
    return float(np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0]))))


def is_unitary(u, tol=UNITARY_TOL):
    u = np.asarray(u)
    return u.ndim == 2 and u.shape[0] == u.shape[1] and unitarity_error(u) <= tol


def unitary(u, tol=UNITARY_TOL):
    m = as_matrix(u)
    err = unitarity_error(m)
    if err > tol:
        raise NotUnitary(f"||U U* - I||_max = {err:.3g} exceeds {tol:.1g}")
    return _frozen(m)


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    values: Spectrum
    vectors: np.ndarray  # column j pairs with values.descending[j]
    sweeps: int = 0

    def reconstruct(self):
        q = self.vectors
        return (q * self.values.descending) @ q.conj().T


def hermitian_eig(a):
    """Eigendecomposition of a Hermitian matrix, eigenvalues non-increasing.

    Ties keep the order in which the Jacobi sweep left them.
    """
    h = hermitian(a)
    w, v, sweeps = kernels.jacobi_hermitian(h)
    if sweeps < 0:
        raise EigensolverNonConvergence(
            f"Jacobi did not converge in {kernels.DEFAULT_MAX_SWEEPS} sweeps (d={h.shape[0]})"
        )
    order = np.argsort(-w, kind="stable")
    return EigenDecomposition(Spectrum(w[order]), _frozen(v[:, order]), sweeps)


def assert_positive_definite(a, eps=PD_EPS):
    """Return the descending spectrum of ``a``; raise if any eigenvalue <= eps."""
    if eps <= 0:
        raise ParameterOutOfRange("eps must be positive")
    spec = hermitian_eig(a).values
    lo = spec.descending[-1]
    if lo <= eps:
        raise NotPositiveDefinite(lo, eps)
    return spec


def _as_generator(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def haar_random_unitaries(d, n, seed=None):
    """Stack of ``n`` independent Haar-distributed ``d x d`` unitaries.

    QR of a complex Ginibre matrix, with each column rescaled so the diagonal
    of the triangular factor is real and positive.
    """
    if d < 1:
        raise ParameterOutOfRange(f"dimension must be >= 1, got {d}")
    rng = _as_generator(seed)
    z = (rng.standard_normal((n, d, d)) + 1j * rng.standard_normal((n, d, d))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r, axis1=1, axis2=2)
    mag = np.abs(diag)
    phases = np.where(mag > 0, diag / np.where(mag > 0, mag, 1.0), 1.0)
    return q * phases[:, None, :]


def haar_random_unitary(d, seed=None):
    """One Haar-random unitary; identical seeds give bitwise-identical output."""
    return _frozen(haar_random_unitaries(d, 1, seed)[0])


def two_level_rotation(d, a, b, k):
    """Unitary acting as [[sqrt(k), sqrt(1-k)], [sqrt(1-k), -sqrt(k)]] on rows/cols a, b.

    k=1 gives diag(1, -1) on the plane, k=0 the swap.
    """
    if not 0.0 <= k <= 1.0:
        raise ParameterOutOfRange(f"k must lie in [0, 1], got {k!r}")
    if a == b or not (0 <= a < d and 0 <= b < d):
        raise ParameterOutOfRange(f"need distinct indices below {d}, got ({a}, {b})")
    g = np.eye(d, dtype=np.complex128)
    rk, rc = np.sqrt(k), np.sqrt(1.0 - k)
    g[a, a], g[a, b] = rk, rc
    g[b, a], g[b, b] = rc, -rk
    return _frozen(g)


def conjugate(u, a):
    """U A U*."""
    return u @ a @ np.conj(u).T
