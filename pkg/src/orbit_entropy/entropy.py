"""Base-2 entropy kernels.

``trace_plog`` is Tr(P log2 P) with no leading minus sign, so it is <= 0 for
density operators.  The relative entropy is
``Tr(P log2 P) - Tr(P log2 Q)`` and is ``math.inf`` when the support of P
escapes the support of Q.
"""

import math

import numpy as np

from .errors import InvalidMatrix, NotPositiveDefinite
from .matcore import PD_EPS, assert_positive_definite, hermitian, hermitian_eig
from .spectrum import Spectrum, as_spectrum

__all__ = [
    "LOG2E",
    "Spectrum",
    "as_spectrum",
    "bits_to_nats",
    "log2_matrix",
    "relative_entropy",
    "spectral_plog",
    "trace_against_log",
    "trace_plog",
    "trace_product",
]

LOG2E = math.log2(math.e)
SUPPORT_REL_EPS = 1e-12


def bits_to_nats(value):
    return value / LOG2E


def spectral_plog(values):
    """Sum of v*log2(v) over a positive vector."""
    v = np.asarray(values, dtype=float)
    return float(np.sum(v * np.log2(v)))


def trace_product(a, b):
    """Real part of Tr(A B) without forming the product."""
    return float(np.einsum("ij,ji->", a, b).real)


def trace_plog(p):
    return spectral_plog(assert_positive_definite(p).descending)


def log2_matrix(sigma):
    """log2 of a positive definite matrix, assembled in its own eigenbasis."""
    eig = hermitian_eig(sigma)
    mu = eig.values.descending
    if mu[-1] <= PD_EPS:
        raise NotPositiveDefinite(mu[-1], PD_EPS)
    y = eig.vectors
    return (y * np.log2(mu)) @ y.conj().T


def trace_against_log(a, sigma):
    """Tr(A log2 sigma) for Hermitian A and positive definite sigma."""
    return trace_product(hermitian(a), log2_matrix(sigma))


def relative_entropy(p, q, eps=SUPPORT_REL_EPS):
    """S(P||Q) in bits for positive semidefinite P, Q with Tr P > 0.

    Eigenvalues at or below ``eps`` times the largest eigenvalue of each
    operator count as zero when deciding supports.
    """
    ph = hermitian(p)
    ep = hermitian_eig(ph)
    eq = hermitian_eig(q)
    lam = ep.values.descending
    mu = eq.values.descending
    if lam[0] <= 0 or float(np.sum(lam)) <= 0:
        raise InvalidMatrix("first argument must have positive trace")
    _check_psd(lam)
    _check_psd(mu)
    p_cut = eps * lam[0]
    q_cut = eps * max(mu[0], 0.0)

    keep_q = mu > q_cut
    y = eq.vectors
    # weight of P outside supp(Q)
    y_ker = y[:, ~keep_q]
    if y_ker.shape[1]:
        leak = float(np.einsum("ij,ik,kj->", y_ker.conj(), ph, y_ker).real)
        if leak > p_cut:
            return math.inf
    if not np.any(keep_q):
        return math.inf

    y_sup = y[:, keep_q]
    log_q = (y_sup * np.log2(mu[keep_q])) @ y_sup.conj().T
    pos = lam[lam > p_cut]
    return spectral_plog(pos) - trace_product(ph, log_q)


PSD_NEG_TOL = 1e-9


def _check_psd(values):
    scale = max(abs(values[0]), abs(values[-1]), 1.0)
    if values[-1] < -PSD_NEG_TOL * scale:
        raise NotPositiveDefinite(values[-1])
