"""Majorization, bi-stochastic matrices, and mixed-unitary exploration."""

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .entropy import relative_entropy
from .errors import (
    DimensionMismatch,
    InvalidMatrix,
    InvariantViolation,
    LengthMismatch,
    ParameterOutOfRange,
    PreconditionFailed,
)
from .matcore import UNITARY_TOL, haar_random_unitaries, unitary
from .orbit import INTERVAL_TOL, EntropyInterval, orbit_relent_bounds
from .spectrum import Spectrum, as_spectrum

MAJORIZATION_TOL = 1e-10
BISTOCH_SUM_TOL = 1e-10
BISTOCH_NEG_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class BiStochasticMatrix:
    entries: np.ndarray

    def __post_init__(self):
        b = np.array(self.entries, dtype=float)
        if b.ndim != 2 or b.shape[0] != b.shape[1] or b.shape[0] < 1:
            raise InvalidMatrix(f"bi-stochastic matrix must be square, got shape {b.shape}")
        if np.min(b) < -BISTOCH_NEG_TOL:
            raise InvalidMatrix(f"negative entry {np.min(b):.3g}")
        row_err = np.max(np.abs(b.sum(axis=1) - 1.0))
        col_err = np.max(np.abs(b.sum(axis=0) - 1.0))
        if max(row_err, col_err) > BISTOCH_SUM_TOL:
            raise InvalidMatrix(
                f"row/column sums deviate from 1 by {max(row_err, col_err):.3g}"
            )
        b.setflags(write=False)
        object.__setattr__(self, "entries", b)

    @property
    def dim(self):
        return self.entries.shape[0]


@dataclass(frozen=True)
class MajorizationCertificate:
    holds: bool
    first_violated_prefix: Optional[int]  # 1-based prefix length; d means totals differ
    prefix_sums_x: np.ndarray
    prefix_sums_y: np.ndarray


def majorizes(x, y, tol=MAJORIZATION_TOL):
    """Certificate for y being majorized by x."""
    xs, ys = as_spectrum(x).descending, as_spectrum(y).descending
    if xs.size != ys.size:
        raise LengthMismatch(f"lengths differ: {xs.size} vs {ys.size}")
    px, py = np.cumsum(xs), np.cumsum(ys)
    first = None
    bad = np.nonzero(py[:-1] > px[:-1] + tol)[0]
    if bad.size:
        first = int(bad[0]) + 1
    elif abs(px[-1] - py[-1]) > tol:
        first = xs.size
    return MajorizationCertificate(first is None, first, px, py)


def unitary_to_bistochastic(w):
    """Schur product W o conj(W), i.e. entrywise squared moduli."""
    u = unitary(w, tol=UNITARY_TOL)
    return BiStochasticMatrix(np.abs(u) ** 2)


def apply_bistochastic(d, x):
    mat = d.entries if isinstance(d, BiStochasticMatrix) else BiStochasticMatrix(d).entries
    vec = np.asarray(x.descending if isinstance(x, Spectrum) else x, dtype=float)
    if mat.shape[1] != vec.size:
        raise DimensionMismatch(f"{mat.shape} matrix cannot act on length {vec.size}")
    return Spectrum(mat @ vec)


def dot_order_bound(u, x, y):
    """(<u, y>, <u, x>) with every vector sorted descending; requires y majorized by x."""
    uu = as_spectrum(u).descending
    cert = majorizes(x, y)
    if not cert.holds:
        raise PreconditionFailed(f"y is not majorized by x (prefix {cert.first_violated_prefix})")
    xs, ys = as_spectrum(x).descending, as_spectrum(y).descending
    if uu.size != xs.size:
        raise LengthMismatch(f"lengths differ: {uu.size} vs {xs.size}")
    lhs, rhs = float(uu @ ys), float(uu @ xs)
    if lhs > rhs + MAJORIZATION_TOL:
        raise InvariantViolation(f"<u,y> = {lhs!r} exceeds <u,x> = {rhs!r}")
    return lhs, rhs


def random_bistochastic(d, rng, n_perms=None):
    """Dirichlet-weighted mixture of uniformly random permutation matrices."""
    m = d if n_perms is None else n_perms
    weights = rng.dirichlet(np.ones(m))
    b = np.zeros((d, d))
    rows = np.arange(d)
    for wt in weights:
        b[rows, rng.permutation(d)] += wt
    return b


class PairingEstimate(NamedTuple):
    empirical: float
    analytic: float


def max_bistochastic_pairing(u, x, samples, seed=None, n_perms=None):
    """Empirical max of <u, B x> over sampled bi-stochastic B, next to <u, x>.

    Both vectors are sorted descending first.
    """
    uu, xs = as_spectrum(u).descending, as_spectrum(x).descending
    if uu.size != xs.size:
        raise LengthMismatch(f"lengths differ: {uu.size} vs {xs.size}")
    if samples < 1:
        raise ParameterOutOfRange("samples must be >= 1")
    rng = np.random.default_rng(seed)
    best = -np.inf
    for _ in range(samples):
        best = max(best, float(uu @ random_bistochastic(uu.size, rng, n_perms) @ xs))
    return PairingEstimate(best, float(uu @ xs))


class ExplorationResult(NamedTuple):
    observed_min: float
    observed_max: float
    unitary_interval: EntropyInterval


def mixed_unitary_images(rho, samples, mix, rng):
    """Stack of sum_i p_i U_i rho U_i* with Dirichlet p and Haar U_i."""
    d = rho.shape[0]
    us = haar_random_unitaries(d, samples * mix, rng).reshape(samples, mix, d, d)
    p = rng.dirichlet(np.ones(mix), size=samples)
    conj = us @ rho @ np.conj(np.swapaxes(us, -1, -2))
    return np.einsum("sm,smij->sij", p, conj)


def bistoch_orbit_explore(rho, sigma, samples, mix, seed=None):
    """Sample S(Phi(rho) || sigma) over mixed-unitary Phi and compare with the
    unitary-orbit interval.

    Only the upper containment is enforced; observed values below the orbit
    minimum are reported as data.
    """
    if samples < 1 or mix < 1:
        raise ParameterOutOfRange("samples and mix must be >= 1")
    interval = orbit_relent_bounds(rho, sigma)
    rho = np.asarray(rho, dtype=np.complex128)
    rng = np.random.default_rng(seed)
    values = np.array(
        [relative_entropy(img, sigma) for img in mixed_unitary_images(rho, samples, mix, rng)]
    )
    lo, hi = float(values.min()), float(values.max())
    if hi > interval.s_max + INTERVAL_TOL:
        raise InvariantViolation(
            f"mixed-unitary image reached {hi!r} above the orbit maximum {interval.s_max!r}"
        )
    return ExplorationResult(lo, hi, interval)
