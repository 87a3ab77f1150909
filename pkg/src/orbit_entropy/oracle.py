"""Brute-force verification engines.

None of these routines use the sorted-pairing closed forms from
:mod:`orbit_entropy.orbit`: extremes come from permutation enumeration,
containment from direct evaluation on Haar samples, and the d=2 sweep from
explicit conjugation.
"""

import itertools
import math
from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np

from .entropy import log2_matrix, relative_entropy, trace_product
from .errors import DimensionTooLarge, ParameterOutOfRange, WrongDimension
from .kernels import batch_eigvalsh
from .matcore import conjugate, haar_random_unitaries, hermitian, hermitian_eig, two_level_rotation
from .orbit import INTERVAL_TOL, Alignment, aligning_unitary, orbit_relent_bounds, trace_overlap_range

MAX_PERMUTATION_DIM = 8
CORPUS_SEED = 20_240_611
_CHUNK = 4096


def random_state(d, seed=None):
    """Density operator with Dirichlet(1,...,1) spectrum in a Haar-random basis."""
    rng = np.random.default_rng(seed)
    spectrum = rng.dirichlet(np.ones(d))
    # floor keeps the pair comfortably positive definite
    spectrum = np.maximum(spectrum, 1e-6)
    spectrum /= spectrum.sum()
    u = haar_random_unitaries(d, 1, rng)[0]
    return hermitian((u * spectrum) @ u.conj().T)


def random_pair(d, seed=None):
    rng = np.random.default_rng(seed)
    return random_state(d, rng), random_state(d, rng)


def corpus(d, count, master_seed=CORPUS_SEED):
    """Reproducible list of ``count`` (rho, sigma) pairs of dimension d."""
    return [random_pair(d, (master_seed, d, i)) for i in range(count)]


class Extremes(NamedTuple):
    min: float
    max: float


def permutation_extremes(rho, sigma):
    """Exact min/max of sum_j lam_j log2 mu_pi(j) by enumerating every pi."""
    lam = hermitian_eig(rho).values.descending
    mu = hermitian_eig(sigma).values.descending
    d = lam.size
    if d > MAX_PERMUTATION_DIM:
        raise DimensionTooLarge(f"permutation enumeration is capped at d={MAX_PERMUTATION_DIM}")
    log_mu = np.log2(mu)
    perms = np.array(list(itertools.permutations(range(d))), dtype=np.intp)
    sums = log_mu[perms] @ lam
    return Extremes(float(sums.min()), float(sums.max()))


@dataclass(frozen=True)
class VerificationReport:
    pair_id: str
    samples_run: int
    containment_violations: int
    worst_gap_below_min: float
    worst_gap_above_max: float
    empirical_min: float
    empirical_max: float
    s_min: float
    s_max: float
    overlap_violations: int
    overlap_min: float
    overlap_max: float
    overlap_lo: float
    overlap_hi: float

    @property
    def ok(self):
        return self.containment_violations == 0 and self.overlap_violations == 0

    def as_dict(self):
        return asdict(self)


def orbit_samples(rho, sigma, samples, seed=None):
    """Evaluate S(U rho U* || sigma) and Tr(U rho U* sigma) on Haar samples.

    Each conjugate is diagonalized on its own; no spectral shortcut is taken.
    Returns two arrays of length ``samples``.
    """
    rho = hermitian(rho)
    sigma = hermitian(sigma)
    d = rho.shape[0]
    log_sigma = log2_matrix(sigma)
    rng = np.random.default_rng(seed)
    rel, ovl = [], []
    remaining = samples
    while remaining > 0:
        n = min(remaining, _CHUNK)
        us = haar_random_unitaries(d, n, rng)
        conj = us @ rho @ np.conj(np.swapaxes(us, -1, -2))
        conj = (conj + np.conj(np.swapaxes(conj, -1, -2))) / 2.0
        eig = batch_eigvalsh(conj)
        plog = np.sum(eig * np.log2(eig), axis=1)
        rel.append(plog - np.einsum("sij,ji->s", conj, log_sigma).real)
        ovl.append(np.einsum("sij,ji->s", conj, sigma).real)
        remaining -= n
    return np.concatenate(rel), np.concatenate(ovl)


def monte_carlo_containment(rho, sigma, samples, seed=None, pair_id=None, interval=None):
    """Check that Haar samples stay inside the orbit interval.

    ``interval`` overrides the (s_min, s_max) bounds under test; it exists so
    a negative control can feed deliberately wrong bounds.
    """
    if samples < 1:
        raise ParameterOutOfRange("samples must be >= 1")
    if interval is None:
        iv = orbit_relent_bounds(rho, sigma)
        interval = (iv.s_min, iv.s_max)
    s_min, s_max = map(float, interval)
    lo, hi = trace_overlap_range(rho, sigma)
    rel, ovl = orbit_samples(rho, sigma, samples, seed)
    below = s_min - rel
    above = rel - s_max
    bad = (below > INTERVAL_TOL) | (above > INTERVAL_TOL) | ~np.isfinite(rel)
    bad_ovl = (ovl < lo - INTERVAL_TOL) | (ovl > hi + INTERVAL_TOL)
    return VerificationReport(
        pair_id=pair_id if pair_id is not None else f"d{rho.shape[0]}-seed{seed}",
        samples_run=int(samples),
        containment_violations=int(bad.sum()),
        worst_gap_below_min=float(below.max()),
        worst_gap_above_max=float(above.max()),
        empirical_min=float(rel.min()),
        empirical_max=float(rel.max()),
        s_min=s_min,
        s_max=s_max,
        overlap_violations=int(bad_ovl.sum()),
        overlap_min=float(ovl.min()),
        overlap_max=float(ovl.max()),
        overlap_lo=lo,
        overlap_hi=hi,
    )


def d2_family(rho, sigma, k):
    """U(k): two-level rotation in sigma's eigenframe after the aligned basis change."""
    y = hermitian_eig(sigma).vectors
    base = aligning_unitary(rho, sigma, Alignment.ALIGNED)
    return y @ two_level_rotation(2, 0, 1, k) @ y.conj().T @ base


def grid_values_d2(rho, sigma, grid_points, objective="relent"):
    """Objective values along a uniform k-grid of the d=2 rotation family.

    ``objective`` is ``"relent"`` for S(U rho U* || sigma) or ``"overlap"``
    for Tr(U rho U* sigma).
    """
    rho = hermitian(rho)
    sigma = hermitian(sigma)
    if rho.shape[0] != 2 or sigma.shape[0] != 2:
        raise WrongDimension("grid search is defined for d = 2 only")
    if grid_points < 2:
        raise ParameterOutOfRange("grid_points must be >= 2")
    if objective not in ("relent", "overlap"):
        raise ParameterOutOfRange(f"unknown objective {objective!r}")
    ks = np.linspace(0.0, 1.0, grid_points)
    vals = np.empty(grid_points)
    for i, k in enumerate(ks):
        p = conjugate(d2_family(rho, sigma, float(k)), rho)
        if objective == "relent":
            vals[i] = relative_entropy(p, sigma)
        else:
            vals[i] = trace_product(p, sigma)
    return ks, vals


def grid_search_d2(rho, sigma, grid_points, objective="relent"):
    _, vals = grid_values_d2(rho, sigma, grid_points, objective)
    return Extremes(float(vals.min()), float(vals.max()))


def scalar_relent_commuting(p, q):
    """sum p_i log2(p_i / q_i) for probability vectors (diagonal operators)."""
    total = 0.0
    for pi, qi in zip(p, q):
        if pi > 0:
            total += math.inf if qi <= 0 else pi * math.log2(pi / qi)
    return total


__all__ = [
    "CORPUS_SEED",
    "Extremes",
    "VerificationReport",
    "corpus",
    "d2_family",
    "grid_search_d2",
    "grid_values_d2",
    "monte_carlo_containment",
    "orbit_samples",
    "permutation_extremes",
    "random_pair",
    "random_state",
    "scalar_relent_commuting",
]
