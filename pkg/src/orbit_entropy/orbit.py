"""Extremes of S(U rho U* || sigma) over the unitary group and target synthesis.

Writing f(U) = Tr(U rho U* log2 sigma), the relative entropy on the orbit is
``trace_plog(rho) - f(U)``.  f is maximized by pairing the descending
eigenvalues of rho with the descending eigenvalues of sigma and minimized by
the reversed pairing, so the relative entropy is smallest for the aligned
unitary and largest for the anti-aligned one.  Every value in between is
reached by a chain of two-level rotations (see :func:`synthesize_target`).
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .entropy import spectral_plog
from .errors import NotPositiveDefinite, ParameterOutOfRange, TargetOutOfInterval
from .matcore import PD_EPS, hermitian_eig, two_level_rotation
from .spectrum import Spectrum, as_spectrum

INTERVAL_TOL = 1e-9
_STOP_TOL = 1e-12


class Alignment(str, enum.Enum):
    ALIGNED = "aligned"
    ANTI_ALIGNED = "anti_aligned"


@dataclass(frozen=True, eq=False)
class EntropyInterval:
    s_min: float
    s_max: float
    u_min: np.ndarray
    u_max: np.ndarray
    f_min: float
    f_max: float

    @property
    def width(self):
        return self.s_max - self.s_min

    def contains(self, value, tol=INTERVAL_TOL):
        return self.s_min - tol <= value <= self.s_max + tol


@dataclass(frozen=True, eq=False)
class SynthesisPlan:
    """Rotation steps applied in sigma's descending eigenframe.

    The synthesized unitary is ``frame @ G_n ... G_1 @ frame^* @ basis_change``
    where ``G_i = two_level_rotation(d, a_i, b_i, k_i)``.
    """

    steps: tuple = ()
    basis_change: np.ndarray = field(default=None, repr=False)
    frame: np.ndarray = field(default=None, repr=False)

    def unitary(self):
        d = self.basis_change.shape[0]
        w = np.eye(d, dtype=np.complex128)
        for a, b, k in self.steps:
            w = two_level_rotation(d, a, b, k) @ w
        y = self.frame
        return y @ w @ y.conj().T @ self.basis_change


def _pd_eig(a):
    eig = hermitian_eig(a)
    lo = eig.values.descending[-1]
    if lo <= PD_EPS:
        raise NotPositiveDefinite(lo, PD_EPS)
    return eig


def aligning_unitary(rho, sigma, order=Alignment.ALIGNED):
    """Unitary sending rho's j-th descending eigenvector to sigma's j-th
    descending (aligned) or ascending (anti_aligned) eigenvector."""
    order = Alignment(order)
    x = _pd_eig(rho).vectors
    y = _pd_eig(sigma).vectors
    if order is Alignment.ANTI_ALIGNED:
        y = y[:, ::-1]
    return y @ x.conj().T


def _spectra(rho, sigma):
    return _pd_eig(rho).values.descending, _pd_eig(sigma).values.descending


def orbit_trace_bounds(rho, sigma):
    """(min, max) of Tr(U rho U* log2 sigma) over unitaries U."""
    lam, mu = _spectra(rho, sigma)
    log_mu = np.log2(mu)
    return float(lam @ log_mu[::-1]), float(lam @ log_mu)


def orbit_relent_bounds(rho, sigma):
    eig_r = _pd_eig(rho)
    eig_s = _pd_eig(sigma)
    lam = eig_r.values.descending
    log_mu = np.log2(eig_s.values.descending)
    f_max = float(lam @ log_mu)
    f_min = float(lam @ log_mu[::-1])
    plog = spectral_plog(lam)
    x, y = eig_r.vectors, eig_s.vectors
    return EntropyInterval(
        s_min=plog - f_max,
        s_max=plog - f_min,
        u_min=y @ x.conj().T,
        u_max=y[:, ::-1] @ x.conj().T,
        f_min=f_min,
        f_max=f_max,
    )


def trace_overlap_range(rho, sigma):
    """(lo, hi) of Tr(U rho U* sigma) over unitaries U."""
    lam, mu = _spectra(rho, sigma)
    return float(lam @ mu[::-1]), float(lam @ mu)


def d2_interpolation_value(lam, mu, k):
    """Tr(U rho U* sigma) for the two-level rotation with parameter k (d = 2)."""
    lam = as_spectrum(lam).descending
    mu = as_spectrum(mu).descending
    if lam.size != 2 or mu.size != 2:
        raise ParameterOutOfRange("d2_interpolation_value needs two-element spectra")
    if not 0.0 <= k <= 1.0:
        raise ParameterOutOfRange(f"k must lie in [0, 1], got {k!r}")
    crossed = lam[0] * mu[1] + lam[1] * mu[0]
    paired = lam[0] * mu[0] + lam[1] * mu[1]
    return float((1.0 - k) * crossed + k * paired)


def bubble_schedule(d):
    """Adjacent transpositions carrying the identity pairing to its reversal.

    Pass i walks the i-th largest weight from position 0 to position d-1-i.
    """
    return [(j, j + 1) for i in range(d - 1) for j in range(d - 1 - i)]


def synthesize_target(rho, sigma, target):
    """Build U with S(U rho U* || sigma) == target (bits).

    Returns ``(U, plan)``.  Walks the bubble schedule from the aligned pairing,
    taking full swaps while the swapped value stays at or above the target
    trace value, then finishes with one partial rotation whose parameter is
    solved from the linear dependence of the trace value on k.
    """
    eig_r = _pd_eig(rho)
    eig_s = _pd_eig(sigma)
    lam = eig_r.values.descending
    scores = np.log2(eig_s.values.descending)
    f_max = float(lam @ scores)
    f_min = float(lam @ scores[::-1])
    plog = spectral_plog(lam)
    s_min, s_max = plog - f_max, plog - f_min
    if not (s_min - INTERVAL_TOL <= target <= s_max + INTERVAL_TOL):
        raise TargetOutOfInterval(target, s_min, s_max)

    x, y = eig_r.vectors, eig_s.vectors
    basis_change = y @ x.conj().T
    d = lam.size
    f_target = min(max(plog - target, f_min), f_max)

    steps = []
    pairing = list(range(d))  # pairing[j]: index of the weight sitting at score j
    f_cur = f_max
    if s_max - s_min > INTERVAL_TOL:
        for a, b in bubble_schedule(d):
            if f_cur - f_target <= _STOP_TOL:
                break
            wa, wb = lam[pairing[a]], lam[pairing[b]]
            if wa == wb:
                # identical weights: relabel only, the state does not change
                pairing[a], pairing[b] = pairing[b], pairing[a]
                continue
            f_swap = f_cur + (wb - wa) * scores[a] + (wa - wb) * scores[b]
            gap = f_cur - f_swap
            # gap == 0 with distinct weights means tied scores; the full swap
            # costs nothing here but later steps rely on the weight having moved
            if f_swap >= f_target or gap <= 0.0:
                steps.append((a, b, 0.0))
                pairing[a], pairing[b] = pairing[b], pairing[a]
                f_cur = f_swap
                continue
            k = min(max((f_target - f_swap) / gap, 0.0), 1.0)
            steps.append((a, b, float(k)))
            f_cur = f_target
            break

    plan = SynthesisPlan(tuple(steps), basis_change, y)
    return plan.unitary(), plan


def is_attainable(rho, sigma, target):
    lam, mu = _spectra(rho, sigma)
    log_mu = np.log2(mu)
    plog = spectral_plog(lam)
    s_min = plog - float(lam @ log_mu)
    s_max = plog - float(lam @ log_mu[::-1])
    return bool(s_min - INTERVAL_TOL <= target <= s_max + INTERVAL_TOL)


__all__ = [
    "Alignment",
    "EntropyInterval",
    "INTERVAL_TOL",
    "Spectrum",
    "SynthesisPlan",
    "aligning_unitary",
    "bubble_schedule",
    "d2_interpolation_value",
    "is_attainable",
    "orbit_relent_bounds",
    "orbit_trace_bounds",
    "synthesize_target",
    "trace_overlap_range",
]
