import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbit_entropy.bistoch import (
    BiStochasticMatrix,
    apply_bistochastic,
    bistoch_orbit_explore,
    dot_order_bound,
    majorizes,
    max_bistochastic_pairing,
    random_bistochastic,
    unitary_to_bistochastic,
)
from orbit_entropy.entropy import trace_plog
from orbit_entropy.errors import (
    DimensionMismatch,
    InvalidMatrix,
    LengthMismatch,
    NotUnitary,
    PreconditionFailed,
)
from orbit_entropy.matcore import haar_random_unitary, two_level_rotation
from orbit_entropy.oracle import random_state
from orbit_entropy.spectrum import Spectrum

from helpers import diag_state, permutation_matrix


def test_majorizes_uniform():
    cert = majorizes([0.75, 0.25], [0.5, 0.5])
    assert cert.holds
    assert cert.first_violated_prefix is None


def test_majorizes_violation():
    cert = majorizes([0.6, 0.4], [1.0, 0.0])
    assert not cert.holds
    assert cert.first_violated_prefix == 1
    np.testing.assert_allclose(cert.prefix_sums_x, [0.6, 1.0])
    np.testing.assert_allclose(cert.prefix_sums_y, [1.0, 1.0])


def test_majorizes_total_mismatch():
    cert = majorizes([0.6, 0.4], [0.5, 0.4])
    assert not cert.holds
    assert cert.first_violated_prefix == 2


@given(st.lists(st.floats(-10, 10), min_size=1, max_size=8))
def test_majorizes_reflexive(x):
    assert majorizes(x, x).holds


def test_majorizes_sorts_input():
    assert majorizes([0.25, 0.75], [0.5, 0.5]).holds


def test_majorizes_length_mismatch():
    with pytest.raises(LengthMismatch):
        majorizes([1.0], [0.5, 0.5])


def test_bistochastic_identity():
    np.testing.assert_array_equal(unitary_to_bistochastic(np.eye(3)).entries, np.eye(3))


@pytest.mark.parametrize("k", [0.0, 0.3, 0.5, 1.0])
def test_bistochastic_from_rotation(k):
    d = unitary_to_bistochastic(two_level_rotation(2, 0, 1, k)).entries
    np.testing.assert_allclose(d, [[k, 1 - k], [1 - k, k]], atol=1e-15)


def test_bistochastic_haar_sums():
    d = unitary_to_bistochastic(haar_random_unitary(5, 11)).entries
    assert np.max(np.abs(d.sum(axis=0) - 1)) <= 1e-12
    assert np.max(np.abs(d.sum(axis=1) - 1)) <= 1e-12


def test_bistochastic_is_schur_product():
    w = haar_random_unitary(4, 2)
    np.testing.assert_allclose(unitary_to_bistochastic(w).entries, (w * w.conj()).real, atol=1e-15)


def test_bistochastic_rejects_non_unitary():
    with pytest.raises(NotUnitary):
        unitary_to_bistochastic(np.diag([1.0, 0.5]))


@pytest.mark.parametrize(
    "bad", [[[0.5, 0.5], [0.6, 0.4]], [[1.1, -0.1], [-0.1, 1.1]], [[1.0, 0.0, 0.0]]]
)
def test_bistochastic_validation(bad):
    with pytest.raises(InvalidMatrix):
        BiStochasticMatrix(bad)


def test_apply_identity():
    out = apply_bistochastic(BiStochasticMatrix(np.eye(3)), Spectrum([0.2, 0.7, 0.1]))
    np.testing.assert_array_equal(out.descending, [0.7, 0.2, 0.1])


def test_apply_averaging():
    out = apply_bistochastic(np.full((3, 3), 1 / 3), [0.7, 0.2, 0.1])
    np.testing.assert_allclose(out.descending, [1 / 3] * 3, atol=1e-15)


def test_apply_haar_majorized():
    x = Spectrum([0.7, 0.2, 0.1])
    out = apply_bistochastic(unitary_to_bistochastic(haar_random_unitary(3, 4)), x)
    assert majorizes(x, out).holds


def test_apply_reproduces_trace_coefficients():
    # Tr(W rho W* log sigma) for diagonal rho, sigma equals <log mu, D lam>
    lam = np.array([0.6, 0.3, 0.1])
    mu = np.array([0.5, 0.3, 0.2])
    w = haar_random_unitary(3, 8)
    d = unitary_to_bistochastic(w).entries
    direct = np.trace(w @ np.diag(lam) @ w.conj().T @ np.diag(np.log2(mu))).real
    assert direct == pytest.approx(np.log2(mu) @ (d @ lam), abs=1e-14)


def test_apply_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        apply_bistochastic(np.eye(2), [1.0, 0.0, 0.0])


def test_dot_order_bound_examples():
    lhs, rhs = dot_order_bound([0.3, 0.2], [0.5, 0.5], [0.5, 0.5])
    assert lhs == rhs
    assert dot_order_bound([1.0, 0.0], [0.75, 0.25], [0.5, 0.5]) == pytest.approx((0.5, 0.75))
    lhs, rhs = dot_order_bound([2.0, 2.0, 2.0], [0.7, 0.2, 0.1], [0.4, 0.3, 0.3])
    assert lhs == pytest.approx(rhs, abs=1e-15)


def test_dot_order_bound_precondition():
    with pytest.raises(PreconditionFailed):
        dot_order_bound([1.0, 0.0], [0.6, 0.4], [1.0, 0.0])


@settings(max_examples=100, deadline=None)
@given(d=st.integers(1, 10), seed=st.integers(0, 2**32 - 1))
def test_dot_order_bound_random(d, seed):
    rng = np.random.default_rng(seed)
    x = rng.normal(size=d)
    y = random_bistochastic(d, rng) @ x
    u = rng.normal(size=d)
    lhs, rhs = dot_order_bound(u, x, y)
    assert lhs <= rhs + 1e-10


def test_pairing_d1():
    est = max_bistochastic_pairing([2.0], [3.0], samples=5, seed=0)
    assert est.empirical == est.analytic == 6.0


def test_pairing_d3_against_permutation_enumeration():
    u = np.array([0.9, -0.2, 0.4])
    x = np.array([1.5, 0.1, -0.7])
    us, xs = np.sort(u)[::-1], np.sort(x)[::-1]
    best = max(us @ permutation_matrix(p) @ xs for p in itertools.permutations(range(3)))
    est = max_bistochastic_pairing(u, x, samples=1000, seed=3)
    assert est.analytic == pytest.approx(best, abs=1e-15)
    assert est.empirical <= est.analytic + 1e-10
    assert est.analytic - est.empirical >= 0.0


@pytest.mark.parametrize("d", range(1, 7))
def test_pairing_identity_is_best_permutation(d):
    rng = np.random.default_rng(d)
    us, xs = np.sort(rng.normal(size=d))[::-1], np.sort(rng.normal(size=d))[::-1]
    vals = {p: us @ xs[list(p)] for p in itertools.permutations(range(d))}
    assert max(vals.values()) == pytest.approx(vals[tuple(range(d))], abs=1e-14)


def test_random_bistochastic_valid(rng):
    for d in range(1, 7):
        BiStochasticMatrix(random_bistochastic(d, rng))


def test_explore_single_unitary_inside():
    rho, sigma = random_state(3, 1), random_state(3, 2)
    lo, hi, iv = bistoch_orbit_explore(rho, sigma, samples=200, mix=1, seed=5)
    assert iv.s_min - 1e-9 <= lo <= hi <= iv.s_max + 1e-9


def test_explore_maximally_mixed_sigma_goes_below():
    rho = diag_state(0.75, 0.25)
    lo, hi, iv = bistoch_orbit_explore(rho, np.eye(2) / 2, samples=4000, mix=4, seed=9)
    assert iv.s_min == pytest.approx(trace_plog(rho) + 1.0, abs=1e-12)
    assert lo < iv.s_min - 0.1
    assert hi <= iv.s_max + 1e-9


def test_explore_uniform_rho_constant():
    lo, hi, iv = bistoch_orbit_explore(np.eye(3) / 3, random_state(3, 7), samples=50, mix=3, seed=1)
    assert lo == pytest.approx(hi, abs=1e-9)
    assert lo == pytest.approx(iv.s_min, abs=1e-9)
