"""Closed-form oracles shared by the test modules."""

import math

import numpy as np


def eig2_closed_form(a):
    """Eigenvalues (descending) of a 2x2 Hermitian matrix."""
    p, q = a[0, 0].real, a[1, 1].real
    b = abs(a[0, 1])
    mean = (p + q) / 2.0
    rad = math.hypot((p - q) / 2.0, b)
    return np.array([mean + rad, mean - rad])


def eig3_closed_form(a):
    """Eigenvalues (descending) of a 3x3 Hermitian matrix via the trigonometric
    solution of its characteristic cubic."""
    q = np.trace(a).real / 3.0
    p1 = abs(a[0, 1]) ** 2 + abs(a[0, 2]) ** 2 + abs(a[1, 2]) ** 2
    p2 = sum((a[i, i].real - q) ** 2 for i in range(3)) + 2.0 * p1
    p = math.sqrt(p2 / 6.0)
    if p == 0.0:
        return np.full(3, q)
    b = (a - q * np.eye(3)) / p
    r = np.linalg.det(b).real / 2.0
    r = min(max(r, -1.0), 1.0)
    phi = math.acos(r) / 3.0
    e1 = q + 2.0 * p * math.cos(phi)
    e3 = q + 2.0 * p * math.cos(phi + 2.0 * math.pi / 3.0)
    e2 = 3.0 * q - e1 - e3
    return np.array([e1, e2, e3])


def random_hermitian(d, rng):
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (z + z.conj().T) / 2.0


def diag_state(*values):
    return np.diag(np.asarray(values, dtype=complex))


def matrix_doc(a):
    a = np.asarray(a, dtype=complex)
    return {"d": a.shape[0], "rows": [[[z.real, z.imag] for z in row] for row in a]}


def permutation_matrix(perm):
    d = len(perm)
    m = np.zeros((d, d))
    m[np.arange(d), perm] = 1.0
    return m


