from dataclasses import dataclass

import numpy as np

from .errors import InvalidMatrix


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Real eigenvalue vector stored in non-increasing order."""

    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float).ravel()
        if vals.size == 0 or not np.all(np.isfinite(vals)):
            raise InvalidMatrix("spectrum must be a non-empty vector of finite reals")
        vals = vals[np.argsort(-vals, kind="stable")]
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def descending(self):
        return self.values

    @property
    def ascending(self):
        return self.values[::-1]

    @property
    def total(self):
        return float(self.values.sum())

    def is_state(self, tol=1e-10):
        return bool(np.all(self.values > 0) and abs(self.total - 1.0) <= tol)

    def __len__(self):
        return self.values.size

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)

    def __eq__(self, other):
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.values.shape == other.values.shape and bool(np.all(self.values == other.values))

    def __repr__(self):
        return f"Spectrum({np.array2string(self.values, precision=6)})"


def as_spectrum(x):
    return x if isinstance(x, Spectrum) else Spectrum(x)
