"""Exception hierarchy. Every error derives from :class:`OrbitEntropyError`."""


class OrbitEntropyError(Exception):
    pass


class InvalidMatrix(OrbitEntropyError, ValueError):
    """Input is not square, not finite, or has the wrong shape."""


class NonHermitianInput(InvalidMatrix):
    pass


class NotUnitary(InvalidMatrix):
    pass


class NotPositiveDefinite(OrbitEntropyError, ValueError):
    def __init__(self, min_eigenvalue, eps=None):
        self.min_eigenvalue = float(min_eigenvalue)
        self.eps = eps
        msg = f"matrix is not positive definite: minimum eigenvalue {self.min_eigenvalue:.6g}"
        if eps is not None:
            msg += f" <= eps {eps:.3g}"
        super().__init__(msg)


class EigensolverNonConvergence(OrbitEntropyError, ArithmeticError):
    pass


class ParameterOutOfRange(OrbitEntropyError, ValueError):
    pass


class TargetOutOfInterval(OrbitEntropyError, ValueError):
    def __init__(self, target, s_min, s_max):
        self.target = target
        self.s_min = s_min
        self.s_max = s_max
        super().__init__(
            f"target {target!r} bits lies outside the attainable interval [{s_min!r}, {s_max!r}]"
        )


class LengthMismatch(OrbitEntropyError, ValueError):
    pass


class DimensionMismatch(LengthMismatch):
    pass


class PreconditionFailed(OrbitEntropyError, ValueError):
    pass


class DimensionTooLarge(OrbitEntropyError, ValueError):
    pass


class WrongDimension(OrbitEntropyError, ValueError):
    pass


class InvariantViolation(OrbitEntropyError, AssertionError):
    """A mathematical guarantee failed numerically; indicates a bug."""
