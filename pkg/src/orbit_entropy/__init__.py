"""Attainable range of the quantum relative entropy over a unitary orbit."""

__version__ = "0.1.0"

from .bistoch import (
    BiStochasticMatrix,
    MajorizationCertificate,
    apply_bistochastic,
    bistoch_orbit_explore,
    dot_order_bound,
    majorizes,
    max_bistochastic_pairing,
    unitary_to_bistochastic,
)
from .entropy import relative_entropy, trace_against_log, trace_plog
from .errors import (
    NonHermitianInput,
    NotPositiveDefinite,
    NotUnitary,
    OrbitEntropyError,
    ParameterOutOfRange,
    TargetOutOfInterval,
)
from .matcore import (
    EigenDecomposition,
    assert_positive_definite,
    haar_random_unitary,
    hermitian,
    hermitian_eig,
    is_unitary,
    two_level_rotation,
    unitary,
)
from .orbit import (
    Alignment,
    EntropyInterval,
    SynthesisPlan,
    aligning_unitary,
    d2_interpolation_value,
    is_attainable,
    orbit_relent_bounds,
    orbit_trace_bounds,
    synthesize_target,
    trace_overlap_range,
)
from .spectrum import Spectrum
