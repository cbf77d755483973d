"""Angular momentum of relativistic wavepackets.

A library and CLI for transporting the first moments of plane-wave spectra
between inertial frames, splitting their angular momentum into intrinsic and
extrinsic parts about the energy centroid, and cross-checking everything
against direct real-space field synthesis.
"""

from .epl import (
    DecompositionResult,
    EplVector,
    advance_time,
    decompose,
    epl_vector,
    pl_spin_massive,
    pl_spin_massless,
    rest_frame,
    transport,
)
from .errors import (
    BoundaryLeakageError,
    InvalidBoostError,
    MixedMassError,
    NonTimelikeError,
    RelamError,
    SpectrumFormatError,
    UnsupportedRepresentationError,
    ZeroNormError,
)
from .minkowski import (
    AmTensor,
    Boost,
    FourVector,
    boost_am_tensor,
    boost_four_vector,
    minkowski_dot,
    minkowski_norm,
    pl_from_tensor,
)
from .observables import (
    ExpectationSet,
    boost_momentum_expect,
    classical_decompose,
    effective_mass,
    energy_centroid,
    expectation_set,
    four_momentum_expect,
    orbital_am_expect,
    spin_expect,
)
from .scenarios import SCENARIOS, ScenarioReport, run_scenario
from .spectrum import (
    GridSpectrum,
    PlaneWaveComponent,
    RingSpectrum,
    SampleCloud,
    boost_spectrum,
    load_spectrum_csv,
    make_gaussian_ring_cloud,
    make_gaussian_ring_grid,
    make_ring,
    make_two_wave,
    normalize,
    save_spectrum_csv,
    total_norm,
)
from .synthesis import (
    DensityMoments,
    FieldGrid,
    GridConfig,
    densities,
    emit_field,
    moments_from_field,
    synthesize,
)

__version__ = "0.1.0"
