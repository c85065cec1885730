"""Simulation and photon-counting analysis for an Autler-Townes-splitting optical memory."""

from .constants import C_LIGHT, H_PLANCK, K_B, TWO_PI
from .decoherence import (
    DecoherenceModel,
    LifetimeFit,
    fit_exponential_lifetime,
    magnetic_retention,
    motional_efficiency_1e_time,
    motional_retention,
    total_retention,
)
from .geometry import (
    BeamGeometry,
    PhaseMatching,
    grating_period,
    leakage_photons,
    output_wavevector,
    phase_matching,
)
from .media import RB87, AtomSpecies, EnsembleParams, thermal_speed
from .pulses import (
    ControlSchedule,
    PulseEnvelope,
    ReadoutPulse,
    calibrate_peak_for_area,
    make_schedule,
    photons_per_pulse,
    pulse_area,
)
from .solver import (
    ControlOptimum,
    GridResolutionError,
    NumericalFailure,
    SimulationResult,
    SolverError,
    SolverGrid,
    optimize_control_amplitude,
    partial_readout_fractions,
    simulate_protocol,
    tune_two_way_split,
)

__version__ = "0.1.0"
