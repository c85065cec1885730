"""Atomic species data and ensemble parameters shared by the whole toolkit.

Conventions:
    * ``excited_decay_rate`` is the AMPLITUDE decay rate gamma of the optical
      coherence (half the population decay rate).  It is a configurable input;
      the shipped rubidium default of 2*pi*3.03 MHz is a documented choice,
      not a measured constant, and results that depend on it should be checked
      for robustness over roughly +/-50%.
    * ``optical_depth`` d is defined so a long weak resonant probe transmits
      e^(-d) in intensity with the control field off.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import K_B, TWO_PI


def _check_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class AtomSpecies:
    """Minimal description of the storage atom.

    mass: kg
    transition_wavelength: m (optical probe transition)
    ground_splitting: Hz (hyperfine spacing between the two ground levels)
    excited_decay_rate: rad/s, amplitude decay rate gamma of the excited level
    """

    mass: float
    transition_wavelength: float
    ground_splitting: float
    excited_decay_rate: float

    def __post_init__(self):
        for name in ("mass", "transition_wavelength", "ground_splitting", "excited_decay_rate"):
            value = getattr(self, name)
            _check_finite(name, value)
            if value <= 0:
                raise ValueError(f"{name} must be strictly positive, got {value!r}")
        if not 100e-9 < self.transition_wavelength < 10e-6:
            raise ValueError(
                "transition_wavelength outside the (100 nm, 10 um) sanity band: "
                f"{self.transition_wavelength!r}"
            )


#: 87Rb on the 780 nm D2 line, ground levels split by 6.83 GHz.  The amplitude
#: decay rate is the package default described in the module docstring.
RB87 = AtomSpecies(
    mass=1.4431606e-25,
    transition_wavelength=780.241e-9,
    ground_splitting=6.834682611e9,
    excited_decay_rate=TWO_PI * 3.03e6,
)


@dataclass(frozen=True)
class EnsembleParams:
    """Prepared atomic cloud seen by the probe.

    optical_depth: dimensionless d (intensity transmission e^(-d) on resonance)
    temperature: K
    medium_length: m, nominal cloud size; only sets dimensional scaling of the
        solver grid and cancels in all efficiencies (default 2 mm)
    magnetic_lifetime: s, 1/e time of the memory EFFICIENCY under ambient-field
        dephasing; math.inf disables the channel
    overlap_efficiency: scalar probe/control spatial overlap factor in [0, 1]
    """

    optical_depth: float
    temperature: float = 50e-6
    medium_length: float = 2e-3
    magnetic_lifetime: float = math.inf
    overlap_efficiency: float = 1.0

    def __post_init__(self):
        for name in ("optical_depth", "temperature", "medium_length", "overlap_efficiency"):
            _check_finite(name, getattr(self, name))
        if math.isnan(self.magnetic_lifetime):
            raise ValueError("magnetic_lifetime must not be NaN")
        if self.optical_depth < 0:
            raise ValueError(f"optical_depth must be >= 0, got {self.optical_depth!r}")
        if self.temperature < 0:
            raise ValueError(f"temperature must be >= 0, got {self.temperature!r}")
        if self.medium_length <= 0:
            raise ValueError(f"medium_length must be > 0, got {self.medium_length!r}")
        if self.magnetic_lifetime <= 0:
            raise ValueError(f"magnetic_lifetime must be > 0, got {self.magnetic_lifetime!r}")
        if not 0.0 <= self.overlap_efficiency <= 1.0:
            raise ValueError(
                f"overlap_efficiency must lie in [0, 1], got {self.overlap_efficiency!r}"
            )


def thermal_speed(species: AtomSpecies, temperature: float) -> float:
    """One-dimensional r.m.s. thermal speed sqrt(k_B*T/m) in m/s.

    Returns 0 at T = 0; raises for negative temperature.
    """
    if not math.isfinite(temperature):
        raise ValueError(f"temperature must be finite, got {temperature!r}")
    if temperature < 0:
        raise ValueError(f"temperature must be >= 0, got {temperature!r}")
    return math.sqrt(K_B * temperature / species.mass)
