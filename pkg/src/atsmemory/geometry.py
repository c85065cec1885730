"""Beam geometry: phase matching, spin-wave grating period, control extinction.

Probe and control wavenumbers differ by only ~1.8e-5 (ground splitting over
optical frequency), so the grating period treats them as equal by default;
``exact=True`` keeps the difference for completeness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import C_LIGHT, TWO_PI


@dataclass(frozen=True)
class BeamGeometry:
    """Probe/control beam arrangement around the cloud.

    separation_angle: rad, angle theta between probe and control beams
    wavelength: m
    write_read_copropagating: write and readout control share one direction
    extinction_chain: ordered (label, dB) stages isolating the probe mode
        from control light (angular separation, fiber filtering, ...)
    """

    separation_angle: float
    wavelength: float
    write_read_copropagating: bool = True
    extinction_chain: tuple[tuple[str, float], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not math.isfinite(self.separation_angle) or not math.isfinite(self.wavelength):
            raise ValueError("separation_angle and wavelength must be finite")
        if not 0.0 <= self.separation_angle <= math.pi:
            raise ValueError(f"separation_angle must lie in [0, pi], got {self.separation_angle!r}")
        if self.wavelength <= 0:
            raise ValueError(f"wavelength must be > 0, got {self.wavelength!r}")
        chain = tuple((str(label), float(db)) for label, db in self.extinction_chain)
        for label, db in chain:
            if not math.isfinite(db) or db < 0:
                raise ValueError(f"extinction stage {label!r} must have dB >= 0, got {db!r}")
        object.__setattr__(self, "extinction_chain", chain)

    @property
    def total_extinction_db(self) -> float:
        return sum(db for _, db in self.extinction_chain)


@dataclass(frozen=True)
class PhaseMatching:
    delta_k_magnitude: float  # rad/m, |k_i - k_W|
    grating_period: float  # m
    output_direction_equals_input: bool

    def __post_init__(self):
        if self.delta_k_magnitude > 0:
            product = self.grating_period * self.delta_k_magnitude
            if not math.isclose(product, TWO_PI, rel_tol=1e-9):
                raise ValueError("grating_period * delta_k_magnitude must equal 2*pi")


def delta_k_magnitude(geometry: BeamGeometry, ground_splitting: float = 0.0, exact: bool = False) -> float:
    """|k_i - k_W| in rad/m; 0 for copropagating beams."""
    k_i = TWO_PI / geometry.wavelength
    if exact and ground_splitting:
        # control is detuned by the ground splitting from the probe
        k_w = k_i + TWO_PI * ground_splitting / C_LIGHT
    else:
        k_w = k_i
    theta = geometry.separation_angle
    return math.sqrt(k_i**2 + k_w**2 - 2.0 * k_i * k_w * math.cos(theta))


def grating_period(geometry: BeamGeometry, ground_splitting: float = 0.0, exact: bool = False) -> float:
    """Spin-wave grating period kappa = 2*pi/|delta k| in m.

    theta = 0 leaves no grating: returns math.inf rather than raising.
    """
    dk = delta_k_magnitude(geometry, ground_splitting=ground_splitting, exact=exact)
    if dk == 0.0:
        return math.inf
    return TWO_PI / dk


def phase_matching(geometry: BeamGeometry) -> PhaseMatching:
    dk = delta_k_magnitude(geometry)
    return PhaseMatching(
        delta_k_magnitude=dk,
        grating_period=math.inf if dk == 0.0 else TWO_PI / dk,
        output_direction_equals_input=geometry.write_read_copropagating,
    )


def output_wavevector(k_i, k_w, k_r):
    """Retrieval direction from momentum conservation: k_o = k_i - k_W + k_R."""
    k_i = np.asarray(k_i, dtype=float)
    k_w = np.asarray(k_w, dtype=float)
    k_r = np.asarray(k_r, dtype=float)
    if k_i.shape != (3,) or k_w.shape != (3,) or k_r.shape != (3,):
        raise ValueError("wavevectors must be 3-vectors")
    return k_i - k_w + k_r


def leakage_photons(control_photons: float, geometry: BeamGeometry) -> float:
    """Control photons surviving the extinction chain into the probe mode."""
    if control_photons < 0:
        raise ValueError(f"control_photons must be >= 0, got {control_photons!r}")
    return control_photons * 10.0 ** (-geometry.total_extinction_db / 10.0)
