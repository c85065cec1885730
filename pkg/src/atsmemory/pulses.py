"""Time-domain pulse envelopes for probe and control fields.

Two envelope roles with different unit conventions:

* control: ``peak_amplitude`` is a peak Rabi frequency in rad/s and ``fwhm``
  is the full width at half maximum of the Rabi-frequency (amplitude) profile.
  Pulse area is the time integral of the Rabi frequency.
* probe: ``peak_amplitude`` is in arbitrary field units (the storage solver
  renormalizes the probe to unit energy, so only the shape matters) and
  ``fwhm`` refers by default to the |field|^2 (intensity) profile, the width
  an intensity detector reports.  ``fwhm_convention='amplitude'`` switches to
  a width on the field amplitude itself.

Envelopes evaluate to exactly zero beyond +/-5 fwhm from center; for a
Gaussian the area beyond that window is below 1e-17 of the total, so no
renormalization is applied.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import TWO_PI

#: integral of a unit-peak Gaussian with unit FWHM: sqrt(pi / (4 ln 2))
GAUSSIAN_AREA_FACTOR = math.sqrt(math.pi / (4.0 * math.log(2.0)))

_SHAPES = ("gaussian", "square")
_ROLES = ("control", "probe")
_CONVENTIONS = ("intensity", "amplitude")


class RoleError(TypeError):
    """An operation was applied to an envelope with the wrong role tag."""


@dataclass(frozen=True)
class PulseEnvelope:
    shape: str
    fwhm: float
    center_time: float
    peak_amplitude: float
    role: str = "control"
    fwhm_convention: str = "intensity"  # probe only; controls are always amplitude widths

    def __post_init__(self):
        if self.shape not in _SHAPES:
            raise ValueError(f"shape must be one of {_SHAPES}, got {self.shape!r}")
        if self.role not in _ROLES:
            raise ValueError(f"role must be one of {_ROLES}, got {self.role!r}")
        if self.fwhm_convention not in _CONVENTIONS:
            raise ValueError(f"fwhm_convention must be one of {_CONVENTIONS}")
        for name in ("fwhm", "center_time", "peak_amplitude"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.fwhm <= 0:
            raise ValueError(f"fwhm must be > 0, got {self.fwhm!r}")
        if self.peak_amplitude < 0:
            raise ValueError(f"peak_amplitude must be >= 0, got {self.peak_amplitude!r}")

    @property
    def amplitude_fwhm(self) -> float:
        """FWHM of the amplitude profile implied by the declared convention."""
        if self.role == "probe" and self.fwhm_convention == "intensity" and self.shape == "gaussian":
            # squaring a Gaussian narrows it by sqrt(2)
            return self.fwhm * math.sqrt(2.0)
        return self.fwhm

    def support(self) -> tuple[float, float]:
        """Interval outside which the envelope is identically zero."""
        half = 5.0 * self.fwhm
        return (self.center_time - half, self.center_time + half)

    def value(self, t):
        """Amplitude profile at time(s) t (Rabi frequency for control envelopes)."""
        t = np.asarray(t, dtype=float)
        dt = t - self.center_time
        if self.shape == "gaussian":
            w = self.amplitude_fwhm
            out = self.peak_amplitude * np.exp(-4.0 * math.log(2.0) * (dt / w) ** 2)
        else:
            out = np.where(np.abs(dt) <= 0.5 * self.fwhm, self.peak_amplitude, 0.0)
        out = np.where(np.abs(dt) <= 5.0 * self.fwhm, out, 0.0)
        if out.ndim == 0:
            return float(out)
        return out


def pulse_area(env: PulseEnvelope) -> float:
    """Time integral of the Rabi frequency, in rad.

    Only meaningful for control envelopes; probe envelopes are characterized
    by photon number, not Rabi frequency, and raise RoleError.
    """
    if env.role != "control":
        raise RoleError("pulse_area is defined for control envelopes only")
    if env.shape == "gaussian":
        return env.peak_amplitude * env.fwhm * GAUSSIAN_AREA_FACTOR
    return env.peak_amplitude * env.fwhm


def calibrate_peak_for_area(shape: str, fwhm: float, target: float) -> float:
    """Peak Rabi frequency (rad/s) giving the requested pulse area.

    Inverts pulse_area analytically; round-trips to better than 1e-9 relative.
    """
    if shape not in _SHAPES:
        raise ValueError(f"shape must be one of {_SHAPES}, got {shape!r}")
    if fwhm <= 0:
        raise ValueError(f"fwhm must be > 0, got {fwhm!r}")
    if target <= 0:
        raise ValueError(f"target area must be > 0, got {target!r}")
    if shape == "gaussian":
        return target / (fwhm * GAUSSIAN_AREA_FACTOR)
    return target / fwhm


def photons_per_pulse(peak_power: float, fwhm: float, wavelength: float, shape: str = "gaussian") -> float:
    """Mean photon number of a classical pulse: pulse energy over h*c/lambda.

    ``fwhm`` is the width of the optical-power profile, so a Gaussian pulse
    carries energy peak_power * fwhm * sqrt(pi/(4 ln 2)).
    """
    from .constants import C_LIGHT, H_PLANCK

    if shape not in _SHAPES:
        raise ValueError(f"shape must be one of {_SHAPES}, got {shape!r}")
    for name, v in (("peak_power", peak_power), ("fwhm", fwhm), ("wavelength", wavelength)):
        if v < 0 or not math.isfinite(v):
            raise ValueError(f"{name} must be finite and >= 0, got {v!r}")
    if fwhm == 0 or wavelength == 0:
        raise ValueError("fwhm and wavelength must be strictly positive")
    if shape == "gaussian":
        energy = peak_power * fwhm * GAUSSIAN_AREA_FACTOR
    else:
        energy = peak_power * fwhm
    return energy / (H_PLANCK * C_LIGHT / wavelength)


@dataclass(frozen=True)
class ReadoutPulse:
    envelope: PulseEnvelope
    target_area: float


@dataclass(frozen=True)
class ControlSchedule:
    """Write pulse plus one or more readout pulses.

    Readout centers must be strictly increasing and later than the write
    center; every target area lies in (0, 2*pi], and the final readout is a
    full 2*pi pulse (it empties the remaining spin coherence).
    """

    write: PulseEnvelope
    readouts: tuple[ReadoutPulse, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.write.role != "control":
            raise ValueError("write pulse must be a control envelope")
        if not self.readouts:
            raise ValueError("schedule needs at least one readout pulse")
        object.__setattr__(self, "readouts", tuple(self.readouts))
        prev = self.write.center_time
        for k, ro in enumerate(self.readouts):
            if ro.envelope.role != "control":
                raise ValueError(f"readout {k} must be a control envelope")
            if ro.envelope.center_time <= prev:
                raise ValueError("readout center times must be strictly increasing and after the write")
            prev = ro.envelope.center_time
            if not 0.0 < ro.target_area <= TWO_PI * (1.0 + 1e-9):
                raise ValueError(f"readout {k} target_area {ro.target_area!r} outside (0, 2*pi]")
        final = self.readouts[-1].target_area
        if abs(final - TWO_PI) > 1e-6 * TWO_PI:
            raise ValueError(f"final readout target_area must be 2*pi, got {final!r}")


def make_schedule(
    write_center: float,
    readout_centers,
    readout_areas,
    fwhm: float,
    shape: str = "gaussian",
    write_area: float = TWO_PI,
) -> ControlSchedule:
    """Build a ControlSchedule with peaks calibrated to the requested areas."""
    centers = list(readout_centers)
    areas = list(readout_areas)
    if len(centers) != len(areas):
        raise ValueError("readout_centers and readout_areas must have equal length")
    write = PulseEnvelope(
        shape=shape,
        fwhm=fwhm,
        center_time=write_center,
        peak_amplitude=calibrate_peak_for_area(shape, fwhm, write_area),
        role="control",
    )
    readouts = []
    for c, a in zip(centers, areas):
        env = PulseEnvelope(
            shape=shape,
            fwhm=fwhm,
            center_time=c,
            peak_amplitude=calibrate_peak_for_area(shape, fwhm, a),
            role="control",
        )
        readouts.append(ReadoutPulse(envelope=env, target_area=a))
    return ControlSchedule(write=write, readouts=tuple(readouts))
