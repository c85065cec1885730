"""Spin-wave retention during storage and lifetime extraction.

Two independent channels multiply:

* motional: ballistic thermal motion scrambles the spin-wave grating.  For a
  1-D Maxwell-Boltzmann velocity spread u the AMPLITUDE retention is
  exp(-(|dk| u t)^2 / 2), so the EFFICIENCY retains exp(-(|dk| u t)^2) and
  its 1/e time is 1/(|dk| u).
* magnetic: ambient-field dephasing, amplitude exp(-t / (2 tau_B)) so the
  efficiency decays as exp(-t / tau_B).

All lifetimes quoted by this package are efficiency (amplitude squared)
lifetimes; that convention is what makes the motional 1/e time at a 0.65 um
grating and 50 uK come out at 1.5 us.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import BeamGeometry, delta_k_magnitude
from .media import AtomSpecies, EnsembleParams, thermal_speed


@dataclass(frozen=True)
class DecoherenceModel:
    """Scalar spin-wave decoherence: grating washout plus magnetic dephasing.

    delta_k_magnitude: rad/m; 0 disables the motional channel
    thermal_speed: m/s
    magnetic_lifetime: s (1/e time of the efficiency); math.inf disables
    """

    delta_k_magnitude: float = 0.0
    thermal_speed: float = 0.0
    magnetic_lifetime: float = math.inf

    def __post_init__(self):
        if self.delta_k_magnitude < 0 or self.thermal_speed < 0:
            raise ValueError("delta_k_magnitude and thermal_speed must be >= 0")
        if math.isnan(self.magnetic_lifetime) or self.magnetic_lifetime <= 0:
            raise ValueError(f"magnetic_lifetime must be > 0, got {self.magnetic_lifetime!r}")

    @classmethod
    def from_setup(
        cls, ensemble: EnsembleParams, species: AtomSpecies, geometry: BeamGeometry
    ) -> "DecoherenceModel":
        return cls(
            delta_k_magnitude=delta_k_magnitude(geometry),
            thermal_speed=thermal_speed(species, ensemble.temperature),
            magnetic_lifetime=ensemble.magnetic_lifetime,
        )


NONE = DecoherenceModel()  # both channels disabled


def motional_retention(model: DecoherenceModel, t: float) -> float:
    """Amplitude retention factor from grating washout at elapsed time t."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t!r}")
    x = model.delta_k_magnitude * model.thermal_speed * t
    return math.exp(-0.5 * x * x)


def magnetic_retention(model: DecoherenceModel, t: float) -> float:
    """Amplitude retention factor from ambient-field dephasing."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t!r}")
    if math.isinf(model.magnetic_lifetime):
        return 1.0
    return math.exp(-t / (2.0 * model.magnetic_lifetime))


def total_retention(model: DecoherenceModel, t: float) -> float:
    """Product of the independent channel amplitude factors."""
    return motional_retention(model, t) * magnetic_retention(model, t)


def motional_efficiency_1e_time(model: DecoherenceModel) -> float:
    """1/e time of the memory efficiency under the motional channel alone."""
    rate = model.delta_k_magnitude * model.thermal_speed
    if rate == 0.0:
        return math.inf
    return 1.0 / rate


@dataclass(frozen=True)
class LifetimeFit:
    eta0: float
    tau: float
    eta0_stderr: float
    tau_stderr: float


def fit_exponential_lifetime(times, efficiencies, uncertainties=None) -> LifetimeFit:
    """Least-squares fit of eta0 * exp(-t / tau) on log-transformed data.

    With per-point uncertainties, points are weighted by inverse variance in
    log space (sigma_log = sigma / eta) and the parameter errors use those
    known variances; without, errors scale the residual variance.
    """
    t = np.asarray(times, dtype=float)
    eta = np.asarray(efficiencies, dtype=float)
    if t.shape != eta.shape or t.ndim != 1:
        raise ValueError("times and efficiencies must be matching 1-D sequences")
    if t.size < 3:
        raise ValueError(f"need at least 3 samples, got {t.size}")
    if np.any(eta <= 0):
        raise ValueError("efficiencies must be strictly positive for a log-space fit")
    if np.ptp(t) == 0:
        raise ValueError("all sample times are equal; lifetime is unidentifiable")

    y = np.log(eta)
    if uncertainties is not None:
        sigma = np.asarray(uncertainties, dtype=float)
        if sigma.shape != t.shape or np.any(sigma <= 0):
            raise ValueError("uncertainties must be positive and match the samples")
        w = (eta / sigma) ** 2
    else:
        w = np.ones_like(t)

    # weighted linear fit y = b0 - t / tau
    design = np.column_stack([np.ones_like(t), -t])
    sw = np.sqrt(w)
    coeffs, *_ = np.linalg.lstsq(design * sw[:, None], y * sw, rcond=None)
    b0, slope = coeffs
    if slope <= 0:
        raise ValueError("fitted decay rate is non-positive; data do not decay")
    tau = 1.0 / slope

    cov = np.linalg.inv(design.T @ (design * w[:, None]))
    if uncertainties is None:
        resid = y - design @ coeffs
        dof = max(t.size - 2, 1)
        cov = cov * float(resid @ (w * resid)) / dof
    se_b0 = math.sqrt(max(cov[0, 0], 0.0))
    se_slope = math.sqrt(max(cov[1, 1], 0.0))

    eta0 = math.exp(b0)
    return LifetimeFit(
        eta0=eta0,
        tau=tau,
        eta0_stderr=eta0 * se_b0,
        tau_stderr=se_slope / slope**2,
    )
