"""One-dimensional weak-probe Maxwell-Bloch solver for the storage protocol.

Model
-----
A Lambda medium with ground level g, storage level s, excited level e.  In
normalized position z in [0, 1] and co-moving time (medium transit time is
picoseconds, so field retardation is dropped and the probe field is slaved to
the instantaneous polarization):

    dP/dt = -gamma_p * P + i*a * E + i * (Omega(t)/2) * S
    dS/dt = -gamma_s * S + i * (conj(Omega(t))/2) * P
    dE/dz = i*a * P,   E(0, t) = E_in(t)

with a = sqrt(d * gamma / 2).  This normalization is pinned by requiring that
a long weak resonant probe with the control off transmits e^(-d) in
intensity, which makes the configured optical depth operationally exact.
|E|^2 is a photon flux and the z-integrals of |P|^2 and |S|^2 count atomic
excitations, giving the exact bookkeeping identity

    flux in = flux out + 2*gamma_p*int|P|^2 + 2*gamma_s*int|S|^2
              + d/dt (atomic norms).

Scheme
------
Classic 4th-order Runge-Kutta in time for (P, S) with the slaved field
recomputed from the cumulative trapezoid of P at every stage; the flux and
decay-loss integrals ride along as auxiliary states of the same integrator so
the energy balance closes to integrator accuracy.  Long control-free holds
are fast-forwarded analytically once the polarization has rung down
(P picks up exp(-gamma_p*dt), S the scalar decoherence retention), so storage
time does not dominate runtime.

Spontaneous decay is treated as pure loss; there is no reservoir re-emission
and no four-wave mixing channel.  Only forward recall is modeled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import decoherence as deco
from .media import AtomSpecies, EnsembleParams
from .pulses import ControlSchedule, PulseEnvelope, pulse_area


class SolverError(RuntimeError):
    pass


class GridResolutionError(ValueError):
    """The requested time step does not resolve the fastest configured rate."""


class NumericalFailure(SolverError):
    """Non-finite state encountered during integration."""

    def __init__(self, message: str, t: float, step: int):
        super().__init__(f"{message} (t={t*1e9:.2f} ns, step {step})")
        self.t = t
        self.step = step


@dataclass(frozen=True)
class SolverGrid:
    """Discretization controls.

    n_z: spatial points over the normalized medium (>= 32)
    dt: fixed time step in s; None picks a safe default from the configured
        rates (probe width, peak Rabi frequency, gamma, collective rate d*gamma)
    balance_tolerance: energy-bookkeeping residual above which the result
        carries a warning
    store_fields: keep (z, t) snapshots for the text dump
    store_every: snapshot decimation in steps
    """

    n_z: int = 96
    dt: float | None = None
    balance_tolerance: float = 1e-3
    store_fields: bool = False
    store_every: int = 8

    def __post_init__(self):
        if self.n_z < 32:
            raise ValueError(f"n_z must be >= 32, got {self.n_z}")
        if self.dt is not None and self.dt <= 0:
            raise ValueError(f"dt must be > 0, got {self.dt!r}")
        if self.store_every < 1:
            raise ValueError("store_every must be >= 1")


@dataclass
class FieldFrame:
    t: float
    E: np.ndarray
    P_sq: np.ndarray
    S_sq: np.ndarray


@dataclass
class SimulationResult:
    """Outcome of one write-hold-read run, all fractions relative to the input energy."""

    t_out: np.ndarray
    E_out: np.ndarray
    input_energy: float
    transmitted_fraction: float
    efficiency_per_readout: list[float]
    residual_spin_norm: float
    residual_optical_norm: float
    spontaneous_loss_fraction: float
    decoherence_loss_fraction: float
    post_write_spin_norm: float
    energy_balance_error: float
    write_window: tuple[float, float]
    readout_windows: list[tuple[float, float]]
    dt: float
    n_z: int
    warnings: list[str] = field(default_factory=list)
    frames: list[FieldFrame] = field(default_factory=list)
    z: np.ndarray | None = None

    @property
    def total_efficiency(self) -> float:
        return float(sum(self.efficiency_per_readout))

    def readout_peak_times(self) -> list[float]:
        """Arrival time of the recalled intensity peak inside each readout window."""
        intensity = np.abs(self.E_out) ** 2
        peaks = []
        for t0, t1 in self.readout_windows:
            mask = (self.t_out >= t0) & (self.t_out < t1)
            if not np.any(mask):
                peaks.append(math.nan)
                continue
            idx = np.argmax(intensity[mask])
            peaks.append(float(self.t_out[mask][idx]))
        return peaks


def _cumtrapz(values: np.ndarray, dz: float) -> np.ndarray:
    out = np.empty_like(values)
    out[0] = 0.0
    np.cumsum(0.5 * dz * (values[1:] + values[:-1]), out=out[1:])
    return out


def default_dt(probe: PulseEnvelope, schedule: ControlSchedule, gamma: float, d: float,
               control_scale: float = 1.0) -> float:
    peak = max([schedule.write.peak_amplitude]
               + [ro.envelope.peak_amplitude for ro in schedule.readouts]) * control_scale
    candidates = [probe.fwhm / 40.0, min(schedule.write.fwhm, probe.fwhm) / 30.0]
    if peak > 0:
        candidates.append(2.0 * math.pi / (20.0 * peak))
    if gamma > 0:
        candidates.append(1.0 / (20.0 * gamma))
    if d * gamma > 0:
        candidates.append(1.0 / (d * gamma))
    return min(candidates)


def _check_dt(dt: float, probe: PulseEnvelope, schedule: ControlSchedule, gamma: float,
              control_scale: float) -> None:
    peak = max([schedule.write.peak_amplitude]
               + [ro.envelope.peak_amplitude for ro in schedule.readouts]) * control_scale
    limits = [probe.fwhm / 20.0]
    if peak > 0:
        limits.append(2.0 * math.pi / (10.0 * peak))
    if gamma > 0:
        limits.append(1.0 / (10.0 * gamma))
    limit = min(limits)
    if dt > limit * (1.0 + 1e-12):
        raise GridResolutionError(
            f"dt={dt:.3e} s does not resolve the fastest rate (needs <= {limit:.3e} s)"
        )


def _merge_spans(spans):
    spans = sorted(spans)
    merged = [list(spans[0])]
    for s0, s1 in spans[1:]:
        if s0 <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], s1)
        else:
            merged.append([s0, s1])
    return [(a, b) for a, b in merged]


class _Integrator:
    """Carries the mutable state of one protocol run."""

    def __init__(self, n_z, dt, a, gamma_p, gamma_s, probe, omega_of_t, retention_of_t,
                 store_fields=False, store_every=8):
        self.n_z = n_z
        self.dz = 1.0 / (n_z - 1)
        self.z = np.linspace(0.0, 1.0, n_z)
        self.dt = dt
        self.a = a
        self.gamma_p = gamma_p
        self.gamma_s = gamma_s
        self.probe = probe
        self.omega_of_t = omega_of_t
        self.retention_of_t = retention_of_t  # cumulative amplitude retention since write
        self.P = np.zeros(n_z, dtype=complex)
        self.S = np.zeros(n_z, dtype=complex)
        self.flux_in = 0.0
        self.flux_out = 0.0
        self.loss_decay = 0.0
        self.loss_decoherence = 0.0
        self.t_out: list[np.ndarray] = []
        self.e_out: list[np.ndarray] = []
        self.cumflux: list[np.ndarray] = []
        self.s_norm_trace: list[np.ndarray] = []
        self.steps = 0
        self.store_fields = store_fields
        self.store_every = store_every
        self.frames: list[FieldFrame] = []

    def p_norm(self) -> float:
        return float(np.trapezoid(np.abs(self.P) ** 2, dx=self.dz))

    def s_norm(self) -> float:
        return float(np.trapezoid(np.abs(self.S) ** 2, dx=self.dz))

    def _slave_field(self, P, e_in):
        return e_in + 1j * self.a * _cumtrapz(P, self.dz)

    def _deriv(self, P, S, e_in, omega):
        E = self._slave_field(P, e_in)
        dP = -self.gamma_p * P + 1j * self.a * E + 0.5j * omega * S
        dS = -self.gamma_s * S + 0.5j * np.conj(omega) * P
        p_sq = float(np.trapezoid(np.abs(P) ** 2, dx=self.dz))
        s_sq = float(np.trapezoid(np.abs(S) ** 2, dx=self.dz))
        aux = (
            abs(E[-1]) ** 2,           # flux out
            abs(e_in) ** 2,            # flux in
            2.0 * self.gamma_p * p_sq + 2.0 * self.gamma_s * s_sq,  # decay loss rate
        )
        return dP, dS, E, aux

    def integrate(self, t0: float, t1: float) -> None:
        if t1 <= t0:
            return
        n_steps = max(1, int(math.ceil((t1 - t0) / self.dt - 1e-9)))
        dt = (t1 - t0) / n_steps
        times = t0 + dt * np.arange(n_steps + 1)
        half = t0 + dt * (np.arange(n_steps) + 0.5)
        e_in_full = np.asarray(self.probe.value(times), dtype=complex)
        e_in_half = np.asarray(self.probe.value(half), dtype=complex)
        om_full = np.asarray(self.omega_of_t(times), dtype=complex)
        om_half = np.asarray(self.omega_of_t(half), dtype=complex)
        ret_full = self.retention_of_t(times)

        t_rec = np.empty(n_steps)
        e_rec = np.empty(n_steps, dtype=complex)
        f_rec = np.empty(n_steps)
        s_rec = np.empty(n_steps)

        P, S = self.P, self.S
        for n in range(n_steps):
            k1P, k1S, E1, a1 = self._deriv(P, S, e_in_full[n], om_full[n])
            k2P, k2S, _, a2 = self._deriv(P + 0.5 * dt * k1P, S + 0.5 * dt * k1S,
                                          e_in_half[n], om_half[n])
            k3P, k3S, _, a3 = self._deriv(P + 0.5 * dt * k2P, S + 0.5 * dt * k2S,
                                          e_in_half[n], om_half[n])
            k4P, k4S, _, a4 = self._deriv(P + dt * k3P, S + dt * k3S,
                                          e_in_full[n + 1], om_full[n + 1])
            P = P + (dt / 6.0) * (k1P + 2.0 * (k2P + k3P) + k4P)
            S = S + (dt / 6.0) * (k1S + 2.0 * (k2S + k3S) + k4S)
            self.flux_out += (dt / 6.0) * (a1[0] + 2.0 * (a2[0] + a3[0]) + a4[0])
            self.flux_in += (dt / 6.0) * (a1[1] + 2.0 * (a2[1] + a3[1]) + a4[1])
            self.loss_decay += (dt / 6.0) * (a1[2] + 2.0 * (a2[2] + a3[2]) + a4[2])

            # slow scalar decoherence applied multiplicatively after the step
            q = ret_full[n + 1] / ret_full[n]
            if q != 1.0:
                s_sq = float(np.trapezoid(np.abs(S) ** 2, dx=self.dz))
                S = S * q
                self.loss_decoherence += s_sq * (1.0 - q * q)

            self.steps += 1
            t_rec[n] = times[n + 1]
            E_end = self._slave_field(P, e_in_full[n + 1])
            e_rec[n] = E_end[-1]
            f_rec[n] = self.flux_out
            s_rec[n] = float(np.trapezoid(np.abs(S) ** 2, dx=self.dz))
            if self.store_fields and self.steps % self.store_every == 0:
                self.frames.append(FieldFrame(t=times[n + 1], E=E_end.copy(),
                                              P_sq=np.abs(P) ** 2, S_sq=np.abs(S) ** 2))
            if n % 64 == 0 and not (np.isfinite(P[-1]) and np.isfinite(S[-1])):
                raise NumericalFailure("non-finite state", times[n + 1], self.steps)

        if not (np.all(np.isfinite(P)) and np.all(np.isfinite(S))):
            raise NumericalFailure("non-finite state at segment end", t1, self.steps)
        self.P, self.S = P, S
        self.t_out.append(t_rec)
        self.e_out.append(e_rec)
        self.cumflux.append(f_rec)
        self.s_norm_trace.append(s_rec)

    def jump(self, t0: float, t1: float) -> None:
        """Analytic fast-forward across a control-free, field-free hold."""
        span = t1 - t0
        if span <= 0:
            return
        p_sq = self.p_norm()
        s_sq = self.s_norm()
        decay_p = math.exp(-self.gamma_p * span)
        decay_s = math.exp(-self.gamma_s * span)
        q = self.retention_of_t(np.array([t1]))[0] / self.retention_of_t(np.array([t0]))[0]
        self.P *= decay_p
        self.S *= decay_s * q
        self.loss_decay += p_sq * (1.0 - decay_p**2) + s_sq * (1.0 - decay_s**2)
        self.loss_decoherence += s_sq * decay_s**2 * (1.0 - q * q)


def simulate_protocol(
    ensemble: EnsembleParams,
    species: AtomSpecies,
    probe: PulseEnvelope,
    schedule: ControlSchedule,
    grid: SolverGrid | None = None,
    decoherence: deco.DecoherenceModel | None = None,
    *,
    control_scale: float = 1.0,
    polarization_decay_rate: float | None = None,
    spin_decay_rate: float = 0.0,
) -> SimulationResult:
    """Run the full write-hold-read protocol and return the efficiency split.

    ``control_scale`` multiplies the whole control waveform (used by the
    amplitude optimizer).  ``polarization_decay_rate`` overrides the decay
    term of P without touching the coupling normalization sqrt(d*gamma/2);
    passing 0 together with spin_decay_rate=0 gives the closed lossless
    system used by the conservation checks.
    """
    if grid is None:
        grid = SolverGrid()
    if probe.role != "probe":
        raise ValueError("probe envelope must carry role='probe'")
    if probe.peak_amplitude == 0:
        raise ValueError("probe envelope carries no energy")
    if control_scale < 0:
        raise ValueError("control_scale must be >= 0")

    gamma = species.excited_decay_rate
    gamma_p = gamma if polarization_decay_rate is None else float(polarization_decay_rate)
    if gamma_p < 0 or spin_decay_rate < 0:
        raise ValueError("decay rates must be >= 0")
    d = ensemble.optical_depth
    a = math.sqrt(d * gamma / 2.0)

    dt = grid.dt if grid.dt is not None else default_dt(probe, schedule, gamma_p, d, control_scale)
    _check_dt(dt, probe, schedule, gamma_p, control_scale)

    envelopes = [schedule.write] + [ro.envelope for ro in schedule.readouts]

    def omega_of_t(t):
        total = np.zeros_like(np.asarray(t, dtype=float))
        for env in envelopes:
            total = total + env.value(t)
        return control_scale * total

    model = decoherence if decoherence is not None else deco.NONE
    t_write = schedule.write.center_time

    def retention_of_t(t):
        t = np.asarray(t, dtype=float)
        elapsed = np.maximum(t - t_write, 0.0)
        x = model.delta_k_magnitude * model.thermal_speed * elapsed
        out = np.exp(-0.5 * x * x)
        if not math.isinf(model.magnetic_lifetime):
            out = out * np.exp(-elapsed / (2.0 * model.magnetic_lifetime))
        return out

    # integration spans: +/-3.2 amplitude widths around every pulse (envelope
    # tails beyond that carry < 1e-11 of the energy)
    margin_probe = 3.2 * probe.amplitude_fwhm
    spans = [(probe.center_time - margin_probe, probe.center_time + margin_probe)]
    for env in envelopes:
        m = 3.2 * env.fwhm
        spans.append((env.center_time - m, env.center_time + m))
    spans = _merge_spans(spans)

    integ = _Integrator(grid.n_z, dt, a, gamma_p, spin_decay_rate, probe, omega_of_t,
                        retention_of_t, store_fields=grid.store_fields,
                        store_every=grid.store_every)

    warnings: list[str] = []
    settle_chunk = schedule.write.fwhm
    jump_threshold = 1e-7
    t = spans[0][0]
    for i, (s0, s1) in enumerate(spans):
        if t < s0:
            # ring-down before the analytic jump: keep integrating in chunks
            # until the polarization has died or the gap is consumed
            ref = max(integ.flux_in, 1e-300)
            chunks = 0
            while integ.p_norm() > jump_threshold * ref and t < s0 and chunks < 12:
                t_next = min(t + settle_chunk, s0)
                integ.integrate(t, t_next)
                t = t_next
                chunks += 1
            if t < s0:
                if integ.p_norm() > jump_threshold * ref and integ.gamma_p == 0.0:
                    warnings.append(
                        "hold fast-forward froze a non-decaying polarization; "
                        "set a finite polarization decay or shorten the storage time"
                    )
                integ.jump(t, s0)
                t = s0
        integ.integrate(t, s1)
        t = s1

    t_out = np.concatenate(integ.t_out)
    e_out = np.concatenate(integ.e_out)
    cumflux = np.concatenate(integ.cumflux)
    s_trace = np.concatenate(integ.s_norm_trace)

    flux_in = integ.flux_in
    if flux_in <= 0:
        raise SolverError("no probe energy entered the simulation window")

    # windows split at midpoints between consecutive pulse centers
    centers = [t_write] + [ro.envelope.center_time for ro in schedule.readouts]
    boundaries = [0.5 * (c0 + c1) for c0, c1 in zip(centers[:-1], centers[1:])]
    edges = [t_out[0]] + boundaries + [t_out[-1]]
    flux_at = np.interp(edges, t_out, cumflux, left=0.0, right=cumflux[-1])
    window_flux = np.diff(flux_at)

    transmitted = float(window_flux[0] / flux_in)
    per_readout = [float(f / flux_in) for f in window_flux[1:]]

    # spin norm just before the first readout window opens
    idx = np.searchsorted(t_out, boundaries[0])
    idx = min(max(idx, 0), len(s_trace) - 1)
    post_write_spin = float(s_trace[idx] / flux_in)

    # spatial overlap of probe and control applied as a scalar on the recall
    if ensemble.overlap_efficiency < 1.0:
        scale = ensemble.overlap_efficiency
        per_readout = [eta * scale for eta in per_readout]
        warnings.append("overlap_efficiency applied as a scalar recall factor")

    residual_spin = integ.s_norm() / flux_in
    residual_optical = integ.p_norm() / flux_in
    loss = integ.loss_decay / flux_in
    deco_loss = integ.loss_decoherence / flux_in

    balance = (transmitted + sum(window_flux[1:]) / flux_in + residual_spin
               + residual_optical + loss + deco_loss)
    balance_error = abs(balance - 1.0)
    if balance_error > grid.balance_tolerance:
        warnings.append(f"energy bookkeeping residual {balance_error:.2e} exceeds tolerance")

    return SimulationResult(
        t_out=t_out,
        E_out=e_out,
        input_energy=flux_in,
        transmitted_fraction=transmitted,
        efficiency_per_readout=per_readout,
        residual_spin_norm=float(residual_spin),
        residual_optical_norm=float(residual_optical),
        spontaneous_loss_fraction=float(loss),
        decoherence_loss_fraction=float(deco_loss),
        post_write_spin_norm=post_write_spin,
        energy_balance_error=float(balance_error),
        write_window=(float(edges[0]), float(edges[1])),
        readout_windows=[(float(a_), float(b_)) for a_, b_ in zip(edges[1:-1], edges[2:])],
        dt=dt,
        n_z=grid.n_z,
        warnings=warnings,
        frames=integ.frames,
        z=integ.z if grid.store_fields else None,
    )


@dataclass(frozen=True)
class ControlOptimum:
    peak_rabi: float
    efficiency: float
    pulse_area: float
    multimodal: bool
    n_evaluations: int


def optimize_control_amplitude(
    ensemble: EnsembleParams,
    species: AtomSpecies,
    probe: PulseEnvelope,
    schedule: ControlSchedule,
    peak_range: tuple[float, float],
    grid: SolverGrid | None = None,
    decoherence: deco.DecoherenceModel | None = None,
    rel_tol: float = 1e-3,
    n_coarse: int = 9,
) -> ControlOptimum:
    """Maximize total recall efficiency over the control peak Rabi frequency.

    A coarse scan brackets the optimum; golden-section search refines it to
    ``rel_tol`` relative amplitude resolution.  If the coarse scan is not
    unimodal the best sample is returned with ``multimodal=True``.
    """
    lo, hi = peak_range
    if lo <= 0 or hi < lo:
        raise ValueError("peak_range must satisfy 0 < lo <= hi")
    base_peak = schedule.write.peak_amplitude
    evaluations = 0

    def efficiency(peak: float) -> float:
        nonlocal evaluations
        evaluations += 1
        res = simulate_protocol(ensemble, species, probe, schedule, grid, decoherence,
                                control_scale=peak / base_peak)
        return res.total_efficiency

    def result(peak: float, eff: float, multimodal: bool) -> ControlOptimum:
        area = pulse_area(schedule.write) * peak / base_peak
        return ControlOptimum(peak_rabi=peak, efficiency=eff, pulse_area=area,
                              multimodal=multimodal, n_evaluations=evaluations)

    if hi == lo:
        return result(lo, efficiency(lo), False)

    peaks = np.linspace(lo, hi, n_coarse)
    values = [efficiency(p) for p in peaks]
    maxima = [i for i in range(len(peaks))
              if (i == 0 or values[i] >= values[i - 1])
              and (i == len(peaks) - 1 or values[i] > values[i + 1])]
    interior = [i for i in maxima if 0 < i < len(peaks) - 1]
    best = int(np.argmax(values))
    if len(interior) > 1:
        return result(float(peaks[best]), values[best], True)

    a_ = peaks[max(best - 1, 0)]
    b_ = peaks[min(best + 1, len(peaks) - 1)]
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = b_ - invphi * (b_ - a_)
    x2 = a_ + invphi * (b_ - a_)
    f1, f2 = efficiency(x1), efficiency(x2)
    while (b_ - a_) > rel_tol * b_:
        if f1 < f2:
            a_, x1, f1 = x1, x2, f2
            x2 = a_ + invphi * (b_ - a_)
            f2 = efficiency(x2)
        else:
            b_, x2, f2 = x2, x1, f1
            x1 = b_ - invphi * (b_ - a_)
            f1 = efficiency(x1)
    if f1 >= f2:
        return result(float(x1), float(f1), False)
    return result(float(x2), float(f2), False)


def partial_readout_fractions(
    ensemble: EnsembleParams,
    species: AtomSpecies,
    probe: PulseEnvelope,
    schedule: ControlSchedule,
    grid: SolverGrid | None = None,
    decoherence: deco.DecoherenceModel | None = None,
) -> tuple[list[float], SimulationResult]:
    """Recall fractions of a multi-readout schedule (temporal beam splitting)."""
    res = simulate_protocol(ensemble, species, probe, schedule, grid, decoherence)
    return res.efficiency_per_readout, res


def tune_two_way_split(
    ensemble: EnsembleParams,
    species: AtomSpecies,
    probe: PulseEnvelope,
    readout_times: tuple[float, float],
    fwhm: float,
    write_center: float = 0.0,
    target: float = 0.5,
    tol: float = 5e-3,
    grid: SolverGrid | None = None,
    max_iter: int = 40,
) -> tuple[float, float, list[float]]:
    """Bisect the first readout area so the two recalled bins share energy.

    Returns (first_area, achieved_ratio, fractions) with
    ratio = fraction_1 / (fraction_1 + fraction_2).
    """
    from .constants import TWO_PI
    from .pulses import make_schedule

    def ratio_for(area1: float):
        sched = make_schedule(write_center, list(readout_times), [area1, TWO_PI], fwhm)
        fr, _ = partial_readout_fractions(ensemble, species, probe, sched, grid)
        total = fr[0] + fr[1]
        if total <= 0:
            raise SolverError("no energy recalled; cannot tune the splitting ratio")
        return fr[0] / total, fr

    lo, hi = 0.15 * math.pi, 1.9 * math.pi
    r_lo, _ = ratio_for(lo)
    r_hi, _ = ratio_for(hi)
    if not (r_lo < target < r_hi):
        raise SolverError(
            f"target ratio {target} not bracketed by areas ({lo:.3f}, {hi:.3f}) "
            f"giving ratios ({r_lo:.3f}, {r_hi:.3f})"
        )
    area = 0.5 * (lo + hi)
    ratio, fractions = ratio_for(area)
    for _ in range(max_iter):
        if abs(ratio - target) <= tol:
            break
        if ratio < target:
            lo = area
        else:
            hi = area
        area = 0.5 * (lo + hi)
        ratio, fractions = ratio_for(area)
    return area, ratio, fractions


def dump_fields(result: SimulationResult, path) -> None:
    """Write stored (z, t) snapshots as columnar text: z t Re(E) Im(E) |P|^2 |S|^2."""
    if not result.frames or result.z is None:
        raise ValueError("simulation was run without store_fields=True")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("# z t_s re_E im_E P_sq S_sq\n")
        for frame in result.frames:
            for j, z in enumerate(result.z):
                fh.write(
                    f"{z:.6f} {frame.t:.9e} {frame.E[j].real:.9e} {frame.E[j].imag:.9e} "
                    f"{frame.P_sq[j]:.9e} {frame.S_sq[j]:.9e}\n"
                )
