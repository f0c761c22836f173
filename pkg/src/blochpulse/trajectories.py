"""Prescribed Bloch trajectories: parametric families and v-completion.

Each family prescribes the transverse-x and inversion components u(t), w(t)
in closed form together with exact analytic time derivatives. The remaining
component v is never prescribed: it is completed from purity (closed system)
or integrated from a consistency equation (open system). Times in ps,
frequencies in rad/ps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import SingularPrescriptionError, ValidationError
from .odeint import integrate_adaptive
from .rates import Rates, transverse_rate
from .states import BLOCH_NORM_SLACK, validate_grid

__all__ = [
    "Transfer",
    "Oscillatory",
    "RabiDecay",
    "TrajectorySpec",
    "TrajectorySamples",
    "eval_components",
    "complete_v_closed",
    "solve_consistent_v_open",
    "V_MIN",
]

# transverse floor below which synthesis is declared singular
V_MIN = 1e-6


def _check_finite(obj, names):
    for name in names:
        val = getattr(obj, name)
        if not np.isfinite(val):
            raise ValidationError(f"{type(obj).__name__}.{name} must be finite, got {val}")


@dataclass(frozen=True)
class Transfer:
    """Sigmoid population transfer with a Gaussian coherence bump.

    w(t) = a_i (1 - g) + a_f g with g = 1 / (1 + exp(-switch_rate * t)),
    u(t) = coherence_peak * exp(-(t - peak_time)^2 / (2 peak_width^2)).

    Attributes
    ----------
    inversion_start, inversion_stop : float
        Asymptotic inversion levels a_i, a_f, each in [-1, 1].
    switch_rate : float
        Sigmoid steepness (1/ps), > 0.
    coherence_peak : float
        Peak u amplitude (dimensionless).
    peak_width : float
        Gaussian width (ps), > 0.
    peak_time : float
        Center of the Gaussian (ps).
    """

    inversion_start: float
    inversion_stop: float
    switch_rate: float
    coherence_peak: float
    peak_width: float
    peak_time: float = 0.0

    def __post_init__(self):
        _check_finite(self, ("inversion_start", "inversion_stop", "switch_rate",
                             "coherence_peak", "peak_width", "peak_time"))
        if abs(self.inversion_start) > 1.0 or abs(self.inversion_stop) > 1.0:
            raise ValidationError("inversion levels must lie in [-1, 1]")
        if self.switch_rate <= 0.0:
            raise ValidationError("switch_rate must be > 0")
        if self.peak_width <= 0.0:
            raise ValidationError("peak_width must be > 0")

    def components(self, t: np.ndarray):
        g = 1.0 / (1.0 + np.exp(-self.switch_rate * t))
        w = self.inversion_start * (1.0 - g) + self.inversion_stop * g
        dw = (self.inversion_stop - self.inversion_start) * self.switch_rate * g * (1.0 - g)
        x = (t - self.peak_time) / self.peak_width
        u = self.coherence_peak * np.exp(-0.5 * x**2)
        du = -u * x / self.peak_width
        return u, w, du, dw


@dataclass(frozen=True)
class Oscillatory:
    """Transfer profile with a cosine ripple on the inversion.

    Adds ripple_amplitude * cos(ripple_frequency * t) to the Transfer w(t).
    """

    inversion_start: float
    inversion_stop: float
    switch_rate: float
    coherence_peak: float
    peak_width: float
    ripple_amplitude: float
    ripple_frequency: float
    peak_time: float = 0.0

    def __post_init__(self):
        _check_finite(self, ("inversion_start", "inversion_stop", "switch_rate",
                             "coherence_peak", "peak_width", "ripple_amplitude",
                             "ripple_frequency", "peak_time"))
        if abs(self.inversion_start) > 1.0 or abs(self.inversion_stop) > 1.0:
            raise ValidationError("inversion levels must lie in [-1, 1]")
        if self.switch_rate <= 0.0:
            raise ValidationError("switch_rate must be > 0")
        if self.peak_width <= 0.0:
            raise ValidationError("peak_width must be > 0")
        if self.ripple_frequency < 0.0:
            raise ValidationError("ripple_frequency must be >= 0")

    def components(self, t: np.ndarray):
        base = Transfer(self.inversion_start, self.inversion_stop, self.switch_rate,
                        self.coherence_peak, self.peak_width, self.peak_time)
        u, w, du, dw = base.components(t)
        w = w + self.ripple_amplitude * np.cos(self.ripple_frequency * t)
        dw = dw - self.ripple_amplitude * self.ripple_frequency * np.sin(self.ripple_frequency * t)
        return u, w, du, dw


@dataclass(frozen=True)
class RabiDecay:
    """Chirped, Gaussian-damped inversion oscillation with sinusoidal coherence.

    w(t) = inversion_amplitude * exp(-decay_curvature t^2)
           * cos(inversion_frequency t + chirp_rate t^2),
    u(t) = coherence_amplitude * sin(coherence_frequency t).

    decay_curvature is in 1/ps^2, chirp_rate in rad/ps^2, the frequencies in
    rad/ps.
    """

    inversion_amplitude: float
    decay_curvature: float
    inversion_frequency: float
    chirp_rate: float
    coherence_amplitude: float
    coherence_frequency: float

    def __post_init__(self):
        _check_finite(self, ("inversion_amplitude", "decay_curvature", "inversion_frequency",
                             "chirp_rate", "coherence_amplitude", "coherence_frequency"))
        if abs(self.inversion_amplitude) > 1.0 or abs(self.coherence_amplitude) > 1.0:
            raise ValidationError("amplitudes must lie in [-1, 1]")
        if self.decay_curvature < 0.0:
            raise ValidationError("decay_curvature must be >= 0")

    def components(self, t: np.ndarray):
        phase = self.inversion_frequency * t + self.chirp_rate * t**2
        env = self.inversion_amplitude * np.exp(-self.decay_curvature * t**2)
        w = env * np.cos(phase)
        dw = env * (-2.0 * self.decay_curvature * t * np.cos(phase)
                    - (self.inversion_frequency + 2.0 * self.chirp_rate * t) * np.sin(phase))
        u = self.coherence_amplitude * np.sin(self.coherence_frequency * t)
        du = self.coherence_amplitude * self.coherence_frequency * np.cos(self.coherence_frequency * t)
        return u, w, du, dw


TrajectorySpec = Union[Transfer, Oscillatory, RabiDecay]


@dataclass(frozen=True)
class TrajectorySamples:
    """Trajectory components and their derivatives on a time grid."""

    t: np.ndarray
    u: np.ndarray
    w: np.ndarray
    du: np.ndarray
    dw: np.ndarray


def eval_components(spec: TrajectorySpec, grid) -> TrajectorySamples:
    """Evaluate a trajectory family on a grid with exact derivatives.

    Parameters
    ----------
    spec : Transfer | Oscillatory | RabiDecay
        Trajectory family instance.
    grid : array_like
        Strictly increasing sample times in ps.

    Returns
    -------
    TrajectorySamples
    """
    t = validate_grid(grid)
    if not isinstance(spec, (Transfer, Oscillatory, RabiDecay)):
        raise ValidationError(f"unknown trajectory family: {type(spec).__name__}")
    u, w, du, dw = spec.components(t)
    return TrajectorySamples(t=t, u=u, w=w, du=du, dw=dw)


def complete_v_closed(samples: TrajectorySamples, v_min: float = V_MIN) -> np.ndarray:
    """Transverse-y component from purity, v = +sqrt(1 - u^2 - w^2).

    Raises
    ------
    ValidationError
        If the prescription leaves the Bloch sphere (u^2 + w^2 > 1).
    SingularPrescriptionError
        If v drops below ``v_min`` anywhere on the grid.
    """
    s = 1.0 - samples.u**2 - samples.w**2
    bad = s < -BLOCH_NORM_SLACK
    if np.any(bad):
        t_bad = samples.t[np.argmax(bad)]
        raise ValidationError(
            f"prescription leaves the Bloch sphere (u^2 + w^2 > 1) at t = {t_bad:.6g} ps"
        )
    v = np.sqrt(np.clip(s, 0.0, None))
    low = v < v_min
    if np.any(low):
        t_low = samples.t[np.argmax(low)]
        raise SingularPrescriptionError(
            f"transverse component below {v_min:g} at t = {t_low:.6g} ps; "
            "the pulse is singular there", t_first=float(t_low)
        )
    return v


def solve_consistent_v_open(
    samples: TrajectorySamples,
    rates: Rates,
    *,
    v0: float | None = None,
    v_min: float = V_MIN,
    rtol: float = 1e-12,
    atol: float = 1e-14,
) -> np.ndarray:
    """Transverse-y component consistent with the damped Bloch dynamics.

    With u and w prescribed, the damped dynamics fixes s = v^2 through

        ds/dt = -2 G s - 2 [ (du + G u) u + (dw + 2 Gamma (1 + w + 2 n w)) w ]

    where G is the transverse rate. Integrated with the adaptive core from
    s(t0) = v0^2; ``v0`` defaults to the closed-sphere completion at the first
    sample. With both rates zero this reproduces ``complete_v_closed`` since
    the right side reduces to d(1 - u^2 - w^2)/dt.

    Returns the positive root v(t) on the sample grid.
    """
    t = samples.t
    if v0 is None:
        s0 = 1.0 - samples.u[0] ** 2 - samples.w[0] ** 2
        if s0 < -BLOCH_NORM_SLACK:
            raise ValidationError("initial point leaves the Bloch sphere")
        s0 = max(s0, 0.0)
    else:
        if not np.isfinite(v0) or v0 < 0.0:
            raise ValidationError(f"v0 must be finite and >= 0, got {v0}")
        s0 = float(v0) ** 2

    g_t = transverse_rate(rates)
    gam_th, occ = rates.thermal, rates.occupancy
    fu = CubicSpline(t, samples.u)
    fw = CubicSpline(t, samples.w)
    fdu = CubicSpline(t, samples.du)
    fdw = CubicSpline(t, samples.dw)

    def rhs(tt, s):
        u, w = fu(tt), fw(tt)
        drive = (fdu(tt) + g_t * u) * u + (fdw(tt) + 2.0 * gam_th * (1.0 + w + 2.0 * occ * w)) * w
        return -2.0 * g_t * s - 2.0 * drive

    sol, _ = integrate_adaptive(
        rhs, (t[0], t[-1]), np.array([s0]), t, rtol=rtol, atol=atol,
        max_step=(t[-1] - t[0]) / 8.0,
    )
    s = sol[:, 0].real
    low = s < v_min**2
    if np.any(low):
        t_low = t[np.argmax(low)]
        raise SingularPrescriptionError(
            f"consistent transverse component below {v_min:g} at t = {t_low:.6g} ps; "
            "the pulse is singular there", t_first=float(t_low)
        )
    return np.sqrt(s)
