"""
Spectra of bandlimited signals and kernels.

SpectrumFn stores a piecewise-linear function on the half-line [0, W] and
extends it to [-W, W] by its declared parity. NyquistSpectrum evaluates
the spectrum of the Nyquist-rate adversarial signal in closed form from
its break plan.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Dict, Tuple, TYPE_CHECKING

import numpy as np
from typing_extensions import Protocol, runtime_checkable

from pwlab.errors import UnsupportedSignalError
from pwlab.quadrature import fourier_integral, integrate_panels
from pwlab.signals.windows import w_spectrum

if TYPE_CHECKING:
    from pwlab.schedule.breaks import BreakPlan

PARITIES = ("even", "odd")


@runtime_checkable
class Spectrum(Protocol):
    """Anything that can be evaluated on [-support, support]."""

    support: float

    def __call__(self, omega: np.ndarray) -> np.ndarray: ...


@dataclass(frozen=True)
class SpectrumFn:
    """
    Piecewise-linear spectrum.

    Attributes:
        breakpoints: (omega, value) pairs with strictly increasing omega,
            starting at omega = 0
        parity: "even" or "odd"; fixes the values on the negative half-line
    """
    breakpoints: Tuple[Tuple[float, float], ...]
    parity: str = "even"

    def __post_init__(self):
        points = tuple((float(w), float(v)) for w, v in self.breakpoints)
        object.__setattr__(self, "breakpoints", points)
        if len(points) < 2:
            raise UnsupportedSignalError("a spectrum needs at least two breakpoints")
        if self.parity not in PARITIES:
            raise UnsupportedSignalError(f"parity must be one of {PARITIES}")
        omegas = [w for w, _ in points]
        if omegas[0] != 0.0:
            raise UnsupportedSignalError("breakpoints must start at omega = 0")
        if any(b <= a for a, b in zip(omegas, omegas[1:])):
            raise UnsupportedSignalError("breakpoint frequencies must increase strictly")
        if self.parity == "odd" and points[0][1] != 0.0:
            raise UnsupportedSignalError("an odd spectrum must vanish at omega = 0")

    @classmethod
    def constant(cls, value: float = 1.0, support: float = math.pi) -> "SpectrumFn":
        """Flat spectrum on [-support, support] (value 1 gives the sinc)."""
        return cls(((0.0, value), (support, value)))

    @classmethod
    def triangle(cls, height: float, support: float) -> "SpectrumFn":
        return cls(((0.0, height), (support, 0.0)))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SpectrumFn":
        """Build from {"breakpoints": [[w, v], ...], "parity": ...}."""
        try:
            points = tuple((w, v) for w, v in data["breakpoints"])
        except (KeyError, TypeError, ValueError) as exc:
            raise UnsupportedSignalError(f"malformed spectrum spec: {exc}") from exc
        return cls(points, parity=data.get("parity", "even"))

    def to_dict(self) -> Dict[str, Any]:
        return {"breakpoints": [list(p) for p in self.breakpoints], "parity": self.parity}

    @property
    def support(self) -> float:
        return self.breakpoints[-1][0]

    @property
    def kinks(self) -> Tuple[float, ...]:
        """Breakpoint frequencies on both half-lines."""
        half = [w for w, _ in self.breakpoints]
        return tuple(sorted(set(half + [-w for w in half])))

    def __call__(self, omega):
        w = np.asarray(omega, dtype=float)
        xs = np.array([p[0] for p in self.breakpoints])
        ys = np.array([p[1] for p in self.breakpoints])
        mag = np.interp(np.abs(w), xs, ys, right=0.0)
        if self.parity == "odd":
            mag = np.sign(w) * mag
        return float(mag) if np.ndim(omega) == 0 else mag

    def max_abs(self) -> float:
        return max(abs(v) for _, v in self.breakpoints)

    def l1_norm(self) -> float:
        """(1/2pi) times the integral of |spectrum| over the full line, in closed form."""
        total = 0.0
        for (x0, y0), (x1, y1) in zip(self.breakpoints, self.breakpoints[1:]):
            dx = x1 - x0
            if y0 * y1 >= 0:
                total += 0.5 * (abs(y0) + abs(y1)) * dx
            else:
                total += 0.5 * (y0 * y0 + y1 * y1) / (abs(y0) + abs(y1)) * dx
        return total / math.pi

    def inverse(self, t: float) -> float:
        """
        Inverse Fourier transform (1/2pi) int F(w) e^{iwt} dw.

        Only even spectra have a real inverse.
        """
        if self.parity != "even":
            raise UnsupportedSignalError("inverse transform of an odd spectrum is imaginary")
        kinks = [w for w, _ in self.breakpoints]
        return fourier_integral(self, t, 0.0, self.support, kind="cos", kinks=kinks) / math.pi


class NyquistSpectrum:
    """
    Spectrum sum_k delta_k w-hat_{N_{k+1}} of the Nyquist adversarial signal.

    Even and supported on [-pi, pi]. ``oscillation`` tells the panel
    quadrature how fast the Fejer terms oscillate.
    """

    parity = "even"
    kinks: Tuple[float, ...] = ()

    def __init__(self, plan: "BreakPlan"):
        self.plan = plan
        self.support = math.pi
        self.oscillation = 2.0 * plan.last_break

    def __call__(self, omega):
        w = np.asarray(omega, dtype=float)
        total = np.zeros_like(w)
        for delta, N in zip(self.plan.weights, self.plan.breaks[1:]):
            total += delta * np.asarray(w_spectrum(N, w))
        total = np.where(np.abs(w) <= math.pi, total, 0.0)
        return float(total) if np.ndim(omega) == 0 else total

    def l1_norm(self) -> float:
        return integrate_panels(
            lambda w: np.abs(self(w)), 0.0, math.pi, oscillation=self.oscillation
        ) / math.pi


def q1_spectrum() -> SpectrumFn:
    """q1-hat: 1 on [0, pi/2], linear down to 0 at pi."""
    return SpectrumFn(((0.0, 1.0), (math.pi / 2, 1.0), (math.pi, 0.0)))


def q2_spectrum(a: float) -> SpectrumFn:
    """q2-hat: ramps up on [pi/2, pi], flat to a pi, ramps down by a pi + pi/2."""
    if not a > 1:
        raise ValueError("oversampling factor must exceed 1")
    return SpectrumFn(
        (
            (0.0, 0.0),
            (math.pi / 2, 0.0),
            (math.pi, 1.0),
            (a * math.pi, 1.0),
            (a * math.pi + math.pi / 2, 0.0),
        )
    )


def phi_spectrum(a: float) -> SpectrumFn:
    """Trapezoid spectrum of the kernel family M(a): 1/a on [0, pi], 0 at a pi."""
    if not a > 1:
        raise ValueError("oversampling factor must exceed 1")
    return SpectrumFn(((0.0, 1.0 / a), (math.pi, 1.0 / a), (a * math.pi, 0.0)))


def fejer_square_spectrum(M: int) -> SpectrumFn:
    """Triangle spectrum of g_M."""
    return SpectrumFn.triangle(float(M), 2.0 * math.pi / M)

