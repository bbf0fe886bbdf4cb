"""
Stable LTI systems on Paley-Wiener space.

A system is given by its frequency response on [-pi, pi]. Outputs are
(Tf)(t) = (1/2pi) int f-hat(w) h-hat(w) e^{iwt} dw, computed by panel
quadrature; the built-in identity and Hilbert systems short-circuit to
their closed-form impulse responses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np
from typing_extensions import Literal

from pwlab.errors import UnsupportedSignalError
from pwlab.quadrature import integrate_panels
from pwlab.signals.spectrum import Spectrum, SpectrumFn

SystemName = Literal["identity", "hilbert", "custom"]

# Largest imaginary part tolerated in a supposedly real output.
IMAG_RESIDUAL = 1e-9

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class LtiSystem:
    """
    Stable LTI system.

    Attributes:
        name: "identity", "hilbert" or "custom"
        real_part: Re h-hat as a spectrum (custom systems)
        imag_part: Im h-hat as a spectrum (custom systems)
    """
    name: str = "identity"
    real_part: Optional[SpectrumFn] = None
    imag_part: Optional[SpectrumFn] = None

    def __post_init__(self):
        if self.name not in ("identity", "hilbert", "custom"):
            raise ValueError(f"unknown system {self.name!r}")
        if self.name == "custom":
            if self.real_part is None and self.imag_part is None:
                raise ValueError("a custom system needs a real or imaginary response")
            for part in (self.real_part, self.imag_part):
                if part is not None and part.support > math.pi + 1e-12:
                    raise UnsupportedSignalError("system response must live on [-pi, pi]")

    @classmethod
    def identity(cls) -> "LtiSystem":
        return cls("identity")

    @classmethod
    def hilbert(cls) -> "LtiSystem":
        return cls("hilbert")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LtiSystem":
        """
        Build from config JSON.

        {"name": "hilbert"} or {"name": "custom", "real": {...}, "imag": {...}}
        where the parts use the SpectrumFn breakpoint format.
        """
        name = data.get("name", "identity")
        if name != "custom":
            return cls(name)
        real = data.get("real")
        imag = data.get("imag")
        return cls(
            "custom",
            real_part=SpectrumFn.from_dict(real) if real else None,
            imag_part=SpectrumFn.from_dict(imag) if imag else None,
        )

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"name": self.name}
        if self.real_part is not None:
            data["real"] = self.real_part.to_dict()
        if self.imag_part is not None:
            data["imag"] = self.imag_part.to_dict()
        return data

    def response(self, omega: ArrayLike) -> np.ndarray:
        """Complex frequency response h-hat(w), zero outside [-pi, pi]."""
        w = np.asarray(omega, dtype=float)
        inside = np.abs(w) <= math.pi
        if self.name == "identity":
            h = np.ones_like(w, dtype=complex)
        elif self.name == "hilbert":
            h = -1j * np.sign(w)
        else:
            re = self.real_part(w) if self.real_part is not None else np.zeros_like(w)
            im = self.imag_part(w) if self.imag_part is not None else np.zeros_like(w)
            h = np.asarray(re) + 1j * np.asarray(im)
        return np.where(inside, h, 0.0)

    @property
    def kinks(self) -> Tuple[float, ...]:
        points = {0.0, -math.pi, math.pi}
        for part in (self.real_part, self.imag_part):
            if part is not None:
                points.update(part.kinks)
        return tuple(sorted(points))

    @property
    def norm(self) -> float:
        """Operator norm: ess-sup of |h-hat| (attained at breakpoints)."""
        if self.name != "custom":
            return 1.0
        grid = sorted({abs(w) for w in self.kinks} | {0.0})
        grid += [-w for w in grid]
        return float(np.max(np.abs(self.response(np.array(grid)))))


def _complex_transform(product, t: float, kinks, oscillation: float = 0.0) -> Tuple[float, float]:
    """(1/2pi) int_{-pi}^{pi} product(w) e^{iwt} dw split into real and imaginary parts."""

    def real_integrand(w):
        p = product(w)
        return p.real * np.cos(w * t) - p.imag * np.sin(w * t)

    def imag_integrand(w):
        p = product(w)
        return p.real * np.sin(w * t) + p.imag * np.cos(w * t)

    opts = dict(t=t, kinks=kinks, oscillation=oscillation)
    re = integrate_panels(real_integrand, -math.pi, math.pi, **opts)
    im = integrate_panels(imag_integrand, -math.pi, math.pi, **opts)
    return re / (2.0 * math.pi), im / (2.0 * math.pi)


def _real_output(re: float, im: float) -> float:
    if abs(im) > IMAG_RESIDUAL:
        raise UnsupportedSignalError(
            f"output has imaginary part {im:.3e}; the system/spectrum pair is not real"
        )
    return re


def impulse_response(T: LtiSystem, t: ArrayLike) -> ArrayLike:
    """
    Impulse response h_T(t) = (1/2pi) int h-hat(w) e^{iwt} dw.

    Identity and Hilbert use the sinc and conjugated closed forms.
    """
    from pwlab.signals.kernels import conjugated_kernel, sinc_kernel

    if T.name == "identity":
        return sinc_kernel()(t)
    if T.name == "hilbert":
        return conjugated_kernel()(t)
    ts = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.array(
        [_real_output(*_complex_transform(T.response, float(x), T.kinks)) for x in ts]
    )
    return float(out[0]) if np.ndim(t) == 0 else out.reshape(np.shape(t))


def reference_output(T: LtiSystem, f_spectrum: Spectrum, t: float) -> float:
    """
    (Tf)(t) = (1/2pi) int f-hat(w) h-hat(w) e^{iwt} dw.

    Args:
        T: System
        f_spectrum: Spectrum of the input, supported in [-pi, pi]
        t: Time

    Raises:
        UnsupportedSignalError: If the spectrum reaches beyond pi or the
            output is not real
        QuadratureToleranceError: If quadrature does not converge
    """
    if f_spectrum.support > math.pi + 1e-12:
        raise UnsupportedSignalError(
            f"input spectrum reaches {f_spectrum.support:.6g} > pi"
        )
    kinks = set(T.kinks)
    kinks.update(getattr(f_spectrum, "kinks", ()))
    oscillation = float(getattr(f_spectrum, "oscillation", 0.0))

    def product(w):
        return np.asarray(f_spectrum(w), dtype=float) * T.response(w)

    re, im = _complex_transform(product, float(t), sorted(kinks), oscillation)
    return _real_output(re, im)
