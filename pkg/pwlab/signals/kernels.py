"""
Reconstruction and Hilbert-type kernels on the real line.

Every kernel has a closed-form evaluator with an explicit value at its
removable singularity. Kernels with a known spectrum carry it together
with the transform that recovers the kernel from it:

    cos:  kappa(t) = (1/pi) int_0^W S(w) cos(w t) dw   (even kernels)
    sin:  kappa(t) = (1/pi) int_0^W S(w) sin(w t) dw   (Hilbert transforms)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, TYPE_CHECKING, Union

import numpy as np
from typing_extensions import Literal

from pwlab.errors import SingularityError
from pwlab.quadrature import fourier_integral
from pwlab.signals.spectrum import SpectrumFn, phi_spectrum, q1_spectrum

if TYPE_CHECKING:
    from pwlab.systems.lti import LtiSystem

ArrayLike = Union[float, np.ndarray]

KERNEL_NAMES = (
    "sinc",
    "conjugated",
    "remainder_r",
    "trapezoid_phi",
    "hilbert_trapezoid",
    "hq1",
    "impulse_response",
    "cauchy",
    "oversampling_correction",
)

# Below this |pi t| the cancelling closed forms switch to their Taylor series.
SERIES_CUTOFF = 1e-2
SERIES_TERMS = 8


@dataclass(frozen=True)
class KernelFn:
    """
    A real-line kernel.

    Attributes:
        name: One of KERNEL_NAMES
        evaluator: Vectorised closed form, already safe at removable points
        a: Oversampling factor the kernel belongs to (1 for Nyquist kernels)
        spectrum: Optional piecewise-linear spectrum magnitude on [0, W]
        transform: How the spectrum maps back to the kernel ("cos" or "sin")
        singular_at_zero: True if t = 0 is a genuine pole
    """
    name: str
    evaluator: Callable[[np.ndarray], np.ndarray]
    a: float = 1.0
    spectrum: Optional[SpectrumFn] = None
    transform: Literal["cos", "sin"] = "cos"
    singular_at_zero: bool = False

    def __post_init__(self):
        if self.name not in KERNEL_NAMES:
            raise ValueError(f"unknown kernel {self.name!r}")

    def __call__(self, t: ArrayLike) -> ArrayLike:
        return kernel_eval(self, t)


def kernel_eval(kernel: KernelFn, t: ArrayLike) -> ArrayLike:
    """
    Evaluate a kernel at t (scalar or array).

    Raises:
        SingularityError: If a pole kernel is evaluated at t = 0
    """
    arr = np.asarray(t, dtype=float)
    if kernel.singular_at_zero and np.any(arr == 0.0):
        raise SingularityError(f"kernel {kernel.name} has a pole at t = 0")
    out = kernel.evaluator(arr)
    return float(out) if np.ndim(t) == 0 else out


def spectral_eval(kernel: KernelFn, t: float) -> float:
    """Recover kernel(t) from its attached spectrum by quadrature."""
    if kernel.spectrum is None:
        raise ValueError(f"kernel {kernel.name} has no spectrum attached")
    spec = kernel.spectrum
    kinks = [w for w, _ in spec.breakpoints]
    value = fourier_integral(spec, t, 0.0, spec.support, kind=kernel.transform, kinks=kinks)
    return value / math.pi


def _sinc(t: np.ndarray) -> np.ndarray:
    return np.sinc(t)


def _conjugated(t: np.ndarray) -> np.ndarray:
    # reduce to [-1, 1] so integer t gives exact zeros and exact 2/(pi t)
    r = t - 2.0 * np.round(0.5 * t)
    s = np.sin(0.5 * np.pi * r)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = 2.0 * s * s / (np.pi * t)
    return np.where(t == 0.0, 0.0, out)


def _remainder(t: np.ndarray) -> np.ndarray:
    # (2/(pi^2 t^2)) (sin(pi t) - sin(pi t / 2)) in product form
    with np.errstate(divide="ignore", invalid="ignore"):
        return 4.0 * np.cos(0.75 * np.pi * t) * np.sin(0.25 * np.pi * t) / (np.pi * t) ** 2


def _cauchy(t: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return 1.0 / (np.pi * t)


def _hq1_series(t: np.ndarray) -> np.ndarray:
    total = np.zeros_like(t)
    for j in range(1, SERIES_TERMS + 1):
        coeff = (-1) ** (j + 1) * math.pi ** (2 * j + 1) * (1.0 - 2.0 ** (-2 * j - 1))
        total += coeff / math.factorial(2 * j + 1) * t ** (2 * j - 1)
    return 2.0 / math.pi**2 * total


def _hq1(t: np.ndarray) -> np.ndarray:
    small = np.abs(np.pi * t) < SERIES_CUTOFF
    safe = np.where(small, 1.0, t)
    direct = _cauchy(safe) - _remainder(safe)
    return np.where(small, _hq1_series(np.where(small, t, 0.0)), direct)


def _trapezoid_phi(a: float) -> Callable[[np.ndarray], np.ndarray]:
    scale = (a + 1.0) / (2.0 * a)

    def evaluate(t: np.ndarray) -> np.ndarray:
        return scale * np.sinc(0.5 * (a + 1.0) * t) * np.sinc(0.5 * (a - 1.0) * t)

    return evaluate


def _hilbert_trapezoid(a: float) -> Callable[[np.ndarray], np.ndarray]:
    denom = a * (a - 1.0)

    def series(t: np.ndarray) -> np.ndarray:
        total = np.zeros_like(t)
        x = np.pi * t
        for j in range(1, SERIES_TERMS + 1):
            coeff = (-1) ** (j + 1) * (a ** (2 * j + 1) - 1.0) / math.factorial(2 * j + 1)
            total += coeff * x ** (2 * j - 1)
        return total / denom

    def evaluate(t: np.ndarray) -> np.ndarray:
        small = np.abs(a * np.pi * t) < SERIES_CUTOFF
        safe = np.where(small, 1.0, t)
        x = np.pi * safe
        direct = 1.0 / (a * x) - (np.sin(a * x) - np.sin(x)) / (denom * x * x)
        return np.where(small, series(np.where(small, t, 0.0)), direct)

    return evaluate


def sinc_kernel() -> KernelFn:
    """sin(pi t)/(pi t): the Shannon kernel."""
    return KernelFn("sinc", _sinc, spectrum=SpectrumFn.constant(1.0))


def conjugated_kernel() -> KernelFn:
    """(1 - cos(pi t))/(pi t): Hilbert transform of the sinc."""
    return KernelFn("conjugated", _conjugated, spectrum=SpectrumFn.constant(1.0), transform="sin")


def remainder_kernel() -> KernelFn:
    """r(t) = (2/(pi^2 t^2))(sin(pi t) - sin(pi t/2)); behaves like 1/(pi t) at 0."""
    return KernelFn("remainder_r", _remainder, singular_at_zero=True)


def cauchy_kernel() -> KernelFn:
    """1/(pi t), the Hilbert transform kernel itself."""
    return KernelFn("cauchy", _cauchy, singular_at_zero=True)


def hq1_kernel() -> KernelFn:
    """H q1 = 1/(pi t) - r(t); q1 has the half-flat half-ramp spectrum."""
    return KernelFn("hq1", _hq1, spectrum=q1_spectrum(), transform="sin")


def trapezoid_phi_kernel(a: float) -> KernelFn:
    """Member of M(a) with trapezoid spectrum: 1/a on [0, pi], ramp to 0 at a pi."""
    if not a > 1:
        raise ValueError("oversampling factor must exceed 1")
    return KernelFn("trapezoid_phi", _trapezoid_phi(a), a=a, spectrum=phi_spectrum(a))


def hilbert_trapezoid_kernel(a: float) -> KernelFn:
    """Hilbert transform of trapezoid_phi(a)."""
    if not a > 1:
        raise ValueError("oversampling factor must exceed 1")
    return KernelFn(
        "hilbert_trapezoid",
        _hilbert_trapezoid(a),
        a=a,
        spectrum=phi_spectrum(a),
        transform="sin",
    )


def oversampling_correction_kernel(a: float) -> KernelFn:
    """
    s_a = a * H(phi) - Hq1.

    With it a * H(phi) = 1/(pi t) - r(t) + s_a(t), and s_a decays like 1/t^2.
    """
    hphi = _hilbert_trapezoid(a)

    def evaluate(t: np.ndarray) -> np.ndarray:
        return a * hphi(t) - _hq1(t)

    return KernelFn("oversampling_correction", evaluate, a=a)


def impulse_response_kernel(system: "LtiSystem") -> KernelFn:
    """Kernel h_T of a stable LTI system (closed form for built-ins)."""
    from pwlab.systems.lti import impulse_response

    def evaluate(t: np.ndarray) -> np.ndarray:
        return np.asarray(impulse_response(system, t), dtype=float)

    return KernelFn("impulse_response", evaluate)
