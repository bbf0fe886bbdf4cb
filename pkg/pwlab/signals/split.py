"""
Spectral split of the Nyquist adversarial signal.

f_sigma keeps the part of f1-hat on |w| <= sigma; r_sigma = f1 - f_sigma is
the spectral tail. Values come from quadrature on the closed-form spectrum;
an exact sinc-convolution of the finite sample set and a Parseval form of
the tail energy serve as independent oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from scipy import optimize

from pwlab.quadrature import fourier_integral, integrate_panels
from pwlab.schedule.breaks import BreakPlan
from pwlab.signals.samples import SampledSignal
from pwlab.signals.spectrum import NyquistSpectrum

# Entries of the convolution matrix formed at once.
CHUNK_ELEMENTS = 2_000_000
# Agreement required of the tail integrals, relative to max(1, mass).
TAIL_TOL = 1e-10
# Sign-change grid: points per oscillation of the spectrum, and a hard cap.
SIGN_GRID_DENSITY = 8
SIGN_GRID_MAX = 400_000


@dataclass(frozen=True)
class SplitResult:
    """
    Attributes:
        value: f_sigma(l)
        tail_norm: ||r_sigma||_2 = ((1/2pi) int_{sigma<=|w|<=pi} |f1-hat|^2)^(1/2)
        tail_l1: (1/2pi) int_{sigma<=|w|<=pi} |f1-hat|, bounds |f1(l) - f_sigma(l)|
    """
    value: float
    tail_norm: float
    tail_l1: float


def _check_sigma(sigma: float) -> None:
    if not 0 < sigma <= math.pi:
        raise ValueError(f"sigma must lie in (0, pi], got {sigma}")


def sign_changes(spectrum: NyquistSpectrum, lo: float, hi: float) -> List[float]:
    """
    Points in (lo, hi) where the spectrum changes sign.

    Sign changes are bracketed on a grid finer than the spectrum's oscillation
    and then located with brentq. They are the kinks of its absolute value.
    """
    n = math.ceil(SIGN_GRID_DENSITY * (1.0 + spectrum.oscillation) * (hi - lo) / math.pi)
    grid = np.linspace(lo, hi, min(SIGN_GRID_MAX, max(64, n)) + 1)
    values = np.asarray(spectrum(grid), dtype=float)
    roots = [float(w) for w in grid[1:-1][values[1:-1] == 0.0]]
    for i in np.nonzero(values[:-1] * values[1:] < 0.0)[0]:
        roots.append(float(optimize.brentq(spectrum, grid[i], grid[i + 1], xtol=1e-14)))
    return sorted(roots)


def bandlimit_split(
    plan: BreakPlan,
    sigma: float,
    l: int,
    spectrum: Optional[NyquistSpectrum] = None,
) -> SplitResult:
    """
    f_sigma(l) = (1/2pi) int_{-sigma}^{sigma} f1-hat(w) e^{iwl} dw, plus tail norms.

    Raises:
        ValueError: If sigma is outside (0, pi]
        QuadratureToleranceError: If the quadrature does not converge
    """
    _check_sigma(sigma)
    spec = spectrum or NyquistSpectrum(plan)
    value = fourier_integral(spec, float(l), 0.0, sigma, kind="cos",
                             oscillation=spec.oscillation) / math.pi
    if sigma == math.pi:
        return SplitResult(value=value, tail_norm=0.0, tail_l1=0.0)
    energy = integrate_panels(lambda w: spec(w) ** 2, sigma, math.pi,
                              oscillation=spec.oscillation, tol=TAIL_TOL) / math.pi
    mass = integrate_panels(lambda w: np.abs(spec(w)), sigma, math.pi,
                            kinks=sign_changes(spec, sigma, math.pi),
                            oscillation=spec.oscillation, tol=TAIL_TOL) / math.pi
    return SplitResult(value=value, tail_norm=math.sqrt(max(energy, 0.0)), tail_l1=mass)


def bandlimit_split_direct(signal: SampledSignal, sigma: float, l: int) -> float:
    """
    Exact f_sigma(l) = sum_j f(j) (sigma/pi) sinc(sigma (l - j) / pi).

    Requires the full (not span-limited) Nyquist sample set.
    """
    _check_sigma(sigma)
    j = signal.indices
    return float(signal.values @ (sigma / math.pi * np.sinc(sigma * (l - j) / math.pi)))


def tail_energy_direct(signal: SampledSignal, sigma: float) -> float:
    """
    ||r_sigma||_2 by Parseval: sum_d c_d (delta_{d0} - (sigma/pi) sinc(sigma d / pi)).

    c_d is the autocorrelation of the samples.
    """
    _check_sigma(sigma)
    corr = np.correlate(signal.values, signal.values, mode="full")
    d = np.arange(-(len(signal.values) - 1), len(signal.values))
    weight = np.where(d == 0, 1.0, 0.0) - sigma / math.pi * np.sinc(sigma * d / math.pi)
    return math.sqrt(max(float(corr @ weight), 0.0))


def filtered_signal(signal: SampledSignal, sigma: float, span: Optional[int] = None) -> SampledSignal:
    """Integer samples of f_sigma on |l| <= span, from the exact convolution."""
    _check_sigma(sigma)
    L = signal.support if span is None else int(span)
    ls = np.arange(-L, L + 1)
    values = np.empty(ls.size)
    rows = max(1, CHUNK_ELEMENTS // max(1, signal.indices.size))
    for start in range(0, ls.size, rows):
        block = ls[start:start + rows, None] - signal.indices[None, :]
        values[start:start + rows] = (sigma / math.pi * np.sinc(sigma * block / math.pi)) @ signal.values
    return SampledSignal(
        a=1.0,
        support=L,
        values=values,
        provenance="filtered_f_sigma",
        metadata=dict(signal.metadata, sigma=sigma),
    )
