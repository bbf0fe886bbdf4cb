"""
System approximation sequences (T_N f)(t), their steps and Cesaro means.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from pwlab.errors import UnsupportedSignalError
from pwlab.signals.samples import SampledSignal
from pwlab.systems.lti import LtiSystem, impulse_response


def _terms(f: SampledSignal, T: LtiSystem, t: float, N: int):
    if f.a != 1:
        raise UnsupportedSignalError("system approximation uses Nyquist-rate samples")
    k = np.arange(-N, N + 1)
    h = np.asarray(impulse_response(T, t - k.astype(float)), dtype=float)
    return f.window(N), h


def partial_sums(f: SampledSignal, T: LtiSystem, t: float, N_max: int) -> np.ndarray:
    """
    (T_N f)(t) for N = 0..N_max.

    Orders beyond the signal support repeat the full sum.
    """
    if N_max < 0:
        raise ValueError("N_max must be >= 0")
    values, h = _terms(f, T, t, N_max)
    terms = values * h
    right = terms[N_max + 1:]
    left = terms[:N_max][::-1]
    steps = right + left
    return terms[N_max] + np.concatenate([[0.0], np.cumsum(steps)])


def cesaro_mean(f: SampledSignal, T: LtiSystem, M: int, t: float) -> float:
    """(1/M) sum_{N=0}^{M-1} (T_N f)(t)."""
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    N_eff = min(M - 1, f.support)
    sums = partial_sums(f, T, t, N_eff)
    return float((sums.sum() + (M - 1 - N_eff) * sums[-1]) / M)


@dataclass(frozen=True)
class StepSequence:
    """
    Attributes:
        direct: f(N) h(t-N) + f(-N) h(t+N) for N = 1..N_max
        differences: (T_N f)(t) - (T_{N-1} f)(t) from separately evaluated sums
    """
    direct: np.ndarray
    differences: np.ndarray

    @property
    def max_discrepancy(self) -> float:
        if self.direct.size == 0:
            return 0.0
        return float(np.max(np.abs(self.direct - self.differences)))


def step_sequence(f: SampledSignal, T: LtiSystem, t: float, N_max: int) -> StepSequence:
    """
    Steps of the approximation sequence, computed two ways.

    Raises:
        ValueError: If N_max exceeds the signal support
    """
    if N_max > f.support:
        raise ValueError(f"N_max {N_max} exceeds support {f.support}")
    values, h = _terms(f, T, t, N_max)
    c = N_max
    Ns = np.arange(1, N_max + 1)
    direct = values[c + Ns] * h[c + Ns] + values[c - Ns] * h[c - Ns]
    sums = np.array([values[c - N:c + N + 1] @ h[c - N:c + N + 1] for N in range(N_max + 1)])
    return StepSequence(direct=direct, differences=np.diff(sums))
