"""
Threshold operators: keep only the samples whose magnitude reaches delta.
"""

from __future__ import annotations

import numpy as np

from pwlab.errors import UnsupportedSignalError
from pwlab.signals.kernels import KernelFn
from pwlab.signals.samples import SampledSignal
from pwlab.series.truncated import ArrayLike, series_sum


def threshold_series(f: SampledSignal, delta: float, kernel: KernelFn, t: ArrayLike) -> ArrayLike:
    """
    sum over {k : |f(k/a)| >= delta} of f(k/a) kappa(t - k/a).

    With the sinc kernel this is A_delta f, with the conjugated kernel the
    conjugated operator.

    Raises:
        ValueError: If delta <= 0
    """
    if not delta > 0:
        raise ValueError(f"threshold must be positive, got {delta}")
    keep = np.abs(f.values) >= delta
    return series_sum(kernel, f.times[keep], f.values[keep], t)


def threshold_cutoff(f: SampledSignal, delta: float) -> int:
    """
    N(delta): the largest N with f(N) >= delta.

    For the nonincreasing symmetric Nyquist construction the kept set is
    exactly |k| <= N(delta), so A_delta f coincides with S_N(delta) f.

    Raises:
        UnsupportedSignalError: If f is not the Nyquist construction
        ValueError: If delta is outside (0, f(0)]
    """
    if f.provenance != "nyquist_f1":
        raise UnsupportedSignalError(
            f"threshold cutoff needs monotone symmetric samples, got {f.provenance!r}"
        )
    peak = f.value_at(0)
    if not 0 < delta <= peak:
        raise ValueError(f"threshold must lie in (0, {peak}], got {delta}")
    right = f.values[f.support:]
    return int(np.flatnonzero(right >= delta)[-1])
