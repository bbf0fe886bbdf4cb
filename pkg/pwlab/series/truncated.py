"""
Truncated sampling series.

One routine covers every process in the lab: the Shannon series (sinc
kernel), its conjugate (conjugated kernel), system approximations (impulse
response kernel) and the oversampled Hilbert process (hilbert_trapezoid).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Tuple, Union

import numpy as np
from scipy import optimize

from pwlab.signals.kernels import KernelFn, remainder_kernel
from pwlab.signals.samples import SampledSignal

ArrayLike = Union[float, np.ndarray]

# Rows of the (t, k) kernel matrix evaluated at once.
CHUNK_ELEMENTS = 2_000_000


@dataclass(frozen=True)
class SeriesSpec:
    """
    Attributes:
        signal: Samples f(k/a)
        kernel: Reconstruction kernel kappa
        N: Truncation index, the sum runs over k = -N..N
    """
    signal: SampledSignal
    kernel: KernelFn
    N: int

    def __post_init__(self):
        if self.N < 0:
            raise ValueError(f"truncation index must be >= 0, got {self.N}")
        if self.N > self.signal.support:
            raise ValueError(
                f"truncation index {self.N} exceeds signal support {self.signal.support}"
            )

    @property
    def a(self) -> float:
        return self.signal.a

    def nodes(self) -> Tuple[np.ndarray, np.ndarray]:
        """Sample positions k/a and values for k = -N..N."""
        k = np.arange(-self.N, self.N + 1)
        return k / self.a, self.signal.window(self.N)


def series_sum(kernel: KernelFn, positions: np.ndarray, values: np.ndarray, t: ArrayLike) -> ArrayLike:
    ts = np.asarray(t, dtype=float)
    flat = np.atleast_1d(ts).ravel()
    out = np.empty_like(flat)
    rows = max(1, CHUNK_ELEMENTS // max(1, positions.size))
    for start in range(0, flat.size, rows):
        block = flat[start:start + rows]
        out[start:start + rows] = kernel(block[:, None] - positions[None, :]) @ values
    return float(out[0]) if ts.ndim == 0 else out.reshape(ts.shape)


def truncated_series(spec: SeriesSpec, t: ArrayLike) -> ArrayLike:
    """
    sum_{k=-N}^{N} f(k/a) kappa(t - k/a), for scalar or array t.

    Raises:
        SingularityError: If a pole kernel meets t = k/a exactly
    """
    positions, values = spec.nodes()
    return series_sum(spec.kernel, positions, values, t)


def peak_error(
    f: SampledSignal,
    kernel: KernelFn,
    N: int,
    reference: Callable[[float], float],
    window: Tuple[float, float],
    step: float = 0.05,
) -> float:
    """
    P_N = max over the window of |reference(t) - truncated_series(t)|.

    The grid maximum is refined by bounded Brent search on the two
    neighbouring grid cells.
    """
    lo, hi = window
    if hi < lo:
        raise ValueError(f"empty window {window}")
    if step <= 0:
        raise ValueError("step must be positive")
    spec = SeriesSpec(f, kernel, N)
    grid = np.arange(lo, hi + 0.5 * step, step)

    def error(t: float) -> float:
        return abs(reference(float(t)) - truncated_series(spec, float(t)))

    values = np.array([error(t) for t in grid])
    i = int(np.argmax(values))
    best = float(values[i])
    left, right = max(lo, grid[i] - step), min(hi, grid[i] + step)
    if right > left:
        res = optimize.minimize_scalar(lambda t: -error(t), bounds=(left, right),
                                       method="bounded", options={"xatol": 1e-6})
        best = max(best, -float(res.fun))
    return best


def remainder_sum(f: SampledSignal, N: int, t: float) -> float:
    """sum_{k=-N}^{N} |f(k/a) r(t - k/a)|, the quantity bounded by a^2 max|f|."""
    spec = SeriesSpec(f, remainder_kernel(), N)
    positions, values = spec.nodes()
    return float(np.abs(values) @ np.abs(remainder_kernel()(t - positions)))


def kernel_abs_sum(kernel: KernelFn, a: float, N: int, t: ArrayLike) -> ArrayLike:
    """sum_{k=-N}^{N} |kappa(t - k/a)|: the operator-norm proxy of a truncated process."""
    positions = np.arange(-N, N + 1) / a
    ones = np.ones_like(positions)
    abs_kernel = KernelFn(kernel.name, lambda x: np.abs(kernel.evaluator(x)), a=kernel.a,
                          singular_at_zero=kernel.singular_at_zero)
    return series_sum(abs_kernel, positions, ones, t)
