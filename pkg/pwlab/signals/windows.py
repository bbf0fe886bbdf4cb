"""
Windows and Fejer-type building blocks.

All functions are vectorised over their last argument and return a float
for scalar input.
"""

from __future__ import annotations

from typing import Union

import numpy as np

ArrayLike = Union[float, np.ndarray]


def _out(result: np.ndarray, like: ArrayLike):
    return float(result) if np.ndim(like) == 0 else result


def trapezoid_window(N: int, k: ArrayLike) -> ArrayLike:
    """
    Trapezoid window w_N: 1 on |k| <= N, linear down to 0 at |k| = 2N.

    Args:
        N: Plateau half-width (>= 1)
        k: Sample index (or array of indices)
    """
    if N < 1:
        raise ValueError(f"window order must be >= 1, got {N}")
    k_arr = np.abs(np.asarray(k, dtype=float))
    return _out(np.clip(2.0 - k_arr / N, 0.0, 1.0), k)


def fejer_kernel(M: int, omega: ArrayLike) -> ArrayLike:
    """
    Fejer kernel K_M(w) = sin^2(M w / 2) / (M sin^2(w / 2)), with K_M(0) = M.

    Args:
        M: Order (>= 1)
        omega: Frequency in radians
    """
    if M < 1:
        raise ValueError(f"Fejer order must be >= 1, got {M}")
    w = np.asarray(omega, dtype=float)
    half = np.sin(0.5 * w)
    at_pole = half == 0.0
    safe = np.where(at_pole, 1.0, half)
    ratio = np.sin(0.5 * M * w) / safe
    result = np.where(at_pole, float(M), ratio * ratio / M)
    return _out(result, omega)


def w_spectrum(N: int, omega: ArrayLike) -> ArrayLike:
    """Spectrum of the trapezoid window: 2 K_{2N}(w) - K_N(w)."""
    result = 2.0 * np.asarray(fejer_kernel(2 * N, omega)) - np.asarray(fejer_kernel(N, omega))
    return _out(result, omega)


def fejer_square(M: int, t: ArrayLike) -> ArrayLike:
    """
    g_M(t) = (sin(pi t / M) / (pi t / M))^2, with g_M(0) = 1.

    Its spectrum is the triangle of height M supported on |w| <= 2 pi / M.
    """
    if M < 1:
        raise ValueError(f"order must be >= 1, got {M}")
    x = np.sinc(np.asarray(t, dtype=float) / M)
    return _out(x * x, t)
