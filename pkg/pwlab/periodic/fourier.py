"""
Partial Fourier sums, their conjugates and Fejer means on the circle.

A PeriodicSignal is held as Fourier coefficients, optionally together with
the callable they came from. Operators use the coefficient form when it is
exact and fall back to quadrature against the Dirichlet, conjugated
Dirichlet or Fejer kernel otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

import numpy as np
from typing_extensions import Literal

from pwlab.quadrature import integrate, integrate_panels
from pwlab.signals.windows import fejer_kernel

ArrayLike = Union[float, np.ndarray]
Method = Literal["auto", "coefficients", "quadrature"]


def _out(result: np.ndarray, like: ArrayLike):
    return float(result) if np.ndim(like) == 0 else result


def dirichlet(N: int, t: ArrayLike) -> ArrayLike:
    """D_N(t) = sin((N + 1/2) t) / (2 sin(t/2)) = 1/2 + sum_{k<=N} cos(kt)."""
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    x = np.asarray(t, dtype=float)
    half = np.sin(0.5 * x)
    pole = half == 0.0
    safe = np.where(pole, 1.0, half)
    result = np.where(pole, N + 0.5, np.sin((N + 0.5) * x) / (2.0 * safe))
    return _out(result, t)


def conjugated_dirichlet(N: int, t: ArrayLike) -> ArrayLike:
    """
    D~_N(t) = (cos(t/2) - cos((N + 1/2) t)) / sin(t/2) = 2 sum_{k<=N} sin(kt).

    Evaluated in the product form 2 sin((N+1)t/2) sin(Nt/2) / sin(t/2).
    """
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    x = np.asarray(t, dtype=float)
    half = np.sin(0.5 * x)
    pole = half == 0.0
    safe = np.where(pole, 1.0, half)
    result = np.where(pole, 0.0, 2.0 * np.sin(0.5 * (N + 1) * x) * np.sin(0.5 * N * x) / safe)
    return _out(result, t)


@dataclass(frozen=True)
class PeriodicSignal:
    """
    A 2pi-periodic signal.

    Attributes:
        cos_coeffs: a_0..a_D, so that f = a_0/2 + sum (a_k cos kt + b_k sin kt)
        sin_coeffs: b_0..b_D (b_0 is ignored)
        fn: Vectorised callable on [-pi, pi) if the coefficients were
            computed from one; None for trigonometric polynomials
    """
    cos_coeffs: np.ndarray
    sin_coeffs: np.ndarray
    fn: Optional[Callable[[np.ndarray], np.ndarray]] = None

    def __post_init__(self):
        a = np.asarray(self.cos_coeffs, dtype=float)
        b = np.asarray(self.sin_coeffs, dtype=float)
        if a.ndim != 1 or a.shape != b.shape or a.size == 0:
            raise ValueError("coefficient arrays must be 1-d, nonempty and of equal length")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "cos_coeffs", a)
        object.__setattr__(self, "sin_coeffs", b)

    @classmethod
    def from_coefficients(cls, a: Sequence[float], b: Optional[Sequence[float]] = None) -> "PeriodicSignal":
        a = np.asarray(a, dtype=float)
        b = np.zeros_like(a) if b is None else np.asarray(b, dtype=float)
        return cls(a, b)

    @classmethod
    def trig(cls, kind: Literal["cos", "sin"], k: int, amplitude: float = 1.0) -> "PeriodicSignal":
        """amplitude * cos(kt) or amplitude * sin(kt)."""
        if k < 0:
            raise ValueError("harmonic must be >= 0")
        a = np.zeros(k + 1)
        b = np.zeros(k + 1)
        if kind == "cos":
            a[k] = 2.0 * amplitude if k == 0 else amplitude
        else:
            b[k] = amplitude
        return cls(a, b)

    @classmethod
    def constant(cls, c: float) -> "PeriodicSignal":
        return cls.trig("cos", 0, c)

    @classmethod
    def from_callable(cls, fn: Callable[[np.ndarray], np.ndarray], D: int) -> "PeriodicSignal":
        """
        Coefficients up to degree D by adaptive quadrature.

        Raises:
            QuadratureToleranceError: If fn is not integrable to tolerance
        """
        if D < 0:
            raise ValueError("degree must be >= 0")
        a = np.empty(D + 1)
        b = np.zeros(D + 1)
        for k in range(D + 1):
            a[k] = integrate(lambda x: float(fn(x)) * math.cos(k * x), -math.pi, math.pi) / math.pi
            if k:
                b[k] = integrate(lambda x: float(fn(x)) * math.sin(k * x), -math.pi, math.pi) / math.pi
        return cls(a, b, fn=fn)

    @property
    def degree(self) -> int:
        return self.cos_coeffs.size - 1

    def conjugate(self) -> "PeriodicSignal":
        """Coefficients of the conjugate function: (a_k, b_k) -> (-b_k, a_k), constant dropped."""
        a = -self.sin_coeffs.copy()
        b = self.cos_coeffs.copy()
        a[0] = 0.0
        b[0] = 0.0
        return PeriodicSignal(a, b)

    def __call__(self, t: ArrayLike) -> ArrayLike:
        if self.fn is not None:
            return _out(np.asarray(self.fn(np.asarray(t, dtype=float)), dtype=float), t)
        return _fourier_sum(self.cos_coeffs, self.sin_coeffs, self.degree, t)


def _fourier_sum(a: np.ndarray, b: np.ndarray, N: int, t: ArrayLike, weights=None) -> ArrayLike:
    x = np.asarray(t, dtype=float)
    n = min(N, a.size - 1)
    k = np.arange(1, n + 1)
    w = np.ones(n) if weights is None else weights[:n]
    phase = np.multiply.outer(x, k)
    total = 0.5 * a[0] + np.cos(phase) @ (w * a[1:n + 1]) + np.sin(phase) @ (w * b[1:n + 1])
    return _out(np.asarray(total), t)


def _use_coefficients(f: PeriodicSignal, order: int, method: Method) -> bool:
    if method == "coefficients":
        return True
    if method == "quadrature":
        return False
    return f.fn is None or order <= f.degree


def _convolve(f: PeriodicSignal, kernel: Callable[[np.ndarray], np.ndarray], t: float,
              scale: float, oscillation: float) -> float:
    return scale * integrate_panels(
        lambda tau: np.asarray(f(tau), dtype=float) * kernel(t - tau),
        -math.pi,
        math.pi,
        oscillation=oscillation,
        tol=1e-11,
    )


def partial_fourier(f: PeriodicSignal, N: int, t: ArrayLike, method: Method = "auto") -> ArrayLike:
    """
    U_N f(t) = a_0/2 + sum_{k=1}^{N} (a_k cos kt + b_k sin kt).

    The quadrature form is (1/pi) int f(tau) D_N(t - tau) dtau. Harmonics
    above the stored degree of a trigonometric polynomial are zero, so any
    N is accepted for it.
    """
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    if _use_coefficients(f, N, method):
        return _fourier_sum(f.cos_coeffs, f.sin_coeffs, N, t)
    ts = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.array([_convolve(f, lambda x: dirichlet(N, x), s, 1.0 / math.pi, N + 1.0) for s in ts])
    return _out(out[0] if np.ndim(t) == 0 else out.reshape(np.shape(t)), t)


def conj_partial_fourier(f: PeriodicSignal, N: int, t: ArrayLike, method: Method = "auto") -> ArrayLike:
    """
    U~_N f(t) = sum_{k=1}^{N} (a_k sin kt - b_k cos kt).

    The quadrature form is (1/(2pi)) int f(tau) D~_N(t - tau) dtau.
    """
    if N < 0:
        raise ValueError(f"order must be >= 0, got {N}")
    if _use_coefficients(f, N, method):
        conj = f.conjugate()
        return _fourier_sum(conj.cos_coeffs, conj.sin_coeffs, N, t)
    ts = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.array([
        _convolve(f, lambda x: conjugated_dirichlet(N, x), s, 0.5 / math.pi, N + 1.0) for s in ts
    ])
    return _out(out[0] if np.ndim(t) == 0 else out.reshape(np.shape(t)), t)


def fejer_mean_periodic(f: PeriodicSignal, M: int, t: ArrayLike, method: Method = "auto") -> ArrayLike:
    """
    (1/M) sum_{N=0}^{M-1} U_N f(t).

    Coefficient form weights harmonic k by (1 - k/M); the quadrature form
    is (1/(2pi)) int f(tau) K_M(t - tau) dtau with the Fejer kernel K_M.
    """
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    if _use_coefficients(f, M - 1, method):
        weights = 1.0 - np.arange(1, M) / M
        return _fourier_sum(f.cos_coeffs, f.sin_coeffs, M - 1, t, weights=weights)
    ts = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.array([
        _convolve(f, lambda x: fejer_kernel(M, x), s, 0.5 / math.pi, float(M)) for s in ts
    ])
    return _out(out[0] if np.ndim(t) == 0 else out.reshape(np.shape(t)), t)
