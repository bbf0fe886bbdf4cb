"""
Radial maxima of power series on the unit disk.

For f(z) = sum_{n>=1} c_n z^n, M_r(f) = max_w |f(r e^{iw})|. The extremal
series c_n = C3(eps) n^{-(1/2+eps)} has unit l2 coefficient norm and
attains the lower bound C3(eps) sum n^{-(1/2+eps)} r^n on the positive
axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np
from scipy import optimize

ArrayLike = Union[float, np.ndarray]

DEFAULT_GRID = 4096


@dataclass(frozen=True)
class PowerSeriesFn:
    """
    Attributes:
        coefficients: c_1..c_D (complex allowed)
    """
    coefficients: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coefficients)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "coefficients", c)

    @classmethod
    def from_list(cls, coefficients: Sequence[complex]) -> "PowerSeriesFn":
        return cls(np.asarray(coefficients))

    @property
    def degree(self) -> int:
        return int(self.coefficients.size)

    @property
    def l2_norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.coefficients) ** 2)))

    def evaluate(self, r: float, omega: ArrayLike) -> ArrayLike:
        """f(r e^{iw}); complex."""
        z = r * np.exp(1j * np.asarray(omega, dtype=float))
        out = np.polynomial.polynomial.polyval(z, np.concatenate([[0.0], self.coefficients]))
        return complex(out) if np.ndim(omega) == 0 else out


def _check_radius(r: float) -> None:
    if not 0 < r < 1:
        raise ValueError(f"radius must lie in (0, 1), got {r}")


def extremal_power_series(eps: float, M_terms: int) -> PowerSeriesFn:
    """
    c_n = C3(eps) n^{-(1/2+eps)}, n = 1..M_terms, with
    C3(eps) = (sum n^{-(1+2eps)})^{-1/2} so that sum |c_n|^2 = 1.
    """
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")
    if M_terms < 1:
        raise ValueError("need at least one term")
    n = np.arange(1, M_terms + 1, dtype=float)
    c3 = 1.0 / math.sqrt(float(np.sum(n ** (-(1.0 + 2.0 * eps)))))
    return PowerSeriesFn(c3 * n ** (-(0.5 + eps)))


def c3_constant(eps: float, M_terms: int) -> float:
    """Truncated C3(eps); tends to (sum_{n>=1} n^{-(1+2eps)})^{-1/2}."""
    return float(extremal_power_series(eps, M_terms).coefficients[0])


def hardy_radial_max(
    f: PowerSeriesFn,
    r: float,
    grid_size: int = DEFAULT_GRID,
    refine: bool = True,
) -> float:
    """
    M_r(f) = max over w of |f(r e^{iw})|.

    The grid is grid_size equispaced angles (w = 0 always included); the
    best grid point is refined by bounded Brent search.
    """
    _check_radius(r)
    if grid_size < 1:
        raise ValueError("grid_size must be >= 1")
    grid = np.append(np.linspace(-math.pi, math.pi, grid_size, endpoint=False), 0.0)
    values = np.abs(f.evaluate(r, grid))
    i = int(np.argmax(values))
    best = float(values[i])
    if refine:
        step = 2.0 * math.pi / grid_size
        res = optimize.minimize_scalar(
            lambda w: -abs(f.evaluate(r, w)),
            bounds=(grid[i] - step, grid[i] + step),
            method="bounded",
            options={"xatol": 1e-10},
        )
        best = max(best, -float(res.fun))
    return best


def hardy_lower_bound(eps: float, M_terms: int, r: float) -> float:
    """C3(eps) sum_{n=1}^{M_terms} n^{-(1/2+eps)} r^n, the extremal series on the positive axis."""
    _check_radius(r)
    return float(abs(extremal_power_series(eps, M_terms).evaluate(r, 0.0)))
