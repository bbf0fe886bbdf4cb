"""
Windowed extremum search for truncated series.

"max over t" is realised as a symmetric grid scan, bounded Brent
refinement of the best grid points, and mandatory evaluation of the
analytic candidate points.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import numpy as np
from scipy import optimize

from pwlab.series.truncated import SeriesSpec, truncated_series

REFINE_XATOL = 1e-6


@dataclass(frozen=True)
class ExtremumResult:
    """
    Attributes:
        max_value, max_location: Largest value found and where
        min_value, min_location: Smallest value found and where
        window: Search window (lo, hi)
        step: Grid step
    """
    max_value: float
    max_location: float
    min_value: float
    min_location: float
    window: Tuple[float, float]
    step: float

    @property
    def peak(self) -> float:
        """max |value| over the search."""
        return max(abs(self.max_value), abs(self.min_value))


def default_window(N: int, a: float = 1.0, scale: float = 1.5) -> Tuple[float, float]:
    half = (N + 2) * max(1.0, 1.0 / a) * scale
    return (-half, half)


def proof_candidates(N: int, a: float = 1.0) -> List[float]:
    """t = +-(N+1), +-(N+1)/a, +-(N+1/2), +-(N+3/2)."""
    base = [N + 1.0, (N + 1.0) / a, N + 0.5, N + 1.5]
    return sorted({c for b in base for c in (b, -b)})


def _refine(spec: SeriesSpec, center: float, step: float, lo: float, hi: float,
            sign: float) -> Tuple[float, float]:
    left, right = max(lo, center - step), min(hi, center + step)
    res = optimize.minimize_scalar(
        lambda t: -sign * truncated_series(spec, t),
        bounds=(left, right),
        method="bounded",
        options={"xatol": REFINE_XATOL},
    )
    return float(res.x), float(truncated_series(spec, float(res.x)))


def extremum_search(
    spec: SeriesSpec,
    window: Optional[Tuple[float, float]] = None,
    step: float = 0.05,
    candidates: Optional[Iterable[float]] = None,
    refine: bool = True,
) -> ExtremumResult:
    """
    Locate the maximum and minimum of a truncated series.

    Args:
        spec: Series to search
        window: (lo, hi); defaults to +-(N+2) max(1, 1/a) 1.5
        step: Grid step (> 0)
        candidates: Points always evaluated; defaults to proof_candidates
        refine: Refine the best grid max and min to 1e-6 in t

    Returns:
        ExtremumResult whose max is >= the value at every candidate
    """
    if step <= 0:
        raise ValueError("step must be positive")
    lo, hi = window if window is not None else default_window(spec.N, spec.a)
    half = max(abs(lo), abs(hi))
    n = int(np.ceil(half / step))
    grid = step * np.arange(-n, n + 1)
    grid = grid[(grid >= lo) & (grid <= hi)]
    if candidates is None:
        candidates = proof_candidates(spec.N, spec.a)
    cand = np.array(sorted(c for c in candidates if lo <= c <= hi), dtype=float)

    points = np.concatenate([grid, cand])
    if points.size == 0:
        points = np.array([0.5 * (lo + hi)])
    values = np.asarray(truncated_series(spec, points), dtype=float)
    i_max, i_min = int(np.argmax(values)), int(np.argmin(values))
    best_max = (float(points[i_max]), float(values[i_max]))
    best_min = (float(points[i_min]), float(values[i_min]))

    if refine and grid.size:
        g_vals = values[: grid.size]
        for sign, idx in ((1.0, int(np.argmax(g_vals))), (-1.0, int(np.argmin(g_vals)))):
            loc, val = _refine(spec, float(grid[idx]), step, lo, hi, sign)
            if sign > 0 and val > best_max[1]:
                best_max = (loc, val)
            if sign < 0 and val < best_min[1]:
                best_min = (loc, val)

    return ExtremumResult(
        max_value=best_max[1],
        max_location=best_max[0],
        min_value=best_min[1],
        min_location=best_min[0],
        window=(float(lo), float(hi)),
        step=step,
    )
