"""
Quadrature helpers shared by the spectral code.

Two schemes are provided:

* ``integrate`` wraps QUADPACK (``scipy.integrate.quad``) for scalar
  callables and turns its warnings into QuadratureToleranceError.
* ``integrate_panels`` is a composite Gauss-Legendre rule for vectorised
  integrands. Panels never straddle a declared kink and are no wider than
  pi / (4 (1 + |t| + oscillation)), where t is the transform variable and
  oscillation bounds the integrand's own oscillation rate. Each panel is
  integrated at two orders; panels are halved until the orders agree.
"""

from __future__ import annotations

import logging
import math
import warnings
from typing import Callable, Iterable, Optional, Sequence

import numpy as np
from scipy import integrate as sp_integrate
from scipy.integrate import IntegrationWarning
from typing_extensions import Literal

from pwlab.errors import QuadratureToleranceError

LOGGER = logging.getLogger(__name__)

ArrayFn = Callable[[np.ndarray], np.ndarray]

LOW_ORDER = 20
HIGH_ORDER = 30
MAX_HALVINGS = 6
MAX_PANELS = 200_000

_NODES = {n: np.polynomial.legendre.leggauss(n) for n in (LOW_ORDER, HIGH_ORDER)}


def integrate(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    points: Optional[Sequence[float]] = None,
    epsabs: float = 1e-13,
    epsrel: float = 1e-11,
    limit: int = 400,
) -> float:
    """
    Adaptive Gauss-Kronrod quadrature of a scalar callable.

    Raises:
        QuadratureToleranceError: If QUADPACK reports that the tolerance
            was not reached
    """
    if hi == lo:
        return 0.0
    inner = None
    if points:
        inner = sorted(p for p in points if lo < p < hi) or None
    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            value, _ = sp_integrate.quad(
                lambda x: float(fn(x)),
                lo,
                hi,
                points=inner,
                epsabs=epsabs,
                epsrel=epsrel,
                limit=limit,
            )
        except IntegrationWarning as exc:
            raise QuadratureToleranceError(
                f"quad on [{lo}, {hi}] did not converge: {exc}"
            ) from exc
    return float(value)


def panel_edges(
    lo: float,
    hi: float,
    t: float = 0.0,
    kinks: Iterable[float] = (),
    oscillation: float = 0.0,
) -> np.ndarray:
    """
    Split [lo, hi] into panels respecting kinks and the oscillation width.

    Returns:
        Sorted array of panel edges (first lo, last hi)
    """
    width = math.pi / (4.0 * (1.0 + abs(t) + oscillation))
    if (hi - lo) / width > MAX_PANELS:
        width = (hi - lo) / MAX_PANELS
        LOGGER.debug("panel count capped at %d on [%g, %g]", MAX_PANELS, lo, hi)
    knots = sorted({lo, hi, *(k for k in kinks if lo < k < hi)})
    pieces = []
    for a, b in zip(knots, knots[1:]):
        n = max(1, math.ceil((b - a) / width))
        pieces.append(np.linspace(a, b, n + 1)[:-1])
    pieces.append(np.array([hi]))
    return np.concatenate(pieces)


def _gauss(fn: ArrayFn, edges: np.ndarray, order: int) -> float:
    x, w = _NODES[order]
    a = edges[:-1, None]
    half = 0.5 * (edges[1:] - edges[:-1])[:, None]
    nodes = a + half * (x[None, :] + 1.0)
    values = np.asarray(fn(nodes.ravel()), dtype=float).reshape(nodes.shape)
    return float(np.sum(values * w[None, :] * half))


def integrate_panels(
    fn: ArrayFn,
    lo: float,
    hi: float,
    t: float = 0.0,
    kinks: Iterable[float] = (),
    oscillation: float = 0.0,
    tol: float = 1e-12,
) -> float:
    """
    Composite Gauss-Legendre quadrature of a vectorised integrand.

    Args:
        fn: Integrand accepting and returning 1-d arrays
        lo, hi: Integration limits
        t: Transform variable used to size the panels
        kinks: Points where the integrand is not smooth
        oscillation: Extra oscillation rate of the integrand itself
        tol: Agreement required between the two Gauss orders, relative to
            max(1, |result|)

    Raises:
        QuadratureToleranceError: If the orders still disagree after
            repeated panel halving
    """
    if hi <= lo:
        return 0.0
    kinks = tuple(kinks)
    edges = panel_edges(lo, hi, t=t, kinks=kinks, oscillation=oscillation)
    for _ in range(MAX_HALVINGS + 1):
        coarse = _gauss(fn, edges, LOW_ORDER)
        fine = _gauss(fn, edges, HIGH_ORDER)
        if abs(fine - coarse) <= tol * max(1.0, abs(fine)):
            return fine
        mids = 0.5 * (edges[1:] + edges[:-1])
        edges = np.sort(np.concatenate([edges, mids]))
        LOGGER.debug("refining to %d panels on [%g, %g]", len(edges) - 1, lo, hi)
    raise QuadratureToleranceError(
        f"panel quadrature on [{lo}, {hi}] stalled at discrepancy {abs(fine - coarse):.3e}"
    )


def fourier_integral(
    fn: ArrayFn,
    t: float,
    lo: float,
    hi: float,
    kind: Literal["cos", "sin"] = "cos",
    kinks: Iterable[float] = (),
    oscillation: float = 0.0,
    tol: float = 1e-12,
) -> float:
    """Integral of fn(w) cos(w t) (or sin) over [lo, hi]."""
    trig = np.cos if kind == "cos" else np.sin
    if kind == "sin" and t == 0:
        return 0.0
    return integrate_panels(
        lambda w: fn(w) * trig(w * t),
        lo,
        hi,
        t=t,
        kinks=kinks,
        oscillation=oscillation,
        tol=tol,
    )
