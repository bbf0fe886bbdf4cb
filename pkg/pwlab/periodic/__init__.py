"""Periodic contrast examples: Fourier partial sums, Fejer means and Hardy-space maxima."""

from pwlab.periodic.fourier import (
    PeriodicSignal,
    dirichlet,
    conjugated_dirichlet,
    partial_fourier,
    conj_partial_fourier,
    fejer_mean_periodic,
)
from pwlab.periodic.hardy import (
    PowerSeriesFn,
    extremal_power_series,
    c3_constant,
    hardy_radial_max,
    hardy_lower_bound,
)

__all__ = [
    "PeriodicSignal",
    "dirichlet",
    "conjugated_dirichlet",
    "partial_fourier",
    "conj_partial_fourier",
    "fejer_mean_periodic",
    "PowerSeriesFn",
    "extremal_power_series",
    "c3_constant",
    "hardy_radial_max",
    "hardy_lower_bound",
]
