"""
pwlab

Numerical laboratory for divergence of sampling series in Paley-Wiener spaces.

Builds the adversarial signals whose truncated Shannon, conjugated Shannon
and oversampled Hilbert series grow like eps_N log N, measures that growth
against the closed-form lower bounds, and shows the two ways out: Cesaro
means of the approximation sequence and convergent subsequences.
"""

from pwlab.schedule.epsilon import EpsilonSchedule
from pwlab.schedule.breaks import BreakPlan, pick_breaks, pick_breaks_covering
from pwlab.signals.samples import SampledSignal
from pwlab.signals.constructions import adversarial_nyquist, adversarial_oversampling
from pwlab.series.truncated import SeriesSpec, truncated_series
from pwlab.systems.lti import LtiSystem

__version__ = "0.1.0"

__all__ = [
    # Schedules and break plans
    "EpsilonSchedule",
    "BreakPlan",
    "pick_breaks",
    "pick_breaks_covering",
    # Signals
    "SampledSignal",
    "adversarial_nyquist",
    "adversarial_oversampling",
    # Series
    "SeriesSpec",
    "truncated_series",
    # Systems
    "LtiSystem",
]
