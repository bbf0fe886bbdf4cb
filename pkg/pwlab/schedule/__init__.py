"""Epsilon schedules, tail envelopes and break plans."""

from pwlab.schedule.epsilon import EpsilonSchedule, tail_envelope, envelope_values
from pwlab.schedule.breaks import BreakPlan, pick_breaks, pick_breaks_covering, weights

__all__ = [
    "EpsilonSchedule",
    "tail_envelope",
    "envelope_values",
    "BreakPlan",
    "pick_breaks",
    "pick_breaks_covering",
    "weights",
]
