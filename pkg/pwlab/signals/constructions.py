"""
Adversarial signal constructions.

Both constructions are truncated after K windows. Every dropped window
contributes a nonnegative amount to the divergence estimates, so the
truncated signals satisfy the same lower bounds with the truncated tail
sqrt(env(N_k-hat)) - sqrt(env(N_{K+1})).
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import List, Optional

import numpy as np
from scipy import optimize

from pwlab.errors import UnsupportedSignalError
from pwlab.schedule.breaks import BreakPlan
from pwlab.signals.samples import SampledSignal
from pwlab.signals.windows import fejer_square

# Steps allowed from the initial guess N / x*.
MAX_WALK = 10_000


def _plan_metadata(plan: BreakPlan) -> dict:
    data = {"breaks": list(plan.breaks), "K": plan.K}
    if plan.schedule is not None:
        data["schedule"] = plan.schedule.to_dict()
    return data


def adversarial_nyquist(plan: BreakPlan, span: Optional[int] = None) -> SampledSignal:
    """
    Integer samples of f1 = sum_k delta_k w_{N_{k+1}}.

    Args:
        plan: Break plan with K weights
        span: Materialise only |l| <= span (for plans with a far final
            break); the signal is then tagged span_limited

    Returns:
        Nonnegative, symmetric, nonincreasing samples with provenance nyquist_f1
    """
    full = 2 * plan.last_break - 1
    L = full if span is None else min(int(span), full)
    absk = np.abs(np.arange(-L, L + 1)).astype(float)
    values = np.zeros_like(absk)
    for delta, N in zip(plan.weights, plan.breaks[1:]):
        values += delta * np.clip(2.0 - absk / N, 0.0, 1.0)
    metadata = _plan_metadata(plan)
    metadata["span_limited"] = L < full
    return SampledSignal(a=1.0, support=L, values=values, provenance="nyquist_f1",
                         metadata=metadata)


@lru_cache(maxsize=1)
def _half_power_point() -> float:
    """x* in (0, 1) with sinc(x*)^2 = 1/2."""
    return optimize.brentq(lambda x: np.sinc(x) ** 2 - 0.5, 0.1, 0.9, xtol=1e-15)


def _smallest_M(N: int) -> int:
    M = max(1, math.ceil(N / _half_power_point()))
    for _ in range(MAX_WALK):
        if M > 1 and fejer_square(M - 1, N) >= 0.5:
            M -= 1
        elif fejer_square(M, N) < 0.5:
            M += 1
        else:
            return M
    raise UnsupportedSignalError(f"g_M({N}) = 1/2 is not resolved in double precision")


def choose_M_sequence(plan: BreakPlan) -> List[int]:
    """
    M_k = smallest integer with g_{M_k}(N_{k+1}) >= 1/2, for k = 1..K.

    Orders M <= 2N give g_M(N) <= (2/pi)^2, so the search starts just
    below N / x* and walks to the exact threshold.
    """
    return [_smallest_M(N) for N in plan.breaks[1:]]


def adversarial_oversampling(
    plan: BreakPlan,
    a: float,
    L: Optional[int] = None,
    span: Optional[int] = None,
) -> SampledSignal:
    """
    Samples f1(l/a) of f1 = sum_k delta_k g_{M_k}.

    Args:
        plan: Break plan
        a: Oversampling factor (> 1)
        L: Support; defaults to ceil(a (N_{K+1} + 1))
        span: Materialise only |l| <= span, tagging the signal span_limited

    Raises:
        ValueError: If a <= 1 or L is too small
    """
    if not a > 1:
        raise ValueError(f"oversampling factor must exceed 1, got {a}")
    needed = math.ceil(a * (plan.last_break + 1))
    if L is None:
        L = needed
    elif L < needed:
        raise ValueError(f"support {L} is below a (N_(K+1) + 1) = {needed}")
    width = L if span is None else min(int(span), L)
    t = np.arange(-width, width + 1) / a
    values = np.zeros_like(t)
    Ms = choose_M_sequence(plan)
    for delta, M in zip(plan.weights, Ms):
        values += delta * np.asarray(fejer_square(M, t))
    metadata = _plan_metadata(plan)
    metadata.update({"a": a, "M": Ms, "span_limited": width < L})
    return SampledSignal(a=a, support=width, values=values, provenance="oversampling_f1",
                         metadata=metadata)
