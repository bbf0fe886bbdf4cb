"""
Break indices and telescoping weights.

The adversarial signals are sums of windows placed at break indices
N_1 < N_2 < ... < N_{K+1} on which the tail envelope strictly drops. The
weight of the k-th window is the drop of the square-root envelope,
so the weights telescope.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from pwlab.errors import NoBreaksError, ScheduleError
from pwlab.schedule.epsilon import EpsilonSchedule, tail_envelope

# Guards greedy scans over unbounded families.
MAX_SCAN = 10_000_000
# Largest break index that is still an exact double.
MAX_BREAK = 2**53


@dataclass(frozen=True)
class BreakPlan:
    """
    Break indices with their envelope values and telescoping weights.

    Attributes:
        breaks: N_1 < ... < N_{K+1}
        envelope: Tail envelope evaluated at each break
        weights: delta_1..delta_K
        schedule: Schedule the plan was picked from (None for hand-built plans)
    """
    breaks: Tuple[int, ...]
    envelope: Tuple[float, ...]
    weights: Tuple[float, ...]
    schedule: Optional[EpsilonSchedule] = None

    def __post_init__(self):
        if len(self.breaks) < 2:
            raise ScheduleError("a break plan needs at least two breaks")
        if len(self.envelope) != len(self.breaks):
            raise ScheduleError("envelope and breaks differ in length")
        if len(self.weights) != len(self.breaks) - 1:
            raise ScheduleError("expected one weight per consecutive break pair")
        if any(b <= a for a, b in zip(self.breaks, self.breaks[1:])):
            raise ScheduleError("breaks must be strictly increasing")
        if any(b >= a for a, b in zip(self.envelope, self.envelope[1:])):
            raise ScheduleError("envelope must strictly decrease across breaks")
        if any(not w > 0 for w in self.weights):
            raise ScheduleError("weights must be positive")

    @classmethod
    def from_envelope(
        cls,
        breaks: Tuple[int, ...],
        envelope: Tuple[float, ...],
        schedule: Optional[EpsilonSchedule] = None,
    ) -> "BreakPlan":
        """Build a plan and derive its weights from the envelope values."""
        envelope = tuple(float(e) for e in envelope)
        roots = [math.sqrt(e) for e in envelope]
        deltas = tuple(a - b for a, b in zip(roots, roots[1:]))
        return cls(
            breaks=tuple(int(b) for b in breaks),
            envelope=envelope,
            weights=deltas,
            schedule=schedule,
        )

    @property
    def K(self) -> int:
        """Number of windows in the construction."""
        return len(self.weights)

    @property
    def last_break(self) -> int:
        return self.breaks[-1]

    def locate(self, N: int) -> Optional[int]:
        """
        Return k-hat (1-based) with N_k-hat <= N < N_{k-hat+1}.

        Returns None when N lies outside [N_1, N_{K+1}).
        """
        if N < self.breaks[0] or N >= self.breaks[-1]:
            return None
        return bisect.bisect_right(self.breaks, N)

    def truncated_tail(self, N: int) -> float:
        """
        Sum of the weights whose windows still cover [-N, N].

        Equals sqrt(env(N_k-hat)) - sqrt(env(N_{K+1})). Below N_1 every
        window counts; from N_{K+1} on no window does and the tail is 0.
        """
        if N >= self.breaks[-1]:
            return 0.0
        k_hat = self.locate(N) or 1
        return math.sqrt(self.envelope[k_hat - 1]) - math.sqrt(self.envelope[-1])


def weights(plan: BreakPlan) -> np.ndarray:
    """delta_k = sqrt(env(N_k)) - sqrt(env(N_{k+1})) for k = 1..K."""
    roots = np.sqrt(np.asarray(plan.envelope, dtype=float))
    return roots[:-1] - roots[1:]


def _greedy(schedule: EpsilonSchedule, count: int, stop_after: Optional[int]) -> List[int]:
    """
    Scan N = 1, 2, ... accepting every index whose envelope drops strictly.

    Stops after `count` breaks, or once a break exceeds `stop_after`.
    """
    limit = schedule.horizon or MAX_SCAN
    found = [1]
    current = tail_envelope(schedule, 1)
    N = 1
    while len(found) < count:
        if stop_after is not None and found[-1] > stop_after:
            break
        N += 1
        if N > limit:
            break
        value = tail_envelope(schedule, N)
        if value < current:
            found.append(N)
            current = value
    return found


def _close_plan(
    schedule: EpsilonSchedule, found: List[int], last_break: Optional[int]
) -> BreakPlan:
    if last_break is not None:
        if last_break > MAX_BREAK:
            raise ScheduleError(f"last_break {last_break} exceeds 2**53")
        if last_break <= found[-1]:
            raise ScheduleError(
                f"last_break {last_break} must exceed the greedy break {found[-1]}"
            )
        found = found + [int(last_break)]
    envelope = tuple(tail_envelope(schedule, n) for n in found)
    if any(b >= a for a, b in zip(envelope, envelope[1:])):
        raise ScheduleError("envelope does not drop at last_break")
    return BreakPlan.from_envelope(tuple(found), envelope, schedule=schedule)


def pick_breaks(
    schedule: EpsilonSchedule,
    K: int,
    last_break: Optional[int] = None,
) -> BreakPlan:
    """
    Pick K+1 break indices by a greedy scan from N = 1.

    Args:
        schedule: Null sequence to pick from
        K: Number of windows (at least 1)
        last_break: If given, N_{K+1} is placed here instead of at the next
            greedy drop; N_1..N_K are still greedy

    Returns:
        BreakPlan with K weights

    Raises:
        NoBreaksError: If the envelope does not drop often enough
    """
    if K < 1:
        raise ScheduleError(f"K must be at least 1, got {K}")
    wanted = K if last_break is not None else K + 1
    found = _greedy(schedule, wanted, stop_after=None)
    if len(found) < wanted:
        raise NoBreaksError(
            f"envelope drops only {len(found) - 1} times, {K} windows requested"
        )
    return _close_plan(schedule, found, last_break)


def pick_breaks_covering(
    schedule: EpsilonSchedule,
    N_max: int,
    last_break: Optional[int] = None,
) -> BreakPlan:
    """
    Pick greedy breaks until the plan covers every N <= N_max.

    Schedules with a finite horizon are covered as far as they reach; orders
    beyond the final break then carry a zero tail.
    """
    limit = schedule.horizon or MAX_SCAN
    found = _greedy(schedule, limit, stop_after=N_max)
    if len(found) < 2 and last_break is None:
        raise NoBreaksError("envelope never drops strictly")
    if last_break is not None and found[-1] >= last_break:
        found = [n for n in found if n < last_break]
    return _close_plan(schedule, found, last_break)
