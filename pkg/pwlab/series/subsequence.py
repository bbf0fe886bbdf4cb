"""
Convergent subsequences of a divergent approximation sequence.

Along the sequence (T_N f)(t) the steps f(N) h(t-N) + f(-N) h(t+N) tend to
zero. Once they stay below mu/2, any passage from below the window
[target - 2mu, target + 2mu] to above it (or back) has to land inside the
window, so a subsequence converging to any value between the lower and
upper limits exists. On a finite prefix the liminf/limsup cases cannot be
told apart; the search works on the observed crossings and falls back to a
plain scan when the step condition fails.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Sequence

import numpy as np
from typing_extensions import Literal

from pwlab.errors import SubsequenceNotFoundError

LOGGER = logging.getLogger(__name__)

ApproachMode = Literal["direct", "crossing", "exhaustive"]

OSCILLATION_CASES = (
    "convergent",
    "bounded",
    "unbounded_below",
    "unbounded_above",
    "unbounded_both",
)


@dataclass(frozen=True)
class Approach:
    """
    Attributes:
        index: First index past the lower bound inside the window
        mode: direct (the first candidate already qualifies), crossing
            (found while the step condition held between the first index
            and the crossing), exhaustive (step condition violated)
    """
    index: int
    mode: ApproachMode


def _in_window(value: float, target: float, mu: float) -> bool:
    return abs(value - target) <= 2.0 * mu


def scan_for_window(values: Sequence[float], target: float, mu: float, L: int = -1) -> Approach:
    """
    Smallest index N > L with values[N] in [target - 2mu, target + 2mu].

    Raises:
        ValueError: If mu <= 0
        SubsequenceNotFoundError: If no index past L qualifies
    """
    if not mu > 0:
        raise ValueError(f"tolerance must be positive, got {mu}")
    seq = np.asarray(values, dtype=float)
    start = L + 1
    if start >= seq.size:
        raise SubsequenceNotFoundError(f"no values past index {L}")
    tail = seq[start:]
    inside = np.abs(tail - target) <= 2.0 * mu
    hits = np.flatnonzero(inside)
    if hits.size == 0:
        raise SubsequenceNotFoundError(
            f"no index past {L} within 2*{mu} of {target} (scanned up to {seq.size - 1})"
        )
    first = int(hits[0])
    if first == 0:
        return Approach(start, "direct")

    # First passage to the other side of the window.
    if tail[0] < target:
        opposite = tail > target + 2.0 * mu
    else:
        opposite = tail < target - 2.0 * mu
    crossings = np.flatnonzero(opposite)
    if crossings.size:
        crossing = int(crossings[0])
        steps = np.abs(np.diff(tail[: crossing + 1]))
        if np.all(steps <= 0.5 * mu):
            return Approach(start + first, "crossing")
    LOGGER.debug("step condition failed past index %d; exhaustive scan", L)
    return Approach(start + first, "exhaustive")


def find_approaching_index(values: Sequence[float], target: float, mu: float, L: int = -1) -> int:
    """Index returned by scan_for_window."""
    return scan_for_window(values, target, mu, L).index


@dataclass
class SubsequenceResult:
    """
    Attributes:
        indices: Strictly increasing indices
        values: values[indices[j]]
        target: Limit the subsequence approaches
        mu_schedule: Tolerances; values[j] lies within 2 mu_schedule[j] of target
        modes: How each index was found
    """
    indices: List[int]
    values: List[float]
    target: float
    mu_schedule: List[float]
    modes: List[str] = field(default_factory=list)

    def __post_init__(self):
        if len(self.indices) != len(self.values):
            raise ValueError("indices and values differ in length")
        if len(self.indices) > len(self.mu_schedule):
            raise ValueError("more indices than tolerances")
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError(f"indices must strictly increase: {self.indices}")
        for value, mu in zip(self.values, self.mu_schedule):
            if not _in_window(value, self.target, mu):
                raise ValueError(f"value {value} outside 2*{mu} window around {self.target}")

    @property
    def complete(self) -> bool:
        return len(self.indices) == len(self.mu_schedule)

    def to_dict(self) -> dict:
        return {
            "indices": list(self.indices),
            "values": list(self.values),
            "target": self.target,
            "mu_schedule": list(self.mu_schedule),
            "modes": list(self.modes),
        }


def convergent_subsequence(
    values: Sequence[float],
    target: float,
    mu_schedule: Sequence[float],
    L0: int = -1,
) -> SubsequenceResult:
    """
    Strictly increasing indices N_1 < N_2 < ... with
    |values[N_j] - target| <= 2 mu_j.

    Args:
        values: Sequence indexed from 0
        target: Limit to approach; the Cesaro limit or any value between
            the observed lower and upper limits
        mu_schedule: Positive nonincreasing tolerances
        L0: Indices start above this bound

    Raises:
        ValueError: If the schedule is empty, nonpositive or increasing
        SubsequenceNotFoundError: When a tolerance cannot be met; the
            exception's ``partial`` holds the indices found so far
    """
    mus = [float(m) for m in mu_schedule]
    if not mus:
        raise ValueError("empty tolerance schedule")
    if any(m <= 0 for m in mus):
        raise ValueError("tolerances must be positive")
    if any(b > a for a, b in zip(mus, mus[1:])):
        raise ValueError("tolerances must not increase")

    seq = np.asarray(values, dtype=float)
    indices: List[int] = []
    found: List[float] = []
    modes: List[str] = []
    L = L0
    for j, mu in enumerate(mus):
        try:
            approach = scan_for_window(seq, target, mu, L)
        except SubsequenceNotFoundError as exc:
            partial = SubsequenceResult(indices, found, target, mus, modes)
            raise SubsequenceNotFoundError(
                f"tolerance {j} ({mu}) not met: {exc}", partial=partial
            ) from exc
        indices.append(approach.index)
        found.append(float(seq[approach.index]))
        modes.append(approach.mode)
        L = approach.index
    return SubsequenceResult(indices, found, target, mus, modes)


def classify_oscillation(values: Sequence[float], tol: float = 1e-3) -> str:
    """
    Which limit behaviour a finite prefix resembles.

    The prefix is split in halves. A late half that stays within tol is
    "convergent"; otherwise the late half setting new highs (or lows) by
    more than a tenth of the early range counts as growth in that
    direction.
    """
    seq = np.asarray(values, dtype=float)
    if seq.size < 4:
        return "convergent"
    early, late = seq[: seq.size // 2], seq[seq.size // 2:]
    if np.ptp(late) <= tol:
        return "convergent"
    margin = 0.1 * max(float(np.ptp(early)), tol)
    up = late.max() > early.max() + margin
    down = late.min() < early.min() - margin
    if up and down:
        return "unbounded_both"
    if up:
        return "unbounded_above"
    if down:
        return "unbounded_below"
    return "bounded"
