"""
Null sequences driving the adversarial constructions.

An EpsilonSchedule is a positive sequence eps_N -> 0 indexed from N = 1.
Every schedule declares the index from which it is nonincreasing, which
makes the tail envelope computable with a finite scan.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Optional, Tuple

import numpy as np
from typing_extensions import Literal

from pwlab.errors import ScheduleError

Family = Literal["power", "log", "table", "geometric"]

FAMILIES: Tuple[str, ...] = ("power", "log", "table", "geometric")


@dataclass(frozen=True)
class EpsilonSchedule:
    """
    A positive null sequence eps_1, eps_2, ...

    Attributes:
        family: "power" (N^-beta), "log" (1/log(N+2)), "table" (explicit
            finite list) or "geometric" (ratio^N)
        beta: Exponent of the power family
        ratio: Base of the geometric family, in (0, 1)
        values: Entries of a table schedule, values[0] is eps_1
        tail_monotone_from: Index from which eps is nonincreasing
    """
    family: str = "log"
    beta: float = 1.0
    ratio: float = 0.5
    values: Tuple[float, ...] = field(default_factory=tuple)
    tail_monotone_from: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ScheduleError(f"unknown schedule family {self.family!r}")
        if self.tail_monotone_from < 1:
            raise ScheduleError("tail_monotone_from must be at least 1")
        if self.family == "power" and not self.beta > 0:
            raise ScheduleError("power family needs beta > 0")
        if self.family == "geometric" and not 0 < self.ratio < 1:
            raise ScheduleError("geometric family needs 0 < ratio < 1")
        if self.family == "table":
            object.__setattr__(self, "values", tuple(float(v) for v in self.values))
            if not self.values:
                raise ScheduleError("table schedule has no entries")
            bad = [v for v in self.values if not (v > 0 and math.isfinite(v))]
            if bad:
                raise ScheduleError(f"table schedule has nonpositive entry {bad[0]!r}")
            if self.tail_monotone_from > len(self.values):
                raise ScheduleError("tail_monotone_from lies beyond the table")
            tail = self.values[self.tail_monotone_from - 1:]
            if any(b > a for a, b in zip(tail, tail[1:])):
                raise ScheduleError(
                    f"table increases after index {self.tail_monotone_from}"
                )

    @property
    def horizon(self) -> Optional[int]:
        """Largest index the schedule can evaluate, or None if unbounded."""
        if self.family == "table":
            return len(self.values)
        if self.family == "geometric":
            # ratio^N must stay a normal double
            return int(math.log(sys.float_info.min) / math.log(self.ratio))
        return None

    def evaluate(self, N: int) -> float:
        """Return eps_N."""
        if N < 1:
            raise ScheduleError(f"schedule index must be >= 1, got {N}")
        horizon = self.horizon
        if horizon is not None and N > horizon:
            raise ScheduleError(f"index {N} beyond schedule horizon {horizon}")
        if self.family == "power":
            return float(N) ** (-self.beta)
        if self.family == "log":
            return 1.0 / math.log(N + 2)
        if self.family == "geometric":
            return self.ratio ** N
        return self.values[N - 1]

    def evaluate_many(self, indices: Iterable[int]) -> np.ndarray:
        """Vectorised evaluate over a list of indices."""
        return np.array([self.evaluate(int(n)) for n in indices], dtype=float)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "family": self.family,
            "tail_monotone_from": self.tail_monotone_from,
        }
        if self.family == "power":
            data["beta"] = self.beta
        elif self.family == "geometric":
            data["ratio"] = self.ratio
        elif self.family == "table":
            data["values"] = list(self.values)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "EpsilonSchedule":
        """Build a schedule from its JSON form."""
        if "family" not in data:
            raise ScheduleError("schedule needs a 'family'")
        return cls(
            family=data["family"],
            beta=float(data.get("beta", 1.0)),
            ratio=float(data.get("ratio", 0.5)),
            values=tuple(data.get("values", ())),
            tail_monotone_from=int(data.get("tail_monotone_from", 1)),
        )


def tail_envelope(schedule: EpsilonSchedule, N: int) -> float:
    """
    Compute the tail envelope max_{M >= N} eps_M.

    Past tail_monotone_from the sequence is its own envelope, so only the
    finite stretch N..tail_monotone_from needs scanning.
    """
    start = schedule.tail_monotone_from
    if N >= start:
        return schedule.evaluate(N)
    return max(schedule.evaluate(M) for M in range(N, start + 1))


def envelope_values(schedule: EpsilonSchedule, indices: Iterable[int]) -> np.ndarray:
    """Tail envelope evaluated at several indices."""
    return np.array([tail_envelope(schedule, int(n)) for n in indices], dtype=float)
