"""
Parallel sweep executor.

Evaluates one task per sweep key (an order N, a Cesaro length M, a
threshold delta, ...) on a thread or process pool. Failures of single keys
are collected instead of aborting the sweep.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Generic, List, Optional, Sequence, Tuple, TypeVar

LOGGER = logging.getLogger(__name__)

K = TypeVar("K")
R = TypeVar("R")


@dataclass(frozen=True)
class SweepConfig:
    """
    Configuration for sweep execution.

    Attributes:
        max_workers: Maximum parallel workers (None = CPU count)
        executor_type: "thread" or "process"; process pools need a
            picklable task
        timeout_seconds: Per-key timeout
        show_progress: Log progress every 10%
    """
    max_workers: Optional[int] = None
    executor_type: str = "thread"
    timeout_seconds: Optional[float] = None
    show_progress: bool = True

    def __post_init__(self):
        if self.executor_type not in ("thread", "process"):
            raise ValueError("executor_type must be 'thread' or 'process'")
        if self.max_workers is not None and self.max_workers < 1:
            raise ValueError("max_workers must be at least 1")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SweepConfig":
        return cls(**data)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "max_workers": self.max_workers,
            "executor_type": self.executor_type,
            "timeout_seconds": self.timeout_seconds,
            "show_progress": self.show_progress,
        }


@dataclass
class SweepResult(Generic[K, R]):
    """
    Result of a sweep.

    Attributes:
        results: (key, result) pairs sorted by key
        config: Configuration used
        total_time_seconds: Wall time of the sweep
        errors: One dict per failed key with key, error and error_type
    """
    results: List[Tuple[K, R]]
    config: SweepConfig
    total_time_seconds: float
    errors: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def successful_runs(self) -> int:
        return len(self.results)

    @property
    def failed_runs(self) -> int:
        return len(self.errors)


def _error_entry(key: Any, exc: BaseException) -> Dict[str, Any]:
    return {"key": key, "error": str(exc), "error_type": type(exc).__name__}


class SweepExecutor(Generic[K, R]):
    """
    Runs a task over every key of a sweep.

    Example:
        executor = SweepExecutor(lambda N: evaluate(N), SweepConfig(max_workers=4))
        result = executor.run([8, 16, 32])
    """

    def __init__(
        self,
        task: Callable[[K], R],
        config: Optional[SweepConfig] = None,
        progress_callback: Optional[Callable[[int, int], None]] = None,
    ):
        """
        Args:
            task: Function of a single key
            config: Sweep configuration
            progress_callback: Called with (completed, total)
        """
        self.task = task
        self.config = config or SweepConfig()
        self.progress_callback = progress_callback

    def _report(self, completed: int, total: int) -> None:
        if self.progress_callback:
            self.progress_callback(completed, total)
        if self.config.show_progress and completed % max(1, total // 10) == 0:
            LOGGER.info("progress: %d/%d (%.0f%%)", completed, total, completed / total * 100)

    def run(self, keys: Sequence[K]) -> SweepResult[K, R]:
        """Evaluate every key on the configured pool."""
        start_time = time.time()
        results: List[Tuple[K, R]] = []
        errors: List[Dict[str, Any]] = []
        total = len(keys)

        pool_class = ProcessPoolExecutor if self.config.executor_type == "process" else ThreadPoolExecutor
        completed = 0
        with pool_class(max_workers=self.config.max_workers) as pool:
            future_to_key = {pool.submit(self.task, key): key for key in keys}
            for future in as_completed(future_to_key):
                key = future_to_key[future]
                completed += 1
                try:
                    results.append((key, future.result(timeout=self.config.timeout_seconds)))
                except Exception as exc:
                    LOGGER.warning("key %r failed: %s", key, exc)
                    errors.append(_error_entry(key, exc))
                self._report(completed, total)

        results.sort(key=lambda item: item[0])
        return SweepResult(results, self.config, time.time() - start_time, errors)

    def run_sequential(self, keys: Sequence[K]) -> SweepResult[K, R]:
        """Evaluate keys one after another (for debugging)."""
        start_time = time.time()
        results: List[Tuple[K, R]] = []
        errors: List[Dict[str, Any]] = []
        total = len(keys)

        for i, key in enumerate(keys):
            try:
                results.append((key, self.task(key)))
            except Exception as exc:
                LOGGER.warning("key %r failed: %s", key, exc)
                errors.append(_error_entry(key, exc))
            self._report(i + 1, total)

        results.sort(key=lambda item: item[0])
        return SweepResult(results, self.config, time.time() - start_time, errors)
