"""
Finitely supported sample sequences on the grid k/a.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Union

import numpy as np

from pwlab.errors import ReportIOError, UnsupportedSignalError
from pwlab.quadrature import integrate_panels

PROVENANCES = (
    "nyquist_f1",
    "modulated_f2",
    "oversampling_f1",
    "filtered_f_sigma",
    "custom",
)


@dataclass
class SampledSignal:
    """
    Samples f(k/a) for |k| <= support; everything outside is 0.

    Attributes:
        a: Oversampling factor (>= 1)
        support: L, the samples cover k = -L..L
        values: Array of length 2L + 1, values[k + L] = f(k/a)
        provenance: Construction tag
        metadata: Construction parameters (plain JSON types)
    """
    a: float
    support: int
    values: np.ndarray
    provenance: str = "custom"
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.a < 1:
            raise UnsupportedSignalError(f"oversampling factor must be >= 1, got {self.a}")
        if self.support < 0:
            raise UnsupportedSignalError("support must be nonnegative")
        if self.values.shape != (2 * self.support + 1,):
            raise UnsupportedSignalError(
                f"expected {2 * self.support + 1} samples, got {self.values.shape}"
            )
        if self.provenance not in PROVENANCES:
            raise UnsupportedSignalError(f"unknown provenance {self.provenance!r}")

    @classmethod
    def unit_sample(cls, a: float = 1.0) -> "SampledSignal":
        """f(0) = 1, all other samples 0."""
        return cls(a=a, support=0, values=np.array([1.0]))

    @classmethod
    def from_function(
        cls,
        fn: Callable[[np.ndarray], np.ndarray],
        support: int,
        a: float = 1.0,
        provenance: str = "custom",
    ) -> "SampledSignal":
        """Sample a vectorised function at k/a for |k| <= support."""
        k = np.arange(-support, support + 1)
        return cls(a=a, support=support, values=np.asarray(fn(k / a), dtype=float),
                   provenance=provenance)

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self.support, self.support + 1)

    @property
    def times(self) -> np.ndarray:
        return self.indices / self.a

    def value_at(self, k: Union[int, np.ndarray]) -> Union[float, np.ndarray]:
        """Sample at index k (0 outside the support)."""
        k_arr = np.asarray(k, dtype=int)
        inside = np.abs(k_arr) <= self.support
        picked = self.values[np.where(inside, k_arr + self.support, 0)]
        out = np.where(inside, picked, 0.0)
        return float(out) if np.ndim(k) == 0 else out

    def window(self, N: int) -> np.ndarray:
        """Samples for k = -N..N (zero-padded beyond the support)."""
        return np.asarray(self.value_at(np.arange(-N, N + 1)), dtype=float)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values))) if self.values.size else 0.0

    def spectrum(self, omega):
        """
        Spectrum of the bandlimited interpolant: (1/a) sum_k f(k/a) e^{-i k w / a}.

        Real for symmetric signals; the real part is returned.
        """
        w = np.asarray(omega, dtype=float)
        k = self.indices
        phase = np.outer(w, k) / self.a
        out = (np.cos(phase) @ self.values) / self.a
        out = np.where(np.abs(w) <= self.a * math.pi, out, 0.0)
        return float(out[0]) if np.ndim(omega) == 0 else out.reshape(np.shape(omega))

    def pw1_norm(self) -> float:
        """
        (1/2pi) int |f-hat| over [-a pi, a pi], for symmetric real signals.
        """
        if not np.allclose(self.values, self.values[::-1]):
            raise UnsupportedSignalError("pw1_norm needs a symmetric signal")
        total = integrate_panels(
            lambda w: np.abs(self.spectrum(w)),
            0.0,
            self.a * math.pi,
            oscillation=self.support / self.a,
            tol=1e-10,
        )
        return total / math.pi

    def to_rows(self):
        for k, v in zip(self.indices, self.values):
            yield int(k), float(k / self.a), float(v)

    def to_csv(self, path: str) -> None:
        """Write columns k, t, value."""
        try:
            with open(path, "w", newline="", encoding="utf-8") as fh:
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(["k", "t", "value"])
                for row in self.to_rows():
                    writer.writerow([row[0], repr(row[1]), repr(row[2])])
        except OSError as exc:
            raise ReportIOError(path, str(exc)) from exc

    def to_dict(self) -> Dict[str, Any]:
        return {
            "a": self.a,
            "support": self.support,
            "provenance": self.provenance,
            "metadata": self.metadata,
            "values": self.values.tolist(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SampledSignal":
        return cls(
            a=float(data["a"]),
            support=int(data["support"]),
            values=np.asarray(data["values"], dtype=float),
            provenance=data.get("provenance", "custom"),
            metadata=dict(data.get("metadata", {})),
        )

    def to_json(self, path: str) -> None:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(self.to_dict(), fh, indent=2)
        except OSError as exc:
            raise ReportIOError(path, str(exc)) from exc


def modulate(f: SampledSignal) -> SampledSignal:
    """
    f2(k) = (-1)^k f(k).

    Raises:
        UnsupportedSignalError: For oversampled signals
    """
    if f.a != 1:
        raise UnsupportedSignalError("modulation is defined for Nyquist-rate samples only")
    signs = np.where(f.indices % 2 == 0, 1.0, -1.0)
    return SampledSignal(
        a=1.0,
        support=f.support,
        values=signs * f.values,
        provenance="modulated_f2",
        metadata=dict(f.metadata, modulated_from=f.provenance),
    )
