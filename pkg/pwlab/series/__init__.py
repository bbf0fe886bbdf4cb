"""Truncated series, extremum search, Cesaro means, thresholds and subsequences."""

from pwlab.series.truncated import (
    SeriesSpec,
    series_sum,
    truncated_series,
    peak_error,
    remainder_sum,
    kernel_abs_sum,
)
from pwlab.series.extremum import (
    ExtremumResult,
    default_window,
    proof_candidates,
    extremum_search,
)
from pwlab.series.cesaro import StepSequence, partial_sums, cesaro_mean, step_sequence
from pwlab.series.threshold import threshold_series, threshold_cutoff
from pwlab.series.subsequence import (
    Approach,
    SubsequenceResult,
    scan_for_window,
    find_approaching_index,
    convergent_subsequence,
    classify_oscillation,
    OSCILLATION_CASES,
)

__all__ = [
    "SeriesSpec",
    "series_sum",
    "truncated_series",
    "peak_error",
    "remainder_sum",
    "kernel_abs_sum",
    "ExtremumResult",
    "default_window",
    "proof_candidates",
    "extremum_search",
    "StepSequence",
    "partial_sums",
    "cesaro_mean",
    "step_sequence",
    "threshold_series",
    "threshold_cutoff",
    "Approach",
    "SubsequenceResult",
    "scan_for_window",
    "find_approaching_index",
    "convergent_subsequence",
    "classify_oscillation",
    "OSCILLATION_CASES",
]
