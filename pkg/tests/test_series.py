"""
Tests for truncated series, extremum search, Cesaro means, threshold
operators and convergent subsequences.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pwlab.errors import SingularityError, SubsequenceNotFoundError, UnsupportedSignalError
from pwlab.schedule.breaks import pick_breaks, pick_breaks_covering
from pwlab.schedule.epsilon import EpsilonSchedule
from pwlab.series.cesaro import cesaro_mean, partial_sums, step_sequence
from pwlab.series.extremum import default_window, extremum_search, proof_candidates
from pwlab.series.subsequence import (
    OSCILLATION_CASES,
    SubsequenceResult,
    classify_oscillation,
    convergent_subsequence,
    find_approaching_index,
    scan_for_window,
)
from pwlab.series.threshold import threshold_cutoff, threshold_series
from pwlab.series.truncated import (
    SeriesSpec,
    kernel_abs_sum,
    peak_error,
    remainder_sum,
    truncated_series,
)
from pwlab.signals.constructions import adversarial_nyquist, adversarial_oversampling
from pwlab.signals.kernels import (
    cauchy_kernel,
    conjugated_kernel,
    hilbert_trapezoid_kernel,
    oversampling_correction_kernel,
    remainder_kernel,
    sinc_kernel,
)
from pwlab.signals.samples import SampledSignal, modulate
from pwlab.signals.spectrum import fejer_square_spectrum
from pwlab.signals.windows import fejer_square
from pwlab.systems.lti import LtiSystem, reference_output

N_RANGE = np.arange(1, 40001, dtype=float)
SCHEDULES = [
    EpsilonSchedule("log"),
    EpsilonSchedule("power", beta=0.5),
    EpsilonSchedule("geometric", ratio=0.5),
]
ORDERS = [1, 2, 3, 8, 17, 64]


def geometric_plan(K=2):
    return pick_breaks(EpsilonSchedule("geometric", ratio=0.5), K=K)


class TestTruncatedSeries:
    """Tests for SeriesSpec and truncated_series."""

    def test_conjugated_example(self):
        plan = geometric_plan()
        f1 = adversarial_nyquist(plan)
        spec = SeriesSpec(f1, conjugated_kernel(), 1)

        value = truncated_series(spec, 2.0)
        bound = math.log(5.0) / math.pi * plan.truncated_tail(1)

        # truncated tail at N = 1 is 2^-1/2 - 2^-3/2 = 2^-3/2
        assert bound == pytest.approx(math.log(5.0) / math.pi * 2.0 ** -1.5, rel=1e-12)
        assert bound == pytest.approx(0.1811254, abs=1e-7)
        assert value == pytest.approx(sum(plan.weights) * 8.0 / (3.0 * math.pi), rel=1e-12)
        assert value >= bound
        assert truncated_series(spec, -2.0) == pytest.approx(-value, rel=1e-12)

    @pytest.mark.parametrize("N", [1, 2, 4])
    def test_conjugated_bound_holds(self, N):
        plan = geometric_plan(K=6)
        spec = SeriesSpec(adversarial_nyquist(plan), conjugated_kernel(), N)
        bound = math.log(2 * N + 3) / math.pi * plan.truncated_tail(N)

        assert truncated_series(spec, N + 1.0) >= bound
        assert truncated_series(spec, -N - 1.0) <= -bound

    @pytest.mark.parametrize("N", [2, 3, 4, 5])
    def test_shannon_bound_on_modulated_signal(self, N):
        plan = geometric_plan(K=6)
        spec = SeriesSpec(modulate(adversarial_nyquist(plan)), sinc_kernel(), N)
        t_max, t_min = (N + 0.5, N + 1.5) if N % 2 == 0 else (N + 1.5, N + 0.5)
        bound = math.log((4 * N + 5) / 3.0) / math.pi * plan.truncated_tail(N)

        assert truncated_series(spec, t_max) >= bound
        assert truncated_series(spec, t_min) <= -bound

    @pytest.mark.parametrize("schedule", SCHEDULES, ids=lambda s: s.family)
    @pytest.mark.parametrize("N", ORDERS)
    def test_conjugated_bound_across_schedules(self, schedule, N):
        plan = pick_breaks_covering(schedule, max(ORDERS))
        spec = SeriesSpec(adversarial_nyquist(plan), conjugated_kernel(), N)
        bound = math.log(2 * N + 3) / math.pi * plan.truncated_tail(N)

        assert bound > 0
        assert truncated_series(spec, N + 1.0) >= bound
        assert truncated_series(spec, -N - 1.0) <= -bound

    @pytest.mark.parametrize("schedule", SCHEDULES, ids=lambda s: s.family)
    @pytest.mark.parametrize("N", ORDERS)
    def test_shannon_bound_across_schedules(self, schedule, N):
        plan = pick_breaks_covering(schedule, max(ORDERS))
        f1 = adversarial_nyquist(plan)
        spec = SeriesSpec(modulate(f1), sinc_kernel(), N)
        t_max, t_min = (N + 0.5, N + 1.5) if N % 2 == 0 else (N + 1.5, N + 0.5)
        l = np.arange(-N, N + 1)
        middle = float(f1.window(N) @ (1.0 / (N + 1.5 - l))) / math.pi
        bound = math.log((4 * N + 5) / 3.0) / math.pi * plan.truncated_tail(N)

        assert truncated_series(spec, t_max) >= middle - 1e-12
        assert middle >= bound
        assert truncated_series(spec, t_min) <= -bound

    def test_array_matches_scalar(self):
        spec = SeriesSpec(adversarial_nyquist(geometric_plan()), sinc_kernel(), 3)
        t = np.linspace(-6.0, 6.0, 25)

        values = truncated_series(spec, t)

        assert values.shape == t.shape
        assert values == pytest.approx([truncated_series(spec, float(x)) for x in t], abs=1e-13)

    def test_spec_validation(self):
        f1 = adversarial_nyquist(geometric_plan())

        with pytest.raises(ValueError):
            SeriesSpec(f1, sinc_kernel(), -1)

        with pytest.raises(ValueError):
            SeriesSpec(f1, sinc_kernel(), f1.support + 1)

    def test_pole_at_node(self):
        f = adversarial_oversampling(geometric_plan(), 2.0)
        spec = SeriesSpec(f, cauchy_kernel(), 2)

        with pytest.raises(SingularityError):
            truncated_series(spec, 0.5)

    def test_shannon_reconstruction_at_nodes(self):
        f1 = adversarial_nyquist(geometric_plan())
        spec = SeriesSpec(f1, sinc_kernel(), f1.support)

        for k in range(-f1.support, f1.support + 1):
            assert truncated_series(spec, float(k)) == pytest.approx(f1.value_at(k), abs=1e-14)

    def test_kernel_abs_sum_of_sinc_at_node(self):
        assert kernel_abs_sum(sinc_kernel(), 1.0, 10, 0.0) == pytest.approx(1.0, abs=1e-12)

    def test_kernel_abs_sum_grows(self):
        kernel = hilbert_trapezoid_kernel(2.0)
        sums = [kernel_abs_sum(kernel, 2.0, N, (N + 1) / 2.0) for N in (8, 64, 512)]

        assert sums[0] < sums[1] < sums[2]

    def test_peak_error(self):
        f = SampledSignal.from_function(lambda t: fejer_square(2, t), 20)
        window = (-3.0, 3.0)

        coarse = peak_error(f, sinc_kernel(), 4, lambda t: fejer_square(2, t), window)
        fine = peak_error(f, sinc_kernel(), 20, lambda t: fejer_square(2, t), window)

        assert fine < coarse
        with pytest.raises(ValueError):
            peak_error(f, sinc_kernel(), 4, lambda t: 0.0, (1.0, 0.0))


class TestOversamplingChain:
    """Tests for the direct sum and the oversampled Hilbert process."""

    def setup_method(self):
        self.a = 2.0
        self.plan = geometric_plan(K=6)
        self.f = adversarial_oversampling(self.plan, self.a)

    @pytest.mark.parametrize("N", [2, 4, 8])
    def test_direct_sum_bound(self, N):
        t = (N + 1) / self.a
        direct = truncated_series(SeriesSpec(self.f, cauchy_kernel(), N), t)
        bound = self.a / (2.0 * math.pi) * math.log(2 * N + 2) * self.plan.truncated_tail(N)

        assert direct >= bound

    @pytest.mark.parametrize("N", [2, 4, 8])
    def test_decomposition_identity(self, N):
        a, f = self.a, self.f
        t = (N + 1) / a
        positions = np.arange(-N, N + 1) / a
        values = f.window(N)

        hilbert = truncated_series(SeriesSpec(f, hilbert_trapezoid_kernel(a), N), t)
        direct = truncated_series(SeriesSpec(f, cauchy_kernel(), N), t)
        remainder = float(values @ remainder_kernel()(t - positions))
        correction = float(values @ oversampling_correction_kernel(a)(t - positions))

        assert a * hilbert == pytest.approx(direct - remainder + correction, rel=1e-10, abs=1e-12)

    @settings(max_examples=40, deadline=None)
    @given(
        a=st.floats(min_value=1.5, max_value=4.0),
        N=st.integers(min_value=1, max_value=40),
        seed=st.integers(min_value=0, max_value=10_000),
        side=st.sampled_from([-1.0, 1.0]),
    )
    def test_remainder_bound_on_trigonometric_signals(self, a, N, seed, side):
        rng = np.random.default_rng(seed)
        freqs = rng.uniform(0.0, math.pi, size=3)
        amps = rng.uniform(-1.0, 1.0, size=3)
        f = SampledSignal.from_function(
            lambda t: sum(c * np.cos(w * t) for c, w in zip(amps, freqs)), N, a=a
        )
        t = side * (N + 1) / a

        assert remainder_sum(f, N, t) < a * a * max(f.max_abs(), 1e-300)

    @pytest.mark.parametrize("a", [1.5, 2.0, 4.0])
    @pytest.mark.parametrize("N", [4, 16, 64])
    def test_chain_on_adversarial_signal(self, a, N):
        plan = pick_breaks_covering(EpsilonSchedule("log"), 64)
        f = adversarial_oversampling(plan, a)
        peak = f.max_abs()
        t = (N + 1) / a
        bound = a / (2.0 * math.pi) * math.log(2 * N + 2) * plan.truncated_tail(N)

        direct = truncated_series(SeriesSpec(f, cauchy_kernel(), N), t)
        hilbert = truncated_series(SeriesSpec(f, hilbert_trapezoid_kernel(a), N), t)
        slack = kernel_abs_sum(oversampling_correction_kernel(a), a, N, t)

        assert remainder_sum(f, N, t) < a * a * peak
        assert remainder_sum(f, N, -t) < a * a * peak
        assert direct >= bound
        assert truncated_series(SeriesSpec(f, cauchy_kernel(), N), -t) == pytest.approx(-direct)
        assert a * hilbert >= bound - (a * a + slack) * peak


class TestExtremum:
    """Tests for extremum_search."""

    def test_windows_and_candidates(self):
        assert default_window(3, 1.0, scale=1.0) == (-5.0, 5.0)
        assert default_window(3, 0.5, scale=1.0) == (-10.0, 10.0)
        assert proof_candidates(2, 1.0) == [-3.5, -3.0, -2.5, 2.5, 3.0, 3.5]

    def test_max_dominates_candidates(self):
        plan = geometric_plan(K=6)
        spec = SeriesSpec(adversarial_nyquist(plan), conjugated_kernel(), 4)

        result = extremum_search(spec, step=0.1)

        assert result.max_value >= truncated_series(spec, 5.0)
        assert result.min_value <= truncated_series(spec, -5.0)
        assert result.peak >= abs(result.min_value)
        # the conjugated series of an even signal is odd
        assert result.max_value == pytest.approx(-result.min_value, rel=1e-6)

    def test_step_must_be_positive(self):
        spec = SeriesSpec(adversarial_nyquist(geometric_plan()), sinc_kernel(), 1)

        with pytest.raises(ValueError):
            extremum_search(spec, step=0.0)


class TestCesaro:
    """Tests for the approximation sequence and its Cesaro means."""

    def test_unit_sample_sequence_is_constant(self):
        f = SampledSignal.unit_sample()
        sums = partial_sums(f, LtiSystem.identity(), 0.3, 5)

        assert sums.shape == (6,)
        assert sums == pytest.approx([np.sinc(0.3)] * 6)

    def test_unit_sample_mean_is_impulse_response(self):
        f = SampledSignal.unit_sample()

        for M in (1, 7, 50):
            mean = cesaro_mean(f, LtiSystem.hilbert(), M, 0.3)
            assert mean == pytest.approx(conjugated_kernel()(0.3), abs=1e-15)

    def test_means_converge_for_g2(self):
        f = SampledSignal.from_function(lambda t: fejer_square(2, t), 40)
        T = LtiSystem.hilbert()
        reference = reference_output(T, fejer_square_spectrum(2), 0.3)

        error = abs(cesaro_mean(f, T, 200, 0.3) - reference)

        assert error < 1e-2
        assert abs(cesaro_mean(f, T, 200, 0.3)) <= T.norm * f.pw1_norm()

    def test_partial_sums_beyond_support_repeat(self):
        f1 = adversarial_nyquist(geometric_plan())
        sums = partial_sums(f1, LtiSystem.hilbert(), 0.3, 12)

        assert sums[f1.support:] == pytest.approx([sums[f1.support]] * (13 - f1.support))

    def test_step_sequence(self):
        f1 = adversarial_nyquist(pick_breaks(EpsilonSchedule(), K=6))
        steps = step_sequence(f1, LtiSystem.hilbert(), 0.3, f1.support)

        assert steps.direct.shape == (f1.support,)
        assert steps.max_discrepancy < 1e-12

        with pytest.raises(ValueError):
            step_sequence(f1, LtiSystem.hilbert(), 0.3, f1.support + 1)

    def test_validation(self):
        f = SampledSignal.unit_sample()

        with pytest.raises(ValueError):
            cesaro_mean(f, LtiSystem.hilbert(), 0, 0.3)

        with pytest.raises(UnsupportedSignalError):
            partial_sums(SampledSignal.unit_sample(a=2.0), LtiSystem.hilbert(), 0.3, 3)


class TestThreshold:
    """Tests for threshold operators."""

    def test_cutoff(self):
        f1 = adversarial_nyquist(geometric_plan())

        assert threshold_cutoff(f1, 0.3) == 2
        assert threshold_cutoff(f1, f1.value_at(0)) == 2
        assert threshold_cutoff(f1, 0.2) == 3
        assert threshold_cutoff(f1, 1e-9) == f1.support

    def test_threshold_equals_truncated_series(self):
        f1 = adversarial_nyquist(pick_breaks(EpsilonSchedule(), K=10))
        t = np.linspace(-20.0, 20.0, 81) + 0.05

        for delta in (f1.value_at(0), f1.value_at(5), f1.value_at(f1.support)):
            N = threshold_cutoff(f1, delta)
            for kernel in (sinc_kernel(), conjugated_kernel()):
                kept = threshold_series(f1, delta, kernel, t)
                truncated = truncated_series(SeriesSpec(f1, kernel, N), t)
                assert np.max(np.abs(kept - truncated)) <= 1e-12

    def test_cutoff_monotone(self):
        f1 = adversarial_nyquist(pick_breaks(EpsilonSchedule(), K=10))
        deltas = np.geomspace(f1.value_at(f1.support), f1.value_at(0), 10)

        cutoffs = [threshold_cutoff(f1, d) for d in deltas]

        assert all(b <= a for a, b in zip(cutoffs, cutoffs[1:]))

    def test_validation(self):
        f1 = adversarial_nyquist(geometric_plan())

        with pytest.raises(ValueError):
            threshold_series(f1, 0.0, sinc_kernel(), 0.5)

        with pytest.raises(ValueError):
            threshold_cutoff(f1, 1.0)

        with pytest.raises(UnsupportedSignalError):
            threshold_cutoff(modulate(f1), 0.1)


class TestScanForWindow:
    """Tests for the single-tolerance search."""

    def test_direct(self):
        approach = scan_for_window([0.0, 5.0], target=0.0, mu=0.1)

        assert approach.index == 0
        assert approach.mode == "direct"

    def test_crossing(self):
        values = np.linspace(-1.0, 1.0, 101)

        approach = scan_for_window(values, target=0.0, mu=0.1)

        assert approach.mode == "crossing"
        assert approach.index in (40, 41)
        assert abs(values[approach.index]) <= 0.2

    def test_exhaustive(self):
        values = [-1.0, 1.0] * 5 + [0.05]

        approach = scan_for_window(values, target=0.0, mu=0.1)

        assert approach.mode == "exhaustive"
        assert approach.index == 10

    def test_lower_bound(self):
        values = [0.0, 3.0, 0.0, 3.0, 0.0]

        assert find_approaching_index(values, 0.0, 0.1, L=0) == 2
        assert find_approaching_index(values, 0.0, 0.1, L=2) == 4

        with pytest.raises(SubsequenceNotFoundError):
            find_approaching_index(values, 0.0, 0.1, L=4)

    def test_not_found(self):
        with pytest.raises(SubsequenceNotFoundError):
            scan_for_window([1.0, 2.0, 3.0], target=10.0, mu=0.5)

        with pytest.raises(ValueError):
            scan_for_window([1.0], target=1.0, mu=0.0)


class TestConvergentSubsequence:
    """Tests for convergent subsequences of divergent sequences."""

    @pytest.mark.parametrize(
        "values, target, mus",
        [
            (np.sin(np.sqrt(N_RANGE)), 0.5, [0.1, 0.05, 0.02, 0.01]),
            # steps of sqrt(N) sin(sqrt(N)) stay below 1/2, inside every 2mu window
            (np.sqrt(N_RANGE) * np.sin(np.sqrt(N_RANGE)), 0.0, [1.0, 0.5, 0.3, 0.25]),
            (np.sqrt(N_RANGE) * np.sin(np.sqrt(N_RANGE)), 37.0, [1.0, 0.5, 0.3, 0.25]),
        ],
    )
    def test_complete(self, values, target, mus):
        result = convergent_subsequence(values, target, mus)

        assert result.complete
        assert all(b > a for a, b in zip(result.indices, result.indices[1:]))
        for value, mu in zip(result.values, mus):
            assert abs(value - target) <= 2 * mu
        assert set(result.modes) <= {"direct", "crossing", "exhaustive"}

    @settings(max_examples=25, deadline=None)
    @given(target=st.floats(min_value=-0.9, max_value=0.9))
    def test_any_limit_point_of_bounded_oscillation(self, target):
        values = np.sin(np.sqrt(N_RANGE))
        mus = [0.1, 0.05, 0.02, 0.01]

        result = convergent_subsequence(values, target, mus)

        assert result.complete
        assert all(abs(v - target) <= 2 * m for v, m in zip(result.values, mus))

    def test_partial_result(self):
        values = np.arange(100, dtype=float)

        with pytest.raises(SubsequenceNotFoundError) as excinfo:
            convergent_subsequence(values, 50.5, [1.0, 0.1])

        partial = excinfo.value.partial
        assert partial.indices == [49]
        assert not partial.complete

    def test_schedule_validation(self):
        with pytest.raises(ValueError):
            convergent_subsequence([0.0], 0.0, [])

        with pytest.raises(ValueError):
            convergent_subsequence([0.0], 0.0, [0.1, 0.2])

        with pytest.raises(ValueError):
            convergent_subsequence([0.0], 0.0, [0.1, -0.1])

    def test_result_validation(self):
        with pytest.raises(ValueError):
            SubsequenceResult([3, 2], [0.0, 0.0], 0.0, [0.1, 0.1])

        with pytest.raises(ValueError):
            SubsequenceResult([1], [1.0], 0.0, [0.1])

    def test_to_dict(self):
        result = convergent_subsequence([0.5, 0.1, 0.0], 0.0, [0.2, 0.05])

        assert result.to_dict() == {
            "indices": [1, 2],
            "values": [0.1, 0.0],
            "target": 0.0,
            "mu_schedule": [0.2, 0.05],
            "modes": ["exhaustive", "direct"],
        }


class TestClassifyOscillation:
    """Tests for classify_oscillation."""

    @pytest.mark.parametrize(
        "values, expected",
        [
            (N_RANGE, "unbounded_above"),
            (-N_RANGE, "unbounded_below"),
            (np.sqrt(N_RANGE) * np.sin(np.sqrt(N_RANGE)), "unbounded_both"),
            (np.sin(np.sqrt(N_RANGE)), "bounded"),
            (1.0 / N_RANGE, "convergent"),
        ],
    )
    def test_cases(self, values, expected):
        assert classify_oscillation(values) == expected
        assert expected in OSCILLATION_CASES

    def test_short_prefix(self):
        assert classify_oscillation([1.0, 2.0]) == "convergent"
