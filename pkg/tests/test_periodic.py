"""
Tests for periodic partial sums, Fejer means and Hardy-space maxima.
"""

import math

import numpy as np
import pytest
from scipy import special

from pwlab.periodic.fourier import (
    PeriodicSignal,
    conj_partial_fourier,
    conjugated_dirichlet,
    dirichlet,
    fejer_mean_periodic,
    partial_fourier,
)
from pwlab.periodic.hardy import (
    PowerSeriesFn,
    c3_constant,
    extremal_power_series,
    hardy_lower_bound,
    hardy_radial_max,
)

GRID = np.linspace(-math.pi, math.pi, 64, endpoint=False)


def exp_cos(t):
    return np.exp(np.cos(t))


def exp_cos_partial(N, t):
    # exp(cos t) = I_0(1) + 2 sum_k I_k(1) cos(kt)
    k = np.arange(1, N + 1)
    return special.iv(0, 1.0) + 2.0 * np.cos(np.multiply.outer(t, k)) @ special.iv(k, 1.0)


class TestKernels:
    """Tests for the Dirichlet kernels."""

    def test_dirichlet_matches_cosine_sum(self):
        t = GRID + 0.01
        expected = 0.5 + sum(np.cos(k * t) for k in range(1, 6))

        assert dirichlet(5, t) == pytest.approx(expected, abs=1e-12)
        assert dirichlet(5, 0.0) == 5.5

    def test_conjugated_dirichlet_matches_sine_sum(self):
        t = GRID + 0.01
        expected = 2.0 * sum(np.sin(k * t) for k in range(1, 6))

        assert conjugated_dirichlet(5, t) == pytest.approx(expected, abs=1e-12)
        assert conjugated_dirichlet(5, 0.0) == 0.0

    def test_negative_order(self):
        with pytest.raises(ValueError):
            dirichlet(-1, 0.5)

        with pytest.raises(ValueError):
            conjugated_dirichlet(-1, 0.5)


class TestPeriodicSignal:
    """Tests for PeriodicSignal."""

    def test_trig_polynomials(self):
        assert PeriodicSignal.trig("cos", 2)(0.3) == pytest.approx(math.cos(0.6))
        assert PeriodicSignal.trig("sin", 1, amplitude=2.0)(0.3) == pytest.approx(2 * math.sin(0.3))
        assert PeriodicSignal.constant(3.0)(1.0) == pytest.approx(3.0)

    def test_conjugate(self):
        conj = PeriodicSignal.from_coefficients([4.0, 1.0, 0.0], [9.0, 0.0, 2.0]).conjugate()

        assert list(conj.cos_coeffs) == [0.0, 0.0, -2.0]
        assert list(conj.sin_coeffs) == [0.0, 1.0, 0.0]

    def test_from_callable_coefficients(self):
        f = PeriodicSignal.from_callable(exp_cos, 4)

        assert f.degree == 4
        assert f.cos_coeffs == pytest.approx(2.0 * special.iv(np.arange(5), 1.0), abs=1e-9)
        assert f.sin_coeffs == pytest.approx(np.zeros(5), abs=1e-9)
        assert f(0.5) == pytest.approx(math.exp(math.cos(0.5)))

    def test_validation(self):
        with pytest.raises(ValueError):
            PeriodicSignal.from_coefficients([])

        with pytest.raises(ValueError):
            PeriodicSignal.from_coefficients([1.0, 2.0], [1.0])

        with pytest.raises(ValueError):
            PeriodicSignal.from_coefficients([1.0, math.inf])

        with pytest.raises(ValueError):
            PeriodicSignal.trig("cos", -1)


class TestPartialSums:
    """Tests for partial Fourier sums and their conjugates."""

    def test_harmonic_identities(self):
        cos3 = PeriodicSignal.trig("cos", 3)
        sin2 = PeriodicSignal.trig("sin", 2)

        assert partial_fourier(cos3, 3, GRID) == pytest.approx(np.cos(3 * GRID), abs=1e-12)
        assert partial_fourier(cos3, 2, GRID) == pytest.approx(np.zeros_like(GRID), abs=1e-12)
        assert conj_partial_fourier(cos3, 3, GRID) == pytest.approx(np.sin(3 * GRID), abs=1e-12)
        assert conj_partial_fourier(sin2, 2, GRID) == pytest.approx(-np.cos(2 * GRID), abs=1e-12)

    def test_orders_above_degree(self):
        cos3 = PeriodicSignal.trig("cos", 3)

        assert partial_fourier(cos3, 50, 0.7) == pytest.approx(math.cos(2.1))

    @pytest.mark.parametrize("N", [0, 2, 5])
    def test_quadrature_matches_coefficients(self, N):
        f = PeriodicSignal.from_coefficients([1.0, 0.5, -0.25, 0.0, 0.1], [0.0, 0.3, 0.0, -0.2, 0.0])
        t = np.array([-2.0, 0.1, 1.3])

        exact = partial_fourier(f, N, t, method="coefficients")
        quad = partial_fourier(f, N, t, method="quadrature")
        conj_exact = conj_partial_fourier(f, N, t, method="coefficients")
        conj_quad = conj_partial_fourier(f, N, t, method="quadrature")

        assert quad == pytest.approx(exact, abs=1e-8)
        assert conj_quad == pytest.approx(conj_exact, abs=1e-8)

    def test_quadrature_fallback_beyond_stored_degree(self):
        f = PeriodicSignal.from_callable(exp_cos, 2)

        value = partial_fourier(f, 6, 0.4)

        assert value == pytest.approx(exp_cos_partial(6, 0.4), abs=1e-7)


class TestFejerMean:
    """Tests for fejer_mean_periodic."""

    def test_weights(self):
        cos2 = PeriodicSignal.trig("cos", 2)

        assert fejer_mean_periodic(cos2, 5, 0.3) == pytest.approx(0.6 * math.cos(0.6))
        assert fejer_mean_periodic(cos2, 2, 0.3) == pytest.approx(0.0, abs=1e-15)

    def test_matches_average_of_partial_sums(self):
        f = PeriodicSignal.from_callable(exp_cos, 8)
        M = 6

        brute = sum(np.asarray(partial_fourier(f, N, GRID)) for N in range(M)) / M

        assert fejer_mean_periodic(f, M, GRID) == pytest.approx(brute, abs=1e-12)

    def test_quadrature_matches_coefficients(self):
        f = PeriodicSignal.from_coefficients([2.0, 1.0, 0.5], [0.0, 0.0, 0.5])

        exact = fejer_mean_periodic(f, 4, 0.9, method="coefficients")
        quad = fejer_mean_periodic(f, 4, 0.9, method="quadrature")

        assert quad == pytest.approx(exact, abs=1e-8)

    def test_error_decreases_with_order(self):
        f = PeriodicSignal.from_callable(exp_cos, 32)
        truth = exp_cos(GRID)

        errors = [
            float(np.max(np.abs(np.asarray(fejer_mean_periodic(f, M, GRID)) - truth)))
            for M in (2, 4, 8, 16, 32)
        ]

        assert all(b < a for a, b in zip(errors, errors[1:]))

    def test_positive_input_gives_positive_mean(self):
        f = PeriodicSignal.from_callable(exp_cos, 16)

        assert np.min(fejer_mean_periodic(f, 16, GRID)) > 0

    def test_order_must_be_positive(self):
        with pytest.raises(ValueError):
            fejer_mean_periodic(PeriodicSignal.constant(1.0), 0, 0.0)


class TestHardy:
    """Tests for the extremal power series and its radial maxima."""

    def test_unit_norm(self):
        f = extremal_power_series(0.25, 500)

        assert f.l2_norm == pytest.approx(1.0)
        assert f.degree == 500

    def test_c3_limit(self):
        assert c3_constant(0.5, 100_000) == pytest.approx(math.sqrt(6.0) / math.pi, abs=1e-4)

    def test_radial_max_meets_lower_bound(self):
        f = extremal_power_series(0.1, 2000)

        for r in (0.5, 0.9, 0.99):
            assert hardy_radial_max(f, r) >= hardy_lower_bound(0.1, 2000, r) * (1.0 - 1e-12)

    def test_radial_max_grows_with_radius(self):
        f = extremal_power_series(0.1, 2000)

        values = [hardy_radial_max(f, r) for r in (0.3, 0.6, 0.9, 0.99)]

        assert all(b > a for a, b in zip(values, values[1:]))

    def test_rotated_maximum_is_found(self):
        # |z - z^2| = r |1 - z| peaks on the negative axis
        f = PowerSeriesFn.from_list([1.0, -1.0])

        assert hardy_radial_max(f, 0.5) == pytest.approx(0.75)

    def test_validation(self):
        f = extremal_power_series(0.5, 10)

        with pytest.raises(ValueError):
            hardy_radial_max(f, 1.0)

        with pytest.raises(ValueError):
            hardy_lower_bound(0.5, 10, 0.0)

        with pytest.raises(ValueError):
            extremal_power_series(0.0, 10)

        with pytest.raises(ValueError):
            extremal_power_series(0.5, 0)

        with pytest.raises(ValueError):
            PowerSeriesFn.from_list([])
