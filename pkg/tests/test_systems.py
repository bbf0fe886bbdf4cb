"""
Tests for LTI systems and quadrature.
"""

import math

import numpy as np
import pytest

from pwlab.errors import QuadratureToleranceError, UnsupportedSignalError
from pwlab.quadrature import fourier_integral, integrate, integrate_panels, panel_edges
from pwlab.signals.kernels import conjugated_kernel
from pwlab.signals.spectrum import SpectrumFn, fejer_square_spectrum
from pwlab.signals.windows import fejer_square
from pwlab.systems.lti import LtiSystem, impulse_response, reference_output

FLAT = {"breakpoints": [[0.0, 1.0], [math.pi, 1.0]]}


class TestQuadrature:
    """Tests for the quadrature helpers."""

    def test_integrate_polynomial(self):
        assert integrate(lambda x: x * x, 0.0, 3.0) == pytest.approx(9.0)
        assert integrate(lambda x: x, 1.0, 1.0) == 0.0

    def test_integrate_with_kink(self):
        value = integrate(abs, -1.0, 2.0, points=[0.0])

        assert value == pytest.approx(2.5)

    def test_integrate_raises_on_divergence(self):
        with pytest.raises(QuadratureToleranceError):
            integrate(lambda x: 1.0 / x, 0.0, 1.0, limit=10)

    def test_panel_edges_respect_kinks(self):
        edges = panel_edges(0.0, 2.0, kinks=[0.5, 3.0])

        assert edges[0] == 0.0
        assert edges[-1] == 2.0
        assert 0.5 in edges
        assert np.all(np.diff(edges) > 0)

    def test_integrate_panels_oscillatory(self):
        value = integrate_panels(lambda w: np.cos(40.0 * w), 0.0, math.pi, oscillation=40.0)

        assert value == pytest.approx(math.sin(40.0 * math.pi) / 40.0, abs=1e-12)

    def test_fourier_integral(self):
        spec = SpectrumFn.constant(1.0)

        value = fourier_integral(spec, 0.5, 0.0, math.pi, kind="sin")

        assert value / math.pi == pytest.approx(conjugated_kernel()(0.5), abs=1e-10)


class TestLtiSystem:
    """Tests for LtiSystem."""

    def test_builtins(self):
        assert LtiSystem.identity().norm == 1.0
        assert LtiSystem.hilbert().norm == 1.0
        assert LtiSystem.hilbert().response(0.5) == pytest.approx(-1j)
        assert LtiSystem.hilbert().response(-0.5) == pytest.approx(1j)
        assert LtiSystem.identity().response(4.0) == 0.0

    def test_validation(self):
        with pytest.raises(ValueError):
            LtiSystem("lowpass")

        with pytest.raises(ValueError):
            LtiSystem("custom")

        with pytest.raises(UnsupportedSignalError):
            LtiSystem("custom", real_part=SpectrumFn.constant(1.0, support=4.0))

    def test_from_dict(self):
        assert LtiSystem.from_dict({"name": "hilbert"}) == LtiSystem.hilbert()
        assert LtiSystem.from_dict({}) == LtiSystem.identity()

        custom = LtiSystem.from_dict({"name": "custom", "real": FLAT})
        assert custom.real_part == SpectrumFn.constant(1.0)
        assert LtiSystem.from_dict(custom.to_dict()) == custom

    def test_custom_norm(self):
        system = LtiSystem(
            "custom",
            real_part=SpectrumFn(((0.0, 2.0), (math.pi, 0.5))),
        )

        assert system.norm == pytest.approx(2.0)


class TestImpulseResponse:
    """Tests for impulse responses and reference outputs."""

    def test_closed_forms(self):
        assert impulse_response(LtiSystem.identity(), 0.5) == pytest.approx(2.0 / math.pi)
        assert impulse_response(LtiSystem.hilbert(), 1.0) == pytest.approx(2.0 / math.pi)

        t = np.array([0.25, 1.0, 2.5])
        assert impulse_response(LtiSystem.hilbert(), t) == pytest.approx(conjugated_kernel()(t))

    def test_custom_flat_system_is_identity(self):
        system = LtiSystem.from_dict({"name": "custom", "real": FLAT})

        assert impulse_response(system, 0.5) == pytest.approx(2.0 / math.pi, abs=1e-8)

    def test_reference_output_identity(self):
        value = reference_output(LtiSystem.identity(), fejer_square_spectrum(2), 1.0)

        assert value == pytest.approx(fejer_square(2, 1.0), abs=1e-8)

    def test_reference_output_hilbert_of_flat_spectrum(self):
        value = reference_output(LtiSystem.hilbert(), SpectrumFn.constant(1.0), 0.3)

        assert value == pytest.approx(conjugated_kernel()(0.3), abs=1e-8)

    def test_reference_output_rejects_wide_spectrum(self):
        wide = SpectrumFn.triangle(1.0, 4.0)

        with pytest.raises(UnsupportedSignalError):
            reference_output(LtiSystem.identity(), wide, 0.0)

    def test_non_real_output(self):
        # an even imaginary response turns an even input into an imaginary output
        system = LtiSystem("custom", imag_part=SpectrumFn.constant(1.0))

        with pytest.raises(UnsupportedSignalError):
            reference_output(system, SpectrumFn.constant(1.0), 0.0)
