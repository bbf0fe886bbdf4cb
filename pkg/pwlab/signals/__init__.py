"""Adversarial signals, windows, kernels and spectra."""

from pwlab.signals.windows import trapezoid_window, fejer_kernel, w_spectrum, fejer_square
from pwlab.signals.spectrum import (
    Spectrum,
    SpectrumFn,
    NyquistSpectrum,
    q1_spectrum,
    q2_spectrum,
    phi_spectrum,
    fejer_square_spectrum,
)
from pwlab.signals.kernels import (
    KernelFn,
    kernel_eval,
    spectral_eval,
    sinc_kernel,
    conjugated_kernel,
    remainder_kernel,
    cauchy_kernel,
    hq1_kernel,
    trapezoid_phi_kernel,
    hilbert_trapezoid_kernel,
    oversampling_correction_kernel,
    impulse_response_kernel,
)
from pwlab.signals.samples import SampledSignal, modulate
from pwlab.signals.constructions import (
    adversarial_nyquist,
    adversarial_oversampling,
    choose_M_sequence,
)
from pwlab.signals.split import (
    SplitResult,
    bandlimit_split,
    bandlimit_split_direct,
    sign_changes,
    tail_energy_direct,
    filtered_signal,
)

__all__ = [
    "trapezoid_window",
    "fejer_kernel",
    "w_spectrum",
    "fejer_square",
    "Spectrum",
    "SpectrumFn",
    "NyquistSpectrum",
    "q1_spectrum",
    "q2_spectrum",
    "phi_spectrum",
    "fejer_square_spectrum",
    "KernelFn",
    "kernel_eval",
    "spectral_eval",
    "sinc_kernel",
    "conjugated_kernel",
    "remainder_kernel",
    "cauchy_kernel",
    "hq1_kernel",
    "trapezoid_phi_kernel",
    "hilbert_trapezoid_kernel",
    "oversampling_correction_kernel",
    "impulse_response_kernel",
    "SampledSignal",
    "modulate",
    "adversarial_nyquist",
    "adversarial_oversampling",
    "choose_M_sequence",
    "SplitResult",
    "bandlimit_split",
    "bandlimit_split_direct",
    "sign_changes",
    "tail_energy_direct",
    "filtered_signal",
]
