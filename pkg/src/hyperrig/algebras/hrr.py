"""Holographic reduced representation kernels.

Binding is circular convolution (computed through the real FFT; the
direct O(d^2) sum is kept as an independent check), the inverse is the
index involution, and native bundling renormalizes the sum to unit
Euclidean norm. The involution inverse is only approximate, which is why
HRR unbinding is classified statistical rather than exact.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from hyperrig.algebras.common import cosine, raw_sum, require_finite_scalar, unit_normalized
from hyperrig.errors import DomainError
from hyperrig.params import AlgebraParams, BundleMode
from hyperrig.seeding import TAG_SYMBOL, rng_for
from hyperrig.vector import Hypervector


def random_vector(params: AlgebraParams, symbol_seed: int) -> Hypervector:
    rng = rng_for(params.master_seed, TAG_SYMBOL, symbol_seed)
    payload = rng.normal(0.0, 1.0 / np.sqrt(params.dimension), size=params.dimension)
    return Hypervector(params, payload)


def unitary_vector(params: AlgebraParams, symbol_seed: int) -> Hypervector:
    """Unit-magnitude-spectrum base vector for fractional self-binding.

    Phases are conjugate-symmetric with the DC (and Nyquist) bins fixed to
    +1, so every real power of the vector stays real and powers compose
    exactly. A generic Gaussian vector has no real convolution root when
    its spectrum's DC component is negative.
    """
    rng = rng_for(params.master_seed, TAG_SYMBOL, symbol_seed)
    d = params.dimension
    half = np.zeros(d // 2 + 1)
    free = (d - 1) // 2
    half[1:1 + free] = rng.uniform(-np.pi, np.pi, size=free)
    return Hypervector(params, np.fft.irfft(np.exp(1j * half), n=d))


def circular_convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = a.size
    return np.fft.irfft(np.fft.rfft(a) * np.fft.rfft(b), n=n)


def circular_convolve_direct(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """O(d^2) convolution sum, kept independent of the FFT path."""
    n = a.size
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return a @ b[idx]


def bind(x: Hypervector, y: Hypervector) -> Hypervector:
    return x.with_payload(circular_convolve(x.payload, y.payload))


def inverse(x: Hypervector) -> Hypervector:
    # (a, b, c, d) -> (a, d, c, b): spectrum conjugation.
    return x.with_payload(np.roll(x.payload[::-1], 1))


def unbind(key: Hypervector, z: Hypervector) -> Hypervector:
    return bind(inverse(key), z)


def bundle_many(params: AlgebraParams, vectors: Sequence[Hypervector], mode: BundleMode) -> Hypervector:
    total = raw_sum(vectors)
    if mode is BundleMode.RAW:
        return vectors[0].with_payload(total)
    return vectors[0].with_payload(unit_normalized(total))


def similarity(x: Hypervector, y: Hypervector) -> float:
    return cosine(x.payload, y.payload)


def identity(params: AlgebraParams) -> Hypervector:
    payload = np.zeros(params.dimension)
    payload[0] = 1.0
    return Hypervector(params, payload)


def zero(params: AlgebraParams) -> Hypervector:
    return Hypervector(params, np.zeros(params.dimension))


def scalar_mul(a: float, x: Hypervector) -> Hypervector:
    return x.with_payload(require_finite_scalar(a) * x.payload)


def power(x: Hypervector, r: float) -> Hypervector:
    """Fractional self-binding through the transform domain.

    The spectrum is raised to the power r on the principal branch, which
    coincides with repeated convolution at integer r.
    """
    spectrum = np.fft.fft(x.payload)
    if np.any(spectrum == 0):
        raise DomainError("fractional power needs a zero-free spectrum")
    powered = np.abs(spectrum) ** r * np.exp(1j * r * np.angle(spectrum))
    return x.with_payload(np.real(np.fft.ifft(powered)))
