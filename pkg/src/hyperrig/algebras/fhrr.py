"""Fourier holographic reduced representation kernels.

Vectors are complex phasors; base vectors have unit magnitude with phases
uniform in [-pi, pi]. Binding is the elementwise product (phase addition),
the inverse is the elementwise reciprocal (phase negation on the unit
torus), and native bundling renormalizes the complex sum back onto the
torus. Raw bundles are general complex vectors, so every derived value
stays representable.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from hyperrig.algebras.common import raw_sum, require_finite_scalar
from hyperrig.errors import DomainError, SimilarityUndefined
from hyperrig.params import AlgebraParams, BundleMode
from hyperrig.seeding import TAG_SYMBOL, fix_phases, rng_for
from hyperrig.vector import Hypervector


def random_vector(params: AlgebraParams, symbol_seed: int) -> Hypervector:
    rng = rng_for(params.master_seed, TAG_SYMBOL, symbol_seed)
    phases = rng.uniform(-np.pi, np.pi, size=params.dimension)
    return Hypervector(params, np.exp(1j * phases))


def bind(x: Hypervector, y: Hypervector) -> Hypervector:
    return x.with_payload(x.payload * y.payload)


def inverse(x: Hypervector) -> Hypervector:
    if np.any(x.payload == 0):
        raise DomainError("FHRR inverse needs nonzero elements (zero has no reciprocal)")
    return x.with_payload(1.0 / x.payload)


def unbind(key: Hypervector, z: Hypervector) -> Hypervector:
    # Phase subtraction: equals bind(inverse(key), z) for unit-magnitude
    # keys, but stays bounded when the key is a raw bundle whose small
    # elements would explode under the elementwise reciprocal.
    magnitude = np.abs(key.payload)
    if np.any(magnitude == 0):
        raise DomainError("FHRR unbinding needs nonzero key elements")
    return z.with_payload(z.payload * (np.conj(key.payload) / magnitude))


def bundle_many(params: AlgebraParams, vectors: Sequence[Hypervector], mode: BundleMode) -> Hypervector:
    total = raw_sum(vectors)
    if mode is BundleMode.RAW:
        return vectors[0].with_payload(total)
    magnitude = np.abs(total)
    dead = magnitude == 0.0
    if np.any(dead):
        # Probability-zero event, still handled deterministically.
        total = total.copy()
        total[dead] = np.exp(1j * fix_phases(params.master_seed, len(vectors), params.dimension)[dead])
        magnitude = np.abs(total)
    return vectors[0].with_payload(total / magnitude)


def similarity(x: Hypervector, y: Hypervector) -> float:
    nx = float(np.linalg.norm(x.payload))
    ny = float(np.linalg.norm(y.payload))
    if nx == 0.0 or ny == 0.0:
        raise SimilarityUndefined("similarity is undefined for a zero phasor vector")
    return float(np.real(np.vdot(y.payload, x.payload)) / (nx * ny))


def identity(params: AlgebraParams) -> Hypervector:
    return Hypervector(params, np.ones(params.dimension, dtype=np.complex128))


def zero(params: AlgebraParams) -> Hypervector:
    return Hypervector(params, np.zeros(params.dimension, dtype=np.complex128))


def scalar_mul(a: float, x: Hypervector) -> Hypervector:
    return x.with_payload(require_finite_scalar(a) * x.payload)


def power(x: Hypervector, r: float) -> Hypervector:
    """Elementwise principal power: phases scale by r (magnitudes by |.|^r)."""
    magnitude = np.abs(x.payload)
    if np.any(magnitude == 0):
        raise DomainError("fractional power needs nonzero elements")
    return x.with_payload(magnitude ** r * np.exp(1j * r * np.angle(x.payload)))
