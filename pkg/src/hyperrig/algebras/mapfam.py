"""Multiply-Add-Permute kernels (integer, bipolar, and continuous variants).

Binding is the Hadamard product (self-inverse on bipolar carriers).
Bundling is elementwise addition; the bipolar variant thresholds through
sign with seeded tie coins, and the continuous variant clamps ("cuts") the
sum back into [-1, 1].
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from hyperrig.algebras.common import cosine, raw_sum, require_finite_scalar
from hyperrig.params import AlgebraId, AlgebraParams, BundleMode
from hyperrig.seeding import TAG_SYMBOL, rng_for, tie_coins
from hyperrig.vector import Hypervector


def random_vector(params: AlgebraParams, symbol_seed: int) -> Hypervector:
    rng = rng_for(params.master_seed, TAG_SYMBOL, symbol_seed)
    if params.algebra_id is AlgebraId.MAP_C:
        payload = rng.uniform(-1.0, 1.0, size=params.dimension)
    else:
        payload = rng.integers(0, 2, size=params.dimension).astype(np.float64) * 2.0 - 1.0
    return Hypervector(params, payload)


def bind(x: Hypervector, y: Hypervector) -> Hypervector:
    return x.with_payload(x.payload * y.payload)


def inverse(x: Hypervector) -> Hypervector:
    return x


def unbind(key: Hypervector, z: Hypervector) -> Hypervector:
    return bind(inverse(key), z)


def bundle_many(params: AlgebraParams, vectors: Sequence[Hypervector], mode: BundleMode) -> Hypervector:
    total = raw_sum(vectors)
    if mode is BundleMode.RAW or params.algebra_id is AlgebraId.MAP_I:
        return vectors[0].with_payload(total)
    if params.algebra_id is AlgebraId.MAP_C:
        return vectors[0].with_payload(np.clip(total, -1.0, 1.0))
    # MAP-B: sign of the sum, exact ties resolved by a coin keyed to
    # (master seed, element index, operand count) so bundling stays
    # commutative and reproducible.
    out = np.sign(total)
    ties = out == 0.0
    if np.any(ties):
        coins = tie_coins(params.master_seed, len(vectors), params.dimension)
        out[ties] = coins[ties] * 2.0 - 1.0
    return vectors[0].with_payload(out)


def similarity(x: Hypervector, y: Hypervector) -> float:
    return cosine(x.payload, y.payload)


def identity(params: AlgebraParams) -> Hypervector:
    return Hypervector(params, np.ones(params.dimension))


def zero(params: AlgebraParams) -> Hypervector:
    return Hypervector(params, np.zeros(params.dimension))


def scalar_mul(a: float, x: Hypervector) -> Hypervector:
    return x.with_payload(require_finite_scalar(a) * x.payload)
