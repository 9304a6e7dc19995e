"""Binary spatter code kernels.

Binding is XOR (self-inverse, the all-zero word is the bind identity),
native bundling is the bitwise majority with seeded tie coins, and
similarity is 1 minus the normalized Hamming distance (1 = identical,
0 = complementary). Raw bundles are integer count vectors used only by
the law harness; XOR and Hamming similarity reject them.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from hyperrig.errors import DomainError
from hyperrig.params import AlgebraParams, BundleMode
from hyperrig.seeding import TAG_SYMBOL, rng_for, tie_coins
from hyperrig.vector import Hypervector


def _require_bits(x: Hypervector, op: str) -> None:
    payload = x.payload
    if payload.size and (int(payload.min()) < 0 or int(payload.max()) > 1):
        raise DomainError(f"BSC {op} requires a binary payload, not a raw count vector")


def random_vector(params: AlgebraParams, symbol_seed: int) -> Hypervector:
    rng = rng_for(params.master_seed, TAG_SYMBOL, symbol_seed)
    return Hypervector(params, rng.integers(0, 2, size=params.dimension))


def bind(x: Hypervector, y: Hypervector) -> Hypervector:
    _require_bits(x, "binding")
    _require_bits(y, "binding")
    return x.with_payload(np.bitwise_xor(x.payload, y.payload))


def inverse(x: Hypervector) -> Hypervector:
    return x


def unbind(key: Hypervector, z: Hypervector) -> Hypervector:
    return bind(key, z)


def bundle_many(params: AlgebraParams, vectors: Sequence[Hypervector], mode: BundleMode) -> Hypervector:
    counts = np.sum([v.payload for v in vectors], axis=0)
    if mode is BundleMode.RAW:
        return Hypervector(params, counts)
    k = len(vectors)
    out = np.where(2 * counts > k, 1, 0)
    ties = 2 * counts == k
    if np.any(ties):
        coins = tie_coins(params.master_seed, k, params.dimension)
        out[ties] = coins[ties]
    return Hypervector(params, out)


def similarity(x: Hypervector, y: Hypervector) -> float:
    _require_bits(x, "similarity")
    _require_bits(y, "similarity")
    return 1.0 - float(np.count_nonzero(x.payload != y.payload)) / x.dimension_tag


def identity(params: AlgebraParams) -> Hypervector:
    return Hypervector(params, np.zeros(params.dimension, dtype=np.int64))


def zero(params: AlgebraParams) -> Hypervector:
    # The XOR identity and the bundling identity coincide for BSC; the
    # law harness records the resulting absorption failure.
    return Hypervector(params, np.zeros(params.dimension, dtype=np.int64))


def scalar_mul(a: float, x: Hypervector) -> Hypervector:
    if a == 1.0 or a == 1:
        return x
    if a == 0.0 or a == 0:
        return zero(x.params)
    raise DomainError(f"binary carriers only admit scalars 0 and 1, got {a!r}")
