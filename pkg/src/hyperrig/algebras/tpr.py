"""Tensor product representation kernels.

Binding is the flattened outer product, so the output dimension tag is
the product of the operand tags; a depth cap of 2 and a flattened-size
cap keep the exponential growth bounded. Unbinding contracts the tensor
with the key (normalized by its squared norm), which is exact on pure
product tensors for any nonzero key. The multiplicative identity is the
scalar unit [1] at dimension tag 1 (the empty tensor product).
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from hyperrig.algebras.common import cosine, raw_sum, require_finite_scalar
from hyperrig.errors import DomainError, UnsupportedOperation
from hyperrig.params import AlgebraParams, BundleMode, TPR_MAX_DEPTH, TPR_MAX_DIMENSION
from hyperrig.seeding import TAG_SYMBOL, rng_for
from hyperrig.vector import Hypervector


def random_vector(params: AlgebraParams, symbol_seed: int) -> Hypervector:
    rng = rng_for(params.master_seed, TAG_SYMBOL, symbol_seed)
    payload = rng.integers(0, 2, size=params.dimension).astype(np.float64) * 2.0 - 1.0
    return Hypervector(params, payload)


def bind(x: Hypervector, y: Hypervector) -> Hypervector:
    depth = x.tensor_depth + y.tensor_depth
    if depth > TPR_MAX_DEPTH:
        raise UnsupportedOperation(
            f"tensor bind would nest to depth {depth}; the configured cap is {TPR_MAX_DEPTH}"
        )
    tag = x.dimension_tag * y.dimension_tag
    if tag > TPR_MAX_DIMENSION:
        raise UnsupportedOperation(f"tensor bind output size {tag} exceeds the cap {TPR_MAX_DIMENSION}")
    payload = np.outer(x.payload, y.payload).ravel()
    return Hypervector(x.params, payload, tag, tensor_depth=depth)


def inverse(x: Hypervector) -> Hypervector:
    return x


def unbind(key: Hypervector, z: Hypervector) -> Hypervector:
    if z.dimension_tag % key.dimension_tag != 0:
        raise DomainError(
            f"cannot contract a {key.dimension_tag}-dim key out of a {z.dimension_tag}-dim tensor"
        )
    norm_sq = float(np.dot(key.payload, key.payload))
    if norm_sq == 0.0:
        raise DomainError("cannot unbind with a zero key")
    rest = z.dimension_tag // key.dimension_tag
    contracted = key.payload @ z.payload.reshape(key.dimension_tag, rest) / norm_sq
    return Hypervector(z.params, contracted, rest,
                       tensor_depth=max(z.tensor_depth - key.tensor_depth, 1))


def bundle_many(params: AlgebraParams, vectors: Sequence[Hypervector], mode: BundleMode) -> Hypervector:
    # Table row is plain vector addition; raw and native coincide.
    return vectors[0].with_payload(raw_sum(vectors))


def similarity(x: Hypervector, y: Hypervector) -> float:
    return cosine(x.payload, y.payload)


def identity(params: AlgebraParams) -> Hypervector:
    return Hypervector(params, np.ones(1), 1, tensor_depth=0)


def zero(params: AlgebraParams) -> Hypervector:
    return Hypervector(params, np.zeros(params.dimension))


def scalar_mul(a: float, x: Hypervector) -> Hypervector:
    return x.with_payload(require_finite_scalar(a) * x.payload)
