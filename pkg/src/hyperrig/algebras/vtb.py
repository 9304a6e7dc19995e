"""Vector-derived tensor binding kernels.

A d-dimensional vector (d = m^2) is lifted to a block-diagonal matrix
whose m identical m-by-m blocks are the column-major reshape of the
vector scaled by d^(1/4); binding applies that matrix to the other
operand, chunk by chunk. Column-major layout makes the scaled
identity-block generator an exact two-sided bind identity. Unbinding
applies the transposed blocks, which is a high-fidelity pseudo-inverse
for unit-norm Gaussian vectors (the blocks are only approximately
orthogonal).
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from hyperrig.algebras.common import cosine, raw_sum, require_finite_scalar, unit_normalized
from hyperrig.params import AlgebraParams, BundleMode
from hyperrig.seeding import TAG_SYMBOL, rng_for
from hyperrig.vector import Hypervector


def _block(x: Hypervector) -> np.ndarray:
    m = math.isqrt(x.params.dimension)
    return x.params.dimension ** 0.25 * x.payload.reshape(m, m, order="F")


def _apply(block: np.ndarray, y: np.ndarray) -> np.ndarray:
    m = block.shape[0]
    # Rows of the reshape are the m consecutive chunks of y.
    return (y.reshape(m, m) @ block.T).ravel()


def random_vector(params: AlgebraParams, symbol_seed: int) -> Hypervector:
    # Scaled Haar-orthogonal block: entry marginals keep variance 1/d and
    # the whole vector is unit norm, but V(x) becomes exactly orthogonal,
    # so transpose unbinding is a faithful inverse on base keys. A plain
    # Gaussian block caps the unbind similarity at 1/sqrt(2) regardless
    # of dimension.
    rng = rng_for(params.master_seed, TAG_SYMBOL, symbol_seed)
    m = math.isqrt(params.dimension)
    q, r = np.linalg.qr(rng.normal(size=(m, m)))
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    payload = ((q * signs) / params.dimension ** 0.25).ravel(order="F")
    return Hypervector(params, payload)


def bind(x: Hypervector, y: Hypervector) -> Hypervector:
    return y.with_payload(_apply(_block(x), y.payload))


def inverse(x: Hypervector) -> Hypervector:
    # Generator of the transposed block matrix.
    m = math.isqrt(x.params.dimension)
    return x.with_payload(x.payload.reshape(m, m, order="F").T.ravel(order="F"))


def unbind(key: Hypervector, z: Hypervector) -> Hypervector:
    return z.with_payload(_apply(_block(key).T, z.payload))


def bundle_many(params: AlgebraParams, vectors: Sequence[Hypervector], mode: BundleMode) -> Hypervector:
    total = raw_sum(vectors)
    if mode is BundleMode.RAW:
        return vectors[0].with_payload(total)
    return vectors[0].with_payload(unit_normalized(total))


def similarity(x: Hypervector, y: Hypervector) -> float:
    return cosine(x.payload, y.payload)


def identity(params: AlgebraParams) -> Hypervector:
    m = math.isqrt(params.dimension)
    return Hypervector(params, (np.eye(m) / params.dimension ** 0.25).ravel(order="F"))


def zero(params: AlgebraParams) -> Hypervector:
    return Hypervector(params, np.zeros(params.dimension))


def scalar_mul(a: float, x: Hypervector) -> Hypervector:
    return x.with_payload(require_finite_scalar(a) * x.payload)
