"""Binary sparse distributed code kernels (shift, segment, and CDT binding).

Vectors are sorted active-index sets. Bundling is set union for all three
variants, similarity is overlap count over the larger active-set size.

- Shift binding advances every index of x by the sum of y's indices mod d;
  the inverse vector negates indices so unbinding is the exact reverse shift.
- Segment binding requires exactly one active index per block and adds
  offsets blockwise mod the block size (commutative, exact inverse).
- CDT binding takes the union and thins it against seeded permuted copies
  of itself (three per round, fresh permutation seeds each round) until at
  most round(density * d) indices survive; the survivors overlap both
  inputs, and no inverse exists.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from hyperrig.errors import DomainError, SimilarityUndefined, UnsupportedOperation
from hyperrig.params import AlgebraId, AlgebraParams, BundleMode
from hyperrig.seeding import TAG_CDT, TAG_SYMBOL, rng_for
from hyperrig.vector import Hypervector

CDT_COPIES_PER_ROUND = 3


def random_vector(params: AlgebraParams, symbol_seed: int) -> Hypervector:
    rng = rng_for(params.master_seed, TAG_SYMBOL, symbol_seed)
    d = params.dimension
    k = params.active_count
    if params.algebra_id is AlgebraId.BSDC_SEG and k == params.block_count:
        # One active index per block at the default density 1/block_size.
        b = params.block_size
        offsets = rng.integers(0, b, size=params.block_count)
        indices = np.arange(params.block_count, dtype=np.int64) * b + offsets
    else:
        indices = np.sort(rng.choice(d, size=k, replace=False)).astype(np.int64)
    return Hypervector(params, indices)


def _shift_amount(y: Hypervector) -> int:
    if y.payload.size == 0:
        raise DomainError("shift binding needs a nonempty active set to derive the shift from")
    return int(y.payload.sum() % y.params.dimension)


def _shifted(x: Hypervector, amount: int) -> Hypervector:
    return x.with_payload(np.sort((x.payload + amount) % x.params.dimension))


def _block_offsets(x: Hypervector) -> np.ndarray:
    params = x.params
    b = params.block_size
    blocks = x.payload // b
    if x.payload.size != params.block_count or np.any(blocks != np.arange(params.block_count)):
        raise DomainError("segment binding needs exactly one active index per block")
    return x.payload % b


def _thin(params: AlgebraParams, union: np.ndarray) -> np.ndarray:
    target = params.active_count
    survivors = union
    round_index = 0
    while survivors.size > target:
        keep = np.zeros(0, dtype=np.int64)
        for copy in range(CDT_COPIES_PER_ROUND):
            perm = rng_for(params.master_seed, TAG_CDT, round_index, copy).permutation(params.dimension)
            keep = np.union1d(keep, perm[union])
        survivors = np.intersect1d(survivors, keep)
        round_index += 1
        if survivors.size == 0:
            break
    return survivors.astype(np.int64)


def bind(x: Hypervector, y: Hypervector) -> Hypervector:
    algebra = x.params.algebra_id
    if algebra is AlgebraId.BSDC_S:
        return _shifted(x, _shift_amount(y))
    if algebra is AlgebraId.BSDC_SEG:
        # The acting operand y must be maximally sparse; x may be any
        # sparse set (e.g. a union bundle), rotated within each block by
        # y's offset there. Coincides with blockwise offset addition when
        # x is maximally sparse too.
        b = x.params.block_size
        key_offsets = _block_offsets(y)
        blocks = x.payload // b
        offsets = (x.payload % b + key_offsets[blocks]) % b
        return x.with_payload(np.sort(blocks * b + offsets))
    # BSDC-CDT
    union = np.union1d(x.payload, y.payload)
    if union.size == 0:
        raise DomainError("CDT binding needs at least one active index across the operands")
    return x.with_payload(_thin(x.params, union))


def inverse(x: Hypervector) -> Hypervector:
    algebra = x.params.algebra_id
    if algebra is AlgebraId.BSDC_S:
        return x.with_payload(np.sort((-x.payload) % x.params.dimension))
    if algebra is AlgebraId.BSDC_SEG:
        b = x.params.block_size
        offsets = (-_block_offsets(x)) % b
        starts = np.arange(x.params.block_count, dtype=np.int64) * b
        return x.with_payload(starts + offsets)
    raise UnsupportedOperation("BSDC-CDT has no binding inverse")


def unbind(key: Hypervector, z: Hypervector) -> Hypervector:
    # The key acts on the right during binding, so its inverse acts on z.
    return bind(z, inverse(key))


def bundle_many(params: AlgebraParams, vectors: Sequence[Hypervector], mode: BundleMode) -> Hypervector:
    union = vectors[0].payload
    for v in vectors[1:]:
        union = np.union1d(union, v.payload)
    return vectors[0].with_payload(union.astype(np.int64))


def similarity(x: Hypervector, y: Hypervector) -> float:
    larger = max(x.payload.size, y.payload.size)
    if larger == 0:
        raise SimilarityUndefined("overlap similarity is undefined for two empty active sets")
    overlap = np.intersect1d(x.payload, y.payload, assume_unique=True).size
    return float(overlap) / larger


def identity(params: AlgebraParams) -> Hypervector:
    if params.algebra_id is AlgebraId.BSDC_S:
        # Index sum 0 mod d: a right identity for shift binding.
        return Hypervector(params, np.zeros(1, dtype=np.int64))
    if params.algebra_id is AlgebraId.BSDC_SEG:
        starts = np.arange(params.block_count, dtype=np.int64) * params.block_size
        return Hypervector(params, starts)
    raise UnsupportedOperation("BSDC-CDT has no multiplicative identity")


def zero(params: AlgebraParams) -> Hypervector:
    return Hypervector(params, np.zeros(0, dtype=np.int64))


def scalar_mul(a: float, x: Hypervector) -> Hypervector:
    if a == 1.0 or a == 1:
        return x
    if a == 0.0 or a == 0:
        return zero(x.params)
    raise DomainError(f"sparse carriers only admit scalars 0 and 1, got {a!r}")
