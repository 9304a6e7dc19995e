"""Algebra-independent operation surface.

These functions validate operands (shared params, matching dimension
tags) and dispatch to the per-algebra kernels. Braiding and the
similarity-to-metric adapter live here because they are uniform across
algebras: braiding applies a seeded fixed permutation per role, and the
metric is the angular distance for the cosine family, the normalized
Hamming distance for dense bits, and one minus overlap for sparse sets.

Everything is a pure function of immutable values; identical inputs give
bit-identical outputs within one build.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

from hyperrig.algebras import kernel
from hyperrig.errors import DimensionError, DomainError
from hyperrig.params import (
    COSINE_FAMILY,
    AlgebraId,
    AlgebraParams,
    BraidRole,
    BundleMode,
    Carrier,
)
from hyperrig.seeding import braid_permutation
from hyperrig.vector import Hypervector, require_compatible


def random_vector(params: AlgebraParams, symbol_seed: int) -> Hypervector:
    """Draw the algebra's base vector for one symbol seed (deterministic)."""
    return kernel(params.algebra_id).random_vector(params, symbol_seed)


def similarity(x: Hypervector, y: Hypervector) -> float:
    require_compatible(x, y)
    return kernel(x.params.algebra_id).similarity(x, y)


def bundle(x: Hypervector, y: Hypervector, mode: BundleMode = BundleMode.NATIVE) -> Hypervector:
    return bundle_many([x, y], mode)


def bundle_many(vectors: Sequence[Hypervector], mode: BundleMode = BundleMode.NATIVE) -> Hypervector:
    """Flat k-ary bundle (not an iterated binary fold; majority and
    normalization are applied once over all operands)."""
    if not vectors:
        raise DomainError("cannot bundle zero vectors")
    head = vectors[0]
    for other in vectors[1:]:
        require_compatible(head, other)
    return kernel(head.params.algebra_id).bundle_many(head.params, list(vectors), mode)


def bind(x: Hypervector, y: Hypervector) -> Hypervector:
    if x.params.algebra_id is AlgebraId.TPR:
        # Tensor binding crosses dimension tags by design.
        if x.params != y.params:
            raise DimensionError("bind operands must share algebra params")
    else:
        require_compatible(x, y)
    return kernel(x.params.algebra_id).bind(x, y)


def unbind(key: Hypervector, z: Hypervector) -> Hypervector:
    """Undo the key's part in a binding: unbind(x, bind(x, y)) recovers y
    (exactly or approximately, per the algebra's inverse column)."""
    if key.params.algebra_id is AlgebraId.TPR:
        if key.params != z.params:
            raise DimensionError("unbind operands must share algebra params")
    else:
        require_compatible(key, z)
    return kernel(key.params.algebra_id).unbind(key, z)


def inverse(x: Hypervector) -> Hypervector:
    return kernel(x.params.algebra_id).inverse(x)


def braid(x: Hypervector, role: BraidRole = BraidRole(0), k: int = 1) -> Hypervector:
    """Apply the role's fixed permutation k times (negative k inverts)."""
    if k == 0:
        return x
    n = x.dimension_tag
    perm, inv = braid_permutation(x.params.master_seed, role.role_index, n)
    step = perm if k > 0 else inv
    if x.params.carrier is Carrier.SPARSE_INDICES:
        positions = inv if k > 0 else perm
        indices = x.payload
        for _ in range(abs(k)):
            indices = positions[indices]
        return x.with_payload(np.sort(indices))
    payload = x.payload
    for _ in range(abs(k)):
        payload = payload[step]
    return x.with_payload(payload, dimension_tag=x.dimension_tag, tensor_depth=x.tensor_depth)


def scalar_mul(a: float, x: Hypervector) -> Hypervector:
    """Elementwise scaling; binary and sparse carriers admit only 0 and 1."""
    return kernel(x.params.algebra_id).scalar_mul(a, x)


def identity(params: AlgebraParams) -> Hypervector:
    """The algebra's bind identity (raises where none exists)."""
    return kernel(params.algebra_id).identity(params)


def zero(params: AlgebraParams) -> Hypervector:
    """The carrier's additive identity for raw bundling."""
    return kernel(params.algebra_id).zero(params)


def metric_distance(x: Hypervector, y: Hypervector) -> float:
    """Lawvere-style distance recovered from the algebra's similarity."""
    require_compatible(x, y)
    if x is y or (x.payload.size == y.payload.size and np.array_equal(x.payload, y.payload)):
        return 0.0
    sim = similarity(x, y)
    algebra = x.params.algebra_id
    if algebra in COSINE_FAMILY:
        return float(np.arccos(np.clip(sim, -1.0, 1.0)) / np.pi)
    # Dense bits: normalized Hamming; sparse: one minus overlap.
    return 1.0 - sim
