"""Matrix binding of additive terms.

Every symbol owns a seeded orthogonal role matrix (QR of a seeded
Gaussian matrix with the R diagonal sign-fixed, so the matrix is unique
and its inverse is its transpose). A symbol's vector form is its role
matrix applied to a fixed reference unit vector, which makes the identity
role an exact two-sided bind identity and keeps binding associative:
composite bind results remember their factor chain and replay it on the
next right operand.

Bundles and braids have no factor chain and therefore cannot appear as
an MBAT left operand; the all-zero vector acts as the annihilator.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from hyperrig.algebras.common import cosine, raw_sum, require_finite_scalar, unit_normalized
from hyperrig.errors import UnsupportedOperation
from hyperrig.params import AlgebraParams, BundleMode
from hyperrig.seeding import MASK64, TAG_REFERENCE, TAG_ROLE_MATRIX, rng_for
from hyperrig.vector import Hypervector, RoleChain

# Composite role chains beyond this many factors drop to None.
MAX_ROLE_CHAIN = 64

# Read-mostly memo of role matrices; hits and misses return identical
# values, so FIFO eviction only costs recomputation time.
_MATRIX_CACHE: dict[tuple[int, int, int], np.ndarray] = {}
_CACHE_ELEMENT_BUDGET = 48 * 1024 * 1024
_REFERENCE_CACHE: dict[tuple[int, int], np.ndarray] = {}


@dataclass(frozen=True)
class RoleMatrix:
    """Orthogonal binding matrix owned by one symbol seed."""

    owner_symbol_seed: int
    matrix: np.ndarray


def role_matrix(params: AlgebraParams, symbol_seed: int) -> RoleMatrix:
    key = (params.master_seed, params.dimension, symbol_seed & MASK64)
    matrix = _MATRIX_CACHE.get(key)
    if matrix is None:
        rng = rng_for(params.master_seed, TAG_ROLE_MATRIX, symbol_seed)
        gaussian = rng.normal(size=(params.dimension, params.dimension))
        q, r = np.linalg.qr(gaussian)
        signs = np.sign(np.diag(r))
        signs[signs == 0] = 1.0
        matrix = q * signs
        matrix.setflags(write=False)
        while (sum(m.size for m in _MATRIX_CACHE.values()) + matrix.size
               > _CACHE_ELEMENT_BUDGET) and _MATRIX_CACHE:
            _MATRIX_CACHE.pop(next(iter(_MATRIX_CACHE)))
        _MATRIX_CACHE[key] = matrix
    return RoleMatrix(symbol_seed & MASK64, matrix)


def reference_vector(params: AlgebraParams) -> np.ndarray:
    key = (params.master_seed, params.dimension)
    ref = _REFERENCE_CACHE.get(key)
    if ref is None:
        raw = rng_for(params.master_seed, TAG_REFERENCE).normal(size=params.dimension)
        ref = raw / np.linalg.norm(raw)
        ref.setflags(write=False)
        _REFERENCE_CACHE[key] = ref
    return ref


def _apply_chain(params: AlgebraParams, chain: RoleChain, payload: np.ndarray) -> np.ndarray:
    # Factors act right-to-left, one matvec at a time, so grouping of a
    # bind expression cannot change the floating-point result.
    out = payload
    for seed, transposed in reversed(chain):
        matrix = role_matrix(params, seed).matrix
        out = (matrix.T if transposed else matrix) @ out
    return out


def random_vector(params: AlgebraParams, symbol_seed: int) -> Hypervector:
    chain: RoleChain = ((symbol_seed & MASK64, False),)
    payload = _apply_chain(params, chain, reference_vector(params))
    return Hypervector(params, payload, role=chain)


def bind(x: Hypervector, y: Hypervector) -> Hypervector:
    if not np.any(x.payload):
        return zero(x.params)
    if x.role is None:
        raise UnsupportedOperation(
            "MBAT binding needs a role-bearing left operand (base symbol, identity, "
            "or a bind/inverse of those); bundles and braids carry no role matrix"
        )
    payload = _apply_chain(x.params, x.role, y.payload)
    chain = None
    if y.role is not None and len(x.role) + len(y.role) <= MAX_ROLE_CHAIN:
        chain = x.role + y.role
    return Hypervector(x.params, payload, role=chain)


def inverse(x: Hypervector) -> Hypervector:
    if x.role is None:
        raise UnsupportedOperation("MBAT inverse is defined only for role-bearing vectors")
    chain: RoleChain = tuple((seed, not transposed) for seed, transposed in reversed(x.role))
    payload = _apply_chain(x.params, chain, reference_vector(x.params))
    return Hypervector(x.params, payload, role=chain)


def unbind(key: Hypervector, z: Hypervector) -> Hypervector:
    if key.role is None:
        raise UnsupportedOperation("MBAT unbinding needs a role-bearing key")
    inverse_chain: RoleChain = tuple((seed, not transposed) for seed, transposed in reversed(key.role))
    payload = _apply_chain(key.params, inverse_chain, z.payload)
    chain = None
    if z.role is not None and len(inverse_chain) + len(z.role) <= MAX_ROLE_CHAIN:
        chain = inverse_chain + z.role
    return Hypervector(key.params, payload, role=chain)


def bundle_many(params: AlgebraParams, vectors: Sequence[Hypervector], mode: BundleMode) -> Hypervector:
    total = raw_sum(vectors)
    if mode is BundleMode.RAW:
        return Hypervector(params, total)
    return Hypervector(params, unit_normalized(total))


def similarity(x: Hypervector, y: Hypervector) -> float:
    return cosine(x.payload, y.payload)


def identity(params: AlgebraParams) -> Hypervector:
    return Hypervector(params, reference_vector(params).copy(), role=())


def zero(params: AlgebraParams) -> Hypervector:
    return Hypervector(params, np.zeros(params.dimension))


def scalar_mul(a: float, x: Hypervector) -> Hypervector:
    a = require_finite_scalar(a)
    # Scaling changes the payload but not any matrix action a chain would
    # imply, so only the unscaled vector keeps its role.
    return Hypervector(x.params, a * x.payload, role=x.role if a == 1.0 else None)
