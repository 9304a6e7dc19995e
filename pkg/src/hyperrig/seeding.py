"""Deterministic seed derivation.

All randomness in the library flows from a 64-bit master seed through a
splitmix64-style mixer, so every base vector, braid permutation, role matrix,
tie-break coin, and Monte-Carlo trial regenerates bit-identically from its
coordinates. Nothing ever touches global RNG state.
"""
from __future__ import annotations

import hashlib

import numpy as np

MASK64 = (1 << 64) - 1

# Default master seed; the CLI documents this constant and lets
# HYPERRIG_SEED override it.
DEFAULT_MASTER_SEED = 0xC0FFEE

# Domain tags keep unrelated derived streams decorrelated.
TAG_SYMBOL = 1
TAG_BRAID = 2
TAG_TIE = 3
TAG_PHASE_FIX = 4
TAG_ROLE_MATRIX = 5
TAG_GUARD = 6
TAG_CDT = 7
TAG_TRIAL = 8
TAG_REFERENCE = 9


def splitmix64(z: int) -> int:
    """One splitmix64 avalanche step over a 64-bit state."""
    z = (z + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return (z ^ (z >> 31)) & MASK64


def mix(*parts: int) -> int:
    """Fold any number of integers into one well-mixed 64-bit value.

    Negative inputs are reduced to their two's-complement 64-bit image, so
    arbitrary Python ints are accepted.
    """
    acc = 0
    for part in parts:
        acc = splitmix64((acc ^ (part & MASK64)) & MASK64)
    return acc


def rng_for(*parts: int) -> np.random.Generator:
    """PCG64 generator seeded from the mixed parts."""
    return np.random.Generator(np.random.PCG64(mix(*parts)))


def symbol_seed_for_name(name: str) -> int:
    """Stable 64-bit symbol seed for a UTF-8 name (hash() is salted, this is not)."""
    digest = hashlib.blake2b(name.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


_PERM_CACHE: dict[tuple[int, int, int], tuple[np.ndarray, np.ndarray]] = {}


def braid_permutation(master_seed: int, role_index: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Fixed permutation (and its inverse) for one braid role at size n.

    Role indices 0, 1, 2, ... give independent permutations; the same
    coordinates always return the same arrays.
    """
    key = (master_seed & MASK64, role_index, n)
    cached = _PERM_CACHE.get(key)
    if cached is None:
        perm = rng_for(master_seed, TAG_BRAID, role_index, n).permutation(n)
        inv = np.empty(n, dtype=np.int64)
        inv[perm] = np.arange(n, dtype=np.int64)
        perm.setflags(write=False)
        inv.setflags(write=False)
        cached = (perm, inv)
        _PERM_CACHE[key] = cached
    return cached


def tie_coins(master_seed: int, operand_count: int, n: int) -> np.ndarray:
    """Per-element tie-break coins in {0,1}, keyed by operand count only.

    The pattern is independent of the operands, which makes majority
    bundling exactly commutative and reproducible.
    """
    return rng_for(master_seed, TAG_TIE, operand_count).integers(0, 2, size=n).astype(np.int64)


def fix_phases(master_seed: int, operand_count: int, n: int) -> np.ndarray:
    """Fallback phases for zero-magnitude sums in phasor normalization."""
    return rng_for(master_seed, TAG_PHASE_FIX, operand_count).uniform(-np.pi, np.pi, size=n)
