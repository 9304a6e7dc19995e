"""Shared kernel helpers for the dense algebras."""
from __future__ import annotations

from typing import Sequence

import numpy as np

from hyperrig.errors import DomainError, SimilarityUndefined
from hyperrig.vector import Hypervector


def cosine(x: np.ndarray, y: np.ndarray) -> float:
    nx = float(np.linalg.norm(x))
    ny = float(np.linalg.norm(y))
    if nx == 0.0 or ny == 0.0:
        raise SimilarityUndefined("cosine similarity is undefined for a zero vector")
    return float(np.dot(x, y) / (nx * ny))


def raw_sum(vectors: Sequence[Hypervector]) -> np.ndarray:
    return np.sum([v.payload for v in vectors], axis=0)


def unit_normalized(total: np.ndarray) -> np.ndarray:
    norm = float(np.linalg.norm(total))
    if norm == 0.0:
        raise DomainError("cannot normalize a zero-sum bundle")
    return total / norm


def require_finite_scalar(a: float) -> float:
    a = float(a)
    if not np.isfinite(a):
        raise DomainError(f"scalars must be finite, got {a!r}")
    return a
