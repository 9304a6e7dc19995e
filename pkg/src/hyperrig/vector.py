"""The hypervector value type.

A Hypervector is an immutable payload tagged with its AlgebraParams. The
payload representation follows the carrier: float64 for the real algebras,
complex128 for phasors, {0,1} uint8 for dense bits, and a sorted int64
index array for the sparse family (whose length is the active count, not
the dimension).

dimension_tag normally equals params.dimension; tensor-product bind
outputs carry the product of their operands' tags instead, and the tensor
multiplicative identity is the scalar [1] with tag 1.

MBAT vectors additionally carry a role chain: the sequence of (symbol
seed, transposed) orthogonal-matrix factors whose product acts on the
right operand during binding. Derived vectors with no chain (bundles,
braids) cannot appear as an MBAT left operand.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from hyperrig.errors import DimensionError, DomainError
from hyperrig.params import AlgebraParams, Carrier

# ((symbol_seed, transposed), ...); empty tuple = identity role.
RoleChain = tuple[tuple[int, bool], ...]

_DTYPES = {
    Carrier.DENSE_REAL: np.float64,
    Carrier.DENSE_COMPLEX: np.complex128,
    # int64 so raw (count-vector) bundles stay representable; bit-ness is
    # a value property checked by the operations that need it.
    Carrier.DENSE_BITS: np.int64,
    Carrier.SPARSE_INDICES: np.int64,
}


@dataclass(frozen=True, eq=False)
class Hypervector:
    params: AlgebraParams
    payload: np.ndarray
    dimension_tag: int = 0  # 0 sentinel replaced by params.dimension
    role: Optional[RoleChain] = None
    tensor_depth: int = 1

    def __post_init__(self) -> None:
        if self.dimension_tag == 0:
            object.__setattr__(self, "dimension_tag", self.params.dimension)
        carrier = self.params.carrier
        payload = np.asarray(self.payload, dtype=_DTYPES[carrier])
        if payload.ndim != 1:
            raise DomainError(f"payload must be one-dimensional, got shape {payload.shape}")
        if carrier is Carrier.SPARSE_INDICES:
            if payload.size and (payload[0] < 0 or payload[-1] >= self.dimension_tag):
                raise DomainError("sparse indices must lie in [0, dimension)")
            if payload.size > 1 and np.any(np.diff(payload) <= 0):
                raise DomainError("sparse indices must be strictly increasing")
        elif payload.size != self.dimension_tag:
            raise DimensionError(
                f"payload length {payload.size} does not match dimension tag {self.dimension_tag}"
            )
        payload.setflags(write=False)
        object.__setattr__(self, "payload", payload)

    @property
    def active_indices(self) -> np.ndarray:
        if self.params.carrier is not Carrier.SPARSE_INDICES:
            raise DomainError(f"{self.params.algebra_id.value} vectors are not sparse")
        return self.payload

    def with_payload(self, payload: np.ndarray, *, role: Optional[RoleChain] = None,
                     dimension_tag: int | None = None, tensor_depth: int | None = None) -> "Hypervector":
        """New vector sharing this one's params."""
        return Hypervector(
            self.params,
            payload,
            dimension_tag if dimension_tag is not None else self.dimension_tag,
            role,
            tensor_depth if tensor_depth is not None else self.tensor_depth,
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        head = np.array2string(self.payload[:4], precision=4, separator=", ")
        return (f"Hypervector({self.params.algebra_id.value}, d={self.dimension_tag}, "
                f"payload[:4]={head})")


def require_compatible(x: Hypervector, y: Hypervector) -> None:
    """Shared params and dimension tag, else DimensionError."""
    if x.params != y.params:
        raise DimensionError(
            f"operands belong to different algebras/configurations: "
            f"{x.params.algebra_id.value} d={x.params.dimension} vs "
            f"{y.params.algebra_id.value} d={y.params.dimension}"
        )
    if x.dimension_tag != y.dimension_tag:
        raise DimensionError(f"dimension tags differ: {x.dimension_tag} vs {y.dimension_tag}")


def payloads_equal(x: Hypervector, y: Hypervector, tol: float = 0.0) -> bool:
    """Exact (or toleranced) payload equality; sparse vectors compare as sets."""
    if x.params.carrier is Carrier.SPARSE_INDICES:
        return x.payload.size == y.payload.size and bool(np.all(x.payload == y.payload))
    if x.payload.size != y.payload.size:
        return False
    if tol == 0.0:
        return bool(np.array_equal(x.payload, y.payload))
    return bool(np.allclose(x.payload, y.payload, rtol=0.0, atol=tol))


def max_deviation(x: Hypervector, y: Hypervector) -> float:
    """Largest elementwise |difference|; sparse vectors measure symmetric difference size."""
    if x.params.carrier is Carrier.SPARSE_INDICES:
        return float(np.setxor1d(x.payload, y.payload).size)
    if x.payload.size != y.payload.size:
        return float("inf")
    if x.payload.size == 0:
        return 0.0
    return float(np.max(np.abs(x.payload.astype(np.complex128) - y.payload.astype(np.complex128))))
