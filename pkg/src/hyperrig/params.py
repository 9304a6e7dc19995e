"""Algebra configuration types.

AlgebraParams pins down which algebra a vector belongs to, its dimension,
sparsity / block configuration, and the master seed every derived stream
hangs off. Values are frozen; two vectors interoperate only when their
params compare equal.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from hyperrig.errors import ConfigError
from hyperrig.seeding import DEFAULT_MASTER_SEED, MASK64


class AlgebraId(str, Enum):
    TPR = "tpr"
    MAP_I = "map_i"
    MAP_B = "map_b"
    MAP_C = "map_c"
    FHRR = "fhrr"
    HRR = "hrr"
    MBAT = "mbat"
    VTB = "vtb"
    BSC = "bsc"
    BSDC_S = "bsdc_s"
    BSDC_SEG = "bsdc_seg"
    BSDC_CDT = "bsdc_cdt"


BSDC_FAMILY = frozenset({AlgebraId.BSDC_S, AlgebraId.BSDC_SEG, AlgebraId.BSDC_CDT})


class Carrier(Enum):
    """Payload kind of an algebra's vectors."""

    DENSE_REAL = "dense_real"          # float64 entries
    DENSE_COMPLEX = "dense_complex"    # complex128 entries (unit magnitude at base)
    DENSE_BITS = "dense_bits"          # {0,1} entries
    SPARSE_INDICES = "sparse_indices"  # sorted active index set


_CARRIERS = {
    AlgebraId.TPR: Carrier.DENSE_REAL,
    AlgebraId.MAP_I: Carrier.DENSE_REAL,
    AlgebraId.MAP_B: Carrier.DENSE_REAL,
    AlgebraId.MAP_C: Carrier.DENSE_REAL,
    AlgebraId.FHRR: Carrier.DENSE_COMPLEX,
    AlgebraId.HRR: Carrier.DENSE_REAL,
    AlgebraId.MBAT: Carrier.DENSE_REAL,
    AlgebraId.VTB: Carrier.DENSE_REAL,
    AlgebraId.BSC: Carrier.DENSE_BITS,
    AlgebraId.BSDC_S: Carrier.SPARSE_INDICES,
    AlgebraId.BSDC_SEG: Carrier.SPARSE_INDICES,
    AlgebraId.BSDC_CDT: Carrier.SPARSE_INDICES,
}

# Algebras whose similarity is an inner product / cosine; drives the
# angular metric adapter.
COSINE_FAMILY = frozenset(
    {AlgebraId.TPR, AlgebraId.MAP_I, AlgebraId.MAP_B, AlgebraId.MAP_C,
     AlgebraId.FHRR, AlgebraId.HRR, AlgebraId.MBAT, AlgebraId.VTB}
)

# Tensor-product outputs may not exceed this flattened size, and binds may
# not nest beyond depth 2.
TPR_MAX_DIMENSION = 1 << 20
TPR_MAX_DEPTH = 2

MAX_BRAID_ROLES = 16


def carrier_of(algebra_id: AlgebraId) -> Carrier:
    return _CARRIERS[algebra_id]


class BundleMode(str, Enum):
    """RAW keeps the elementwise sum; NATIVE applies the algebra's own
    post-processing (threshold / cutting / normalization / OR)."""

    RAW = "raw"
    NATIVE = "native"


@dataclass(frozen=True)
class BraidRole:
    """Selects one of the fixed braid permutations (0 = default, 1/2 = tree left/right)."""

    role_index: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.role_index < MAX_BRAID_ROLES:
            raise ConfigError(f"braid role_index must be in [0, {MAX_BRAID_ROLES}), got {self.role_index}")


ROLE_DEFAULT = BraidRole(0)
ROLE_LEFT = BraidRole(1)
ROLE_RIGHT = BraidRole(2)


@dataclass(frozen=True)
class AlgebraParams:
    """Identity and configuration of one algebra instance.

    density applies only to the BSDC family (active-bit fraction, default
    1/sqrt(d), or 1/block_size for the segment variant); block_size applies
    only to BSDC-SEG and must divide the dimension.
    """

    algebra_id: AlgebraId
    dimension: int
    density: float | None = None
    block_size: int | None = None
    master_seed: int = DEFAULT_MASTER_SEED

    def __post_init__(self) -> None:
        if not isinstance(self.dimension, int) or self.dimension < 1:
            raise ConfigError(f"dimension must be a positive integer, got {self.dimension!r}")
        object.__setattr__(self, "master_seed", self.master_seed & MASK64)

        if self.algebra_id is AlgebraId.VTB:
            root = math.isqrt(self.dimension)
            if root * root != self.dimension:
                raise ConfigError(f"VTB requires a perfect-square dimension, got {self.dimension}")

        if self.algebra_id in BSDC_FAMILY:
            self._init_sparse()
        else:
            if self.density is not None:
                raise ConfigError(f"density is only meaningful for the BSDC family, not {self.algebra_id.value}")
            if self.block_size is not None:
                raise ConfigError(f"block_size is only meaningful for BSDC-SEG, not {self.algebra_id.value}")

    def _init_sparse(self) -> None:
        if self.algebra_id is AlgebraId.BSDC_SEG:
            block = self.block_size
            if block is None:
                block = math.isqrt(self.dimension)
                if block * block != self.dimension:
                    raise ConfigError(
                        "BSDC-SEG needs an explicit block_size when the dimension is not a perfect square"
                    )
                object.__setattr__(self, "block_size", block)
            if block < 1 or self.dimension % block != 0:
                raise ConfigError(f"block_size {block} must divide the dimension {self.dimension}")
            if self.density is None:
                object.__setattr__(self, "density", 1.0 / block)
        else:
            if self.block_size is not None:
                raise ConfigError(f"block_size is only meaningful for BSDC-SEG, not {self.algebra_id.value}")
            if self.density is None:
                object.__setattr__(self, "density", 1.0 / math.sqrt(self.dimension))
        if not 0.0 < self.density <= 1.0:
            raise ConfigError(f"density must lie in (0, 1], got {self.density}")
        if self.active_count < 1:
            raise ConfigError(f"density {self.density} rounds to zero active bits at dimension {self.dimension}")

    @property
    def carrier(self) -> Carrier:
        return carrier_of(self.algebra_id)

    @property
    def active_count(self) -> int:
        """Number of active bits a BSDC base vector carries."""
        if self.density is None:
            raise ConfigError(f"{self.algebra_id.value} has no sparsity configuration")
        return int(round(self.density * self.dimension))

    @property
    def block_count(self) -> int:
        if self.block_size is None:
            raise ConfigError(f"{self.algebra_id.value} has no block configuration")
        return self.dimension // self.block_size
