"""hyperrig: a multi-algebra vector symbolic architecture toolkit.

Twelve binding algebras behind one operation surface (similarity,
bundling, binding/unbinding, braiding, scalar multiplication), plus
structured encoders (functions, tuples, integers, fractional powers,
lists, trees), a cleanup item memory, an algebraic-law audit harness,
and deterministic capacity benchmarks.
"""
from hyperrig.core import (
    bind,
    braid,
    bundle,
    bundle_many,
    identity,
    inverse,
    metric_distance,
    random_vector,
    scalar_mul,
    similarity,
    unbind,
    zero,
)
from hyperrig.errors import (
    CodebookFormatError,
    ConfigError,
    DimensionError,
    DomainError,
    DuplicateNameError,
    EmptyMemoryError,
    SimilarityUndefined,
    UnsupportedOperation,
    VsaError,
)
from hyperrig.memory import (
    CleanupResult,
    ItemMemory,
    build_codebook,
    cleanup,
    collision_report,
    insert,
    load_codebook,
    save_codebook,
)
from hyperrig.params import (
    AlgebraId,
    AlgebraParams,
    BraidRole,
    BundleMode,
    Carrier,
)
from hyperrig.seeding import DEFAULT_MASTER_SEED, symbol_seed_for_name
from hyperrig.vector import Hypervector

__version__ = "0.1.0"

__all__ = [
    "AlgebraId",
    "AlgebraParams",
    "BraidRole",
    "BundleMode",
    "Carrier",
    "CleanupResult",
    "CodebookFormatError",
    "ConfigError",
    "DEFAULT_MASTER_SEED",
    "DimensionError",
    "DomainError",
    "DuplicateNameError",
    "EmptyMemoryError",
    "Hypervector",
    "ItemMemory",
    "SimilarityUndefined",
    "UnsupportedOperation",
    "VsaError",
    "bind",
    "braid",
    "build_codebook",
    "bundle",
    "bundle_many",
    "cleanup",
    "collision_report",
    "identity",
    "insert",
    "inverse",
    "load_codebook",
    "metric_distance",
    "random_vector",
    "save_codebook",
    "scalar_mul",
    "similarity",
    "symbol_seed_for_name",
    "unbind",
    "zero",
]
