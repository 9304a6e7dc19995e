"""Concrete kernels for every supported algebra, keyed by AlgebraId.

Each kernel module exposes the same surface (random_vector, bind, unbind,
inverse, bundle_many, similarity, identity, zero, scalar_mul); the core
module validates operands and dispatches here.
"""
from __future__ import annotations

from types import ModuleType

from hyperrig.algebras import bsc, bsdc, fhrr, hrr, mapfam, mbat, tpr, vtb
from hyperrig.algebras.mbat import RoleMatrix, role_matrix
from hyperrig.params import AlgebraId, BundleMode

_KERNELS: dict[AlgebraId, ModuleType] = {
    AlgebraId.TPR: tpr,
    AlgebraId.MAP_I: mapfam,
    AlgebraId.MAP_B: mapfam,
    AlgebraId.MAP_C: mapfam,
    AlgebraId.FHRR: fhrr,
    AlgebraId.HRR: hrr,
    AlgebraId.MBAT: mbat,
    AlgebraId.VTB: vtb,
    AlgebraId.BSC: bsc,
    AlgebraId.BSDC_S: bsdc,
    AlgebraId.BSDC_SEG: bsdc,
    AlgebraId.BSDC_CDT: bsdc,
}


def kernel(algebra_id: AlgebraId) -> ModuleType:
    return _KERNELS[algebra_id]


__all__ = [
    "BundleMode",
    "RoleMatrix",
    "bsc",
    "bsdc",
    "fhrr",
    "hrr",
    "kernel",
    "mapfam",
    "mbat",
    "role_matrix",
    "tpr",
    "vtb",
]
