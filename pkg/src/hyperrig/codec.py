"""Structured encodings: function tables, tuples, integers, lists, trees.

Function tables curry a set of (x, f(x)) pairs into one bundle
F = sum of x (x) f(x); applying the code unbinds the argument back out and
optionally cleans the result against the range codebook. Composition
chains two codes, optionally cleaning between stages to suppress
crosstalk.

Integers encode either by repeated self-binding (algebras whose vectors
are not self-inverse) or by repeated braiding (self-inverse algebras,
where self-binding collapses). Fractional powers extend self-binding to
real exponents for the phasor and convolution algebras.

Lists and binary trees come in two constructions: BRAIDED (positions are
braid powers, exactly invertible) and GUARDED (positions are powers of
reserved guard symbols bound onto the items). For commutative binding the
two middle guard products of a depth-2 tree coincide exactly, so the
middle leaves cannot be told apart; this is a property of the algebra,
not a bug, and the law harness asserts it.

Structure bundles use the linear (raw) bundle wherever the carrier
supports similarity on it; dense-binary structures fall back to majority
and sparse structures to union, since Hamming/overlap similarity is not
defined on raw count vectors.

Shift-binding algebras act through their *right* operand, so role and
guard bindings place the information-carrying vector on the shifted side;
unbinding with the role/guard as the key is uniform across algebras.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from hyperrig import core
from hyperrig.errors import ConfigError, DomainError, UnsupportedOperation
from hyperrig.memory import ItemMemory, cleanup
from hyperrig.params import (
    AlgebraId,
    AlgebraParams,
    BraidRole,
    BundleMode,
    Carrier,
    ROLE_DEFAULT,
    ROLE_LEFT,
    ROLE_RIGHT,
)
from hyperrig.seeding import TAG_GUARD, mix
from hyperrig.vector import Hypervector

# Repeated self-binding makes sense where vectors are not self-inverse.
_BIND_MODE_ALGEBRAS = frozenset(
    {AlgebraId.FHRR, AlgebraId.HRR, AlgebraId.VTB, AlgebraId.MBAT,
     AlgebraId.BSDC_S, AlgebraId.BSDC_SEG}
)

# The right operand is the acting one for the sparse shift binders.
_RIGHT_ACTING = frozenset({AlgebraId.BSDC_S, AlgebraId.BSDC_SEG})

GUARD_LIST = 0
GUARD_TREE_LEFT = 1
GUARD_TREE_RIGHT = 2


class Construction(str, Enum):
    BRAIDED = "braided"
    GUARDED = "guarded"


@dataclass(frozen=True, eq=False)
class FunctionCode:
    vector: Hypervector
    domain_memory: ItemMemory
    range_memory: ItemMemory


@dataclass(frozen=True, eq=False)
class ListCode:
    vector: Hypervector
    length: int
    construction: Construction
    role: BraidRole | None = None
    guard_seed: int | None = None


@dataclass(frozen=True, eq=False)
class TreeCode:
    vector: Hypervector
    depth: int
    construction: Construction


def guard_seed(params: AlgebraParams, which: int) -> int:
    """Reserved guard-symbol seed (regenerable, never stored)."""
    return mix(params.master_seed, TAG_GUARD, which)


def guard_vector(params: AlgebraParams, which: int) -> Hypervector:
    return core.random_vector(params, guard_seed(params, which))


def structure_bundle(vectors: Sequence[Hypervector]) -> Hypervector:
    carrier = vectors[0].params.carrier
    if carrier in (Carrier.DENSE_BITS, Carrier.SPARSE_INDICES):
        return core.bundle_many(vectors, BundleMode.NATIVE)
    return core.bundle_many(vectors, BundleMode.RAW)


def keyed_bind(key: Hypervector, value: Hypervector) -> Hypervector:
    """Bind so that the key acts and the value carries the information."""
    if key.params.algebra_id in _RIGHT_ACTING:
        return core.bind(value, key)
    return core.bind(key, value)


def bind_power(x: Hypervector, n: int) -> Hypervector:
    """n-fold self-binding; n = 0 gives the algebra's bind identity."""
    if n < 0:
        raise DomainError(f"bind power needs n >= 0, got {n}")
    if n == 0:
        return core.identity(x.params)
    acc = x
    for _ in range(n - 1):
        acc = core.bind(acc, x)
    return acc


def _require_unbinding(params: AlgebraParams) -> None:
    if params.algebra_id is AlgebraId.BSDC_CDT:
        raise UnsupportedOperation("BSDC-CDT has no unbinding; this encoding cannot be decoded")


# --- function tables ---------------------------------------------------------


def encode_function(pairs: Sequence[tuple[Hypervector, Hypervector]]) -> FunctionCode:
    """Curry a finite function table into one bundle over x (x) f(x)."""
    if not pairs:
        raise DomainError("a function table needs at least one pair")
    params = pairs[0][0].params
    _require_unbinding(params)
    terms = []
    domain = ItemMemory(params)
    rng_mem = ItemMemory(params)
    from hyperrig.memory import insert

    for i, (x, fx) in enumerate(pairs):
        terms.append(keyed_bind(x, fx))
        domain = insert(domain, f"x{i:03d}", x)
        rng_mem = insert(rng_mem, f"y{i:03d}", fx)
    return FunctionCode(structure_bundle(terms), domain, rng_mem)


def apply_function(code: FunctionCode, x: Hypervector, clean: bool = False) -> Hypervector:
    """Evaluate the table at x by unbinding; clean=True projects the noisy
    result onto the range codebook."""
    raw = core.unbind(x, code.vector)
    if clean:
        return cleanup(code.range_memory, raw).vector
    return raw


def compose_apply(
    first: FunctionCode,
    second: FunctionCode,
    x: Hypervector,
    clean_between: bool = False,
) -> Hypervector:
    """Evaluate second(first(x)); clean_between denoises the intermediate
    value against first's range codebook before the second unbinding."""
    if first.range_memory.params != second.domain_memory.params:
        raise DomainError("function codes do not share an algebra between range and domain")
    stage = apply_function(first, x, clean=clean_between)
    return core.unbind(stage, second.vector)


# --- tuples ------------------------------------------------------------------


def encode_tuple(roles: Sequence[Hypervector], fillers: Sequence[Hypervector]) -> Hypervector:
    if not roles or len(roles) != len(fillers):
        raise DomainError(f"role/filler lists must be non-empty and equal length, got {len(roles)}/{len(fillers)}")
    _require_unbinding(roles[0].params)
    return structure_bundle([keyed_bind(r, f) for r, f in zip(roles, fillers)])


def decode_tuple(w: Hypervector, role: Hypervector) -> Hypervector:
    return core.unbind(role, w)


# --- integers and fractional powers -----------------------------------------


def encode_integer(x: Hypervector, n: int) -> Hypervector:
    """phi[n]: repeated self-binding, or repeated braiding where vectors
    are their own binding inverse."""
    if n < 0:
        raise DomainError(f"integer encoding needs n >= 0, got {n}")
    if x.params.algebra_id in _BIND_MODE_ALGEBRAS:
        return bind_power(x, n)
    return core.braid(x, ROLE_DEFAULT, n)


def fractional_power(x: Hypervector, r: float) -> Hypervector:
    """Self-binding at a real exponent (phasor / convolution algebras only)."""
    algebra = x.params.algebra_id
    if algebra is AlgebraId.FHRR:
        from hyperrig.algebras import fhrr

        return fhrr.power(x, float(r))
    if algebra is AlgebraId.HRR:
        from hyperrig.algebras import hrr

        return hrr.power(x, float(r))
    raise UnsupportedOperation(f"fractional powers are defined for FHRR and HRR, not {algebra.value}")


# --- lists -------------------------------------------------------------------


def encode_list(
    items: Sequence[Hypervector],
    construction: Construction = Construction.BRAIDED,
    role: BraidRole = ROLE_DEFAULT,
) -> ListCode:
    if not items:
        raise DomainError("cannot encode an empty list")
    params = items[0].params
    if construction is Construction.BRAIDED:
        terms = [core.braid(item, role, k) for k, item in enumerate(items)]
        return ListCode(structure_bundle(terms), len(items), construction, role=role)
    _require_unbinding(params)
    guard = guard_vector(params, GUARD_LIST)
    terms = [keyed_bind(bind_power(guard, k), item) for k, item in enumerate(items)]
    return ListCode(structure_bundle(terms), len(items), construction,
                    guard_seed=guard_seed(params, GUARD_LIST))


def decode_list_item(code: ListCode, k: int) -> Hypervector:
    """Noisy k-th item (0-based); the caller cleans it up against a codebook."""
    if not 0 <= k < code.length:
        raise DomainError(f"position {k} outside the encoded length {code.length}")
    if code.construction is Construction.BRAIDED:
        return core.braid(code.vector, code.role, -k)
    guard = guard_vector(code.vector.params, GUARD_LIST)
    return core.unbind(bind_power(guard, k), code.vector)


# --- binary trees ------------------------------------------------------------


def _tree_paths(depth: int) -> list[tuple[str, ...]]:
    paths = [()]
    for _ in range(depth):
        paths = [p + (d,) for p in paths for d in ("L", "R")]
    return paths


def _normalize_path(path: Sequence[str] | str) -> tuple[str, ...]:
    steps = tuple(path)
    if not steps or any(s not in ("L", "R") for s in steps):
        raise DomainError(f"a tree path is a non-empty sequence of 'L'/'R', got {path!r}")
    return steps


def encode_tree(
    leaves: Sequence[Hypervector],
    construction: Construction = Construction.BRAIDED,
) -> TreeCode:
    count = len(leaves)
    depth = count.bit_length() - 1
    if count < 2 or 2 ** depth != count:
        raise DomainError(f"leaf count must be a power of two >= 2, got {count}")
    params = leaves[0].params
    if construction is Construction.GUARDED:
        _require_unbinding(params)
        guards = {"L": guard_vector(params, GUARD_TREE_LEFT),
                  "R": guard_vector(params, GUARD_TREE_RIGHT)}
    roles = {"L": ROLE_LEFT, "R": ROLE_RIGHT}
    terms = []
    for path, leaf in zip(_tree_paths(depth), leaves):
        v = leaf
        # Innermost step first; the root's operation is applied last.
        for direction in reversed(path):
            if construction is Construction.BRAIDED:
                v = core.braid(v, roles[direction], 1)
            else:
                v = keyed_bind(guards[direction], v)
        terms.append(v)
    return TreeCode(structure_bundle(terms), depth, construction)


def decode_leaf(code: TreeCode, path: Sequence[str] | str) -> Hypervector:
    """Noisy leaf at the root-first path; caller cleans up."""
    steps = _normalize_path(path)
    if len(steps) != code.depth:
        raise DomainError(f"path length {len(steps)} does not match tree depth {code.depth}")
    params = code.vector.params
    roles = {"L": ROLE_LEFT, "R": ROLE_RIGHT}
    v = code.vector
    for direction in steps:
        if code.construction is Construction.BRAIDED:
            v = core.braid(v, roles[direction], -1)
        else:
            v = core.unbind(guard_vector(params, GUARD_TREE_LEFT if direction == "L" else GUARD_TREE_RIGHT), v)
    return v
