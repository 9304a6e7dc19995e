"""Named codebooks with nearest-neighbor cleanup.

An ItemMemory is an immutable snapshot mapping unique names to vectors
that all share one AlgebraParams. Insertion returns a new snapshot;
cleanup projects a noisy query onto the closest stored entry (exact
linear scan, ties broken by lexicographic name order so results are
platform-independent).

The module also owns the codebook JSON format shared with the CLI:

    {
      "format_version": 1,
      "algebra": {"algebra_id": ..., "dimension": ..., "density": ...,
                  "block_size": ..., "master_seed": ...},
      "vectors": {name: entry, ...}
    }

where an entry is {"data": [...]} for real carriers, {"phases": [...]}
for unit-magnitude phasors ({"re": [...], "im": [...]} otherwise),
{"bits": [...]} for dense binary, and {"indices": [...]} for sparse
vectors. Entries may carry "dim" when the dimension tag differs from the
algebra dimension (tensor products) and "role" for MBAT factor chains.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

import numpy as np

from hyperrig import core
from hyperrig.errors import (
    CodebookFormatError,
    DimensionError,
    DuplicateNameError,
    EmptyMemoryError,
)
from hyperrig.params import AlgebraId, AlgebraParams, Carrier
from hyperrig.vector import Hypervector

FORMAT_VERSION = 1


@dataclass(frozen=True, eq=False)
class CleanupResult:
    name: str
    vector: Hypervector
    score: float
    margin: float  # gap to the runner-up score; inf for a single entry


@dataclass(frozen=True, eq=False)
class ItemMemory:
    params: AlgebraParams
    entries: tuple[tuple[str, Hypervector], ...] = ()
    # Lazy stacked-payload cache; an immutable snapshot makes this safe.
    _cache: dict | None = field(default=None, repr=False, compare=False)

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for name, vector in self.entries:
            if name in seen:
                raise DuplicateNameError(f"duplicate symbol name {name!r}")
            seen.add(name)
            if vector.params != self.params:
                raise DimensionError(f"entry {name!r} does not match the memory's algebra params")
        object.__setattr__(self, "_cache", None)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, name: str) -> bool:
        return any(n == name for n, _ in self.entries)

    def names(self) -> list[str]:
        return [n for n, _ in self.entries]

    def lookup(self, name: str) -> Hypervector:
        for n, v in self.entries:
            if n == name:
                return v
        raise KeyError(name)

    def items(self) -> Iterator[tuple[str, Hypervector]]:
        return iter(self.entries)


def insert(mem: ItemMemory, name: str, vector: Hypervector) -> ItemMemory:
    """Persistent insert: returns a new memory, the input is unchanged."""
    if name in mem:
        raise DuplicateNameError(f"symbol name {name!r} is already stored")
    return ItemMemory(mem.params, mem.entries + ((name, vector),))


def _score_cache(mem: ItemMemory) -> dict:
    cache = mem._cache
    if cache is not None:
        return cache
    carrier = mem.params.carrier
    payloads = [v.payload for _, v in mem.entries]
    if carrier is Carrier.SPARSE_INDICES:
        active = np.zeros((len(payloads), mem.params.dimension), dtype=bool)
        sizes = np.empty(len(payloads))
        for i, p in enumerate(payloads):
            active[i, p] = True
            sizes[i] = p.size
        cache = {"kind": "sparse", "active": active, "sizes": sizes}
    elif len({p.size for p in payloads}) > 1:
        cache = {"kind": "mixed"}
    else:
        matrix = np.stack(payloads)
        cache = {"kind": "dense", "matrix": matrix,
                 "norms": np.linalg.norm(matrix, axis=1)}
    object.__setattr__(mem, "_cache", cache)
    return cache


def _query_scores(mem: ItemMemory, query: Hypervector) -> np.ndarray:
    """Similarity of the query to every entry, vectorized per carrier."""
    cache = _score_cache(mem)
    if cache["kind"] == "sparse":
        q = query.payload
        overlap = cache["active"][:, q].sum(axis=1) if q.size else np.zeros(len(mem.entries))
        larger = np.maximum(cache["sizes"], q.size)
        if np.any(larger == 0):
            return np.array([core.similarity(query, v) for _, v in mem.entries])
        return overlap / larger
    if cache["kind"] == "mixed" or cache["matrix"].shape[1] != query.payload.size:
        # Mixed dimension tags (tensor products): per-entry fallback.
        return np.array([core.similarity(query, v) for _, v in mem.entries])
    matrix = cache["matrix"]
    carrier = mem.params.carrier
    if carrier is Carrier.DENSE_BITS:
        return 1.0 - np.count_nonzero(matrix != query.payload, axis=1) / query.dimension_tag
    norms = cache["norms"] * np.linalg.norm(query.payload)
    if carrier is Carrier.DENSE_COMPLEX:
        return np.real(matrix @ np.conj(query.payload)) / norms
    return matrix @ query.payload / norms


def scores(mem: ItemMemory, query: Hypervector) -> np.ndarray:
    """Similarity of the query to every entry, in insertion order."""
    if len(mem) == 0:
        raise EmptyMemoryError("scores against an empty memory")
    return _query_scores(mem, query)


def cleanup(mem: ItemMemory, query: Hypervector) -> CleanupResult:
    """Project a noisy vector onto the closest stored entry."""
    if len(mem) == 0:
        raise EmptyMemoryError("cleanup against an empty memory")
    scores = _query_scores(mem, query)
    best_score = float(np.max(scores))
    tied = [i for i in np.flatnonzero(scores == best_score)]
    winner = min(tied, key=lambda i: mem.entries[i][0])
    others = np.delete(scores, winner)
    margin = best_score - float(np.max(others)) if others.size else math.inf
    name, vector = mem.entries[winner]
    return CleanupResult(name, vector, best_score, margin)


def collision_report(mem: ItemMemory, threshold: float) -> list[tuple[str, str, float]]:
    """All unordered entry pairs with similarity >= threshold, highest first."""
    pairs: list[tuple[str, str, float]] = []
    for i in range(len(mem.entries)):
        name_i, vec_i = mem.entries[i]
        for j in range(i + 1, len(mem.entries)):
            name_j, vec_j = mem.entries[j]
            score = core.similarity(vec_i, vec_j)
            if score >= threshold:
                first, second = sorted((name_i, name_j))
                pairs.append((first, second, score))
    pairs.sort(key=lambda item: (-item[2], item[0], item[1]))
    return pairs


def build_codebook(params: AlgebraParams, names: Iterable[str]) -> ItemMemory:
    """Memory of freshly generated base vectors, one per name (seeded by name)."""
    from hyperrig.seeding import symbol_seed_for_name

    entries = tuple(
        (name, core.random_vector(params, symbol_seed_for_name(name))) for name in names
    )
    return ItemMemory(params, entries)


# --- codebook file format ---------------------------------------------------


def _encode_entry(vector: Hypervector) -> dict:
    carrier = vector.params.carrier
    entry: dict = {}
    if carrier is Carrier.SPARSE_INDICES:
        entry["indices"] = [int(i) for i in vector.payload]
    elif carrier is Carrier.DENSE_BITS:
        entry["bits"] = [int(b) for b in vector.payload]
    elif carrier is Carrier.DENSE_COMPLEX:
        magnitudes = np.abs(vector.payload)
        if np.allclose(magnitudes, 1.0, rtol=0.0, atol=1e-12):
            entry["phases"] = [float(a) for a in np.angle(vector.payload)]
        else:
            entry["re"] = [float(v) for v in vector.payload.real]
            entry["im"] = [float(v) for v in vector.payload.imag]
    else:
        entry["data"] = [float(v) for v in vector.payload]
    if vector.dimension_tag != vector.params.dimension:
        entry["dim"] = vector.dimension_tag
        entry["depth"] = vector.tensor_depth
    if vector.role is not None:
        entry["role"] = [[int(seed), bool(t)] for seed, t in vector.role]
    return entry


def _decode_entry(params: AlgebraParams, entry: dict) -> Hypervector:
    tag = int(entry.get("dim", params.dimension))
    depth = int(entry.get("depth", 1))
    role = None
    if "role" in entry:
        role = tuple((int(seed), bool(t)) for seed, t in entry["role"])
    if "indices" in entry:
        payload = np.asarray(entry["indices"], dtype=np.int64)
    elif "bits" in entry:
        payload = np.asarray(entry["bits"], dtype=np.int64)
    elif "phases" in entry:
        payload = np.exp(1j * np.asarray(entry["phases"], dtype=np.float64))
    elif "re" in entry:
        payload = np.asarray(entry["re"], dtype=np.float64) + 1j * np.asarray(entry["im"], dtype=np.float64)
    elif "data" in entry:
        payload = np.asarray(entry["data"], dtype=np.float64)
    else:
        raise CodebookFormatError(f"vector entry has no payload field: {sorted(entry)}")
    return Hypervector(params, payload, tag, role, depth)


def params_to_json(params: AlgebraParams) -> dict:
    return {
        "algebra_id": params.algebra_id.value,
        "dimension": params.dimension,
        "density": params.density,
        "block_size": params.block_size,
        "master_seed": params.master_seed,
    }


def params_from_json(obj: dict) -> AlgebraParams:
    try:
        return AlgebraParams(
            AlgebraId(obj["algebra_id"]),
            int(obj["dimension"]),
            obj.get("density"),
            obj.get("block_size"),
            int(obj.get("master_seed", 0)),
        )
    except (KeyError, ValueError) as exc:
        raise CodebookFormatError(f"bad algebra block: {exc}") from exc


def save_codebook(mem: ItemMemory, path: str | Path) -> None:
    doc = {
        "format_version": FORMAT_VERSION,
        "algebra": params_to_json(mem.params),
        "vectors": {name: _encode_entry(vector) for name, vector in mem.entries},
    }
    Path(path).write_text(json.dumps(doc, sort_keys=True), encoding="utf-8")


def load_codebook(path: str | Path) -> ItemMemory:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CodebookFormatError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict) or "algebra" not in doc or "vectors" not in doc:
        raise CodebookFormatError(f"{path}: missing algebra/vectors fields")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise CodebookFormatError(f"{path}: unsupported format_version {version!r}")
    params = params_from_json(doc["algebra"])
    entries = tuple(
        (name, _decode_entry(params, entry)) for name, entry in doc["vectors"].items()
    )
    return ItemMemory(params, entries)
