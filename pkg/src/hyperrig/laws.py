"""Executable audits of the algebraic structure each algebra provides.

Three suites emit machine-readable LawReport records:

- check_rig_laws: the division-rig axioms (commutative bundling with an
  additive identity, associative binding with a two-sided multiplicative
  identity and inverses, distributivity, absorption). Raw bundling is the
  default; distributivity is re-run against native bundling and downgraded
  to HOLDS_APPROX or FAILS with a stored counterexample.
- check_metric_axioms: the Lawvere axioms for the similarity-derived
  distance (identity, triangle inequality with 1e-9 slack, plus
  non-negativity and informational symmetry).
- check_desiderata: similarity boundedness, bundle similarity versus
  fresh distractors, binding dissimilarity, invertibility classification,
  braid decorrelation, bind-order sensitivity, and random-pair
  near-orthogonality.

Every trial derives its operands from (master seed, law id, trial index,
slot), so identical configurations reproduce byte-identical reports, and
any FAILS verdict carries the seeds of a concrete counterexample.

conformance_matrix condenses the suites into the per-algebra columns
{commutative, self-inverse, native braid, unbinding class} and compares
them against the expected classification table.
"""
from __future__ import annotations

import json
import zlib
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Callable, Iterable

import numpy as np

from hyperrig import core
from hyperrig.errors import ConfigError, VsaError
from hyperrig.params import AlgebraId, AlgebraParams, BraidRole, BundleMode, Carrier
from hyperrig.seeding import TAG_TRIAL, mix
from hyperrig.vector import Hypervector, max_deviation

EXACT_TOL = 1e-6
TRIANGLE_SLACK = 1e-9
APPROX_SIM_THRESHOLD = 0.95   # native-bundling rerun downgrade bar
INVERSE_APPROX_FLOOR = 0.5    # below this mean similarity unbinding is broken

REPORT_FORMAT_VERSION = 1

# Algebras whose Table row provides a braid (permutation) natively; the
# rest expose the default permutation as a flagged extension.
NATIVE_BRAID = frozenset(
    {AlgebraId.MAP_I, AlgebraId.MAP_B, AlgebraId.MAP_C,
     AlgebraId.FHRR, AlgebraId.HRR, AlgebraId.BSC}
)

# For the shift binders the acting operand is the right one, so the
# recoverable factor from bind(x, y) is x with key y.
_RIGHT_ACTING = frozenset({AlgebraId.BSDC_S, AlgebraId.BSDC_SEG})

_MBAT_POOL = 8  # distinct role matrices per operand slot during trials


class Verdict(str, Enum):
    HOLDS = "HOLDS"
    HOLDS_APPROX = "HOLDS_APPROX"
    FAILS = "FAILS"
    NOT_APPLICABLE = "NOT_APPLICABLE"


class LawMode(str, Enum):
    EXACT = "EXACT"
    STATISTICAL = "STATISTICAL"


@dataclass(frozen=True, eq=False)
class LawReport:
    algebra: AlgebraParams
    law_id: str
    mode: LawMode
    verdict: Verdict
    evidence: dict


def _law_hash(law_id: str) -> int:
    return zlib.crc32(law_id.encode("utf-8"))


def _symbol_seed(params: AlgebraParams, law_id: str, trial: int, slot: int) -> int:
    seed = mix(TAG_TRIAL, _law_hash(law_id), trial, slot)
    if params.algebra_id is AlgebraId.MBAT:
        # Role matrices are d x d; draw trial operands from a small pooled
        # seed set per slot so the matrix cache stays bounded.
        return mix(TAG_TRIAL, 1 + slot, seed % _MBAT_POOL)
    return seed


def _operand(params: AlgebraParams, law_id: str, trial: int, slot: int) -> Hypervector:
    return core.random_vector(params, _symbol_seed(params, law_id, trial, slot))


def _check_trials(
    params: AlgebraParams,
    law_id: str,
    trials: int,
    one_trial: Callable[[int], float],
    mode: LawMode = LawMode.EXACT,
    extra: dict | None = None,
) -> LawReport:
    """Run an exact law: one_trial returns the deviation for trial t."""
    worst = 0.0
    for t in range(trials):
        try:
            dev = one_trial(t)
        except VsaError as exc:
            evidence = {"trials_attempted": t, "reason": f"{type(exc).__name__}: {exc}"}
            evidence.update(extra or {})
            return LawReport(params, law_id, mode, Verdict.NOT_APPLICABLE, evidence)
        if not np.isfinite(dev) or dev > EXACT_TOL:
            evidence = {"trial": t, "deviation": float(dev), "tolerance": EXACT_TOL}
            evidence.update(extra or {})
            return LawReport(params, law_id, mode, Verdict.FAILS, evidence)
        worst = max(worst, float(dev))
    evidence = {"trials": trials, "max_deviation": worst, "tolerance": EXACT_TOL}
    evidence.update(extra or {})
    return LawReport(params, law_id, mode, Verdict.HOLDS, evidence)


# --- rig laws ----------------------------------------------------------------


def _bundle(vectors, mode):
    return core.bundle_many(vectors, mode)


def check_rig_laws(params: AlgebraParams, trials: int) -> list[LawReport]:
    if trials < 100:
        raise ConfigError(f"law suites need at least 100 trials, got {trials}")
    reports: list[LawReport] = []
    raw = BundleMode.RAW

    def op(law_id, t, slot):
        return _operand(params, law_id, t, slot)

    # Bundle commutativity / associativity / additive identity (raw mode).
    reports.append(_check_trials(params, "bundle_commutativity", trials, lambda t: max_deviation(
        _bundle([op("bundle_commutativity", t, 0), op("bundle_commutativity", t, 1)], raw),
        _bundle([op("bundle_commutativity", t, 1), op("bundle_commutativity", t, 0)], raw)),
        extra={"bundling": "raw"}))

    def assoc(t):
        x, y, z = (op("bundle_associativity", t, s) for s in range(3))
        return max_deviation(_bundle([_bundle([x, y], raw), z], raw),
                             _bundle([x, _bundle([y, z], raw)], raw))

    reports.append(_check_trials(params, "bundle_associativity", trials, assoc, extra={"bundling": "raw"}))

    reports.append(_check_trials(params, "additive_identity", trials, lambda t: max_deviation(
        _bundle([core.zero(params), op("additive_identity", t, 0)], raw), op("additive_identity", t, 0)),
        extra={"bundling": "raw"}))

    # Additive inverses exist only for the numeric carriers (rig vs ring).
    def add_inv(t):
        x = op("additive_inverse", t, 0)
        summed = _bundle([x, core.scalar_mul(-1.0, x)], raw)
        return float(np.max(np.abs(summed.payload))) if summed.payload.size else 0.0

    report = _check_trials(params, "additive_inverse", trials, add_inv,
                           extra={"note": "rig structure: absence is expected for non-numeric carriers"})
    reports.append(report)

    # Bind associativity.
    def bind_assoc(t):
        x, y, z = (op("bind_associativity", t, s) for s in range(3))
        return max_deviation(core.bind(core.bind(x, y), z), core.bind(x, core.bind(y, z)))

    reports.append(_check_trials(params, "bind_associativity", trials, bind_assoc))

    # Two-sided multiplicative identity.
    def mult_identity(t):
        x = op("multiplicative_identity", t, 0)
        e = core.identity(params)
        return max(max_deviation(core.bind(e, x), x), max_deviation(core.bind(x, e), x))

    reports.append(_check_trials(params, "multiplicative_identity", trials, mult_identity))

    # Distributivity, raw then native rerun.
    def dist_right(mode):
        def run(t):
            x, y, z = (op("distributivity", t, s) for s in range(3))
            lhs = core.bind(x, _bundle([y, z], mode))
            rhs = _bundle([core.bind(x, y), core.bind(x, z)], mode)
            return max_deviation(lhs, rhs)
        return run

    def dist_left(mode):
        def run(t):
            x, y, z = (op("distributivity_left", t, s) for s in range(3))
            lhs = core.bind(_bundle([y, z], mode), x)
            rhs = _bundle([core.bind(y, x), core.bind(z, x)], mode)
            return max_deviation(lhs, rhs)
        return run

    reports.append(_check_trials(params, "distributivity", trials, dist_right(raw),
                                 extra={"bundling": "raw", "side": "right"}))
    reports.append(_check_trials(params, "distributivity_left", trials, dist_left(raw),
                                 extra={"bundling": "raw", "side": "left"}))
    reports.append(_native_rerun(params, "distributivity_native", trials, dist_right(BundleMode.NATIVE),
                                 lambda t: _native_sim_pair(params, "distributivity", t, right=True),
                                 side="right"))
    reports.append(_native_rerun(params, "distributivity_left_native", trials, dist_left(BundleMode.NATIVE),
                                 lambda t: _native_sim_pair(params, "distributivity_left", t, right=False),
                                 side="left"))

    # Absorption by the additive identity.
    def absorption(t):
        x = op("absorption", t, 0)
        zero_vec = core.zero(params)
        left = core.bind(zero_vec, x)
        right = core.bind(x, zero_vec)
        devs = []
        for out in (left, right):
            if out.params.carrier is Carrier.SPARSE_INDICES:
                devs.append(float(out.payload.size))
            else:
                devs.append(float(np.max(np.abs(out.payload))) if out.payload.size else 0.0)
        return max(devs)

    reports.append(_check_trials(params, "absorption", trials, absorption))

    # Multiplicative inverses (exact where the algebra provides them,
    # statistical where unbinding is approximate).
    reports.append(_inverse_law(params, trials))
    return reports


def _native_sim_pair(params: AlgebraParams, law_id: str, t: int, right: bool) -> float:
    x, y, z = (_operand(params, law_id, t, s) for s in range(3))
    native = BundleMode.NATIVE
    if right:
        lhs = core.bind(x, _bundle([y, z], native))
        rhs = _bundle([core.bind(x, y), core.bind(x, z)], native)
    else:
        lhs = core.bind(_bundle([y, z], native), x)
        rhs = _bundle([core.bind(y, x), core.bind(z, x)], native)
    return core.similarity(lhs, rhs)


def _native_rerun(params, law_id, trials, exact_trial, sim_trial, side) -> LawReport:
    exact = _check_trials(params, law_id, trials, exact_trial,
                          extra={"bundling": "native", "side": side})
    if exact.verdict is not Verdict.FAILS:
        return exact
    sims = []
    for t in range(trials):
        try:
            sims.append(sim_trial(t))
        except VsaError as exc:
            evidence = {"bundling": "native", "side": side,
                        "reason": f"{type(exc).__name__}: {exc}"}
            return LawReport(params, law_id, LawMode.STATISTICAL, Verdict.NOT_APPLICABLE, evidence)
    mean_sim = float(np.mean(sims))
    evidence = dict(exact.evidence)
    evidence.update({"mean_similarity": mean_sim, "trials": trials,
                     "approx_threshold": APPROX_SIM_THRESHOLD})
    verdict = Verdict.HOLDS_APPROX if mean_sim > APPROX_SIM_THRESHOLD else Verdict.FAILS
    return LawReport(params, law_id, LawMode.STATISTICAL, verdict, evidence)


def _inverse_roundtrip_sim(params: AlgebraParams, law_id: str, t: int) -> float:
    x = _operand(params, law_id, t, 0)
    y = _operand(params, law_id, t, 1)
    bound = core.bind(x, y)
    if params.algebra_id in _RIGHT_ACTING:
        return core.similarity(core.unbind(y, bound), x)
    return core.similarity(core.unbind(x, bound), y)


def _inverse_law(params: AlgebraParams, trials: int) -> LawReport:
    law_id = "multiplicative_inverse"
    sims = []
    for t in range(trials):
        try:
            sims.append(_inverse_roundtrip_sim(params, law_id, t))
        except VsaError as exc:
            evidence = {"trials_attempted": t, "reason": f"{type(exc).__name__}: {exc}"}
            return LawReport(params, law_id, LawMode.EXACT, Verdict.NOT_APPLICABLE, evidence)
    sims_arr = np.asarray(sims)
    min_sim = float(sims_arr.min())
    mean_sim = float(sims_arr.mean())
    if min_sim >= 1.0 - EXACT_TOL:
        return LawReport(params, law_id, LawMode.EXACT, Verdict.HOLDS,
                         {"trials": trials, "min_similarity": min_sim, "classification": "exact"})
    if mean_sim >= INVERSE_APPROX_FLOOR:
        return LawReport(params, law_id, LawMode.STATISTICAL, Verdict.HOLDS_APPROX,
                         {"trials": trials, "mean_similarity": mean_sim,
                          "min_similarity": min_sim, "classification": "approximate"})
    return LawReport(params, law_id, LawMode.STATISTICAL, Verdict.FAILS,
                     {"trials": trials, "mean_similarity": mean_sim, "classification": "broken"})


# --- metric axioms -----------------------------------------------------------


def check_metric_axioms(params: AlgebraParams, trials: int) -> list[LawReport]:
    if trials < 100:
        raise ConfigError(f"law suites need at least 100 trials, got {trials}")
    reports: list[LawReport] = []

    reports.append(_check_trials(params, "metric_identity", trials, lambda t: abs(
        core.metric_distance(_operand(params, "metric_identity", t, 0),
                             _operand(params, "metric_identity", t, 0)))))

    def nonneg(t):
        x, y = (_operand(params, "metric_nonnegativity", t, s) for s in range(2))
        return max(0.0, -core.metric_distance(x, y))

    reports.append(_check_trials(params, "metric_nonnegativity", trials, nonneg))

    def symmetry(t):
        x, y = (_operand(params, "metric_symmetry", t, s) for s in range(2))
        return abs(core.metric_distance(x, y) - core.metric_distance(y, x))

    sym = _check_trials(params, "metric_symmetry", trials, symmetry,
                        extra={"note": "informational: Lawvere spaces do not require symmetry"})
    reports.append(sym)

    violations = 0
    worst = -float("inf")
    example = None
    for t in range(trials):
        x, y, z = (_operand(params, "metric_triangle", t, s) for s in range(3))
        slack = (core.metric_distance(x, y) + core.metric_distance(y, z)
                 + TRIANGLE_SLACK - core.metric_distance(x, z))
        if slack < 0:
            violations += 1
            if -slack > worst:
                worst = -slack
                example = t
    if violations:
        reports.append(LawReport(params, "metric_triangle", LawMode.STATISTICAL, Verdict.FAILS,
                                 {"trials": trials, "violations": violations,
                                  "worst_excess": worst, "trial": example,
                                  "slack": TRIANGLE_SLACK}))
    else:
        reports.append(LawReport(params, "metric_triangle", LawMode.STATISTICAL, Verdict.HOLDS,
                                 {"trials": trials, "violations": 0, "slack": TRIANGLE_SLACK}))
    return reports


# --- desiderata --------------------------------------------------------------


def _baseline_similarity(params: AlgebraParams) -> float:
    """Expected similarity of two independent base vectors."""
    if params.carrier is Carrier.DENSE_BITS:
        return 0.5
    if params.carrier is Carrier.SPARSE_INDICES:
        return min(1.0, params.active_count / params.dimension)
    return 0.0


def _noise_scale(params: AlgebraParams) -> float:
    """Typical spread of random-pair similarity around its baseline."""
    if params.carrier is Carrier.DENSE_BITS:
        return 0.5 / np.sqrt(params.dimension)
    return 1.0 / np.sqrt(params.dimension)


def check_desiderata(params: AlgebraParams, trials: int) -> list[LawReport]:
    if trials < 100:
        raise ConfigError(f"law suites need at least 100 trials, got {trials}")
    reports: list[LawReport] = []
    algebra = params.algebra_id

    # Desideratum 1: bounded similarity with self-similarity 1.
    def bounded(t):
        x, y = (_operand(params, "similarity_bounded", t, s) for s in range(2))
        sim = core.similarity(x, y)
        dev = max(0.0, abs(sim) - 1.0)
        return max(dev, abs(core.similarity(x, x) - 1.0))

    reports.append(_check_trials(params, "similarity_bounded", trials, bounded))

    # Desideratum 2a: native bundles stay similar to their members, far
    # beyond what a fresh distractor reaches.
    member, fresh = [], []
    for t in range(trials):
        x, y, z = (_operand(params, "bundle_similarity", t, s) for s in range(3))
        bundled = core.bundle(x, y, BundleMode.NATIVE)
        member.append(core.similarity(x, bundled))
        fresh.append(core.similarity(z, bundled))
    member_mean = float(np.mean(member))
    fresh_p999 = float(np.percentile(fresh, 99.9))
    verdict = Verdict.HOLDS if member_mean > fresh_p999 else Verdict.FAILS
    reports.append(LawReport(params, "bundle_similarity", LawMode.STATISTICAL, verdict,
                             {"trials": trials, "member_mean": member_mean,
                              "fresh_p99_9": fresh_p999}))

    # Desideratum 2b: binding makes dissimilar outputs (CDT deliberately
    # keeps overlap; tensor products change dimension and cannot be
    # compared to their operands at all).
    if algebra is AlgebraId.TPR:
        reports.append(LawReport(params, "bind_dissimilarity", LawMode.STATISTICAL,
                                 Verdict.NOT_APPLICABLE,
                                 {"reason": "tensor bind output lives in a different dimension"}))
    else:
        base = _baseline_similarity(params)
        sims = []
        for t in range(trials):
            x, y = (_operand(params, "bind_dissimilarity", t, s) for s in range(2))
            sims.append(core.similarity(core.bind(x, y), x))
        mean_abs_dev = float(np.mean(np.abs(np.asarray(sims) - base)))
        mean_sim = float(np.mean(sims))
        if algebra is AlgebraId.BSDC_CDT:
            verdict = Verdict.HOLDS if mean_sim > 2.0 * base + 0.02 else Verdict.FAILS
            evidence = {"trials": trials, "mean_similarity": mean_sim,
                        "random_pair_baseline": base,
                        "note": "CDT binding intentionally overlaps its inputs"}
        else:
            bound = 3.0 * _noise_scale(params)
            verdict = Verdict.HOLDS if mean_abs_dev < bound else Verdict.FAILS
            evidence = {"trials": trials, "mean_abs_deviation_from_baseline": mean_abs_dev,
                        "baseline": base, "bound": bound}
        reports.append(LawReport(params, "bind_dissimilarity", LawMode.STATISTICAL, verdict, evidence))

    # Binding invertibility classification.
    reports.append(_invertibility_classification(params, trials))

    # Braid decorrelation and exact invertibility.
    role = BraidRole(0)
    braid_devs = []
    roundtrip_ok = True
    for t in range(trials):
        x = _operand(params, "braid_dissimilarity", t, 0)
        rotated = core.braid(x, role, 1)
        braid_devs.append(abs(core.similarity(x, rotated) - _baseline_similarity(params)))
        if max_deviation(core.braid(rotated, role, -1), x) > 0:
            roundtrip_ok = False
    braid_mean = float(np.mean(braid_devs))
    braid_bound = 3.0 * _noise_scale(params)
    verdict = Verdict.HOLDS if braid_mean < braid_bound and roundtrip_ok else Verdict.FAILS
    reports.append(LawReport(params, "braid_dissimilarity", LawMode.STATISTICAL, verdict,
                             {"trials": trials, "mean_abs_deviation_from_baseline": braid_mean,
                              "bound": braid_bound, "roundtrip_exact": roundtrip_ok,
                              "native_braid": algebra in NATIVE_BRAID,
                              "extension": algebra not in NATIVE_BRAID}))

    # Bind-order sensitivity (two factors for TPR whose products change
    # dimension, and for CDT where the three-factor form confounds
    # thinning with ordering).
    reports.append(_bind_order_law(params, trials))

    # Near-orthogonality of random pairs.
    base = _baseline_similarity(params)
    sims = []
    for t in range(trials):
        x, y = (_operand(params, "random_orthogonality", t, s) for s in range(2))
        sims.append(core.similarity(x, y))
    sims_arr = np.asarray(sims)
    deviations = np.abs(sims_arr - base)
    mean_dev = float(np.mean(deviations))
    max_dev = float(np.max(deviations))
    std = float(np.std(sims_arr))
    scale = _noise_scale(params)
    ok = mean_dev < 4.0 * scale and max_dev < 12.0 * scale
    reports.append(LawReport(params, "random_orthogonality", LawMode.STATISTICAL,
                             Verdict.HOLDS if ok else Verdict.FAILS,
                             {"trials": trials, "baseline": base, "mean_abs_deviation": mean_dev,
                              "max_abs_deviation": max_dev, "std": std}))
    return reports


def _invertibility_classification(params: AlgebraParams, trials: int) -> LawReport:
    law_id = "binding_invertibility"
    sims = []
    for t in range(trials):
        try:
            sims.append(_inverse_roundtrip_sim(params, law_id, t))
        except VsaError as exc:
            return LawReport(params, law_id, LawMode.STATISTICAL, Verdict.NOT_APPLICABLE,
                             {"classification": "none", "reason": f"{type(exc).__name__}: {exc}"})
    arr = np.asarray(sims)
    min_sim, mean_sim = float(arr.min()), float(arr.mean())
    if min_sim >= 1.0 - EXACT_TOL:
        return LawReport(params, law_id, LawMode.STATISTICAL, Verdict.HOLDS,
                         {"classification": "exact", "trials": trials, "min_similarity": min_sim})
    if mean_sim >= INVERSE_APPROX_FLOOR:
        return LawReport(params, law_id, LawMode.STATISTICAL, Verdict.HOLDS_APPROX,
                         {"classification": "approximate", "trials": trials,
                          "mean_similarity": mean_sim, "min_similarity": min_sim})
    return LawReport(params, law_id, LawMode.STATISTICAL, Verdict.FAILS,
                     {"classification": "broken", "trials": trials, "mean_similarity": mean_sim})


def _bind_order_law(params: AlgebraParams, trials: int) -> LawReport:
    law_id = "bind_order_sensitivity"
    algebra = params.algebra_id
    two_factor = algebra in (AlgebraId.TPR, AlgebraId.BSDC_CDT)
    devs, sims = [], []
    for t in range(trials):
        a, b, c = (_operand(params, law_id, t, s) for s in range(3))
        try:
            if two_factor:
                lhs, rhs = core.bind(a, b), core.bind(b, a)
            else:
                lhs, rhs = core.bind(a, core.bind(b, c)), core.bind(b, core.bind(a, c))
        except VsaError as exc:
            return LawReport(params, law_id, LawMode.STATISTICAL, Verdict.NOT_APPLICABLE,
                             {"reason": f"{type(exc).__name__}: {exc}"})
        devs.append(max_deviation(lhs, rhs))
        sims.append(core.similarity(lhs, rhs))
    max_dev = float(np.max(devs))
    mean_abs_sim = float(np.mean(np.abs(np.asarray(sims) - _baseline_similarity(params))))
    bound = 3.0 * _noise_scale(params)
    if max_dev <= EXACT_TOL:
        classification = "indistinguishable"
        ok = True
    elif mean_abs_sim < bound:
        classification = "distinguishable"
        ok = True
    else:
        classification = "ambiguous"
        ok = False
    return LawReport(params, law_id, LawMode.STATISTICAL,
                     Verdict.HOLDS if ok else Verdict.FAILS,
                     {"trials": trials, "classification": classification,
                      "factors": 2 if two_factor else 3,
                      "max_deviation": max_dev, "bound": bound,
                      "mean_abs_similarity_vs_baseline": mean_abs_sim})


def run_all_laws(params: AlgebraParams, trials: int) -> list[LawReport]:
    return (check_rig_laws(params, trials)
            + check_metric_axioms(params, trials)
            + check_desiderata(params, trials))


# --- Table conformance matrix ------------------------------------------------


@dataclass(frozen=True)
class ConformanceRow:
    commutative: bool
    self_inverse: bool | None   # None: the algebra has no binding inverse
    native_braid: bool
    unbinding: str              # "exact" | "approximate" | "none"


EXPECTED_CONFORMANCE: dict[AlgebraId, ConformanceRow] = {
    AlgebraId.TPR: ConformanceRow(False, True, False, "exact"),
    AlgebraId.MAP_I: ConformanceRow(True, True, True, "exact"),
    AlgebraId.MAP_B: ConformanceRow(True, True, True, "exact"),
    # Self-inverse unbinding is only approximate on a continuous carrier.
    AlgebraId.MAP_C: ConformanceRow(True, True, True, "approximate"),
    AlgebraId.FHRR: ConformanceRow(True, False, True, "exact"),
    AlgebraId.HRR: ConformanceRow(True, False, True, "approximate"),
    AlgebraId.MBAT: ConformanceRow(False, False, False, "exact"),
    AlgebraId.VTB: ConformanceRow(False, False, False, "exact"),
    AlgebraId.BSC: ConformanceRow(True, True, True, "exact"),
    AlgebraId.BSDC_S: ConformanceRow(False, False, False, "exact"),
    AlgebraId.BSDC_SEG: ConformanceRow(True, False, False, "exact"),
    AlgebraId.BSDC_CDT: ConformanceRow(True, None, False, "none"),
}


def measure_conformance(params: AlgebraParams, trials: int) -> ConformanceRow:
    """Empirical {commutative, self-inverse, braid, unbinding} columns."""
    commut_dev = 0.0
    commut_sims = []
    for t in range(trials):
        x, y = (_operand(params, "conformance_commutativity", t, s) for s in range(2))
        lhs, rhs = core.bind(x, y), core.bind(y, x)
        commut_dev = max(commut_dev, max_deviation(lhs, rhs))
        commut_sims.append(core.similarity(lhs, rhs))
    commutative = commut_dev <= EXACT_TOL

    self_inverse: bool | None = True
    for t in range(trials):
        x = _operand(params, "conformance_self_inverse", t, 0)
        try:
            if max_deviation(core.inverse(x), x) > EXACT_TOL:
                self_inverse = False
                break
        except VsaError:
            self_inverse = None
            break

    inv = _invertibility_classification(params, trials)
    unbinding = inv.evidence["classification"]
    if unbinding == "broken":
        unbinding = "approximate" if inv.evidence.get("mean_similarity", 0) > 0.2 else "none"

    return ConformanceRow(commutative, self_inverse, params.algebra_id in NATIVE_BRAID, unbinding)


def default_params(algebra_id: AlgebraId, dimension: int, master_seed: int) -> AlgebraParams:
    """Params with default sparsity/blocking for any algebra at one dimension."""
    return AlgebraParams(algebra_id, dimension, master_seed=master_seed)


def conformance_matrix(master_seed: int, dimension: int = 1024, trials: int = 1000) -> dict[AlgebraId, dict]:
    """Measured vs expected classification for all twelve algebras."""
    result: dict[AlgebraId, dict] = {}
    for algebra_id in AlgebraId:
        params = default_params(algebra_id, dimension, master_seed)
        measured = measure_conformance(params, trials)
        expected = EXPECTED_CONFORMANCE[algebra_id]
        result[algebra_id] = {
            "measured": measured,
            "expected": expected,
            "match": measured == expected,
        }
    return result


# --- report serialization ----------------------------------------------------


def report_to_json_obj(report: LawReport) -> dict:
    from hyperrig.memory import params_to_json

    return {
        "algebra": params_to_json(report.algebra),
        "law_id": report.law_id,
        "mode": report.mode.value,
        "verdict": report.verdict.value,
        "evidence": report.evidence,
    }


def reports_to_json(reports: Iterable[LawReport]) -> str:
    doc = {
        "format_version": REPORT_FORMAT_VERSION,
        "reports": [report_to_json_obj(r) for r in reports],
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def save_reports(reports: Iterable[LawReport], path: str | Path) -> None:
    Path(path).write_text(reports_to_json(reports), encoding="utf-8")
