"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings. Criteria with runtime bounds assert them.
"""
import time

import numpy as np
import pytest

from hyperrig import bench, codec, core, laws
from hyperrig.codec import Construction
from hyperrig.laws import Verdict
from hyperrig.memory import ItemMemory, cleanup, insert
from hyperrig.params import AlgebraId, AlgebraParams, BundleMode
from hyperrig.seeding import TAG_TRIAL, mix
from hyperrig.vector import max_deviation

MASTER = 0xC0FFEE


def _record(number: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {number}: {detail}"


def _params(aid: AlgebraId, d: int) -> AlgebraParams:
    return AlgebraParams(aid, d, master_seed=MASTER)


def test_criterion_1_table_conformance_matrix():
    t0 = time.monotonic()
    matrix = laws.conformance_matrix(MASTER, dimension=1024, trials=1000)
    elapsed = time.monotonic() - t0
    mismatches = [aid.value for aid, row in matrix.items() if not row["match"]]
    ok = not mismatches and elapsed < 300
    _record(1, ok, f"12-algebra conformance matrix, mismatches={mismatches}, "
                   f"elapsed={elapsed:.1f}s (< 300s)")


def test_criterion_2_division_rig_suite():
    exact_laws = ["bundle_commutativity", "bundle_associativity", "additive_identity",
                  "multiplicative_identity", "distributivity", "absorption"]
    linear = [AlgebraId.MAP_I, AlgebraId.HRR, AlgebraId.FHRR, AlgebraId.MBAT,
              AlgebraId.VTB, AlgebraId.TPR]
    failures = []
    for aid in linear:
        for d in (8, 64):
            if aid is AlgebraId.VTB and d == 8:
                d = 9  # VTB needs a perfect square; 9 is the nearest small one
            reports = {r.law_id: r for r in laws.check_rig_laws(_params(aid, d), 100)}
            for law_id in exact_laws:
                if reports[law_id].verdict is not Verdict.HOLDS:
                    failures.append((aid.value, d, law_id, reports[law_id].verdict.value))
    counterexamples = []
    for aid in (AlgebraId.MAP_B, AlgebraId.BSC):
        for d in (8, 64):
            reports = {r.law_id: r for r in laws.check_rig_laws(_params(aid, d), 100)}
            rep = reports["distributivity_native"]
            if rep.verdict is not Verdict.FAILS or "trial" not in rep.evidence:
                counterexamples.append((aid.value, d, rep.verdict.value))
    ok = not failures and not counterexamples
    _record(2, ok, f"raw-mode rig laws EXACT (1e-6) for 6 linear algebras at d in {{8,64}}, "
                   f"native distributivity FAILS with counterexample for MAP-B/BSC; "
                   f"exact_failures={failures}, missing_counterexamples={counterexamples}")


def test_criterion_3_metric_suite():
    t0 = time.monotonic()
    violations = {}
    for aid in AlgebraId:
        reports = {r.law_id: r for r in laws.check_metric_axioms(_params(aid, 256), 10_000)}
        count = reports["metric_triangle"].evidence["violations"]
        if count or reports["metric_identity"].verdict is not Verdict.HOLDS:
            violations[aid.value] = count
    elapsed = time.monotonic() - t0
    _record(3, not violations,
            f"zero triangle violations (slack 1e-9) over 10,000 triples per algebra at d=256, "
            f"violations={violations}, elapsed={elapsed:.1f}s")


def test_criterion_4_unbinding_fidelity():
    exact_forward = [AlgebraId.MAP_I, AlgebraId.MAP_B, AlgebraId.FHRR, AlgebraId.MBAT,
                     AlgebraId.VTB, AlgebraId.BSC, AlgebraId.TPR]
    worst = {}
    for aid in exact_forward:
        p = _params(aid, 256)
        sims = []
        for t in range(200):
            x = core.random_vector(p, mix(TAG_TRIAL, 41, t, 0))
            y = core.random_vector(p, mix(TAG_TRIAL, 41, t, 1))
            sims.append(core.similarity(core.unbind(x, core.bind(x, y)), y))
        worst[aid.value] = min(sims)
    for aid in (AlgebraId.BSDC_S, AlgebraId.BSDC_SEG):
        p = _params(aid, 256)
        sims = []
        for t in range(200):
            x = core.random_vector(p, mix(TAG_TRIAL, 41, t, 0))
            y = core.random_vector(p, mix(TAG_TRIAL, 41, t, 1))
            sims.append(core.similarity(core.unbind(y, core.bind(x, y)), x))
        worst[aid.value] = min(sims)
    exact_ok = all(v >= 1 - 1e-6 for v in worst.values())

    hrr = _params(AlgebraId.HRR, 1024)
    book = ItemMemory(hrr)
    for i in range(100):
        book = insert(book, f"s{i:03d}", core.random_vector(hrr, mix(TAG_TRIAL, 42, i)))
    hits = 0
    for t in range(1000):
        name = f"s{t % 100:03d}"
        x = core.random_vector(hrr, mix(TAG_TRIAL, 43, t))
        noisy = core.unbind(x, core.bind(x, book.lookup(name)))
        hits += cleanup(book, noisy).name == name
    hrr_acc = hits / 1000

    vtb = _params(AlgebraId.VTB, 1024)
    vtb_sims = []
    for t in range(1000):
        x = core.random_vector(vtb, mix(TAG_TRIAL, 44, t, 0))
        y = core.random_vector(vtb, mix(TAG_TRIAL, 44, t, 1))
        vtb_sims.append(core.similarity(core.unbind(x, core.bind(x, y)), y))
    vtb_mean = float(np.mean(vtb_sims))

    ok = exact_ok and hrr_acc >= 0.99 and vtb_mean >= 0.9
    _record(4, ok, f"exact algebras min sim={min(worst.values()):.9f} (>= 1-1e-6), "
                   f"HRR cleanup accuracy={hrr_acc:.3f} (>= 0.99), "
                   f"VTB mean unbind sim={vtb_mean:.4f} (>= 0.9)")


def test_criterion_5_function_composition():
    p = _params(AlgebraId.FHRR, 1024)
    main = bench.composition_crosstalk(p, [8], 1000)
    acc_clean_8 = next(r.accuracy for r in main if r.parameter == "table=8,clean=1")
    sweep = bench.composition_crosstalk(p, [2, 4, 16, 32], 300)
    records = {r.parameter: r.accuracy for r in main + sweep}
    dominated = all(records[f"table={n},clean=1"] >= records[f"table={n},clean=0"]
                    for n in (2, 4, 8, 16, 32))
    ok = acc_clean_8 >= 0.99 and dominated
    _record(5, ok, f"FHRR d=1024 8-symbol cleaned accuracy={acc_clean_8:.3f} (>= 0.99, "
                   f"scored against direct table composition), cleaned >= uncleaned at "
                   f"sizes 2..32: {dominated}")


def test_criterion_6_tree_disambiguation():
    collisions = {}
    for aid in (AlgebraId.FHRR, AlgebraId.MAP_B, AlgebraId.HRR):
        p = _params(aid, 256)
        leaves = [core.random_vector(p, mix(TAG_TRIAL, 45, i)) for i in range(4)]
        tree = codec.encode_tree(leaves, Construction.GUARDED)
        dev = max_deviation(codec.decode_leaf(tree, "LR"), codec.decode_leaf(tree, "RL"))
        collisions[aid.value] = dev
    collision_ok = all(dev < 1e-9 for dev in collisions.values())

    accuracies = {}
    for aid, construction in ((AlgebraId.MAP_B, Construction.BRAIDED),
                              (AlgebraId.VTB, Construction.GUARDED)):
        p = _params(aid, 1024)
        hits = total = 0
        for t in range(200):
            leaves = [core.random_vector(p, mix(TAG_TRIAL, 46, t, i)) for i in range(4)]
            book = ItemMemory(p)
            for i, leaf in enumerate(leaves):
                book = insert(book, f"l{i}", leaf)
            tree = codec.encode_tree(leaves, construction)
            for i, path in enumerate(("LL", "LR", "RL", "RR")):
                total += 1
                hits += cleanup(book, codec.decode_leaf(tree, path)).name == f"l{i}"
        accuracies[f"{aid.value}/{construction.value}"] = hits / total
    acc_ok = all(a >= 0.95 for a in accuracies.values())
    _record(6, collision_ok and acc_ok,
            f"guarded middle-path products exactly equal for commutative binders "
            f"(max dev {max(collisions.values()):.2e} < 1e-9); depth-2 recovery "
            f"{accuracies} (each >= 0.95)")


def test_criterion_7_integer_and_fractional_encoding():
    p = _params(AlgebraId.FHRR, 256)
    x = core.random_vector(p, 7)
    powers = [codec.encode_integer(x, n) for n in range(129)]
    worst = 0.0
    for n in range(0, 65, 4):
        for m in range(0, 65, 4):
            dev = max_deviation(core.bind(powers[n], powers[m]), powers[n + m])
            worst = max(worst, dev)
    # every (n, m) with n, m <= 8 exhaustively, coarser grid beyond
    for n in range(9):
        for m in range(9):
            worst = max(worst, max_deviation(core.bind(powers[n], powers[m]), powers[n + m]))
    integer_ok = worst < 1e-9

    rng = np.random.default_rng(11)
    frac_worst = 0.0
    for _ in range(100):
        a, b = rng.uniform(-4.0, 4.0, size=2)
        lhs = core.bind(codec.fractional_power(x, a), codec.fractional_power(x, b))
        frac_worst = max(frac_worst, max_deviation(lhs, codec.fractional_power(x, a + b)))
    frac_ok = frac_worst < 1e-6
    _record(7, integer_ok and frac_ok,
            f"FHRR integer homomorphism max dev={worst:.2e} (< 1e-9 for n,m <= 64), "
            f"fractional additivity max dev={frac_worst:.2e} (< 1e-6, 100 random pairs)")


def test_criterion_8_near_orthogonality():
    t0 = time.monotonic()
    p = _params(AlgebraId.MAP_B, 1024)
    n = 10_000
    matrix = np.empty((n, 1024))
    for i in range(n):
        matrix[i] = core.random_vector(p, mix(TAG_TRIAL, 77, i)).payload
    max_cos = 0.0
    total = total_sq = 0.0
    count = 0
    for start in range(0, n, 500):
        block = matrix[start:start + 500] @ matrix.T / 1024.0
        for r in range(block.shape[0]):
            row = block[r, start + r + 1:]
            if row.size:
                max_cos = max(max_cos, float(np.max(np.abs(row))))
                total += float(row.sum())
                total_sq += float(np.square(row).sum())
                count += row.size
    std = float(np.sqrt(total_sq / count - (total / count) ** 2))
    elapsed = time.monotonic() - t0
    expected_std = 1.0 / np.sqrt(1024)
    ok = max_cos < 0.2 and abs(std - expected_std) / expected_std < 0.2 and elapsed < 120
    _record(8, ok, f"10,000 MAP-B vectors at d=1024: max |cos|={max_cos:.4f} (< 0.2), "
                   f"std={std:.6f} vs 1/sqrt(d)={expected_std:.6f} "
                   f"(rel dev {abs(std - expected_std) / expected_std:.2%} < 20%), "
                   f"elapsed={elapsed:.1f}s (< 120s)")


def _laws_suite_json() -> str:
    reports = []
    for aid in AlgebraId:
        reports.extend(laws.run_all_laws(_params(aid, 128), 120))
    return laws.reports_to_json(reports)


def _bench_suite_csv() -> str:
    records = []
    records += bench.bundle_capacity(_params(AlgebraId.MAP_B, 256), [1, 3, 7], 50, 120)
    records += bench.composition_crosstalk(_params(AlgebraId.FHRR, 256), [2, 8], 120)
    records += bench.tree_retrieval(_params(AlgebraId.MAP_B, 256), [1, 2], 120)
    return bench.records_to_csv(records)


def test_criterion_9_determinism():
    json_a = _laws_suite_json()
    json_b = _laws_suite_json()
    csv_a = _bench_suite_csv()
    csv_b = _bench_suite_csv()
    ok = json_a == json_b and csv_a == csv_b
    _record(9, ok, f"laws suite JSON byte-identical across runs: {json_a == json_b}; "
                   f"bench suite CSV byte-identical: {csv_a == csv_b} "
                   f"({len(json_a)} JSON bytes, {len(csv_a)} CSV bytes)")
