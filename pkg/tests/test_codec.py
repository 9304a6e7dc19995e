import numpy as np
import pytest

from hyperrig import codec, core
from hyperrig.codec import Construction
from hyperrig.errors import DomainError, UnsupportedOperation
from hyperrig.memory import ItemMemory, cleanup, insert
from hyperrig.params import AlgebraId, BraidRole
from hyperrig.vector import max_deviation

from conftest import make_params


def _symbols(params, n, base=0):
    return [core.random_vector(params, base + i) for i in range(n)]


def _memory(params, vectors, prefix="w"):
    mem = ItemMemory(params)
    for i, v in enumerate(vectors):
        mem = insert(mem, f"{prefix}{i:03d}", v)
    return mem


# --- function codes -----------------------------------------------------------


def test_single_pair_function_recovers_exactly():
    for aid in (AlgebraId.FHRR, AlgebraId.MAP_B, AlgebraId.BSC, AlgebraId.MBAT):
        p = make_params(aid, 64)
        x, y = _symbols(p, 2)
        code = codec.encode_function([(x, y)])
        got = codec.apply_function(code, x)
        assert core.similarity(got, y) >= 1 - 1e-6, aid


def test_empty_function_table_rejected():
    with pytest.raises(DomainError):
        codec.encode_function([])


def test_cdt_function_encoding_rejected():
    p = make_params(AlgebraId.BSDC_CDT, 64)
    x, y = _symbols(p, 2)
    with pytest.raises(UnsupportedOperation):
        codec.encode_function([(x, y)])


def test_ten_pair_fhrr_table_cleanup_recovery():
    p = make_params(AlgebraId.FHRR, 1024)
    hits = 0
    for t in range(50):
        xs = _symbols(p, 10, base=1000 * t)
        ys = _symbols(p, 10, base=1000 * t + 100)
        code = codec.encode_function(list(zip(xs, ys)))
        k = t % 10
        got = codec.apply_function(code, xs[k], clean=True)
        hits += np.array_equal(got.payload, ys[k].payload)
    assert hits >= 49


def test_clean_output_is_a_range_member():
    p = make_params(AlgebraId.HRR, 256)
    xs = _symbols(p, 5)
    ys = _symbols(p, 5, base=50)
    code = codec.encode_function(list(zip(xs, ys)))
    got = codec.apply_function(code, xs[2], clean=True)
    assert any(np.array_equal(got.payload, v.payload) for _, v in code.range_memory.items())


def test_identity_composition_recovers_input_symbols():
    p = make_params(AlgebraId.FHRR, 1024)
    xs = _symbols(p, 5)
    identity_code = codec.encode_function([(x, x) for x in xs])
    out = codec.compose_apply(identity_code, identity_code, xs[3], clean_between=True)
    res = cleanup(identity_code.range_memory, out)
    assert np.array_equal(res.vector.payload, xs[3].payload)


def test_compose_requires_matching_params():
    p1 = make_params(AlgebraId.FHRR, 64)
    p2 = make_params(AlgebraId.FHRR, 128)
    f = codec.encode_function(list(zip(_symbols(p1, 2), _symbols(p1, 2, base=9))))
    g = codec.encode_function(list(zip(_symbols(p2, 2), _symbols(p2, 2, base=9))))
    with pytest.raises(DomainError):
        codec.compose_apply(f, g, _symbols(p1, 1)[0])


# --- tuples --------------------------------------------------------------------


def test_tuple_round_trip_statistics():
    p = make_params(AlgebraId.HRR, 1024)
    hit = 0
    for t in range(100):
        roles = _symbols(p, 2, base=3000 + 10 * t)
        fillers = _symbols(p, 2, base=7000 + 10 * t)
        w = codec.encode_tuple(roles, fillers)
        got = codec.decode_tuple(w, roles[0])
        hit += core.similarity(got, fillers[0]) > 0.5
    assert hit >= 99


def test_single_slot_tuple_exact_for_exact_inverse_algebras():
    p = make_params(AlgebraId.FHRR, 128)
    role, filler = _symbols(p, 2)
    w = codec.encode_tuple([role], [filler])
    assert core.similarity(codec.decode_tuple(w, role), filler) >= 1 - 1e-6


def test_foreign_role_decodes_to_noise():
    p = make_params(AlgebraId.MAP_B, 1024)
    roles = _symbols(p, 2)
    fillers = _symbols(p, 2, base=60)
    w = codec.encode_tuple(roles, fillers)
    foreign = core.random_vector(p, 999)
    got = codec.decode_tuple(w, foreign)
    assert all(abs(core.similarity(got, f)) < 0.2 for f in fillers)


def test_tuple_length_mismatch():
    p = make_params(AlgebraId.MAP_B, 32)
    with pytest.raises(DomainError):
        codec.encode_tuple(_symbols(p, 2), _symbols(p, 1))


def test_shift_binding_tuples_work_despite_right_action():
    p = make_params(AlgebraId.BSDC_S, 256)
    roles = _symbols(p, 2)
    fillers = _symbols(p, 2, base=60)
    w = codec.encode_tuple(roles, fillers)
    got = codec.decode_tuple(w, roles[0])
    assert core.similarity(got, fillers[0]) >= 0.5


# --- integers and fractional powers --------------------------------------------


def test_integer_zero_power():
    p = make_params(AlgebraId.FHRR, 64)
    x = core.random_vector(p, 0)
    assert max_deviation(codec.encode_integer(x, 0), core.identity(p)) == 0.0
    pb = make_params(AlgebraId.BSC, 64)
    xb = core.random_vector(pb, 0)
    assert codec.encode_integer(xb, 0) is xb  # braid mode, k = 0


def test_fhrr_integer_homomorphism():
    p = make_params(AlgebraId.FHRR, 256)
    x = core.random_vector(p, 5)
    for n, m in ((1, 1), (2, 3), (17, 21), (64, 64)):
        lhs = core.bind(codec.encode_integer(x, n), codec.encode_integer(x, m))
        assert max_deviation(lhs, codec.encode_integer(x, n + m)) < 1e-9


def test_hrr_integer_homomorphism_within_tolerance():
    p = make_params(AlgebraId.HRR, 256)
    x = core.random_vector(p, 5)
    lhs = core.bind(codec.encode_integer(x, 3), codec.encode_integer(x, 4))
    assert max_deviation(lhs, codec.encode_integer(x, 7)) < 1e-6


def test_braid_mode_integers_for_self_inverse_algebras():
    p = make_params(AlgebraId.BSC, 128)
    x = core.random_vector(p, 4)
    phi3 = codec.encode_integer(x, 3)
    assert max_deviation(core.braid(phi3, BraidRole(0), -3), x) == 0.0


def test_negative_integer_rejected():
    p = make_params(AlgebraId.FHRR, 32)
    with pytest.raises(DomainError):
        codec.encode_integer(core.random_vector(p, 0), -1)


def test_fractional_power_identity_and_split():
    from hyperrig.algebras import hrr as hrr_kernel

    for aid in (AlgebraId.FHRR, AlgebraId.HRR):
        p = make_params(aid, 256)
        # Real convolution roots need a unitary base (positive DC bin).
        x = core.random_vector(p, 9) if aid is AlgebraId.FHRR else hrr_kernel.unitary_vector(p, 9)
        assert max_deviation(codec.fractional_power(x, 1.0), x) < 1e-9, aid
        half = codec.fractional_power(x, 0.5)
        assert max_deviation(core.bind(half, half), x) < 1e-6, aid


def test_fractional_matches_integer_encoding():
    for aid in (AlgebraId.FHRR, AlgebraId.HRR):
        p = make_params(aid, 128)
        x = core.random_vector(p, 9)
        for n in (1, 2, 5):
            assert max_deviation(codec.fractional_power(x, n),
                                 codec.encode_integer(x, n)) < 1e-6, aid


def test_fractional_kernel_decreases_with_offset():
    # Oracle: phasor kernel is mean cos(theta * delta), monotone on [0, 1].
    p = make_params(AlgebraId.FHRR, 1024)
    deltas = [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]
    curves = []
    for seed in range(100):
        x = core.random_vector(p, seed)
        base = codec.fractional_power(x, 1.3)
        curves.append([core.similarity(base, codec.fractional_power(x, 1.3 + d))
                       for d in deltas])
    mean_curve = np.mean(curves, axis=0)
    assert all(mean_curve[i] > mean_curve[i + 1] for i in range(len(deltas) - 1))


def test_fractional_rejected_elsewhere():
    p = make_params(AlgebraId.MAP_B, 32)
    with pytest.raises(UnsupportedOperation):
        codec.fractional_power(core.random_vector(p, 0), 0.5)


# --- lists ----------------------------------------------------------------------


def test_single_item_list_is_the_item():
    p = make_params(AlgebraId.MAP_B, 64)
    x = core.random_vector(p, 0)
    code = codec.encode_list([x], Construction.BRAIDED)
    assert max_deviation(code.vector, x) == 0.0
    assert max_deviation(codec.decode_list_item(code, 0), x) == 0.0


def test_empty_list_rejected():
    with pytest.raises(DomainError):
        codec.encode_list([], Construction.BRAIDED)


def test_braided_list_recovery_map_b():
    p = make_params(AlgebraId.MAP_B, 1024)
    pool = _symbols(p, 100, base=500)
    book = _memory(p, pool)
    hits = 0
    for t in range(40):
        rng = np.random.default_rng(t)
        idx = rng.choice(100, 5, replace=False)
        code = codec.encode_list([pool[i] for i in idx], Construction.BRAIDED)
        for k in range(5):
            hits += cleanup(book, codec.decode_list_item(code, k)).name == f"w{idx[k]:03d}"
    assert hits >= 198  # 99% of 200


def test_guarded_list_recovery_fhrr():
    p = make_params(AlgebraId.FHRR, 1024)
    pool = _symbols(p, 100, base=500)
    book = _memory(p, pool)
    hits = 0
    for t in range(40):
        rng = np.random.default_rng(t)
        idx = rng.choice(100, 5, replace=False)
        code = codec.encode_list([pool[i] for i in idx], Construction.GUARDED)
        for k in range(5):
            hits += cleanup(book, codec.decode_list_item(code, k)).name == f"w{idx[k]:03d}"
    assert hits >= 198


def test_braided_list_shift_equivariance():
    # Rotating the items left by one shifts every decoded position down by
    # one; the decoded bundles agree exactly up to the wrap-around term:
    # decode(L, k) - decode(rotate(L), k-1) = braid(x0, -k) - braid(x0, n-k).
    p = make_params(AlgebraId.MAP_I, 256)
    xs = _symbols(p, 4)
    role = BraidRole(0)
    original = codec.encode_list(xs, Construction.BRAIDED, role)
    rotated = codec.encode_list(xs[1:] + xs[:1], Construction.BRAIDED, role)
    k = 2
    diff = (codec.decode_list_item(original, k).payload
            - codec.decode_list_item(rotated, k - 1).payload)
    expected = (core.braid(xs[0], role, -k).payload
                - core.braid(xs[0], role, len(xs) - k).payload)
    assert np.allclose(diff, expected, atol=1e-9)
    # the per-term permutation identity is exact
    term_orig = core.braid(xs[2], role, 2)
    term_shift = core.braid(core.braid(xs[2], role, 1), role, 1)
    assert max_deviation(term_orig, term_shift) == 0.0


def test_list_position_out_of_range():
    p = make_params(AlgebraId.MAP_B, 32)
    code = codec.encode_list(_symbols(p, 3), Construction.BRAIDED)
    with pytest.raises(DomainError):
        codec.decode_list_item(code, 3)


# --- trees ----------------------------------------------------------------------


def test_tree_leaf_count_must_be_power_of_two():
    p = make_params(AlgebraId.MAP_B, 32)
    with pytest.raises(DomainError):
        codec.encode_tree(_symbols(p, 3), Construction.BRAIDED)
    with pytest.raises(DomainError):
        codec.encode_tree(_symbols(p, 1), Construction.BRAIDED)


def test_braided_tree_depth2_recovery():
    p = make_params(AlgebraId.MAP_B, 1024)
    hits = total = 0
    for t in range(40):
        leaves = _symbols(p, 4, base=100 * t)
        book = _memory(p, leaves, prefix="leaf")
        tree = codec.encode_tree(leaves, Construction.BRAIDED)
        for i, path in enumerate(("LL", "LR", "RL", "RR")):
            total += 1
            hits += cleanup(book, codec.decode_leaf(tree, path)).name == f"leaf{i:03d}"
    assert hits / total >= 0.95


def test_guarded_tree_depth2_recovery_vtb():
    p = make_params(AlgebraId.VTB, 1024)
    hits = total = 0
    for t in range(40):
        leaves = _symbols(p, 4, base=100 * t)
        book = _memory(p, leaves, prefix="leaf")
        tree = codec.encode_tree(leaves, Construction.GUARDED)
        for i, path in enumerate(("LL", "LR", "RL", "RR")):
            total += 1
            hits += cleanup(book, codec.decode_leaf(tree, path)).name == f"leaf{i:03d}"
    assert hits / total >= 0.95


def test_guarded_tree_commutative_middle_collision_is_exact():
    for aid in (AlgebraId.FHRR, AlgebraId.MAP_B, AlgebraId.HRR):
        p = make_params(aid, 256)
        leaves = _symbols(p, 4)
        tree = codec.encode_tree(leaves, Construction.GUARDED)
        lr = codec.decode_leaf(tree, "LR")
        rl = codec.decode_leaf(tree, "RL")
        assert max_deviation(lr, rl) < 1e-9, aid


def test_braided_tree_resolves_middle_leaves():
    p = make_params(AlgebraId.FHRR, 256)
    leaves = _symbols(p, 4)
    tree = codec.encode_tree(leaves, Construction.BRAIDED)
    lr = codec.decode_leaf(tree, "LR")
    rl = codec.decode_leaf(tree, "RL")
    assert max_deviation(lr, rl) > 1e-3


def test_decode_leaf_validates_path():
    p = make_params(AlgebraId.MAP_B, 64)
    tree = codec.encode_tree(_symbols(p, 4), Construction.BRAIDED)
    with pytest.raises(DomainError):
        codec.decode_leaf(tree, "L")
    with pytest.raises(DomainError):
        codec.decode_leaf(tree, "LX")
