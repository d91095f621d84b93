"""Core representation and multiplication machinery."""

import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from linknet import (
    ExplosionAborted,
    ExplosionGuard,
    IncompatibleModes,
    NodeSet,
    NotOneMode,
    NotSymmetric,
    SparseNetwork,
    WeightVector,
    col_sums,
    decompose,
    diag_scale,
    fold_to_undirected,
    in_degrees,
    multiply,
    out_degrees,
    predicted_products,
    row_sums,
    total_weight,
    transpose,
)

V3 = NodeSet("v", ("x", "y", "z"))


def test_node_set_rejects_duplicate_labels():
    with pytest.raises(ValueError):
        NodeSet("bad", ("a", "b", "a"))


def test_node_set_index_lookup():
    assert V3.index("y") == 1
    with pytest.raises(KeyError):
        V3.index("nope")


def test_duplicate_entries_are_summed():
    net = SparseNetwork(V3, V3, [(0, 1, 2.0), (0, 1, 3.0)])
    assert net.weight(0, 1) == 5.0
    assert net.nnz == 1


def test_cancelling_entries_are_dropped():
    net = SparseNetwork(V3, V3, [(0, 1, 2.0), (0, 1, -2.0)])
    assert net.nnz == 0
    assert list(net.entries()) == []


def test_non_finite_weight_rejected():
    with pytest.raises(ValueError):
        SparseNetwork(V3, V3, [(0, 1, float("nan"))])


def test_out_of_range_entry_rejected():
    with pytest.raises(IndexError):
        SparseNetwork(V3, V3, [(0, 3, 1.0)])


def test_undirected_entries_canonicalized():
    net = SparseNetwork(V3, V3, [(2, 0, 1.5), (0, 2, 1.0)], directed=False)
    # both orientations land on the same stored pair and sum
    assert net.weight(0, 2) == 2.5
    assert net.weight(2, 0) == 2.5
    assert net.nnz == 1


def test_undirected_requires_one_mode():
    other = NodeSet("w", ("p", "q"))
    with pytest.raises(NotOneMode):
        SparseNetwork(V3, other, directed=False)


def test_entries_sorted_row_major():
    net = SparseNetwork(V3, V3, [(2, 1, 1.0), (0, 2, 1.0), (0, 1, 1.0)])
    assert list(net.entries()) == [(0, 1, 1.0), (0, 2, 1.0), (2, 1, 1.0)]


def test_dense_round_trip():
    m = np.array([[0.0, 1.5, 0.0], [2.0, 0.0, 0.0], [0.0, 0.0, 3.0]])
    net = SparseNetwork.from_dense(V3, V3, m)
    assert np.array_equal(net.to_dense(), m)


def test_as_directed_mirrors_pairs_and_keeps_loops_once():
    net = SparseNetwork(V3, V3, [(0, 1, 2.0), (1, 1, 5.0)], directed=False)
    d = net.as_directed()
    assert d.directed
    assert d.weight(0, 1) == 2.0 and d.weight(1, 0) == 2.0
    assert d.weight(1, 1) == 5.0
    assert d.nnz == 3


def test_transpose_swaps_modes():
    rows = NodeSet("r", ("r1", "r2"))
    net = SparseNetwork(rows, V3, [(0, 2, 4.0)])
    t = transpose(net)
    assert t.shape == (3, 2)
    assert t.weight(2, 0) == 4.0
    assert transpose(t) == net


# -- multiply -----------------------------------------------------------------


def test_multiply_matches_worked_example(wa, wk):
    h = multiply(transpose(wa), wk)
    expected = np.array(
        [[2, 3, 2, 2], [1, 0, 2, 0], [1, 3, 1, 2], [0, 2, 2, 2]], dtype=float
    )
    assert np.array_equal(h.to_dense(), expected)
    assert total_weight(h) == 25.0


def test_multiply_incompatible_modes(wa):
    with pytest.raises(IncompatibleModes):
        multiply(wa, wa)


def test_multiply_empty_is_empty():
    net = SparseNetwork(V3, V3)
    assert multiply(net, net).nnz == 0
    assert total_weight(net) == 0.0


def test_multiply_against_dense_oracle_seeded():
    rng = random.Random(1729)
    for _ in range(25):
        n, m, p = (rng.randint(1, 12) for _ in range(3))
        a = oracles.random_two_mode(rng, n, m, 0.4, "int", "R", "M")
        b = oracles.random_two_mode(rng, m, p, 0.4, "int", "M", "C")
        got = multiply(a, b)
        want = oracles.dense_multiply(a.to_dense(), b.to_dense())
        assert np.array_equal(got.to_dense(), want)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_multiply_transpose_law(data):
    rng = random.Random(data.draw(st.integers(0, 2**32 - 1)))
    n, m, p = (rng.randint(1, 8) for _ in range(3))
    a = oracles.random_two_mode(rng, n, m, 0.5, "real", "R", "M")
    b = oracles.random_two_mode(rng, m, p, 0.5, "real", "M", "C")
    left = transpose(multiply(a, b))
    right = multiply(transpose(b), transpose(a))
    assert np.allclose(left.to_dense(), right.to_dense(), rtol=1e-12, atol=0)
    assert left.rows.labels == right.rows.labels


def test_guard_aborts_before_work(wa, wk):
    predicted = predicted_products(transpose(wa), wk)
    assert predicted == 25
    with pytest.raises(ExplosionAborted) as exc:
        multiply(transpose(wa), wk, ExplosionGuard(24))
    assert exc.value.predicted == 25
    assert exc.value.limit == 24
    # at the threshold itself the product goes through
    assert multiply(transpose(wa), wk, ExplosionGuard(25)).nnz == 13


def test_guard_env_override(wa, wk, monkeypatch):
    monkeypatch.setenv("LINKNET_GUARD", "3")
    with pytest.raises(ExplosionAborted):
        multiply(transpose(wa), wk)
    monkeypatch.setenv("LINKNET_GUARD", "oops")
    from linknet import LinknetError

    with pytest.raises(LinknetError):
        multiply(transpose(wa), wk)


def test_multiply_is_deterministic(wa, wk):
    one = multiply(transpose(wa), wk)
    two = multiply(transpose(wa), wk)
    assert list(one.entries()) == list(two.entries())


# -- decomposition ------------------------------------------------------------


def test_decomposition_sums_to_product_seeded():
    rng = random.Random(99)
    for _ in range(10):
        n, m, p = (rng.randint(1, 10) for _ in range(3))
        a = oracles.random_two_mode(rng, n, m, 0.4, "int", "R", "M")
        b = oracles.random_two_mode(rng, m, p, 0.4, "int", "M", "C")
        terms = list(decompose(a, b))
        acc = np.zeros((n, p))
        for t in terms:
            acc += t.materialize().to_dense()
        assert np.array_equal(acc, multiply(a, b).to_dense())


def test_term_total_weight_is_product_of_profile_sums():
    rng = random.Random(7)
    a = oracles.random_two_mode(rng, 8, 6, 0.5, "real", "R", "M")
    b = oracles.random_two_mode(rng, 6, 7, 0.5, "real", "M", "C")
    for t in decompose(a, b):
        sx = sum(t.row_profile.values())
        sy = sum(t.col_profile.values())
        assert math.isclose(t.total_weight, sx * sy, rel_tol=1e-12)
        assert math.isclose(
            t.materialize().total_weight(), sx * sy, rel_tol=1e-12
        )


def test_binary_projection_term_weight_is_degree_squared(wa):
    # in a projection of a binary network, the term of work w carries
    # (number of authors of w)^2 total weight
    degs = out_degrees(wa)
    by_pivot = {t.pivot: t for t in decompose(transpose(wa), wa)}
    for w in range(wa.rows.size):
        assert by_pivot[w].total_weight == degs[w] ** 2


def test_fractional_term_weight_is_one(wa, wk):
    for t in decompose(transpose(wa), wk):
        assert math.isclose(t.fractional().total_weight, 1.0, rel_tol=1e-12)


# -- vectors and degrees --------------------------------------------------------


def test_degrees_on_worked_example(wa):
    assert list(out_degrees(wa).values) == [2, 2, 3, 2, 3]
    assert list(in_degrees(wa).values) == [4, 2, 3, 3]


def test_binary_row_sums_equal_out_degrees(wa):
    assert row_sums(wa) == out_degrees(wa)
    assert col_sums(wa) == in_degrees(wa)


def test_sums_match_dense_oracle():
    rng = random.Random(5)
    net = oracles.random_two_mode(rng, 9, 7, 0.5, "real")
    dense = net.to_dense()
    assert np.allclose(row_sums(net).values, dense.sum(axis=1))
    assert np.allclose(col_sums(net).values, dense.sum(axis=0))


def test_weight_vector_validates_length():
    with pytest.raises(ValueError):
        WeightVector(V3, np.zeros(4))


def test_diag_scale_left_right():
    rows = NodeSet("r", ("r1", "r2"))
    net = SparseNetwork(rows, V3, [(0, 0, 2.0), (1, 2, 3.0)])
    d = WeightVector(rows, np.array([10.0, 100.0]))
    scaled = diag_scale(d, net, side="left")
    assert scaled.weight(0, 0) == 20.0
    assert scaled.weight(1, 2) == 300.0
    e = WeightVector(V3, np.array([1.0, 2.0, 4.0]))
    scaled = diag_scale(e, net, side="right")
    assert scaled.weight(0, 0) == 2.0
    assert scaled.weight(1, 2) == 12.0
    with pytest.raises(IncompatibleModes):
        diag_scale(e, net, side="left")


# -- folding --------------------------------------------------------------------


def test_fold_doubles_symmetric_pairs():
    net = SparseNetwork(V3, V3, [(0, 1, 0.3), (1, 0, 0.3)])
    folded, extracted = fold_to_undirected(net)
    assert not folded.directed
    assert folded.weight(0, 1) == 0.6
    assert extracted is None


def test_fold_preserves_total_weight():
    m = np.round(np.random.default_rng(13).uniform(0, 4, (6, 6)), 3)
    sym = m + m.T
    net = oracles.to_network(sym, "v", "v")
    folded, _ = fold_to_undirected(net)
    assert math.isclose(folded.total_weight(), net.total_weight(), rel_tol=1e-12)


def test_fold_extracts_diagonal():
    net = SparseNetwork(V3, V3, [(0, 0, 2.0), (0, 1, 1.0), (1, 0, 1.0)])
    folded, diag = fold_to_undirected(net, loops="extract")
    assert folded.weight(0, 0) == 0.0
    assert list(diag.values) == [2.0, 0.0, 0.0]
    assert folded.weight(0, 1) == 2.0


def test_fold_loop_only_drop_gives_empty():
    net = SparseNetwork(V3, V3, [(1, 1, 4.0)])
    folded, _ = fold_to_undirected(net, loops="drop")
    assert folded.nnz == 0


def test_fold_rejects_asymmetry():
    net = SparseNetwork(V3, V3, [(0, 1, 1.0), (1, 0, 2.0)])
    with pytest.raises(NotSymmetric):
        fold_to_undirected(net)
    lopsided = SparseNetwork(V3, V3, [(1, 0, 2.0)])
    with pytest.raises(NotSymmetric):
        fold_to_undirected(lopsided)


def test_fold_rejects_two_mode(wa):
    with pytest.raises(NotOneMode):
        fold_to_undirected(wa)


def test_fold_is_idempotent():
    net = SparseNetwork(V3, V3, [(0, 1, 0.4), (1, 0, 0.4), (2, 2, 1.0)])
    once, _ = fold_to_undirected(net)
    twice, _ = fold_to_undirected(once)
    assert once == twice


def test_fold_tolerates_float_noise():
    w = 0.7
    net = SparseNetwork(V3, V3, [(0, 1, w), (1, 0, w + 1e-13)])
    folded, _ = fold_to_undirected(net)
    assert math.isclose(folded.weight(0, 1), 2 * w, rel_tol=1e-9)


def test_no_stored_zeros_after_multiply():
    # cancellation in the product must not leave explicit zeros behind
    rows = NodeSet("r", ("r1",))
    mid = NodeSet("m", ("m1", "m2"))
    a = SparseNetwork(rows, mid, [(0, 0, 1.0), (0, 1, 1.0)])
    b = SparseNetwork(mid, V3, [(0, 0, 1.0), (1, 0, -1.0)])
    prod = multiply(a, b)
    assert prod.nnz == 0
