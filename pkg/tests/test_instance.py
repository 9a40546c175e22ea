import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import treeshortcut as ts
from treeshortcut.costs import PathCost
from treeshortcut import _kernels

from conftest import graph_metric_corpus, p5_instance, random_path_instance

NEG_INF = float("-inf")


# --- induction -------------------------------------------------------------


def test_induce_bare_path_const():
    inst = p5_instance()
    assert inst.n == 5
    assert inst.weights[1:].tolist() == [0, 0, 0, 0, 0]
    assert inst.prefix[1:].tolist() == [0, 1, 2, 3, 4]


def test_induce_caterpillar():
    tree = ts.build_tree(4, [(1, 2, 2), (2, 3, 2), (2, 4, 1)])
    inst = ts.prepare_instance(tree, ts.cost_const(1.0))
    assert inst.n == 3
    assert inst.delta[1:].tolist() == [2, 2]
    assert inst.weights[1:].tolist() == [0, 1, 0]


def test_induce_single_edge():
    tree = ts.build_tree(2, [(1, 2, 5)])
    inst = ts.prepare_instance(tree, ts.cost_const(1.0))
    assert inst.n == 2
    assert inst.weights[1:].tolist() == [0, 0]


# --- relaxation ------------------------------------------------------------


def test_relax_all_zero():
    p = np.array([0.0, 0.0, 1.0, 2.0])
    assert ts.relax_weights(p, np.zeros(4))[1:].tolist() == [0, 0, 0]


def test_relax_reference_sequence():
    p = np.array([0.0, 0.0, 2.0, 5.0, 7.0])
    w = np.array([0.0, 0.0, 1.0, 2.0, 0.0])
    assert ts.relax_weights(p, w)[1:].tolist() == [0, 1, 2, 0]


def test_invalid_weight_rejected():
    with pytest.raises(ts.InputError):
        ts.make_path_instance([1.0, 1.0], [0.0, 2.0, 0.0], PathCost(_kernels.COST_CONST, const=1.0))


def _relax_brute(prefix, w):
    n = len(w) - 1
    out = np.zeros(n + 1)
    for i in range(1, n + 1):
        out[i] = max(w[j] - abs(prefix[i] - prefix[j]) for j in range(1, n + 1))
    return out


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_relax_matches_definition(data):
    n = data.draw(st.integers(2, 12))
    delta = np.array(data.draw(st.lists(st.integers(1, 9), min_size=n - 1, max_size=n - 1)), float)
    prefix = np.concatenate(([0.0, 0.0], np.cumsum(delta)))
    span = np.minimum(prefix[1:], prefix[-1] - prefix[1:])
    w = np.zeros(n + 1)
    for i in range(2, n):
        w[i] = data.draw(st.integers(0, int(span[i - 1])))
    got = ts.relax_weights(prefix, w)
    assert np.array_equal(got[1:], _relax_brute(prefix, w)[1:])


def test_relaxed_satisfies_node_triangle():
    rng = np.random.default_rng(3)
    for _ in range(50):
        inst = random_path_instance(rng)
        rel, p = inst.relaxed, inst.prefix
        for i in range(1, inst.n + 1):
            assert rel[i] >= inst.weights[i]
            for j in range(1, inst.n + 1):
                assert rel[i] <= rel[j] + abs(p[i] - p[j]) + 1e-12


# --- component evaluators --------------------------------------------------


def test_end_terms_reference_values():
    inst = p5_instance()
    ends, left, right = ts.end_terms(inst, 1, 5)
    assert (ends, left, right) == (1.0, 2.0, 2.0)


def test_cycle_reference_values():
    inst = p5_instance()
    assert ts.cycle_term_brute(inst, 1, 5) == 2.0
    assert ts.cycle_term_brute(inst, 1, 2) == NEG_INF
    assert ts.cycle_term_brute(inst, 1, 3) == NEG_INF


def test_cycle_zero_weight_reduction():
    inst = p5_instance(cost_value=2.0)
    p = inst.prefix
    c = 2.0
    i, j = 1, 5
    expect = max(
        min(p[h] - p[k], (p[k] - p[i]) + c + (p[j] - p[h]))
        for k in range(i + 1, j - 1)
        for h in range(k + 1, j)
    )
    assert ts.cycle_term_brute(inst, i, j) == expect


def test_diameter_brute_reference_values():
    inst = p5_instance()
    assert ts.diameter_brute(inst, 1, 5) == 2.0
    assert ts.diameter_brute(inst, 2, 4) == 3.0


def test_diameter_single_pair():
    tree = ts.build_tree(2, [(1, 2, 5)])
    inst = ts.prepare_instance(tree, ts.cost_const(2.0))
    assert ts.diameter_brute(inst, 1, 2) == 2.0
    inst2 = ts.prepare_instance(tree, ts.cost_const(9.0))
    assert ts.diameter_brute(inst2, 1, 2) == 5.0


def test_pair_validation():
    inst = p5_instance()
    for bad in ((0, 3), (3, 3), (4, 2), (1, 6)):
        with pytest.raises(ts.InputError):
            ts.diameter_brute(inst, *bad)


def test_component_max_equals_diameter_everywhere():
    rng = np.random.default_rng(17)
    for _ in range(60):
        inst = random_path_instance(rng)
        for i in range(1, inst.n + 1):
            for j in range(i + 1, inst.n + 1):
                comp = ts.components_brute(inst, i, j)
                fast = ts.end_terms(inst, i, j)
                ref = ts.diameter_brute(inst, i, j)
                assert comp.diameter == ref
                assert max(fast[0], fast[1], fast[2], comp.cycle) == ref
                assert ts.diameter_after(inst, i, j) == ref


def test_component_monotonicity():
    rng = np.random.default_rng(29)
    for _ in range(25):
        inst = random_path_instance(rng, nmax=9)
        n = inst.n
        vals = {}
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                vals[i, j] = ts.components_brute(inst, i, j)
        for (i, j), cv in vals.items():
            if (i, j + 1) in vals:
                nxt = vals[i, j + 1]
                assert nxt.ends <= cv.ends + 1e-12
                assert cv.left <= nxt.left + 1e-12
                assert nxt.right <= cv.right + 1e-12
                assert cv.cycle <= nxt.cycle + 1e-12
            if (i + 1, j) in vals:
                nxt = vals[i + 1, j]
                assert cv.ends <= nxt.ends + 1e-12
                assert cv.left <= nxt.left + 1e-12
                assert nxt.right <= cv.right + 1e-12
                assert nxt.cycle <= cv.cycle + 1e-12


def test_projection_matches_tree_diameters():
    # adding the shortcut to the tree or to its projection is the same
    for tree, cost in graph_metric_corpus(40, seed=57, nmax=10):
        inst = ts.prepare_instance(tree, cost)
        from treeshortcut.bruteforce import all_pairs_distances

        d = all_pairs_distances(tree)
        for i in range(1, inst.n + 1):
            for j in range(i + 1, inst.n + 1):
                u, v = int(inst.vertex_ids[i]), int(inst.vertex_ids[j])
                ref = ts.augmented_diameter(tree, u, v, cost.value(u, v), dmat=d)
                assert ts.diameter_brute(inst, i, j) == ref


def test_diameter_dominates_hanging_components():
    for tree, cost in graph_metric_corpus(30, seed=91, nmax=10):
        dec = ts.hanging_weights(tree, ts.diametral_path(tree))
        inst = ts.prepare_instance(tree, cost)
        from treeshortcut.bruteforce import all_pairs_distances

        d = all_pairs_distances(tree)
        sub_diams = []
        for k in range(1, dec.length + 1):
            members = np.nonzero(dec.subtree_of[1:] == k)[0] + 1
            sub = d[np.ix_(members, members)]
            sub_diams.append(sub.max() if members.size else 0.0)
        worst = max(sub_diams)
        for i in range(1, inst.n + 1):
            for j in range(i + 1, inst.n + 1):
                assert ts.diameter_brute(inst, i, j) >= worst - 1e-12


def test_restrict_instance_identity():
    inst = p5_instance()
    sub = ts.restrict_instance(inst, np.array([0, 1, 3, 5], np.int64))
    assert sub.n == 3
    assert sub.prefix[1:].tolist() == [0, 2, 4]
    assert sub.vertex_ids[1:].tolist() == [1, 3, 5]
    assert sub.cost_value(1, 3) == 1.0
