import numpy as np
import pytest

import treeshortcut as ts
from treeshortcut.approx import representatives, solve_approx

from conftest import embedded_corpus, p5_instance


def test_rejects_bad_epsilon():
    inst = p5_instance()
    with pytest.raises(ts.InputError):
        representatives(inst, 0.0)
    with pytest.raises(ts.InputError):
        representatives(inst, -1.0)


def test_single_window_keeps_ends_and_heaviest():
    tree = ts.build_tree(4, [(1, 2, 2), (2, 3, 2), (2, 4, 1)])
    inst = ts.prepare_instance(tree, ts.cost_const(1.0))
    plan = representatives(inst, 100.0)  # window >= whole path
    kept = set(plan.positions[1:].tolist())
    heaviest = int(np.argmax(inst.relaxed[1:])) + 1
    assert kept <= {1, heaviest, inst.n}
    assert {1, inst.n} <= kept


def test_tiny_epsilon_keeps_everything():
    inst = p5_instance()
    plan = representatives(inst, 0.1)  # window = 0.4/18 < every edge
    assert plan.positions[1:].tolist() == [1, 2, 3, 4, 5]


def test_count_bound():
    rng = np.random.default_rng(61)
    for tree, cost in embedded_corpus(40, seed=5, nmax=40):
        inst = ts.prepare_instance(tree, cost)
        for eps in (0.1, 0.5, 1.0, 3.0):
            plan = representatives(inst, eps)
            assert plan.count <= int(np.ceil(18.0 / eps)) + 2


def test_restricted_instance_is_valid():
    for tree, cost in embedded_corpus(30, seed=9, nmax=15):
        inst = ts.prepare_instance(tree, cost)
        plan = representatives(inst, 0.7)
        sub = ts.restrict_instance(inst, plan.positions)
        # relaxing already-relaxed weights changes nothing, and the ends
        # carry weight zero
        assert np.array_equal(sub.relaxed, sub.weights)
        assert sub.weights[1] == 0.0 and sub.weights[sub.n] == 0.0


def test_p5_approx_recovers_optimum():
    inst = p5_instance()
    sol = solve_approx(inst, 0.1)
    assert (sol.u, sol.v, sol.diameter) == (1, 5, 2.0)


def test_huge_epsilon_still_well_formed():
    for tree, cost in embedded_corpus(10, seed=29, nmax=12):
        inst = ts.prepare_instance(tree, cost)
        sol = solve_approx(inst, 10.0)
        assert 1 <= sol.u < sol.v <= inst.n
        assert sol.diameter <= inst.length + 1e-9


def test_ratio_guarantee_and_length_bound():
    for tree, cost in embedded_corpus(120, seed=41, nmax=13):
        ref = ts.best_shortcut_brute(tree, cost)
        inst = ts.prepare_instance(tree, cost)
        assert inst.length <= 3 * ref.diameter + 1e-9
        for eps in (0.1, 0.5, 1.0):
            got = solve_approx(inst, eps)
            assert got.diameter <= (1 + eps) * ref.diameter + 1e-9
            # the reported value is the exact full-instance diameter
            assert got.diameter == ts.diameter_brute(inst, got.u, got.v)
