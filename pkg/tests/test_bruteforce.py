import numpy as np

import treeshortcut as ts
from treeshortcut.bruteforce import all_pairs_distances

from conftest import graph_metric_corpus, random_tree


def _p5():
    return ts.build_tree(5, [(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1)])


def test_augmented_diameter_p5():
    assert ts.augmented_diameter(_p5(), 1, 5, 1.0) == 2.0


def test_useless_shortcut_keeps_diameter():
    tree = _p5()
    assert ts.augmented_diameter(tree, 1, 5, 100.0) == tree.diameter()


def test_parallel_edge_replaces_weight():
    tree = ts.build_tree(3, [(1, 2, 4), (2, 3, 1)])
    assert ts.augmented_diameter(tree, 1, 2, 1.0) == 2.0


def test_augmented_diameter_symmetry_and_bound():
    rng = np.random.default_rng(2)
    for _ in range(20):
        tree = random_tree(int(rng.integers(2, 15)), "random-tree", rng)
        d = all_pairs_distances(tree)
        diam = d.max()
        for _ in range(5):
            u = int(rng.integers(1, tree.n + 1))
            v = int(rng.integers(1, tree.n + 1))
            if u == v:
                continue
            c = float(rng.integers(0, 10))
            a = ts.augmented_diameter(tree, u, v, c, dmat=d)
            b = ts.augmented_diameter(tree, v, u, c, dmat=d)
            assert a == b
            assert a <= diam


def test_best_shortcut_p5():
    sol = ts.best_shortcut_brute(_p5(), ts.cost_const(1.0))
    assert (sol.u, sol.v, sol.diameter) == (1, 5, 2.0)


def test_best_shortcut_two_vertices():
    tree = ts.build_tree(2, [(1, 2, 5)])
    sol = ts.best_shortcut_brute(tree, ts.cost_const(2.0))
    assert (sol.u, sol.v, sol.diameter) == (1, 2, 2.0)


def test_best_shortcut_star_no_gain():
    tree = ts.build_tree(5, [(1, 2, 1), (1, 3, 1), (1, 4, 1), (1, 5, 1)])
    sol = ts.best_shortcut_brute(tree, ts.cost_const(2.0))
    assert sol.diameter == 2.0


def test_path_and_tree_brute_agree():
    # on graph-metric costs the path abstraction preserves the optimum
    for tree, cost in graph_metric_corpus(40, seed=3, nmax=10):
        inst = ts.prepare_instance(tree, cost)
        a = ts.best_pair_brute(inst)
        b = ts.best_shortcut_brute(tree, cost)
        assert a.diameter == b.diameter


def test_pair_brute_reference_values():
    inst = ts.prepare_instance(_p5(), ts.cost_const(1.0))
    sol = ts.best_pair_brute(inst)
    assert (sol.u, sol.v, sol.diameter) == (1, 5, 2.0)
    tree = ts.build_tree(2, [(1, 2, 5)])
    inst = ts.prepare_instance(tree, ts.cost_const(2.0))
    assert ts.best_pair_brute(inst).diameter == 2.0


def test_pair_brute_treedist_no_gain():
    tree = _p5()
    inst = ts.prepare_instance(tree, ts.cost_treedist(tree))
    assert ts.best_pair_brute(inst).diameter == 4.0


def test_closure_brute_values():
    tree = ts.build_tree(3, [(1, 2, 2), (2, 3, 2)])
    cost = ts.cost_matrix(np.array([[0, 1, 10], [1, 0, 1], [10, 1, 0]], float))
    path = ts.diametral_path(tree)
    table = ts.closure_brute(tree, path, cost)
    assert table[1, 3] == 3.0  # walk to the middle, pay 1, walk back


def test_closure_brute_treedist_is_distance():
    tree = _p5()
    table = ts.closure_brute(tree, ts.diametral_path(tree), ts.cost_treedist(tree))
    d = all_pairs_distances(tree)
    path = ts.diametral_path(tree)
    for i in range(1, 6):
        for j in range(i + 1, 6):
            assert table[i, j] == d[path[i], path[j]]


def test_closure_brute_single_pair():
    tree = ts.build_tree(2, [(1, 2, 5)])
    table = ts.closure_brute(tree, ts.diametral_path(tree), ts.cost_const(3.0))
    assert table[1, 2] == 3.0
