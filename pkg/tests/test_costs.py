import numpy as np
import pytest

import treeshortcut as ts


def test_const_oracle():
    c = ts.cost_const(2.5)
    assert c.value(1, 7) == 2.5
    with pytest.raises(ts.InputError):
        ts.cost_const(-1.0)


def test_matrix_oracle_symmetric_and_padded():
    m = np.array([[0, 3, 4], [3, 0, 5], [4, 5, 0]], float)
    c = ts.cost_matrix(m)
    assert c.value(1, 3) == 4 and c.value(3, 1) == 4
    with pytest.raises(ts.InputError):
        ts.cost_matrix(np.array([[0, 1], [2, 0]], float))
    with pytest.raises(ts.InputError):
        ts.cost_matrix(np.array([[0, -1], [-1, 0]], float))


def test_coords_oracle():
    c = ts.cost_coords(np.array([[0, 0], [3, 4], [0, 8]], float))
    assert c.value(1, 2) == 5.0
    assert c.value(2, 3) == 5.0
    full = c.full_matrix()
    assert full[1, 3] == 8.0 and full[3, 1] == 8.0


def test_treedist_oracle_matches_distances():
    tree = ts.build_tree(4, [(1, 2, 2), (2, 3, 2), (2, 4, 1)])
    c = ts.cost_treedist(tree)
    d = ts.tree_distances_from(tree, 1)
    assert c.value(1, 3) == d[3]
    assert c.value(1, 4) == d[4]
    assert c.value(3, 4) == 3.0


def test_restrict_to_path_kinds():
    tree = ts.build_tree(4, [(1, 2, 2), (2, 3, 2), (2, 4, 1)])
    path = np.array([0, 1, 2, 3], np.int64)
    inst_prefix = np.array([0.0, 0.0, 2.0, 4.0])
    for cost in (
        ts.cost_const(1.5),
        ts.cost_treedist(tree),
        ts.cost_coords(np.arange(8, dtype=float).reshape(4, 2)),
        ts.cost_matrix(ts.cost_coords(np.arange(8, dtype=float).reshape(4, 2)).full_matrix()[1:, 1:]),
    ):
        pc = cost.restrict_to_path(path)
        from treeshortcut import _kernels

        got = _kernels.cost_values(
            inst_prefix, *pc.args(), np.array([1, 1], np.int64), np.array([2, 3], np.int64)
        )
        assert got[0] == cost.value(1, 2)
        assert got[1] == cost.value(1, 3)
