"""Plain-text instance formats.

Tree file: first line n, then n-1 whitespace-separated lines "u v weight".
Cost files: "matrix" holds n lines of n reals (symmetric, diagonal ignored);
"coords" holds n lines of D reals (costs are Euclidean distances). The
"const K" and "treedist" cost specs are inline and need no file.
"""

from __future__ import annotations

import numpy as np

from .costs import CostOracle, cost_const, cost_coords, cost_matrix, cost_treedist
from .errors import InputError
from .tree import Tree, build_tree


def _tokens(path: str) -> list[list[str]]:
    try:
        with open(path, "r", encoding="ascii") as fh:
            return [line.split() for line in fh if line.strip()]
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}", reason="io") from exc


def read_tree(path: str) -> Tree:
    rows = _tokens(path)
    if not rows or len(rows[0]) != 1:
        raise InputError(f"{path}: first line must hold the vertex count", reason="parse")
    try:
        n = int(rows[0][0])
        edges = [(int(u), int(v), float(w)) for u, v, w in rows[1:]]
    except ValueError as exc:
        raise InputError(f"{path}: {exc}", reason="parse") from exc
    return build_tree(n, edges)


def write_tree(path: str, tree: Tree) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"{tree.n}\n")
        for u, v, w in tree.edges:
            fh.write(f"{u} {v} {_fmt(w)}\n")


def read_cost(spec: list[str], tree: Tree) -> CostOracle:
    """Build a cost oracle from CLI tokens: matrix FILE | coords FILE |
    const K | treedist."""
    if not spec:
        raise InputError("empty cost specification", reason="parse")
    kind = spec[0]
    if kind == "treedist":
        return cost_treedist(tree)
    if len(spec) != 2:
        raise InputError(f"cost spec {kind!r} needs exactly one argument", reason="parse")
    if kind == "const":
        try:
            return cost_const(float(spec[1]))
        except ValueError as exc:
            raise InputError(f"bad constant cost {spec[1]!r}", reason="parse") from exc
    rows = _tokens(spec[1])
    try:
        data = np.array([[float(x) for x in row] for row in rows], np.float64)
    except ValueError as exc:
        raise InputError(f"{spec[1]}: {exc}", reason="parse") from exc
    if data.ndim != 2 or data.shape[0] != tree.n:
        raise InputError(f"{spec[1]}: expected one line per vertex", reason="parse")
    if kind == "matrix":
        if data.shape[1] != tree.n:
            raise InputError(f"{spec[1]}: matrix must be {tree.n}x{tree.n}", reason="parse")
        sym = data.copy()
        np.fill_diagonal(sym, 0.0)
        if not np.array_equal(sym, sym.T):
            raise InputError(f"{spec[1]}: matrix must be symmetric", reason="parse")
        return cost_matrix(sym, declared_class="general")
    if kind == "coords":
        return cost_coords(data)
    raise InputError(f"unknown cost kind {kind!r}", reason="parse")


def write_cost(path: str, cost: CostOracle) -> None:
    if cost.kind == "matrix":
        body = cost.matrix[1:, 1:]
    elif cost.kind == "coords":
        body = cost.coords[1:]
    else:
        raise InputError(f"cost kind {cost.kind!r} has no file form", reason="io")
    with open(path, "w", encoding="ascii") as fh:
        for row in body:
            fh.write(" ".join(_fmt(x) for x in row) + "\n")


def _fmt(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))
