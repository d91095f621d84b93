"""Independent reference implementations the test suite checks against.

Everything here is deliberately naive: dense triple loops, explicit set
arithmetic, exact rationals. None of it shares code with the package.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from linknet import NodeSet, SparseNetwork


def dense_multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Textbook O(n^3) triple loop, no vectorization."""
    n, m = a.shape
    m2, p = b.shape
    assert m == m2
    out = np.zeros((n, p))
    for i in range(n):
        for j in range(p):
            acc = 0.0
            for k in range(m):
                acc += a[i, k] * b[k, j]
            out[i, j] = acc
    return out


def reference_sets(ci_dense: np.ndarray) -> list[set[int]]:
    """Reference list of each work in a binary citation matrix."""
    return [set(np.nonzero(row)[0].tolist()) for row in ci_dense]


def coupling_counts(ci_dense: np.ndarray) -> np.ndarray:
    """biCo via set intersections: shared references of work pairs."""
    refs = reference_sets(ci_dense)
    n = len(refs)
    out = np.zeros((n, n))
    for p in range(n):
        for q in range(n):
            out[p, q] = len(refs[p] & refs[q])
    return out


def cocitation_counts(ci_dense: np.ndarray) -> np.ndarray:
    """coCi via set intersections on the citing side."""
    citers = reference_sets(ci_dense.T)
    n = len(citers)
    out = np.zeros((n, n))
    for p in range(n):
        for q in range(n):
            out[p, q] = len(citers[p] & citers[q])
    return out


def measure_value(kind: str, refs_p: set[int], refs_q: set[int]) -> float:
    """One coupling measure from the two reference sets themselves."""
    c = len(refs_p & refs_q)
    np_, nq = len(refs_p), len(refs_q)
    if c == 0:
        return 0.0
    if kind == "average":
        return (c / np_ + c / nq) / 2.0
    if kind == "minimum":
        return c / max(np_, nq)
    if kind == "maximum":
        return c / min(np_, nq)
    if kind == "geometric":
        return c / (np_ * nq) ** 0.5
    if kind == "harmonic":
        return 2.0 * c / (np_ + nq)
    if kind == "jaccard":
        return len(refs_p & refs_q) / len(refs_p | refs_q)
    raise ValueError(kind)


def newman_rational(rows: list[list[int]]) -> list[list[Fraction]]:
    """Exact rational collaboration normalization of binary rows."""
    out = []
    for row in rows:
        d = max(1, len(row) - 1)
        out.append([Fraction(1, d) for _ in row])
    return out


# -- random instance generators ----------------------------------------------


def node_set(name: str, n: int) -> NodeSet:
    return NodeSet(name, tuple(f"{name}{i}" for i in range(1, n + 1)))


def random_two_mode(
    rng: random.Random,
    nrows: int,
    ncols: int,
    density: float = 0.3,
    weights: str = "binary",
    row_name: str = "R",
    col_name: str = "C",
) -> SparseNetwork:
    """Random two-mode network; weights 'binary', 'int' or 'real'."""
    entries = []
    for i in range(nrows):
        for j in range(ncols):
            if rng.random() < density:
                if weights == "binary":
                    w = 1.0
                elif weights == "int":
                    w = float(rng.randint(1, 9))
                else:
                    w = rng.uniform(0.1, 5.0)
                entries.append((i, j, w))
    return SparseNetwork(
        node_set(row_name, nrows), node_set(col_name, ncols), entries
    )


def random_one_mode(
    rng: random.Random, n: int, density: float = 0.3, weights: str = "binary"
) -> SparseNetwork:
    nodes = node_set("v", n)
    entries = []
    for i in range(n):
        for j in range(n):
            if rng.random() < density:
                if weights == "binary":
                    w = 1.0
                elif weights == "int":
                    w = float(rng.randint(1, 9))
                else:
                    w = rng.uniform(0.1, 5.0)
                entries.append((i, j, w))
    return SparseNetwork(nodes, nodes, entries)


def to_network(matrix, row_name: str = "R", col_name: str = "C") -> SparseNetwork:
    """Dense matrix (anything numpy accepts) -> SparseNetwork."""
    m = np.asarray(matrix, dtype=float)
    rows = node_set(row_name, m.shape[0])
    cols = rows if row_name == col_name else node_set(col_name, m.shape[1])
    ii, jj = np.nonzero(m)
    return SparseNetwork(
        rows, cols, zip(ii.tolist(), jj.tolist(), m[ii, jj].tolist())
    )
