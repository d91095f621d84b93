"""Sparse two-mode networks and the multiplication machinery built on them.

A network is a weighted sparse matrix whose rows and columns are named node
sets (modes). One-mode networks are the special case where both modes carry
the same labels. Multiplication iterates over intermediate nodes, touching
only nonzero entries, and can be decomposed into one rank-1 term per
intermediate node; both views are exposed here.

All objects are immutable after construction and every operation returns a
new value, so everything in this module is safe to share across threads.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    ExplosionAborted,
    IncompatibleModes,
    LinknetError,
    NotOneMode,
    NotSymmetric,
)

#: Entries with |weight| below this are dropped after arithmetic, so that
#: cancellation residue does not inflate the sparsity structure.
ZERO_TOL = 1e-12

#: Relative tolerance used when folding a noisily-symmetric product.
SYMMETRY_TOL = 1e-9

#: Default ceiling on the predicted number of elementary products in a
#: multiplication before it is refused as an explosion.
DEFAULT_GUARD = 100_000_000

#: Environment variable that overrides the default guard threshold.
GUARD_ENV_VAR = "LINKNET_GUARD"


@dataclass(frozen=True)
class NodeSet:
    """An ordered, labeled mode. Indices are 0-based, dense and stable."""

    name: str
    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"duplicate labels in node set {self.name!r}")

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"label {label!r} not in node set {self.name!r}") from None

    def __len__(self) -> int:
        return len(self.labels)


@dataclass
class WeightVector:
    """A per-node scalar vector (degrees, row sums, selfsufficiency, ...).

    Values are float64; NaN marks a missing value (for example an author
    with no works has no defined selfsufficiency).
    """

    nodes: NodeSet
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.shape != (self.nodes.size,):
            raise ValueError(
                f"vector length {self.values.shape} does not match "
                f"node set size {self.nodes.size}"
            )

    def __getitem__(self, i: int) -> float:
        return float(self.values[i])

    def __len__(self) -> int:
        return len(self.values)

    def items(self) -> Iterator[tuple[str, float]]:
        for label, value in zip(self.nodes.labels, self.values):
            yield label, float(value)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightVector):
            return NotImplemented
        return self.nodes.labels == other.nodes.labels and np.array_equal(
            self.values, other.values, equal_nan=True
        )


@dataclass(frozen=True)
class ExplosionGuard:
    """Pre-flight cost limit for multiplication.

    The predicted cost of a product is the number of elementary
    multiply-accumulate steps, sum over intermediate nodes k of
    indegree_A(k) * outdegree_B(k). It is computed before any work is done,
    so refusing an exploding product is cheap.
    """

    max_products: int = DEFAULT_GUARD

    @classmethod
    def from_env(cls) -> "ExplosionGuard":
        raw = os.environ.get(GUARD_ENV_VAR)
        if raw is None:
            return cls()
        try:
            return cls(int(raw))
        except ValueError:
            raise LinknetError(
                f"{GUARD_ENV_VAR} must be an integer, got {raw!r}"
            ) from None


class SparseNetwork:
    """A weighted sparse two-mode network.

    Entries are kept row-major, each row as a column-sorted mapping, plus a
    transposed index built lazily for operations that walk columns. Stored
    weights are never exactly zero unless ``zero_tolerance=None`` is passed,
    which a few similarity transforms use to keep a meaningful zero.

    ``directed=False`` marks a folded one-mode network whose unordered pairs
    are stored once with i <= j; such networks act as their symmetric
    expansion wherever matrix semantics are needed.
    """

    __slots__ = ("rows", "cols", "directed", "_adj", "_cols_adj", "_nnz")

    def __init__(
        self,
        rows: NodeSet,
        cols: NodeSet,
        entries: Iterable[tuple[int, int, float]] = (),
        directed: bool = True,
        zero_tolerance: float | None = ZERO_TOL,
    ):
        if not directed and rows.labels != cols.labels:
            raise NotOneMode("an undirected network must be one-mode")
        self.rows = rows
        self.cols = cols
        self.directed = directed
        nr, nc = rows.size, cols.size
        acc: dict[int, dict[int, float]] = {}
        for i, j, w in entries:
            if not directed and j < i:
                i, j = j, i
            if not (0 <= i < nr) or not (0 <= j < nc):
                raise IndexError(f"entry ({i}, {j}) outside {nr}x{nc} network")
            w = float(w)
            if not math.isfinite(w):
                raise ValueError(f"non-finite weight at ({i}, {j})")
            row = acc.get(i)
            if row is None:
                row = acc[i] = {}
            row[j] = row.get(j, 0.0) + w
        adj: dict[int, dict[int, float]] = {}
        nnz = 0
        for i in sorted(acc):
            row = {
                j: w
                for j, w in sorted(acc[i].items())
                if zero_tolerance is None or abs(w) >= zero_tolerance
            }
            if row:
                adj[i] = row
                nnz += len(row)
        self._adj = adj
        self._cols_adj = None
        self._nnz = nnz

    # -- construction helpers -------------------------------------------

    @classmethod
    def from_dense(
        cls, rows: NodeSet, cols: NodeSet, matrix, directed: bool = True
    ) -> "SparseNetwork":
        """Build a network from a dense matrix (nested lists or ndarray)."""
        m = np.asarray(matrix, dtype=np.float64)
        if m.shape != (rows.size, cols.size):
            raise ValueError(f"matrix shape {m.shape} does not match node sets")
        ii, jj = np.nonzero(m)
        return cls(
            rows, cols, zip(ii.tolist(), jj.tolist(), m[ii, jj].tolist()), directed
        )

    # -- basic queries ----------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows.size, self.cols.size)

    @property
    def nnz(self) -> int:
        return self._nnz

    @property
    def is_one_mode(self) -> bool:
        return self.rows.labels == self.cols.labels

    @property
    def is_binary(self) -> bool:
        return all(w == 1.0 for row in self._adj.values() for w in row.values())

    def weight(self, i: int, j: int) -> float:
        """Stored weight at (i, j); 0.0 when absent. Respects foldedness."""
        if not self.directed and j < i:
            i, j = j, i
        row = self._adj.get(i)
        return row.get(j, 0.0) if row else 0.0

    def row(self, i: int) -> list[tuple[int, float]]:
        row = self._adj.get(i)
        return list(row.items()) if row else []

    def column(self, j: int) -> list[tuple[int, float]]:
        cols = self._column_adjacency()
        return list(cols.get(j, ()))

    def entries(self) -> Iterator[tuple[int, int, float]]:
        """Stored entries in ascending (row, col) order."""
        for i, row in self._adj.items():
            for j, w in row.items():
                yield i, j, w

    def total_weight(self) -> float:
        return sum(w for row in self._adj.values() for w in row.values())

    def to_dense(self) -> np.ndarray:
        """Dense matrix with full symmetric semantics for undirected nets."""
        m = np.zeros(self.shape)
        for i, j, w in self.entries():
            m[i, j] = w
            if not self.directed and i != j:
                m[j, i] = w
        return m

    # -- transforms -------------------------------------------------------

    def transpose(self) -> "SparseNetwork":
        if not self.directed:
            return self
        return SparseNetwork(
            self.cols,
            self.rows,
            ((j, i, w) for i, j, w in self.entries()),
            directed=True,
            zero_tolerance=None,
        )

    def as_directed(self) -> "SparseNetwork":
        """Symmetric arc expansion of an undirected network (self if directed)."""
        if self.directed:
            return self

        def mirrored():
            for i, j, w in self.entries():
                yield i, j, w
                if i != j:
                    yield j, i, w

        return SparseNetwork(
            self.rows, self.cols, mirrored(), directed=True, zero_tolerance=None
        )

    def drop_diagonal(self) -> "SparseNetwork":
        """Copy without loop entries (one-mode only)."""
        if not self.is_one_mode:
            raise NotOneMode("diagonal is defined only for one-mode networks")
        return SparseNetwork(
            self.rows,
            self.cols,
            ((i, j, w) for i, j, w in self.entries() if i != j),
            directed=self.directed,
            zero_tolerance=None,
        )

    def _column_adjacency(self) -> dict[int, list[tuple[int, float]]]:
        # Built once on demand; idempotent, so benign under concurrent access.
        if self._cols_adj is None:
            cols: dict[int, list[tuple[int, float]]] = {}
            for i, row in self._adj.items():
                for j, w in row.items():
                    cols.setdefault(j, []).append((i, w))
            self._cols_adj = cols  # rows arrive in ascending i: already sorted
        return self._cols_adj

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseNetwork):
            return NotImplemented
        return (
            self.rows.labels == other.rows.labels
            and self.cols.labels == other.cols.labels
            and self.directed == other.directed
            and self._adj == other._adj
        )

    __hash__ = None  # mutable-ish internals; identity hashing would mislead

    def __repr__(self) -> str:
        kind = "one-mode" if self.is_one_mode else "two-mode"
        arrows = "arcs" if self.directed else "edges"
        return (
            f"<SparseNetwork {self.rows.name}x{self.cols.name} "
            f"{self.shape[0]}x{self.shape[1]} {kind} {self._nnz} {arrows}>"
        )


@dataclass(frozen=True)
class OuterTerm:
    """One rank-1 term of a product decomposition.

    The term for intermediate node k is the outer product of the k-th column
    of the left factor (``row_profile``, over the result's rows) with the
    k-th row of the right factor (``col_profile``, over the result's
    columns), times ``scale``. Raw decompositions carry scale 1; dividing by
    the two profile sums instead yields the fractional term with total
    weight 1.
    """

    pivot: int
    pivot_label: str
    row_profile: dict[int, float]
    col_profile: dict[int, float]
    rows: NodeSet
    cols: NodeSet
    scale: float = 1.0

    @property
    def total_weight(self) -> float:
        return self.scale * sum(self.row_profile.values()) * sum(
            self.col_profile.values()
        )

    def materialize(self) -> SparseNetwork:
        return SparseNetwork(
            self.rows,
            self.cols,
            (
                (i, j, self.scale * x * y)
                for i, x in self.row_profile.items()
                for j, y in self.col_profile.items()
            ),
        )

    def fractional(self) -> "OuterTerm":
        """The same term rescaled so its total weight is 1."""
        sx = sum(self.row_profile.values())
        sy = sum(self.col_profile.values())
        if sx == 0.0 or sy == 0.0:
            return self
        return OuterTerm(
            self.pivot,
            self.pivot_label,
            self.row_profile,
            self.col_profile,
            self.rows,
            self.cols,
            self.scale / (sx * sy),
        )


# -- operations -------------------------------------------------------------


def _require_compatible(a: SparseNetwork, b: SparseNetwork):
    if a.cols.labels != b.rows.labels:
        raise IncompatibleModes(
            f"inner modes differ: {a.cols.name!r} ({a.cols.size} nodes) vs "
            f"{b.rows.name!r} ({b.rows.size} nodes)"
        )


def transpose(net: SparseNetwork) -> SparseNetwork:
    return net.transpose()


def total_weight(net: SparseNetwork) -> float:
    return net.total_weight()


def predicted_products(a: SparseNetwork, b: SparseNetwork) -> int:
    """Number of elementary products multiply(a, b) would perform."""
    a, b = a.as_directed(), b.as_directed()
    acols = a._column_adjacency()
    return sum(len(acols[k]) * len(b._adj[k]) for k in acols if k in b._adj)


def multiply(
    a: SparseNetwork, b: SparseNetwork, guard: ExplosionGuard | None = None
) -> SparseNetwork:
    """Sparse product of two compatible networks.

    Iterates over intermediate nodes k, adding a[i,k]*b[k,j] for every pair
    of an in-neighbor i of k in a and an out-neighbor j of k in b. Entries
    accumulate in ascending (k, i, j) order, so single-threaded results are
    bit-reproducible. Raises ExplosionAborted before doing any work if the
    predicted cost exceeds the guard threshold: a few intermediate nodes of
    high degree in both factors are enough to densify the product.
    """
    _require_compatible(a, b)
    if guard is None:
        guard = ExplosionGuard.from_env()
    a, b = a.as_directed(), b.as_directed()
    acols = a._column_adjacency()
    badj = b._adj
    common = [k for k in acols if k in badj]
    predicted = sum(len(acols[k]) * len(badj[k]) for k in common)
    if predicted > guard.max_products:
        raise ExplosionAborted(predicted, guard.max_products)
    out: dict[int, dict[int, float]] = {}
    for k in sorted(common):
        brow = list(badj[k].items())
        for i, aik in acols[k]:
            orow = out.get(i)
            if orow is None:
                orow = out[i] = {}
            get = orow.get
            for j, bkj in brow:
                orow[j] = get(j, 0.0) + aik * bkj
    return SparseNetwork(
        a.rows,
        b.cols,
        ((i, j, w) for i, orow in out.items() for j, w in orow.items()),
    )


def decompose(a: SparseNetwork, b: SparseNetwork) -> Iterator[OuterTerm]:
    """Rank-1 terms of the product, one per productive intermediate node.

    Summing the materialized terms reproduces multiply(a, b); the total
    weight of each term is the product of its two profile sums.
    """
    _require_compatible(a, b)
    a, b = a.as_directed(), b.as_directed()
    acols = a._column_adjacency()
    badj = b._adj
    inner = a.cols
    for k in sorted(acols):
        brow = badj.get(k)
        if not brow:
            continue
        yield OuterTerm(
            pivot=k,
            pivot_label=inner.labels[k],
            row_profile=dict(acols[k]),
            col_profile=dict(brow),
            rows=a.rows,
            cols=b.cols,
        )


def diag_scale(
    d: WeightVector, net: SparseNetwork, side: str = "left"
) -> SparseNetwork:
    """Multiply by a diagonal matrix: row scaling (left) or column (right)."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    net = net.as_directed()
    target = net.rows if side == "left" else net.cols
    if d.nodes.labels != target.labels:
        raise IncompatibleModes(
            f"vector over {d.nodes.name!r} cannot scale the "
            f"{side} side of {net!r}"
        )
    values = d.values
    if side == "left":
        scaled = ((i, j, float(values[i]) * w) for i, j, w in net.entries())
    else:
        scaled = ((i, j, w * float(values[j])) for i, j, w in net.entries())
    return SparseNetwork(net.rows, net.cols, scaled)


def out_degrees(net: SparseNetwork) -> WeightVector:
    """Count of nonzero entries per row (of the symmetric expansion if folded)."""
    net = net.as_directed()
    values = np.zeros(net.rows.size)
    for i, row in net._adj.items():
        values[i] = len(row)
    return WeightVector(net.rows, values)


def in_degrees(net: SparseNetwork) -> WeightVector:
    net = net.as_directed()
    values = np.zeros(net.cols.size)
    for j, col in net._column_adjacency().items():
        values[j] = len(col)
    return WeightVector(net.cols, values)


def row_sums(net: SparseNetwork) -> WeightVector:
    net = net.as_directed()
    values = np.zeros(net.rows.size)
    for i, row in net._adj.items():
        values[i] = sum(row.values())
    return WeightVector(net.rows, values)


def col_sums(net: SparseNetwork) -> WeightVector:
    net = net.as_directed()
    values = np.zeros(net.cols.size)
    for j, col in net._column_adjacency().items():
        values[j] = sum(w for _, w in col)
    return WeightVector(net.cols, values)


def fold_to_undirected(
    net: SparseNetwork, loops: str = "keep"
) -> tuple[SparseNetwork, WeightVector | None]:
    """Fold a symmetric one-mode network into an undirected one.

    Each unordered pair {a, b} is stored once with weight
    net[a,b] + net[b,a], so the total weight of a symmetric network is
    preserved. ``loops`` is one of "keep", "drop" or "extract"; "extract"
    drops loops from the network and returns the diagonal as the second
    element (the self-contribution vector). Asymmetry beyond a small
    relative tolerance raises NotSymmetric: products of normalized networks
    are symmetric only up to floating-point noise.
    """
    if loops not in ("keep", "drop", "extract"):
        raise ValueError(f"loops must be keep/drop/extract, got {loops!r}")
    if not net.is_one_mode:
        raise NotOneMode("only one-mode networks can be folded")

    diagonal = np.zeros(net.rows.size)
    pairs: list[tuple[int, int, float]] = []
    if net.directed:
        for i, j, w in net.entries():
            if i == j:
                diagonal[i] = w
            elif i < j:
                opposite = net.weight(j, i)
                if abs(w - opposite) > SYMMETRY_TOL * max(1.0, abs(w), abs(opposite)):
                    raise NotSymmetric(
                        f"entries ({i},{j})={w} and ({j},{i})={opposite} "
                        f"differ beyond tolerance"
                    )
                pairs.append((i, j, w + opposite))
            elif net.weight(j, i) == 0.0:
                # lower-triangle entry with no mirror: caught by tolerance
                opposite = 0.0
                if abs(w) > SYMMETRY_TOL * max(1.0, abs(w)):
                    raise NotSymmetric(
                        f"entry ({i},{j})={w} has no symmetric counterpart"
                    )
                pairs.append((j, i, w))
    else:
        for i, j, w in net.entries():
            if i == j:
                diagonal[i] = w
            else:
                pairs.append((i, j, w))

    if loops == "keep":
        pairs.extend((i, i, diagonal[i]) for i in range(len(diagonal)))
    folded = SparseNetwork(net.rows, net.cols, pairs, directed=False)
    if loops == "extract":
        return folded, WeightVector(net.rows, diagonal)
    return folded, None
