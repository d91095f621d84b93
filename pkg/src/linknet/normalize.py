"""Row/column normalizations that turn counts into distributed fractions.

Row normalization divides each row by its sum, so every node spreads one
unit of weight over its links; rows with no links are left empty rather
than poisoned with NaN. The Newman variant divides by (count - 1) instead,
crediting each link of a node with d links as 1/(d-1) — the convention in
which a pairwise bond between collaborators on a d-person work counts
1/(d-1); nodes with a single link keep weight 1 on it.
"""

from __future__ import annotations

from .core import SparseNetwork
from .errors import NotBinary, NotOneMode


def normalize_rows(net: SparseNetwork) -> SparseNetwork:
    """Divide each row by its sum (empty rows stay empty)."""
    net = net.as_directed()

    def scaled():
        for i in range(net.rows.size):
            row = net.row(i)
            s = sum(w for _, w in row)
            if s == 0.0:
                continue
            for j, w in row:
                yield i, j, w / s

    return SparseNetwork(net.rows, net.cols, scaled())


def normalize_cols(net: SparseNetwork) -> SparseNetwork:
    """Divide each column by its sum (empty columns stay empty).

    Provided as the mirror of :func:`normalize_rows`. For membership
    networks whose rows are the works, distributing each work's unit of
    weight is what the row form does; column fractions are rarely the
    quantity of interest there, so reach for this only when the columns
    are the side whose totals should become 1.
    """
    net = net.as_directed()

    def scaled():
        for j in range(net.cols.size):
            col = net.column(j)
            s = sum(w for _, w in col)
            if s == 0.0:
                continue
            for i, w in col:
                yield i, j, w / s

    return SparseNetwork(net.rows, net.cols, scaled())


def normalize_newman(net: SparseNetwork) -> SparseNetwork:
    """Divide each row of a binary network by (row count - 1), floored at 1.

    Rows with one entry keep weight 1; a row with d >= 2 entries sums to
    d/(d-1). Weighted input is rejected: the (d-1) denominator counts
    co-members and has no meaning for non-binary weights.
    """
    net = net.as_directed()
    if not net.is_binary:
        raise NotBinary("collaboration normalization requires a binary network")

    def scaled():
        for i in range(net.rows.size):
            row = net.row(i)
            d = max(1, len(row) - 1)
            for j, _ in row:
                yield i, j, 1.0 / d

    return SparseNetwork(net.rows, net.cols, scaled())


def normalize_citations(net: SparseNetwork) -> SparseNetwork:
    """Row-normalize a one-mode (citation-like) network."""
    if not net.is_one_mode:
        raise NotOneMode("citation normalization expects a one-mode network")
    return normalize_rows(net)
