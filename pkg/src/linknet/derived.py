"""Networks derived from two-mode memberships by multiplication.

The running vocabulary is bibliographic — works x authors, works x
keywords, works x works citations — but nothing here depends on it; any
two-mode network with the same shape works.

Coauthorship comes in four variants that answer different questions:

* ``first``      raw co-occurrence counts, WA^T * WA (binary input);
* ``second``     works spread one unit over their authors before
                 projecting, WA^T * WAn: row a tells how a's collaboration
                 credit is distributed, and the loop weight is a's
                 selfsufficiency numerator;
* ``third``      both factors normalized, WAn^T * WAn: total weight equals
                 the number of authored works, each work contributing one
                 unit smeared over its author pairs (loops included);
* ``fourth``     strict collaboration bonds, WAn^T * newman(WA) folded to
                 an undirected network with no loops: a work with d >= 2
                 authors contributes exactly one unit split over its
                 author pairs, and single-author works contribute nothing.
"""

from __future__ import annotations

import numpy as np

from .core import (
    ExplosionGuard,
    SparseNetwork,
    WeightVector,
    fold_to_undirected,
    in_degrees,
    multiply,
    transpose,
)
from .errors import IncompatibleModes, NotBinary, NotTwoMode
from .normalize import normalize_newman, normalize_rows

COAUTHORSHIP_VARIANTS = ("first", "second", "third", "fourth")


def _require_two_mode(net: SparseNetwork, what: str):
    if net.is_one_mode:
        raise NotTwoMode(f"{what} expects a two-mode network")


def project(
    wa: SparseNetwork, side: str = "cols", guard: ExplosionGuard | None = None
) -> SparseNetwork:
    """One-mode projection of a two-mode network.

    side="cols" links column nodes that share a row (WA^T * WA, e.g.
    authors sharing works); side="rows" links row nodes that share a column
    (WA * WA^T). Weights count shared neighbors when the input is binary.
    """
    _require_two_mode(wa, "projection")
    if side == "cols":
        return multiply(transpose(wa), wa, guard)
    if side == "rows":
        return multiply(wa, transpose(wa), guard)
    raise ValueError(f"side must be 'rows' or 'cols', got {side!r}")


def coauthorship(
    wa: SparseNetwork, variant: str, guard: ExplosionGuard | None = None
) -> SparseNetwork:
    """One of the four coauthorship constructions (see module docstring)."""
    _require_two_mode(wa, "coauthorship")
    if variant == "first":
        if not wa.is_binary:
            raise NotBinary("plain coauthorship counts need a binary network")
        return multiply(transpose(wa), wa, guard)
    if variant == "second":
        return multiply(transpose(wa), normalize_rows(wa), guard)
    if variant == "third":
        wan = normalize_rows(wa)
        return multiply(transpose(wan), wan, guard)
    if variant == "fourth":
        wan = normalize_rows(wa)
        strict = multiply(transpose(wan), normalize_newman(wa), guard)
        folded, _ = fold_to_undirected(strict, loops="drop")
        return folded
    raise ValueError(
        f"variant must be one of {COAUTHORSHIP_VARIANTS}, got {variant!r}"
    )


def self_sufficiency(
    wa: SparseNetwork, guard: ExplosionGuard | None = None
) -> tuple[WeightVector, WeightVector]:
    """Per-author selfsufficiency S and collaborativeness K = 1 - S.

    S_a is the loop weight of the second coauthorship variant divided by
    the number of a's works: the share of a's works' credit that stays
    with a. Authors with no works get NaN in both vectors.
    """
    _require_two_mode(wa, "selfsufficiency")
    cn = coauthorship(wa, "second", guard)
    works = in_degrees(wa)
    s = np.full(wa.cols.size, np.nan)
    for a in range(wa.cols.size):
        d = works[a]
        if d > 0:
            s[a] = cn.weight(a, a) / d
    authors = wa.cols
    return WeightVector(authors, s), WeightVector(authors, 1.0 - s)


def link_through(
    wa: SparseNetwork,
    s: SparseNetwork,
    normalized: bool = True,
    guard: ExplosionGuard | None = None,
) -> SparseNetwork:
    """Connect column nodes through a one-mode network on the row nodes.

    Computes WAn^T * S * WAn (or WA^T * S * WA when normalized=False):
    e.g. authors linked by citations between their works. When S is
    symmetric the result is symmetric, and with row normalization the
    total weight of S is preserved whenever every row of WA is nonempty.
    """
    _require_two_mode(wa, "linking through a one-mode network")
    if not s.is_one_mode or s.rows.labels != wa.rows.labels:
        raise IncompatibleModes(
            "the linking network must be one-mode on the row nodes of the "
            "two-mode network"
        )
    wan = normalize_rows(wa) if normalized else wa
    return multiply(multiply(transpose(wan), s, guard), wan, guard)


def author_keyword(
    wa: SparseNetwork,
    wk: SparseNetwork,
    normalized: bool = True,
    guard: ExplosionGuard | None = None,
) -> SparseNetwork:
    """Link column nodes of two two-mode networks that share row nodes.

    With normalized=True both factors are row-normalized first, so each
    shared row node contributes exactly one unit of weight and the total
    weight equals the number of rows nonempty in both networks.
    """
    _require_two_mode(wa, "author-keyword linking")
    _require_two_mode(wk, "author-keyword linking")
    if wa.rows.labels != wk.rows.labels:
        raise IncompatibleModes("the two networks must share their row mode")
    if normalized:
        wa, wk = normalize_rows(wa), normalize_rows(wk)
    return multiply(transpose(wa), wk, guard)
