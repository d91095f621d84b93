"""Bibliographic coupling, co-citation and normalized similarity measures.

For a binary citation network Ci (arcs point from citing to cited work),
the coupling count of works p and q is the size of the intersection of
their reference lists, biCo = Ci * Ci^T. Six classical normalizations of
that count against the reference-list sizes n_p, n_q are provided, all
symmetric in p and q, all in [0, 1], and pointwise ordered

    jaccard <= minimum <= harmonic <= geometric <= average <= maximum

with every measure equal to 1 exactly when the two reference lists make
that measure's notion of agreement perfect (equal sets for all but
``maximum``, which reaches 1 already when one list contains the other).
"""

from __future__ import annotations

import enum
import math

from .core import (
    ExplosionGuard,
    SparseNetwork,
    WeightVector,
    diag_scale,
    multiply,
    out_degrees,
    transpose,
)
from .errors import DomainError, NotBinary, NotOneMode
from .normalize import normalize_citations

import numpy as np


class Measure(enum.Enum):
    """Similarity normalizations of the coupling count c against n_p, n_q."""

    AVERAGE = "average"      # c * (1/n_p + 1/n_q) / 2
    MINIMUM = "minimum"      # c / max(n_p, n_q)
    MAXIMUM = "maximum"      # c / min(n_p, n_q)
    GEOMETRIC = "geometric"  # c / sqrt(n_p * n_q)   (Salton cosine)
    HARMONIC = "harmonic"    # 2c / (n_p + n_q)
    JACCARD = "jaccard"      # c / (n_p + n_q - c)


#: Dissimilarity transforms applicable to a similarity network with values
#: in (0, 1]: name -> (function, value allowed at s == 1).
DISSIMILARITY_TRANSFORMS = {
    "one_minus": lambda s: 1.0 - s,
    "reciprocal_minus_one": lambda s: 1.0 / s - 1.0,
    "neg_log": lambda s: -math.log(s),
}


def _require_citation(ci: SparseNetwork, what: str):
    if not ci.is_one_mode:
        raise NotOneMode(f"{what} expects a one-mode citation network")


def bi_coupling(
    ci: SparseNetwork, guard: ExplosionGuard | None = None
) -> SparseNetwork:
    """Coupling counts biCo = Ci * Ci^T: shared references of work pairs."""
    _require_citation(ci, "coupling")
    return multiply(ci, transpose(ci), guard)


def co_citation(
    ci: SparseNetwork, guard: ExplosionGuard | None = None
) -> SparseNetwork:
    """Co-citation counts coCi = Ci^T * Ci: shared citers of work pairs."""
    _require_citation(ci, "co-citation")
    return multiply(transpose(ci), ci, guard)


def co_citation_normalized(
    ci: SparseNetwork, guard: ExplosionGuard | None = None
) -> SparseNetwork:
    """Fractional co-citation CoCit = Cin^T * Cin.

    Each citing work distributes one unit over its references, so the
    total weight is the number of works that cite anything.
    """
    _require_citation(ci, "normalized co-citation")
    cin = normalize_citations(ci)
    return multiply(transpose(cin), cin, guard)


def bi_coupling_fractional(
    ci: SparseNetwork, guard: ExplosionGuard | None = None
) -> SparseNetwork:
    """Row-fractional coupling biC = Cin * Ci^T = D * biCo.

    Row p of biCo divided by p's number of references; asymmetric, row p
    answering "what share of p's references does q share?".
    """
    _require_citation(ci, "fractional coupling")
    if not ci.is_binary:
        raise NotBinary("fractional coupling requires a binary citation network")
    counts = bi_coupling(ci, guard)
    degrees = out_degrees(ci).values
    inverse = np.divide(1.0, degrees, out=np.zeros_like(degrees), where=degrees > 0)
    return diag_scale(WeightVector(ci.rows, inverse), counts, side="left")


def bi_coupling_measure(
    ci: SparseNetwork,
    measure: Measure | str,
    guard: ExplosionGuard | None = None,
) -> SparseNetwork:
    """Symmetric coupling similarity between distinct works, undirected.

    Works with empty reference lists have no couplings, and the diagonal
    is excluded: a work's similarity to itself is uninformative. The
    formulas divide the raw coupling count by a combination of the two
    reference counts; see Measure for the exact shapes.
    """
    measure = Measure(measure)
    _require_citation(ci, "coupling similarity")
    if not ci.is_binary:
        raise NotBinary("coupling measures require a binary citation network")
    counts = bi_coupling(ci, guard)
    n = out_degrees(ci).values

    def value(c: float, np_: float, nq: float) -> float:
        if measure is Measure.AVERAGE:
            return (c / np_ + c / nq) / 2.0
        if measure is Measure.MINIMUM:
            return c / max(np_, nq)
        if measure is Measure.MAXIMUM:
            return c / min(np_, nq)
        if measure is Measure.GEOMETRIC:
            return c / math.sqrt(np_ * nq)
        if measure is Measure.HARMONIC:
            return 2.0 * c / (np_ + nq)
        return c / (np_ + nq - c)  # jaccard

    def pairs():
        for p, q, c in counts.entries():
            if p >= q:  # keep each unordered pair once, skip loops
                continue
            yield p, q, value(c, n[p], n[q])

    return SparseNetwork(ci.rows, ci.cols, pairs(), directed=False)


def to_dissimilarity(sim: SparseNetwork, transform: str) -> SparseNetwork:
    """Map a similarity network with values in (0, 1] to dissimilarities.

    Transforms: one_minus (1-s), reciprocal_minus_one (1/s - 1), neg_log
    (-ln s). Values outside (0, 1] raise DomainError. Entries that map to
    exactly 0 (from s == 1) are kept as explicit zeros: a zero
    dissimilarity asserts sameness, which is not the same as no relation.
    """
    try:
        fn = DISSIMILARITY_TRANSFORMS[transform]
    except KeyError:
        raise ValueError(
            f"transform must be one of {sorted(DISSIMILARITY_TRANSFORMS)}, "
            f"got {transform!r}"
        ) from None

    def mapped():
        for i, j, s in sim.entries():
            if not 0.0 < s <= 1.0:
                raise DomainError(
                    f"similarity {s} at ({i}, {j}) outside (0, 1]; "
                    f"cannot apply {transform}"
                )
            yield i, j, fn(s)

    return SparseNetwork(
        sim.rows,
        sim.cols,
        mapped(),
        directed=sim.directed,
        zero_tolerance=None,
    )
