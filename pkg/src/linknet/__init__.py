"""Sparse linked-network toolkit.

Networks over shared node sets (works, authors, keywords, ...) with sparse
multiplication, rank-1 product decomposition, fractional and collaboration
normalizations, derived one-mode networks, coupling similarity measures,
and Pajek-format persistence.
"""

from .core import (
    DEFAULT_GUARD,
    ExplosionGuard,
    NodeSet,
    OuterTerm,
    SparseNetwork,
    WeightVector,
    decompose,
    diag_scale,
    fold_to_undirected,
    in_degrees,
    multiply,
    out_degrees,
    col_sums,
    predicted_products,
    row_sums,
    total_weight,
    transpose,
)
from .coupling import (
    Measure,
    bi_coupling,
    bi_coupling_fractional,
    bi_coupling_measure,
    co_citation,
    co_citation_normalized,
    to_dissimilarity,
)
from .derived import (
    author_keyword,
    coauthorship,
    link_through,
    project,
    self_sufficiency,
)
from .errors import (
    BadVertexCount,
    CompatibilityError,
    DomainError,
    ExplosionAborted,
    IncompatibleModes,
    IndexOutOfRange,
    LinknetError,
    NotBinary,
    NotOneMode,
    NotSymmetric,
    NotTwoMode,
    ParseError,
)
from .normalize import (
    normalize_citations,
    normalize_cols,
    normalize_newman,
    normalize_rows,
)
from .pajek import (
    load_network,
    load_vector,
    read_network,
    read_vector,
    save_network,
    save_vector,
    write_network,
    write_vector,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_GUARD",
    "ExplosionGuard",
    "Measure",
    "NodeSet",
    "OuterTerm",
    "SparseNetwork",
    "WeightVector",
    "author_keyword",
    "bi_coupling",
    "bi_coupling_fractional",
    "bi_coupling_measure",
    "co_citation",
    "co_citation_normalized",
    "coauthorship",
    "col_sums",
    "decompose",
    "diag_scale",
    "fold_to_undirected",
    "in_degrees",
    "link_through",
    "load_network",
    "load_vector",
    "multiply",
    "normalize_citations",
    "normalize_cols",
    "normalize_newman",
    "normalize_rows",
    "out_degrees",
    "predicted_products",
    "project",
    "read_network",
    "read_vector",
    "row_sums",
    "save_network",
    "save_vector",
    "self_sufficiency",
    "to_dissimilarity",
    "total_weight",
    "transpose",
    "write_network",
    "write_vector",
    # errors
    "LinknetError",
    "IncompatibleModes",
    "ExplosionAborted",
    "NotOneMode",
    "NotTwoMode",
    "NotSymmetric",
    "NotBinary",
    "DomainError",
    "CompatibilityError",
    "ParseError",
    "BadVertexCount",
    "IndexOutOfRange",
]
