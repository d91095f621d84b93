"""Pajek-format persistence for networks and vectors.

The supported subset is `*vertices n [n1]` with optional label lines,
repeatable `*arcs` / `*edges` sections of `i j [w]` links, and `*vertices
n` plus one value per line for vectors. Lines whose first non-blank
character is `%` are comments; LF and CRLF both parse; output is always
LF. Files are UTF-8.

Conventions chosen where the classic format is loose:

* a second number on the `*vertices` line marks a two-mode network whose
  rows are vertices 1..n1 and columns n1+1..n, and every link must cross
  from the row zone to the column zone;
* duplicate links are summed (matrix semantics), not overwritten;
* an `*edges` line of a one-mode file expands to the two opposite arcs
  with the same weight, so reading is always a directed network and a
  folded network round-trips through its symmetric expansion;
* weights are written with up to 12 significant digits, integers without
  a decimal point, which reads back well inside 1e-9 relative error.
"""

from __future__ import annotations

import math

from .core import NodeSet, SparseNetwork, WeightVector
from .errors import (
    BadVertexCount,
    CompatibilityError,
    IndexOutOfRange,
    LinknetError,
    ParseError,
)

_SUPPORTED_SECTIONS = ("*vertices", "*arcs", "*edges")

#: Hard ceiling on the declared vertex count: a malformed header must not
#: be able to demand an arbitrarily large allocation.
MAX_VERTICES = 10_000_000


def _to_text(data: str | bytes) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8: {exc}") from None
    return data


def _logical_lines(text: str):
    """Yield (1-based line number, stripped content) skipping blanks/comments."""
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("%"):
            continue
        yield lineno, line


def _tokenize(line: str, lineno: int) -> list[str]:
    """Split on whitespace, honoring double-quoted tokens (no escapes)."""
    out = []
    i, n = 0, len(line)
    while i < n:
        if line[i].isspace():
            i += 1
            continue
        if line[i] == '"':
            end = line.find('"', i + 1)
            if end < 0:
                raise ParseError("unterminated quote", lineno)
            out.append(line[i + 1 : end])
            i = end + 1
        else:
            end = i
            while end < n and not line[end].isspace():
                end += 1
            out.append(line[i:end])
            i = end
    return out


def _parse_int(token: str, what: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} is not an integer: {token!r}", lineno) from None


def _parse_weight(token: str, lineno: int) -> float:
    try:
        w = float(token)
    except ValueError:
        raise ParseError(f"weight is not a number: {token!r}", lineno) from None
    if not math.isfinite(w):
        raise ParseError(f"weight is not finite: {token!r}", lineno)
    return w


def read_network(data: str | bytes) -> SparseNetwork:
    """Parse Pajek text into a (directed) network.

    Raises ParseError (with a 1-based line number where it applies),
    BadVertexCount for an impossible two-mode split, IndexOutOfRange for
    links touching vertices outside their zone. Never raises anything
    else, whatever the input bytes.
    """
    n = None  # total vertex count
    n1 = None  # row-zone size for two-mode files
    named: dict[int, str] = {}  # explicit labels; others default to str(i)
    links: list[tuple[int, int, float]] = []  # 0-based, post zone-split
    section = None

    for lineno, line in _logical_lines(_to_text(data)):
        if line.startswith("*"):
            tokens = _tokenize(line, lineno)
            keyword = tokens[0].lower()
            if keyword == "*vertices":
                if n is not None:
                    raise ParseError("second *vertices section", lineno)
                if len(tokens) < 2 or len(tokens) > 3:
                    raise ParseError(
                        "*vertices takes a count and an optional row count", lineno
                    )
                n = _parse_int(tokens[1], "vertex count", lineno)
                if not 0 <= n <= MAX_VERTICES:
                    raise BadVertexCount(
                        f"vertex count {n} outside 0..{MAX_VERTICES}", lineno
                    )
                if len(tokens) == 3:
                    n1 = _parse_int(tokens[2], "row count", lineno)
                    if not 1 <= n1 <= n:
                        raise BadVertexCount(
                            f"row count {n1} outside 1..{n}", lineno
                        )
                section = "vertices"
            elif keyword in ("*arcs", "*edges"):
                if n is None:
                    raise ParseError(f"{tokens[0]} before *vertices", lineno)
                if len(tokens) != 1:
                    raise ParseError(f"unexpected text after {tokens[0]}", lineno)
                section = keyword[1:]
            else:
                raise ParseError(
                    f"unsupported section {tokens[0]!r} "
                    f"(supported: {', '.join(_SUPPORTED_SECTIONS)})",
                    lineno,
                )
            continue

        if section == "vertices":
            tokens = _tokenize(line, lineno)
            v = _parse_int(tokens[0], "vertex index", lineno)
            if not 1 <= v <= n:
                raise IndexOutOfRange(f"vertex {v} outside 1..{n}", lineno)
            if v in named:
                raise ParseError(f"vertex {v} defined twice", lineno)
            # trailing fields (coordinates etc.) are ignored
            named[v] = tokens[1] if len(tokens) > 1 else str(v)
        elif section in ("arcs", "edges"):
            tokens = line.split()
            if len(tokens) not in (2, 3):
                raise ParseError("link lines are `from to [weight]`", lineno)
            u = _parse_int(tokens[0], "link source", lineno)
            v = _parse_int(tokens[1], "link target", lineno)
            w = _parse_weight(tokens[2], lineno) if len(tokens) == 3 else 1.0
            if n1 is None:
                if not 1 <= u <= n:
                    raise IndexOutOfRange(f"vertex {u} outside 1..{n}", lineno)
                if not 1 <= v <= n:
                    raise IndexOutOfRange(f"vertex {v} outside 1..{n}", lineno)
                links.append((u - 1, v - 1, w))
                if section == "edges" and u != v:
                    links.append((v - 1, u - 1, w))
            else:
                if not 1 <= u <= n1:
                    raise IndexOutOfRange(
                        f"link source {u} outside row zone 1..{n1}", lineno
                    )
                if not n1 < v <= n:
                    raise IndexOutOfRange(
                        f"link target {v} outside column zone {n1 + 1}..{n}",
                        lineno,
                    )
                links.append((u - 1, v - n1 - 1, w))
        else:
            raise ParseError("expected a *vertices section first", lineno)

    if n is None:
        raise ParseError("no *vertices section found")

    # zero_tolerance=None: the file's links are kept verbatim, so networks
    # with meaningful zero weights (e.g. zero dissimilarities) round-trip.
    labels = [named.get(i, str(i)) for i in range(1, n + 1)]
    if n1 is None:
        nodes = NodeSet("nodes", _checked_labels(labels, "nodes"))
        return SparseNetwork(nodes, nodes, links, zero_tolerance=None)
    rows = NodeSet("rows", _checked_labels(labels[:n1], "rows"))
    cols = NodeSet("cols", _checked_labels(labels[n1:], "cols"))
    return SparseNetwork(rows, cols, links, zero_tolerance=None)


def _checked_labels(labels: list[str], mode: str) -> tuple[str, ...]:
    if len(set(labels)) != len(labels):
        raise ParseError(f"duplicate vertex labels in the {mode} mode")
    return tuple(labels)


def format_weight(w: float) -> str:
    """Integer weights bare, everything else at 12 significant digits."""
    if w == int(w) and abs(w) < 1e15:
        return str(int(w))
    return f"{w:.12g}"


def _label_line(i: int, label: str) -> str:
    if '"' in label or any(ord(c) < 32 for c in label):
        raise LinknetError(f"label {label!r} cannot be written to a Pajek file")
    return f'{i} "{label}"'


def _is_exactly_symmetric(net: SparseNetwork) -> bool:
    # stored structure must mirror too: an explicit zero at (i, j) with
    # nothing stored at (j, i) is not symmetric for round-trip purposes
    stored = {(i, j) for i, j, _ in net.entries()}
    return all(
        (j, i) in stored and net.weight(j, i) == w for i, j, w in net.entries()
    )


def write_network(
    net: SparseNetwork, fold: str = "auto", comment: str | None = None
) -> str:
    """Serialize a network to Pajek text.

    fold="auto" writes a one-mode network whose matrix is exactly
    symmetric (or one already folded) as `*edges`, each pair once, which
    reads back to the identical matrix; anything else is written as
    `*arcs`, two-mode networks with the row zone first. fold="arcs"
    forces the arc form.
    """
    if fold not in ("auto", "arcs"):
        raise ValueError(f"fold must be 'auto' or 'arcs', got {fold!r}")
    out = []
    if comment:
        out.extend(f"% {line}" for line in comment.split("\n"))

    if net.is_one_mode:
        out.append(f"*vertices {net.rows.size}")
        out.extend(
            _label_line(i, lab) for i, lab in enumerate(net.rows.labels, start=1)
        )
        as_edges = fold == "auto" and (
            not net.directed or _is_exactly_symmetric(net)
        )
        if as_edges:
            pairs = [
                (i, j, w) for i, j, w in net.as_directed().entries() if i <= j
            ]
            if pairs:
                out.append("*edges")
                out.extend(
                    f"{i + 1} {j + 1} {format_weight(w)}" for i, j, w in pairs
                )
        else:
            arcs = list(net.as_directed().entries())
            if arcs:
                out.append("*arcs")
                out.extend(
                    f"{i + 1} {j + 1} {format_weight(w)}" for i, j, w in arcs
                )
    else:
        n1 = net.rows.size
        out.append(f"*vertices {n1 + net.cols.size} {n1}")
        out.extend(
            _label_line(i, lab) for i, lab in enumerate(net.rows.labels, start=1)
        )
        out.extend(
            _label_line(n1 + i, lab)
            for i, lab in enumerate(net.cols.labels, start=1)
        )
        arcs = list(net.entries())
        if arcs:
            out.append("*arcs")
            out.extend(
                f"{i + 1} {n1 + j + 1} {format_weight(w)}" for i, j, w in arcs
            )

    out.append("")  # trailing newline
    return "\n".join(out)


def read_vector(data: str | bytes, nodes: NodeSet | None = None) -> WeightVector:
    """Parse a Pajek vector: `*vertices n` then one value per line.

    When ``nodes`` is given the vector is bound to it; a length mismatch
    raises CompatibilityError. NaN values are legal (missing entries).
    """
    n = None
    values: list[float] = []
    for lineno, line in _logical_lines(_to_text(data)):
        if line.startswith("*"):
            tokens = _tokenize(line, lineno)
            if tokens[0].lower() != "*vertices" or len(tokens) != 2:
                raise ParseError("vector files start with `*vertices n`", lineno)
            if n is not None:
                raise ParseError("second *vertices section", lineno)
            n = _parse_int(tokens[1], "vertex count", lineno)
            if n < 0:
                raise BadVertexCount(f"negative vertex count {n}", lineno)
            continue
        if n is None:
            raise ParseError("value line before *vertices", lineno)
        tokens = line.split()
        if len(tokens) != 1:
            raise ParseError("vector lines hold exactly one value", lineno)
        try:
            values.append(float(tokens[0]))
        except ValueError:
            raise ParseError(
                f"vector value is not a number: {tokens[0]!r}", lineno
            ) from None
    if n is None:
        raise ParseError("no *vertices section found")
    if len(values) != n:
        raise ParseError(f"expected {n} values, found {len(values)}")
    if nodes is None:
        nodes = NodeSet("nodes", tuple(str(i) for i in range(1, n + 1)))
    elif nodes.size != n:
        raise CompatibilityError(
            f"vector of length {n} does not fit node set "
            f"{nodes.name!r} of size {nodes.size}"
        )
    return WeightVector(nodes, values)


def write_vector(vec: WeightVector, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"% {line}" for line in comment.split("\n"))
    out.append(f"*vertices {len(vec)}")
    for v in vec.values:
        v = float(v)
        out.append("nan" if math.isnan(v) else format_weight(v))
    out.append("")
    return "\n".join(out)


# -- file helpers ------------------------------------------------------------


def load_network(path) -> SparseNetwork:
    with open(path, "rb") as fh:
        return read_network(fh.read())


def save_network(path, net: SparseNetwork, fold: str = "auto", comment=None):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(write_network(net, fold, comment))


def load_vector(path, nodes: NodeSet | None = None) -> WeightVector:
    with open(path, "rb") as fh:
        return read_vector(fh.read(), nodes)


def save_vector(path, vec: WeightVector, comment=None):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(write_vector(vec, comment))
