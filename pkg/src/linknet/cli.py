"""Command-line surface: compose network operations over Pajek files.

Every command reads Pajek files (`-` for stdin), computes the full result,
and only then writes it (`-o -` for stdout, the default), so an aborted
computation never leaves a truncated output file. Exit codes: 0 success,
1 usage error, 2 data error (parse failures, incompatible networks), 3
multiplication refused by the explosion guard.
"""

from __future__ import annotations

import math
import sys

import click

from . import coupling as cp
from . import derived, normalize, pajek
from .core import (
    ExplosionGuard,
    SparseNetwork,
    decompose as decompose_terms,
    in_degrees,
    multiply,
    out_degrees,
    transpose,
)
from .errors import ExplosionAborted, LinknetError, NotTwoMode, ParseError

_MEASURES = {
    "a": cp.Measure.AVERAGE,
    "m": cp.Measure.MINIMUM,
    "M": cp.Measure.MAXIMUM,
    "g": cp.Measure.GEOMETRIC,
    "h": cp.Measure.HARMONIC,
    "j": cp.Measure.JACCARD,
}

_DISSIMS = {
    "1-s": "one_minus",
    "inv": "reciprocal_minus_one",
    "log": "neg_log",
}

_in_path = click.Path(exists=True, dir_okay=False, allow_dash=True)


def _read_net(path: str) -> SparseNetwork:
    label = "stdin" if path == "-" else path
    try:
        if path == "-":
            return pajek.read_network(sys.stdin.read())
        return pajek.load_network(path)
    except ParseError as exc:
        raise ParseError(f"{label}: {exc}") from None


def _write(output: str, text: str):
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _write_net(output: str, net: SparseNetwork, comment: str | None = None):
    _write(output, pajek.write_network(net, comment=comment))


def _tsv(rows) -> str:
    return "".join("\t".join(str(c) for c in row) + "\n" for row in rows)


def _fmt5(v: float) -> str:
    return "nan" if math.isnan(v) else f"{v:.5f}"


_output_option = click.option(
    "-o",
    "--output",
    default="-",
    show_default=True,
    help="Output file, - for stdout.",
)


@click.group()
def cli():
    """Sparse linked-network toolkit over Pajek files."""


@cli.command()
@click.argument("net", type=_in_path)
@_output_option
def norm1(net, output):
    """Row-normalize a one-mode network (each row sums to 1)."""
    result = normalize.normalize_citations(_read_net(net))
    _write_net(output, result)


@cli.command()
@click.argument("net", type=_in_path)
@_output_option
def norm2(net, output):
    """Row-normalize a two-mode network (each row sums to 1)."""
    loaded = _read_net(net)
    if loaded.is_one_mode:
        raise NotTwoMode("norm2 expects a two-mode network; use norm1")
    _write_net(output, normalize.normalize_rows(loaded))


@cli.command()
@click.argument("net", type=_in_path)
@_output_option
def norm2p(net, output):
    """Normalize each row of a binary two-mode network by (degree - 1)."""
    loaded = _read_net(net)
    if loaded.is_one_mode:
        raise NotTwoMode("norm2p expects a two-mode network")
    _write_net(output, normalize.normalize_newman(loaded))


@cli.command(name="multiply")
@click.argument("a", type=_in_path)
@click.argument("b", type=_in_path)
@click.option("--transpose-a", is_flag=True, help="Transpose the first factor.")
@click.option("--transpose-b", is_flag=True, help="Transpose the second factor.")
@click.option(
    "--guard",
    type=click.IntRange(min=1),
    default=None,
    help="Abort if the predicted number of elementary products exceeds N "
    "(default from LINKNET_GUARD or 10^8).",
)
@_output_option
def multiply_cmd(a, b, transpose_a, transpose_b, guard, output):
    """Multiply two compatible networks."""
    na, nb = _read_net(a), _read_net(b)
    if transpose_a:
        na = transpose(na)
    if transpose_b:
        nb = transpose(nb)
    g = ExplosionGuard(guard) if guard is not None else None
    _write_net(output, multiply(na, nb, g))


@cli.command(name="decompose")
@click.argument("a", type=_in_path)
@click.argument("b", type=_in_path)
@click.option(
    "--top",
    type=click.IntRange(min=1),
    default=10,
    show_default=True,
    help="Report the K terms with the largest total weight.",
)
@_output_option
def decompose_cmd(a, b, top, output):
    """Report the heaviest rank-1 terms of a product, one per mid node."""
    terms = list(decompose_terms(_read_net(a), _read_net(b)))
    terms.sort(key=lambda t: (-t.total_weight, t.pivot))
    rows = [("pivot", "total_weight", "row_links", "col_links")]
    rows.extend(
        (t.pivot_label, _fmt5(t.total_weight), len(t.row_profile), len(t.col_profile))
        for t in terms[:top]
    )
    _write(output, _tsv(rows))


@cli.command()
@click.argument("net", type=_in_path)
@click.option(
    "--side",
    type=click.Choice(["rows", "cols"]),
    default="cols",
    show_default=True,
    help="Which mode the projection links.",
)
@_output_option
def project(net, side, output):
    """One-mode projection of a two-mode network."""
    _write_net(output, derived.project(_read_net(net), side))


@cli.command()
@click.argument("wa", type=_in_path)
@click.option(
    "--variant",
    type=click.Choice(derived.COAUTHORSHIP_VARIANTS),
    required=True,
    help="first: raw counts; second: per-work credit rows; "
    "third: fractional, one unit per work; fourth: strict bonds, no loops.",
)
@_output_option
def coauth(wa, variant, output):
    """Coauthorship network of a works-by-authors network."""
    _write_net(output, derived.coauthorship(_read_net(wa), variant))


@cli.command()
@click.argument("wa", type=_in_path)
@_output_option
def selfsuff(wa, output):
    """Selfsufficiency and collaborativeness per author (TSV)."""
    s, k = derived.self_sufficiency(_read_net(wa))
    rows = [("node", "selfsufficiency", "collaborativeness")]
    rows.extend(
        (label, _fmt5(sv), _fmt5(kv))
        for (label, sv), (_, kv) in zip(s.items(), k.items())
    )
    _write(output, _tsv(rows))


@cli.command(name="link-through")
@click.argument("wa", type=_in_path)
@click.argument("s", type=_in_path)
@click.option(
    "--raw",
    is_flag=True,
    help="Skip row normalization of the two-mode network.",
)
@_output_option
def link_through(wa, s, raw, output):
    """Link column nodes of WA through a one-mode network S on its rows."""
    result = derived.link_through(_read_net(wa), _read_net(s), normalized=not raw)
    _write_net(output, result)


@cli.command()
@click.argument("ci", type=_in_path)
@_output_option
def bico(ci, output):
    """Coupling counts: shared references of work pairs (Ci * Ci^T)."""
    _write_net(output, cp.bi_coupling(_read_net(ci)))


@cli.command()
@click.argument("ci", type=_in_path)
@click.option(
    "--measure",
    type=click.Choice(list(_MEASURES)),
    required=True,
    help="a=average m=minimum M=maximum g=geometric h=harmonic j=jaccard.",
)
@click.option(
    "--dissim",
    type=click.Choice(list(_DISSIMS)),
    default=None,
    help="Convert similarities to dissimilarities: 1-s, inv (1/s-1), log (-ln s).",
)
@_output_option
def bicon(ci, measure, dissim, output):
    """Normalized coupling similarity of work pairs (binary citations)."""
    result = cp.bi_coupling_measure(_read_net(ci), _MEASURES[measure])
    comment = None
    if dissim is not None:
        result = cp.to_dissimilarity(result, _DISSIMS[dissim])
        comment = (
            f"dissimilarity {dissim} of coupling measure "
            f"{_MEASURES[measure].value}; zero weights mean identical "
            f"reference behavior, absent pairs share nothing"
        )
    _write_net(output, result, comment)


@cli.command()
@click.argument("ci", type=_in_path)
@click.option(
    "--normalized",
    is_flag=True,
    help="Citing works distribute one unit over their references first.",
)
@_output_option
def cocit(ci, normalized, output):
    """Co-citation counts: shared citers of work pairs (Ci^T * Ci)."""
    fn = cp.co_citation_normalized if normalized else cp.co_citation
    _write_net(output, fn(_read_net(ci)))


@cli.command()
@click.argument("net", type=_in_path)
@_output_option
def stats(net, output):
    """Size, total weight, density and degree summary of a network (TSV)."""
    loaded = _read_net(net)
    directed = loaded.as_directed()
    nr, nc = loaded.shape
    cells = nr * nc
    out_v = out_degrees(directed).values
    in_v = in_degrees(directed).values

    def deg_stats(name, v):
        if len(v) == 0:
            return [(f"{name}_min", 0), (f"{name}_mean", _fmt5(0.0)), (f"{name}_max", 0)]
        return [
            (f"{name}_min", int(v.min())),
            (f"{name}_mean", _fmt5(float(v.mean()))),
            (f"{name}_max", int(v.max())),
        ]

    rows = [
        ("metric", "value"),
        ("mode", "one-mode" if loaded.is_one_mode else "two-mode"),
        ("form", "arcs" if loaded.directed else "edges"),
        ("rows", nr),
        ("cols", nc),
        ("links", loaded.nnz),
        ("total_weight", _fmt5(loaded.total_weight())),
        ("density", _fmt5(directed.nnz / cells if cells else 0.0)),
    ]
    rows.extend(deg_stats("out_degree", out_v))
    rows.extend(deg_stats("in_degree", in_v))
    _write(output, _tsv(rows))


def main(argv=None) -> int:
    """Run the CLI, mapping failures to stable exit codes."""
    try:
        cli.main(args=argv, prog_name="linknet", standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.exceptions.Abort:
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except ExplosionAborted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except LinknetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
