#!/usr/bin/env python3
"""Benchmark sparse projection against intermediate-degree structure.

Builds synthetic works-by-authors networks of growing size with a fixed
mean work degree, times the author projection, and then demonstrates how
a single high-degree intermediate node blows the predicted cost past the
guard. Run with --help for knobs.
"""

import argparse
import random
import time

from linknet import (
    ExplosionAborted,
    ExplosionGuard,
    NodeSet,
    SparseNetwork,
    multiply,
    predicted_products,
    transpose,
)


def synthetic_wa(rng: random.Random, n_works: int, n_authors: int, degree: int):
    works = NodeSet("w", tuple(f"w{i}" for i in range(n_works)))
    authors = NodeSet("a", tuple(f"a{i}" for i in range(n_authors)))
    entries = [
        (w, rng.randrange(n_authors), 1.0)
        for w in range(n_works)
        for _ in range(degree)
    ]
    return SparseNetwork(works, authors, entries)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+",
                    default=[10_000, 30_000, 100_000],
                    help="numbers of works to benchmark")
    ap.add_argument("--degree", type=int, default=3,
                    help="authors per work")
    ap.add_argument("--author-ratio", type=float, default=2.0,
                    help="authors per work count")
    ap.add_argument("--hub-degree", type=int, default=10_000,
                    help="degree of the planted hub work in the guard demo")
    ap.add_argument("--guard", type=int, default=10_000_000,
                    help="guard threshold for the demo")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    rng = random.Random(args.seed)

    print(f"{'works':>9} {'authors':>9} {'links':>9} "
          f"{'predicted':>12} {'build s':>8} {'mult s':>8} {'out links':>10}")
    for n_works in args.sizes:
        n_authors = int(n_works * args.author_ratio)
        t0 = time.perf_counter()
        wa = synthetic_wa(rng, n_works, n_authors, args.degree)
        build = time.perf_counter() - t0
        wat = transpose(wa)
        predicted = predicted_products(wat, wa)
        t0 = time.perf_counter()
        co = multiply(wat, wa)
        mult = time.perf_counter() - t0
        print(f"{n_works:>9} {n_authors:>9} {wa.nnz:>9} "
              f"{predicted:>12} {build:>8.2f} {mult:>8.2f} {co.nnz:>10}")

    # the same network with one huge work: predicted cost jumps by hub^2
    n_works = args.sizes[-1]
    n_authors = int(n_works * args.author_ratio)
    wa = synthetic_wa(rng, n_works, n_authors, args.degree)
    hub = [(0, a, 1.0) for a in range(min(args.hub_degree, n_authors))]
    wa_hub = SparseNetwork(
        wa.rows, wa.cols, list(wa.entries()) + hub
    )
    predicted = predicted_products(transpose(wa_hub), wa_hub)
    print(f"\nplanted hub of degree {args.hub_degree}: "
          f"predicted cost {predicted}")
    t0 = time.perf_counter()
    try:
        multiply(transpose(wa_hub), wa_hub, ExplosionGuard(args.guard))
        print("guard did not trigger")
    except ExplosionAborted as exc:
        print(f"aborted in {time.perf_counter() - t0:.3f}s: {exc}")


if __name__ == "__main__":
    main()
