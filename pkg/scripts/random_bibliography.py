#!/usr/bin/env python3
"""Generate a random toy bibliography as Pajek files.

Writes WA.net (works x authors), WK.net (works x keywords) and Ci.net
(works x works citations, acyclic: works only cite older works) into the
output directory, ready for CLI pipelines like

    linknet norm2 WA.net | linknet multiply - WKn.net --transpose-a
"""

import argparse
import pathlib
import random

from linknet import NodeSet, SparseNetwork, save_network


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", type=pathlib.Path)
    ap.add_argument("--works", type=int, default=200)
    ap.add_argument("--authors", type=int, default=80)
    ap.add_argument("--keywords", type=int, default=40)
    ap.add_argument("--max-authors-per-work", type=int, default=5)
    ap.add_argument("--max-keywords-per-work", type=int, default=6)
    ap.add_argument("--max-references", type=int, default=8)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    args.outdir.mkdir(parents=True, exist_ok=True)

    works = NodeSet("works", tuple(f"w{i}" for i in range(1, args.works + 1)))
    authors = NodeSet("authors", tuple(f"a{i}" for i in range(1, args.authors + 1)))
    keywords = NodeSet("keywords", tuple(f"k{i}" for i in range(1, args.keywords + 1)))

    wa_entries = []
    for w in range(args.works):
        team = rng.sample(range(args.authors), rng.randint(1, args.max_authors_per_work))
        wa_entries.extend((w, a, 1.0) for a in team)

    wk_entries = []
    for w in range(args.works):
        tags = rng.sample(range(args.keywords), rng.randint(1, args.max_keywords_per_work))
        wk_entries.extend((w, k, 1.0) for k in tags)

    ci_entries = []
    for w in range(1, args.works):
        n_refs = rng.randint(0, min(args.max_references, w))
        refs = rng.sample(range(w), n_refs)
        ci_entries.extend((w, r, 1.0) for r in refs)

    save_network(args.outdir / "WA.net", SparseNetwork(works, authors, wa_entries))
    save_network(args.outdir / "WK.net", SparseNetwork(works, keywords, wk_entries))
    save_network(args.outdir / "Ci.net", SparseNetwork(works, works, ci_entries))
    print(f"wrote WA.net, WK.net, Ci.net to {args.outdir}")


if __name__ == "__main__":
    main()
