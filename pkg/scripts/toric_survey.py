#!/usr/bin/env python3
"""Random survey: how often is a random word toric / root independent?

Draws random words Q over a few small groups, takes w = Dem(Q), and
tabulates root independence, the length window l(w) < |Q| <= l(w) + rank,
and the duality check on the root-independent instances.
"""

import argparse
import random
from collections import Counter

from brickpoly.bricks import duality_check, toric_classification
from brickpoly.coxeter import CoxeterDatum, Word, demazure_product
from brickpoly.subword import facets


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=200)
    parser.add_argument("--max-len", type=int, default=9)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--types", nargs="+", default=["A2", "A3", "B2", "B3"]
    )
    args = parser.parse_args()

    rng = random.Random(args.seed)
    data = [CoxeterDatum.from_label(lab) for lab in args.types]
    tally = Counter()
    for _ in range(args.count):
        datum = rng.choice(data)
        m = rng.randint(1, args.max_len)
        Q = Word(datum, tuple(rng.randint(1, datum.rank) for _ in range(m)))
        w = demazure_product(Q)
        if not facets(Q, w).facet_positions:
            tally["empty"] += 1
            continue
        report = toric_classification(Q, w)
        tally["root independent"] += report.root_independent
        tally["length window"] += report.length_condition
        tally["toric"] += report.is_toric
        if report.root_independent:
            tally["duality ok"] += duality_check(Q, w).ok
        tally["total"] += 1

    width = max(len(k) for k in tally)
    for key in ("total", "root independent", "length window", "toric", "duality ok", "empty"):
        print(f"{key:>{width}} : {tally[key]}")


if __name__ == "__main__":
    main()
