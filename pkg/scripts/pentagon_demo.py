#!/usr/bin/env python3
"""Walk through the smallest interesting example end to end.

For A2 with Q = (s1, s2, s1, s2, s1) and w = s1 s2 s1, print the facets of
the subword complex, their brick vectors, the polytope, and the toric
report, then drop SVG drawings of each facet's pseudoline arrangement next
to this script (or into --outdir).
"""

import argparse
import pathlib

from brickpoly.bricks import brick_polytope, brick_vector, toric_classification
from brickpoly.coxeter import CoxeterDatum, Word, evaluate
from brickpoly.networks import arrangement_from_face, render
from brickpoly.subword import facets


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", type=pathlib.Path, default=None)
    args = parser.parse_args()
    outdir = args.outdir or pathlib.Path(__file__).parent / "out"

    a2 = CoxeterDatum.from_label("A2")
    Q = Word(a2, (1, 2, 1, 2, 1))
    w = evaluate(Word(a2, (1, 2, 1)))
    complex_ = facets(Q, w)
    print(f"Q = ({Q}),  w = 1 2 1")
    print(f"facets of the complex: {list(complex_.facet_positions)}")
    for F in complex_.facets:
        bv = brick_vector(Q, F)
        print(f"  J = {F.positions()}  B(J) = {bv.ambient}")
    poly = brick_polytope(Q, w, complex_)
    print(f"polytope: {len(poly.vertices)} vertices, dim {poly.affine_dim}")
    report = toric_classification(Q, w)
    print(f"toric: {report.is_toric}  (fiber dim {report.fiber_dim})")

    outdir.mkdir(parents=True, exist_ok=True)
    for F in complex_.facets:
        arr = arrangement_from_face(Q, F)
        name = "arr_" + "_".join(map(str, F.positions())) + ".svg"
        (outdir / name).write_text(render(arr, "svg"))
    print(f"wrote {len(complex_.facets)} SVG drawings to {outdir}/")


if __name__ == "__main__":
    main()
