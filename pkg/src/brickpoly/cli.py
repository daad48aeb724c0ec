"""Command-line front end.

Exit codes: 0 success, 1 domain error (e.g. u not below v), 2 parse error.
All structured output is JSON on stdout with sorted keys, so identical
requests produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import bricks, networks, subword
from .coxeter import (
    CoxeterDatum,
    Word,
    demazure_product,
    evaluate,
    longest_element,
    reduced_word,
)


class ParseError(Exception):
    pass


def _emit(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _parse(fn, *args):
    try:
        return fn(*args)
    except (ValueError, KeyError, IndexError) as exc:
        raise ParseError(str(exc)) from exc


def _parse_inputs(args):
    datum = _parse(CoxeterDatum.parse, args.datum)
    word = _parse(Word.parse, datum, args.word) if hasattr(args, "word") else None
    return datum, word


def cmd_demazure(args) -> int:
    datum, word = _parse_inputs(args)
    dem = demazure_product(word)
    if args.format == "json":
        _emit({"Q": list(word.letters), "demazure": list(reduced_word(dem).letters)})
    else:
        print(str(reduced_word(dem)))
    return 0


def _target_element(datum, word, w_text):
    if w_text is None:
        return demazure_product(word)
    return evaluate(Word.parse(datum, w_text))


def cmd_complex(args) -> int:
    datum, word = _parse_inputs(args)
    w = _target_element(datum, word, args.w)
    complex_ = subword.facets(word, w)
    if args.oracle:
        scan = sorted(
            tuple(sorted(f)) for f in subword.facets_exhaustive(word, w)
        )
        if tuple(scan) != complex_.facet_positions:
            print("oracle mismatch: flip BFS vs exhaustive scan", file=sys.stderr)
            return 1
    _emit(complex_.to_json_dict())
    return 0


def cmd_brick_polytope(args) -> int:
    datum, word = _parse_inputs(args)
    w = _target_element(datum, word, args.w)
    complex_ = subword.facets(word, w)
    if not complex_.facet_positions:
        print("Delta(Q, w) has no facets", file=sys.stderr)
        return 1
    poly = bricks.brick_polytope(word, w, complex_)
    if args.format == "off":
        sys.stdout.write(poly.to_off())
        return 0
    vectors = [bricks.brick_vector(word, F) for F in complex_.facets]
    payload = poly.to_json_dict()
    payload["brick_vectors"] = [
        {
            "face": list(F.positions()),
            "weight": list(v.weight_coords),
            **({"ambient": list(v.ambient)} if v.ambient is not None else {}),
        }
        for F, v in zip(complex_.facets, vectors)
    ]
    if args.oracle:
        report = bricks.non_facet_membership_report(word, w)
        payload["non_facet_membership"] = report
        if not report["ok"]:
            _emit(payload)
            return 1
    _emit(payload)
    return 0


def cmd_check_toric(args) -> int:
    datum, word = _parse_inputs(args)
    w = _target_element(datum, word, args.w)
    _emit(bricks.toric_classification(word, w).to_json_dict())
    return 0


def cmd_duality(args) -> int:
    datum, word = _parse_inputs(args)
    w = _target_element(datum, word, args.w)
    report = bricks.duality_check(word, w)
    _emit(report.to_json_dict())
    return 0 if report.applicable else 1


def cmd_network(args) -> int:
    datum, word = _parse_inputs(args)
    n = datum.type_a_levels
    if n is None:
        print("networks need a type-A datum", file=sys.stderr)
        return 1
    net = networks.sorting_network(word, n)
    if args.face is not None:
        positions = _parse(lambda t: [int(x) for x in t.split()], args.face)
        J = _parse(subword.Subword.from_positions, word, positions)
        arr = networks.arrangement_from_face(word, J)
        if args.format in ("svg", "tikz"):
            sys.stdout.write(networks.render(arr, args.format))
        else:
            _emit(
                {
                    "Q": list(word.letters),
                    "face": positions,
                    "valid": arr.is_valid,
                    "brick_counts": list(networks.brick_count_vector(arr)),
                    "endpoint_permutation": list(arr.endpoint_permutation()),
                }
            )
        return 0
    if args.format in ("svg", "tikz"):
        sys.stdout.write(networks.render(net, args.format))
    else:
        _emit(
            {
                "Q": list(word.letters),
                "levels": n,
                "bricks": [
                    {"position": b.position, "level": b.level, "end": b.end}
                    for b in net.bricks
                ],
            }
        )
    return 0


def cmd_assoc(args) -> int:
    datum = _parse(CoxeterDatum.parse, args.datum)
    c = _parse(Word.parse, datum, args.c)
    try:
        Q = bricks.associahedron_word(datum, c)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    w0 = longest_element(datum)
    poly = bricks.brick_polytope(Q, w0)
    payload = {"Q": list(Q.letters), "polytope": poly.to_json_dict()}
    _emit(payload)
    return 0


def cmd_richardson(args) -> int:
    datum = _parse(CoxeterDatum.parse, args.datum)
    v = evaluate(_parse(Word.parse, datum, args.v))
    u = evaluate(_parse(Word.parse, datum, args.u))
    try:
        seed = subword.richardson_seed(u, v)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    _emit(seed.to_json_dict())
    return 0


def cmd_strata(args) -> int:
    datum, word = _parse_inputs(args)
    w = _target_element(datum, word, args.w)
    poset = subword.strata_poset(word, w)
    payload = poset.to_json_dict()
    payload["minimal"] = [list(n) for n in poset.minimal_elements()]
    if args.oracle and not poset.is_intersection_closed():
        print("strata poset is not intersection closed", file=sys.stderr)
        return 1
    _emit(payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subparser from clobbering a flag given before the
    # subcommand with its own default; fallbacks live in main()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["json", "off", "svg", "tikz", "text"],
        default=argparse.SUPPRESS,
        help="output format (not every command supports every format)",
    )
    common.add_argument(
        "--oracle",
        action="store_true",
        default=argparse.SUPPRESS,
        help="enable brute-force cross checks where available",
    )
    common.add_argument(
        "--seed",
        type=int,
        default=argparse.SUPPRESS,
        help="seed for randomized oracle runs",
    )
    parser = argparse.ArgumentParser(
        prog="brickpoly",
        description="Exact subword-complex and brick-polytope computations",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *specs):
        p = sub.add_parser(name, parents=[common])
        for names, kwargs in specs:
            p.add_argument(*names, **kwargs)
        p.set_defaults(func=func)
        return p

    datum_arg = (["datum"], {"help": 'group literal, e.g. A2 or custom:[[2,-1],[-1,2]]'})
    word_arg = (["word"], {"help": "word as space-separated generator indices"})
    w_opt = (["--w"], {"default": None, "help": "target element as a word (default Dem(Q))"})

    add("demazure", cmd_demazure, datum_arg, word_arg)
    add("complex", cmd_complex, datum_arg, word_arg, w_opt)
    add("brick-polytope", cmd_brick_polytope, datum_arg, word_arg, w_opt)
    add("check-toric", cmd_check_toric, datum_arg, word_arg, w_opt)
    add("duality", cmd_duality, datum_arg, word_arg, w_opt)
    add(
        "network",
        cmd_network,
        datum_arg,
        word_arg,
        (["--face"], {"default": None, "help": "contact positions, space separated"}),
    )
    add("assoc", cmd_assoc, datum_arg, (["c"], {"help": "Coxeter-element word"}))
    add(
        "richardson",
        cmd_richardson,
        datum_arg,
        (["v"], {"help": "word for v"}),
        (["u"], {"help": "word for u"}),
    )
    add("strata", cmd_strata, datum_arg, word_arg, w_opt)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.format = getattr(args, "format", "json")
    args.oracle = getattr(args, "oracle", False)
    args.seed = getattr(args, "seed", 0)
    random.seed(args.seed)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
