"""Acceptance gate: seven end-to-end criteria, one pass/fail line each.

Every comparison is exact (integer or Fraction); the only tolerances are
wall-clock budgets, asserted per criterion.  Randomized suites use fixed
seeds so the run is reproducible.
"""

import random
import sys
import time

from brickpoly.bricks import (
    associahedron_word,
    brick_polytope,
    brick_vector,
    duality_check,
    is_root_independent,
    non_facet_membership_report,
    toric_classification,
)
from brickpoly.coxeter import (
    CoxeterDatum,
    Word,
    bruhat_leq,
    demazure_product,
    evaluate,
    longest_element,
    reduced_word,
)
from brickpoly.hull import edge_graph
from brickpoly.networks import arrangement_from_face, brick_count_vector
from brickpoly.subword import (
    facets,
    facets_exhaustive,
    reduced_euler_characteristic,
    richardson_seed,
    sphere_euler_characteristic,
)


def report(number, label, body, budget):
    start = time.monotonic()
    try:
        body()
    except BaseException:
        sys.stdout.write(f"\ncriterion {number} ({label}): FAIL\n")
        sys.stdout.flush()
        raise
    elapsed = time.monotonic() - start
    verdict = "PASS" if elapsed < budget else "FAIL (over time budget)"
    sys.stdout.write(
        f"\ncriterion {number} ({label}): {verdict} [{elapsed:.1f}s < {budget}s]\n"
    )
    sys.stdout.flush()
    assert elapsed < budget


# ----------------------------------------------------------- criterion 1


def test_criterion_1_pentagon_golden(capfd):
    def body():
        a2 = CoxeterDatum.from_label("A2")
        Q = Word(a2, (1, 2, 1, 2, 1))
        w = evaluate(Word(a2, (1, 2, 1)))
        complex_ = facets(Q, w)
        assert complex_.facet_positions == (
            (1, 2),
            (1, 5),
            (2, 3),
            (3, 4),
            (4, 5),
        )
        expected = {
            (1, 5): (2, 1, 4),
            (1, 2): (2, 3, 2),
            (2, 3): (1, 4, 2),
            (3, 4): (0, 4, 3),
            (4, 5): (0, 3, 4),
        }
        for F in complex_.facets:
            assert brick_vector(Q, F).ambient == expected[F.positions()]
        poly = brick_polytope(Q, w, complex_)
        assert len(poly.vertices) == 5 and poly.affine_dim == 2
        adj = edge_graph(poly)
        assert all(len(n) == 2 for n in adj.values())  # a single 5-cycle
        seen, at = {0}, 0
        for _ in range(4):
            at = next(v for v in adj[at] if v not in seen)
            seen.add(at)
        assert len(seen) == 5
        tr = toric_classification(Q, w)
        assert tr.root_independent and tr.is_toric and tr.fiber_dim == 2
        assert tr.element_length < tr.word_length <= tr.element_length + tr.rank

    with capfd.disabled():
        report(1, "pentagon golden data", body, budget=1.0)


# ----------------------------------------------------------- criterion 2


def test_criterion_2_brick_counting_oracle(capfd):
    def body():
        rng = random.Random(2)
        checked = 0
        for _ in range(200):
            n = rng.randint(2, 5)
            datum = CoxeterDatum.from_label(f"A{n - 1}")
            m = rng.randint(1, 12)
            Q = Word(datum, tuple(rng.randint(1, n - 1) for _ in range(m)))
            w = demazure_product(Q)
            for F in facets(Q, w).facets:
                arr = arrangement_from_face(Q, F)
                assert brick_count_vector(arr) == brick_vector(Q, F).ambient
                checked += 1
        assert checked > 200

    with capfd.disabled():
        report(2, "pseudoline brick counting = brick vector", body, budget=60.0)


# ----------------------------------------------------------- criterion 3

SUITE3_DATA = [
    CoxeterDatum.from_label(lab) for lab in ("A1", "A2", "A3", "B2", "B3", "G2")
]


def suite3_instances():
    rng = random.Random(3)
    out = []
    for _ in range(100):
        datum = rng.choice(SUITE3_DATA)
        m = rng.randint(1, 10)
        Q = Word(datum, tuple(rng.randint(1, datum.rank) for _ in range(m)))
        out.append((Q, demazure_product(Q)))
    return out


def test_criterion_3_sphericity_euler(capfd):
    def body():
        for Q, w in suite3_instances():
            complex_ = facets(Q, w)
            assert complex_.spherical
            assert reduced_euler_characteristic(
                complex_
            ) == sphere_euler_characteristic(Q, w)
            scan = sorted(tuple(sorted(f)) for f in facets_exhaustive(Q, w))
            assert list(complex_.facet_positions) == scan

    with capfd.disabled():
        report(3, "Euler characteristic and facet enumeration", body, budget=120.0)


# ----------------------------------------------------------- criterion 4


def test_criterion_4_duality(capfd):
    def body():
        applicable = 0
        for Q, w in suite3_instances():
            complex_ = facets(Q, w)
            if not complex_.facet_positions:
                continue
            if not is_root_independent(Q, w, complex_):
                continue
            rep = duality_check(Q, w)
            assert rep.applicable and rep.ok, (Q.letters, rep.to_json_dict())
            assert rep.facet_count == rep.vertex_count
            applicable += 1
        assert applicable > 10

    with capfd.disabled():
        report(4, "brick polytope / complex duality", body, budget=120.0)


# ----------------------------------------------------------- criterion 5


def random_bruhat_pair(datum, rng):
    m = rng.randint(0, 8)
    v_word = reduced_word(
        evaluate(Word(datum, tuple(rng.randint(1, datum.rank) for _ in range(m))))
    )
    # a subword of a reduced word always gives an element below v
    u_letters = tuple(q for q in v_word.letters if rng.random() < 0.6)
    return evaluate(Word(datum, u_letters)), evaluate(v_word)


def test_criterion_5_richardson_seed(capfd):
    def body():
        a3 = CoxeterDatum.from_label("A3")
        w0 = longest_element(a3)
        # the fixed example, with the words given literally
        R = Word(a3, (1, 2, 3, 1, 2))
        S = Word(a3, (3, 1, 2, 1))
        Q = R + S
        assert demazure_product(Q) == w0
        assert len(Q) - w0.length == 3
        # the seed builder reproduces it from (u, v)
        v = evaluate(R)
        u = w0 * evaluate(S).inverse
        seed = richardson_seed(u, v)
        assert seed.demazure_is_longest and seed.fiber_dim == 3
        assert evaluate(Word(a3, seed.v_word)) == v
        assert evaluate(Word(a3, seed.u_complement_word)) == evaluate(S)

        rng = random.Random(5)
        b2 = CoxeterDatum.from_label("B2")
        for _ in range(100):
            datum = rng.choice([a3, b2])
            u, v = random_bruhat_pair(datum, rng)
            assert bruhat_leq(u, v)
            seed = richardson_seed(u, v)
            w0 = longest_element(datum)
            assert seed.demazure_is_longest
            assert seed.fiber_dim == len(seed.Q) - w0.length

    with capfd.disabled():
        report(5, "Richardson word seeds", body, budget=60.0)


# ----------------------------------------------------------- criterion 6


def test_criterion_6_associahedra(capfd):
    def body():
        a2 = CoxeterDatum.from_label("A2")
        Q = associahedron_word(a2, Word(a2, (1, 2)))
        assert Q.letters == (1, 2, 1, 2, 1)
        poly = brick_polytope(Q, longest_element(a2))
        assert len(poly.vertices) == 5 and poly.affine_dim == 2

        a3 = CoxeterDatum.from_label("A3")
        Q3 = associahedron_word(a3, Word(a3, (1, 2, 3)))
        w0 = longest_element(a3)
        assert toric_classification(Q3, w0).is_toric
        complex_ = facets(Q3, w0)
        # the facet count is established by the exhaustive oracle itself
        scan = facets_exhaustive(Q3, w0)
        assert len(scan) == len(complex_.facet_positions)
        poly3 = brick_polytope(Q3, w0, complex_)
        assert poly3.affine_dim == 3
        assert len(poly3.vertices) == len(complex_.facet_positions)

    with capfd.disabled():
        report(6, "associahedron words and polytopes", body, budget=60.0)


# ----------------------------------------------------------- criterion 7


def test_criterion_7_non_facet_membership(capfd):
    def body():
        checked = 0
        for Q, w in suite3_instances():
            if not facets(Q, w).facet_positions:
                continue
            rep = non_facet_membership_report(Q, w)
            assert rep["ok"], (Q.letters, rep)
            checked += rep["checked"]
        assert checked > 0

    with capfd.disabled():
        report(7, "non-facet brick vectors stay in the hull", body, budget=120.0)
