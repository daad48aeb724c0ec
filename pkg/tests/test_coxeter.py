"""Group-level tests: matrix actions against independent permutation models."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brickpoly.coxeter import (
    CoxeterDatum,
    Word,
    bruhat_leq,
    c_sorting_word,
    demazure_product,
    evaluate,
    is_reduced,
    length_by_root_count,
    longest_element,
    reduced_word,
    simple_reflection,
    standard_cartan,
)

# ---------------------------------------------------------------- fixed data


def test_standard_cartans_pinned():
    assert standard_cartan("A2") == ((2, -1), (-1, 2))
    assert standard_cartan("B2") == ((2, -1), (-2, 2))
    assert standard_cartan("C2") == ((2, -2), (-1, 2))
    assert standard_cartan("G2") == ((2, -1), (-3, 2))
    assert standard_cartan("A3") == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))
    # F4: the double bond sits between nodes 2 and 3
    f4 = standard_cartan("F4")
    assert f4[1][2] == -1 and f4[2][1] == -2


def test_parse_custom_literal():
    d = CoxeterDatum.parse("custom:[[2,-1],[-1,2]]")
    assert d.cartan == standard_cartan("A2")
    assert d.label == "custom"
    assert CoxeterDatum.parse("b3").cartan == standard_cartan("B3")


@pytest.mark.parametrize(
    "rows",
    [
        [[2, 1], [-1, 2]],  # positive off-diagonal
        [[2, -1], [0, 2]],  # asymmetric zero pattern
        [[1, -1], [-1, 2]],  # bad diagonal
        [[2, -1]],  # not square
    ],
)
def test_bad_cartan_rejected(rows):
    with pytest.raises(ValueError):
        CoxeterDatum.from_cartan(rows)


def test_generators_are_involutions(a3, b2):
    for datum in (a3, b2):
        for i in range(1, datum.rank + 1):
            s = simple_reflection(datum, i)
            assert (s * s).is_identity()
            assert s.length == 1


def test_braid_relation_a2(a2):
    s1, s2 = a2.generators
    assert s1 * s2 * s1 == s2 * s1 * s2


def test_positive_root_counts():
    for label, count in [("A3", 6), ("B2", 4), ("B3", 9), ("G2", 6), ("D4", 12)]:
        assert len(CoxeterDatum.from_label(label).positive_roots()) == count


def test_infinite_type_rejected():
    affine = CoxeterDatum.from_cartan([[2, -2], [-2, 2]])
    with pytest.raises(ValueError):
        affine.positive_roots(cap=50)
    with pytest.raises(ValueError):
        longest_element(affine)


# ------------------------------------------------- the symmetric-group model
#
# Independent oracle: realize A_{n-1} words as permutations by folding
# adjacent swaps left to right.  Length must equal the inversion number and
# Bruhat order must match the sorted-prefix dominance criterion.


def perm_of_word(letters, n):
    perm = list(range(1, n + 1))
    for q in letters:
        perm[q - 1], perm[q] = perm[q], perm[q - 1]
    return tuple(perm)


def inversions(perm):
    return sum(
        1
        for i, j in itertools.combinations(range(len(perm)), 2)
        if perm[i] > perm[j]
    )


def dominance_leq(u, v):
    n = len(u)
    for i in range(1, n):
        for a, b in zip(sorted(u[:i]), sorted(v[:i])):
            if a > b:
                return False
    return True


def all_elements(datum):
    """BFS over right multiplication; returns {root_matrix: element}."""
    seen = {datum.identity.root_matrix: datum.identity}
    frontier = [datum.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for i in range(1, datum.rank + 1):
                h = g.times_generator(i)
                if h.root_matrix not in seen:
                    seen[h.root_matrix] = h
                    nxt.append(h)
        frontier = nxt
    return list(seen.values())


def test_s4_exhaustive(a3):
    elements = all_elements(a3)
    assert len(elements) == 24
    perms = {}
    for g in elements:
        word = reduced_word(g)
        perm = perm_of_word(word.letters, 4)
        assert g.length == inversions(perm)
        assert g.length == len(word)
        assert evaluate(word) == g
        perms[g.root_matrix] = perm
    assert len(set(perms.values())) == 24
    for u, v in itertools.product(elements, repeat=2):
        expected = dominance_leq(perms[u.root_matrix], perms[v.root_matrix])
        assert bruhat_leq(u, v) is expected


def enumerate_reduced_words(g):
    if g.is_identity():
        yield ()
        return
    for i in range(1, g.datum.rank + 1):
        if g.right_descent(i):
            for rest in enumerate_reduced_words(g.times_generator(i)):
                yield rest + (i,)


def test_reduced_word_is_lex_smallest(a3):
    for g in all_elements(a3):
        words = sorted(enumerate_reduced_words(g))
        assert reduced_word(g).letters == words[0]


# --------------------------------------------------------------- properties

DATA = [CoxeterDatum.from_label(lab) for lab in ("A1", "A3", "B2", "B3", "G2")]


@st.composite
def word_in_some_group(draw, max_len=10):
    datum = draw(st.sampled_from(DATA))
    letters = draw(
        st.lists(st.integers(1, datum.rank), max_size=max_len).map(tuple)
    )
    return Word(datum, letters)


@given(word_in_some_group())
@settings(max_examples=150, deadline=None)
def test_matrix_pair_consistency(word):
    # A . R = W . A ties the two actions together letter by letter
    g = evaluate(word)
    a = g.datum.cartan
    n = g.datum.rank
    left = [
        [sum(a[i][k] * g.root_matrix[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    right = [
        [sum(g.weight_matrix[i][k] * a[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    assert left == right


@given(word_in_some_group())
@settings(max_examples=150, deadline=None)
def test_length_agrees_with_root_count(word):
    g = evaluate(word)
    assert g.length == length_by_root_count(g)
    assert (g.length - len(word)) % 2 == 0
    assert g.inverse.length == g.length
    assert (g * g.inverse).is_identity()


@given(word_in_some_group())
@settings(max_examples=150, deadline=None)
def test_is_reduced_matches_length(word):
    assert is_reduced(word) == (evaluate(word).length == len(word))
    rw = reduced_word(evaluate(word))
    assert is_reduced(rw)
    assert evaluate(rw) == evaluate(word)


@given(word_in_some_group(), word_in_some_group())
@settings(max_examples=150, deadline=None)
def test_demazure_properties(w1, w2):
    d1 = demazure_product(w1)
    assert bruhat_leq(evaluate(w1), d1)
    assert d1.length <= len(w1)
    # replacing a prefix by a reduced word for its Demazure product is neutral
    if w1.datum.cartan == w2.datum.cartan:
        q = Word(w1.datum, w1.letters + w2.letters)
        squashed = reduced_word(d1) + w2
        assert demazure_product(q) == demazure_product(squashed)


def test_demazure_pinned(a2):
    assert demazure_product(Word(a2, (1, 2, 1, 2, 1))) == evaluate(
        Word(a2, (1, 2, 1))
    )
    assert demazure_product(Word(a2, (1, 1, 1))) == a2.generators[0]
    assert demazure_product(Word(a2, ())).is_identity()


def test_longest_element_lengths():
    for label, l0 in [("A2", 3), ("A3", 6), ("B2", 4), ("B3", 9), ("G2", 6)]:
        datum = CoxeterDatum.from_label(label)
        w0 = longest_element(datum)
        assert w0.length == l0
        assert all(w0.right_descent(i) for i in range(1, datum.rank + 1))
        assert (w0 * w0).is_identity()


def test_c_sorting_words(a2, a3):
    w0 = longest_element(a2)
    assert c_sorting_word(Word(a2, (1, 2)), w0).letters == (1, 2, 1)
    assert c_sorting_word(Word(a2, (2, 1)), w0).letters == (2, 1, 2)
    w0 = longest_element(a3)
    sort = c_sorting_word(Word(a3, (1, 2, 3)), w0)
    assert sort.letters == (1, 2, 3, 1, 2, 1)
    assert is_reduced(sort) and evaluate(sort) == w0
    with pytest.raises(ValueError):
        c_sorting_word(Word(a3, (1, 2)), w0)


@given(word_in_some_group(max_len=8), st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_c_sorting_is_reduced_word_for_target(word, rng):
    datum = word.datum
    c_letters = list(range(1, datum.rank + 1))
    rng.shuffle(c_letters)
    c = Word(datum, tuple(c_letters))
    g = evaluate(word)
    sort = c_sorting_word(c, g)
    assert is_reduced(sort)
    assert evaluate(sort) == g
