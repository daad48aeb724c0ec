import random

import pytest

from brickpoly.coxeter import CoxeterDatum, Word


@pytest.fixture(scope="session")
def a2():
    return CoxeterDatum.from_label("A2")


@pytest.fixture(scope="session")
def a3():
    return CoxeterDatum.from_label("A3")


@pytest.fixture(scope="session")
def b2():
    return CoxeterDatum.from_label("B2")


def random_word(datum, max_len, rng):
    m = rng.randint(0, max_len)
    return Word(datum, tuple(rng.randint(1, datum.rank) for _ in range(m)))


def seeded(seed=0):
    return random.Random(seed)
