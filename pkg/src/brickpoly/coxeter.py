"""Crystallographic Coxeter (Weyl) groups as exact integer matrix actions.

Conventions, fixed once and used everywhere:

- The simple root ``alpha_j`` written in fundamental-weight coordinates is the
  j-th column of the Cartan matrix A.
- A simple reflection acts on weight coordinates by ``v -> v - v_i * alpha_i``
  and on root coordinates by ``alpha_j -> alpha_j - A[i][j] * alpha_i``.
- A word ``(q_1, ..., q_m)`` evaluates to the group element
  ``s_{q_1} s_{q_2} ... s_{q_m}``; acting on a vector, the rightmost letter
  applies first, so matrices multiply left to right.

Generator indices are 1-based throughout, matching the usual ``s_1 .. s_n``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

IntMatrix = tuple[tuple[int, ...], ...]


def _identity_matrix(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _mat_vec(a: IntMatrix, v) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def _column(a: IntMatrix, j: int) -> tuple[int, ...]:
    return tuple(row[j] for row in a)


def standard_cartan(label: str) -> IntMatrix:
    """The Cartan matrix of a finite-type label like "A3", "B2", "G2"."""
    family, index = label[0].upper(), label[1:]
    if not index.isdigit():
        raise ValueError(f"cannot parse type label {label!r}")
    n = int(index)
    if n < 1:
        raise ValueError(f"rank must be positive in {label!r}")
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def join(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if family == "A":
        for i in range(n - 1):
            join(i, i + 1)
    elif family in ("B", "C"):
        if n < 2:
            raise ValueError(f"type {family} needs rank >= 2")
        for i in range(n - 2):
            join(i, i + 1)
        # B_n: alpha_n short, so A[n][n-1] = -2; C_n is the transpose.
        if family == "B":
            join(n - 2, n - 1, -1, -2)
        else:
            join(n - 2, n - 1, -2, -1)
    elif family == "D":
        if n < 3:
            raise ValueError("type D needs rank >= 3")
        for i in range(n - 2):
            join(i, i + 1)
        join(n - 3, n - 1)
    elif family == "E":
        if n not in (6, 7, 8):
            raise ValueError("type E needs rank 6, 7 or 8")
        # Bourbaki numbering: node 2 hangs off node 4 of the chain 1-3-4-5-...
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for i, j in zip(chain, chain[1:]):
            join(i - 1, j - 1)
        join(2 - 1, 4 - 1)
    elif family == "F":
        if n != 4:
            raise ValueError("type F needs rank 4")
        join(0, 1)
        join(1, 2, -1, -2)
        join(2, 3)
    elif family == "G":
        if n != 2:
            raise ValueError("type G needs rank 2")
        join(0, 1, -1, -3)
    else:
        raise ValueError(f"unknown type family {family!r}")
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class CoxeterDatum:
    """A crystallographic Coxeter group given by its Cartan matrix."""

    rank: int
    cartan: IntMatrix
    label: str = "custom"

    def __post_init__(self):
        a = self.cartan
        if self.rank < 1 or len(a) != self.rank:
            raise ValueError("cartan matrix size must equal the (positive) rank")
        for i, row in enumerate(a):
            if len(row) != self.rank:
                raise ValueError("cartan matrix must be square")
            for j, x in enumerate(row):
                if not isinstance(x, int):
                    raise ValueError("cartan entries must be integers")
                if i == j and x != 2:
                    raise ValueError("cartan diagonal must be 2")
                if i != j and x > 0:
                    raise ValueError("cartan off-diagonal entries must be <= 0")
                if i != j and (x == 0) != (a[j][i] == 0):
                    raise ValueError("cartan zero pattern must be symmetric")

    @classmethod
    def from_label(cls, label: str) -> "CoxeterDatum":
        cartan = standard_cartan(label)
        return cls(rank=len(cartan), cartan=cartan, label=label.upper())

    @classmethod
    def from_cartan(cls, rows) -> "CoxeterDatum":
        cartan = tuple(tuple(int(x) for x in row) for row in rows)
        return cls(rank=len(cartan), cartan=cartan, label="custom")

    @classmethod
    def parse(cls, text: str) -> "CoxeterDatum":
        """Parse a CLI literal: "A2", "B3", or "custom:[[2,-1],[-1,2]]"."""
        text = text.strip()
        if text.lower().startswith("custom:"):
            rows = json.loads(text[len("custom:"):])
            return cls.from_cartan(rows)
        return cls.from_label(text)

    def simple_root(self, i: int) -> tuple[int, ...]:
        """alpha_i in weight coordinates (i-th column of the Cartan matrix)."""
        self._check_index(i)
        return _column(self.cartan, i - 1)

    def _check_index(self, i: int):
        if not 1 <= i <= self.rank:
            raise ValueError(f"generator index {i} out of range 1..{self.rank}")

    @cached_property
    def identity(self) -> "GroupElement":
        m = _identity_matrix(self.rank)
        return GroupElement(self, m, m)

    @cached_property
    def generators(self) -> tuple["GroupElement", ...]:
        return tuple(simple_reflection(self, i) for i in range(1, self.rank + 1))

    def positive_roots(self, cap: int = 10000) -> tuple[tuple[int, ...], ...]:
        """All positive roots in root coordinates, by reflection closure.

        Raises if more than ``cap`` roots appear, which signals a
        non-finite-type Cartan matrix.
        """
        simples = [
            tuple(1 if j == i else 0 for j in range(self.rank))
            for i in range(self.rank)
        ]
        seen = set(simples)
        frontier = list(simples)
        while frontier:
            nxt = []
            for root in frontier:
                for s in self.generators:
                    image = _mat_vec(s.root_matrix, root)
                    if image not in seen and any(x > 0 for x in image):
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
            if len(seen) > cap:
                raise ValueError(
                    "positive-root closure exceeded cap; datum is not finite type"
                )
        return tuple(sorted(seen))

    @cached_property
    def type_a_levels(self) -> int | None:
        """If this datum is the standard A_{n-1} Cartan matrix, return n."""
        if self.cartan == standard_cartan(f"A{self.rank}"):
            return self.rank + 1
        return None


@dataclass(frozen=True)
class GroupElement:
    """A Weyl group element as its pair of integer matrix actions."""

    datum: CoxeterDatum = field(compare=False)
    root_matrix: IntMatrix
    weight_matrix: IntMatrix

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.datum.cartan != other.datum.cartan:
            raise ValueError("cannot multiply elements of different groups")
        return GroupElement(
            self.datum,
            _mat_mul(self.root_matrix, other.root_matrix),
            _mat_mul(self.weight_matrix, other.weight_matrix),
        )

    def is_identity(self) -> bool:
        return self.root_matrix == _identity_matrix(self.datum.rank)

    def apply_to_root_coords(self, v) -> tuple[int, ...]:
        return _mat_vec(self.root_matrix, v)

    def apply_to_weight_coords(self, v) -> tuple[int, ...]:
        return _mat_vec(self.weight_matrix, v)

    def right_descent(self, i: int) -> bool:
        """True iff l(w s_i) < l(w), i.e. w(alpha_i) is a negative root."""
        self.datum._check_index(i)
        col = _column(self.root_matrix, i - 1)
        lead = next(x for x in col if x != 0)
        return lead < 0

    def right_ascent(self, i: int) -> bool:
        return not self.right_descent(i)

    def times_generator(self, i: int) -> "GroupElement":
        return self * self.datum.generators[i - 1]

    @cached_property
    def length(self) -> int:
        """Coxeter length via right-descent peeling."""
        w = self
        steps = 0
        while not w.is_identity():
            i = next(i for i in range(1, self.datum.rank + 1) if w.right_descent(i))
            w = w.times_generator(i)
            steps += 1
        return steps

    @cached_property
    def inverse(self) -> "GroupElement":
        word = []
        w = self
        while not w.is_identity():
            i = next(i for i in range(1, self.datum.rank + 1) if w.right_descent(i))
            w = w.times_generator(i)
            word.append(i)
        # peeling gives w = s_{j_k} ... s_{j_1}, so the peel order itself
        # multiplies out to the inverse
        inv = self.datum.identity
        for i in word:
            inv = inv.times_generator(i)
        return inv

    def left_descent(self, i: int) -> bool:
        return self.inverse.right_descent(i)


@dataclass(frozen=True)
class Word:
    """An ordered sequence of generator indices for a fixed datum."""

    datum: CoxeterDatum = field(compare=False)
    letters: tuple[int, ...]

    def __post_init__(self):
        for i in self.letters:
            self.datum._check_index(i)

    @classmethod
    def parse(cls, datum: CoxeterDatum, text: str) -> "Word":
        """Parse whitespace-separated 1-based generator indices."""
        letters = tuple(int(tok) for tok in text.split())
        return cls(datum, letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "Word") -> "Word":
        if self.datum.cartan != other.datum.cartan:
            raise ValueError("cannot concatenate words over different groups")
        return Word(self.datum, self.letters + other.letters)

    def __str__(self) -> str:
        return " ".join(str(i) for i in self.letters)


def simple_reflection(datum: CoxeterDatum, i: int) -> GroupElement:
    """The generator s_i as a pair of matrices."""
    datum._check_index(i)
    n = datum.rank
    a = datum.cartan
    i0 = i - 1
    # weight action: v -> v - v_i * alpha_i with alpha_i the i-th Cartan column
    weight = tuple(
        tuple(
            (1 if r == c else 0) - (a[r][i0] if c == i0 else 0)
            for c in range(n)
        )
        for r in range(n)
    )
    # root action: alpha_j -> alpha_j - A[i][j] * alpha_i
    root = tuple(
        tuple(
            (1 if r == c else 0) - (a[i0][c] if r == i0 else 0)
            for c in range(n)
        )
        for r in range(n)
    )
    return GroupElement(datum, root, weight)


def evaluate(word: Word) -> GroupElement:
    """The product of all letters of the word; the empty word is the identity."""
    w = word.datum.identity
    for i in word.letters:
        w = w.times_generator(i)
    return w


def length(g: GroupElement) -> int:
    return g.length


def length_by_root_count(g: GroupElement) -> int:
    """Count positive roots mapped to negative roots (finite type only).

    Independent of the descent recursion in GroupElement.length; the two
    must agree.
    """
    count = 0
    for root in g.datum.positive_roots():
        image = g.apply_to_root_coords(root)
        lead = next(x for x in image if x != 0)
        if lead < 0:
            count += 1
    return count


def is_reduced(word: Word) -> bool:
    """True iff every letter of the word increases the running length."""
    w = word.datum.identity
    for i in word.letters:
        if w.right_descent(i):
            return False
        w = w.times_generator(i)
    return True


def demazure_product(word: Word) -> GroupElement:
    """Monotone product: append a letter only when it increases length."""
    w = word.datum.identity
    for i in word.letters:
        if w.right_ascent(i):
            w = w.times_generator(i)
    return w


def reduced_word(g: GroupElement) -> Word:
    """The lexicographically smallest reduced word for g (by generator index)."""
    letters = []
    v = g
    vinv = g.inverse
    while not v.is_identity():
        i = next(
            i for i in range(1, g.datum.rank + 1) if vinv.right_descent(i)
        )
        letters.append(i)
        v = g.datum.generators[i - 1] * v
        vinv = vinv.times_generator(i)
    return Word(g.datum, tuple(letters))


def bruhat_leq(u: GroupElement, v: GroupElement) -> bool:
    """Bruhat order via the standard descent recursion on v."""
    if u.datum.cartan != v.datum.cartan:
        raise ValueError("Bruhat comparison needs a common group")
    memo: dict[tuple, bool] = {}

    def go(u, v):
        if u.is_identity():
            return True
        if v.is_identity():
            return False
        key = (u.root_matrix, v.root_matrix)
        if key in memo:
            return memo[key]
        if u.length > v.length:
            result = False
        else:
            s = next(
                i for i in range(1, v.datum.rank + 1) if v.right_descent(i)
            )
            vs = v.times_generator(s)
            us = u.times_generator(s)
            if u.right_descent(s):
                result = go(us, vs)
            else:
                result = go(u, vs)
        memo[key] = result
        return result

    return go(u, v)


def longest_element(datum: CoxeterDatum) -> GroupElement:
    """The maximal-length element w_0 (finite type only)."""
    bound = len(datum.positive_roots())
    w = datum.identity
    for _ in range(bound):
        i = next(
            (i for i in range(1, datum.rank + 1) if w.right_ascent(i)), None
        )
        if i is None:
            return w
        w = w.times_generator(i)
    if all(w.right_descent(i) for i in range(1, datum.rank + 1)):
        return w
    raise ValueError("datum is not finite type")


def c_sorting_word(c: Word, w: GroupElement) -> Word:
    """Greedy leftmost reduced subword of c^infinity for w.

    ``c`` must use each generator exactly once (a Coxeter-element word).
    """
    datum = c.datum
    if sorted(c.letters) != list(range(1, datum.rank + 1)):
        raise ValueError("c must use each generator exactly once")
    if datum.cartan != w.datum.cartan:
        raise ValueError("word and element over different groups")
    letters = []
    # keep a letter s iff s is a left descent of the remaining element r;
    # track q = r^{-1}, whose right descents are r's left descents
    q = w.inverse
    while not q.is_identity():
        for s in c.letters:
            if q.is_identity():
                break
            if q.right_descent(s):
                letters.append(s)
                q = q.times_generator(s)
    return Word(datum, tuple(letters))
