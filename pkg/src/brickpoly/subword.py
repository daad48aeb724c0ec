"""Subword complexes: facets, flips, root/weight functions, strata, seeds.

Positions in a word are 1-based everywhere in this module, matching the
serialized formats.  A face of the complex is stored as the positions whose
letters are *removed* from the complement (the subword J of dashes); a
stratum is stored as the positions that are *kept*.  The ``role`` flag on
``Subword`` keeps the two readings from being mixed up.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from .coxeter import CoxeterDatum, GroupElement, Word, demazure_product, reduced_word


@dataclass(frozen=True)
class Subword:
    """A position mask over a word."""

    word: Word = field(compare=False)
    selected: tuple[bool, ...]
    role: str = "face"  # "face": selected letters are dropped from the
    #                      complement; "kept": selected letters form the word

    def __post_init__(self):
        if len(self.selected) != len(self.word):
            raise ValueError("mask length must equal word length")
        if self.role not in ("face", "kept"):
            raise ValueError(f"unknown subword role {self.role!r}")

    @classmethod
    def from_positions(cls, word: Word, positions, role: str = "face") -> "Subword":
        mask = [False] * len(word)
        for p in positions:
            if not 1 <= p <= len(word):
                raise ValueError(f"position {p} out of range 1..{len(word)}")
            mask[p - 1] = True
        return cls(word, tuple(mask), role)

    def positions(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, sel in enumerate(self.selected) if sel)

    def complement(self) -> "Subword":
        return Subword(self.word, tuple(not s for s in self.selected), self.role)

    def __len__(self) -> int:
        return sum(self.selected)


def complement_product(Q: Word, J: Subword, k: int) -> GroupElement:
    """Product of the first k letters of Q\\J, selected letters acting as id."""
    if not 0 <= k <= len(Q):
        raise ValueError(f"k={k} out of range 0..{len(Q)}")
    w = Q.datum.identity
    for pos in range(k):
        if not J.selected[pos]:
            w = w.times_generator(Q.letters[pos])
    return w


def _complement_is_reduced_for(Q: Word, removed: frozenset[int], w: GroupElement) -> bool:
    """True iff the letters of Q outside ``removed`` form a reduced word for w."""
    p = Q.datum.identity
    for pos, letter in enumerate(Q.letters, start=1):
        if pos in removed:
            continue
        if p.right_descent(letter):
            return False
        p = p.times_generator(letter)
    return p == w


def greedy_facet(Q: Word, w: GroupElement) -> frozenset[int] | None:
    """Removed positions of the facet whose complement is the leftmost
    reduced subword of Q for w, or None when w is not reachable."""
    removed = set()
    # keep the letter at a position iff it is a left descent of the remaining
    # element r; track q = r^{-1}
    q = w.inverse
    for pos, letter in enumerate(Q.letters, start=1):
        if not q.is_identity() and q.right_descent(letter):
            q = q.times_generator(letter)
        else:
            removed.add(pos)
    if not q.is_identity():
        return None
    return frozenset(removed)


def facets_exhaustive(Q: Word, w: GroupElement) -> list[frozenset[int]]:
    """All facets by scanning every complement of the right cardinality.

    Test oracle and non-sphere fallback; exponential but fine at desk scale.
    """
    m = len(Q)
    drop = m - w.length
    if drop < 0:
        return []
    out = []
    for combo in itertools.combinations(range(1, m + 1), drop):
        removed = frozenset(combo)
        if _complement_is_reduced_for(Q, removed, w):
            out.append(removed)
    return out


def _flip_positions(
    Q: Word, w: GroupElement, facet: frozenset[int], i: int
) -> tuple[frozenset[int], int]:
    if i not in facet:
        raise ValueError(f"position {i} is not in the facet")
    core = facet - {i}
    for j in range(1, len(Q) + 1):
        if j == i or j in core:
            continue
        candidate = core | {j}
        if _complement_is_reduced_for(Q, candidate, w):
            return candidate, j
    raise ValueError(
        "no facet shares the codimension-1 face; Dem(Q) differs from w"
    )


@dataclass(frozen=True)
class SubwordComplex:
    """The complex Delta(Q, w) with its full facet list."""

    word: Word = field(compare=False)
    w: GroupElement = field(compare=False)
    facet_positions: tuple[tuple[int, ...], ...]
    spherical: bool

    @property
    def facets(self) -> tuple[Subword, ...]:
        return tuple(
            Subword.from_positions(self.word, f, role="face")
            for f in self.facet_positions
        )

    def flip(self, F: Subword, i: int) -> tuple[Subword, int]:
        """The unique adjacent facet across the codim-1 face dropping i."""
        new, j = _flip_positions(self.word, self.w, frozenset(F.positions()), i)
        return Subword.from_positions(self.word, new, role="face"), j

    def faces(self) -> set[frozenset[int]]:
        """Every face (subset of some facet), including the empty face."""
        out: set[frozenset[int]] = set()
        for f in self.facet_positions:
            fs = frozenset(f)
            for r in range(len(fs) + 1):
                for sub in itertools.combinations(sorted(fs), r):
                    out.add(frozenset(sub))
        return out

    def flip_graph(self) -> dict[tuple[int, ...], set[tuple[int, ...]]]:
        adj: dict[tuple[int, ...], set[tuple[int, ...]]] = {
            f: set() for f in self.facet_positions
        }
        for f in self.facet_positions:
            for i in f:
                new, _ = _flip_positions(self.word, self.w, frozenset(f), i)
                adj[f].add(tuple(sorted(new)))
        return adj

    def to_json_dict(self) -> dict:
        return {
            "Q": list(self.word.letters),
            "w": list(reduced_word(self.w).letters),
            "facets": [list(f) for f in self.facet_positions],
            "spherical": self.spherical,
        }


def is_sphere(Q: Word, w: GroupElement) -> bool:
    return demazure_product(Q) == w


def facets(Q: Word, w: GroupElement) -> SubwordComplex:
    """Enumerate Delta(Q, w).

    In the spherical case (Dem(Q) = w) facets are collected by flip-graph
    BFS from the greedy facet; otherwise the complex need not be flip
    connected and the exhaustive scan is used instead.
    """
    spherical = is_sphere(Q, w)
    if not spherical:
        found = facets_exhaustive(Q, w)
    else:
        seed = greedy_facet(Q, w)
        if seed is None:
            found = []
        else:
            seen = {seed}
            queue = deque([seed])
            while queue:
                f = queue.popleft()
                for i in f:
                    new, _ = _flip_positions(Q, w, f, i)
                    if new not in seen:
                        seen.add(new)
                        queue.append(new)
            found = list(seen)
    ordered = tuple(sorted(tuple(sorted(f)) for f in found))
    return SubwordComplex(Q, w, ordered, spherical)


def root_function(Q: Word, J: Subword, k: int) -> tuple[int, ...]:
    """r(J, k): the (k-1)-prefix of the complement applied to alpha_{q_k},
    in root coordinates."""
    if not 1 <= k <= len(Q):
        raise ValueError(f"position {k} out of range 1..{len(Q)}")
    prefix = complement_product(Q, J, k - 1)
    n = Q.datum.rank
    simple = tuple(1 if j == Q.letters[k - 1] - 1 else 0 for j in range(n))
    return prefix.apply_to_root_coords(simple)


def weight_function(Q: Word, J: Subword, k: int) -> tuple[int, ...]:
    """w(J, k): the (k-1)-prefix of the complement applied to omega_{q_k},
    in weight coordinates."""
    if not 1 <= k <= len(Q):
        raise ValueError(f"position {k} out of range 1..{len(Q)}")
    prefix = complement_product(Q, J, k - 1)
    n = Q.datum.rank
    omega = tuple(1 if j == Q.letters[k - 1] - 1 else 0 for j in range(n))
    return prefix.apply_to_weight_coords(omega)


def root_configuration(Q: Word, F: Subword) -> list[tuple[int, ...]]:
    """The multiset {r(F, i) : i selected in F} as a list."""
    return [root_function(Q, F, i) for i in F.positions()]


def reduced_euler_characteristic(complex_: SubwordComplex) -> int:
    """Sum of (-1)^(|F|-1) over all faces, the empty face included."""
    total = 0
    for face in complex_.faces():
        total += -1 if len(face) % 2 == 0 else 1
    return total


def sphere_euler_characteristic(Q: Word, w: GroupElement) -> int:
    """The reduced Euler characteristic a (|Q|-l(w)-1)-sphere would have."""
    return 1 if (len(Q) - w.length - 1) % 2 == 0 else -1


@dataclass(frozen=True)
class StrataPoset:
    """Kept-letter masks R of Q with Dem(R) = w, ordered by containment."""

    word: Word = field(compare=False)
    w: GroupElement = field(compare=False)
    nodes: tuple[tuple[int, ...], ...]

    def leq(self, r, s) -> bool:
        return frozenset(r) <= frozenset(s)

    def maximum(self) -> tuple[int, ...]:
        return tuple(range(1, len(self.word) + 1))

    def minimal_elements(self) -> tuple[tuple[int, ...], ...]:
        sets = [frozenset(n) for n in self.nodes]
        mins = [
            n
            for n, fs in zip(self.nodes, sets)
            if not any(other < fs for other in sets)
        ]
        return tuple(mins)

    def is_intersection_closed(self) -> bool:
        """Pairwise intersections that still have Dem = w must be nodes."""
        node_set = set(self.nodes)
        for r, s in itertools.combinations(self.nodes, 2):
            inter = tuple(sorted(frozenset(r) & frozenset(s)))
            kept = Word(
                self.word.datum,
                tuple(self.word.letters[p - 1] for p in inter),
            )
            if demazure_product(kept) == self.w and inter not in node_set:
                return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "Q": list(self.word.letters),
            "w": list(reduced_word(self.w).letters),
            "nodes": [list(n) for n in self.nodes],
        }


def strata_poset(Q: Word, w: GroupElement) -> StrataPoset:
    """All kept-position subsets R of Q with Dem(R) = w."""
    m = len(Q)
    nodes = []
    for bits in range(1 << m):
        kept = tuple(p for p in range(1, m + 1) if bits >> (p - 1) & 1)
        letters = tuple(Q.letters[p - 1] for p in kept)
        if demazure_product(Word(Q.datum, letters)) == w:
            nodes.append(kept)
    return StrataPoset(Q, w, tuple(sorted(nodes)))


@dataclass(frozen=True)
class RichardsonSeed:
    """The concatenated word Q = R + S seeding a Richardson resolution."""

    Q: Word = field(compare=False)
    v_word: tuple[int, ...]
    u_complement_word: tuple[int, ...]
    demazure_is_longest: bool
    fiber_dim: int

    def to_json_dict(self) -> dict:
        return {
            "Q": list(self.Q.letters),
            "R": list(self.v_word),
            "S": list(self.u_complement_word),
            "demazure_is_longest": self.demazure_is_longest,
            "fiber_dim": self.fiber_dim,
        }


def richardson_seed(u: GroupElement, v: GroupElement) -> RichardsonSeed:
    """Q = (reduced word for v) + (reduced word for u^{-1} w_0); needs u <= v."""
    from .coxeter import bruhat_leq, longest_element

    if u.datum.cartan != v.datum.cartan:
        raise ValueError("u and v must live in the same group")
    if not bruhat_leq(u, v):
        raise ValueError("u must be below v in Bruhat order")
    w0 = longest_element(u.datum)
    r = reduced_word(v)
    s = reduced_word(u.inverse * w0)
    q = r + s
    dem_ok = demazure_product(q) == w0
    return RichardsonSeed(q, r.letters, s.letters, dem_ok, len(q) - w0.length)
