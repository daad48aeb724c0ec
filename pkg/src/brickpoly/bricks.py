"""Brick vectors, brick polytopes, root independence and toric reports."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .coxeter import (
    CoxeterDatum,
    GroupElement,
    Word,
    c_sorting_word,
    demazure_product,
    is_reduced,
    longest_element,
)
from .hull import Polytope, convex_hull, edge_graph
from .subword import (
    Subword,
    SubwordComplex,
    complement_product,
    facets,
    root_configuration,
    root_function,
)


def ambient_from_weight_coords(coords, total: int) -> tuple[int, ...]:
    """Type-A lift of a weight-coordinate vector to ambient R^n.

    ``omega_i`` lifts to i ones followed by zeros, so a combination
    ``sum c_i omega_i`` has ambient entries ``x_j = sum_{i>=j} c_i`` up to a
    multiple of (1,...,1).  ``total`` is the required coordinate sum, which
    pins that multiple; for a single w(J,k) it is q_k, for a brick vector
    it is the sum of the letter indices of Q.
    """
    n = len(coords) + 1
    tail = list(itertools.accumulate(reversed(coords)))
    x = list(reversed(tail)) + [0]
    shift, rem = divmod(total - sum(x), n)
    if rem:
        raise ValueError("weight vector is not an sl_n lift of the given total")
    return tuple(xi + shift for xi in x)


@dataclass(frozen=True)
class BrickVector:
    """Sum of weight-function values over all positions of the word."""

    face: Subword = field(compare=False)
    weight_coords: tuple[int, ...]
    ambient: tuple[int, ...] | None = None


def brick_summand(Q: Word, J: Subword, k: int) -> tuple[int, ...]:
    """The k-th term of the brick vector: the k-letter complement prefix
    applied to omega_{q_k}, in weight coordinates.

    This prefix includes position k itself (a selected letter there acts as
    the identity anyway).  With our left-to-right composition convention
    this is the reading that reproduces the moment-map images; it equals
    the characteristic vector of the pseudolines running below the k-th
    brick of the sorting network.
    """
    if not 1 <= k <= len(Q):
        raise ValueError(f"position {k} out of range 1..{len(Q)}")
    prefix = complement_product(Q, J, k)
    n = Q.datum.rank
    omega = tuple(1 if j == Q.letters[k - 1] - 1 else 0 for j in range(n))
    return prefix.apply_to_weight_coords(omega)


def brick_vector(Q: Word, J: Subword) -> BrickVector:
    coords = [0] * Q.datum.rank
    p = Q.datum.identity
    for k, q in enumerate(Q.letters, start=1):
        if not J.selected[k - 1]:
            p = p.times_generator(q)
        omega = tuple(1 if j == q - 1 else 0 for j in range(Q.datum.rank))
        for idx, x in enumerate(p.apply_to_weight_coords(omega)):
            coords[idx] += x
    ambient = None
    if Q.datum.type_a_levels is not None:
        ambient = ambient_from_weight_coords(coords, sum(Q.letters))
    return BrickVector(J, tuple(coords), ambient)


def brick_polytope(
    Q: Word, w: GroupElement, complex_: SubwordComplex | None = None
) -> Polytope:
    """Convex hull of the brick vectors of the facets of Delta(Q, w)."""
    if complex_ is None:
        complex_ = facets(Q, w)
    points = [brick_vector(Q, F).weight_coords for F in complex_.facets]
    if not points:
        raise ValueError("Delta(Q, w) has no facets; no polytope to build")
    return convex_hull(points)


def non_facet_faces_with_product(Q: Word, complex_: SubwordComplex):
    """Faces J of the complex, facets excluded, whose complement product is w."""
    facet_set = {frozenset(f) for f in complex_.facet_positions}
    for face in sorted(complex_.faces(), key=lambda f: (len(f), sorted(f))):
        if face in facet_set:
            continue
        J = Subword.from_positions(Q, face, role="face")
        if complement_product(Q, J, len(Q)) == complex_.w:
            yield J


def non_facet_membership_report(Q: Word, w: GroupElement) -> dict:
    """Check that every non-facet face with complement product w maps into
    the hull of the facet brick vectors."""
    complex_ = facets(Q, w)
    poly = brick_polytope(Q, w, complex_)
    checked = 0
    failures = []
    for J in non_facet_faces_with_product(Q, complex_):
        point = tuple(Fraction(x) for x in brick_vector(Q, J).weight_coords)
        checked += 1
        if not poly.contains(point):
            failures.append(list(J.positions()))
    return {"checked": checked, "failures": failures, "ok": not failures}


def is_root_independent(
    Q: Word, w: GroupElement, complex_: SubwordComplex | None = None
) -> bool:
    """Rank of the root configuration of the first facet equals its size."""
    if complex_ is None:
        complex_ = facets(Q, w)
    if not complex_.facet_positions:
        raise ValueError("Delta(Q, w) has no facets")
    first = complex_.facets[0]
    config = root_configuration(Q, first)
    return linalg.rank([list(r) for r in config]) == len(config)


@dataclass(frozen=True)
class ToricReport:
    root_independent: bool
    length_condition: bool
    is_toric: bool
    fiber_dim: int
    word_length: int
    element_length: int
    rank: int
    facet_root_ranks: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "root_independent": self.root_independent,
            "length_condition": self.length_condition,
            "is_toric": self.is_toric,
            "fiber_dim": self.fiber_dim,
            "word_length": self.word_length,
            "element_length": self.element_length,
            "rank": self.rank,
            "facet_root_ranks": list(self.facet_root_ranks),
        }


def toric_classification(Q: Word, w: GroupElement) -> ToricReport:
    """Toric iff root independent and l(w) < |Q| <= l(w) + rank."""
    complex_ = facets(Q, w)
    ranks = tuple(
        linalg.rank([list(r) for r in root_configuration(Q, F)])
        for F in complex_.facets
    )
    facet_size = len(Q) - w.length
    independent = bool(ranks) and ranks[0] == facet_size
    length_cond = w.length < len(Q) <= w.length + Q.datum.rank
    return ToricReport(
        root_independent=independent,
        length_condition=length_cond,
        is_toric=independent and length_cond,
        fiber_dim=len(Q) - w.length,
        word_length=len(Q),
        element_length=w.length,
        rank=Q.datum.rank,
        facet_root_ranks=ranks,
    )


@dataclass(frozen=True)
class DualityReport:
    applicable: bool
    facet_count: int
    vertex_count: int
    bijective: bool
    graphs_match: bool
    edge_directions_match: bool
    mismatches: tuple = ()

    @property
    def ok(self) -> bool:
        return (
            self.applicable
            and self.bijective
            and self.graphs_match
            and self.edge_directions_match
        )

    def to_json_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "facet_count": self.facet_count,
            "vertex_count": self.vertex_count,
            "bijective": self.bijective,
            "graphs_match": self.graphs_match,
            "edge_directions_match": self.edge_directions_match,
            "mismatches": [list(m) for m in self.mismatches],
            "ok": self.ok,
        }


def duality_check(Q: Word, w: GroupElement) -> DualityReport:
    """Verify the facet/vertex bijection and flip/edge graph isomorphism.

    Only applicable for root-independent Q; otherwise the report says so and
    carries the raw counts.
    """
    complex_ = facets(Q, w)
    poly = brick_polytope(Q, w, complex_)
    facet_count = len(complex_.facet_positions)
    vertex_count = len(poly.vertices)
    if not is_root_independent(Q, w, complex_):
        return DualityReport(False, facet_count, vertex_count, False, False, False)

    vec_by_facet = {
        f: tuple(Fraction(x) for x in brick_vector(Q, F).weight_coords)
        for f, F in zip(complex_.facet_positions, complex_.facets)
    }
    vertex_index = {v: i for i, v in enumerate(poly.vertices)}
    bijective = (
        len(set(vec_by_facet.values())) == facet_count
        and facet_count == vertex_count
        and all(v in vertex_index for v in vec_by_facet.values())
    )
    mismatches = []
    graphs_match = bijective
    directions_match = bijective
    if bijective:
        poly_adj = edge_graph(poly)
        cartan = Q.datum.cartan
        for f, F in zip(complex_.facet_positions, complex_.facets):
            i_vertex = vertex_index[vec_by_facet[f]]
            neighbors = set()
            for i in f:
                new, _ = complex_.flip(F, i)
                g = tuple(sorted(new.positions()))
                neighbors.add(vertex_index[vec_by_facet[g]])
                # the edge direction must be parallel to the flipped root,
                # re-expressed in weight coordinates via the Cartan matrix
                root = root_function(Q, F, i)
                root_in_weights = [
                    sum(cartan[r][c] * root[c] for c in range(len(root)))
                    for r in range(len(root))
                ]
                diff = [
                    a - b
                    for a, b in zip(vec_by_facet[f], vec_by_facet[g])
                ]
                if not linalg.parallel(diff, root_in_weights):
                    directions_match = False
                    mismatches.append((f, i, "direction"))
            if neighbors != poly_adj[i_vertex]:
                graphs_match = False
                mismatches.append((f, "adjacency"))
    return DualityReport(
        True,
        facet_count,
        vertex_count,
        bijective,
        graphs_match,
        directions_match,
        tuple(mismatches),
    )


def associahedron_word(datum: CoxeterDatum, c: Word) -> Word:
    """Q = c + (c-sorting word of w_0); toric by construction, and asserted."""
    if sorted(c.letters) != list(range(1, datum.rank + 1)):
        raise ValueError("c must use each generator exactly once")
    if not is_reduced(c):
        raise ValueError("c must be reduced")
    w0 = longest_element(datum)
    Q = c + c_sorting_word(c, w0)
    report = toric_classification(Q, w0)
    if not report.is_toric:
        raise AssertionError("associahedron word failed the toric check")
    return Q
