"""Exact rational convex hulls for small point sets in low dimension.

Brute force by design: facets are found by scanning affinely independent
subsets of the input for supporting hyperplanes.  Point counts here are at
most a few hundred and dimensions at most ~10, so this is plenty.
No floating point anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg

Point = tuple[Fraction, ...]


def as_point(coords) -> Point:
    return tuple(Fraction(x) for x in coords)


def _dedupe_sorted(points) -> list[Point]:
    return sorted(set(as_point(p) for p in points))


@dataclass(frozen=True)
class AffineHull:
    """Basepoint plus a rational basis of the direction space."""

    dimension: int
    basis: tuple[tuple[Fraction, ...], ...]
    basepoint: Point

    def project(self, point) -> tuple[Fraction, ...] | None:
        """Coordinates of the point over the basis, or None if outside."""
        p = as_point(point)
        diff = [a - b for a, b in zip(p, self.basepoint)]
        if self.dimension == 0:
            return () if all(x == 0 for x in diff) else None
        cols = list(zip(*self.basis))
        sol = linalg.solve(cols, diff)
        return tuple(sol) if sol is not None else None

    def contains(self, point) -> bool:
        return self.project(point) is not None


def affine_hull(points) -> AffineHull:
    """Exact affine hull of a nonempty point set."""
    pts = _dedupe_sorted(points)
    if not pts:
        raise ValueError("affine hull of an empty set")
    base = pts[0]
    directions = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    echelon, _ = linalg.row_echelon(directions) if directions else ([], [])
    basis = tuple(tuple(row) for row in echelon)
    return AffineHull(len(basis), basis, base)


@dataclass(frozen=True)
class Polytope:
    """V- and H-representation of a hull, canonically ordered.

    Inequalities are ambient: ``normal . x <= offset`` with primitive integer
    normals, valid on the affine hull.  ``incidence[f]`` lists the vertex
    indices tight on inequality f.
    """

    vertices: tuple[Point, ...]
    inequalities: tuple[tuple[tuple[int, ...], Fraction], ...]
    incidence: tuple[tuple[int, ...], ...]
    affine_dim: int
    ambient_dim: int
    hull: AffineHull = field(compare=False)
    # projected facet normals, used for rank computations in the edge graph
    projected: tuple[tuple[tuple[Fraction, ...], Fraction], ...] = field(
        compare=False, default=()
    )

    def contains(self, point) -> bool:
        """Exact membership: inside the affine hull and every inequality."""
        p = as_point(point)
        if self.hull.project(p) is None:
            return False
        for normal, offset in self.inequalities:
            if sum(n * x for n, x in zip(normal, p)) > offset:
                return False
        return True

    def to_json_dict(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "affine_dim": self.affine_dim,
            "vertices": [[str(x) for x in v] for v in self.vertices],
            "inequalities": [
                {"normal": list(n), "offset": str(c)}
                for n, c in self.inequalities
            ],
            "facet_vertices": [list(f) for f in self.incidence],
        }

    def to_off(self) -> str:
        """OFF-like text: exact rational vertices and facet incidence lists."""
        lines = ["ROFF", f"{len(self.vertices)} {len(self.incidence)}"]
        for v in self.vertices:
            lines.append(" ".join(str(x) for x in v))
        for f in self.incidence:
            lines.append(" ".join([str(len(f))] + [str(i) for i in f]))
        return "\n".join(lines) + "\n"


def _facets_projected(proj_points):
    """Supporting hyperplanes of a full-dimensional projected point set.

    Returns a dict mapping (primitive normal, offset) -> tight point indices,
    with the inequality oriented as normal . x <= offset.
    """
    d = len(proj_points[0])
    found: dict[tuple, set[int]] = {}
    for combo in itertools.combinations(range(len(proj_points)), d):
        rows = [
            [a - b for a, b in zip(proj_points[i], proj_points[combo[0]])]
            for i in combo[1:]
        ]
        if d > 1:
            null = linalg.nullspace(rows)
            if len(null) != 1:
                continue
            normal = null[0]
        else:
            normal = [Fraction(1)]
        offset = sum(n * x for n, x in zip(normal, proj_points[combo[0]]))
        side = 0
        supporting = True
        for p in proj_points:
            val = sum(n * x for n, x in zip(normal, p)) - offset
            if val == 0:
                continue
            s = 1 if val > 0 else -1
            if side == 0:
                side = s
            elif side != s:
                supporting = False
                break
        if not supporting or side == 0:
            continue
        if side > 0:
            normal = [-n for n in normal]
            offset = -offset
        scaled = linalg.primitive_integer(list(normal) + [offset])
        key = (scaled[:-1], Fraction(scaled[-1]))
        tight = {
            i
            for i, p in enumerate(proj_points)
            if sum(n * x for n, x in zip(normal, p)) == offset
        }
        found.setdefault(key, set()).update(tight)
    return found


def _lift_inequality(hull: AffineHull, normal, offset):
    """Re-express a projected inequality in ambient coordinates."""
    # find ambient m with m . basis_i = normal_i; then m.x <= m.p0 + offset
    rows = [list(b) for b in hull.basis]
    m = linalg.solve(rows, list(normal))
    ambient_offset = sum(a * b for a, b in zip(m, hull.basepoint)) + Fraction(offset)
    scaled = linalg.primitive_integer(list(m) + [ambient_offset])
    return scaled[:-1], Fraction(scaled[-1])


def convex_hull(points) -> Polytope:
    """Irredundant V- and H-representation of the hull of the points."""
    pts = _dedupe_sorted(points)
    if not pts:
        raise ValueError("convex hull of an empty set")
    ambient_dim = len(pts[0])
    hull = affine_hull(pts)
    d = hull.dimension
    if d == 0:
        return Polytope((pts[0],), (), (), 0, ambient_dim, hull)
    proj = [hull.project(p) for p in pts]
    facet_map = _facets_projected(proj)
    # vertices: points whose tight facet normals span the full dimension d
    tight_normals: list[list] = [[] for _ in pts]
    for (normal, _), tight in facet_map.items():
        for i in tight:
            tight_normals[i].append([Fraction(n) for n in normal])
    vertex_ids = [
        i for i in range(len(pts)) if linalg.rank(tight_normals[i]) == d
    ]
    vertices = tuple(pts[i] for i in vertex_ids)
    reindex = {old: new for new, old in enumerate(vertex_ids)}

    items = []
    for (normal, offset), tight in sorted(facet_map.items()):
        amb_normal, amb_offset = _lift_inequality(hull, normal, offset)
        inc = tuple(sorted(reindex[i] for i in tight if i in reindex))
        items.append(((amb_normal, amb_offset), inc, (normal, offset)))
    items.sort(key=lambda t: (t[0][0], t[0][1]))
    inequalities = tuple(it[0] for it in items)
    incidence = tuple(it[1] for it in items)
    projected = tuple(
        (tuple(Fraction(x) for x in it[2][0]), Fraction(it[2][1])) for it in items
    )
    return Polytope(
        vertices, inequalities, incidence, d, ambient_dim, hull, projected
    )


def edge_graph(p: Polytope) -> dict[int, set[int]]:
    """Adjacency on vertex indices: pairs sharing a 1-dimensional face."""
    nv = len(p.vertices)
    adj: dict[int, set[int]] = {i: set() for i in range(nv)}
    if p.affine_dim == 0:
        return adj
    if p.affine_dim == 1:
        if nv == 2:
            adj[0].add(1)
            adj[1].add(0)
        return adj
    tight_sets = [
        {f for f, inc in enumerate(p.incidence) if i in inc} for i in range(nv)
    ]
    for i, j in itertools.combinations(range(nv), 2):
        common = tight_sets[i] & tight_sets[j]
        normals = [list(p.projected[f][0]) for f in common]
        if linalg.rank(normals) != p.affine_dim - 1:
            continue
        # the face cut out by the common facets must contain only i and j
        others = [
            k for k in range(nv) if k not in (i, j) and common <= tight_sets[k]
        ]
        if not others:
            adj[i].add(j)
            adj[j].add(i)
    return adj
