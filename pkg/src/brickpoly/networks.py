"""Type-A sorting networks and pseudoline arrangements.

This is the independent combinatorial oracle for brick vectors: the i-th
coordinate of a brick vector equals the number of bricks lying above the
i-th pseudoline of the arrangement whose contacts are the selected
positions of the face.

Levels are numbered 1 (bottom) to n (top); the commutator at position k
joins levels q_k and q_k + 1.  Pseudoline i is the one starting at level i
on the left.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import Word
from .subword import Subword


@dataclass(frozen=True)
class Brick:
    """The region bounded on the left by one commutator.

    ``end`` is the position of the next commutator on the same level pair,
    or None when the region is unbounded to the right (it still counts as a
    brick: only left-boundedness is required).
    """

    position: int
    level: int
    end: int | None


@dataclass(frozen=True)
class SortingNetwork:
    levels: int
    word: Word = field(compare=False)
    bricks: tuple[Brick, ...]

    @property
    def commutators(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (k, q) for k, q in enumerate(self.word.letters, start=1)
        )


def sorting_network(Q: Word, n: int) -> SortingNetwork:
    """The network of a type-A_{n-1} word on n levels."""
    for q in Q.letters:
        if not 1 <= q <= n - 1:
            raise ValueError(f"letter {q} out of range for {n} levels")
    bricks = []
    for k, q in enumerate(Q.letters, start=1):
        end = next(
            (
                j
                for j, r in enumerate(Q.letters[k:], start=k + 1)
                if r == q
            ),
            None,
        )
        bricks.append(Brick(k, q, end))
    return SortingNetwork(n, Q, tuple(bricks))


@dataclass(frozen=True)
class PseudolineArrangement:
    network: SortingNetwork
    contacts: Subword = field(compare=False)
    # trajectories[i][k] = level of pseudoline i+1 after the first k commutators
    trajectories: tuple[tuple[int, ...], ...]
    crossing_counts: tuple[tuple[tuple[int, int], int], ...]

    @property
    def is_valid(self) -> bool:
        """No pair of pseudolines crosses more than once."""
        return all(c <= 1 for _, c in self.crossing_counts)

    def endpoint_permutation(self) -> tuple[int, ...]:
        """entry i-1 = start level of the pseudoline ending at level i."""
        n = self.network.levels
        final = {traj[-1]: line for line, traj in enumerate(self.trajectories, 1)}
        return tuple(final[level] for level in range(1, n + 1))


def arrangement_from_face(Q: Word, J: Subword) -> PseudolineArrangement:
    """Route pseudolines with contacts at the selected positions of J."""
    network = sorting_network(Q, _levels(Q))
    n = network.levels
    occupant = list(range(n + 1))  # occupant[level] = line currently there
    trajectories = [[i] for i in range(1, n + 1)]
    crossings: dict[tuple[int, int], int] = {}
    for k, q in enumerate(Q.letters, start=1):
        if not J.selected[k - 1]:  # a crossing: the two lines swap levels
            a, b = occupant[q], occupant[q + 1]
            occupant[q], occupant[q + 1] = b, a
            pair = (min(a, b), max(a, b))
            crossings[pair] = crossings.get(pair, 0) + 1
        for line in range(1, n + 1):
            level = next(l for l in range(1, n + 1) if occupant[l] == line)
            trajectories[line - 1].append(level)
    return PseudolineArrangement(
        network,
        J,
        tuple(tuple(t) for t in trajectories),
        tuple(sorted(crossings.items())),
    )


def _levels(Q: Word) -> int:
    n = Q.datum.type_a_levels
    if n is None:
        raise ValueError("sorting networks need a type-A datum")
    return n


def lines_below_brick(arr: PseudolineArrangement, k: int) -> frozenset[int]:
    """The pseudolines running strictly below the brick at position k."""
    q = arr.network.word.letters[k - 1]
    return frozenset(
        line
        for line, traj in enumerate(arr.trajectories, 1)
        if traj[k] <= q
    )


def brick_count_vector(arr: PseudolineArrangement) -> tuple[int, ...]:
    """For each pseudoline, the number of bricks lying above it."""
    n = arr.network.levels
    counts = [0] * n
    for brick in arr.network.bricks:
        for line in lines_below_brick(arr, brick.position):
            counts[line - 1] += 1
    return tuple(counts)


def type_a_permutation(g) -> tuple[int, ...]:
    """The permutation realizing a type-A group element on 1..n.

    Entry i-1 is g(i), with generators acting as adjacent transpositions and
    words composing left to right like the matrix actions.
    """
    from .coxeter import reduced_word

    n = g.datum.type_a_levels
    if n is None:
        raise ValueError("permutation realization needs a type-A datum")
    perm = list(range(1, n + 1))
    # folding swaps left to right matches s_{q_1} o s_{q_2} o ... as functions
    for q in reduced_word(g).letters:
        perm[q - 1], perm[q] = perm[q], perm[q - 1]
    return tuple(perm)


def _svg_path(points, color, dashed=False, width=3):
    d = " ".join(
        f"{'M' if i == 0 else 'L'} {x} {y}" for i, (x, y) in enumerate(points)
    )
    dash = ' stroke-dasharray="4 3"' if dashed else ""
    return (
        f'<path d="{d}" fill="none" stroke="{color}" '
        f'stroke-width="{width}"{dash}/>'
    )


_PALETTE = ("#00aaaa", "#cc00cc", "#00aa00", "#cc6600", "#0044cc", "#aa0000")


def render(obj, fmt: str) -> str:
    """Deterministic SVG or TikZ drawing of a network or arrangement."""
    if fmt not in ("svg", "tikz"):
        raise ValueError(f"unknown render format {fmt!r}")
    if isinstance(obj, PseudolineArrangement):
        network, arr = obj.network, obj
    elif isinstance(obj, SortingNetwork):
        network, arr = obj, None
    else:
        raise ValueError("can only render networks or arrangements")
    n = network.levels
    m = len(network.word)
    scale = 40

    def xy(x, level):
        # flip vertically for SVG so level 1 is at the bottom
        return (scale * (x + 1), scale * (n - level + 1))

    if fmt == "svg":
        width, height = scale * (m + 2), scale * (n + 1)
        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
            f'height="{height}" viewBox="0 0 {width} {height}">'
        ]
        for level in range(1, n + 1):
            parts.append(
                _svg_path([xy(0, level), xy(m + 0.5, level)], "#000000", width=1)
            )
        for k, q in network.commutators:
            dashed = arr is not None and arr.contacts.selected[k - 1]
            parts.append(
                _svg_path([xy(k, q), xy(k, q + 1)], "#000000", dashed=dashed, width=1)
            )
        if arr is not None:
            for line, traj in enumerate(arr.trajectories, 1):
                pts = [xy(0, traj[0])]
                for k in range(1, m + 1):
                    pts.append(xy(k, traj[k - 1]))
                    pts.append(xy(k, traj[k]))
                pts.append(xy(m + 0.5, traj[m]))
                color = _PALETTE[(line - 1) % len(_PALETTE)]
                parts.append(_svg_path(pts, color))
        parts.append("</svg>")
        return "\n".join(parts) + "\n"

    lines = ["\\begin{tikzpicture}"]
    for level in range(1, n + 1):
        lines.append(f"  \\draw (0,{level}) -- ({m + 1},{level});")
    for k, q in network.commutators:
        style = (
            "[dashed]" if arr is not None and arr.contacts.selected[k - 1] else ""
        )
        lines.append(f"  \\draw{style} ({k},{q}) -- ({k},{q + 1});")
    if arr is not None:
        for line, traj in enumerate(arr.trajectories, 1):
            coords = [f"(0,{traj[0]})"]
            for k in range(1, m + 1):
                coords.append(f"({k},{traj[k - 1]})")
                coords.append(f"({k},{traj[k]})")
            coords.append(f"({m + 1},{traj[m]})")
            color = ("cyan", "magenta", "green", "orange", "blue", "red")[
                (line - 1) % 6
            ]
            lines.append(
                f"  \\draw[very thick,{color}] " + " -- ".join(coords) + ";"
            )
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"
