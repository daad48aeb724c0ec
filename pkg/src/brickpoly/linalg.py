"""Small exact linear algebra helpers over the rationals.

Everything here works on lists/tuples of ``Fraction`` (or int, which
``Fraction`` arithmetic absorbs).  Sizes are tiny (rank <= 10, a few dozen
rows), so plain Gaussian elimination is enough.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def row_echelon(rows):
    """Return (echelon_rows, pivot_columns) for the given row list.

    The input is not modified.  Echelon rows are fully reduced (RREF) with
    leading entry 1, zero rows dropped.
    """
    work = [[Fraction(x) for x in row] for row in rows]
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        lead = work[r][c]
        work[r] = [x / lead for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def rank(rows) -> int:
    if not rows:
        return 0
    echelon, _ = row_echelon(rows)
    return len(echelon)


def solve(a_rows, b):
    """Solve A x = b exactly; return one solution (free variables 0) or None.

    ``a_rows`` is a list of rows of A; the system may be under- or
    over-determined.
    """
    if not a_rows:
        return [] if all(Fraction(x) == 0 for x in b) else None
    ncols = len(a_rows[0])
    augmented = [list(row) + [bi] for row, bi in zip(a_rows, b)]
    echelon, pivots = row_echelon(augmented)
    for row in echelon:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for row, c in zip(echelon, pivots):
        if c == ncols:  # pivot in the augmented column: inconsistent
            return None
        x[c] = row[-1]
    # pivots beyond ncols handled above; re-check consistency of free-var choice
    for row, bi in zip(a_rows, b):
        if sum(Fraction(a) * xi for a, xi in zip(row, x)) != Fraction(bi):
            return None
    return x


def in_span(rows, vec) -> bool:
    """True if vec is a rational linear combination of the given rows."""
    if all(Fraction(x) == 0 for x in vec):
        return True
    if not rows:
        return False
    cols = list(zip(*rows))
    return solve(cols, vec) is not None


def nullspace(rows):
    """Basis (list of Fraction vectors) of the right nullspace of the rows."""
    if not rows:
        return []
    ncols = len(rows[0])
    echelon, pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(echelon, pivots):
            v[c] = -row[f]
        basis.append(v)
    return basis


def primitive_integer(vec):
    """Scale a rational vector to coprime integers, preserving direction."""
    fracs = [Fraction(x) for x in vec]
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def parallel(u, v) -> bool:
    """True if u and v are rational multiples of each other (0 is parallel)."""
    uf = [Fraction(x) for x in u]
    vf = [Fraction(y) for y in v]
    if all(x == 0 for x in uf) or all(y == 0 for y in vf):
        return True
    return rank([uf, vf]) <= 1
