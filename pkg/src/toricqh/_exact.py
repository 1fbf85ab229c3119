"""Small exact linear algebra kit over Fraction, used by the geometry layers.

Vectors are tuples, matrices are lists of row tuples. Everything is copied
before elimination, so callers can share inputs freely.
"""

from fractions import Fraction
from math import gcd, lcm

IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]


def ratvec(v) -> RatVec:
    return tuple(Fraction(x) for x in v)


def dot(u, v) -> Fraction:
    return sum((Fraction(a) * Fraction(b) for a, b in zip(u, v)), Fraction(0))


def vsub(u, v) -> RatVec:
    return tuple(Fraction(a) - Fraction(b) for a, b in zip(u, v))


def is_zero(v) -> bool:
    return all(x == 0 for x in v)


def _echelon(rows):
    """Row-reduce a copy of `rows`; returns (reduced rows, pivot columns)."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(_echelon(rows)[1])


def det(rows) -> Fraction:
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        result *= m[c][c]
        inv = Fraction(1) / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def solve(rows, rhs) -> RatVec | None:
    """Solve the square system rows @ x = rhs; None when singular."""
    n = len(rows)
    m = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return None
        m[c], m[pivot] = m[pivot], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return tuple(m[i][n] for i in range(n))


def kernel(rows, ncols) -> list[RatVec]:
    """Basis of the right kernel of the given rows in ambient dimension ncols."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    m, pivots = _echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(tuple(v))
    return basis


def primitive(v) -> IntVec:
    """Scale a nonzero rational vector by a positive factor to coprime integers."""
    v = ratvec(v)
    if is_zero(v):
        raise ValueError("zero vector has no primitive representative")
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def affine_rank(points) -> int:
    """Dimension of the affine span of the given points."""
    if len(points) <= 1:
        return 0
    base = points[0]
    return rank([vsub(p, base) for p in points[1:]])


def independent_rows(rows) -> list[int]:
    """Indices of a maximal linearly independent subset of rows, greedily."""
    chosen: list[int] = []
    for i in range(len(rows)):
        if rank([rows[j] for j in chosen] + [rows[i]]) > len(chosen):
            chosen.append(i)
    return chosen
