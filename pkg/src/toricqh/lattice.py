"""Exact lattice-polytope geometry: hulls, duality, reflexivity, Delzant
tests, normalized volume, lattice-point enumeration.

Everything here runs on arbitrary-precision rationals; no floating point.
Vertices, facets and lattice points are kept in lexicographic order so that
all outputs are byte-deterministic.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import ceil, floor

from . import _exact
from ._exact import IntVec, RatVec, affine_rank, dot, ratvec, vsub
from .errors import NotFullDimensional, OriginNotInterior

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Facet:
    """Supporting half-space <m, normal> >= offset with primitive inner normal."""

    normal: IntVec
    offset: Fraction


class Polytope:
    """Full-dimensional polytope with exact rational vertices.

    `lattice_tag` records which side of the dual pair the polytope lives on:
    "M" for moment polytopes, "N" for ray polytopes. Vertices are exactly the
    extreme points; non-extreme input points are dropped at construction.
    """

    def __init__(self, dim: int, vertices, lattice_tag: str = "M", _facets=None):
        self.dim = dim
        self.vertices: tuple[RatVec, ...] = tuple(sorted(ratvec(v) for v in vertices))
        self.lattice_tag = lattice_tag
        if _facets is not None:
            self.__dict__["facets"] = tuple(sorted(_facets))

    @classmethod
    def from_points(cls, points, lattice_tag: str = "M") -> "Polytope":
        """Build the convex hull of `points`, silently dropping non-extreme ones."""
        pts = sorted(set(ratvec(p) for p in points))
        if not pts:
            raise NotFullDimensional("no points given")
        dim = len(pts[0])
        facets = convex_hull_facets(pts)
        vertices = []
        for p in pts:
            active = [f.normal for f in facets if dot(p, f.normal) == f.offset]
            if _exact.rank(active) == dim:
                vertices.append(p)
        dropped = len(pts) - len(vertices)
        if dropped:
            log.debug("dropped %d non-extreme input point(s)", dropped)
        return cls(dim, vertices, lattice_tag, _facets=facets)

    @cached_property
    def facets(self) -> tuple[Facet, ...]:
        return tuple(convex_hull_facets(list(self.vertices)))

    def vertices_on(self, facet: Facet) -> tuple[RatVec, ...]:
        return tuple(v for v in self.vertices if dot(v, facet.normal) == facet.offset)

    def contains(self, point) -> bool:
        p = ratvec(point)
        return all(dot(p, f.normal) >= f.offset for f in self.facets)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    def __eq__(self, other):
        return (
            isinstance(other, Polytope)
            and self.dim == other.dim
            and self.vertices == other.vertices
            and self.lattice_tag == other.lattice_tag
        )

    def __hash__(self):
        return hash((self.dim, self.vertices, self.lattice_tag))

    def __repr__(self):
        return f"Polytope(dim={self.dim}, vertices={len(self.vertices)}, tag={self.lattice_tag!r})"


def convex_hull_facets(points) -> list[Facet]:
    """Irredundant facet list of conv(points), primitive inner normals.

    Brute force: candidate hyperplane directions come from (d-1)-subsets of
    the difference vectors based at each point; a candidate normal yields a
    facet when its support set is (d-1)-dimensional. Intended for small
    instances (d <= 6, at most a few dozen points).
    """
    pts = sorted(set(ratvec(p) for p in points))
    if not pts:
        raise NotFullDimensional("no points given")
    d = len(pts[0])
    if affine_rank(pts) < d:
        raise NotFullDimensional(f"points span affine dimension {affine_rank(pts)} < {d}")

    candidates: set[IntVec] = set()
    if d == 1:
        candidates.add((1,))
    else:
        for base in pts:
            diffs = sorted(set(vsub(q, base) for q in pts if q != base))
            for subset in itertools.combinations(diffs, d - 1):
                if _exact.rank(list(subset)) != d - 1:
                    continue
                ker = _exact.kernel(list(subset), d)
                if len(ker) != 1:
                    continue
                n = _exact.primitive(ker[0])
                first = next(x for x in n if x != 0)
                if first < 0:
                    n = tuple(-x for x in n)
                candidates.add(n)

    facets: set[Facet] = set()
    for n in candidates:
        vals = [dot(p, n) for p in pts]
        for normal, offset in ((n, min(vals)), (tuple(-x for x in n), -max(vals))):
            support = [p for p, v in zip(pts, vals) if dot(p, normal) == offset]
            if affine_rank(support) == d - 1:
                facets.add(Facet(normal, Fraction(offset)))
    return sorted(facets)


def dual_polytope(P: Polytope) -> Polytope:
    """Polar dual {n : <m, n> >= -1 for all m in P}; requires 0 interior."""
    if any(f.offset >= 0 for f in P.facets):
        bad = next(f for f in P.facets if f.offset >= 0)
        raise OriginNotInterior(f"facet {bad.normal} has offset {bad.offset} >= 0")
    dual_vertices = [tuple(Fraction(x) / (-f.offset) for x in f.normal) for f in P.facets]
    # Each vertex v of P supports the dual facet <primitive(v), n> >= -1/scale,
    # so the dual's facet list comes for free from P's vertex list.
    dual_facets = []
    for v in P.vertices:
        prim = _exact.primitive(v)
        scale = next(Fraction(x) / p for x, p in zip(v, prim) if p != 0)
        dual_facets.append(Facet(prim, Fraction(-1) / scale))
    tag = "N" if P.lattice_tag == "M" else "M"
    return Polytope(P.dim, dual_vertices, tag, _facets=dual_facets)


def is_reflexive(P: Polytope) -> tuple[bool, str | None]:
    """True when 0 is interior and both P and its dual are integral."""
    if any(f.offset >= 0 for f in P.facets):
        return False, "origin is not strictly interior"
    if not P.is_integral():
        return False, "polytope has a non-integral vertex"
    dual = dual_polytope(P)
    if not dual.is_integral():
        bad = next(v for v in dual.vertices if any(x.denominator != 1 for x in v))
        return False, f"dual has non-integral vertex {tuple(map(str, bad))}"
    return True, None


def lattice_points(P: Polytope) -> list[IntVec]:
    """All integral points of P, by bounding-box scan with facet filtering."""
    lo = [ceil(min(v[i] for v in P.vertices)) for i in range(P.dim)]
    hi = [floor(max(v[i] for v in P.vertices)) for i in range(P.dim)]
    facets = P.facets
    points = []
    for cand in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if all(dot(cand, f.normal) >= f.offset for f in facets):
            points.append(cand)
    return points


def interior_lattice_points(P: Polytope) -> list[IntVec]:
    return [
        p
        for p in lattice_points(P)
        if all(dot(p, f.normal) > f.offset for f in P.facets)
    ]


def _adjacent_vertices(P: Polytope) -> dict[RatVec, list[RatVec]]:
    """Vertex adjacency via facet incidence: v ~ w iff the smallest face
    containing both has exactly two vertices."""
    active = {v: frozenset(i for i, f in enumerate(P.facets) if dot(v, f.normal) == f.offset) for v in P.vertices}
    adj: dict[RatVec, list[RatVec]] = {v: [] for v in P.vertices}
    if P.dim == 1:
        a, b = P.vertices
        adj[a].append(b)
        adj[b].append(a)
        return adj
    for v, w in itertools.combinations(P.vertices, 2):
        common = active[v] & active[w]
        if not common:
            continue
        on_face = [u for u in P.vertices if common <= active[u]]
        if len(on_face) == 2:
            adj[v].append(w)
            adj[w].append(v)
    return adj


def is_delzant(P: Polytope) -> tuple[bool, str | None]:
    """Simple + smooth test: d edges per vertex whose primitive directions
    form a lattice basis."""
    adj = _adjacent_vertices(P)
    for v in P.vertices:
        edges = adj[v]
        if len(edges) != P.dim:
            return False, f"vertex {tuple(map(str, v))} meets {len(edges)} edges, expected {P.dim}"
        dirs = [_exact.primitive(vsub(w, v)) for w in edges]
        if abs(_exact.det(dirs)) != 1:
            return False, f"edge directions at vertex {tuple(map(str, v))} are not a lattice basis"
    return True, None


def _triangulate(points: list[RatVec]) -> list[tuple[int, ...]]:
    """Triangulate the full-dimensional conv(points) into simplices, returned
    as index tuples. Fans out from the first (lex-min) point over the facets
    that do not contain it."""
    k = len(points[0])
    if len(points) == k + 1:
        return [tuple(range(k + 1))]
    facets = convex_hull_facets(points)
    apex = 0  # points arrive sorted, so index 0 is the lex-min vertex
    simplices = []
    for f in facets:
        if dot(points[apex], f.normal) == f.offset:
            continue
        fidx = [i for i, p in enumerate(points) if dot(p, f.normal) == f.offset]
        if len(fidx) == k:
            simplices.append((apex, *fidx))
            continue
        sub = _project_affine([points[i] for i in fidx])
        for tri in _triangulate(sub):
            simplices.append((apex, *(fidx[j] for j in tri)))
    return simplices


def _project_affine(points: list[RatVec]) -> list[RatVec]:
    """Coordinates of `points` relative to a basis of their affine span."""
    base = points[0]
    diffs = [vsub(p, base) for p in points]
    basis_idx = _exact.independent_rows(diffs)
    basis = [diffs[i] for i in basis_idx]
    coord_idx = _exact.independent_rows([tuple(row[j] for row in basis) for j in range(len(base))])
    square = [[basis[i][j] for i in range(len(basis))] for j in coord_idx]
    return [_exact.solve(square, [diffs_p[j] for j in coord_idx]) for diffs_p in diffs]


def normalized_volume(P: Polytope, apex=None) -> Fraction:
    """d! times the Euclidean volume of P, exactly.

    Decomposes P into pyramids over its facets from an interior apex
    (default: vertex centroid), then triangulates each facet.
    """
    d = P.dim
    if apex is None:
        n = len(P.vertices)
        apex = tuple(sum(v[i] for v in P.vertices) / n for i in range(d))
    else:
        apex = ratvec(apex)
    total = Fraction(0)
    for f in P.facets:
        if dot(apex, f.normal) == f.offset:
            continue
        fverts = list(P.vertices_on(f))
        if d == 1:
            total += abs(fverts[0][0] - apex[0])
            continue
        sub = _project_affine(fverts)
        for tri in _triangulate(sub):
            rows = [vsub(fverts[i], apex) for i in tri]
            total += abs(_exact.det(rows))
    return total


def polytope_product(P: Polytope, Q: Polytope) -> Polytope:
    """Product polytope in the direct-sum lattice; vertices are vertex pairs."""
    vertices = [p + q for p in P.vertices for q in Q.vertices]
    zeros_q = (0,) * Q.dim
    zeros_p = (0,) * P.dim
    facets = [Facet(f.normal + zeros_q, f.offset) for f in P.facets]
    facets += [Facet(zeros_p + f.normal, f.offset) for f in Q.facets]
    return Polytope(P.dim + Q.dim, vertices, P.lattice_tag, _facets=facets)
