"""
Small named triangulations, the boundary-only irreducible family, and random
refinement for building reduction corpora.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .complex import Triangulation, build, edge_key, require_valid
from .errors import InvalidParamsError, UnknownNameError
from .topology import classify_surface

# Static data; tests/test_generators.py regenerates the last two by search.
_SURFACES = {
    "sphere_min": (4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]),
    "disk_min": (3, [(0, 1, 2)]),
    "projective_min": (6, [(0, 1, 2), (0, 1, 5), (0, 2, 3), (0, 3, 4), (0, 4, 5),
                           (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5)]),
    "torus_k7": (7, [tuple(sorted(((i, (i + 1) % 7, (i + 3) % 7)[k] for k in range(3))))
                     for i in range(7)]
                 + [tuple(sorted(((i, (i + 2) % 7, (i + 3) % 7)[k] for k in range(3))))
                    for i in range(7)]),
    "octahedron": (6, [(a, c, e) for a in (0, 1) for c in (2, 3) for e in (4, 5)]),
    "icosahedron": (12, [(0, 1 + i, 1 + (i + 1) % 5) for i in range(5)]
                    + [(11, 6 + i, 6 + (i + 1) % 5) for i in range(5)]
                    + [(1 + i, 1 + (i + 1) % 5, 6 + i) for i in range(5)]
                    + [(1 + (i + 1) % 5, 6 + i, 6 + (i + 1) % 5) for i in range(5)]),
}

SURFACE_NAMES = tuple(_SURFACES)


def canonical_surface(name: str) -> Triangulation:
    """Named small triangulation: sphere_min (tetrahedron), disk_min (one
    triangle), projective_min (6 vertices), torus_k7 (7 vertices), plus the
    octahedron and icosahedron."""
    try:
        n, tris = _SURFACES[name]
    except KeyError:
        raise UnknownNameError(f"unknown surface {name!r}; expected one of {SURFACE_NAMES}") from None
    return build(n, tris)


@dataclass(frozen=True)
class Figure1Params:
    g: int
    b: int
    diagonal_seed: int = 0

    def __post_init__(self):
        if not isinstance(self.g, int) or self.g < 0 or self.g % 2:
            raise InvalidParamsError(f"g must be an even non-negative integer, got {self.g!r}")
        if not isinstance(self.b, int) or self.b < 1:
            raise InvalidParamsError(f"b must be a positive integer, got {self.b!r}")
        if (self.g, self.b) == (0, 1):
            raise InvalidParamsError("(g, b) = (0, 1) is the disk; need g >= 2 or b >= 2")

    @property
    def strict(self) -> bool:
        return self.g >= 2 or self.b >= 2

    @property
    def vertex_count(self) -> int:
        return 5 * self.g // 2 + 4 * self.b - 2


def figure1(params: Figure1Params | int, b: int | None = None,
            diagonal_seed: int = 0) -> Triangulation:
    """Irreducible triangulation of the orientable surface of Euler genus g
    with b boundaries, 5g/2 + 4b - 2 vertices, all on the boundary.

    Layout: vertex 0 is the apex of a fan over the path 1, 2, ..., k.  A strip
    is a quadrilateral glued to two vertex-disjoint path edges (p_i p_i+1 and
    p_j p_j+1) with sides p_i+1 p_j and p_i p_j+1, which makes it an untwisted
    band, split by one of its two diagonals (chosen by ``diagonal_seed``).
    Each handle is a block of five path edges carrying two interlaced strips on
    edges (1st, 4th) and (2nd, 5th); each extra boundary is a block of four path
    edges with one strip on edges (1st, 4th).  Consecutive blocks share their
    end vertex.
    """
    if not isinstance(params, Figure1Params):
        params = Figure1Params(params, b, diagonal_seed)
    rng = random.Random(params.diagonal_seed)
    strips = []
    cur = 0
    for _ in range(params.g // 2):
        strips += [(cur, cur + 3), (cur + 1, cur + 4)]
        cur += 5
    for _ in range(params.b - 1):
        strips.append((cur, cur + 3))
        cur += 4

    def p(i):
        return i + 1

    tris = [(0, p(i), p(i + 1)) for i in range(cur)]
    edges = {edge_key(*e) for tri in tris for e in ((tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2]))}
    for i, j in strips:
        a, a1, c, c1 = p(i), p(i + 1), p(j), p(j + 1)
        edges |= {edge_key(a1, c), edge_key(a, c1)}
        options = [((a, c), [(a, a1, c), (a, c, c1)]),
                   ((a1, c1), [(a, a1, c1), (a1, c, c1)])]
        options = [o for o in options if edge_key(*o[0]) not in edges]
        diag, halves = rng.choice(options)
        edges.add(edge_key(*diag))
        tris += halves
    return build(cur + 2, tris)


# -- refinement -------------------------------------------------------------

class _Mutable:
    """Triangle set with incremental edge/neighbour tables for local moves."""

    def __init__(self, t: Triangulation):
        self.n = t.vertex_count
        self.edge_tris: dict = {}
        self.nbrs = [set() for _ in range(self.n)]
        for tri in t.triangles:
            self.add(tri)

    def add(self, tri):
        tri = tuple(sorted(tri))
        a, b, c = tri
        for u, v in ((a, b), (a, c), (b, c)):
            self.edge_tris.setdefault((u, v), set()).add(tri)
            self.nbrs[u].add(v)
            self.nbrs[v].add(u)

    def remove(self, tri):
        tri = tuple(sorted(tri))
        a, b, c = tri
        for u, v in ((a, b), (a, c), (b, c)):
            ts = self.edge_tris[(u, v)]
            ts.discard(tri)
            if not ts:
                del self.edge_tris[(u, v)]
                self.nbrs[u].discard(v)
                self.nbrs[v].discard(u)

    def new_vertex(self):
        self.nbrs.append(set())
        self.n += 1
        return self.n - 1

    def triangles(self):
        return sorted({tri for ts in self.edge_tris.values() for tri in ts})

    def apexes(self, e):
        return [next(x for x in tri if x not in e) for tri in sorted(self.edge_tris[e])]

    def stellate(self, tri):
        a, b, c = tri
        w = self.new_vertex()
        self.remove(tri)
        for x, y in ((a, b), (a, c), (b, c)):
            self.add((x, y, w))

    def subdivide(self, e):
        u, v = e
        apexes = self.apexes(e)
        w = self.new_vertex()
        for x in apexes:
            self.remove((u, v, x))
            self.add((u, w, x))
            self.add((v, w, x))

    def flip(self, e) -> bool:
        if len(self.edge_tris.get(e, ())) != 2:
            return False
        u, v = e
        x, y = self.apexes(e)
        if y in self.nbrs[x]:
            return False
        self.remove((u, v, x))
        self.remove((u, v, y))
        self.add((u, x, y))
        self.add((v, x, y))
        return True


def refine(t: Triangulation, steps: int, seed: int = 0) -> Triangulation:
    """Add ``steps`` vertices by random face stellations and edge subdivisions,
    each followed by up to two random edge flips.

    The surface type is preserved; the result is checked before returning.
    """
    require_valid(t)
    if steps == 0:
        return t
    rng = random.Random(seed)
    m = _Mutable(t)
    for _ in range(steps):
        if rng.random() < 0.5:
            m.stellate(rng.choice(m.triangles()))
        else:
            m.subdivide(rng.choice(sorted(m.edge_tris)))
        for _ in range(2):
            m.flip(rng.choice(sorted(m.edge_tris)))
    out = build(m.n, m.triangles())
    require_valid(out)
    if classify_surface(out) != classify_surface(t):
        raise RuntimeError("refine changed the surface type")
    return out


# -- composite surfaces -----------------------------------------------------

def _interior_triangle(t: Triangulation) -> tuple[int, int, int]:
    for tri in reversed(t.triangles):
        if not set(tri) & t.boundary_vertices:
            return tri
    raise InvalidParamsError("no triangle avoids the boundary")


def connected_sum(t1: Triangulation, t2: Triangulation) -> Triangulation:
    """Remove an interior triangle from each and identify the two holes."""
    require_valid(t1)
    require_valid(t2)
    r1, r2 = _interior_triangle(t1), _interior_triangle(t2)
    others = [v for v in range(t2.vertex_count) if v not in r2]
    ids = {v: t1.vertex_count + k for k, v in enumerate(others)}
    ids.update(zip(r2, r1))
    tris = [tri for tri in t1.triangles if tri != r1]
    tris += [tuple(ids[v] for v in tri) for tri in t2.triangles if tri != r2]
    return build(t1.vertex_count + len(others), tris)


def punch_holes(t: Triangulation, count: int, seed: int = 0) -> Triangulation:
    """Delete ``count`` pairwise vertex-disjoint triangles away from the boundary."""
    require_valid(t)
    rng = random.Random(seed)
    order = list(t.triangles)
    rng.shuffle(order)
    used = set(t.boundary_vertices)
    chosen = []
    for tri in order:
        if len(chosen) == count:
            break
        if not used & set(tri):
            chosen.append(tri)
            used |= set(tri)
    if len(chosen) < count:
        raise InvalidParamsError(f"cannot find {count} disjoint interior triangles")
    return build(t.vertex_count, [tri for tri in t.triangles if tri not in chosen])


def torus_grid(rows: int, cols: int) -> Triangulation:
    """Quotient of a rows x cols square grid, each square split along a diagonal."""
    if rows < 3 or cols < 3:
        raise InvalidParamsError("torus grid needs at least 3 rows and 3 columns")

    def v(i, j):
        return (i % rows) * cols + j % cols

    tris = []
    for i in range(rows):
        for j in range(cols):
            tris.append((v(i, j), v(i + 1, j), v(i + 1, j + 1)))
            tris.append((v(i, j), v(i + 1, j + 1), v(i, j + 1)))
    return build(rows * cols, tris)


def barycentric_subdivision(t: Triangulation) -> Triangulation:
    require_valid(t)
    mid = {e: t.vertex_count + k for k, e in enumerate(t.edges)}
    base = t.vertex_count + len(mid)
    tris = []
    for k, (a, b, c) in enumerate(t.triangles):
        f = base + k
        for x, y in ((a, b), (a, c), (b, c)):
            m = mid[(x, y)]
            tris += [(x, m, f), (y, m, f)]
    return build(base + len(t.triangles), tris)
