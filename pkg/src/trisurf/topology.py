"""
Homeomorphism type of a triangulated surface and cycle tests built on cutting.

A simple cycle of the 1-skeleton is cut by splitting, at each of its vertices,
the star of the vertex into the two fans separated by the cycle.  Whether the
copies of the cycle form one or two new boundary walks decides sidedness;
whether a resulting component is a disk decides null-homotopy.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .complex import (
    Triangulation,
    boundary_walks,
    build,
    edge_key,
    require_valid,
)
from .errors import (
    CycleError,
    CycleTouchesBoundaryError,
    NonSimpleCycleError,
    NotVertexDisjointError,
)


@dataclass(frozen=True)
class SurfaceClass:
    orientable: bool
    euler_genus: int
    boundary_count: int
    euler_characteristic: int

    @property
    def is_sphere(self):
        return self.euler_genus == 0 and self.boundary_count == 0

    @property
    def is_disk(self):
        return self.euler_genus == 0 and self.boundary_count == 1

    @property
    def is_projective_plane(self):
        return not self.orientable and self.euler_genus == 1 and self.boundary_count == 0

    def __str__(self):
        kind = "orientable" if self.orientable else "nonorientable"
        return f"{kind} {self.euler_genus} {self.boundary_count} {self.euler_characteristic}"


def surface_class(orientable: bool, g: int, b: int) -> SurfaceClass:
    return SurfaceClass(orientable, g, b, 2 - g - b)


def is_orientable(t: Triangulation) -> bool:
    """Propagate a cyclic orientation across interior edges; False on conflict."""
    tris = t.triangles
    orient: list[tuple[int, int, int] | None] = [None] * len(tris)
    for start in range(len(tris)):
        if orient[start] is not None:
            continue
        orient[start] = tris[start]
        queue = deque([start])
        while queue:
            i = queue.popleft()
            x, y, z = orient[i]
            for p, q in ((x, y), (y, z), (z, x)):
                for j in t.edges[edge_key(p, q)]:
                    if j == i:
                        continue
                    want = _oriented_with(tris[j], q, p)
                    if orient[j] is None:
                        orient[j] = want
                        queue.append(j)
                    elif not _has_directed(orient[j], q, p):
                        return False
    return True


def _oriented_with(tri, p, q):
    (r,) = set(tri) - {p, q}
    return (p, q, r)


def _has_directed(o, p, q):
    x, y, z = o
    return (p, q) in ((x, y), (y, z), (z, x))


def classify_surface(t: Triangulation) -> SurfaceClass:
    require_valid(t)
    chi = t.euler_characteristic
    b = len(boundary_walks(t))
    return SurfaceClass(is_orientable(t), 2 - b - chi, b, chi)


# -- cycles -----------------------------------------------------------------

@dataclass(frozen=True)
class CycleRef:
    """Simple closed walk of length >= 3 in the 1-skeleton.

    ``facial`` is filled in by :func:`enumerate_3cycles`; ``None`` otherwise.
    """

    vertices: tuple[int, ...]
    facial: bool | None = field(default=None, compare=False)

    def __len__(self):
        return len(self.vertices)

    @property
    def edges(self):
        vs = self.vertices
        return [edge_key(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _as_cycle(c) -> CycleRef:
    return c if isinstance(c, CycleRef) else CycleRef(tuple(c))


def _check_cycle(t: Triangulation, c: CycleRef, allow_boundary: bool = False) -> None:
    vs = c.vertices
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise NonSimpleCycleError(f"{vs} is not a simple cycle of length >= 3")
    for e in c.edges:
        ts = t.edges.get(e)
        if ts is None:
            raise NonSimpleCycleError(f"{e} is not an edge")
        if len(ts) != 2 and not allow_boundary:
            raise CycleTouchesBoundaryError(f"cycle edge {e} is a boundary edge")
    if not allow_boundary:
        touching = [v for v in vs if v in t.boundary_vertices]
        if touching:
            raise CycleTouchesBoundaryError(f"cycle vertex {touching[0]} is on the boundary")


def collar(t: Triangulation) -> Triangulation:
    """Glue a triangulated annulus along every boundary walk.

    The result is homeomorphic to ``t`` by a map isotopic to the inclusion, so
    homotopy questions about cycles of ``t`` can be asked in it; the original
    vertices keep their ids and become interior.
    """
    n = t.vertex_count
    tris = list(t.triangles)
    for walk in boundary_walks(t):
        k = len(walk)
        new = list(range(n, n + k))
        n += k
        for i in range(k):
            a, b = walk[i], walk[(i + 1) % k]
            tris.append((a, b, new[i]))
            tris.append((b, new[(i + 1) % k], new[i]))
    return build(n, tris)


@dataclass
class CutResult:
    components: list[Triangulation]
    copies: list[list[tuple[int, ...]]]
    vertex_maps: list[list[int]]
    # index of the cut cycle each copy comes from (parallel to ``copies``)
    copy_sources: list[list[int]] = field(default_factory=list)

    @property
    def copy_count(self):
        return sum(len(c) for c in self.copies)


def _split_star(t: Triangulation, v: int, prev: int, nxt: int) -> tuple[set[int], set[int]]:
    """Split the triangles around interior vertex ``v`` by the path prev-v-nxt."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for i in t.vertex_triangles[v]:
        a, b = (x for x in t.triangles[i] if x != v)
        adj.setdefault(a, []).append((b, i))
        adj.setdefault(b, []).append((a, i))
    side = set()
    cur, came = prev, None
    while cur != nxt:
        step = adj[cur][0] if adj[cur][0][1] != came else adj[cur][1]
        cur, came = step
        side.add(came)
    return side, set(t.vertex_triangles[v]) - side


def _cut(t: Triangulation, cycles: list[CycleRef]) -> CutResult:
    n = t.vertex_count
    # vertex -> (triangles of side 1, id of side-1 copy, cycle index)
    split: dict[int, tuple[set[int], int, int]] = {}
    next_id = n
    for ci, c in enumerate(cycles):
        vs = c.vertices
        k = len(vs)
        for i, v in enumerate(vs):
            _, other = _split_star(t, v, vs[i - 1], vs[(i + 1) % k])
            split[v] = (other, next_id, ci)
            next_id += 1
    origin = list(range(n)) + [0] * (next_id - n)
    source = {}
    for v, (_, vid, ci) in split.items():
        origin[vid] = v
        source[v] = source[vid] = ci

    new_tris = []
    for i, tri in enumerate(t.triangles):
        out = []
        for v in tri:
            if v in split and i in split[v][0]:
                out.append(split[v][1])
            else:
                out.append(v)
        new_tris.append(tuple(out))

    # connected components through shared vertices
    by_vertex: dict[int, list[int]] = {}
    for i, tri in enumerate(new_tris):
        for v in tri:
            by_vertex.setdefault(v, []).append(i)
    comp_of = [-1] * len(new_tris)
    comps = []
    for s in range(len(new_tris)):
        if comp_of[s] != -1:
            continue
        members = [s]
        comp_of[s] = len(comps)
        stack = [s]
        while stack:
            i = stack.pop()
            for v in new_tris[i]:
                for j in by_vertex[v]:
                    if comp_of[j] == -1:
                        comp_of[j] = len(comps)
                        members.append(j)
                        stack.append(j)
        comps.append(sorted(members))

    result = CutResult([], [], [], [])
    for members in comps:
        verts = sorted({v for i in members for v in new_tris[i]})
        local = {v: k for k, v in enumerate(verts)}
        comp = build(len(verts), [tuple(local[v] for v in new_tris[i]) for i in members])
        walks, sources = [], []
        for walk in boundary_walks(comp):
            orig = origin[verts[walk[0]]]
            if orig in split:
                walks.append(tuple(walk))
                sources.append(source[orig])
        result.components.append(comp)
        result.copies.append(walks)
        result.copy_sources.append(sources)
        result.vertex_maps.append([origin[v] for v in verts])

    total = sum(c.euler_characteristic for c in result.components)
    if total != t.euler_characteristic:
        raise RuntimeError(f"Euler characteristic not conserved by cut: {total} != "
                           f"{t.euler_characteristic}")
    return result


def cut_along_cycle(t: Triangulation, c) -> CutResult:
    """Cut ``t`` along an interior simple cycle avoiding the boundary."""
    require_valid(t)
    c = _as_cycle(c)
    _check_cycle(t, c)
    return _cut(t, [c])


def _prepare(t, c, allow_boundary):
    require_valid(t)
    c = _as_cycle(c)
    if allow_boundary:
        _check_cycle(t, c, allow_boundary=True)
        if t.boundary_vertices:
            t = collar(t)
    _check_cycle(t, c)
    return t, c


def cycle_sidedness(t: Triangulation, c, *, allow_boundary: bool = False) -> str:
    """Return ``"two_sided"`` or ``"one_sided"``.

    With ``allow_boundary`` the cycle may run through boundary vertices and
    edges; the question is then answered on a collared copy of ``t``.
    """
    t, c = _prepare(t, c, allow_boundary)
    return "two_sided" if _cut(t, [c]).copy_count == 2 else "one_sided"


def is_null_homotopic(t: Triangulation, c, *, allow_boundary: bool = False) -> bool:
    """True iff the cycle bounds a disk."""
    t, c = _prepare(t, c, allow_boundary)
    return _bounds_disk(t, c)


def _bounds_disk(t: Triangulation, c: CycleRef) -> bool:
    cut = _cut(t, [c])
    if cut.copy_count != 2:
        return False
    for comp, copies in zip(cut.components, cut.copies):
        if copies and _is_disk(comp):
            return True
    return False


def _is_disk(t: Triangulation) -> bool:
    return (t.euler_characteristic == 1 and len(boundary_walks(t)) == 1
            and is_orientable(t))


def _is_annulus(t: Triangulation) -> bool:
    return (t.euler_characteristic == 0 and len(boundary_walks(t)) == 2
            and is_orientable(t))


def disjoint_cycles_homotopic(t: Triangulation, c1, c2, *, allow_boundary: bool = False) -> bool:
    """Decide free homotopy of two vertex-disjoint two-sided cycles.

    They are homotopic iff both are null-homotopic or they cobound an annulus.
    """
    require_valid(t)
    c1, c2 = _as_cycle(c1), _as_cycle(c2)
    if set(c1.vertices) & set(c2.vertices):
        raise NotVertexDisjointError(f"{c1.vertices} and {c2.vertices} share a vertex")
    t, c1 = _prepare(t, c1, allow_boundary)
    _check_cycle(t, c2)
    for c in (c1, c2):
        if _cut(t, [c]).copy_count != 2:
            raise CycleError(f"cycle {c.vertices} is one-sided")
    null1, null2 = _bounds_disk(t, c1), _bounds_disk(t, c2)
    if null1 or null2:
        return null1 and null2
    cut = _cut(t, [c1, c2])
    for comp, sources in zip(cut.components, cut.copy_sources):
        if sorted(sources) == [0, 1] and _is_annulus(comp):
            return True
    return False


def enumerate_3cycles(t: Triangulation) -> list[CycleRef]:
    """All vertex triples spanning three edges, marked facial or not."""
    faces = set(t.triangles)
    out = []
    for u, v in t.edges:
        for w in sorted(t.neighbors[u] & t.neighbors[v]):
            if w > v:
                out.append(CycleRef((u, v, w), facial=(u, v, w) in faces))
    return out
