"""
Triangulated surfaces stored as a vertex count plus a list of triangles.

Every triangle is kept as a sorted vertex triple.  Edge and incidence tables
are derived lazily and cached on the (immutable) instance, so operations that
"modify" a triangulation build a new one instead.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from .errors import InvalidTriangulationError, MalformedInputError, NoSuchEdgeError

Edge = tuple[int, int]
Triangle = tuple[int, int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Triangulation:
    """A 2-dimensional simplicial complex given by its triangles.

    Use :func:`build` to construct instances from raw input; the constructor
    itself trusts its arguments.
    """

    vertex_count: int
    triangles: tuple[Triangle, ...]

    def __repr__(self):
        return f"Triangulation(vertex_count={self.vertex_count}, faces={len(self.triangles)})"

    @cached_property
    def edges(self) -> dict[Edge, tuple[int, ...]]:
        """Map from sorted vertex pair to the indices of its triangles."""
        table: dict[Edge, list[int]] = {}
        for i, (a, b, c) in enumerate(self.triangles):
            for e in ((a, b), (a, c), (b, c)):
                table.setdefault(e, []).append(i)
        return {e: tuple(ts) for e, ts in sorted(table.items())}

    @cached_property
    def vertex_triangles(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, tri in enumerate(self.triangles):
            for v in tri:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def boundary_edges(self) -> tuple[Edge, ...]:
        return tuple(e for e, ts in self.edges.items() if len(ts) == 1)

    @cached_property
    def boundary_vertices(self) -> frozenset[int]:
        return frozenset(v for e in self.boundary_edges for v in e)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def face_count(self) -> int:
        return len(self.triangles)

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - len(self.edges) + len(self.triangles)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edges

    def is_boundary_vertex(self, v: int) -> bool:
        return v in self.boundary_vertices

    def is_boundary_edge(self, edge: Edge) -> bool:
        return len(self._edge_triangles(edge)) == 1

    def is_linking(self, edge: Edge) -> bool:
        """Interior edge whose two endpoints are boundary vertices."""
        u, v = edge
        return (len(self._edge_triangles(edge)) == 2
                and u in self.boundary_vertices and v in self.boundary_vertices)

    def apexes(self, edge: Edge) -> tuple[int, ...]:
        """Third vertices of the triangles incident to ``edge``."""
        u, v = edge
        out = []
        for i in self._edge_triangles(edge):
            (x,) = set(self.triangles[i]) - {u, v}
            out.append(x)
        return tuple(out)

    def _edge_triangles(self, edge: Edge) -> tuple[int, ...]:
        try:
            return self.edges[edge_key(*edge)]
        except KeyError:
            raise NoSuchEdgeError(f"{tuple(edge)} is not an edge") from None

    @cached_property
    def validation(self) -> ValidationReport:
        return _check(self)


def build(vertex_count: int, triangles) -> Triangulation:
    """Construct a triangulation, rejecting malformed triples.

    Structural problems (non-manifold edges, bad vertex links, ...) are not
    rejected here; see :func:`validate`.
    """
    if not isinstance(vertex_count, int) or vertex_count < 0:
        raise MalformedInputError(f"bad vertex count {vertex_count!r}")
    tris = []
    for k, tri in enumerate(triangles):
        tri = tuple(tri)
        if len(tri) != 3:
            raise MalformedInputError(f"triangle {k} does not have 3 vertices: {tri}")
        for v in tri:
            if not isinstance(v, int) or not 0 <= v < vertex_count:
                raise MalformedInputError(f"triangle {k} has out-of-range vertex {v!r}")
        if len(set(tri)) != 3:
            raise MalformedInputError(f"triangle {k} repeats a vertex: {tri}")
        tris.append(tuple(sorted(tri)))
    return Triangulation(vertex_count, tuple(tris))


class Violation(NamedTuple):
    axiom: str
    witness: tuple


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid


def validate(t: Triangulation) -> ValidationReport:
    """Check the simplicial-surface axioms; problems are returned, not raised."""
    return t.validation


def require_valid(t: Triangulation) -> None:
    report = t.validation
    if not report.valid:
        first = report.violations[0]
        raise InvalidTriangulationError(
            f"invalid triangulation ({first.axiom}: {first.witness})", report.violations)


def vertex_link(t: Triangulation, v: int) -> list[Edge]:
    """Edges opposite ``v`` in the triangles around it."""
    out = []
    for i in t.vertex_triangles[v]:
        a, b = (x for x in t.triangles[i] if x != v)
        out.append((a, b))
    return out


def _link_shape(link: list[Edge]) -> str | None:
    """Return 'cycle' or 'path' if ``link`` is a single simple one, else None."""
    adj: dict[int, list[int]] = {}
    for a, b in link:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    ends = 0
    for nb in adj.values():
        if len(nb) > 2 or len(set(nb)) != len(nb):
            return None
        ends += len(nb) == 1
    if ends not in (0, 2):
        return None
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(adj):
        return None
    if ends == 0:
        return "cycle" if len(adj) >= 3 else None
    return "path"


def _check(t: Triangulation) -> ValidationReport:
    violations: list[Violation] = []
    if not t.triangles:
        violations.append(Violation("empty", ()))
        return ValidationReport(violations)

    seen: dict[Triangle, int] = {}
    for tri in t.triangles:
        if tri in seen:
            violations.append(Violation("duplicate-triangle", (tri,)))
        seen[tri] = 1

    for e, ts in t.edges.items():
        if len(ts) > 2:
            violations.append(Violation("non-manifold-edge",
                                        (e,) + tuple(t.triangles[i] for i in ts)))

    isolated = [v for v in range(t.vertex_count) if not t.vertex_triangles[v]]
    for v in isolated:
        violations.append(Violation("isolated-vertex", (v,)))

    for v in range(t.vertex_count):
        if t.vertex_triangles[v] and _link_shape(vertex_link(t, v)) is None:
            violations.append(Violation("vertex-link", (v,)))

    # connectivity over vertices that carry triangles
    used = [v for v in range(t.vertex_count) if t.vertex_triangles[v]]
    reached = {used[0]}
    queue = deque([used[0]])
    while queue:
        u = queue.popleft()
        for w in t.neighbors[u]:
            if w not in reached:
                reached.add(w)
                queue.append(w)
    if len(reached) != len(used):
        missing = min(set(used) - reached)
        violations.append(Violation("disconnected", (used[0], missing)))
    return ValidationReport(violations)


@dataclass(frozen=True)
class EdgeRecord:
    endpoints: Edge
    kind: str  # "boundary" or "interior"
    linking: bool
    incident_triangles: tuple[int, ...]


def classify_edges(t: Triangulation) -> list[EdgeRecord]:
    require_valid(t)
    out = []
    for e, ts in t.edges.items():
        kind = "boundary" if len(ts) == 1 else "interior"
        linking = (kind == "interior" and e[0] in t.boundary_vertices
                   and e[1] in t.boundary_vertices)
        out.append(EdgeRecord(e, kind, linking, ts))
    return out


def boundary_walks(t: Triangulation) -> list[list[int]]:
    """Boundary components as closed vertex walks.

    Each walk starts at its smallest vertex and proceeds toward the smaller of
    that vertex's two boundary neighbours; walks are sorted by first vertex.
    """
    adj: dict[int, list[int]] = {}
    for u, v in t.boundary_edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    walks = []
    seen: set[int] = set()
    for start in sorted(adj):
        if start in seen:
            continue
        walk = [start]
        seen.add(start)
        prev, cur = start, min(adj[start])
        while cur != start:
            walk.append(cur)
            seen.add(cur)
            a, b = adj[cur]
            prev, cur = cur, (b if a == prev else a)
        walks.append(walk)
    return walks


# -- canonical form ---------------------------------------------------------

def _vertex_invariant(t: Triangulation, v: int) -> tuple:
    return (v in t.boundary_vertices, t.degree(v),
            tuple(sorted(t.degree(w) for w in t.neighbors[v])))


def _labelling_from_flag(t: Triangulation, root: int, a: int, b: int, c: int) -> list[Triangle]:
    label = {a: 0, b: 1, c: 2}
    visited = {root}
    queue = deque([root])
    edges = t.edges
    tris = t.triangles
    while queue:
        tri = tris[queue.popleft()]
        x, y, z = sorted(tri, key=label.__getitem__)
        for p, q in ((x, y), (x, z), (y, z)):
            for j in edges[edge_key(p, q)]:
                if j in visited:
                    continue
                visited.add(j)
                for w in tris[j]:
                    if w not in label:
                        label[w] = len(label)
                queue.append(j)
    return sorted(tuple(sorted((label[u], label[v], label[w]))) for u, v, w in tris)


def canonical_triangles(t: Triangulation) -> list[Triangle]:
    """Lexicographically least relabelled triangle list over all root flags.

    A flag is a triangle with an ordering of its vertices.  Only flags with the
    smallest triple of vertex invariants are tried, which is still a choice made
    up to isomorphism.
    """
    require_valid(t)
    inv = [_vertex_invariant(t, v) for v in range(t.vertex_count)]
    flags = []
    for i, tri in enumerate(t.triangles):
        a, b, c = tri
        for f in ((a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)):
            flags.append(((inv[f[0]], inv[f[1]], inv[f[2]]), i, f))
    best_key = min(k for k, _, _ in flags)
    best = None
    for key, i, (a, b, c) in flags:
        if key != best_key:
            continue
        code = _labelling_from_flag(t, i, a, b, c)
        if best is None or code < best:
            best = code
    return best


def canonical_form(t: Triangulation) -> bytes:
    """Isomorphism-invariant ASCII encoding, e.g. ``b"4:0 1 2,0 1 3,0 2 3,1 2 3"``."""
    tris = canonical_triangles(t)
    n = 1 + max(max(tri) for tri in tris)
    body = ",".join(f"{a} {b} {c}" for a, b, c in tris)
    return f"{n}:{body}".encode("ascii")


def from_canonical(code: bytes | str) -> Triangulation:
    if isinstance(code, bytes):
        code = code.decode("ascii")
    head, _, body = code.strip().partition(":")
    tris = [tuple(int(x) for x in part.split()) for part in body.split(",")]
    return build(int(head), tris)


def relabel(t: Triangulation, perm) -> Triangulation:
    """Apply the vertex map ``v -> perm[v]`` (a bijection onto range(n))."""
    return build(t.vertex_count, [tuple(perm[v] for v in tri) for tri in t.triangles])
