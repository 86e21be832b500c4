"""
Exhaustive, isomorph-free generation of small triangulations of a surface.

The search grows a complex from one triangle.  At each node it takes the
smallest edge that has exactly one triangle and either glues a second
triangle to it (with an existing vertex or the next unused one as apex) or,
for targets with boundary, declares it a boundary edge.  Vertex links are
kept as disjoint unions of paths, closing into a cycle only when the link is
complete, and for orientable targets every glued triangle must agree with
the orientation already propagated.  Because every triangulation can be
grown this way from any of its triangles, the search is exhaustive; leaves
are deduplicated by canonical form.
"""

from __future__ import annotations

import copy
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .complex import Triangulation, build, canonical_form, from_canonical
from .contraction import contractible_edges
from .topology import SurfaceClass, classify_surface, surface_class

SURFACES = {
    "sphere": surface_class(True, 0, 0),
    "disk": surface_class(True, 0, 1),
    "annulus": surface_class(True, 0, 2),
    "projective": surface_class(False, 1, 0),
    "mobius": surface_class(False, 1, 1),
    "torus": surface_class(True, 2, 0),
    "klein": surface_class(False, 2, 0),
}

_FRONTIER_DEPTH = 4


@dataclass(frozen=True)
class EnumSpec:
    target: SurfaceClass
    max_vertices: int
    irreducible_only: bool = False
    time_budget: float | None = None  # seconds; None means unlimited

    def __post_init__(self):
        if self.max_vertices < 3:
            raise ValueError("max_vertices must be at least 3")


@dataclass
class Catalog:
    entries: list[bytes] = field(default_factory=list)
    complete: bool = True

    def __len__(self):
        return len(self.entries)

    @property
    def vertex_counts(self) -> list[int]:
        return [int(e.split(b":", 1)[0]) for e in self.entries]

    def triangulations(self) -> list[Triangulation]:
        return [from_canonical(e) for e in self.entries]


class _Timeout(Exception):
    pass


class _State:
    def __init__(self):
        self.tris = [(0, 1, 2)]
        self.count = {(0, 1): 1, (0, 2): 1, (1, 2): 1}
        self.direction = {(0, 1): (0, 1), (1, 2): (1, 2), (0, 2): (2, 0)}
        self.marked: set = set()
        self.bdeg = {}
        self.triset = {(0, 1, 2)}
        self.nverts = 3
        # per vertex: path-endpoint map of its link, number of paths, closed flag
        self.ends = {0: {1: 2, 2: 1}, 1: {0: 2, 2: 0}, 2: {0: 1, 1: 0}}
        self.comps = {0: 1, 1: 1, 2: 1}
        self.closed = set()

    def open_edge(self):
        best = None
        for e, c in self.count.items():
            if c == 1 and e not in self.marked and (best is None or e < best):
                best = e
        return best


def _key(u, v):
    return (u, v) if u < v else (v, u)


class _Search:
    def __init__(self, spec: EnumSpec, deadline: float | None):
        t = spec.target
        self.cap = spec.max_vertices
        self.target = (t.orientable, t.euler_genus, t.boundary_count)
        self.orientable = t.orientable
        self.allow_boundary = t.boundary_count > 0
        # F = 2V - 2chi - (boundary edges), and each boundary walk has >= 3 edges
        self.max_faces = 2 * self.cap - 2 * t.euler_characteristic - 3 * t.boundary_count
        self.irreducible_only = spec.irreducible_only
        self.deadline = deadline
        self.found: set[bytes] = set()
        self.nodes = 0

    # -- link bookkeeping ---------------------------------------------------

    @staticmethod
    def _link_add(s, x, a, b):
        if x in s.closed:
            return False
        E = s.ends.setdefault(x, {})
        ina, inb = a in E, b in E
        if not ina and not inb:
            E[a] = b
            E[b] = a
            s.comps[x] = s.comps.get(x, 0) + 1
        elif ina and not inb:
            o = E.pop(a)
            E[b] = o
            E[o] = b
        elif inb and not ina:
            o = E.pop(b)
            E[a] = o
            E[o] = a
        elif E[a] == b:
            if s.comps[x] != 1:
                return False
            del E[a], E[b]
            s.closed.add(x)
        else:
            oa, ob = E.pop(a), E.pop(b)
            E[oa] = ob
            E[ob] = oa
            s.comps[x] -= 1
        return True

    def _children(self, s: _State):
        """Yield after applying each extension in place; restores on resume."""
        e = s.open_edge()
        if e is None:
            return
        p, q = e
        x, y = s.direction[e]
        candidates = list(range(s.nverts))
        if s.nverts < self.cap:
            candidates.append(s.nverts)
        if len(s.tris) < self.max_faces:
            for w in candidates:
                if w == p or w == q:
                    continue
                ep, eq = _key(p, w), _key(q, w)
                if s.count.get(ep, 0) >= 2 or s.count.get(eq, 0) >= 2:
                    continue
                if ep in s.marked or eq in s.marked:
                    continue
                tri = tuple(sorted((p, q, w)))
                if tri in s.triset:
                    continue
                if self.orientable:
                    # new triangle runs y->x, x->w, w->y
                    exw, ewy = _key(x, w), _key(w, y)
                    if s.count.get(exw, 0) == 1 and s.direction[exw] != (w, x):
                        continue
                    if s.count.get(ewy, 0) == 1 and s.direction[ewy] != (y, w):
                        continue
                yield from self._with_triangle(s, p, q, w, x, y)
        if self.allow_boundary:
            if s.bdeg.get(p, 0) < 2 and s.bdeg.get(q, 0) < 2:
                s.marked.add(e)
                s.bdeg[p] = s.bdeg.get(p, 0) + 1
                s.bdeg[q] = s.bdeg.get(q, 0) + 1
                yield
                s.bdeg[p] -= 1
                s.bdeg[q] -= 1
                s.marked.discard(e)

    def _with_triangle(self, s, p, q, w, x, y):
        saved = {v: (dict(s.ends.get(v, {})), s.comps.get(v, 0), v in s.closed)
                 for v in (p, q, w)}
        new_vertex = w == s.nverts
        ok = (self._link_add(s, p, q, w) and self._link_add(s, q, p, w)
              and self._link_add(s, w, p, q))
        if ok:
            tri = tuple(sorted((p, q, w)))
            s.tris.append(tri)
            s.triset.add(tri)
            if new_vertex:
                s.nverts += 1
            old_dir = {}
            for (a, b) in ((y, x), (x, w), (w, y)):
                k = _key(a, b)
                old_dir[k] = s.direction.get(k)
                s.count[k] = s.count.get(k, 0) + 1
                if s.count[k] == 1:
                    s.direction[k] = (a, b)
            yield
            for k, d in old_dir.items():
                s.count[k] -= 1
                if s.count[k] == 0:
                    del s.count[k]
                if d is None:
                    s.direction.pop(k, None)
                else:
                    s.direction[k] = d
            if new_vertex:
                s.nverts -= 1
            s.tris.pop()
            s.triset.discard(tri)
        for v, (E, c, closed) in saved.items():
            s.ends[v] = E
            s.comps[v] = c
            if closed:
                s.closed.add(v)
            else:
                s.closed.discard(v)

    # -- driver -------------------------------------------------------------

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % 512 == 0 and time.monotonic() > self.deadline:
            raise _Timeout

    def _leaf(self, s: _State):
        t = build(s.nverts, s.tris)
        if not t.validation.valid:
            return
        c = classify_surface(t)
        if (c.orientable, c.euler_genus, c.boundary_count) != self.target:
            return
        if self.irreducible_only and contractible_edges(t, exhaustive=True):
            return
        self.found.add(canonical_form(t))

    def dfs(self, s: _State):
        self._tick()
        if s.open_edge() is None:
            self._leaf(s)
            return
        for _ in self._children(s):
            self.dfs(s)

    def frontier(self, s: _State, depth: int, out: list):
        if depth == 0 or s.open_edge() is None:
            out.append(copy.deepcopy(s))
            return
        for _ in self._children(s):
            self.frontier(s, depth - 1, out)


def _run_branch(args):
    spec, deadline, state = args
    search = _Search(spec, deadline)
    try:
        search.dfs(state)
        complete = True
    except _Timeout:
        complete = False
    return search.found, complete


def enumerate_triangulations(spec: EnumSpec, jobs: int = 1) -> Catalog:
    """All isomorphism classes of triangulations of ``spec.target`` with at
    most ``spec.max_vertices`` vertices (irreducible ones only if requested).

    Branches below a fixed depth are independent; ``jobs > 1`` runs them in
    worker processes.  The sorted result does not depend on ``jobs``.
    """
    deadline = None if spec.time_budget is None else time.monotonic() + spec.time_budget
    root = _Search(spec, deadline)
    states: list[_State] = []
    root.frontier(_State(), _FRONTIER_DEPTH, states)
    tasks = [(spec, deadline, st) for st in states]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_branch, tasks))
    else:
        results = [_run_branch(task) for task in tasks]
    found: set[bytes] = set()
    complete = True
    for f, c in results:
        found |= f
        complete &= c
    return Catalog(sorted(found, key=lambda e: (len(e.split(b":", 1)[0]), e)), complete)
