"""
Vertex bounds for irreducible triangulations and a per-instance auditor.

The auditor recomputes, on a concrete irreducible triangulation, every
quantity the bounds are stated in (degrees, non-null-homotopic 3-cycles,
the boundary-first maximal matching) and records each inequality with its
slack.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from itertools import combinations

from .complex import Triangulation, boundary_walks, canonical_form, edge_key, require_valid
from .contraction import contractible_edges
from .errors import InvalidParamsError, NotIrreducibleError, OutOfHypothesisError, TooLargeError
from .generators import canonical_surface
from .matching import MAX_VERTICES, maximum_matching_size
from .topology import SurfaceClass, _bounds_disk, _cut, _is_annulus, classify_surface, collar, enumerate_3cycles

HOMOTOPY_CLASS_LIMIT = 9


# -- bound formulas ---------------------------------------------------------

def _is_projective_plane(g, b, orientable):
    return g == 1 and b == 0 and not orientable


def thm1_bound(g: int, b: int, orientable: bool) -> int:
    if _is_projective_plane(g, b, orientable):
        return 186
    return 570 * g + 385 * b - 573


def matching_bound(g: int, b: int, orientable: bool) -> int:
    """Largest possible matching without linking edges."""
    if _is_projective_plane(g, b, orientable):
        return 27
    return 81 * g + 54 * b - 81


def closed_bound(g: int) -> int:
    """Vertex bound for closed surfaces of Euler genus g >= 1."""
    if g < 1:
        raise OutOfHypothesisError("closed-surface bound needs g >= 1")
    return {1: 55, 2: 194, 3: 333}.get(g, 163 * g - 164)


def matching_vertex_bound(m: int, w: int, g: int, b: int) -> int:
    return 7 * m + 4 * w + 3 * g + 3 * b - 6


@dataclass(frozen=True)
class BoundTable:
    g: int
    b: int
    orientable: bool
    thm1: int
    prop1_matching: int
    projective_special: bool = False
    thm2_f: int | None = None
    jw_reference: int | None = None


def bound_table(g: int, b: int, orientable: bool) -> BoundTable:
    if g < 0 or b < 0:
        raise InvalidParamsError("g and b must be non-negative")
    if orientable and g % 2:
        raise InvalidParamsError("orientable surfaces have even Euler genus")
    if not orientable and g == 0:
        raise InvalidParamsError("non-orientable surfaces have Euler genus >= 1")
    if g == 0 and b < 2:
        raise OutOfHypothesisError(f"bounds need g >= 1 or b >= 2, got g={g}, b={b}")
    closed = b == 0
    return BoundTable(
        g, b, orientable,
        thm1=thm1_bound(g, b, orientable),
        prop1_matching=matching_bound(g, b, orientable),
        projective_special=_is_projective_plane(g, b, orientable),
        thm2_f=closed_bound(g) if closed else None,
        jw_reference=max(13 * g - 4, 4) if closed else None,
    )


# -- matching certificate ---------------------------------------------------

@dataclass
class MatchingCertificate:
    W: tuple[int, ...]
    M: tuple[tuple[int, int], ...]
    origin: dict = field(default_factory=dict)

    @property
    def size_W(self):
        return len(self.W)

    @property
    def size_M(self):
        return len(self.M)

    def violations(self, t: Triangulation) -> list[str]:
        """Invariant failures of this certificate on ``t`` (empty when sound)."""
        out = []
        covered = [v for e in self.M for v in e]
        if len(covered) != len(set(covered)):
            out.append("M is not a matching")
        covered = set(covered)
        if any(e not in t.edges for e in self.M):
            out.append("M uses a non-edge")
        if any(t.is_linking(e) for e in self.M if e in t.edges):
            out.append("M contains a linking edge")
        if covered & set(self.W):
            out.append("M covers a vertex of W")
        if t.boundary_vertices - covered - set(self.W):
            out.append("a boundary vertex is neither in W nor covered")
        blocked = covered | set(self.W)
        if any(u not in blocked and v not in blocked for u, v in t.edges):
            out.append("M is not maximal among matchings avoiding W")
        return out

    def maximality_witness(self, t: Triangulation) -> dict:
        """For each edge outside M, an endpoint that blocks adding it."""
        blocked = {v for e in self.M for v in e} | set(self.W)
        inM = set(self.M)
        return {e: (e[0] if e[0] in blocked else e[1]) for e in t.edges if e not in inM}


def build_matching_certificate(t: Triangulation) -> MatchingCertificate:
    """One vertex of W per odd boundary walk (its smallest), the rest of each
    walk matched along consecutive boundary edges, then a greedy extension in
    sorted edge order avoiding W."""
    require_valid(t)
    W, M, origin = [], [], {}
    for walk in boundary_walks(t):
        seq = walk
        if len(walk) % 2:
            W.append(walk[0])
            seq = walk[1:]
        for k in range(0, len(seq), 2):
            e = edge_key(seq[k], seq[k + 1])
            M.append(e)
            origin[e] = "boundary"
    blocked = set(W) | {v for e in M for v in e}
    for u, v in t.edges:
        if u not in blocked and v not in blocked:
            M.append((u, v))
            origin[(u, v)] = "extension"
            blocked |= {u, v}
    return MatchingCertificate(tuple(W), tuple(M), origin)


# -- audit ------------------------------------------------------------------

@dataclass
class CheckRecord:
    check_id: str
    name: str
    status: str  # pass, fail, undecided, skipped
    relation: str = ""
    lhs: int | None = None
    rhs: int | None = None
    slack: int | None = None
    witnesses: list = field(default_factory=list)


def _inequality(check_id, name, lhs, relation, rhs, witnesses=()):
    slack = rhs - lhs if relation == "<=" else lhs - rhs
    return CheckRecord(check_id, name, "pass" if slack >= 0 else "fail",
                       relation, lhs, rhs, slack, list(witnesses))


def _skipped(check_id, name, reason):
    return CheckRecord(check_id, name, "skipped", witnesses=[reason])


@dataclass
class AuditReport:
    surface: SurfaceClass | None
    vertex_count: int
    checks: list[CheckRecord] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(c.status == "fail" for c in self.checks)

    def check(self, check_id: str) -> CheckRecord:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def to_dict(self) -> dict:
        return {
            "surface": asdict(self.surface) if self.surface else None,
            "vertex_count": self.vertex_count,
            "verdict": "pass" if self.passed else "fail",
            "checks": [_jsonable(asdict(c)) for c in self.checks],
            "info": _jsonable(self.info),
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, bytes):
        return x.decode("ascii")
    return x


class _CycleOracle:
    """Cached null-homotopy and sidedness answers for cycles of ``t``.

    Cycles touching the boundary are answered on a collared copy.
    """

    def __init__(self, t: Triangulation):
        self.t = collar(t) if t.boundary_vertices else t
        self._null = {}
        self._two_sided = {}

    def null(self, c):
        if c not in self._null:
            self._null[c] = _bounds_disk(self.t, c)
        return self._null[c]

    def two_sided(self, c):
        if c not in self._two_sided:
            self._two_sided[c] = _cut(self.t, [c]).copy_count == 2
        return self._two_sided[c]

    def homotopic_disjoint(self, c1, c2):
        # both non-null-homotopic and two-sided here
        cut = _cut(self.t, [c1, c2])
        return any(sorted(s) == [0, 1] and _is_annulus(comp)
                   for comp, s in zip(cut.components, cut.copy_sources))


def _largest_disjoint_family(cycles):
    sets = [set(c.vertices) for c in cycles]
    best = 0

    def grow(chosen, start):
        nonlocal best
        best = max(best, len(chosen))
        if len(chosen) + len(sets) - start <= best:
            return
        for i in range(start, len(sets)):
            if all(not sets[i] & sets[j] for j in chosen):
                grow(chosen + [i], i + 1)

    grow([], 0)
    return best


def _homotopy_class_check(t, oracle, nonnull):
    two_sided = [c for c in nonnull if oracle.two_sided(c)]
    parent = list(range(len(two_sided)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    undecided = []
    for i, j in combinations(range(len(two_sided)), 2):
        a, b = two_sided[i], two_sided[j]
        if set(a.vertices) & set(b.vertices):
            if not set(a.edges) & set(b.edges):
                undecided.append((a.vertices, b.vertices))
            continue
        if oracle.homotopic_disjoint(a, b):
            parent[find(i)] = find(j)
    classes = defaultdict(list)
    for i, c in enumerate(two_sided):
        classes[find(i)].append(c)
    largest, witness = 0, []
    for members in classes.values():
        size = _largest_disjoint_family(members)
        if size > largest:
            largest, witness = size, [c.vertices for c in members]
    rec = _inequality("g", "homotopy-class-size", largest, "<=", HOMOTOPY_CLASS_LIMIT, witness)
    rec.witnesses = [{"largest_class": witness,
                      "undecided_pairs": len(undecided),
                      "one_sided_skipped": len(nonnull) - len(two_sided)}]
    return rec


def audit(t: Triangulation, *, homotopy_classes: bool = True) -> AuditReport:
    """Run checks (a)-(g) on an irreducible triangulation.

    (a) interior degree >= 4; (b) every non-linking edge on a
    non-null-homotopic 3-cycle; (c) matching size bound; (d) vertex bound in
    terms of the matching; (e) main vertex bound; (f) closed-surface bound;
    (g) homotopic vertex-disjoint 3-cycle families of size <= 9.
    """
    require_valid(t)
    offending = contractible_edges(t)
    if offending:
        raise NotIrreducibleError(f"triangulation has contractible edges, e.g. {offending[0]}")
    cls = classify_surface(t)
    g, b, n = cls.euler_genus, cls.boundary_count, t.vertex_count
    report = AuditReport(cls, n)
    checks = report.checks

    interior = [v for v in range(n) if v not in t.boundary_vertices]
    catalog_mode = cls.is_sphere or cls.is_disk
    if catalog_mode:
        # the degree bound does not cover these; identity with the catalog entry is checked below
        low = min((t.degree(v) for v in interior), default=None)
        checks.append(CheckRecord("a", "interior-degree", "pass", ">=", low, 4, None,
                                  ["not applicable to sphere or disk"]))
    elif interior:
        low = min(t.degree(v) for v in interior)
        checks.append(_inequality("a", "interior-degree", low, ">=", 4,
                                  [v for v in interior if t.degree(v) < 4]))
    else:
        checks.append(CheckRecord("a", "interior-degree", "pass", ">=", None, 4, None,
                                  ["no interior vertices"]))

    cert = build_matching_certificate(t)
    report.info["certificate"] = {"W": list(cert.W), "M": [list(e) for e in cert.M],
                                  "violations": cert.violations(t)}
    if catalog_mode:
        expected = canonical_surface("sphere_min" if cls.is_sphere else "disk_min")
        same = canonical_form(t) == canonical_form(expected)
        checks.append(CheckRecord("catalog", "unique-irreducible", "pass" if same else "fail",
                                  "==", None, None, None, [canonical_form(t)]))
        checks.append(_skipped("b", "noncontractible-3-cycle", "sphere or disk"))
        checks.append(_inequality("c", "matching-size", cert.size_M, "<=", n // 2))
    else:
        table = bound_table(g, b, cls.orientable)
        report.info["bounds"] = asdict(table)
        oracle = _CycleOracle(t)
        by_edge = defaultdict(list)
        for c in enumerate_3cycles(t):
            if not c.facial:
                for e in c.edges:
                    by_edge[e].append(c)
        uncovered = [e for e in t.edges if not t.is_linking(e)
                     and all(oracle.null(c) for c in by_edge[e])]
        checks.append(_inequality("b", "noncontractible-3-cycle", len(uncovered), "<=", 0,
                                  uncovered))
        checks.append(_inequality("c", "matching-size", cert.size_M, "<=", table.prop1_matching))

    checks.append(_inequality("d", "vertices-vs-matching", n, "<=",
                              matching_vertex_bound(cert.size_M, cert.size_W, g, b),
                              cert.violations(t)))
    if catalog_mode:
        checks.append(_skipped("e", "vertex-bound", "sphere or disk"))
    else:
        checks.append(_inequality("e", "vertex-bound", n, "<=", table.thm1))
    if b == 0 and g >= 1:
        checks.append(_inequality("f", "closed-vertex-bound", n, "<=", table.thm2_f))
        report.info["jw_reference"] = table.jw_reference
    else:
        # the check is an implication with a false premise here
        checks.append(CheckRecord("f", "closed-vertex-bound", "pass", "<=", n, None, None,
                                  ["vacuous: needs b = 0 and g >= 1"]))

    if catalog_mode:
        checks.append(_skipped("g", "homotopy-class-size", "sphere or disk"))
    elif homotopy_classes:
        nonnull = sorted({c for cs in by_edge.values() for c in cs if not oracle.null(c)},
                         key=lambda c: c.vertices)
        checks.append(_homotopy_class_check(t, oracle, nonnull))
    else:
        checks.append(_skipped("g", "homotopy-class-size", "disabled"))
    return report


# -- 4-connected closed surfaces --------------------------------------------

def _component_count(t: Triangulation, removed) -> int:
    alive = set(range(t.vertex_count)) - set(removed)
    seen = set()
    count = 0
    for s in alive:
        if s in seen:
            continue
        count += 1
        seen.add(s)
        stack = [s]
        while stack:
            for w in t.neighbors[stack.pop()]:
                if w in alive and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def separating_set(t: Triangulation, max_size: int = 3):
    """Smallest vertex set of size <= max_size whose removal disconnects t, or None."""
    n = t.vertex_count
    for k in range(1, max_size + 1):
        # the neighbourhood of a degree-k vertex is the usual witness
        for v in range(n):
            if len(t.neighbors[v]) == k and n - k >= 2:
                U = tuple(sorted(t.neighbors[v]))
                if _component_count(t, U) > 1:
                    return U
        for U in combinations(range(n), k):
            if n - k >= 2 and _component_count(t, U) > 1:
                return U
    return None


def is_4_connected(t: Triangulation) -> bool:
    return t.vertex_count >= 5 and separating_set(t, 3) is None


def max_matching_exact(t: Triangulation) -> int:
    if t.vertex_count > MAX_VERTICES:
        raise TooLargeError(f"{t.vertex_count} vertices exceeds {MAX_VERTICES}")
    return maximum_matching_size([set(s) for s in t.neighbors])


def check_4connectivity_bounds(t: Triangulation, sample_count: int = 1000,
                               seed: int = 0) -> AuditReport:
    """For a 4-connected closed triangulation: vertex count against the
    maximum matching, and component counts of G - U for random U."""
    require_valid(t)
    cls = classify_surface(t)
    if cls.boundary_count or cls.euler_genus < 1:
        raise OutOfHypothesisError("needs a closed surface with g >= 1")
    n, g = t.vertex_count, cls.euler_genus
    if n > MAX_VERTICES:
        raise TooLargeError(f"{n} vertices exceeds {MAX_VERTICES}")
    report = AuditReport(cls, n)
    sep = separating_set(t, 3) if n >= 5 else ()
    four = sep is None
    report.info["four_connected"] = four
    report.checks.append(CheckRecord("4conn", "four-connected", "pass", witnesses=[sep] if sep else []))
    if not four:
        report.checks.append(_skipped("vb2", "vertices-vs-max-matching", "not 4-connected"))
        report.checks.append(_skipped("conncomp", "components-after-removal", "not 4-connected"))
        return report
    mm = max_matching_exact(t)
    report.info["max_matching"] = mm
    report.checks.append(_inequality("vb2", "vertices-vs-max-matching", n, "<=",
                                     2 * mm + max(1, g - 2)))
    rng = random.Random(seed)
    worst = None
    bad = []
    for _ in range(sample_count):
        U = sorted(rng.sample(range(n), rng.randint(1, min(6, n - 1))))
        comps = _component_count(t, U)
        slack = max(1, len(U) + g - 2) - comps
        if worst is None or slack < worst[0]:
            worst = (slack, comps, max(1, len(U) + g - 2), U)
        if slack < 0:
            bad.append(U)
    rec = _inequality("conncomp", "components-after-removal", worst[1], "<=", worst[2], bad)
    rec.witnesses = [{"samples": sample_count, "tightest": worst[3], "failures": bad}]
    report.checks.append(rec)
    return report
