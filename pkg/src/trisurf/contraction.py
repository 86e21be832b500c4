"""Edge contraction, contractibility, and reduction to irreducible triangulations."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .complex import Edge, Triangulation, build, canonical_form, edge_key, require_valid
from .errors import LinkingEdgeError, NoSuchEdgeError
from .topology import classify_surface


def _edge(t: Triangulation, e) -> Edge:
    u, v = e
    key = edge_key(u, v)
    if key not in t.edges:
        raise NoSuchEdgeError(f"{tuple(e)} is not an edge")
    return key


def contraction_survivor(t: Triangulation, e) -> int:
    """Vertex that ``e`` is contracted onto: the boundary endpoint if exactly
    one endpoint is on the boundary, otherwise the smaller id."""
    u, v = _edge(t, e)
    bu, bv = u in t.boundary_vertices, v in t.boundary_vertices
    if bv and not bu:
        return v
    return u


def contract(t: Triangulation, e) -> Triangulation:
    """Identify the endpoints of ``e``; the result is not validated.

    Vertex ids above the removed one shift down by one.
    """
    u, v = _edge(t, e)
    if t.is_linking((u, v)):
        raise LinkingEdgeError(f"{(u, v)} is a linking edge")
    keep = contraction_survivor(t, (u, v))
    drop = v if keep == u else u

    def rename(x):
        if x == drop:
            x = keep
        return x - 1 if x > drop else x

    tris = [tuple(rename(x) for x in tri) for tri in t.triangles if not (u in tri and v in tri)]
    return build(t.vertex_count - 1, tris)


def link_condition(t: Triangulation, e) -> bool:
    """Non-linking, and the common neighbours of the endpoints are exactly
    the apexes of the triangles on ``e``."""
    u, v = _edge(t, e)
    if t.is_linking((u, v)):
        return False
    return t.neighbors[u] & t.neighbors[v] == set(t.apexes((u, v)))


def is_contractible(t: Triangulation, e) -> bool:
    """Contract, then check the result is a valid triangulation of the same surface."""
    u, v = _edge(t, e)
    if t.is_linking((u, v)):
        return False
    s = contract(t, (u, v))
    if not s.validation.valid:
        return False
    before, after = classify_surface(t), classify_surface(s)
    return (before.orientable, before.euler_genus, before.boundary_count) == \
        (after.orientable, after.euler_genus, after.boundary_count)


def contractible_edges(t: Triangulation, *, exhaustive: bool = False) -> list[Edge]:
    """Edges accepted by :func:`is_contractible`.

    The link condition is necessary for contractibility, so by default it is
    used to skip oracle calls; ``exhaustive=True`` runs the oracle on every edge.
    """
    require_valid(t)
    if exhaustive:
        return [e for e in t.edges if is_contractible(t, e)]
    return [e for e in t.edges if link_condition(t, e) and is_contractible(t, e)]


def is_irreducible(t: Triangulation) -> bool:
    require_valid(t)
    return not any(link_condition(t, e) and is_contractible(t, e) for e in t.edges)


@dataclass(frozen=True)
class ContractionStep:
    edge: Edge
    survivor: int
    note: str


@dataclass
class ContractionTrace:
    initial: bytes
    final: bytes = b""
    steps: list[ContractionStep] = field(default_factory=list)

    def replay(self, t: Triangulation) -> Triangulation:
        for step in self.steps:
            t = contract(t, step.edge)
        return t

    def summary(self) -> str:
        return f"{len(self.steps)} contractions"


def reduce_to_irreducible(t: Triangulation, policy: str = "first",
                          seed: int = 0) -> tuple[Triangulation, ContractionTrace]:
    """Contract contractible edges until none is left.

    ``policy="first"`` always takes the smallest contractible edge (by sorted
    endpoints); ``policy="random"`` takes a uniformly random one using ``seed``.
    """
    require_valid(t)
    if policy not in ("first", "random"):
        raise ValueError(f"unknown policy {policy!r}")
    rng = random.Random(seed)
    note = "first" if policy == "first" else f"random({seed})"
    trace = ContractionTrace(initial=canonical_form(t))
    while True:
        order = list(t.edges)
        if policy == "random":
            rng.shuffle(order)
        for e in order:
            if link_condition(t, e) and is_contractible(t, e):
                trace.steps.append(ContractionStep(e, contraction_survivor(t, e), note))
                t = contract(t, e)
                break
        else:
            break
    trace.final = canonical_form(t)
    return t, trace
