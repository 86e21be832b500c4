"""Exact maximum matching by branch and bound, for graphs of at most 60 vertices."""

from __future__ import annotations

from .errors import TooLargeError

MAX_VERTICES = 60


def _components(adj, alive):
    seen = set()
    comps = []
    for s in alive:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            for w in adj[stack.pop()] & alive:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def _cover_size(adj, comp):
    """Size of a vertex cover of ``comp``: its complement of a greedy
    maximal independent set."""
    alive = set(comp)
    independent = 0
    for v in sorted(comp, key=lambda x: len(adj[x] & alive)):
        if v in alive:
            independent += 1
            alive -= adj[v]
            alive.discard(v)
    return len(comp) - independent


def _upper_bound(adj, alive):
    # each component contributes min(floor(size/2), any vertex cover size)
    total = 0
    for comp in _components(adj, alive):
        if len(comp) > 1:
            total += min(len(comp) // 2, _cover_size(adj, comp))
    return total


def greedy_matching(adj) -> list[tuple[int, int]]:
    """Maximal matching taking edges in sorted order."""
    covered = set()
    out = []
    for u in range(len(adj)):
        if u in covered:
            continue
        for v in sorted(adj[u]):
            if v > u and v not in covered:
                covered |= {u, v}
                out.append((u, v))
                break
    return out


def maximum_matching_size(adj: list[set[int]]) -> int:
    """Exact matching number of the graph with adjacency sets ``adj``.

    Branching matches a minimum-degree vertex to each of its neighbours in
    turn; leaving it unmatched is never needed, since some maximum matching
    covers any given non-isolated vertex.
    """
    n = len(adj)
    if n > MAX_VERTICES:
        raise TooLargeError(f"{n} vertices exceeds the exact-matching cap of {MAX_VERTICES}")
    adj = [frozenset(a) for a in adj]
    best = len(greedy_matching(adj))

    def search(alive, size):
        nonlocal best
        if size > best:
            best = size
        if size + _upper_bound(adj, alive) <= best:
            return
        live = [v for v in alive if adj[v] & alive]
        if not live:
            return
        v = min(live, key=lambda x: (len(adj[x] & alive), x))
        for u in sorted(adj[v] & alive):
            search(alive - {u, v}, size + 1)

    search(frozenset(range(n)), 0)
    return best


def tutte_berge_deficiency(adj, removed) -> int:
    """``odd(G - U) - |U|``; a lower bound on the number of vertices left
    uncovered by any matching."""
    alive = set(range(len(adj))) - set(removed)
    odd = sum(len(c) % 2 for c in _components([set(a) for a in adj], alive))
    return odd - len(set(removed))
