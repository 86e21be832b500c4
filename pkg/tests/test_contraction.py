import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trisurf.complex import build, canonical_form, validate
from trisurf.contraction import (contract, contractible_edges, contraction_survivor,
                                 is_contractible, is_irreducible, link_condition,
                                 reduce_to_irreducible)
from trisurf.errors import LinkingEdgeError, NoSuchEdgeError
from trisurf.generators import barycentric_subdivision, canonical_surface, figure1, refine
from trisurf.topology import classify_surface

from corpus import base_surfaces, disk_instance

TETRA = canonical_surface("sphere_min")
OCTA = canonical_surface("octahedron")
K7 = canonical_surface("torus_k7")
STRIP = build(4, [(0, 1, 2), (1, 2, 3)])


def same_surface(a, b):
    ca, cb = classify_surface(a), classify_surface(b)
    return (ca.orientable, ca.euler_genus, ca.boundary_count) == \
        (cb.orientable, cb.euler_genus, cb.boundary_count)


def test_octahedron_interior_contraction_counts():
    for e in OCTA.edges:
        s = contract(OCTA, e)
        assert (s.vertex_count, s.edge_count, s.face_count) == (5, 9, 6)
        assert s.euler_characteristic == 2


def test_strip_boundary_edge_contraction():
    s = contract(STRIP, (0, 1))
    assert (s.vertex_count, s.triangles) == (3, ((0, 1, 2),))
    assert is_contractible(STRIP, (0, 1))


def test_strip_linking_edge_rejected():
    with pytest.raises(LinkingEdgeError):
        contract(STRIP, (1, 2))
    assert not link_condition(STRIP, (1, 2))
    assert not is_contractible(STRIP, (1, 2))


def test_missing_edge():
    with pytest.raises(NoSuchEdgeError):
        contract(OCTA, (0, 1))
    with pytest.raises(NoSuchEdgeError):
        link_condition(OCTA, (0, 1))


def test_survivor_prefers_boundary_endpoint():
    # vertex 4 is the interior vertex of a wheel around it
    wheel = build(5, [(0, 1, 4), (1, 2, 4), (2, 3, 4), (0, 3, 4)])
    assert contraction_survivor(wheel, (0, 4)) == 0
    assert contraction_survivor(wheel, (3, 4)) == 3
    s = contract(wheel, (3, 4))
    assert s.vertex_count == 4 and validate(s).valid


def test_link_condition_examples():
    assert all(link_condition(OCTA, e) for e in OCTA.edges)
    assert all(link_condition(TETRA, e) for e in TETRA.edges)
    assert not any(link_condition(K7, e) for e in K7.edges)


def test_oracle_examples():
    assert not any(is_contractible(TETRA, e) for e in TETRA.edges)
    single = canonical_surface("disk_min")
    assert not any(is_contractible(single, e) for e in single.edges)
    assert contractible_edges(OCTA) == sorted(OCTA.edges)
    assert len(contractible_edges(OCTA, exhaustive=True)) == 12
    assert contractible_edges(TETRA) == []
    assert contractible_edges(figure1(4, 3), exhaustive=True) == []


def test_reduce_icosahedron_to_tetrahedron():
    r, trace = reduce_to_irreducible(canonical_surface("icosahedron"))
    assert canonical_form(r) == canonical_form(TETRA)
    assert len(trace.steps) == 8


def test_reduce_disks_to_single_triangle():
    for seed in range(10):
        r, _ = reduce_to_irreducible(disk_instance(seed), policy="random", seed=seed)
        assert r.triangles == ((0, 1, 2),)


def test_reduce_barycentric_torus():
    r, _ = reduce_to_irreducible(barycentric_subdivision(K7))
    assert is_irreducible(r)
    assert classify_surface(r) == classify_surface(K7)
    assert r.vertex_count <= max(13 * 2 - 4, 4)


def test_trace_replay_and_strict_decrease():
    t = refine(base_surfaces()["klein"], 25, seed=4)
    r, trace = reduce_to_irreducible(t, policy="random", seed=9)
    assert trace.replay(t) == r
    assert trace.initial == canonical_form(t) and trace.final == canonical_form(r)
    cur = t
    for step in trace.steps:
        nxt = contract(cur, step.edge)
        assert nxt.vertex_count == cur.vertex_count - 1
        assert same_surface(cur, nxt)
        cur = nxt
    assert trace.summary() == f"{len(trace.steps)} contractions"


def test_first_policy_is_deterministic():
    t = refine(K7, 30, seed=2)
    a, ta = reduce_to_irreducible(t)
    b, tb = reduce_to_irreducible(t)
    assert a == b and ta.steps == tb.steps


def test_first_policy_takes_smallest_contractible_edge():
    t = refine(K7, 10, seed=5)
    _, trace = reduce_to_irreducible(t)
    assert trace.steps[0].edge == contractible_edges(t, exhaustive=True)[0]


def test_unknown_policy():
    with pytest.raises(ValueError):
        reduce_to_irreducible(TETRA, policy="greedy")


@settings(max_examples=30, deadline=None)
@given(name=st.sampled_from(list(base_surfaces())), seed=st.integers(0, 10_000),
       steps=st.integers(0, 15))
def test_oracle_implies_link_condition(name, seed, steps):
    t = refine(base_surfaces()[name], steps, seed=seed)
    for e in t.edges:
        if is_contractible(t, e):
            assert link_condition(t, e)
        if t.vertex_count >= 5:
            predicate = link_condition(t, e) and validate(contract(t, e)).valid
            assert predicate == is_contractible(t, e)


@settings(max_examples=20, deadline=None)
@given(name=st.sampled_from([n for n in base_surfaces() if n != "sphere"]),
       seed=st.integers(0, 10_000), steps=st.integers(5, 30))
def test_reduction_output_irreducible_with_interior_degree_four(name, seed, steps):
    t = refine(base_surfaces()[name], steps, seed=seed)
    r, _ = reduce_to_irreducible(t, policy="random", seed=seed)
    assert contractible_edges(r, exhaustive=True) == []
    assert same_surface(r, t)
    assert all(r.degree(v) >= 4 for v in range(r.vertex_count) if v not in r.boundary_vertices)
