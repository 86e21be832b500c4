import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trisurf.audit import audit
from trisurf.complex import canonical_form
from trisurf.enumeration import Catalog
from trisurf.errors import InvalidTriangulationError, ParseError
from trisurf.generators import SURFACE_NAMES, canonical_surface, figure1, refine
from trisurf.persistence import (parse_tri, read_catalog, read_tri, write_catalog, write_report,
                                 write_tri)

TETRA_FILE = b"tri 4 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n"


def test_read_single_triangle():
    t = read_tri(b"tri 3 1\n0 1 2\n")
    assert (t.vertex_count, t.triangles) == (3, ((0, 1, 2),))


def test_read_tetrahedron_and_round_trip():
    t = read_tri(TETRA_FILE)
    assert t == canonical_surface("sphere_min")
    assert write_tri(t) == TETRA_FILE


def test_range_error_reports_line():
    with pytest.raises(ParseError) as exc:
        read_tri(b"tri 4 1\n0 1 9\n")
    assert exc.value.line == 2
    assert str(exc.value).startswith("line 2:")


@pytest.mark.parametrize("data, line", [
    (b"", 1),
    (b"tri 3\n0 1 2\n", 1),
    (b"tri x 1\n0 1 2\n", 1),
    (b"tri 3 2\n0 1 2\n", 1),
    (b"tri 3 1\n0 1 2\n0 1 2\n", 3),
    (b"# header comment\ntri 3 1\n\n0 1\n", 4),
    (b"tri 3 1\n0 1 a\n", 2),
    (b"tri 3 1\n0 1 1\n", 2),
    (b"tri 3 1\n0 1 -1\n", 2),
])
def test_parse_errors_are_positional(data, line):
    with pytest.raises(ParseError) as exc:
        read_tri(data)
    assert exc.value.line == line


def test_comments_and_blank_lines_ignored():
    t = read_tri(b"# a disk\ntri 3 1\n# the face\n2 0 1\n\n")
    assert t.triangles == ((0, 1, 2),)


def test_invalid_complex_raises_validation_error():
    data = b"tri 5 2\n0 1 2\n0 3 4\n"
    with pytest.raises(InvalidTriangulationError):
        read_tri(data)
    assert parse_tri(data).vertex_count == 5


def test_write_sorts_triangles():
    t = read_tri(b"tri 4 4\n1 2 3\n0 2 3\n3 1 0\n0 1 2\n")
    assert write_tri(t) == TETRA_FILE


@settings(max_examples=30, deadline=None)
@given(name=st.sampled_from(SURFACE_NAMES), steps=st.integers(0, 20), seed=st.integers(0, 999))
def test_round_trip_identity(name, steps, seed):
    t = refine(canonical_surface(name), steps, seed=seed)
    data = write_tri(t)
    back = read_tri(data)
    assert (back.vertex_count, sorted(back.triangles)) == (t.vertex_count, sorted(t.triangles))
    assert write_tri(read_tri(data)) == data
    assert data.endswith(b"\n") and b"\r" not in data


def test_catalog_single_line():
    c = Catalog([canonical_form(canonical_surface("sphere_min"))])
    data = write_catalog(c)
    assert data == b"4:0 1 2,0 1 3,0 2 3,1 2 3\n"
    assert read_catalog(data).entries == c.entries


def test_catalog_bad_line():
    with pytest.raises(ParseError) as exc:
        read_catalog(b"4:0 1 2,0 1 3,0 2 3,1 2 3\nnot a form\n")
    assert exc.value.line == 2


def test_report_json_figure1():
    data = write_report(audit(figure1(4, 3)))
    doc = json.loads(data)
    assert [c["check_id"] for c in doc["checks"]] == list("abcdefg")
    assert all(c["status"] == "pass" for c in doc["checks"])
    assert doc["verdict"] == "pass"
    assert data == write_report(audit(figure1(4, 3)))
    assert data == (json.dumps(doc, sort_keys=True, indent=2) + "\n").encode()
