"""
Text formats: triangulation files, catalogs, and audit reports.

A triangulation file is ASCII with LF line endings::

    tri <vertex_count> <triangle_count>
    a b c
    ...

Lines starting with ``#`` are comments.  A catalog is one canonical form per
line.  Reports are JSON with sorted keys.
"""

from __future__ import annotations

import json

from .audit import AuditReport
from .complex import Triangulation, build, from_canonical, require_valid
from .enumeration import Catalog
from .errors import ParseError, TriangulationError


def _text(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("file is not ASCII", line=1) from exc
    return data


def parse_tri(data: bytes | str) -> Triangulation:
    """Parse a triangulation file without validating the complex."""
    lines = [(k, ln.strip()) for k, ln in enumerate(_text(data).split("\n"), 1)]
    lines = [(k, ln) for k, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("missing 'tri' header", line=1)
    k, head = lines[0]
    parts = head.split()
    if len(parts) != 3 or parts[0] != "tri":
        raise ParseError(f"expected 'tri <vertices> <triangles>', got {head!r}", line=k)
    try:
        n, f = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError(f"non-integer count in {head!r}", line=k) from None
    if n < 0 or f < 0:
        raise ParseError("counts must be non-negative", line=k)
    body = lines[1:]
    if len(body) != f:
        raise ParseError(f"header declares {f} triangles, found {len(body)}",
                         line=body[f][0] if len(body) > f else k)
    tris = []
    for k, ln in body:
        parts = ln.split()
        if len(parts) != 3:
            raise ParseError(f"expected three vertex ids, got {ln!r}", line=k)
        try:
            tri = tuple(int(x) for x in parts)
        except ValueError:
            raise ParseError(f"non-integer vertex id in {ln!r}", line=k) from None
        bad = [x for x in tri if not 0 <= x < n]
        if bad:
            raise ParseError(f"vertex id {bad[0]} out of range 0..{n - 1}", line=k)
        if len(set(tri)) != 3:
            raise ParseError(f"repeated vertex in {ln!r}", line=k)
        tris.append(tri)
    try:
        return build(n, tris)
    except TriangulationError as exc:
        raise ParseError(str(exc), line=lines[0][0]) from exc


def read_tri(data: bytes | str) -> Triangulation:
    """Parse and validate; raises ParseError or InvalidTriangulationError."""
    t = parse_tri(data)
    require_valid(t)
    return t


def write_tri(t: Triangulation) -> bytes:
    lines = [f"tri {t.vertex_count} {len(t.triangles)}"]
    lines += [f"{a} {b} {c}" for a, b, c in sorted(t.triangles)]
    return ("\n".join(lines) + "\n").encode("ascii")


def write_catalog(c: Catalog) -> bytes:
    return b"".join(e + b"\n" for e in c.entries)


def read_catalog(data: bytes | str) -> Catalog:
    """Catalog from its text form.  Completeness is not stored and reads as True."""
    if isinstance(data, str):
        data = data.encode("ascii")
    entries = []
    for k, ln in enumerate(data.split(b"\n"), 1):
        if not ln.strip():
            continue
        try:
            from_canonical(ln.strip())
        except (TriangulationError, ValueError) as exc:
            raise ParseError(f"bad catalog entry: {exc}", line=k) from exc
        entries.append(ln.strip())
    return Catalog(entries)


def write_report(r: AuditReport) -> bytes:
    return (json.dumps(r.to_dict(), sort_keys=True, indent=2) + "\n").encode("ascii")
