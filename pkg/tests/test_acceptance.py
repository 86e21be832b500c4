"""
Acceptance criteria, one test each.  Every test prints a single
``PASS``/``FAIL`` line; the lines are repeated in the pytest terminal summary.

Run alone with::

    pytest tests/test_acceptance.py -v
"""

import io
import time

import conftest
from trisurf.audit import audit, bound_table, check_4connectivity_bounds, closed_bound
from trisurf.cli import run as cli_run
from trisurf.complex import canonical_form, validate
from trisurf.contraction import (contract, contractible_edges, is_contractible, link_condition,
                                 reduce_to_irreducible)
from trisurf.enumeration import SURFACES, EnumSpec, enumerate_triangulations
from trisurf.generators import canonical_surface, figure1
from trisurf.persistence import write_catalog, write_report, write_tri
from trisurf.topology import (classify_surface, collar, cut_along_cycle, enumerate_3cycles,
                              is_null_homotopic, surface_class)

from corpus import (FIGURE1_PARAMS, disk_instance, figure1_corpus, reduced_corpus,
                    sphere_instance)

TETRA_FORM = canonical_form(canonical_surface("sphere_min"))
TRIANGLE_FORM = canonical_form(canonical_surface("disk_min"))


def verdict(number, title, ok, detail, elapsed):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2} {title}: {detail} [{elapsed:.1f}s]"
    print(line)
    conftest.ACCEPTANCE_LINES.append(line)
    assert ok, line


def _kind(t):
    c = classify_surface(t)
    return c.orientable, c.euler_genus, c.boundary_count


def test_criterion_01_sphere_reductions():
    start = time.monotonic()
    wrong = []
    sizes = []
    for seed in range(500):
        t = sphere_instance(seed)
        sizes.append(t.vertex_count)
        r, _ = reduce_to_irreducible(t, policy="random", seed=seed)
        if canonical_form(r) != TETRA_FORM:
            wrong.append(seed)
    elapsed = time.monotonic() - start
    verdict(1, "sphere uniqueness", not wrong and elapsed < 120 and max(sizes) <= 60,
            f"{500 - len(wrong)}/500 reduce to the tetrahedron, {min(sizes)}-{max(sizes)} "
            f"vertices", elapsed)


def test_criterion_02_disk_reductions():
    start = time.monotonic()
    wrong = [seed for seed in range(200)
             if canonical_form(reduce_to_irreducible(disk_instance(seed), policy="random",
                                                     seed=seed)[0]) != TRIANGLE_FORM]
    elapsed = time.monotonic() - start
    verdict(2, "disk uniqueness", not wrong and elapsed < 60,
            f"{200 - len(wrong)}/200 reduce to a single triangle", elapsed)


def test_criterion_03_figure1_family():
    start = time.monotonic()
    bad = []
    for g, b in FIGURE1_PARAMS:
        for seed in range(3):
            t = figure1(g, b, diagonal_seed=seed)
            ok = (validate(t).valid
                  and classify_surface(t) == surface_class(True, g, b)
                  and t.vertex_count == 5 * g // 2 + 4 * b - 2
                  and t.boundary_vertices == set(range(t.vertex_count))
                  and contractible_edges(t, exhaustive=True) == [])
            if not ok:
                bad.append((g, b, seed))
    elapsed = time.monotonic() - start
    verdict(3, "boundary-only family", not bad and elapsed < 60,
            f"{len(FIGURE1_PARAMS)} (g,b) pairs x 3 diagonal seeds, failures {bad}", elapsed)


def test_criterion_04_audit_corpus():
    start = time.monotonic()
    instances = [(f"{name}/{seed}", r) for name, seed, _, r, _ in reduced_corpus()]
    instances += [(f"figure1{gb}/{s}", t) for gb, s, t in figure1_corpus()]
    failures = []
    tightest = None
    for label, t in instances:
        report = audit(t)
        for c in report.checks:
            if c.check_id not in "abcdef":
                continue
            if c.status == "fail" or (c.slack is not None and c.slack < 0):
                failures.append((label, c.check_id))
            if c.check_id == "d" and (tightest is None or c.slack < tightest[0]):
                tightest = (c.slack, label)
        if report.check("g").status == "fail":
            failures.append((label, "g"))
    elapsed = time.monotonic() - start
    n_reduced = len(reduced_corpus())
    verdict(4, "bounds audit", not failures and n_reduced >= 100 and elapsed < 600,
            f"{n_reduced} reduced + {len(instances) - n_reduced} boundary-only family instances, "
            f"failures {failures[:5]}, tightest (d) slack {tightest}", elapsed)


def test_criterion_05_closed_bound_table():
    start = time.monotonic()
    values = [closed_bound(g) for g in (1, 2, 3, 4)]
    recursion_ok = all(
        closed_bound(g) == max([163 * g - 164] + [closed_bound(a) + closed_bound(g - a) + 84
                                                  for a in range(1, g)])
        for g in range(4, 11)
    ) and all(closed_bound(g) >= max(closed_bound(a) + closed_bound(g - a) + 84
                                     for a in range(1, g)) for g in range(2, 11))
    table_ok = bound_table(2, 0, True).thm2_f == 194 and bound_table(1, 0, False).thm2_f == 55
    elapsed = time.monotonic() - start
    verdict(5, "closed-surface table", values == [55, 194, 333, 488] and recursion_ok
            and table_ok and elapsed < 1, f"f(1..4) = {values}, recursion 2..10 ok={recursion_ok}",
            elapsed)


def test_criterion_06_projective_catalog():
    start = time.monotonic()
    catalog = enumerate_triangulations(EnumSpec(SURFACES["projective"], 8, True,
                                                time_budget=1800))
    elapsed = time.monotonic() - start
    verdict(6, "projective-plane catalog", catalog.complete and len(catalog) == 2,
            f"{len(catalog)} classes with {catalog.vertex_counts} vertices, "
            f"complete={catalog.complete}", elapsed)


def test_criterion_07_oracle_predicate_agreement():
    start = time.monotonic()
    instances = [t for _, _, t, r, _ in reduced_corpus() for t in (t, r)]
    instances += [t for _, _, t in figure1_corpus()]
    edges = 0
    mismatches = []
    for t in instances:
        for e in t.edges:
            oracle = is_contractible(t, e)
            if oracle and not link_condition(t, e):
                mismatches.append(("oracle without link", e))
            if t.vertex_count >= 5:
                edges += 1
                predicate = link_condition(t, e) and validate(contract(t, e)).valid
                if predicate != oracle:
                    mismatches.append(("predicate", e))
    elapsed = time.monotonic() - start
    verdict(7, "oracle/predicate agreement", not mismatches and elapsed < 300,
            f"{edges} edges on {len(instances)} instances, {len(mismatches)} discrepancies",
            elapsed)


def test_criterion_08_topology_invariants():
    start = time.monotonic()
    violations = []
    cuts = contractions = facial = 0
    for name, seed, t, r, trace in reduced_corpus():
        cur = t
        for step in trace.steps:
            nxt = contract(cur, step.edge)
            contractions += 1
            if _kind(nxt) != _kind(cur):
                violations.append(("contraction", name, seed))
            cur = nxt
        host = collar(r) if r.boundary_vertices else r
        for c in enumerate_3cycles(r):
            # the collar makes every original vertex interior
            cut = cut_along_cycle(host, c.vertices)
            cuts += 1
            base = host.euler_characteristic
            if sum(comp.euler_characteristic for comp in cut.components) != base:
                violations.append(("cut", name, seed, c.vertices))
            if c.facial:
                facial += 1
                if not is_null_homotopic(r, c.vertices, allow_boundary=True):
                    violations.append(("facial", name, seed, c.vertices))
    elapsed = time.monotonic() - start
    verdict(8, "topology invariants", not violations,
            f"{cuts} cuts, {contractions} contractions, {facial} facial cycles, "
            f"{len(violations)} violations", elapsed)


def test_criterion_09_four_connected_bounds():
    start = time.monotonic()
    checked = 0
    failures = []
    seen = set()
    for name, seed, t, r, _ in reduced_corpus():
        for x in (t, r):
            cls = classify_surface(x)
            code = canonical_form(x)
            if cls.boundary_count or cls.euler_genus < 1 or x.vertex_count > 60 or code in seen:
                continue
            seen.add(code)
            report = check_4connectivity_bounds(x, sample_count=1000, seed=seed)
            if report.info["four_connected"]:
                checked += 1
                if not report.passed:
                    failures.append((name, seed, x.vertex_count))
    elapsed = time.monotonic() - start
    verdict(9, "4-connected closed surfaces", not failures and checked > 0 and elapsed < 600,
            f"{checked} 4-connected instances x 1000 samples, failures {failures}", elapsed)


def _cli(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli_run(argv, out, err)
    return code, out.getvalue()


def test_criterion_10_determinism():
    start = time.monotonic()
    differences = []
    for name, seed, t, _, _ in reduced_corpus()[::10]:
        a = write_tri(reduce_to_irreducible(t)[0])
        b = write_tri(reduce_to_irreducible(t)[0])
        if a != b:
            differences.append(("reduce", name, seed))
        if write_report(audit(reduce_to_irreducible(t)[0])) != \
                write_report(audit(reduce_to_irreducible(t)[0])):
            differences.append(("report", name, seed))
    for surface, cap in [("projective", 8), ("mobius", 6), ("sphere", 8)]:
        spec = EnumSpec(SURFACES[surface], cap)
        outputs = {write_catalog(enumerate_triangulations(spec, jobs=j)) for j in (1, 1, 2)}
        if len(outputs) != 1:
            differences.append(("enumerate", surface))
    runs = [_cli(["enumerate", "--surface", "projective", "--max-vertices", "7",
                  "--jobs", str(j)]) for j in (1, 2, 1)]
    if len(set(runs)) != 1:
        differences.append(("cli enumerate",))
    gen = {_cli(["generate", "surface", "torus_k7", "--refine", "30", "--seed", "5"])
           for _ in range(2)}
    if len(gen) != 1:
        differences.append(("cli generate",))
    elapsed = time.monotonic() - start
    verdict(10, "determinism", not differences,
            f"reduce, audit report, enumerate (jobs 1/2) and CLI output compared; "
            f"differences {differences}", elapsed)
