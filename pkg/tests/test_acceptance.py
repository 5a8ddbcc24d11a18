"""Acceptance battery: ten numbered end-to-end criteria, one summary line each.

Every check is exact (integer/rational arithmetic, zero tolerance). Run with
`pytest -s tests/test_acceptance.py` to see the per-criterion PASS/FAIL lines.
"""

from __future__ import annotations

import time
from itertools import combinations, product

from frobtope import (
    ExactPolytope,
    affine_rank,
    brute_force_facets,
    build_a4,
    build_cyclic,
    build_dihedral,
    build_pq,
    check_frobenius,
    cli,
    coset_span_orthogonality,
    coset_sum,
    enumerate_facets,
    exact,
    face_lattice_from_incidence,
    find_supporting_functional,
    fvector,
    generate_group,
    gram_census,
    is_proper_face,
    kernels,
    relation_coset_constancy,
    vertex_matrices,
)
from frobtope.groups import NotFrobeniusError, Perm

_SYSTEM_CACHE = None


def systems():
    """The seven acceptance systems, built once, in a fixed order."""
    global _SYSTEM_CACHE
    if _SYSTEM_CACHE is None:
        _SYSTEM_CACHE = (
            ("dihedral:3", build_dihedral(3)),
            ("dihedral:5", build_dihedral(5)),
            ("dihedral:7", build_dihedral(7)),
            ("a4", build_a4()),
            ("pq:5,2,4", build_pq(5, 2, 4)),
            ("pq:7,3,2", build_pq(7, 3, 2)),
            ("pq:11,5,3", build_pq(11, 5, 3)),
        )
    return _SYSTEM_CACHE


def points_of(system):
    return [v.entries for v in vertex_matrices(system)]


def _conclude(num, name, start, problems, budget=None):
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed > budget:
        problems.append(f"runtime {elapsed:.2f}s exceeded the {budget}s budget")
    status = "PASS" if not problems else "FAIL"
    print(f"[criterion {num:2d}] {name}: {status} ({elapsed:.2f}s)", flush=True)
    assert not problems, f"criterion {num} ({name}): {problems[:4]}"


def test_criterion_01_dimension_formula():
    start = time.perf_counter()
    problems = []
    for name, system in systems():
        dim, basis = affine_rank(vertex_matrices(system))
        expected = (system.n - 1) * system.h
        if dim != expected:
            problems.append(f"{name}: dim {dim} != (n-1)h = {expected}")
        if dim != system.order - basis.rank - 1:
            problems.append(f"{name}: dim {dim} != t - q - 1")
    _conclude(1, "dimension_formula", start, problems, budget=5.0)


def test_criterion_02_facet_count_and_identity():
    start = time.perf_counter()
    problems = []
    for name, system in systems():
        expected = system.n**system.h
        if expected <= 10_000:
            members = [f.members for f in enumerate_facets(system)]
            count = len(members)
            if len(set(members)) != count:
                problems.append(f"{name}: facet list contains duplicates")
        else:
            count = sum(1 for _ in enumerate_facets(system))
        if count != expected:
            problems.append(f"{name}: {count} facets != n^h = {expected}")
    identity_cases = [
        ("dihedral:3", build_dihedral(3)),
        ("dihedral:5", build_dihedral(5)),
    ] + [(f"cyclic:{n}", build_cyclic(n)) for n in range(1, 7)]
    for name, system in identity_cases:
        combinatorial = {f.members for f in enumerate_facets(system)}
        geometric = set(brute_force_facets(points_of(system)))
        if combinatorial != geometric:
            sym = combinatorial.symmetric_difference(geometric)
            problems.append(f"{name}: facet sets differ, e.g. {sorted(sym)[0]}")
    _conclude(2, "facet_count_and_identity", start, problems, budget=60.0)


def test_criterion_03_fvector_formula_vs_oracle():
    start = time.perf_counter()
    problems = []
    if fvector(3, 2).counts != (1, 6, 15, 18, 9, 1):
        problems.append(f"fvector(3,2) = {fvector(3, 2).counts}")
    lattice_cases = [
        ("dihedral:3", build_dihedral(3)),
        ("dihedral:5", build_dihedral(5)),
    ] + [(f"cyclic:{n}", build_cyclic(n)) for n in range(1, 7)]
    for name, system in lattice_cases:
        points = points_of(system)
        incidence = ExactPolytope(points).incidence()
        oracle_fv = face_lattice_from_incidence(incidence, points).fvector
        formula_fv = fvector(system.n, system.h).counts
        if oracle_fv != formula_fv:
            problems.append(f"{name}: oracle {oracle_fv} != formula {formula_fv}")
    _conclude(3, "fvector_formula_vs_oracle", start, problems, budget=120.0)


def test_criterion_04_gram_census():
    start = time.perf_counter()
    problems = []
    for name, system in systems():
        census = gram_census(system)
        if not census.pattern_ok:
            problems.append(f"{name}: first violations {census.violations}")
    _conclude(4, "gram_census", start, problems, budget=5.0)


def test_criterion_05_coset_sums():
    start = time.perf_counter()
    problems = []
    for name, system in systems():
        ones = tuple((1,) * system.n for _ in range(system.n))
        for c in range(system.h):
            if coset_sum(system, c) != ones:
                problems.append(f"{name}: coset {c} sum is not all-ones")
    _conclude(5, "coset_sums", start, problems)


def test_criterion_06_relation_structure():
    start = time.perf_counter()
    problems = []
    for name, system in systems():
        _, basis = affine_rank(vertex_matrices(system))
        if basis.rank != system.h - 1:
            problems.append(f"{name}: q = {basis.rank} != h - 1 = {system.h - 1}")
        if not relation_coset_constancy(basis, system):
            problems.append(f"{name}: a basis relation is not coset-constant")
    _conclude(6, "relation_structure", start, problems)


def test_criterion_07_coset_orthogonality():
    start = time.perf_counter()
    problems = []
    for name, system in systems():
        if not coset_span_orthogonality(system):
            problems.append(f"{name}: translated coset spans are not orthogonal")
    _conclude(7, "coset_orthogonality", start, problems)


def test_criterion_08_facet_simpliciality():
    start = time.perf_counter()
    problems = []
    # Direct geometric check on the six smaller systems: the affine hull of
    # each facet's vertex set has dimension |facet| - 1.
    for name, system in systems():
        if system.order > 21:
            continue
        poly = ExactPolytope(points_of(system))
        for fd in enumerate_facets(system):
            if poly.subset_dim(fd.members) != len(fd.members) - 1:
                problems.append(f"{name}: facet {fd.members} is affinely dependent")
                break
    # All systems, every facet: a facet omits one transversal T, and an affine
    # dependence among its vertices extends by zeros to a relation vanishing
    # on T; the facet is affinely independent iff no nonzero combination of
    # basis relations vanishes on all of T, i.e. iff the basis restricted to
    # T's columns keeps full rank q.
    for name, system in systems():
        _, basis = affine_rank(vertex_matrices(system))
        rows = [exact.scale_to_integers(rel) for rel in basis.relations]
        q = len(rows)
        n, h = system.n, system.h
        restricted = set()
        for transversal in product(range(n), repeat=h):
            cols = tuple(c * n + k for c, k in enumerate(transversal))
            restricted.add(tuple(tuple(row[col] for col in cols) for row in rows))
        for mat in sorted(restricted):
            if kernels.matrix_rank([list(r) for r in mat]) != q:
                problems.append(
                    f"{name}: a facet admits an affine dependence (restricted basis rank < {q})"
                )
                break
    _conclude(8, "facet_simpliciality", start, problems)


def test_criterion_09_face_characterization_d3():
    start = time.perf_counter()
    problems = []
    system = build_dihedral(3)
    points = points_of(system)
    t = system.order
    for r in range(t + 1):
        for subset in combinations(range(t), r):
            functional = find_supporting_functional(points, subset)
            expected = is_proper_face(system, subset) or len(subset) == t
            if (functional is not None) != expected:
                problems.append(
                    f"subset {subset}: functional "
                    f"{'found' if functional else 'missing'}, expected {expected}"
                )
                continue
            if functional is None:
                continue
            zero = {
                i for i, p in enumerate(points) if functional.evaluate(p) == 0
            }
            if zero != set(subset):
                problems.append(f"subset {subset}: zero set {sorted(zero)}")
            if any(functional.evaluate(p) < 0 for p in points):
                problems.append(f"subset {subset}: functional goes negative")
    _conclude(9, "face_characterization_d3", start, problems, budget=30.0)


def test_criterion_10_negative_controls(capsys):
    start = time.perf_counter()
    problems = []
    s4 = generate_group([Perm((2, 3, 4, 1)), Perm((2, 1, 3, 4))], 4)
    verdict = check_frobenius(s4)
    if verdict.kind != "not_frobenius":
        problems.append(f"S4 verdict {verdict.kind}")
    elif verdict.witness is None or len(verdict.witness.fixed_points()) < 2:
        problems.append("S4 witness missing or fixes fewer than 2 points")
    try:
        build_dihedral(4)
        problems.append("dihedral:4 was accepted")
    except NotFrobeniusError as exc:
        if exc.witness is None or len(exc.witness.fixed_points()) < 2:
            problems.append("dihedral:4 witness missing or fixes fewer than 2 points")
    for spec in ("gens:4;2,3,4,1;2,1,3,4", "dihedral:4"):
        code = cli.main(["info", spec])
        err = capsys.readouterr().err
        if code != 2:
            problems.append(f"CLI exit {code} for {spec}, expected 2")
        if "witness" not in err:
            problems.append(f"CLI stderr for {spec} names no witness")
    with capsys.disabled():
        _conclude(10, "negative_controls", start, problems)
