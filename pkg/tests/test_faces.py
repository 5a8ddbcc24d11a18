"""Tests for facet enumeration, proper-face recognition, and face counting."""

from __future__ import annotations

from itertools import combinations
from math import comb

import pytest

from frobtope import (
    FVector,
    build_cyclic,
    build_dihedral,
    build_pq,
    count_faces_in_dim,
    enumerate_facets,
    face_dim,
    free_sum_lattice,
    fvector,
    is_proper_face,
)


def test_empty_set_is_a_proper_face():
    system = build_dihedral(3)
    assert is_proper_face(system, ())


def test_full_vertex_set_is_not_proper():
    system = build_dihedral(3)
    assert not is_proper_face(system, tuple(range(6)))


def test_full_coset_blocks_properness():
    system = build_dihedral(3)
    # All of coset 0 present -> not proper, regardless of the rest.
    assert not is_proper_face(system, (0, 1, 2))
    assert not is_proper_face(system, (0, 1, 2, 4))
    # Omitting one member from each coset restores properness.
    assert is_proper_face(system, (0, 1, 4))
    assert is_proper_face(system, (0, 1, 3, 4))


def test_is_proper_face_rejects_bad_indices():
    system = build_dihedral(3)
    with pytest.raises(ValueError, match="vertex index"):
        is_proper_face(system, (0, 6))
    with pytest.raises(ValueError, match="vertex index"):
        is_proper_face(system, (-1,))


def test_face_dim_is_cardinality_minus_one():
    system = build_dihedral(3)
    assert face_dim(system, ()) == -1
    assert face_dim(system, (0,)) == 0
    assert face_dim(system, (0, 1, 3, 4)) == 3
    with pytest.raises(ValueError, match="not a proper face"):
        face_dim(system, (0, 1, 2))


def test_enumerate_facets_d3():
    system = build_dihedral(3)
    facets = list(enumerate_facets(system))
    assert len(facets) == 9
    # Transversals are enumerated coset-major; the first omits vertex 0 and 3.
    assert facets[0].members == (1, 2, 4, 5)
    assert facets[1].members == (1, 2, 3, 5)
    assert all(f.dim == 3 for f in facets)
    assert len({f.members for f in facets}) == 9


def test_enumerate_facets_counts():
    for system in (build_dihedral(5), build_pq(7, 3, 2), build_cyclic(6)):
        facets = list(enumerate_facets(system))
        assert len(facets) == system.n**system.h


def test_regular_facets_are_all_maximal_subsets():
    system = build_cyclic(5)
    facets = enumerate_facets(system)
    expected = {tuple(sorted(set(range(5)) - {i})) for i in range(5)}
    assert {f.members for f in facets} == expected


def test_facets_are_proper_and_their_subsets_too():
    system = build_dihedral(3)
    for facet in enumerate_facets(system):
        assert is_proper_face(system, facet.members)
        for r in range(len(facet.members) + 1):
            for sub in combinations(facet.members, r):
                assert is_proper_face(system, sub)


def test_fvector_d3():
    assert fvector(3, 2).counts == (1, 6, 15, 18, 9, 1)


def test_fvector_d5():
    assert fvector(5, 2).counts == (1, 10, 45, 120, 210, 250, 200, 100, 25, 1)


def test_fvector_simplex_case():
    fv = fvector(5, 1)
    assert fv.counts == (1, 5, 10, 10, 5, 1)
    assert all(fv.count(k) == comb(5, k + 1) for k in range(-1, 4))


def test_fvector_point():
    assert fvector(1, 1).counts == (1, 1)


@pytest.mark.parametrize("n,h", [(2, 1), (3, 2), (4, 3), (5, 2), (7, 3), (11, 5)])
def test_fvector_invariants(n, h):
    fv = fvector(n, h)
    top = (n - 1) * h
    assert fv.dim == top
    assert fv.count(-1) == 1
    assert fv.count(top) == 1
    assert fv.count(0) == n * h
    assert fv.count(top - 1) == n**h
    # Euler relation for the boundary complex.
    alternating = sum((-1) ** k * fv.count(k) for k in range(top))
    assert alternating == 1 - (-1) ** top


def test_fvector_large_entries_are_exact():
    fv = fvector(30, 6)
    assert fv.dim == 174
    assert fv.count(173) == 30**6
    assert max(fv.counts) > 2**64
    alternating = sum((-1) ** k * fv.count(k) for k in range(174))
    assert alternating == 1 - (-1) ** 174


def test_fvector_rejects_bad_parameters():
    with pytest.raises(ValueError):
        fvector(0, 1)
    with pytest.raises(ValueError):
        fvector(3, 0)


def test_fvector_count_range():
    fv = fvector(3, 2)
    with pytest.raises(ValueError):
        fv.count(5)
    with pytest.raises(ValueError):
        fv.count(-2)


def test_fvector_as_strings():
    assert fvector(3, 2).as_strings() == ["1", "6", "15", "18", "9", "1"]


def test_fvector_requires_boundary_ones():
    with pytest.raises(ValueError):
        FVector((2, 3, 1))
    with pytest.raises(ValueError):
        FVector((1, 3, 2))


def test_count_faces_in_dim_matches_fvector():
    system = build_dihedral(3)
    fv = fvector(3, 2)
    for k in range(-1, fv.dim + 1):
        assert count_faces_in_dim(system, k) == fv.count(k)


@pytest.mark.parametrize(
    "system_factory,n,h",
    [
        (lambda: build_dihedral(3), 3, 2),
        (lambda: build_cyclic(5), 5, 1),
        (lambda: build_pq(5, 2, 4), 5, 2),
    ],
)
def test_face_counts_match_brute_force_subsets(system_factory, n, h):
    system = system_factory()
    t = system.order
    by_card = [0] * (t + 1)
    for r in range(t + 1):
        for sub in combinations(range(t), r):
            if is_proper_face(system, sub):
                by_card[r] += 1
    fv = fvector(n, h)
    for k in range(-1, fv.dim):
        assert by_card[k + 1] == fv.count(k)


def test_free_sum_single_factor_is_identity():
    fv = fvector(4, 1)
    assert free_sum_lattice([fv]).counts == fv.counts


def test_free_sum_of_two_segments_is_a_square():
    segment = fvector(2, 1)
    assert segment.counts == (1, 2, 1)
    assert free_sum_lattice([segment, segment]).counts == (1, 4, 4, 1)


def test_free_sum_with_a_point_is_identity():
    # A point has no proper nonempty faces, so its factor is the constant 1 --
    # the same convention the closed-form product uses for a one-point orbit.
    fv = fvector(3, 1)
    assert free_sum_lattice([fv, fvector(1, 1)]).counts == fv.counts


@pytest.mark.parametrize("n,h", [(2, 2), (3, 2), (3, 3), (4, 2), (5, 2), (7, 3)])
def test_free_sum_of_simplices_matches_closed_form(n, h):
    simplex = fvector(n, 1)
    assert free_sum_lattice([simplex] * h).counts == fvector(n, h).counts


def test_free_sum_needs_at_least_one_part():
    with pytest.raises(ValueError):
        free_sum_lattice([])
