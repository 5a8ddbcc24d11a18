"""Tests for the compiled/pure kernel pair: agreement, overflow fallback, dispatch."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobtope import exact, kernels
from frobtope.groups import build_dihedral, build_pq


def frac_rank(rows):
    _, pivots = exact.frac_rref([list(r) for r in rows])
    return len(pivots)


@st.composite
def int_matrices(draw):
    nrows = draw(st.integers(1, 5))
    ncols = draw(st.integers(1, 5))
    return [
        [draw(st.integers(-50, 50)) for _ in range(ncols)] for _ in range(nrows)
    ]


@settings(max_examples=150, deadline=None)
@given(int_matrices())
def test_rank_backends_agree_with_fraction_elimination(rows):
    reference = frac_rank(rows)
    assert kernels.matrix_rank_py(rows) == reference
    assert kernels.matrix_rank(rows) == reference
    with kernels.force_pure():
        assert kernels.matrix_rank(rows) == reference


def test_rank_empty_and_zero():
    assert kernels.matrix_rank([]) == 0
    assert kernels.matrix_rank([[0, 0], [0, 0]]) == 0
    assert kernels.matrix_rank_py([[0, 0, 0]]) == 0


def test_rank_known_values():
    assert kernels.matrix_rank([[1, 0], [0, 1]]) == 2
    assert kernels.matrix_rank([[1, 2], [2, 4]]) == 1
    assert kernels.matrix_rank([[2, 0, 0], [0, 3, 0]]) == 2
    assert kernels.matrix_rank([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 2


def test_rank_huge_entries_fall_back_to_big_ints():
    big = 10**30
    rows = [[big, 0, 1], [0, big, 2], [big, big, 4]]
    assert kernels.matrix_rank(rows) == kernels.matrix_rank_py(rows) == 3
    rows_deficient = [[big, 2 * big], [3 * big, 6 * big]]
    assert kernels.matrix_rank(rows_deficient) == 1


def test_rank_overflowing_minors_fall_back():
    # Entries fit the compiled guard but their 2x2 minors do not.
    a = 2**29 - 1
    rows = [[a, a - 1, 1], [a - 2, a, 2], [1, 2, a]]
    assert kernels.matrix_rank(rows) == kernels.matrix_rank_py(rows) == frac_rank(rows)


@pytest.mark.skipif(not kernels.compiled_available(), reason="compiled kernels absent")
def test_compiled_rank_raises_on_guarded_entries():
    from frobtope import _core

    with pytest.raises(OverflowError):
        _core.rank_int([[2**40, 1], [1, 1]])


@pytest.mark.skipif(not kernels.compiled_available(), reason="compiled kernels absent")
def test_compiled_rank_matches_pure_on_moderate_matrices():
    from frobtope import _core

    rows = [[3, 1, 4, 1], [5, 9, 2, 6], [5, 3, 5, 8], [9, 7, 9, 3]]
    assert _core.rank_int(rows) == kernels.matrix_rank_py(rows)


def test_gram_table_backends_agree():
    for system in (build_dihedral(5), build_pq(7, 3, 2)):
        images = [g.images for g in system.elements]
        fast = kernels.gram_table(images)
        pure = kernels.gram_table_py(images)
        assert fast == pure
        t = len(images)
        for a in range(t):
            assert fast[a][a] == system.n
            for b in range(t):
                assert fast[a][b] == fast[b][a]


def test_force_pure_scopes_the_override():
    images = [(1, 2, 3), (2, 3, 1)]
    before = kernels.gram_table(images)
    with kernels.force_pure():
        inside = kernels.gram_table(images)
    after = kernels.gram_table(images)
    assert before == inside == after


def test_backend_constant_is_consistent():
    assert kernels.BACKEND in ("compiled", "pure-python")
    assert (kernels.BACKEND == "compiled") == kernels.compiled_available()
