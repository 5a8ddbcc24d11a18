"""Embedding of group elements as 0/1 permutation matrices in R^(n x n).

The matrix of g has a 1 in cell (i, j) exactly when g(j) = i, so matrix
multiplication matches composition. All derived quantities (ranks, relation
bases, barycenters, inner products) are exact: integers and Fractions only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import exact, kernels
from .groups import FrobeniusSystem, Perm

__all__ = [
    "VertexMatrix",
    "to_matrix",
    "vertex_matrices",
    "all_ones",
    "coset_sum",
    "gram",
    "GramCensus",
    "gram_census",
    "AffineRelationBasis",
    "affine_rank",
    "is_affine_relation",
    "relation_coset_constancy",
    "barycenter",
    "coset_span_orthogonality",
]

Matrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class VertexMatrix:
    """The permutation matrix of a group element, with its source permutation."""

    entries: Matrix
    source: Perm

    def __post_init__(self):
        n = self.source.degree
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError(f"entries are not {n} x {n}")
        for j in range(1, n + 1):
            i = self.source(j)
            col = [self.entries[r][j - 1] for r in range(n)]
            if col[i - 1] != 1 or sum(col) != 1:
                raise ValueError(
                    f"column {j} does not encode the image {i} of {self.source.one_line()}"
                )

    @property
    def degree(self) -> int:
        return self.source.degree

    def flat(self) -> Tuple[int, ...]:
        return tuple(x for row in self.entries for x in row)


def to_matrix(p: Perm) -> VertexMatrix:
    """0/1 matrix with a 1 at (i, j) iff p(j) = i."""
    n = p.degree
    rows = [[0] * n for _ in range(n)]
    for j in range(1, n + 1):
        rows[p(j) - 1][j - 1] = 1
    return VertexMatrix(entries=tuple(tuple(r) for r in rows), source=p)


def vertex_matrices(system: FrobeniusSystem) -> List[VertexMatrix]:
    """Vertex matrices in the system's canonical coset-major element order."""
    return [to_matrix(g) for g in system.elements]


def all_ones(n: int) -> Matrix:
    return tuple((1,) * n for _ in range(n))


def coset_sum(system: FrobeniusSystem, coset_index: int) -> Matrix:
    """Entrywise sum of the matrices of one coset; all-ones for a Frobenius coset."""
    n = system.n
    total = [[0] * n for _ in range(n)]
    for idx in system.coset_indices(coset_index):
        g = system.elements[idx]
        for j in range(1, n + 1):
            total[g(j) - 1][j - 1] += 1
    return tuple(tuple(r) for r in total)


def gram(a: VertexMatrix, b: VertexMatrix) -> int:
    """Entrywise inner product of two vertex matrices (= agreement count)."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return sum(x == y for x, y in zip(a.source.images, b.source.images))


@dataclass(frozen=True)
class GramCensus:
    """Census of all ordered inner products <g, g'> over a system's vertices.

    The expected pattern: n on the diagonal, 0 for distinct elements of the
    same coset, 1 across cosets.
    """

    degree: int
    order: int
    diagonal_pairs: int
    same_coset_pairs: int
    cross_coset_pairs: int
    pattern_ok: bool
    violations: Tuple[Tuple[int, int, int], ...]


def gram_census(system: FrobeniusSystem) -> GramCensus:
    """Tabulate every pairwise inner product and compare with the coset pattern."""
    n = system.n
    elements = system.elements
    table = kernels.gram_table([g.images for g in elements])
    diagonal = same = cross = 0
    violations: List[Tuple[int, int, int]] = []
    for a in range(len(elements)):
        ca = system.coset_of_index(a)
        for b in range(len(elements)):
            value = table[a][b]
            if a == b:
                diagonal += 1
                expected = n
            elif ca == system.coset_of_index(b):
                same += 1
                expected = 0
            else:
                cross += 1
                expected = 1
            if value != expected and len(violations) < 5:
                violations.append((a, b, value))
    return GramCensus(
        degree=n,
        order=system.order,
        diagonal_pairs=diagonal,
        same_coset_pairs=same,
        cross_coset_pairs=cross,
        pattern_ok=not violations,
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class AffineRelationBasis:
    """Basis of the affine relations among a vertex list.

    Each relation a satisfies sum(a) = 0 and sum(a_g * matrix_g) = 0; the
    basis vectors are linearly independent by construction.
    """

    relations: Tuple[Tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.relations)


def _lifted_rows(vertices: Sequence[VertexMatrix]) -> List[List[int]]:
    return [list(v.flat()) + [1] for v in vertices]


def affine_rank(vertices: Sequence[VertexMatrix]) -> Tuple[int, AffineRelationBasis]:
    """Affine dimension of a vertex list plus a basis of its affine relations.

    dim = t - q - 1 where t is the vertex count and q the number of
    independent affine relations.
    """
    if not vertices:
        raise ValueError("affine_rank needs at least one vertex")
    rows = _lifted_rows(vertices)
    t = len(rows)
    rank = kernels.matrix_rank(rows)
    width = len(rows[0])
    transpose = [[rows[r][c] for r in range(t)] for c in range(width)]
    basis = exact.nullspace(transpose, t)
    if len(basis) != t - rank:
        raise AssertionError(
            f"nullspace size {len(basis)} disagrees with rank computation {t - rank}"
        )
    dim = rank - 1
    return dim, AffineRelationBasis(relations=tuple(basis))


def is_affine_relation(
    vertices: Sequence[VertexMatrix], coeffs: Sequence[Fraction]
) -> bool:
    """Exact check that coeffs is an affine relation of the vertex list."""
    if len(coeffs) != len(vertices):
        raise ValueError(f"{len(coeffs)} coefficients for {len(vertices)} vertices")
    coeffs = [Fraction(c) for c in coeffs]
    if sum(coeffs) != 0:
        return False
    n = vertices[0].degree
    total = [[Fraction(0)] * n for _ in range(n)]
    for c, v in zip(coeffs, vertices):
        if c == 0:
            continue
        for i in range(n):
            row = v.entries[i]
            for j in range(n):
                if row[j]:
                    total[i][j] += c
    return all(x == 0 for row in total for x in row)


def relation_coset_constancy(
    basis: AffineRelationBasis, system: FrobeniusSystem
) -> bool:
    """True when every basis relation is constant on each coset block.

    Relations are indexed by the system's canonical coset-major element order.
    """
    n = system.n
    for rel in basis.relations:
        if len(rel) != system.order:
            raise ValueError(
                f"relation has {len(rel)} coefficients, system order is {system.order}"
            )
        for c in range(system.h):
            block = rel[c * n : (c + 1) * n]
            if any(x != block[0] for x in block):
                return False
    return True


def barycenter(system: FrobeniusSystem) -> Tuple[Tuple[Fraction, ...], ...]:
    """Common barycenter of every coset and of the whole vertex set: (1/n) * all-ones."""
    n = system.n
    value = Fraction(1, n)
    return tuple((value,) * n for _ in range(n))


def coset_span_orthogonality(system: FrobeniusSystem) -> bool:
    """Exact orthogonality of barycenter-translated vertices across distinct cosets.

    Checks <g - B, g' - B> = 0 for all g, g' in different cosets, where B is
    the barycenter; computed in integers scaled by n (entry -> n*entry - 1).
    """
    if system.h == 1:
        return True
    n = system.n
    scaled: List[Tuple[int, ...]] = []
    for g in system.elements:
        mat = to_matrix(g)
        scaled.append(tuple(n * x - 1 for x in mat.flat()))
    for c1 in range(system.h):
        for c2 in range(c1 + 1, system.h):
            for a in system.coset_indices(c1):
                sa = scaled[a]
                for b in system.coset_indices(c2):
                    sb = scaled[b]
                    if sum(x * y for x, y in zip(sa, sb)) != 0:
                        return False
    return True
