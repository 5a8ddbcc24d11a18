"""Combinatorial face structure of the permutation-matrix polytope.

The polytope of a Frobenius system is the free sum of h simplices (one per
coset), glued at the common barycenter. Consequences implemented here: a
vertex subset is a proper face iff it omits at least one element of every
coset; such a face is a simplex of dimension |X| - 1; the facets are the
complements of transversals (one element per coset), n^h of them; and the
f-vector is read off a product generating polynomial over big integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, List, Sequence, Tuple

from .groups import FrobeniusSystem

__all__ = [
    "FaceDescriptor",
    "FVector",
    "is_proper_face",
    "face_dim",
    "enumerate_facets",
    "fvector",
    "count_faces_in_dim",
    "free_sum_lattice",
]


@dataclass(frozen=True)
class FaceDescriptor:
    """A face given by its sorted vertex indices and its dimension."""

    members: Tuple[int, ...]
    dim: int


@dataclass(frozen=True)
class FVector:
    """Face counts indexed k = -1, 0, ..., d: counts[i] is the number of
    (i-1)-dimensional faces, so counts[0] = 1 for the empty face and
    counts[-1] = 1 for the polytope itself."""

    counts: Tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) < 2:
            raise ValueError("an f-vector needs at least the empty face and the polytope")
        if self.counts[0] != 1 or self.counts[-1] != 1:
            raise ValueError(f"f-vector must start and end with 1: {self.counts}")

    @property
    def dim(self) -> int:
        return len(self.counts) - 2

    def count(self, k: int) -> int:
        """Number of k-dimensional faces, k from -1 to dim."""
        if not -1 <= k <= self.dim:
            raise ValueError(f"dimension {k} out of range -1..{self.dim}")
        return self.counts[k + 1]

    def as_strings(self) -> List[str]:
        """Counts as decimal strings (safe for JSON consumers without big ints)."""
        return [str(c) for c in self.counts]


def is_proper_face(system: FrobeniusSystem, members: Iterable[int]) -> bool:
    """True iff the index set omits at least one element of every coset."""
    selected = set(members)
    order = system.order
    for idx in selected:
        if not 0 <= idx < order:
            raise ValueError(f"vertex index {idx} out of range 0..{order - 1}")
    n = system.n
    for c in range(system.h):
        count = sum(1 for idx in selected if c * n <= idx < (c + 1) * n)
        if count == n:
            return False
    return True


def face_dim(system: FrobeniusSystem, members: Iterable[int]) -> int:
    """Dimension of a proper face: |X| - 1 (every proper face is a simplex)."""
    selected = tuple(sorted(set(members)))
    if not is_proper_face(system, selected):
        raise ValueError(
            f"index set {selected} contains a full coset and is not a proper face"
        )
    return len(selected) - 1


def enumerate_facets(system: FrobeniusSystem) -> Iterator[FaceDescriptor]:
    """Stream the n^h facets: complements of transversals, one element per coset.

    Deterministic order: lexicographic over the transversal index tuples
    (k_0, ..., k_{h-1}), coset-major.
    """
    n = system.n
    order = system.order
    top = (n - 1) * system.h
    for transversal in itertools.product(range(n), repeat=system.h):
        omit = {c * n + k for c, k in enumerate(transversal)}
        members = tuple(i for i in range(order) if i not in omit)
        yield FaceDescriptor(members=members, dim=top - 1)


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


def _poly_pow(base: Sequence[int], exponent: int) -> List[int]:
    result = [1]
    acc = list(base)
    e = exponent
    while e:
        if e & 1:
            result = _poly_mul(result, acc)
        e >>= 1
        if e:
            acc = _poly_mul(acc, acc)
    return result


def fvector(n: int, h: int) -> FVector:
    """f-vector of the polytope with parameters (n, h).

    Coefficient list of x^((n-1)h + 1) + ((1 + x)^n - x^n)^h: the coefficient
    of x^(k+1) counts the k-dimensional faces.
    """
    if n < 1 or h < 1:
        raise ValueError(f"need n >= 1 and h >= 1, got n={n}, h={h}")
    base = [comb(n, k) for k in range(n)]  # (1+x)^n - x^n, degree n-1
    power = _poly_pow(base, h)
    top = (n - 1) * h
    counts = power + [0] * (top + 1 - len(power)) + [1]
    return FVector(counts=tuple(counts))


def count_faces_in_dim(system: FrobeniusSystem, k: int) -> int:
    """Number of k-dimensional faces of the system's polytope."""
    fv = fvector(system.n, system.h)
    if not -1 <= k <= fv.dim:
        raise ValueError(f"dimension {k} out of range -1..{fv.dim}")
    return fv.count(k)


def free_sum_lattice(parts: Sequence[FVector]) -> FVector:
    """f-vector of the free sum of polytopes with the given f-vectors.

    Proper faces of a free sum are joins of one proper face per part, with
    dimensions adding plus one per extra part; the polynomial form is the
    product of the parts' proper-face polynomials plus a new top term.
    """
    if not parts:
        raise ValueError("free_sum_lattice needs at least one part")
    product = [1]
    total_dim = 0
    for fv in parts:
        proper = list(fv.counts[:-1])  # drop the part itself, keep proper faces
        product = _poly_mul(product, proper)
        total_dim += fv.dim
    counts = product + [0] * (total_dim + 1 - len(product)) + [1]
    return FVector(counts=tuple(counts))
