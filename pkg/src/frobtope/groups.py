"""Permutation groups and their Frobenius kernel/complement decomposition.

Permutations act on the points 1..n and are stored in one-line notation:
``images[j-1]`` is the image of j. A transitive group is Frobenius when no
non-identity element fixes two or more points and some non-identity element
fixes one; when every non-identity element is fixed-point-free the action is
regular and is handled as the trivial-complement case.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import CapExceededError, GroupSpecError, NotFrobeniusError

__all__ = [
    "Perm",
    "compose",
    "PermGroup",
    "generate_group",
    "FrobeniusVerdict",
    "check_frobenius",
    "FrobeniusSystem",
    "build_frobenius_system",
    "star_property_check",
    "build_dihedral",
    "build_cyclic",
    "build_pq",
    "build_a4",
    "build_from_spec",
    "DEFAULT_CLOSURE_CAP",
]

DEFAULT_CLOSURE_CAP = 20_000


@dataclass(frozen=True, order=True)
class Perm:
    """A permutation of {1, ..., n} in one-line notation."""

    images: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images!r}")

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        """Image of the point j (1-based)."""
        return self.images[j - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for j, i in enumerate(self.images, start=1):
            inv[i - 1] = j
        return Perm(tuple(inv))

    def fixed_points(self) -> Tuple[int, ...]:
        return tuple(j for j, i in enumerate(self.images, start=1) if i == j)

    def is_identity(self) -> bool:
        return all(i == j for j, i in enumerate(self.images, start=1))

    def one_line(self) -> str:
        """Comma-separated one-line notation, e.g. ``2,3,1``."""
        return ",".join(str(i) for i in self.images)


def compose(p: Perm, q: Perm) -> Perm:
    """Composition p after q: (p * q)(j) = p(q(j))."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Perm(tuple(p.images[i - 1] for i in q.images))


@dataclass(frozen=True)
class PermGroup:
    """A finite permutation group on the points 1..degree."""

    degree: int
    elements: FrozenSet[Perm]
    generators: Tuple[Perm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def sorted_elements(self) -> List[Perm]:
        return sorted(self.elements)

    def orbit(self, point: int) -> FrozenSet[int]:
        return frozenset(g(point) for g in self.elements)

    def is_transitive(self) -> bool:
        return len(self.orbit(1)) == self.degree

    def stabilizer(self, point: int) -> List[Perm]:
        return sorted(g for g in self.elements if g(point) == point)


def generate_group(
    generators: Iterable[Perm],
    degree: int,
    max_size: int = DEFAULT_CLOSURE_CAP,
) -> PermGroup:
    """Close a generating set under composition (breadth-first)."""
    gens = tuple(generators)
    for g in gens:
        if g.degree != degree:
            raise ValueError(f"generator degree {g.degree} != {degree}")
    identity = Perm.identity(degree)
    elements = {identity}
    frontier = [identity]
    while frontier:
        new: List[Perm] = []
        for g in frontier:
            for s in gens:
                prod = g * s
                if prod not in elements:
                    elements.add(prod)
                    new.append(prod)
                    if len(elements) > max_size:
                        raise CapExceededError(
                            f"group closure exceeded cap {max_size}"
                        )
        frontier = new
    return PermGroup(degree=degree, elements=frozenset(elements), generators=gens)


@dataclass(frozen=True)
class FrobeniusVerdict:
    """Outcome of the Frobenius test: 'frobenius', 'regular', or 'not_frobenius'."""

    kind: str
    witness: Optional[Perm] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.kind in ("frobenius", "regular")


def check_frobenius(group: PermGroup) -> FrobeniusVerdict:
    """Classify a permutation group by its fixed-point census.

    Requires transitivity; a non-identity element fixing >= 2 points is a
    violation and is returned as the witness.
    """
    if not group.is_transitive():
        orbit = sorted(group.orbit(1))
        return FrobeniusVerdict(
            kind="not_frobenius",
            detail=f"not transitive: orbit of 1 is {orbit}, degree {group.degree}",
        )
    some_fixer = False
    for g in group.elements:
        if g.is_identity():
            continue
        fixed = g.fixed_points()
        if len(fixed) >= 2:
            return FrobeniusVerdict(
                kind="not_frobenius",
                witness=g,
                detail=(
                    f"element {g.one_line()} fixes points {fixed[0]} and {fixed[1]}"
                ),
            )
        if fixed:
            some_fixer = True
    if not some_fixer:
        return FrobeniusVerdict(kind="regular", detail="all non-identity elements are fixed-point-free")
    return FrobeniusVerdict(kind="frobenius")


@dataclass(frozen=True)
class FrobeniusSystem:
    """A Frobenius (or regular) permutation group with its decomposition.

    kernel_elems: identity plus the fixed-point-free elements, sorted
        lexicographically by one-line notation (identity first); acts regularly,
        so there are exactly n of them.
    complement_elems: the stabilizer of the point 1, sorted lexicographically.
    coset_table: element -> (complement index c, kernel index k) for the unique
        factorization g = complement_elems[c] * kernel_elems[k].
    """

    group: PermGroup
    kernel_elems: Tuple[Perm, ...]
    complement_elems: Tuple[Perm, ...]
    coset_table: Mapping[Perm, Tuple[int, int]]

    @property
    def n(self) -> int:
        return self.group.degree

    @property
    def h(self) -> int:
        return len(self.complement_elems)

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def is_regular(self) -> bool:
        return self.h == 1

    @cached_property
    def elements(self) -> Tuple[Perm, ...]:
        """Canonical coset-major element order: index c*n + k is h_c * nu_k."""
        out: List[Perm] = []
        for hc in self.complement_elems:
            for nu in self.kernel_elems:
                out.append(hc * nu)
        return tuple(out)

    @cached_property
    def index_of(self) -> Dict[Perm, int]:
        return {g: i for i, g in enumerate(self.elements)}

    def coset_indices(self, c: int) -> range:
        """Indices (into .elements) of the coset h_c N."""
        if not 0 <= c < self.h:
            raise ValueError(f"coset index {c} out of range 0..{self.h - 1}")
        return range(c * self.n, (c + 1) * self.n)

    def coset_of_index(self, idx: int) -> int:
        return idx // self.n


def build_frobenius_system(group: PermGroup) -> FrobeniusSystem:
    """Decompose a Frobenius (or regular) group into kernel, complement, cosets."""
    verdict = check_frobenius(group)
    if not verdict.ok:
        raise NotFrobeniusError(
            f"group on {group.degree} points is not Frobenius: {verdict.detail}",
            witness=verdict.witness,
        )
    n = group.degree
    kernel = sorted(
        g for g in group.elements if g.is_identity() or not g.fixed_points()
    )
    if len(kernel) != n:
        raise NotFrobeniusError(
            f"kernel has {len(kernel)} elements, expected n = {n}"
        )
    complement = tuple(group.stabilizer(1))
    h = len(complement)
    if n * h != group.order:
        raise NotFrobeniusError(
            f"|G| = {group.order} != n*h = {n}*{h}"
        )
    kernel_set = frozenset(kernel)
    complement_set = frozenset(complement)
    if kernel_set & complement_set != {group.identity}:
        raise NotFrobeniusError("kernel and complement overlap beyond the identity")
    # Subgroup and normality checks for the kernel.
    for a in kernel:
        if a.inverse() not in kernel_set:
            raise NotFrobeniusError(f"kernel not closed under inverse at {a.one_line()}")
        for b in kernel:
            if a * b not in kernel_set:
                raise NotFrobeniusError(
                    f"kernel not closed under product at {a.one_line()}, {b.one_line()}"
                )
    for g in group.elements:
        ginv = g.inverse()
        for nu in kernel:
            if g * nu * ginv not in kernel_set:
                raise NotFrobeniusError(
                    f"kernel not normal: conjugate of {nu.one_line()} by {g.one_line()} escapes"
                )
    comp_index = {g: i for i, g in enumerate(complement)}
    kern_index = {g: i for i, g in enumerate(kernel)}
    table: Dict[Perm, Tuple[int, int]] = {}
    for g in group.elements:
        hits = []
        for nu in kernel:
            cand = g * nu.inverse()
            if cand in complement_set:
                hits.append((comp_index[cand], kern_index[nu]))
        if len(hits) != 1:
            raise NotFrobeniusError(
                f"element {g.one_line()} has {len(hits)} factorizations g = h*nu, expected 1"
            )
        table[g] = hits[0]
    return FrobeniusSystem(
        group=group,
        kernel_elems=tuple(kernel),
        complement_elems=complement,
        coset_table=table,
    )


def star_property_check(system: FrobeniusSystem) -> bool:
    """For every coset and every cell (i, j): exactly one member maps j to i.

    Buckets elements by the coset recorded in coset_table, so a corrupted table
    is detected.
    """
    n = system.n
    buckets: List[List[Perm]] = [[] for _ in range(system.h)]
    for g, (c, _k) in system.coset_table.items():
        buckets[c].append(g)
    for members in buckets:
        counts = [[0] * n for _ in range(n)]
        for g in members:
            for j in range(1, n + 1):
                counts[g(j) - 1][j - 1] += 1
        for row in counts:
            for v in row:
                if v != 1:
                    return False
    return True


def build_dihedral(n: int) -> FrobeniusSystem:
    """Dihedral group of the n-gon acting on its n vertices; Frobenius for odd n >= 3."""
    if n < 3:
        raise NotFrobeniusError(f"dihedral construction needs n >= 3, got {n}")
    rotation = Perm(tuple(j % n + 1 for j in range(1, n + 1)))
    reflection = Perm(tuple((1 - j) % n + 1 for j in range(1, n + 1)))
    group = generate_group((rotation, reflection), n)
    return build_frobenius_system(group)


def build_cyclic(n: int) -> FrobeniusSystem:
    """Cyclic group of order n in its regular action (trivial complement)."""
    if n < 1:
        raise ValueError(f"cyclic construction needs n >= 1, got {n}")
    gens: Tuple[Perm, ...]
    if n == 1:
        gens = ()
    else:
        gens = (Perm(tuple(j % n + 1 for j in range(1, n + 1))),)
    group = generate_group(gens, n)
    return build_frobenius_system(group)


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


def _mult_order(u: int, p: int) -> int:
    acc = u % p
    order = 1
    while acc != 1:
        acc = acc * u % p
        order += 1
        if order > p:  # cannot happen for a unit; defensive
            raise ValueError(f"{u} is not a unit mod {p}")
    return order


def build_pq(p: int, q: int, u: int) -> FrobeniusSystem:
    """Order-pq Frobenius group: translations of Z/p extended by x -> u*x.

    Requires p, q prime with p = 1 (mod q) and u of multiplicative order
    exactly q mod p. Points are 1..p, with the point j standing for the
    residue j-1.
    """
    if not _is_prime(p):
        raise NotFrobeniusError(f"p = {p} is not prime")
    if not _is_prime(q):
        raise NotFrobeniusError(f"q = {q} is not prime")
    if p % q != 1:
        raise NotFrobeniusError(f"p = {p} is not congruent to 1 mod q = {q}")
    if not 1 < u < p:
        raise NotFrobeniusError(f"u = {u} must satisfy 1 < u < p = {p}")
    order = _mult_order(u, p)
    if order != q:
        raise NotFrobeniusError(
            f"u = {u} has multiplicative order {order} mod {p}, expected q = {q}"
        )
    translation = Perm(tuple(j % p + 1 for j in range(1, p + 1)))
    multiplier = Perm(tuple(u * (j - 1) % p + 1 for j in range(1, p + 1)))
    group = generate_group((translation, multiplier), p)
    return build_frobenius_system(group)


def build_a4(max_size: int = DEFAULT_CLOSURE_CAP) -> FrobeniusSystem:
    """Alternating group A4 on 4 points, generated by (123) and (12)(34)."""
    three_cycle = Perm((2, 3, 1, 4))
    double_transposition = Perm((2, 1, 4, 3))
    group = generate_group((three_cycle, double_transposition), 4, max_size=max_size)
    return build_frobenius_system(group)


def _parse_int(token: str, spec: str, pos: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GroupSpecError(
            f"group spec {spec!r}: expected an integer at position {pos}, got {token!r}"
        ) from None


def build_from_spec(spec: str, max_size: int = DEFAULT_CLOSURE_CAP) -> FrobeniusSystem:
    """Build a system from a spec string.

    Grammar: ``dihedral:<n>``, ``cyclic:<n>``, ``pq:<p>,<q>,<u>``, ``a4``, or
    ``gens:<degree>;<perm>;<perm>;...`` with each perm a comma-separated
    one-line notation. Malformed strings raise GroupSpecError with the offset
    of the offending token.
    """
    s = spec.strip()
    if s == "a4":
        return build_a4(max_size=max_size)
    head, sep, rest = s.partition(":")
    if not sep:
        raise GroupSpecError(
            f"group spec {spec!r}: expected 'a4' or one of dihedral:, cyclic:, pq:, gens: (at position 0)"
        )
    body_pos = len(head) + 1
    if head == "dihedral":
        return build_dihedral(_parse_int(rest, spec, body_pos))
    if head == "cyclic":
        return build_cyclic(_parse_int(rest, spec, body_pos))
    if head == "pq":
        parts = rest.split(",")
        if len(parts) != 3:
            raise GroupSpecError(
                f"group spec {spec!r}: 'pq:' takes three comma-separated integers (at position {body_pos})"
            )
        pos = body_pos
        vals = []
        for part in parts:
            vals.append(_parse_int(part, spec, pos))
            pos += len(part) + 1
        return build_pq(vals[0], vals[1], vals[2])
    if head == "gens":
        segments = rest.split(";")
        if len(segments) < 2:
            raise GroupSpecError(
                f"group spec {spec!r}: 'gens:' needs a degree and at least one generator (at position {body_pos})"
            )
        degree = _parse_int(segments[0], spec, body_pos)
        if degree < 1:
            raise GroupSpecError(
                f"group spec {spec!r}: degree must be >= 1 (at position {body_pos})"
            )
        pos = body_pos + len(segments[0]) + 1
        gens: List[Perm] = []
        for seg in segments[1:]:
            tokens = seg.split(",")
            images = []
            tok_pos = pos
            for tok in tokens:
                images.append(_parse_int(tok, spec, tok_pos))
                tok_pos += len(tok) + 1
            if len(images) != degree:
                raise GroupSpecError(
                    f"group spec {spec!r}: generator {seg!r} has {len(images)} entries, "
                    f"expected {degree} (at position {pos})"
                )
            try:
                gens.append(Perm(tuple(images)))
            except ValueError as exc:
                raise GroupSpecError(
                    f"group spec {spec!r}: generator {seg!r} is not a permutation "
                    f"(at position {pos}): {exc}"
                ) from None
            pos = tok_pos
        group = generate_group(gens, degree, max_size=max_size)
        return build_frobenius_system(group)
    raise GroupSpecError(
        f"group spec {spec!r}: unknown kind {head!r} (at position 0); "
        "expected dihedral:, cyclic:, pq:, gens:, or a4"
    )
