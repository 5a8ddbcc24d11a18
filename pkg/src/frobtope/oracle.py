"""Brute-force exact geometric oracle.

Everything here is computed from vertex coordinates alone, with no use of the
combinatorial face formulas: affine hulls by exact elimination, facets by
enumerating d-subsets and testing one-sidedness of the spanned hyperplane,
supporting functionals from sums of facet functionals, and face lattices by
closing the facet vertex sets under intersection. Results can then be compared
against the combinatorial predictions.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import exact, kernels
from .errors import CapExceededError

__all__ = [
    "AffineFunctional",
    "VertexFacetIncidence",
    "ExactPolytope",
    "FaceLatticeResult",
    "CheckResult",
    "VerificationReport",
    "affine_hull_dim",
    "brute_force_facets",
    "find_supporting_functional",
    "face_lattice_from_incidence",
    "verify_vertex",
    "verify_theorem",
    "DEFAULT_VERTEX_CAP",
    "DEFAULT_COMBINATION_CAP",
    "DEFAULT_FACE_CAP",
]

DEFAULT_VERTEX_CAP = 14
DEFAULT_COMBINATION_CAP = 10**6
DEFAULT_FACE_CAP = 10**6

Point = Tuple[Tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class AffineFunctional:
    """An affine map x -> constant + sum(coefficients[i][j] * x[i][j])."""

    constant: Fraction
    coefficients: Tuple[Tuple[Fraction, ...], ...]

    def evaluate(self, matrix: Sequence[Sequence]) -> Fraction:
        total = Fraction(self.constant)
        for crow, mrow in zip(self.coefficients, matrix):
            for c, x in zip(crow, mrow):
                if c:
                    total += c * Fraction(x)
        return total

    def is_zero(self) -> bool:
        return self.constant == 0 and all(
            c == 0 for row in self.coefficients for c in row
        )


@dataclass(frozen=True)
class VertexFacetIncidence:
    """Facet vertex sets of a polytope on num_vertices labelled vertices."""

    facet_members: Tuple[Tuple[int, ...], ...]
    num_vertices: int

    def __post_init__(self):
        seen = set()
        for row in self.facet_members:
            if tuple(row) != tuple(sorted(set(row))):
                raise ValueError(f"facet row {row} is not sorted and duplicate-free")
            if row in seen:
                raise ValueError(f"duplicate facet row {row}")
            seen.add(row)
            for idx in row:
                if not 0 <= idx < self.num_vertices:
                    raise ValueError(f"vertex index {idx} out of range")


def _normalize_point(point) -> Point:
    rows = tuple(tuple(Fraction(x) for x in row) for row in point)
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("points must be non-empty rectangular matrices")
    return rows


class ExactPolytope:
    """Exact-convex-geometry workhorse over a fixed list of distinct points."""

    def __init__(
        self,
        points: Sequence[Sequence[Sequence]],
        max_brute_vertices: int = DEFAULT_VERTEX_CAP,
        max_combinations: int = DEFAULT_COMBINATION_CAP,
        max_faces: int = DEFAULT_FACE_CAP,
    ):
        if not points:
            raise ValueError("need at least one point")
        self.points: Tuple[Point, ...] = tuple(_normalize_point(p) for p in points)
        shape = (len(self.points[0]), len(self.points[0][0]))
        for p in self.points:
            if (len(p), len(p[0])) != shape:
                raise ValueError("all points must share one matrix shape")
        self.shape = shape
        self._flat = [tuple(x for row in p for x in row) for p in self.points]
        if len(set(self._flat)) != len(self._flat):
            raise ValueError("duplicate points are not allowed")
        self.max_brute_vertices = max_brute_vertices
        self.max_combinations = max_combinations
        self.max_faces = max_faces
        self._frame = None
        self._facet_data = None

    # ---- affine frame and exact coordinates ------------------------------

    def _ensure_frame(self):
        if self._frame is not None:
            return
        t = len(self._flat)
        base = self._flat[0]
        chosen_diffs: List[Tuple[Fraction, ...]] = []
        chosen_int: List[Tuple[int, ...]] = []
        for idx in range(1, t):
            diff = tuple(Fraction(x) - Fraction(y) for x, y in zip(self._flat[idx], base))
            introw = exact.scale_to_integers(diff)
            if kernels.matrix_rank(chosen_int + [list(introw)]) > len(chosen_int):
                chosen_diffs.append(diff)
                chosen_int.append(introw)
        d = len(chosen_diffs)
        m = len(base)
        # Coordinate functionals: solve D^T x = e_k for each k via one RREF of
        # [D^T | I_d]; the solution is supported on the pivot columns.
        aug = [
            list(chosen_diffs[i]) + [Fraction(int(i == k)) for k in range(d)]
            for i in range(d)
        ]
        rref, pivots = exact.frac_rref(aug) if d else ([], [])
        if len(pivots) != d or any(p >= m for p in pivots):
            raise AssertionError("affine frame rows are not independent")
        ys: List[List[Fraction]] = []
        for flat in self._flat:
            delta = [Fraction(flat[p]) - Fraction(base[p]) for p in pivots]
            ys.append(
                [
                    sum(rref[i][m + k] * delta[i] for i in range(d))
                    for k in range(d)
                ]
            )
        scale = 1
        for y in ys:
            for v in y:
                scale = scale * v.denominator // math.gcd(scale, v.denominator)
        coords = [tuple(int(v * scale) for v in y) for y in ys]
        self._frame = {
            "dim": d,
            "pivots": pivots,
            "rref": rref,
            "scale": scale,
            "coords": coords,
            "lifted": [c + (1,) for c in coords],
        }

    @property
    def dim(self) -> int:
        self._ensure_frame()
        return self._frame["dim"]

    def coords(self) -> List[Tuple[int, ...]]:
        """Integer affine coordinates of all points (global uniform scaling)."""
        self._ensure_frame()
        return list(self._frame["coords"])

    def subset_dim(self, members: Sequence[int]) -> int:
        """Affine dimension of a subset of the points; -1 for the empty set."""
        members = sorted(set(members))
        if not members:
            return -1
        self._ensure_frame()
        coords = self._frame["coords"]
        base = coords[members[0]]
        rows = [
            [coords[i][k] - base[k] for k in range(len(base))]
            for i in members[1:]
        ]
        return kernels.matrix_rank(rows) if rows else 0

    # ---- facets by hyperplane search -------------------------------------

    def _ensure_facets(self):
        if self._facet_data is not None:
            return
        t = len(self.points)
        if t > self.max_brute_vertices:
            raise CapExceededError(
                f"brute-force facet search needs <= {self.max_brute_vertices} vertices, got {t}"
            )
        self._ensure_frame()
        d = self._frame["dim"]
        if math.comb(t, d) > self.max_combinations:
            raise CapExceededError(
                f"C({t},{d}) = {math.comb(t, d)} candidate subsets exceed cap "
                f"{self.max_combinations}"
            )
        lifted = self._frame["lifted"]
        found: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
        for subset in itertools.combinations(range(t), d):
            rows = [lifted[i] for i in subset]
            basis = exact.nullspace(rows, d + 1)
            if len(basis) != 1:
                continue  # affinely dependent subset: spans no hyperplane
            alpha = exact.scale_to_integers(basis[0])
            evals = [exact.dot(alpha, lifted[i]) for i in range(t)]
            has_pos = any(e > 0 for e in evals)
            has_neg = any(e < 0 for e in evals)
            if has_pos and has_neg:
                continue
            if not has_pos and not has_neg:
                raise AssertionError("nonzero functional vanishing on the whole hull")
            if has_neg:
                alpha = tuple(-a for a in alpha)
                evals = [-e for e in evals]
            zero_set = tuple(i for i, e in enumerate(evals) if e == 0)
            if zero_set not in found:
                found[zero_set] = alpha
        facets = tuple(sorted(found))
        self._facet_data = {
            "facets": facets,
            "alphas": {members: found[members] for members in facets},
        }

    def facets(self) -> List[Tuple[int, ...]]:
        """All facet vertex sets, sorted; the empty tuple for a 0-dim polytope."""
        self._ensure_facets()
        return list(self._facet_data["facets"])

    def incidence(self) -> VertexFacetIncidence:
        return VertexFacetIncidence(
            facet_members=tuple(self.facets()), num_vertices=len(self.points)
        )

    # ---- functionals ------------------------------------------------------

    def _lift_functional(self, alpha: Sequence[int]) -> AffineFunctional:
        """Ambient affine functional matching the scaled-coordinate functional alpha."""
        self._ensure_frame()
        d = self._frame["dim"]
        pivots = self._frame["pivots"]
        rref = self._frame["rref"]
        scale = self._frame["scale"]
        m = len(self._flat[0])
        coeffs = [Fraction(0)] * m
        for i in range(d):
            coeffs[pivots[i]] = scale * sum(
                Fraction(alpha[k]) * rref[i][m + k] for k in range(d)
            )
        base = self._flat[0]
        constant = Fraction(alpha[d]) - sum(
            coeffs[p] * Fraction(base[p]) for p in pivots
        )
        nrows, ncols = self.shape
        grid = tuple(
            tuple(coeffs[r * ncols + c] for c in range(ncols)) for r in range(nrows)
        )
        return AffineFunctional(constant=constant, coefficients=grid)

    def supporting_functional(self, subset: Sequence[int]) -> Optional[AffineFunctional]:
        """A functional vanishing exactly on the subset and positive on the rest.

        Returns None when no such functional exists, i.e. when the subset is
        not the vertex set of a face of the hull.
        """
        t = len(self.points)
        members = tuple(sorted(set(subset)))
        for idx in members:
            if not 0 <= idx < t:
                raise ValueError(f"vertex index {idx} out of range 0..{t - 1}")
        if len(members) == t:
            # The whole hull: any nonzero functional vanishing on every point.
            m = len(self._flat[0])
            rows = [
                exact.scale_to_integers(
                    tuple(Fraction(x) for x in flat) + (Fraction(1),)
                )
                for flat in self._flat
            ]
            basis = exact.nullspace(rows, m + 1)
            if not basis:
                return None  # full-dimensional hull: only the zero functional
            w = basis[0]
            nrows, ncols = self.shape
            grid = tuple(
                tuple(w[r * ncols + c] for c in range(ncols)) for r in range(nrows)
            )
            return AffineFunctional(constant=w[m], coefficients=grid)
        self._ensure_facets()
        containing = [
            f for f in self._facet_data["facets"] if set(members) <= set(f)
        ]
        if not containing:
            return None
        zero: FrozenSet[int] = frozenset(range(t))
        for f in containing:
            zero &= frozenset(f)
        if zero != frozenset(members):
            return None  # smallest face through the subset is strictly larger
        alphas = self._facet_data["alphas"]
        d = self._frame["dim"]
        total = [0] * (d + 1)
        for f in containing:
            for k, a in enumerate(alphas[f]):
                total[k] += a
        lifted = self._frame["lifted"]
        for idx in range(t):
            value = exact.dot(total, lifted[idx])
            if (value == 0) != (idx in zero) or value < 0:
                raise AssertionError("facet-functional sum lost the zero set")
        return self._lift_functional(total)

    # ---- face lattice -----------------------------------------------------

    def face_lattice(self) -> "FaceLatticeResult":
        self._ensure_facets()
        return _lattice_from_sets(self, self._facet_data["facets"], self.max_faces)


@dataclass(frozen=True)
class FaceLatticeResult:
    """All faces of a polytope with their dimensions, plus the face counts."""

    faces: Tuple[Tuple[Tuple[int, ...], int], ...]  # (members, dim)
    fvector: Tuple[int, ...]  # counts indexed k = -1 .. dim


def _lattice_from_sets(
    polytope: ExactPolytope,
    facet_rows: Sequence[Tuple[int, ...]],
    max_faces: int,
) -> FaceLatticeResult:
    t = len(polytope.points)
    facet_sets = [frozenset(f) for f in facet_rows]
    faces = set(facet_sets)
    queue = list(facet_sets)
    while queue:
        current = queue.pop()
        for f in facet_sets:
            meet = current & f
            if meet not in faces:
                faces.add(meet)
                queue.append(meet)
                if len(faces) > max_faces:
                    raise CapExceededError(f"face closure exceeded cap {max_faces}")
    faces.add(frozenset(range(t)))
    described = []
    for members in faces:
        row = tuple(sorted(members))
        described.append((row, polytope.subset_dim(row)))
    described.sort(key=lambda fd: (fd[1], fd[0]))
    top = polytope.dim
    counts = [0] * (top + 2)
    for _, dim in described:
        counts[dim + 1] += 1
    return FaceLatticeResult(faces=tuple(described), fvector=tuple(counts))


# ---- functional wrappers --------------------------------------------------


def affine_hull_dim(points: Sequence[Sequence[Sequence]]) -> int:
    """Dimension of the affine hull of a list of matrix-shaped points."""
    return ExactPolytope(points).dim


def brute_force_facets(
    points: Sequence[Sequence[Sequence]],
    max_vertices: int = DEFAULT_VERTEX_CAP,
    max_combinations: int = DEFAULT_COMBINATION_CAP,
) -> List[Tuple[int, ...]]:
    """Facet vertex sets by exhaustive hyperplane search over d-subsets."""
    poly = ExactPolytope(
        points, max_brute_vertices=max_vertices, max_combinations=max_combinations
    )
    return poly.facets()


def find_supporting_functional(
    points: Sequence[Sequence[Sequence]],
    subset: Sequence[int],
    max_vertices: int = DEFAULT_VERTEX_CAP,
    max_combinations: int = DEFAULT_COMBINATION_CAP,
) -> Optional[AffineFunctional]:
    """Functional vanishing exactly on the subset, positive elsewhere, or None."""
    poly = ExactPolytope(
        points, max_brute_vertices=max_vertices, max_combinations=max_combinations
    )
    return poly.supporting_functional(subset)


def face_lattice_from_incidence(
    incidence: VertexFacetIncidence,
    points: Sequence[Sequence[Sequence]],
    max_faces: int = DEFAULT_FACE_CAP,
) -> FaceLatticeResult:
    """Close facet vertex sets under intersection; dims from affine hulls."""
    poly = ExactPolytope(points, max_faces=max_faces)
    if incidence.num_vertices != len(poly.points):
        raise ValueError(
            f"incidence is over {incidence.num_vertices} vertices, got {len(poly.points)} points"
        )
    return _lattice_from_sets(poly, incidence.facet_members, max_faces)


def verify_vertex(
    point: Sequence[Sequence],
    points: Sequence[Sequence[Sequence]],
    max_vertices: int = DEFAULT_VERTEX_CAP,
) -> bool:
    """True iff the point is a vertex of the hull of the point list."""
    target = _normalize_point(point)
    poly = ExactPolytope(points, max_brute_vertices=max_vertices)
    matches = [i for i, p in enumerate(poly.points) if p == target]
    if not matches:
        raise ValueError("point does not occur in the point list")
    return poly.supporting_functional((matches[0],)) is not None


# ---- whole-system verification -------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Optional[str] = None


@dataclass(frozen=True)
class VerificationReport:
    """Cross-validation of the combinatorial claims against brute-force geometry."""

    checks: Tuple[CheckResult, ...]
    fvector_oracle: Tuple[int, ...]
    fvector_formula: Tuple[int, ...]
    facet_count: int

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        out_checks = []
        for c in self.checks:
            entry = {"name": c.name, "pass": c.passed}
            if c.witness is not None:
                entry["witness"] = c.witness
            out_checks.append(entry)
        return {
            "checks": out_checks,
            "fvector_oracle": [str(x) for x in self.fvector_oracle],
            "fvector_formula": [str(x) for x in self.fvector_formula],
            "facet_count": str(self.facet_count),
        }


def verify_theorem(
    system,
    max_vertices: int = DEFAULT_VERTEX_CAP,
    max_combinations: int = DEFAULT_COMBINATION_CAP,
    max_faces: int = DEFAULT_FACE_CAP,
) -> VerificationReport:
    """Run the full battery of geometric checks on a Frobenius system.

    Checks: (a) every coset is affinely independent, (b) every coset has the
    common barycenter (1/n) * all-ones, (c) translated coset spans are
    orthogonal, (d) brute-force facets coincide with the transversal
    complements, (e) the intersection-lattice f-vector equals the generating
    polynomial's. The brute-force caps apply; larger systems raise
    CapExceededError rather than silently skipping.
    """
    from . import embedding, faces

    n = system.n
    matrices = embedding.vertex_matrices(system)
    poly = ExactPolytope(
        [vm.entries for vm in matrices],
        max_brute_vertices=max_vertices,
        max_combinations=max_combinations,
        max_faces=max_faces,
    )
    checks: List[CheckResult] = []

    bad = [
        c
        for c in range(system.h)
        if poly.subset_dim(tuple(system.coset_indices(c))) != n - 1
    ]
    checks.append(
        CheckResult(
            name="coset_simplices",
            passed=not bad,
            witness=None if not bad else f"coset {bad[0]} is affinely dependent",
        )
    )

    expected = Fraction(1, n)
    bad_bary: Optional[str] = None
    for c in range(system.h):
        total = [[Fraction(0)] * n for _ in range(n)]
        for idx in system.coset_indices(c):
            for i, row in enumerate(matrices[idx].entries):
                for j, x in enumerate(row):
                    if x:
                        total[i][j] += Fraction(x, n)
        if any(x != expected for row in total for x in row):
            bad_bary = f"coset {c} barycenter differs from all-ones/n"
            break
    checks.append(
        CheckResult(name="coset_barycenters", passed=bad_bary is None, witness=bad_bary)
    )

    ortho = embedding.coset_span_orthogonality(system)
    checks.append(
        CheckResult(
            name="coset_orthogonality",
            passed=ortho,
            witness=None if ortho else "a cross-coset translated inner product is nonzero",
        )
    )

    oracle_facets = set(poly.facets())
    predicted = set()
    for fd in faces.enumerate_facets(system):
        predicted.add(fd.members)
    facets_equal = oracle_facets == predicted
    witness = None
    if not facets_equal:
        extra = sorted(oracle_facets - predicted) + sorted(predicted - oracle_facets)
        witness = f"first mismatched facet: {extra[0]}"
    checks.append(
        CheckResult(name="facet_sets_equal", passed=facets_equal, witness=witness)
    )

    lattice = poly.face_lattice()
    formula = faces.fvector(n, system.h).counts
    fv_equal = lattice.fvector == formula
    checks.append(
        CheckResult(
            name="fvector_equal",
            passed=fv_equal,
            witness=None if fv_equal else f"{lattice.fvector} vs {formula}",
        )
    )

    return VerificationReport(
        checks=tuple(checks),
        fvector_oracle=lattice.fvector,
        fvector_formula=formula,
        facet_count=len(oracle_facets),
    )
