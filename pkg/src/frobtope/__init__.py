"""frobtope: exact face structure of permutation-matrix polytopes of Frobenius groups.

A Frobenius permutation group embeds into R^(n x n) as 0/1 permutation
matrices; the convex hull is a free sum of simplices, one per coset of the
kernel. This package builds such groups, computes the polytope's complete
combinatorial face structure exactly, and cross-validates every claim against
a brute-force geometric oracle using only integer and rational arithmetic.
"""

from __future__ import annotations

from .embedding import (
    AffineRelationBasis,
    GramCensus,
    VertexMatrix,
    affine_rank,
    barycenter,
    coset_span_orthogonality,
    coset_sum,
    gram,
    gram_census,
    is_affine_relation,
    relation_coset_constancy,
    to_matrix,
    vertex_matrices,
)
from .errors import CapExceededError, FrobtopeError, GroupSpecError, NotFrobeniusError
from .faces import (
    FaceDescriptor,
    FVector,
    count_faces_in_dim,
    enumerate_facets,
    face_dim,
    free_sum_lattice,
    fvector,
    is_proper_face,
)
from .groups import (
    FrobeniusSystem,
    FrobeniusVerdict,
    Perm,
    PermGroup,
    build_a4,
    build_cyclic,
    build_dihedral,
    build_from_spec,
    build_frobenius_system,
    build_pq,
    check_frobenius,
    compose,
    generate_group,
    star_property_check,
)
from .kernels import BACKEND as kernel_backend
from .oracle import (
    AffineFunctional,
    ExactPolytope,
    FaceLatticeResult,
    VerificationReport,
    VertexFacetIncidence,
    affine_hull_dim,
    brute_force_facets,
    face_lattice_from_incidence,
    find_supporting_functional,
    verify_theorem,
    verify_vertex,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "kernel_backend",
    # errors
    "FrobtopeError",
    "GroupSpecError",
    "NotFrobeniusError",
    "CapExceededError",
    # groups
    "Perm",
    "PermGroup",
    "compose",
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
    # embedding
    "VertexMatrix",
    "to_matrix",
    "vertex_matrices",
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
    # faces
    "FaceDescriptor",
    "FVector",
    "is_proper_face",
    "face_dim",
    "enumerate_facets",
    "fvector",
    "count_faces_in_dim",
    "free_sum_lattice",
    # oracle
    "AffineFunctional",
    "VertexFacetIncidence",
    "ExactPolytope",
    "FaceLatticeResult",
    "VerificationReport",
    "affine_hull_dim",
    "brute_force_facets",
    "find_supporting_functional",
    "face_lattice_from_incidence",
    "verify_vertex",
    "verify_theorem",
]
