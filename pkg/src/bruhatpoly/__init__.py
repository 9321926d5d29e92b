"""Bruhat interval polytopes for the symmetric group.

Pure-Python, exact-arithmetic library: Bruhat intervals and the generalized
lifting property, the polytope of an interval (dimension, inequality
description, faces, diameter, toric criterion), R-polynomials with the
inversion-minimal recurrence and special matchings, and the parabolic
(G/P) analogues, together with an exact rational LP oracle and exhaustive
property suites over small symmetric groups.
"""

from .errors import DomainError, NotComparableError
from .intervals import (
    BruhatInterval,
    atoms,
    chain_via_atoms,
    chain_via_coatoms,
    classical_lift,
    coatoms,
    generalized_lift,
    interval,
    interval_elements,
    inversion_inversion_check,
    inversion_minimal_transpositions,
)
from .parabolic import (
    min_coset_rep,
    parabolic_bip_vertices,
    parabolic_faces_check,
    weight_point,
)
from .perms import (
    bruhat_leq,
    compose,
    descents,
    format_perm,
    identity,
    inverse,
    is_cover,
    length,
    longest_element,
    parse_perm,
)
from .polytopes import (
    affine_span_equations,
    bip_inequalities,
    block_partition,
    crown_type,
    diameter,
    dimension,
    enumerate_faces,
    f_vector,
    face_min_max,
    interval_matroid,
    is_face,
    is_toric,
    minkowski_check,
    normal_cone,
    vertices,
)
from .rpoly import (
    IntPolynomial,
    extend_to_special_matching,
    generalized_r_identity,
    is_special_matching,
    r_polynomial,
    r_tilde,
    recurrence_counterexample_check,
    special_matching_r_identity,
)

__version__ = "0.1.0"

__all__ = [
    "BruhatInterval",
    "DomainError",
    "IntPolynomial",
    "NotComparableError",
    "affine_span_equations",
    "atoms",
    "bip_inequalities",
    "block_partition",
    "bruhat_leq",
    "chain_via_atoms",
    "chain_via_coatoms",
    "classical_lift",
    "coatoms",
    "compose",
    "crown_type",
    "descents",
    "diameter",
    "dimension",
    "enumerate_faces",
    "extend_to_special_matching",
    "f_vector",
    "face_min_max",
    "format_perm",
    "generalized_lift",
    "generalized_r_identity",
    "identity",
    "interval",
    "interval_elements",
    "interval_matroid",
    "inverse",
    "inversion_inversion_check",
    "inversion_minimal_transpositions",
    "is_cover",
    "is_face",
    "is_special_matching",
    "is_toric",
    "length",
    "longest_element",
    "min_coset_rep",
    "minkowski_check",
    "normal_cone",
    "parabolic_bip_vertices",
    "parabolic_faces_check",
    "parse_perm",
    "r_polynomial",
    "r_tilde",
    "recurrence_counterexample_check",
    "special_matching_r_identity",
    "vertices",
    "weight_point",
]
