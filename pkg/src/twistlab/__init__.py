"""Exact-arithmetic toolkit for twisting maps between two copies of k[Z2].

Enumerates all twisting maps, builds their twisted tensor products,
classifies the resulting 4-dimensional algebras, and computes Hochschild
cohomology dimensions by three independent routes plus closed-form
evaluators. Everything runs over Q or a prime field GF(p) with no floats.
"""

from .algebra import (
    Algebra,
    CriterionInapplicable,
    Element,
    center,
    change_of_basis,
    is_commutative,
    is_separable,
    jacobson_radical,
    multiply,
    radical_power_dims,
    standard_algebra,
    verify_axioms,
)
from .classify import (
    CHAR2_NOTE,
    CLASS_ORDER,
    Fingerprint,
    OrbitEntry,
    OrbitReport,
    REFERENCE_FINGERPRINTS,
    classify_4dim,
    fingerprint,
    is_isomorphism,
    orbit_report,
    orbit_tsv,
    parse_orbit_tsv,
    reference_isomorphism,
)
from .duplicates import (
    DuplicateDatum,
    RoundTripParams,
    build_duplicate,
    datum_from_doc,
    datum_to_doc,
    duplicate_to_twisting_map,
    roundtrip_candidate,
    roundtrip_datum,
    roundtrip_duplicate,
    standard_endomorphisms,
    verify_pair,
    x_idempotent_algebra,
)
from .fields import GF, QQ, Field, enumerate_field_elements, field_from_name
from .hochschild import (
    CROWN_READING,
    HH_ERRATA,
    HHProfile,
    READING_NOTES,
    crown_formula,
    hh_bar,
    hh_e_complex,
    hh_rsz,
    thm_formula,
    verify_counterexample,
)
from .linalg import Matrix, echelon_basis, kernel_basis, kron, rank, solve
from .quivers import (
    Path,
    Quiver,
    has_oriented_cycle,
    is_connected,
    is_crown,
    longest_path_length,
    parallel_count,
    parallel_pairs,
    path_algebra_acyclic,
    paths_of_length,
    standard_quiver,
    truncated_path_algebra,
)
from .twisting import (
    CENSUS_ERRATA,
    TwistFamilyDescriptor,
    TwistingMap,
    census_rows,
    census_rows_char0,
    census_tsv,
    descriptor_scalars,
    enumerate_twisting_maps,
    family_member,
    flip,
    identify_family,
    inclusion_maps_are_morphisms,
    is_invertible,
    parse_census_tsv,
    scalars_of_map,
    solve_2dim_twist,
    twisted_product,
    verify_twisting,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "CENSUS_ERRATA",
    "CHAR2_NOTE",
    "CLASS_ORDER",
    "CROWN_READING",
    "CriterionInapplicable",
    "DuplicateDatum",
    "Element",
    "Field",
    "Fingerprint",
    "GF",
    "HH_ERRATA",
    "HHProfile",
    "Matrix",
    "OrbitEntry",
    "OrbitReport",
    "Path",
    "QQ",
    "Quiver",
    "READING_NOTES",
    "REFERENCE_FINGERPRINTS",
    "RoundTripParams",
    "TwistFamilyDescriptor",
    "TwistingMap",
    "build_duplicate",
    "census_rows",
    "census_rows_char0",
    "census_tsv",
    "center",
    "change_of_basis",
    "classify_4dim",
    "crown_formula",
    "datum_from_doc",
    "datum_to_doc",
    "descriptor_scalars",
    "duplicate_to_twisting_map",
    "echelon_basis",
    "enumerate_field_elements",
    "enumerate_twisting_maps",
    "family_member",
    "field_from_name",
    "fingerprint",
    "flip",
    "has_oriented_cycle",
    "hh_bar",
    "hh_e_complex",
    "hh_rsz",
    "identify_family",
    "inclusion_maps_are_morphisms",
    "is_commutative",
    "is_connected",
    "is_crown",
    "is_invertible",
    "is_isomorphism",
    "is_separable",
    "jacobson_radical",
    "kernel_basis",
    "kron",
    "longest_path_length",
    "multiply",
    "orbit_report",
    "orbit_tsv",
    "parallel_count",
    "parallel_pairs",
    "parse_census_tsv",
    "parse_orbit_tsv",
    "path_algebra_acyclic",
    "paths_of_length",
    "radical_power_dims",
    "rank",
    "reference_isomorphism",
    "roundtrip_candidate",
    "roundtrip_datum",
    "roundtrip_duplicate",
    "scalars_of_map",
    "solve",
    "solve_2dim_twist",
    "standard_algebra",
    "standard_endomorphisms",
    "standard_quiver",
    "thm_formula",
    "truncated_path_algebra",
    "twisted_product",
    "verify_axioms",
    "verify_counterexample",
    "verify_pair",
    "verify_twisting",
    "x_idempotent_algebra",
]
