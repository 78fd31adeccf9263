"""Exact decision procedures for nil-clean style decompositions in finite
group-graded rings: construction, validation, radicals, and certificates."""

from .errors import (
    Falsification,
    GradedNilError,
    ResourceLimitError,
    SpecError,
    ValidationError,
)
from .groups import (
    FiniteGroup,
    INTEGER_GROUP,
    IntegerGroup,
    direct_product,
    element_order,
    is_m_torsion_free,
    is_p_group,
    make_cyclic,
)
from .rings import (
    ElementClass,
    FiniteRing,
    ProductRing,
    TableRing,
    additive_span,
    check_ring_axioms,
    classify_element,
    idempotents,
    inverse_of,
    is_m_potent,
    is_nil_set,
    is_nilpotent,
    is_unit,
    jacobson_radical,
    m_potents,
    make_gf,
    make_zn,
    nilpotency_index,
    product_ring,
    quotient_ring,
    subring_from_elements,
)
from .grading import (
    Grading,
    HomogeneousIdeal,
    NOT_HOMOGENEOUS,
    ZERO_DEGREE,
    graded_jacobson_radical,
    graded_maximal_right_ideals,
    graded_quotient,
    homogeneous_right_ideal_closure,
    homogeneous_two_sided_ideal_closure,
    is_graded_local,
    is_graded_nil,
    trivial_grading,
    verify_grading,
)
from .constructions import (
    AmalgamationSpec,
    GroupRingRing,
    MatrixRing,
    SigmaVector,
    TriangularRing,
    amalgamation,
    augmentation_ideal,
    augmentation_map,
    diagonal_z_grading,
    group_ring_graded,
    image_subring_grading,
    matrix_graded,
    product_grading,
    triangular_graded,
    zero_diagonal_ideal,
)
from .nilclean import (
    NilCleanCertificate,
    PiRegularCertificate,
    graded_commuting_equivalence_check,
    graded_m_nil_clean_witness,
    graded_pi_regular_witness,
    is_graded_m_nil_clean_ring,
    is_m_nil_clean_ring,
    lift_m_potent,
    m_nil_clean_witness,
    pi_regular_witness,
    prop_commuting_equivalence_check,
    strongly_pi_regular_from_m_nil_clean,
    strongly_pi_regular_uniqueness_check,
)
from .specfile import Limits, ParsedSpec, emit_ring_spec, parse_ring_spec
from .checks import CHECK_REGISTRY, CheckReport, run_checks
from .search import TARGETS, counterexample_search

__version__ = "0.1.0"
