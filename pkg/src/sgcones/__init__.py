"""Finite semigroups, their principal-ideal categories, and normal cones."""

from .errors import (
    BadHom,
    BadLabels,
    BadSemilattice,
    BudgetExceeded,
    CategoryError,
    EnumerationBudgetExceeded,
    FunctorialityFailed,
    IncoherentHoms,
    MissingHom,
    MixedApex,
    NotAGroup,
    NotAnIsomorphism,
    NotASemilattice,
    NotAssociative,
    NotClosed,
    NotComposable,
    NotIncluded,
    NotInDomain,
    NotInHom,
    NotRegular,
    SearchBudgetExceeded,
    SgconesError,
    ValidationError,
)
from .semigroup import (
    DEFAULT_SEARCH_BUDGET,
    FiniteSemigroup,
    GreenStructure,
    clifford_violation,
    element_order,
    find_isomorphism,
    from_table,
    from_table_text,
    green,
    idempotents,
    is_clifford,
    is_clifford_by_dclasses,
    is_commutative,
    is_inverse,
    is_regular,
    is_semilattice,
    opposite,
    principal_left_ideal,
    principal_right_ideal,
    to_table_text,
    verify_morphism,
)
from .builders import (
    FIXTURES,
    SLGSpec,
    brandt_b2,
    chain,
    clifford5,
    cyclic_group,
    diamond,
    fixture,
    left_zero,
    strong_semilattice_of_groups,
    symmetric_group3,
    trivial_homs,
)
from .category import (
    Morphism,
    NormalCategory,
    build_L,
    build_R,
    check_prop2,
    check_prop3,
)
from .cones import (
    DEFAULT_ENUM_BUDGET,
    ConeCheck,
    NormalCone,
    TLSemigroup,
    build_TL,
    check_principal_homomorphism,
    cone_product,
    enumerate_cones,
    principal_cone,
    principal_witness,
    validate_cone,
    verify_prop4,
    verify_prop5,
    verify_theorem6,
    verify_tl_wellformed,
)
from .duals import (
    CategoryIso,
    check_functor,
    find_category_iso,
    induced_category_iso,
    normal_dual_L,
    normal_dual_R,
    verify_degeneration,
    verify_semilattice_theorems,
    verify_theorem7,
    verify_theorem8,
)

__version__ = "0.1.0"
