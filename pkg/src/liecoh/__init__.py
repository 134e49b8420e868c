"""liecoh: exact Chevalley-Eilenberg cohomology of rational Lie algebras,
characteristic series, one-parameter deformations and rigidity audits."""

from .linalg import (
    Matrix,
    Poly,
    Rational,
    Subspace,
    image_basis,
    kernel_basis,
    poly_derivative_at_zero,
    poly_eval,
    rat,
    rref,
)
from .lie import (
    JacobiError,
    LieAlgebra,
    NotIdealError,
    NotSubalgebraError,
    SeriesResult,
    abelian,
    center,
    derived_length,
    derived_series,
    direct_sum,
    jacobi_defects,
    lower_central_series,
    nilpotency_class,
    product_space,
    quotient_algebra,
    span_of_basis_indices,
)
from .reps import (
    Representation,
    abelianization_rep,
    adjoint_rep,
    restrict_rep,
    trivial_rep,
    verify_rep,
)
from .cochain import (
    CochainComplex,
    CohomologyReport,
    betti,
    build_complex,
    cochain_dim,
    cocycle_check,
    cohomology,
    differential,
    euler_check,
    koszul_apply,
    verify_chain,
    wedge_basis,
)
from .pair import (
    LESTable,
    PairSetup,
    class_extends,
    connecting_cocycle,
    connecting_map,
    les_table,
    relative_complex,
    restriction_matrix,
)
from .deform import (
    DeformationFamily,
    SampleVerdict,
    audit_family,
    check_infinitesimal,
    classify_sample,
    constant_family,
    evaluate,
    family_jacobi,
    first_order_term,
)
from .catalog import (
    builtin,
    catalog_keys,
    heisenberg,
    rigidity_class,
    table1_audit,
)
from .fileformat import (
    FileFormatError,
    emit,
    load_algebra,
    load_family,
    parse_algebra,
    parse_family,
    serialize_algebra,
    serialize_family,
)

__version__ = "0.1.0"
