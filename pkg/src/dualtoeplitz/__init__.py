"""Exact arithmetic for dual Toeplitz operators on the orthogonal
complement of the harmonic Bergman space over the unit disk.

Everything is computed over Gaussian rationals with zero tolerance:
projections, operator actions, truncated form matrices, positive
semidefiniteness and rank, normality classification with certificates,
and symbolic verification suites.  The arithmetic kernel is a compiled
extension when available, with a pure-Python twin selected automatically
(override with DUALTOEPLITZ_BACKEND={compiled,python}).
"""

from ._backend import BACKEND_NAME
from .algebra import (
    Element,
    GaussianRational,
    Monomial,
    as_scalar,
    bergman_project,
    complement_project,
    harmonic_project,
    inner_product,
    norm_sq,
)
from .classify import (
    DEFAULT_ORDER_LIMIT,
    NotNormalCertificate,
    Verdict,
    VerdictStatus,
    ZeroMatrixCertificate,
    classify,
    classify_harmonic,
    classify_monomial,
    classify_two_monomial,
    classify_with_certificate,
    numeric_certificate,
)
from .engine import (
    TruncatedBasis,
    adjoint_symbol,
    apply,
    build_basis,
    commutator_matrix,
    commutator_range_gram,
    q_value,
    selfcomm_form_matrix,
    test_vector,
)
from .identities import (
    RationalPolynomial,
    SpecialPointCheck,
    adjoint_commutator_identity,
    closed_form_apply,
    closed_form_q,
    defect_balance_at_zero,
    equal_diff_defect_at_zero,
    monomial_defect_poly,
    radial_commutator_residual,
    two_monomial_q,
    two_term_defect_components,
    two_term_defect_poly,
    two_term_special_points,
)
from .linalg import (
    HermitianForm,
    PsdResult,
    form_value,
    is_antisymmetric,
    psd_test,
    rank,
    realify,
)
from .matrix import ExactMatrix
from .symbols import (
    ParseError,
    format_element,
    format_rational,
    format_scalar,
    parse_symbol,
)
from .verify import (
    COMMUTATOR_GRID,
    COMMUTATOR_ORDERS,
    HARMONIC_GRID,
    SUITE_NAMES,
    SuiteReport,
    TWO_TERM_GRID,
    run_suite,
    run_suites,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "COMMUTATOR_GRID",
    "COMMUTATOR_ORDERS",
    "DEFAULT_ORDER_LIMIT",
    "Element",
    "ExactMatrix",
    "GaussianRational",
    "HARMONIC_GRID",
    "HermitianForm",
    "Monomial",
    "NotNormalCertificate",
    "ParseError",
    "PsdResult",
    "RationalPolynomial",
    "SUITE_NAMES",
    "SpecialPointCheck",
    "SuiteReport",
    "TWO_TERM_GRID",
    "TruncatedBasis",
    "Verdict",
    "VerdictStatus",
    "ZeroMatrixCertificate",
    "adjoint_commutator_identity",
    "adjoint_symbol",
    "apply",
    "as_scalar",
    "bergman_project",
    "build_basis",
    "classify",
    "classify_harmonic",
    "classify_monomial",
    "classify_two_monomial",
    "classify_with_certificate",
    "closed_form_apply",
    "closed_form_q",
    "commutator_matrix",
    "commutator_range_gram",
    "complement_project",
    "defect_balance_at_zero",
    "equal_diff_defect_at_zero",
    "form_value",
    "format_element",
    "format_rational",
    "format_scalar",
    "harmonic_project",
    "inner_product",
    "is_antisymmetric",
    "monomial_defect_poly",
    "norm_sq",
    "numeric_certificate",
    "parse_symbol",
    "psd_test",
    "q_value",
    "radial_commutator_residual",
    "rank",
    "realify",
    "run_suite",
    "run_suites",
    "selfcomm_form_matrix",
    "test_vector",
    "two_monomial_q",
    "two_term_defect_components",
    "two_term_defect_poly",
    "two_term_special_points",
]
