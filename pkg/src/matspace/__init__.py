"""Exact certification of affine spaces of nilpotent, normal and real-diagonalizable matrices."""

from .diagonalizability import (
    antisymmetric_intersection,
    antisymmetric_pencil_escape,
    is_diagonalizable_real,
    minimal_polynomial,
    sample_certify_diag_space,
    sturm_real_root_count,
    witness_max_diag_affine_not_linear,
    witness_max_diag_linear,
)
from .errors import (
    BudgetExhausted,
    FieldMismatchError,
    MatspaceError,
    NotSimultaneouslyDiagonalizable,
    PreconditionError,
    ResourceError,
    UsageError,
)
from .matrix import (
    Matrix,
    char_poly,
    char_poly_berkowitz,
    char_poly_faddeev,
    det,
    diag,
    identity,
    is_nilpotent,
    is_normal,
    nullspace,
    rank,
    s2,
    trace,
    unit,
    zeros,
)
from .nilpotency import (
    certify_nilpotent,
    char2_counterexample,
    check_s2_identity,
    trace_pairing,
    witness_affine_not_linear_nilpotent,
    witness_max_nilpotent,
)
from .normality import certify_normal, simultaneous_diagonalize
from .oracle import cross_validate, oracle_all_property
from .poly import MultiPoly, PolyRing, schwartz_zippel_test
from .scalars import QQ, QQI, GF, GFp, Gaussian, field_from_tag
from .subspace import AffineSubspace, generic_element, make_subspace, membership

__version__ = "0.1.0"

__all__ = [
    "AffineSubspace",
    "antisymmetric_intersection",
    "antisymmetric_pencil_escape",
    "BudgetExhausted",
    "certify_nilpotent",
    "certify_normal",
    "char2_counterexample",
    "char_poly",
    "char_poly_berkowitz",
    "char_poly_faddeev",
    "check_s2_identity",
    "cross_validate",
    "det",
    "diag",
    "field_from_tag",
    "FieldMismatchError",
    "Gaussian",
    "generic_element",
    "GF",
    "GFp",
    "identity",
    "is_diagonalizable_real",
    "is_nilpotent",
    "is_normal",
    "make_subspace",
    "Matrix",
    "MatspaceError",
    "membership",
    "minimal_polynomial",
    "MultiPoly",
    "NotSimultaneouslyDiagonalizable",
    "nullspace",
    "oracle_all_property",
    "PolyRing",
    "PreconditionError",
    "QQ",
    "QQI",
    "rank",
    "ResourceError",
    "s2",
    "sample_certify_diag_space",
    "schwartz_zippel_test",
    "simultaneous_diagonalize",
    "sturm_real_root_count",
    "trace",
    "trace_pairing",
    "unit",
    "UsageError",
    "witness_affine_not_linear_nilpotent",
    "witness_max_diag_affine_not_linear",
    "witness_max_diag_linear",
    "witness_max_nilpotent",
    "zeros",
]
