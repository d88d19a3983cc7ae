"""
Exact superalgebra kernels.

Scalars over Q and Q(i), Clifford blades, exact linear algebra, elements and
superalgebras, and graded modules.
"""

from .errors import (
    SuperMoritaError,
    DivisionByZero,
    FieldMismatch,
    InvalidBlade,
    InvalidSignature,
    TooLarge,
    AlgebraMismatch,
    NotIdempotent,
    DimMismatch,
    UnrecognizedBasic,
    UnknownTable,
    UnknownCheck,
    ScopeError,
    ParseError,
    GeneratorOutOfRange,
)
from .scalars import Field, Scalar, scalar_arith, conjugate, format_scalar, parse_scalar, rational_sqrt
from .blades import Signature, Blade, BladeLaw, blade_mul, transposition_count
from .linalg import Matrix, rref, solve, Solution, NoSolution, SolutionSpace, minimal_polynomial, SubspaceBasis
from .superalgebra import (
    Element,
    SuperAlgebra,
    clifford_real,
    clifford_complex,
    from_signature,
    mul,
    skew_tensor,
    supertwist_check,
    hat,
    grade_involution,
    corner,
    hom_space_dims,
    is_isomorphic_via,
    quaternions,
    subalgebra,
    quotient,
)
from .modules import (
    Functor,
    GradedModule,
    module_from_idempotent,
    regular_module,
    parity_change,
    suspension,
    hat_module,
    direct_sum,
    hom_basis,
    twisted_hom,
    twisted_end,
    modules_isomorphic,
)

__all__ = [
    # Errors
    "SuperMoritaError",
    "DivisionByZero",
    "FieldMismatch",
    "InvalidBlade",
    "InvalidSignature",
    "TooLarge",
    "AlgebraMismatch",
    "NotIdempotent",
    "DimMismatch",
    "UnrecognizedBasic",
    "UnknownTable",
    "UnknownCheck",
    "ScopeError",
    "ParseError",
    "GeneratorOutOfRange",
    # Scalars
    "Field",
    "Scalar",
    "scalar_arith",
    "conjugate",
    "format_scalar",
    "parse_scalar",
    "rational_sqrt",
    # Blades
    "Signature",
    "Blade",
    "BladeLaw",
    "blade_mul",
    "transposition_count",
    # Linear algebra
    "Matrix",
    "rref",
    "solve",
    "Solution",
    "NoSolution",
    "SolutionSpace",
    "minimal_polynomial",
    "SubspaceBasis",
    # Superalgebras
    "Element",
    "SuperAlgebra",
    "clifford_real",
    "clifford_complex",
    "from_signature",
    "mul",
    "skew_tensor",
    "supertwist_check",
    "hat",
    "grade_involution",
    "corner",
    "hom_space_dims",
    "is_isomorphic_via",
    "quaternions",
    "subalgebra",
    "quotient",
    # Modules
    "Functor",
    "GradedModule",
    "module_from_idempotent",
    "regular_module",
    "parity_change",
    "suspension",
    "hat_module",
    "direct_sum",
    "hom_basis",
    "twisted_hom",
    "twisted_end",
    "modules_isomorphic",
]
