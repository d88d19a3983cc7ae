"""
Graded Morita reduction, classification, Grothendieck tables and the
verification suite.
"""

from .morita import (
    Equivalent,
    NotEquivalent,
    Undetermined,
    IdempotentDecomposition,
    BasicReduction,
    s_equivalent,
    jacobson_radical,
    gr_divisional_check,
    gr_local_check,
    primitive_decomposition,
    basic_reduction,
    find_odd_involution,
)
from .classify import (
    RealCore,
    ComplexCore,
    RealClass,
    ComplexClass,
    real_basic_class,
    complex_basic_class,
    realize,
    identify,
    oracle_classify,
    oracle_classify_complex,
    signature_class,
)
from .grothendieck import (
    GrothendieckData,
    TABLE_KINDS,
    v_real,
    v_complex,
    grothendieck_real,
    grothendieck_complex,
    count_irreducible_classes,
    table_rows,
    table_document,
    emit_table,
)
from .verify import CHECKS, VerifyReport, run_check, run_checks

__all__ = [
    # Morita
    "Equivalent",
    "NotEquivalent",
    "Undetermined",
    "IdempotentDecomposition",
    "BasicReduction",
    "s_equivalent",
    "jacobson_radical",
    "gr_divisional_check",
    "gr_local_check",
    "primitive_decomposition",
    "basic_reduction",
    "find_odd_involution",
    # Classification
    "RealCore",
    "ComplexCore",
    "RealClass",
    "ComplexClass",
    "real_basic_class",
    "complex_basic_class",
    "realize",
    "identify",
    "oracle_classify",
    "oracle_classify_complex",
    "signature_class",
    # Grothendieck
    "GrothendieckData",
    "TABLE_KINDS",
    "v_real",
    "v_complex",
    "grothendieck_real",
    "grothendieck_complex",
    "count_irreducible_classes",
    "table_rows",
    "table_document",
    "emit_table",
    # Verification
    "CHECKS",
    "VerifyReport",
    "run_check",
    "run_checks",
]
