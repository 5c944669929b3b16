"""Exact computation with Riordan arrays and their production matrices."""

from .arrays import RiordanElement, TriMatrix
from .errors import (
    CompositionError,
    ExpressionError,
    ExpressionEvalError,
    ExpressionSyntaxError,
    InvalidElementError,
    NonUnitError,
    OeisFormatError,
    OeisQueryError,
    PrecisionError,
    ReversionError,
    RiordanError,
    ShapeError,
    SingularMatrixError,
    SqrtError,
    UnknownFamilyError,
)
from .families import (
    FAMILY_NAMES,
    PolynomialRow,
    a085478_element,
    a085478_second_entry,
    a092276_entry,
    binomial_power,
    catalan_array,
    family_element,
    iterate_second_production,
    moment_array,
    moment_element,
    moment_entry,
    orthogonal_polys,
    pascal,
)
from .gfexpr import evaluate, evaluate_text, parse, to_text
from .oeis import MIN_QUERY_VALUES, OeisIndex, SequenceMatch, load_stripped
from .production import (
    ProductionMatrix,
    VerificationReport,
    generate_from_production,
    nth_az,
    nth_production_matrix,
    produced_matrix_closed_form,
    production_block,
    production_matrix,
    verify_nth_conjecture,
)
from .series import TruncatedSeries, catalan_gf

__version__ = "0.1.0"

__all__ = [
    "CompositionError",
    "ExpressionError",
    "ExpressionEvalError",
    "ExpressionSyntaxError",
    "FAMILY_NAMES",
    "InvalidElementError",
    "MIN_QUERY_VALUES",
    "NonUnitError",
    "OeisFormatError",
    "OeisIndex",
    "OeisQueryError",
    "PolynomialRow",
    "PrecisionError",
    "ProductionMatrix",
    "ReversionError",
    "RiordanElement",
    "RiordanError",
    "SequenceMatch",
    "ShapeError",
    "SingularMatrixError",
    "SqrtError",
    "TriMatrix",
    "TruncatedSeries",
    "UnknownFamilyError",
    "VerificationReport",
    "a085478_element",
    "a085478_second_entry",
    "a092276_entry",
    "binomial_power",
    "catalan_array",
    "catalan_gf",
    "evaluate",
    "evaluate_text",
    "family_element",
    "generate_from_production",
    "iterate_second_production",
    "load_stripped",
    "moment_array",
    "moment_element",
    "moment_entry",
    "nth_az",
    "nth_production_matrix",
    "orthogonal_polys",
    "parse",
    "pascal",
    "produced_matrix_closed_form",
    "production_block",
    "production_matrix",
    "to_text",
    "verify_nth_conjecture",
]
