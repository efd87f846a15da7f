"""
Boolean Functions

Truth tables of multiple-output functions, reversible permutations and the
".tt" text format.
"""

from .truth_table import (
    MAX_VARIABLES,
    BadVariable,
    BooleanFunctionError,
    ControlFunction,
    IndexOutOfRange,
    LengthMismatch,
    NotReversible,
    OutputOverflow,
    Permutation,
    SizeMismatch,
    TooManyVariables,
    TruthTable,
    cofactor,
    compose,
    compose_all,
    evaluate,
    first_difference,
    format_bits,
    identity_perm,
    invert,
    is_reversible,
    output_component,
    perm_from_tt,
    random_perm,
    tt_constant,
    tt_from_bitmask,
    tt_from_perm,
    tt_from_rows,
    tt_variable,
    var_shift,
)
from .tt_format import TruthTableFormatError, TruthTableParser, serialize_tt, write_tt

__version__ = "1.0.0"
