"""
AND-EXOR Expressions

Cubes, ESOP expressions, the Shannon / Davio expansion rules and PPRM
extraction.
"""

from .cube import (
    Cube,
    EsopError,
    EsopExpr,
    EsopSyntaxError,
    cube_from_literals,
    esop_to_table,
    eval_esop,
    format_cube,
    format_esop,
    literal_count,
    parse_esop,
    parse_esop_terms,
    support,
    term_count,
)
from .expansion import (
    POLICY_FIXED,
    POLICY_GREEDY,
    POLICY_PPRM,
    esop_davio,
    expand_davio_neg,
    expand_davio_pos,
    expand_shannon,
    expression_for,
    pprm,
    recompose,
    reed_muller_coefficients,
)

__version__ = "1.0.0"
