"""
Complexity Analysis

Counting lower bounds, one-gate counts, exact minimal gate counts for
small n, and the synthesis complexity census.
"""

from .bounds import (
    BOUNDS_COLUMNS,
    EXACT_BOUND_LIMIT,
    EXACT_INDUCTION_LIMIT,
    LIBRARY_MCT,
    LIBRARY_MPMCT,
    AnalysisError,
    BoundReport,
    UnsupportedN,
    bounds_table,
    check_induction_inequality,
    check_induction_step,
    lower_bound_toffoli,
    one_gate_count,
)
from .census import (
    DEFAULT_SAMPLES,
    EXHAUSTIVE_CENSUS_MAX_LINES,
    CensusResult,
    ComplexityCensus,
    ComplexityProfile,
    census,
    census_distributions,
    classify_function,
)
from .counting import (
    BFS_MAX_LINES,
    OptimalSizeReport,
    OptimalSizeSearch,
    bfs_optimal_sizes,
    count_one_gate_functions,
    one_gate_library,
)

__version__ = "1.0.0"
