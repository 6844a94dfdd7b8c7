"""Algebraic expressions of Fibonacci graphs: generation, optimization,
and verification."""

__version__ = "0.1.0"

from .expr import (
    Assignment,
    DEFAULT_PRIME,
    DuplicateMonomial,
    ExprError,
    Expression,
    Label,
    ParseError,
    Product,
    SizeExceeded,
    Sum,
    Term,
    UNIT,
    UnassignedLabel,
    ZERO,
    a,
    b,
    evaluate_mod,
    expand,
    format_expression,
    is_read_once,
    metric_plus,
    metric_terms,
    parse,
    product,
    simplify,
    sp_parallel,
    sp_series,
    sumof,
)
from .graph import (
    InvalidN,
    canonical_expression,
    edges,
    enumerate_paths,
    equivalent_by_expansion,
    equivalent_by_sampling,
    oracle_eval_mod,
    path_count,
)
from .decompose import (
    FixedMap,
    GdSpec,
    InvalidM,
    InvalidVertexChoice,
    Leftmost,
    MiddleHigh,
    MiddleLow,
    Seeded,
    decompose,
    decompose_gd,
    uniform_positions,
)
from .optimize import (
    ComplexityRecord,
    DegenerateFit,
    IntervalTable,
    build_expression,
    complexity_table,
    exponent_fit,
    middle_vertices,
    min_metric,
    recurrence_P,
    recurrence_T,
    special_values,
    verify_theorem1,
)
