"""Permutation polynomials on w-bit integers.

Classification by coefficient conditions (permutation / one-stroke,
meaning a single full cycle at every width), exhaustive cross-checks at
small widths, and polynomial-time inverse, discrete log, and jump built
on a ladder of truncated self-compositions.  A seekable full-period
stream and an operation-count report sit on top.
"""

from .classify import (
    DEFAULT_EXHAUSTIVE_BUDGET,
    ConditionCheck,
    OrbitReport,
    PermClass,
    brute_force_is_one_stroke,
    brute_force_is_permutation,
    classify,
    cycle_decomposition,
    is_one_stroke,
    is_permutation,
    one_stroke_conditions,
)
from .errors import (
    BudgetExceededError,
    NotOneStrokeError,
    NotPermutationError,
    StreamFormatError,
)
from .ladder import (
    Ladder,
    build_ladder,
    dlog,
    dlog_to_zero,
    invert,
    jump,
    jump_from_zero,
)
from .poly import (
    MAX_WIDTH,
    Polynomial,
    compose_mod,
    eval_mod,
    iterate_naive,
    make_polynomial,
    mul_count,
    reduce_mod,
    reset_mul_count,
)
from .stream import StreamState

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "ConditionCheck",
    "DEFAULT_EXHAUSTIVE_BUDGET",
    "Ladder",
    "MAX_WIDTH",
    "NotOneStrokeError",
    "NotPermutationError",
    "OrbitReport",
    "PermClass",
    "Polynomial",
    "StreamFormatError",
    "StreamState",
    "brute_force_is_one_stroke",
    "brute_force_is_permutation",
    "build_ladder",
    "classify",
    "compose_mod",
    "cycle_decomposition",
    "dlog",
    "dlog_to_zero",
    "eval_mod",
    "invert",
    "is_one_stroke",
    "is_permutation",
    "iterate_naive",
    "jump",
    "jump_from_zero",
    "make_polynomial",
    "mul_count",
    "one_stroke_conditions",
    "reduce_mod",
    "reset_mul_count",
]
