"""Classify polynomials acting on Z/2^w by their coefficient conditions.

A polynomial permutes Z/2^w for every w exactly when a_1 is odd and the
even-index (a_2+a_4+...) and odd-index (a_3+a_5+...) coefficient sums
are both even.  It additionally drives a single full cycle (one-stroke)
for every w exactly when a_0 is odd, a_1 is odd, the even-index sum is
even, the odd-index sum is congruent to 2*a_2 mod 4, and the total sum
a_1+a_2+...+a_N is congruent to 1 mod 4.  Both tests read the exact
coefficients, so callers holding a residue-reduced polynomial must have
reduced with width >= 3 for the mod-4 conditions to mean anything.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import BudgetExceededError, NotPermutationError
from .poly import Polynomial, check_width, eval_mod

# Cap on 2^w table sizes for the brute-force paths; each call may build
# one table of 2^w entries.
DEFAULT_EXHAUSTIVE_BUDGET = 1 << 20


class PermClass(enum.Enum):
    NOT_PERMUTATION = "not_permutation"
    PERMUTATION_ONLY = "permutation_only"
    ONE_STROKE = "one_stroke"


@dataclass(frozen=True)
class ConditionCheck:
    """One coefficient condition: holds iff lhs == rhs (mod modulus)."""

    label: str
    lhs: int
    rhs: int
    modulus: int
    ok: bool


@dataclass(frozen=True)
class OrbitReport:
    """Cycle structure of a permutation on Z/2^w.

    Each cycle is listed in application order starting from its minimal
    element; cycles are ordered by their minimal elements.
    """

    width: int
    cycles: tuple[tuple[int, ...], ...]
    cycle_count: int
    max_cycle_length: int


def _coefficient_sums(p: Polynomial) -> tuple[int, int, int]:
    cs = p.coeffs
    even = sum(cs[2::2])
    odd = sum(cs[3::2])
    total = sum(cs[1:])
    return even, odd, total


def is_permutation(p: Polynomial) -> bool:
    """True iff p permutes Z/2^w for every w >= 1 (degree-0 never does)."""
    cs = p.coeffs
    a1 = cs[1] if len(cs) > 1 else 0
    even, odd, _ = _coefficient_sums(p)
    return a1 % 2 == 1 and even % 2 == 0 and odd % 2 == 0


def one_stroke_conditions(p: Polynomial) -> list[ConditionCheck]:
    """The five single-cycle conditions with their computed values."""
    cs = p.coeffs
    a0 = cs[0]
    a1 = cs[1] if len(cs) > 1 else 0
    a2 = cs[2] if len(cs) > 2 else 0
    even, odd, total = _coefficient_sums(p)
    raw = [
        ("a0 odd", a0, 1, 2),
        ("a1 odd", a1, 1, 2),
        ("even-index sum (a2+a4+...) even", even, 0, 2),
        ("odd-index sum (a3+a5+...) = 2*a2 (mod 4)", odd, 2 * a2, 4),
        ("coefficient sum (a1+a2+...) = 1 (mod 4)", total, 1, 4),
    ]
    return [
        ConditionCheck(label, lhs, rhs, m, (lhs - rhs) % m == 0)
        for label, lhs, rhs, m in raw
    ]


def is_one_stroke(p: Polynomial) -> bool:
    """True iff iterating p from any start walks all of Z/2^w, for every w."""
    return all(c.ok for c in one_stroke_conditions(p))


def classify(p: Polynomial) -> PermClass:
    if is_one_stroke(p):
        return PermClass.ONE_STROKE
    if is_permutation(p):
        return PermClass.PERMUTATION_ONLY
    return PermClass.NOT_PERMUTATION


def _resolve_budget(budget: int | None) -> int:
    b = DEFAULT_EXHAUSTIVE_BUDGET if budget is None else budget
    if b < 1:
        raise ValueError(f"budget must be >= 1, got {b}")
    return b


def _image_table(p: Polynomial, w: int, budget: int | None) -> list[int]:
    check_width(w)
    size = 1 << w
    if size > _resolve_budget(budget):
        raise BudgetExceededError(
            f"exhaustive pass over 2^{w} values exceeds budget "
            f"{_resolve_budget(budget)}; raise the budget to allow it"
        )
    return [eval_mod(p, x, w) for x in range(size)]


def brute_force_is_permutation(p: Polynomial, w: int, budget: int | None = None) -> bool:
    """Decide bijectivity on Z/2^w by evaluating every point.

    Costs 2^w evaluations; practical to about w = 20 at the default
    budget.  Exists to check is_permutation, not to replace it.
    """
    table = _image_table(p, w, budget)
    seen = bytearray(len(table))
    for y in table:
        if seen[y]:
            return False
        seen[y] = 1
    return True


def brute_force_is_one_stroke(p: Polynomial, w: int, budget: int | None = None) -> bool:
    """Decide the single-cycle property at width w by walking from 0.

    The walk is well defined only for permutations, so non-bijective
    tables raise NotPermutationError.
    """
    table = _image_table(p, w, budget)
    if not _table_is_bijective(table):
        raise NotPermutationError(
            f"polynomial {list(p.coeffs)} is not a permutation of Z/2^{w}"
        )
    length = 1
    x = table[0]
    while x != 0:
        x = table[x]
        length += 1
    return length == len(table)


def _table_is_bijective(table: list[int]) -> bool:
    seen = bytearray(len(table))
    for y in table:
        if seen[y]:
            return False
        seen[y] = 1
    return True


def cycle_decomposition(p: Polynomial, w: int, budget: int | None = None) -> OrbitReport:
    """Full cycle structure of p on Z/2^w, in canonical order.

    Raises NotPermutationError if p is not bijective at this width.
    """
    table = _image_table(p, w, budget)
    if not _table_is_bijective(table):
        raise NotPermutationError(
            f"polynomial {list(p.coeffs)} is not a permutation of Z/2^{w}"
        )
    size = len(table)
    visited = bytearray(size)
    cycles = []
    # Scanning upward makes every cycle start at its minimal element and
    # orders cycles by those minima.
    for start in range(size):
        if visited[start]:
            continue
        cycle = [start]
        visited[start] = 1
        x = table[start]
        while x != start:
            cycle.append(x)
            visited[x] = 1
            x = table[x]
        cycles.append(tuple(cycle))
    return OrbitReport(
        width=w,
        cycles=tuple(cycles),
        cycle_count=len(cycles),
        max_cycle_length=max(len(c) for c in cycles),
    )
