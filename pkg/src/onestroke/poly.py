"""Exact-integer polynomials and their arithmetic modulo 2^w.

Coefficients are stored exactly (signed, unbounded); reduction mod 2^w
happens only when a polynomial is evaluated or composed.  Since the
modulus is always a power of two, reduction is a mask, and Python's `&`
on negative ints already yields the nonnegative residue.
"""

from __future__ import annotations

from typing import Iterable

# Widths above this are refused.  Nothing in the arithmetic breaks past
# it, it is just a sanity rail against absurd inputs.
MAX_WIDTH = 4096

# Ring-multiplication counter used by the complexity report.  Coarse
# per-call increments (degree per Horner pass, executed products per
# truncated multiply); additions, shifts, and masks are not counted.
# Not thread-safe; meant for measurement runs, not concurrent use.
_mul_count = 0


def reset_mul_count() -> None:
    """Zero the multiplication counter."""
    global _mul_count
    _mul_count = 0


def mul_count() -> int:
    """Ring multiplications performed since the last reset."""
    return _mul_count


def check_width(w: int) -> None:
    """Reject widths outside [1, MAX_WIDTH]."""
    if not isinstance(w, int) or isinstance(w, bool):
        raise ValueError(f"width must be an int, got {type(w).__name__}")
    if w < 1:
        raise ValueError(f"width must be >= 1, got {w}")
    if w > MAX_WIDTH:
        raise ValueError(f"width {w} exceeds supported maximum {MAX_WIDTH}")


class Polynomial:
    """f(X) = a_0 + a_1 X + ... + a_N X^N with exact integer coefficients.

    Trailing zero coefficients above index 0 are dropped on construction
    so the degree is well defined.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        cs = list(coeffs)
        if not cs:
            raise ValueError("a polynomial needs at least one coefficient")
        for c in cs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"coefficients must be ints, got {c!r}")
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"


def make_polynomial(coeffs: Iterable[int]) -> Polynomial:
    """Build a Polynomial from a_0-first coefficients, normalizing degree."""
    return Polynomial(coeffs)


def reduce_mod(p: Polynomial, w: int) -> Polynomial:
    """Copy of p with every coefficient reduced to [0, 2^w)."""
    check_width(w)
    mask = (1 << w) - 1
    return Polynomial(c & mask for c in p.coeffs)


def eval_mod(p: Polynomial, x: int, w: int) -> int:
    """Evaluate f(x) mod 2^w by Horner's rule.

    The accumulator is reduced after every step, so intermediates never
    exceed 2^(2w).  x is reduced mod 2^w first; the result is the same
    as evaluating exactly and reducing once at the end.
    """
    global _mul_count
    check_width(w)
    mask = (1 << w) - 1
    x &= mask
    cs = p.coeffs
    acc = cs[-1] & mask
    for i in range(len(cs) - 2, -1, -1):
        acc = (acc * x + cs[i]) & mask
    _mul_count += len(cs) - 1
    return acc


def iterate_naive(p: Polynomial, x: int, j: int, w: int) -> int:
    """f applied j times to x, by j successive evaluations.

    Reference oracle: linear in j, no shortcuts.  j must be >= 0.
    """
    if j < 0:
        raise ValueError(f"iteration count must be >= 0, got {j}")
    check_width(w)
    x &= (1 << w) - 1
    for _ in range(j):
        x = eval_mod(p, x, w)
    return x


def compose_mod(outer: Polynomial, inner: Polynomial, w: int, trunc: int) -> Polynomial:
    """outer(inner(X)) with coefficients mod 2^w, keeping degrees < trunc.

    Horner over the outer coefficients; every polynomial product is
    truncated to trunc terms as it is formed, so work stays bounded by
    trunc even when the full composition would have far higher degree.
    """
    check_width(w)
    if trunc < 1:
        raise ValueError(f"truncation must keep at least the constant term, got {trunc}")
    mask = (1 << w) - 1
    # Inner terms of degree >= trunc only feed product terms that get
    # truncated anyway, so drop them up front.
    inner_t = [c & mask for c in inner.coeffs[:trunc]]
    cs = outer.coeffs
    acc = [cs[-1] & mask]
    for i in range(len(cs) - 2, -1, -1):
        acc = _mul_trunc(acc, inner_t, mask, trunc)
        acc[0] = (acc[0] + cs[i]) & mask
    return Polynomial(acc)


def _mul_trunc(a: list[int], b: list[int], mask: int, trunc: int) -> list[int]:
    # Schoolbook product of coefficient lists, keeping degrees < trunc.
    global _mul_count
    n = min(len(a) + len(b) - 1, trunc)
    out = [0] * n
    for i in range(min(len(a), trunc)):
        ai = a[i]
        jmax = min(len(b), trunc - i)
        _mul_count += jmax
        for j in range(jmax):
            out[i + j] = (out[i + j] + ai * b[j]) & mask
    return out
