"""Polynomial-time inverse, discrete log, and jump for single-cycle maps.

The expensive object is the ladder: truncated compositions h_{2^i}
representing f applied 2^i times.  Rung i only ever gets evaluated at
points divisible by 2^i, where its truncation to degrees below
ceil(w/i) is exact, because changing x by a multiple of 2^i changes
x^d by a multiple of 2^(i*d) and terms past degree ceil(w/i) move by
multiples of 2^w.  Rung 0 is f itself, untruncated.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classify import is_one_stroke, is_permutation
from .errors import NotOneStrokeError, NotPermutationError
from .poly import Polynomial, check_width, compose_mod, eval_mod, reduce_mod


@dataclass(frozen=True)
class Ladder:
    """Rungs h_{2^0} .. h_{2^(w-1)} of f over Z/2^w."""

    base: Polynomial
    width: int
    rungs: tuple[Polynomial, ...]


def invert(p: Polynomial, y: int, w: int) -> int:
    """The unique x with p(x) = y mod 2^w, by lifting one bit at a time.

    After the step for bit m-1, p(x) matches y mod 2^m; if they differ,
    flipping bit m-1 of x fixes it, because adding 2^(m-1) to the input
    adds exactly 2^(m-1) to a permutation's output mod 2^m.  Costs w
    evaluations, so it is polynomial in w even at large widths.
    """
    if not is_permutation(p):
        raise NotPermutationError(
            f"polynomial {list(p.coeffs)} does not permute Z/2^w; no inverse"
        )
    check_width(w)
    y &= (1 << w) - 1
    x = 0
    for m in range(1, w + 1):
        if (y & ((1 << m) - 1)) != eval_mod(p, x, m):
            x += 1 << (m - 1)
    return x


def _build_ladder(p: Polynomial, w: int) -> Ladder:
    if not is_one_stroke(p):
        raise NotOneStrokeError(
            f"polynomial {list(p.coeffs)} does not drive a single cycle; "
            "ladder operations need one"
        )
    check_width(w)
    rungs = [reduce_mod(p, w)]
    for i in range(1, w):
        trunc = -(-w // i)
        rungs.append(compose_mod(rungs[-1], rungs[-1], w, trunc))
    return Ladder(base=p, width=w, rungs=tuple(rungs))


# Streams and repeated jumps hit the same (p, w) over and over; the
# ladder is immutable, so sharing cached instances is safe.
build_ladder = lru_cache(maxsize=128)(_build_ladder)


def dlog_to_zero(ladder: Ladder, x: int) -> int:
    """The j in [0, 2^w) with f applied j times sending x to 0.

    Scans bits low to high: once bits below i are cleared, bit i of the
    remaining value says whether rung i must be applied.  Each applied
    rung clears its bit, so every evaluation happens on a point
    divisible by 2^i, inside the rung's exact range.
    """
    w = ladder.width
    x &= (1 << w) - 1
    j = 0
    for i, rung in enumerate(ladder.rungs):
        if (x >> i) & 1:
            x = eval_mod(rung, x, w)
            j += 1 << i
    return j


def dlog(ladder: Ladder, x: int, y: int) -> int:
    """The j in [0, 2^w) with f applied j times sending x to y."""
    return (dlog_to_zero(ladder, x) - dlog_to_zero(ladder, y)) % (1 << ladder.width)


def jump_from_zero(ladder: Ladder, k: int) -> int:
    """f applied k times to 0, one rung per set bit of k.

    Bits are applied high to low, so entering bit i the intermediate is
    f applied (a multiple of 2^(i+1)) times to 0, hence divisible by
    2^(i+1), again inside rung i's exact range.
    """
    w = ladder.width
    k %= 1 << w
    x = 0
    for i in range(w - 1, -1, -1):
        if (k >> i) & 1:
            x = eval_mod(ladder.rungs[i], x, w)
    return x


def jump(ladder: Ladder, x: int, k: int) -> int:
    """f applied k times to x; k may exceed 2^w and is reduced mod 2^w."""
    w = ladder.width
    k %= 1 << w
    back = dlog_to_zero(ladder, x)
    # x sits 'back' steps before 0 on the cycle, so k steps past x is
    # k - back steps past 0.
    return jump_from_zero(ladder, (k - back) % (1 << w))
