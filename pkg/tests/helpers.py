"""Shared oracles for the suite.

Everything here recomputes expectations from first principles (exact
integer convolution, successive evaluation, full tables) so library
results are checked against independent arithmetic, not against
themselves.
"""

import itertools
from functools import cache

from onestroke import Polynomial, eval_mod, is_one_stroke, is_permutation

F = Polynomial([1, 1, 0, 4])
G = Polynomial([1, 1, 2, 6])


def eval_exact(coeffs, x, w):
    """Direct power-sum evaluation, one late reduction."""
    return sum(c * x**i for i, c in enumerate(coeffs)) % (1 << w)


def poly_mul_exact(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def compose_exact(outer, inner):
    """outer(inner(X)) over exact integers by explicit powering."""
    result = [0]
    power = [1]
    for c in outer:
        scaled = [c * q for q in power]
        if len(scaled) > len(result):
            result, scaled = scaled, result
        for i, q in enumerate(scaled):
            result[i] += q
        power = poly_mul_exact(power, inner)
    return result


def reduce_trunc(coeffs, w, trunc):
    """Reduce mod 2^w, keep degrees < trunc, strip trailing zeros."""
    cs = [c % (1 << w) for c in coeffs[:trunc]]
    while len(cs) > 1 and cs[-1] == 0:
        cs.pop()
    return cs


def image_table(p, w):
    return [eval_mod(p, x, w) for x in range(1 << w)]


def table_is_bijective(table):
    seen = bytearray(len(table))
    for y in table:
        if seen[y]:
            return False
        seen[y] = 1
    return True


def orbit_and_positions(p, w):
    """Walk the cycle through 0 by successive evaluation.

    Asserts the walk visits all 2^w values, then returns the orbit
    (orbit[j] is f applied j times to 0) and the inverse position map.
    """
    n = 1 << w
    orbit = [0]
    x = eval_mod(p, 0, w)
    while x != 0 and len(orbit) <= n:
        orbit.append(x)
        x = eval_mod(p, x, w)
    assert len(orbit) == n, f"cycle through 0 has length {len(orbit)}, wanted {n}"
    pos = [0] * n
    for j, v in enumerate(orbit):
        pos[v] = j
    return orbit, pos


def deg3_coeff_vectors():
    """All 4096 coefficient vectors (a0..a3) with entries in [0, 8)."""
    return itertools.product(range(8), repeat=4)


@cache
def deg3_permutations():
    return tuple(
        p for cs in deg3_coeff_vectors() if is_permutation(p := Polynomial(cs))
    )


@cache
def deg3_one_strokes():
    return tuple(
        p for cs in deg3_coeff_vectors() if is_one_stroke(p := Polynomial(cs))
    )


def sample_one_stroke(rng, ncoeffs, lo, hi):
    """Rejection-sample a single-cycle polynomial with uniform coefficients."""
    while True:
        p = Polynomial([rng.randrange(lo, hi) for _ in range(ncoeffs)])
        if is_one_stroke(p):
            return p
