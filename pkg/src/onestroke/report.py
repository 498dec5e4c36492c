"""Operation-count measurements for the ladder and the bitwise inverse.

Counts ring multiplications (see poly.mul_count) rather than wall time,
so results are machine-independent.  Ladder construction and a single
inverse are measured separately per width; a power-law fit of count
against width summarizes the growth.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

from .ladder import _build_ladder, invert
from .poly import Polynomial, mul_count, reset_mul_count

DEFAULT_WIDTHS = (8, 16, 32, 64)


@dataclass(frozen=True)
class CountRow:
    width: int
    ladder_mults: int
    invert_mults: int


def measure_counts(p: Polynomial, widths=DEFAULT_WIDTHS) -> list[CountRow]:
    """Multiplication counts for ladder construction and one inverse.

    Builds the ladder uncached so every width pays its real cost.  The
    inverse is taken at y = 2^w - 1; its count does not depend on y.
    """
    rows = []
    for w in widths:
        reset_mul_count()
        _build_ladder(p, w)
        ladder_mults = mul_count()
        reset_mul_count()
        invert(p, (1 << w) - 1, w)
        invert_mults = mul_count()
        reset_mul_count()
        rows.append(CountRow(width=w, ladder_mults=ladder_mults, invert_mults=invert_mults))
    return rows


def fit_exponent(points: list[tuple[int, int]]) -> float:
    """Least-squares slope of log(count) against log(width).

    The slope is the b in count ~ width^b; needs >= 2 distinct widths
    and positive counts.
    """
    if len(points) < 2:
        raise ValueError("need at least two (width, count) points to fit")
    xs = [math.log(w) for w, _ in points]
    ys = [math.log(c) for _, c in points]
    xbar = sum(xs) / len(xs)
    ybar = sum(ys) / len(ys)
    sxx = sum((x - xbar) ** 2 for x in xs)
    if sxx == 0:
        raise ValueError("widths must not all be equal")
    sxy = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
    return sxy / sxx


def write_counts_csv(rows: list[CountRow], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["w", "ladder_mults", "invert_mults"])
        for r in rows:
            writer.writerow([r.width, r.ladder_mults, r.invert_mults])


def render_counts_figure(rows: list[CountRow], path) -> None:
    """Log-log scatter of both count series with their fitted lines."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    ws = [r.width for r in rows]
    for field, marker in (("ladder_mults", "o"), ("invert_mults", "s")):
        counts = [getattr(r, field) for r in rows]
        b = fit_exponent(list(zip(ws, counts)))
        ax.plot(ws, counts, marker, label=f"{field} (fit w^{b:.2f})")
        # Fitted line through the mean point in log space.
        la = sum(math.log(c) for c in counts) / len(counts) - b * sum(
            math.log(w) for w in ws
        ) / len(ws)
        ax.plot(ws, [math.exp(la) * w**b for w in ws], "--", alpha=0.6)
    ax.set_xscale("log", base=2)
    ax.set_yscale("log")
    ax.set_xlabel("width w (bits)")
    ax.set_ylabel("ring multiplications")
    ax.set_title("Operation counts against width")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
