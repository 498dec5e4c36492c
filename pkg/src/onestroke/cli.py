"""Command-line front end.  Thin adapter: parse, call the library, print.

Exit codes: 0 success, 2 argument or parse problems, 3 precondition
failures (not a permutation / not one-stroke), 4 exhaustive budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from .classify import (
    PermClass,
    classify,
    cycle_decomposition,
    one_stroke_conditions,
)
from .errors import BudgetExceededError, NotOneStrokeError, NotPermutationError
from .ladder import build_ladder, dlog, invert, jump
from .poly import MAX_WIDTH, Polynomial, eval_mod
from .report import (
    DEFAULT_WIDTHS,
    fit_exponent,
    measure_counts,
    render_counts_figure,
    write_counts_csv,
)
from .stream import StreamState

_CLASS_TEXT = {
    PermClass.NOT_PERMUTATION: "not a permutation",
    PermClass.PERMUTATION_ONLY: "permutation (not one-stroke)",
    PermClass.ONE_STROKE: "one-stroke",
}

_COEFF_RE = re.compile(r"^-?(0[xX][0-9a-fA-F]+|[0-9]+)$")


def parse_poly(text: str) -> Polynomial:
    """a0,a1,...,aN with decimal or 0x-hex tokens, optional leading '-'."""
    coeffs = []
    for tok in text.split(","):
        tok = tok.strip()
        if not _COEFF_RE.match(tok):
            raise argparse.ArgumentTypeError(
                f"bad coefficient {tok!r}; use decimal or 0x-hex, a0 first"
            )
        coeffs.append(int(tok, 16) if "0x" in tok.lower() else int(tok, 10))
    return Polynomial(coeffs)


def parse_width(text: str) -> int:
    try:
        w = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"width must be an integer, got {text!r}")
    if not 1 <= w <= MAX_WIDTH:
        raise argparse.ArgumentTypeError(f"width must be in [1, {MAX_WIDTH}], got {w}")
    return w


def _nonneg(text: str) -> int:
    try:
        n = int(text, 16) if text.lower().startswith(("0x", "-0x")) else int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {n}")
    return n


def _budget() -> int | None:
    raw = os.environ.get("OSP_MAX_EXHAUSTIVE")
    return int(raw) if raw else None


def _fmt(n: int, args) -> str:
    return f"0x{n:x}" if args.hex else str(n)


def _emit_result(args, value) -> None:
    if args.json:
        print(json.dumps({"result": value}))
    elif isinstance(value, list):
        for v in value:
            print(_fmt(v, args))
    else:
        print(_fmt(value, args))


def _check_residue(name: str, value: int, w: int) -> None:
    if not 0 <= value < 1 << w:
        raise _ResidueRangeError(f"{name} must be in [0, 2^{w}), got {value}")


class _ResidueRangeError(ValueError):
    pass


def cmd_classify(args) -> int:
    pc = classify(args.poly)
    if not args.explain:
        if args.json:
            print(json.dumps({"result": _CLASS_TEXT[pc]}))
        else:
            print(_CLASS_TEXT[pc])
        return 0
    conditions = one_stroke_conditions(args.poly)
    if args.json:
        print(
            json.dumps(
                {
                    "result": _CLASS_TEXT[pc],
                    "conditions": [
                        {
                            "label": c.label,
                            "lhs": c.lhs,
                            "rhs": c.rhs,
                            "modulus": c.modulus,
                            "ok": c.ok,
                        }
                        for c in conditions
                    ],
                }
            )
        )
        return 0
    print(_CLASS_TEXT[pc])
    for c in conditions:
        verdict = "pass" if c.ok else "FAIL"
        print(
            f"  [{verdict}] {c.label}: lhs = {c.lhs}, rhs = {c.rhs}, "
            f"{c.lhs % c.modulus} vs {c.rhs % c.modulus} (mod {c.modulus})"
        )
    return 0


def cmd_eval(args) -> int:
    _check_residue("-x", args.value, args.width)
    _emit_result(args, eval_mod(args.poly, args.value, args.width))
    return 0


def cmd_orbit(args) -> int:
    report = cycle_decomposition(args.poly, args.width, budget=_budget())
    cycles = report.cycles
    if args.start is not None:
        _check_residue("--start", args.start, args.width)
        cycles = tuple(c for c in cycles if args.start in c)
    if args.json:
        print(json.dumps({"result": {"width": report.width, "cycles": [list(c) for c in cycles]}}))
        return 0
    for cycle in cycles:
        shown = [_fmt(x, args) for x in cycle] + [_fmt(cycle[0], args)]
        print(" -> ".join(shown))
    return 0


def cmd_invert(args) -> int:
    _check_residue("-y", args.target, args.width)
    _emit_result(args, invert(args.poly, args.target, args.width))
    return 0


def cmd_dlog(args) -> int:
    _check_residue("--from", args.src, args.width)
    _check_residue("--to", args.dst, args.width)
    lad = build_ladder(args.poly, args.width)
    _emit_result(args, dlog(lad, args.src, args.dst))
    return 0


def cmd_jump(args) -> int:
    _check_residue("--from", args.src, args.width)
    lad = build_ladder(args.poly, args.width)
    _emit_result(args, jump(lad, args.src, args.steps))
    return 0


def cmd_gen(args) -> int:
    _check_residue("--seed", args.seed, args.width)
    s = StreamState(args.poly, args.seed, args.width)
    if args.skip:
        s.seek(args.skip)
    values = [s.next() for _ in range(args.count)]
    _emit_result(args, values)
    return 0


def cmd_report(args) -> int:
    rows = measure_counts(args.poly, args.widths)
    csv_path = os.path.join(args.out, "complexity.csv")
    fig_path = os.path.join(args.out, "complexity.png")
    os.makedirs(args.out, exist_ok=True)
    write_counts_csv(rows, csv_path)
    render_counts_figure(rows, fig_path)
    ladder_b = fit_exponent([(r.width, r.ladder_mults) for r in rows])
    invert_b = fit_exponent([(r.width, r.invert_mults) for r in rows])
    if args.json:
        print(
            json.dumps(
                {
                    "result": {
                        "csv": csv_path,
                        "figure": fig_path,
                        "ladder_exponent": ladder_b,
                        "invert_exponent": invert_b,
                    }
                }
            )
        )
        return 0
    for r in rows:
        print(f"w={r.width}: ladder {r.ladder_mults} mults, invert {r.invert_mults} mults")
    print(f"ladder count ~ w^{ladder_b:.2f}")
    print(f"invert count ~ w^{invert_b:.2f}")
    print(f"wrote {csv_path}")
    print(f"wrote {fig_path}")
    return 0


def _parse_widths(text: str) -> tuple[int, ...]:
    return tuple(parse_width(t) for t in text.split(","))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="osp",
        description="Permutation polynomials on w-bit integers: classify, "
        "invert, take discrete logs, jump, and generate full-period streams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-p",
        "--poly",
        type=parse_poly,
        required=True,
        help="coefficients a0,a1,...,aN (decimal or 0x-hex)",
    )
    common.add_argument("--json", action="store_true", help="emit a JSON object")
    common.add_argument("--hex", action="store_true", help="print numbers as 0x-hex")

    width = argparse.ArgumentParser(add_help=False)
    width.add_argument("-w", "--width", type=parse_width, required=True, help="modulus is 2^w")

    p = sub.add_parser("classify", parents=[common], help="name the class of the map")
    p.add_argument("--explain", action="store_true", help="show each coefficient condition")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("eval", parents=[common, width], help="evaluate f(x) mod 2^w")
    p.add_argument("-x", "--value", type=_nonneg, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("orbit", parents=[common, width], help="print cycles of the map")
    p.add_argument("--start", type=_nonneg, default=None, help="only the cycle through this value")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("invert", parents=[common, width], help="solve f(x) = y for x")
    p.add_argument("-y", "--target", type=_nonneg, required=True)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("dlog", parents=[common, width], help="steps from one value to another")
    p.add_argument("--from", dest="src", type=_nonneg, required=True)
    p.add_argument("--to", dest="dst", type=_nonneg, required=True)
    p.set_defaults(func=cmd_dlog)

    p = sub.add_parser("jump", parents=[common, width], help="apply f k times in one go")
    p.add_argument("--from", dest="src", type=_nonneg, required=True)
    p.add_argument("-k", "--steps", type=_nonneg, required=True)
    p.set_defaults(func=cmd_jump)

    p = sub.add_parser("gen", parents=[common, width], help="emit stream outputs")
    p.add_argument("--seed", type=_nonneg, default=0)
    p.add_argument("-n", "--count", type=_nonneg, required=True)
    p.add_argument("--skip", type=_nonneg, default=0, help="seek this far before emitting")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser(
        "report",
        parents=[common],
        help="measure multiplication counts; write CSV and figure",
    )
    p.add_argument("--widths", type=_parse_widths, default=DEFAULT_WIDTHS)
    p.add_argument("-o", "--out", default=".", help="output directory")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _ResidueRangeError as e:
        print(f"osp: {e}", file=sys.stderr)
        return 2
    except (NotPermutationError, NotOneStrokeError) as e:
        print(f"osp: {e}", file=sys.stderr)
        return 3
    except BudgetExceededError as e:
        print(f"osp: {e}", file=sys.stderr)
        return 4
    except ValueError as e:
        print(f"osp: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
