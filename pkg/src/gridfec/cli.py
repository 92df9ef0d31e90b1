"""Command-line front end.

Exit codes: 0 on success, 1 when a decode-style command detected (and
corrected or arbitrated) errors, 2 on usage or validation problems.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .approx import ApproxDecodeError, approx_decode
from .channel import ChannelConfig, ChannelError, run_trial
from .gf2 import BitVector, Gf2Error
from .grid import (
    GridCode,
    GridCodeword,
    GridError,
    TrueChart,
    apply_chart,
    apply_mask,
    load_stencil,
    mask_from_ap,
)
from .linear import CapacityError, CodeError, LinearCode
from .specio import (
    AnyCode,
    SpecError,
    parse_spec,
    parse_super_word,
    to_super_codeword,
)
from .super_codes import SuperColumnCode, SuperRowCode

DETECTED_ERROR = 1
USAGE_ERROR = 2

_WORD_LIST_CAP = 12  # max k for which codeword sets are printed in full


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, CodeError, GridError, ChannelError, Gf2Error,
            ApproxDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridfec",
        description="Binary linear block codes, their compositions, and a channel simulator.")
    sub = parser.add_subparsers(required=True)

    code = sub.add_parser("code", help="single linear code operations").add_subparsers(required=True)
    p = code.add_parser("info", help="print code parameters")
    _spec_arg(p)
    p.set_defaults(func=_code_info)
    p = code.add_parser("encode", help="encode a message")
    _spec_arg(p)
    p.add_argument("--message", required=True, help="message bits, length k")
    p.set_defaults(func=_code_encode)
    p = code.add_parser("decode", help="decode a received word")
    _spec_arg(p)
    p.add_argument("--word", required=True, help="received bits, length n")
    p.add_argument("--strategy", choices=("coset", "approx"), default="coset")
    p.set_defaults(func=_code_decode)

    sup = sub.add_parser("super", help="row/column composition operations").add_subparsers(required=True)
    p = sup.add_parser("new", help="validate a composition and print a summary")
    _spec_arg(p)
    p.set_defaults(func=_super_new)
    p = sup.add_parser("encode", help="encode per-component messages")
    _spec_arg(p)
    p.add_argument("--messages", required=True, help="'|'-separated messages")
    p.set_defaults(func=_super_encode)
    p = sup.add_parser("decode", help="decode a received super word")
    _spec_arg(p)
    p.add_argument("--word", required=True, help="'|'-separated received word")
    p.set_defaults(func=_super_decode)
    p = sup.add_parser("rate", help="print the transmission rate")
    _spec_arg(p)
    p.set_defaults(func=_super_rate)
    p = sup.add_parser("dual", help="print the componentwise dual")
    _spec_arg(p)
    p.set_defaults(func=_super_dual)

    grid = sub.add_parser("grid", help="grid code operations").add_subparsers(required=True)
    p = grid.add_parser("encode", help="encode a message grid to a row stream")
    _spec_arg(p)
    p.add_argument("--messages-file", required=True, type=Path,
                   help="one '|'-separated message row per line")
    p.set_defaults(func=_grid_encode)
    p = grid.add_parser("decode", help="decode a received stream per cell")
    _grid_stream_args(p)
    p.set_defaults(func=_grid_decode)
    p = grid.add_parser("stream", help="re-serialize a stream between row and column order")
    _grid_stream_args(p)
    p.add_argument("--to", choices=("row", "col"), required=True)
    p.set_defaults(func=_grid_stream)
    p = grid.add_parser("vote", help="majority vote over a uniform grid")
    _grid_stream_args(p)
    p.set_defaults(func=_grid_vote)
    p = grid.add_parser("reconcile", help="merge row- and column-transmitted copies")
    _spec_arg(p)
    p.add_argument("--row-file", required=True, type=Path)
    p.add_argument("--col-file", required=True, type=Path)
    p.set_defaults(func=_grid_reconcile)
    p = grid.add_parser("chart", help="select the cells a true chart marks")
    _grid_stream_args(p)
    p.add_argument("--chart-file", required=True, type=Path,
                   help="'*'/'.' grid matching the code grid")
    p.set_defaults(func=_grid_chart)
    p = grid.add_parser("mask", help="select cells by arithmetic progression or stencil")
    _grid_stream_args(p)
    p.add_argument("--first", type=int)
    p.add_argument("--diff", type=int)
    p.add_argument("--last", type=int)
    p.add_argument("--stencil", help="shipped stencil name: t, k or cross")
    p.set_defaults(func=_grid_mask)

    sim = sub.add_parser("sim", help="channel simulation").add_subparsers(required=True)
    p = sim.add_parser("run", help="run Monte-Carlo trials of a decoding strategy")
    _spec_arg(p)
    p.add_argument("--fill", help="codeword repeated in every cell")
    p.add_argument("--stream-file", type=Path, help="row stream of the sent grid word")
    p.add_argument("--p", type=float, required=True, help="bit flip probability")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strategy", required=True,
                   choices=("per_cell_decode", "majority_vote", "simultaneous"))
    p.set_defaults(func=_sim_run)
    return parser


def _spec_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--spec", required=True, type=Path, help="JSON code/composition spec")


def _grid_stream_args(p: argparse.ArgumentParser) -> None:
    _spec_arg(p)
    p.add_argument("--stream-file", required=True, type=Path,
                   help="received stream, one super row string per line")
    p.add_argument("--by", choices=("row", "col"), default="row",
                   help="whether the stream lists rows or columns")


def _load(args) -> AnyCode:
    return parse_spec(args.spec.read_text())


def _expect_linear(code: AnyCode) -> LinearCode:
    if not isinstance(code, LinearCode):
        raise SpecError("this command needs a single-code spec, not a composition")
    return code


def _expect_super(code: AnyCode):
    if not isinstance(code, (SuperRowCode, SuperColumnCode)):
        raise SpecError("this command needs a row or column composition spec")
    return code


def _expect_grid(code: AnyCode) -> GridCode:
    if isinstance(code, LinearCode):
        return GridCode([[code]])
    if not isinstance(code, GridCode):
        raise SpecError("this command needs a grid (or single-code) spec")
    return code


def _read_stream(args, grid: GridCode) -> GridCodeword:
    lines = [ln for ln in args.stream_file.read_text().splitlines() if ln.strip()]
    return grid.from_col_stream(lines) if args.by == "col" else grid.from_row_stream(lines)


# -- code ----------------------------------------------------------------------


def _code_info(args) -> int:
    c = _expect_linear(_load(args))
    print(f"(n, k) = ({c.n}, {c.k})")
    print(f"check symbols: {c.n - c.k}")
    rate = c.transmission_rate()
    if (rate.numerator, rate.denominator) == (c.k, c.n):
        print(f"rate: {c.k}/{c.n}")
    else:
        print(f"rate: {c.k}/{c.n} = {rate}")
    try:
        d = c.min_distance()
        print(f"min distance: {d}")
        print(f"corrects up to: {(d - 1) // 2} errors")
    except CapacityError:
        print("min distance: skipped (code too large to enumerate)")
    if c.k <= _WORD_LIST_CAP:
        words = " ".join(sorted(str(w) for w in c.codewords))
        print(f"codewords: {words}")
    return 0


def _code_encode(args) -> int:
    c = _expect_linear(_load(args))
    print(c.encode(BitVector.from_string(args.message)))
    return 0


def _code_decode(args) -> int:
    c = _expect_linear(_load(args))
    y = BitVector.from_string(args.word)
    syndrome = c.syndrome(y)
    if args.strategy == "approx":
        word = approx_decode(c, y)
        print(f"codeword: {word}")
    else:
        word, err = c.decode(y)
        print(f"codeword: {word}")
        print(f"error: {err}")
    return DETECTED_ERROR if syndrome.bits != 0 else 0


# -- super ----------------------------------------------------------------------


def _super_new(args) -> int:
    sc = _expect_super(_load(args))
    shape = "row" if isinstance(sc, SuperRowCode) else "column"
    print(f"{shape} composition of {len(sc)} components")
    for i, c in enumerate(sc.components):
        print(f"  component {i}: ({c.n}, {c.k})")
    print(f"cardinality: {sc.cardinality()}")
    _print_rate(sc)
    return 0


def _super_encode(args) -> int:
    sc = _expect_super(_load(args))
    messages = parse_super_word(args.messages)
    if any(m is None for m in messages):
        raise SpecError("messages cannot contain absent cells")
    word = sc.encode(messages)
    print(word)
    return 0


def _super_decode(args) -> int:
    sc = _expect_super(_load(args))
    received = to_super_codeword(parse_super_word(args.word))
    detected = not sc.is_member(received)
    word, err = sc.decode(received)
    print(f"codeword: {word}")
    print(f"error: {err}")
    return DETECTED_ERROR if detected else 0


def _print_rate(sc) -> None:
    total_k = sum(c.k for c in sc.components)
    total_n = sum(c.n for c in sc.components)
    rate = sc.transmission_rate()
    if (rate.numerator, rate.denominator) == (total_k, total_n):
        print(f"rate: {total_k}/{total_n}")
    else:
        print(f"rate: {total_k}/{total_n} = {rate}")


def _super_rate(args) -> int:
    _print_rate(_expect_super(_load(args)))
    return 0


def _super_dual(args) -> int:
    sc = _expect_super(_load(args))
    if not isinstance(sc, SuperRowCode):
        raise SpecError("dual is defined for row compositions")
    dual = sc.dual()
    for i, c in enumerate(dual.components):
        if c.k <= _WORD_LIST_CAP:
            words = " ".join(sorted(str(w) for w in c.codewords))
            print(f"component {i} dual ({c.n}, {c.k}): {words}")
        else:
            print(f"component {i} dual: ({c.n}, {c.k})")
    return 0


# -- grid -------------------------------------------------------------------------


def _grid_encode(args) -> int:
    grid = _expect_grid(_load(args))
    lines = [ln for ln in args.messages_file.read_text().splitlines() if ln.strip()]
    if len(lines) != grid.m:
        raise SpecError(f"expected {grid.m} message rows, got {len(lines)}")
    messages = []
    for ln in lines:
        row = parse_super_word(ln)
        if any(m is None for m in row):
            raise SpecError("message rows cannot contain absent cells")
        messages.append(row)
    word = grid.encode(messages)  # type: ignore[arg-type]
    for line in word.to_row_stream():
        print(line)
    return 0


def _grid_decode(args) -> int:
    grid = _expect_grid(_load(args))
    received = _read_stream(args, grid)
    detected = not grid.is_member(received)
    decoded, errors = grid.decode(received)
    for line in decoded.to_row_stream():
        print(line)
    total = sum(e.weight() for row in errors.cells for e in row if e is not None)
    print(f"corrected bit errors: {total}")
    return DETECTED_ERROR if detected else 0


def _grid_stream(args) -> int:
    grid = _expect_grid(_load(args))
    word = _read_stream(args, grid)
    lines = word.to_col_stream() if args.to == "col" else word.to_row_stream()
    for line in lines:
        print(line)
    return 0


def _grid_vote(args) -> int:
    grid = _expect_grid(_load(args))
    received = _read_stream(args, grid)
    print(grid.majority_vote(received))
    return 0


def _grid_reconcile(args) -> int:
    grid = _expect_grid(_load(args))
    rows = [ln for ln in args.row_file.read_text().splitlines() if ln.strip()]
    cols = [ln for ln in args.col_file.read_text().splitlines() if ln.strip()]
    result = grid.simultaneous_reconcile(rows, cols)
    for line in result.word.to_row_stream():
        print(line)
    if result.disagreements:
        spots = " ".join(f"({i},{j})" for i, j in result.disagreements)
        print(f"disagreeing cells: {spots}")
        return DETECTED_ERROR
    return 0


def _grid_chart(args) -> int:
    grid = _expect_grid(_load(args))
    word = _read_stream(args, grid)
    chart = TrueChart.from_text(args.chart_file.read_text())
    for cell in apply_chart(word, chart):
        print(cell)
    return 0


def _grid_mask(args) -> int:
    grid = _expect_grid(_load(args))
    word = _read_stream(args, grid)
    if args.stencil:
        mask = load_stencil(args.stencil)
    elif args.first is not None and args.diff is not None and args.last is not None:
        mask = mask_from_ap(args.first, args.diff, args.last)
    else:
        raise SpecError("give either --stencil or all of --first/--diff/--last")
    for cell in apply_mask(word, mask):
        print(cell)
    return 0


# -- sim -------------------------------------------------------------------------


def _sim_run(args) -> int:
    grid = _expect_grid(_load(args))
    if args.fill is not None:
        cell = BitVector.from_string(args.fill)
        sent = GridCodeword.from_rows([[cell] * grid.n for _ in range(grid.m)])
    elif args.stream_file is not None:
        lines = [ln for ln in args.stream_file.read_text().splitlines() if ln.strip()]
        sent = grid.from_row_stream(lines)
    else:
        raise SpecError("give the sent word via --fill or --stream-file")
    cfg = ChannelConfig(args.p, args.seed)
    report = run_trial(grid, sent, args.strategy, cfg, args.trials)
    print(f"trials: {report.trials}")
    print(f"decode_success: {report.decode_success}")
    print(f"undetected_error: {report.undetected_error}")
    print(f"residual_bit_errors: {report.residual_bit_errors}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
