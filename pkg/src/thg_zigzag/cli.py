"""Command-line interface.

Exit codes: 0 success, 1 invalid configuration, 2 input/output failure.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .io import read_barcode_json
from .pipeline import ConfigError, InputError, PipelineConfig, betti_table, run_pipeline, stats_table
from .svg import barcode_svg, render_barcode

def _data_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", "-i", default=None, help="input file ('-' or omitted reads stdin)")
    p.add_argument("--format", default="thg-json", help="thg-json | event-csv")
    p.add_argument("--event-mode", default="span", help="span | points (event-csv only)")
    p.add_argument("--merge-gap", type=float, default=0.0,
                   help="fuse intervals of one edge closer than this")
    p.add_argument("--window-size", "-w", type=float, required=True)
    p.add_argument("--shift", "-s", type=float, default=None, help="defaults to the window size")
    p.add_argument("--t0", type=float, default=None, help="override start of the time domain")
    p.add_argument("--tf", type=float, default=None, help="override end of the time domain")
    p.add_argument("--dim", type=int, default=1, help="highest homology dimension (0-3)")
    p.add_argument("--out", "-o", default=None, help="output path (stdout if omitted)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thg-zigzag",
        description="Zigzag persistent homology of temporal hypergraphs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="full pipeline, writes a barcode JSON")
    _data_args(run)
    run.add_argument("--mode", default="union", help="union | intersection")
    run.add_argument("--axis", default="index", help="index | time")
    run.add_argument("--stats-out", default=None, help="also write the per-window stats CSV")
    run.add_argument("--svg", default=None, help="also render the barcode to this SVG file")

    betti = sub.add_parser("betti", help="Betti numbers of each snapshot complex")
    _data_args(betti)

    stats = sub.add_parser("stats", help="edge and vertex counts per window")
    _data_args(stats)

    render = sub.add_parser("render", help="render a barcode JSON as SVG")
    render.add_argument("--input", "-i", required=True, help="barcode JSON")
    render.add_argument("--out", "-o", default=None, help="SVG path (stdout if omitted)")
    render.add_argument("--svg", default=None, help="alias of --out")
    return parser


def _config(args) -> PipelineConfig:
    return PipelineConfig(
        input=args.input,
        format=args.format,
        event_mode=args.event_mode,
        merge_gap=args.merge_gap,
        window_size=args.window_size,
        shift=args.shift,
        t0=args.t0,
        tf=args.tf,
        p_max=args.dim,
        mode=getattr(args, "mode", "union"),
        axis=getattr(args, "axis", "index"),
        out=args.out,
        stats_out=getattr(args, "stats_out", None),
        svg=getattr(args, "svg", None),
    )


def _render(args) -> None:
    try:
        barcode = read_barcode_json(args.input)
    except (OSError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    out = args.out or args.svg
    if out is None:
        sys.stdout.write(barcode_svg(barcode))
        return
    try:
        render_barcode(barcode, out)
    except OSError as exc:
        raise InputError(f"cannot write {out}: {exc}") from exc


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; bad flags are configuration errors here
        return 1 if exc.code == 2 else (exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        if args.command == "render":
            _render(args)
        elif args.command == "run":
            run_pipeline(_config(args))
        elif args.command == "betti":
            betti_table(_config(args))
        else:
            stats_table(_config(args))
    except (ConfigError, InputError) as exc:
        print(f"thg-zigzag: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"thg-zigzag: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
