"""Batch command line interface.

Exit codes: 0 success, 2 input error, 3 configuration error,
4 internal error.
"""

from __future__ import annotations

import argparse
import sys

from .discretize import MetricKind
from .errors import (
    DysnavError,
    EmptyInput,
    InvalidEpsilon,
    InvalidOmega,
    InvalidTau,
    MalformedTimestamp,
)
from .hierarchy import Mode
from .pipeline import AnalysisConfig, run_pipeline, serialize_bundle

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CONFIG = 3
EXIT_INTERNAL = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dysnav",
        description="Analyze a dynamic social network interaction log.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    analyze = sub.add_parser("analyze", help="run the full pipeline on a log file")
    analyze.add_argument("--input", required=True, help="interaction log (CSV, 5 fields)")
    analyze.add_argument(
        "--epsilon", required=True,
        help="time interval width, e.g. 1d, 3y, 6h, 15m, 30s, 2mo",
    )
    analyze.add_argument(
        "--slices", type=int, default=1,
        help="number of edge-weight filter slices per interval (default 1)",
    )
    analyze.add_argument(
        "--tau", type=float, default=0.5,
        help="clustering threshold in [0, 1] (default 0.5)",
    )
    analyze.add_argument(
        "--metric", choices=[m.value for m in MetricKind], default="occurrency",
        help="edge weight aggregation (default occurrency)",
    )
    analyze.add_argument(
        "--mode", choices=[m.value for m in Mode], default="normal",
        help="hierarchy mode: normal or ct (counter terrorism)",
    )
    analyze.add_argument(
        "--tau-grid", default=None,
        help="comma separated increasing taus; rows become a tau axis "
             "over the unfiltered snapshots",
    )
    analyze.add_argument("--output", default=None, help="bundle path (default: stdout)")
    analyze.add_argument(
        "--serve", type=int, default=None, metavar="PORT",
        help="serve the analysis over HTTP after computing it",
    )
    analyze.add_argument(
        "--consensus-threshold", type=float, default=0.5,
        help="member support needed to enter a consensus community (default 0.5)",
    )
    analyze.add_argument(
        "--hierarchy-cell", default=None, metavar="I,J",
        help="compute the hierarchy on one snapshot cell instead of the consensus graph",
    )
    analyze.add_argument(
        "--literal-mst", action="store_true",
        help="normal mode: keep the literal minimum spanning tree reading "
             "(least important edges) instead of the maximum one",
    )
    return parser


def config_from_args(args: argparse.Namespace) -> AnalysisConfig:
    tau_grid = None
    if args.tau_grid:
        try:
            tau_grid = tuple(float(part) for part in args.tau_grid.split(","))
        except ValueError:
            raise InvalidTau(f"bad tau grid {args.tau_grid!r}") from None
    hierarchy_cell = None
    if args.hierarchy_cell:
        try:
            i, j = (int(part) for part in args.hierarchy_cell.split(","))
            hierarchy_cell = (i, j)
        except ValueError:
            raise DysnavError(f"bad hierarchy cell {args.hierarchy_cell!r}") from None
    config = AnalysisConfig(
        input_path=args.input,
        epsilon=args.epsilon,
        omega=args.slices,
        tau=args.tau,
        metric=MetricKind(args.metric),
        mode=Mode(args.mode),
        tau_grid=tau_grid,
        output_path=args.output,
        serve=args.serve,
        consensus_threshold=args.consensus_threshold,
        literal_min_tree=args.literal_mst,
        hierarchy_cell=hierarchy_cell,
    )
    config.validate()
    return config


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except (InvalidEpsilon, InvalidOmega, InvalidTau, DysnavError) as exc:
        print(f"dysnav: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    try:
        result = run_pipeline(config)
    except (InvalidEpsilon, InvalidOmega, InvalidTau) as exc:
        print(f"dysnav: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (EmptyInput, MalformedTimestamp, OSError) as exc:
        print(f"dysnav: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DysnavError as exc:
        print(f"dysnav: error during analysis: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # unexpected: report, don't traceback
        print(f"dysnav: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL

    text = serialize_bundle(result.bundle)
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8") as handle:
            handle.write(text)
        top = result.changes.top()
        print(
            f"dysnav: {result.grid.alpha} intervals x {result.simgraph.rows} rows, "
            f"{len(result.communities)} consensus communities, "
            f"top change at boundary {top.boundary}; wrote {config.output_path}",
            file=sys.stderr,
        )
    elif config.serve is None:
        sys.stdout.write(text)

    if config.serve is not None:
        from .server import serve_api

        serve_api(result, config.serve)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
