"""The `extract` command: frames in, canonical feature/label files out.

Exit codes: 0 success, 2 bad arguments, 3 undecodable or invalid data,
5 missing environment resource (pretrained weights).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ConfigError, DataError, EnvError, IoError
from .extract import ExtractionJob, extract, parse_ranges


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extract",
        description="Extract per-frame deep features from a video or frame folder",
    )
    parser.add_argument("--input", required=True, help="video file or directory of frames")
    parser.add_argument("--out", required=True, help="output .featb path")
    parser.add_argument("--grayscale", action="store_true",
                        help="convert frames to replicated grayscale first")
    parser.add_argument("--labels", default=None, help="also write a .labels file here")
    parser.add_argument("--anomalous", default="",
                        help="0-based frame ranges labeled +1, e.g. 120-180,300")
    parser.add_argument("--weights", default="pretrained",
                        help="'pretrained', 'random', or a checkpoint path")
    parser.add_argument("--seed", type=int, default=0, help="seed for random weights")
    parser.add_argument("--batch-size", type=int, default=16)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.anomalous and args.labels is None:
        print("extract: error: --anomalous requires --labels", file=sys.stderr)
        return 2
    try:
        job = ExtractionJob(
            input_path=Path(args.input),
            feature_path=Path(args.out),
            label_path=None if args.labels is None else Path(args.labels),
            grayscale=args.grayscale,
            weights=args.weights,
            seed=args.seed,
            batch_size=args.batch_size,
            anomalous_ranges=parse_ranges(args.anomalous),
        )
        count = extract(job)
    except ConfigError as exc:
        print(f"extract: error: {exc}", file=sys.stderr)
        return 2
    except (DataError, IoError) as exc:
        print(f"extract: error: {exc}", file=sys.stderr)
        return 3
    except EnvError as exc:
        print(f"extract: error: {exc}", file=sys.stderr)
        return 5
    print(f"wrote {count} frames x 4096 features to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
