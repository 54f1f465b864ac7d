"""Command-line entry point.

Subcommands
-----------
validate      check .featb / .labels files against the canonical formats
synth         emit a synthetic two-domain dataset plus a ready run config
run           run the scenario matrix from a config file
tables        derive generalization tables from a records CSV
import-paper  validate published metric values and normalize them to records

Exit codes: 0 success, 2 configuration error, 3 data error, 4 numerical error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from .data import load_features, load_labels, make_synthetic_pair, save_features, save_labels
from .errors import (
    ConfigError,
    DataError,
    DegenerateError,
    IoError,
    NumericalError,
    ShapeError,
)
from .harness import (
    emit_generalization_tables,
    import_paper_tables,
    load_config,
    load_domains,
    read_records,
    run_matrix,
    write_records,
    write_timing_report,
)

_FORMATS = ("csv", "json", "text", "all")


def _formats(token: str) -> tuple[str, ...]:
    return ("csv", "json", "text") if token == "all" else (token,)


def _cmd_validate(args) -> int:
    for path in args.files:
        suffix = Path(path).suffix
        if suffix == ".featb":
            m = load_features(path)
            print(f"OK {path}: {m.rows} x {m.dims}")
        elif suffix == ".labels":
            labels = load_labels(path)
            print(f"OK {path}: {labels.shape[0]} labels ({int((labels == 1).sum())} anomalous)")
        else:
            raise ConfigError(f"{path}: expected a .featb or .labels file")
    return 0


def _cmd_synth(args) -> int:
    pair = make_synthetic_pair(
        seed=args.seed,
        n_train=args.n_train,
        n_test=args.n_test,
        dims=args.dims,
        shift=args.shift,
        anomaly_offset=args.offset,
    )
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    names = (args.source_name, args.target_name)
    cfg_lines = [
        "schema_version = 1",
        "methods = raw,pca,tca",
        f"components_k = {min(args.dims, args.n_train - 1, 80)}",
        f"seed = {args.seed}",
    ]
    for name, domain in zip(names, (pair.source, pair.target)):
        save_features(domain.train, out / f"{name}_train.featb")
        save_features(domain.test, out / f"{name}_test.featb")
        save_labels(domain.test_labels, out / f"{name}_test.labels")
        cfg_lines += [
            f"domain.{name}.train = {name}_train.featb",
            f"domain.{name}.test = {name}_test.featb",
            f"domain.{name}.labels = {name}_test.labels",
        ]
    (out / "synth.cfg").write_text("\n".join(cfg_lines) + "\n", encoding="utf-8")
    print(f"wrote {names[0]}/{names[1]} feature files and synth.cfg to {out}")
    return 0


def _cmd_run(args) -> int:
    cfg = load_config(args.config)
    scenarios = cfg.scenarios
    if args.seed is not None:
        scenarios = tuple(replace(s, seed=args.seed) for s in scenarios)
    domains, load_ms = load_domains(cfg.domain_files)
    records = run_matrix(list(scenarios), domains, jobs=args.jobs)
    records = [
        replace(
            rec,
            timings_ms={
                **rec.timings_ms,
                "feature_load": load_ms.get(rec.source, 0.0) + load_ms.get(rec.target, 0.0),
            },
        )
        for rec in records
    ]
    write_records(records, args.out, formats=_formats(args.format))
    write_timing_report(records, args.out)
    print(f"wrote {len(records)} records to {args.out}")
    return 0


def _cmd_tables(args) -> int:
    records = read_records(args.records)
    tables = emit_generalization_tables(records, args.out, formats=_formats(args.format))
    print(
        f"wrote generalization tables to {args.out} "
        f"({len(tables.reports)} reports, {len(tables.verdicts)} verdicts)"
    )
    return 0


def _cmd_import_paper(args) -> int:
    records = import_paper_tables(args.input)
    write_records(records, args.out, formats=("csv", "json"))
    print(f"imported {len(records)} records to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdfg",
        description="Cross-domain generalization experiments for anomaly-detection feature spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check feature/label files")
    p.add_argument("files", nargs="+", help=".featb and .labels files to check")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("synth", help="emit synthetic domains as .featb files")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-train", type=int, default=200)
    p.add_argument("--n-test", type=int, default=200)
    p.add_argument("--dims", type=int, default=8)
    p.add_argument("--shift", type=float, default=3.0)
    p.add_argument("--offset", type=float, default=6.0, help="anomaly displacement")
    p.add_argument("--source-name", default="source")
    p.add_argument("--target-name", default="target")
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("run", help="run the scenario matrix from a config file")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=None, help="override the config seed")
    p.add_argument("--format", choices=_FORMATS, default="all")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("tables", help="emit generalization tables from records")
    p.add_argument("--records", required=True, help="records CSV path")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=_FORMATS, default="all")
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("import-paper", help="normalize published metric values to records")
    p.add_argument("--input", required=True, help="CSV with source,target,method,metric,value")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_import_paper)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"cdfg: config error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"cdfg: numerical error: {exc}", file=sys.stderr)
        return 4
    except (DataError, IoError, ShapeError, DegenerateError) as exc:
        print(f"cdfg: data error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
