"""Config-driven orchestration of the three scenarios over domain pairs.

A scenario is one of three methods applied to an ordered (source, target)
pair:

- ``raw``: train the detector on the source training features as-is and
  score the target test set;
- ``pca``: fit the projection on the source training set only, apply the
  same projection to source train and target test, then detect;
- ``tca``: fit the transfer map on both training sets, embed source train
  and target test, then detect.

``run_matrix`` runs every ordered pair including self-pairs, because every
partial-generalization value needs the classifier's risk on its own
domain.  The resulting records feed ``emit_generalization_tables``, which
computes both directed partial values per pair, the complete value, method
comparison verdicts, and negative-transfer flags, and writes them as CSV,
JSON, and aligned text.

Record values are percentages rounded half-up to two decimals on emission;
all arithmetic happens at full precision first.  Stage timings go to a
separate report and never into the CSV/JSON outputs, which are
byte-reproducible for a fixed config and seed.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .data import DomainDataset, DomainPair, load_features, load_labels
from .errors import ConfigError, DataError, FormatError
from .generalization import (
    GeneralizationReport,
    MeaningfulnessCheck,
    NegativeTransferFlag,
    compare_methods,
    detect_negative_transfer,
    make_report,
    round_percent,
)
from .kernels import MEDIAN_HEURISTIC, KernelSpec
from .ocsvm import ScoreSeries, fit_standardizer, ocsvm_fit, ocsvm_score
from .pca import pca_fit, pca_transform
from .roc import auc, eer, roc
from .tca import tca_fit, tca_transform

METHODS = ("raw", "pca", "tca")
TRANSFER_METHODS = ("tca",)
BASELINE_METHODS = ("raw", "pca")
STAGES = ("feature_load", "fit_projection", "fit_detector", "score")


@dataclass(frozen=True)
class ScenarioConfig:
    """Parameters of one scenario; the defaults reproduce the reference protocol."""

    method: str
    components_k: int = 80
    nu: float = 0.25
    detector_kernel: KernelSpec = KernelSpec("linear")
    tca_kernel: KernelSpec = KernelSpec("rbf", MEDIAN_HEURISTIC)
    tca_mu: float = 1.0
    normalize: bool = False
    seed: int = 0

    def __post_init__(self):
        if self.method not in METHODS:
            raise ConfigError(f"unknown method {self.method!r}, expected one of {METHODS}")
        if self.components_k < 1:
            raise ConfigError(f"components_k must be >= 1, got {self.components_k}")
        if not 0 < self.nu <= 1:
            raise ConfigError(f"nu must be in (0, 1], got {self.nu}")
        if not self.tca_mu > 0:
            raise ConfigError(f"tca_mu must be positive, got {self.tca_mu}")


@dataclass(frozen=True)
class RunRecord:
    """One (source, target, method) outcome: metrics plus optional timings."""

    source: str
    target: str
    method: str
    auc: float | None
    eer: float | None
    timings_ms: dict[str, float] | None = None
    fps: float | None = None

    def __post_init__(self):
        for name in ("auc", "eer"):
            v = getattr(self, name)
            if v is not None and not 0.0 <= v <= 100.0:
                raise DataError(f"{name} must be a percent in [0, 100], got {v!r}")


def run_pair(cfg: ScenarioConfig, pair: DomainPair) -> RunRecord:
    """Run one scenario on one ordered pair and measure AUC/EER on the target test set."""
    timings = dict.fromkeys(STAGES, 0.0)

    t0 = time.perf_counter()
    if cfg.method == "raw":
        train = pair.source.train.values
        test = pair.target.test.values
    elif cfg.method == "pca":
        model = pca_fit(pair.source.train, cfg.components_k)
        train = pca_transform(model, pair.source.train)
        test = pca_transform(model, pair.target.test)
    else:
        model = tca_fit(
            pair.source.train,
            pair.target.train,
            kernel=cfg.tca_kernel,
            k=cfg.components_k,
            mu=cfg.tca_mu,
        )
        train = tca_transform(model, pair.source.train)
        test = tca_transform(model, pair.target.test)
    if cfg.normalize:
        scaler = fit_standardizer(train)
        train = scaler.apply(train)
        test = scaler.apply(test)
    timings["fit_projection"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    detector = ocsvm_fit(train, nu=cfg.nu, kernel=cfg.detector_kernel)
    timings["fit_detector"] = (time.perf_counter() - t0) * 1e3

    t0 = time.perf_counter()
    scores = ocsvm_score(detector, test)
    timings["score"] = (time.perf_counter() - t0) * 1e3

    curve = roc(ScoreSeries(scores=scores, labels=pair.target.test_labels))
    total_s = sum(timings.values()) / 1e3
    fps = pair.target.test.rows / total_s if total_s > 0 else float("inf")
    return RunRecord(
        source=pair.source.name,
        target=pair.target.name,
        method=cfg.method,
        auc=auc(curve) * 100.0,
        eer=eer(curve) * 100.0,
        timings_ms=timings,
        fps=fps,
    )


def run_matrix(
    cfgs: list[ScenarioConfig], domains: list[DomainDataset], jobs: int = 1
) -> list[RunRecord]:
    """Run every method over every ordered (source, target) pair, self-pairs included.

    Output order is fixed: methods in config order, then sources, then
    targets in input order, regardless of worker scheduling.
    """
    if len(domains) < 2:
        raise ConfigError(f"need at least 2 domains, got {len(domains)}")
    if len({d.name for d in domains}) != len(domains):
        raise ConfigError("domain names must be unique")
    tasks = [
        (cfg, DomainPair(source=src, target=tgt))
        for cfg in cfgs
        for src in domains
        for tgt in domains
    ]
    if jobs <= 1:
        return [run_pair(cfg, pair) for cfg, pair in tasks]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda t: run_pair(*t), tasks))


# ---------------------------------------------------------------------------
# record tables


def _fmt(value: float) -> str:
    return f"{round_percent(value):.2f}"


def write_records(records: list[RunRecord], out_dir, formats=("csv", "json")) -> None:
    """Write records.csv / records.json (metric values only, 2 decimals)."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if "csv" in formats:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["source", "target", "method", "metric", "value"])
        for rec in records:
            for metric in ("auc", "eer"):
                v = getattr(rec, metric)
                if v is not None:
                    writer.writerow([rec.source, rec.target, rec.method, metric, _fmt(v)])
        (out / "records.csv").write_text(buf.getvalue(), encoding="utf-8")
    if "json" in formats:
        payload = [
            {
                "source": rec.source,
                "target": rec.target,
                "method": rec.method,
                "auc": None if rec.auc is None else round_percent(rec.auc),
                "eer": None if rec.eer is None else round_percent(rec.eer),
            }
            for rec in records
        ]
        (out / "records.json").write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def write_timing_report(records: list[RunRecord], out_dir) -> None:
    """Write per-stage wall times and throughput; informational only."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    lines = ["source\ttarget\tmethod\t" + "\t".join(f"{s}_ms" for s in STAGES) + "\tfps"]
    for rec in records:
        if rec.timings_ms is None:
            continue
        stage_cols = "\t".join(f"{rec.timings_ms.get(s, 0.0):.3f}" for s in STAGES)
        lines.append(
            f"{rec.source}\t{rec.target}\t{rec.method}\t{stage_cols}\t{rec.fps:.1f}"
        )
    (out / "timing.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_records(path) -> list[RunRecord]:
    """Read a records CSV (``source,target,method,metric,value``) into RunRecords.

    Rows for the same (source, target, method) merge into one record, so a
    file may carry AUC rows, EER rows, or both.  Timing fields are null.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read records csv {path}: {exc}") from exc
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != ["source", "target", "method", "metric", "value"]:
        raise FormatError(
            f"{path}: header must be source,target,method,metric,value, got {header}"
        )
    merged: dict[tuple[str, str, str], dict[str, float]] = {}
    seen: set[tuple[str, str, str, str]] = set()
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 5:
            raise FormatError(f"{path}:{lineno}: expected 5 columns, got {len(row)}")
        source, target, method, metric, value = (f.strip() for f in row)
        if method not in METHODS:
            raise FormatError(f"{path}:{lineno}: unknown method {method!r}")
        if metric not in ("auc", "eer"):
            raise FormatError(f"{path}:{lineno}: unknown metric {metric!r}")
        key = (source, target, method, metric)
        if key in seen:
            raise FormatError(f"{path}:{lineno}: duplicate row for {key}")
        seen.add(key)
        try:
            v = float(value)
        except ValueError as exc:
            raise FormatError(f"{path}:{lineno}: non-numeric value {value!r}") from exc
        if not np.isfinite(v) or not 0.0 <= v <= 100.0:
            raise DataError(f"{path}:{lineno}: value {v} outside [0, 100]")
        merged.setdefault((source, target, method), {})[metric] = v
    return [
        RunRecord(source=s, target=t, method=m, auc=vals.get("auc"), eer=vals.get("eer"))
        for (s, t, m), vals in merged.items()
    ]


def import_paper_tables(path) -> list[RunRecord]:
    """Import published benchmark AUC/EER values as records (timings null)."""
    return read_records(path)


# ---------------------------------------------------------------------------
# generalization tables


@dataclass(frozen=True)
class VerdictRow:
    pair: tuple[str, str]
    metric: str
    method_alpha: str
    method_beta: str
    verdict: str


@dataclass(frozen=True)
class NegativeTransferRow:
    pair: tuple[str, str]
    metric: str
    tl_method: str
    flag: NegativeTransferFlag


@dataclass(frozen=True)
class GeneralizationTables:
    """Everything derived from a record set, before file emission."""

    reports: list[GeneralizationReport] = field(default_factory=list)
    verdicts: list[VerdictRow] = field(default_factory=list)
    negative_transfer: list[NegativeTransferRow] = field(default_factory=list)
    methods: tuple[str, ...] = ()
    metrics: tuple[str, ...] = ()

    def report_for(self, pair, metric, method) -> GeneralizationReport | None:
        for rep in self.reports:
            if rep.pair == tuple(pair) and rep.metric_kind == metric and rep.method_label == method:
                return rep
        return None


def compute_generalization(records: list[RunRecord]) -> GeneralizationTables:
    """Derive partial/complete values, verdicts, and negative-transfer flags.

    Every cross pair needs the classifier's self-pair run; a missing one is
    a configuration error naming the absent run.  Records produced by this
    harness share detector parameters per method and never expose test data
    to a fit stage, so the meaningfulness preconditions hold structurally.
    """
    MeaningfulnessCheck(same_bias=True, same_descriptors=True, no_test_leakage=True).require()

    values: dict[tuple[str, str], dict[tuple[str, str], float]] = {}
    methods: list[str] = []
    domains: list[str] = []
    for rec in records:
        if rec.method not in methods:
            methods.append(rec.method)
        for name in (rec.source, rec.target):
            if name not in domains:
                domains.append(name)
        for metric in ("auc", "eer"):
            v = getattr(rec, metric)
            if v is not None:
                values.setdefault((rec.method, metric), {})[(rec.source, rec.target)] = v
    metrics = tuple(m for m in ("auc", "eer") if any(key[1] == m for key in values))

    ordered_pairs = [
        (a, b) for i, a in enumerate(domains) for j, b in enumerate(domains) if i < j
    ]

    reports: list[GeneralizationReport] = []
    for method in methods:
        for metric in metrics:
            table = values.get((method, metric), {})
            cross = [(s, t) for (s, t) in table if s != t]
            for s, t in cross:
                if (s, s) not in table:
                    raise ConfigError(
                        f"missing self-pair run {s}->{s} for method {method!r}, metric {metric!r}"
                    )
            for a, b in ordered_pairs:
                if (a, b) in table and (b, a) in table:
                    reports.append(
                        make_report(
                            (a, b),
                            metric,
                            method,
                            g_part_ab=abs(table[(a, a)] - table[(a, b)]),
                            g_part_ba=abs(table[(b, b)] - table[(b, a)]),
                        )
                    )

    verdicts: list[VerdictRow] = []
    neg_rows: list[NegativeTransferRow] = []
    by_key = {(r.pair, r.metric_kind, r.method_label): r for r in reports}
    for a, b in ordered_pairs:
        for metric in metrics:
            present = [m for m in methods if ((a, b), metric, m) in by_key]
            for i, ma in enumerate(present):
                for mb in present[i + 1 :]:
                    verdicts.append(
                        VerdictRow(
                            pair=(a, b),
                            metric=metric,
                            method_alpha=ma,
                            method_beta=mb,
                            verdict=compare_methods(
                                by_key[((a, b), metric, ma)], by_key[((a, b), metric, mb)]
                            ),
                        )
                    )
            for tl in TRANSFER_METHODS:
                if tl not in present:
                    continue
                baselines = [by_key[((a, b), metric, m)] for m in BASELINE_METHODS if m in present]
                if not baselines:
                    continue
                for flag in detect_negative_transfer(by_key[((a, b), metric, tl)], baselines):
                    neg_rows.append(
                        NegativeTransferRow(pair=(a, b), metric=metric, tl_method=tl, flag=flag)
                    )

    return GeneralizationTables(
        reports=reports,
        verdicts=verdicts,
        negative_transfer=neg_rows,
        methods=tuple(methods),
        metrics=metrics,
    )


def _text_tables(tables: GeneralizationTables) -> str:
    """Aligned plain-text rendering of the partial and complete tables."""
    out = []
    methods = tables.methods
    metrics = tables.metrics

    def block(title, row_label, rows):
        out.append(title)
        header = [row_label] + [f"{m}/{k}" for m in methods for k in metrics]
        widths = [max(len(header[0]), max((len(r[0]) for r in rows), default=0))]
        widths += [max(8, len(h)) for h in header[1:]]
        fmt_row = lambda cells: "  ".join(c.ljust(w) for c, w in zip(cells, widths))
        out.append(fmt_row(header))
        out.append(fmt_row(["-" * w for w in widths]))
        for r in rows:
            out.append(fmt_row(r))
        out.append("")

    directed: dict[tuple[str, str], dict[tuple[str, str], float]] = {}
    pairs_seen: list[tuple[str, str]] = []
    for rep in tables.reports:
        a, b = rep.pair
        if rep.pair not in pairs_seen:
            pairs_seen.append(rep.pair)
        directed.setdefault((a, b), {})[(rep.method_label, rep.metric_kind)] = rep.g_part_ab
        directed.setdefault((b, a), {})[(rep.method_label, rep.metric_kind)] = rep.g_part_ba

    gpart_rows = [
        [f"{s} -> {t}"] + [
            _fmt(cells[(m, k)]) if (m, k) in cells else "-" for m in methods for k in metrics
        ]
        for (s, t), cells in directed.items()
    ]
    block("Partial cross-domain generalization (%)", "source -> target", gpart_rows)

    gcomp_rows = []
    for pair in pairs_seen:
        cells = {
            (rep.method_label, rep.metric_kind): rep.g_comp
            for rep in tables.reports
            if rep.pair == pair
        }
        gcomp_rows.append(
            [f"({pair[0]}, {pair[1]})"]
            + [_fmt(cells[(m, k)]) if (m, k) in cells else "-" for m in methods for k in metrics]
        )
    block("Complete cross-domain generalization (%)", "pair", gcomp_rows)

    if tables.verdicts:
        out.append("Method comparison verdicts")
        for v in tables.verdicts:
            out.append(
                f"  ({v.pair[0]}, {v.pair[1]}) [{v.metric}] "
                f"{v.method_alpha} vs {v.method_beta}: {v.verdict}"
            )
        out.append("")
    if tables.negative_transfer:
        out.append("Negative-transfer flags (baseline strictly better than transfer method)")
        for row in tables.negative_transfer:
            a, b = row.pair
            out.append(
                f"  {row.tl_method} vs {row.flag.baseline} [{row.metric}]: "
                f"{a}->{b}: {'NEGATIVE' if row.flag.forward else 'ok'}, "
                f"{b}->{a}: {'NEGATIVE' if row.flag.backward else 'ok'}"
            )
        out.append("")
    return "\n".join(out)


def emit_generalization_tables(
    records: list[RunRecord], out_dir, formats=("csv", "json", "text")
) -> GeneralizationTables:
    """Compute the generalization tables and write them under `out_dir`."""
    tables = compute_generalization(records)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    if "csv" in formats:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["pair_a", "pair_b", "method", "metric", "g_part_ab", "g_part_ba", "g_comp"])
        for rep in tables.reports:
            writer.writerow(
                [
                    rep.pair[0],
                    rep.pair[1],
                    rep.method_label,
                    rep.metric_kind,
                    _fmt(rep.g_part_ab),
                    _fmt(rep.g_part_ba),
                    _fmt(rep.g_comp),
                ]
            )
        (out / "generalization.csv").write_text(buf.getvalue(), encoding="utf-8")

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["pair_a", "pair_b", "metric", "method_alpha", "method_beta", "verdict"])
        for v in tables.verdicts:
            writer.writerow([v.pair[0], v.pair[1], v.metric, v.method_alpha, v.method_beta, v.verdict])
        (out / "verdicts.csv").write_text(buf.getvalue(), encoding="utf-8")

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["source", "target", "metric", "tl_method", "baseline", "flagged"])
        for row in tables.negative_transfer:
            a, b = row.pair
            writer.writerow([a, b, row.metric, row.tl_method, row.flag.baseline, row.flag.forward])
            writer.writerow([b, a, row.metric, row.tl_method, row.flag.baseline, row.flag.backward])
        (out / "negative_transfer.csv").write_text(buf.getvalue(), encoding="utf-8")

    if "json" in formats:
        payload = {
            "reports": [
                {
                    "pair": list(rep.pair),
                    "metric": rep.metric_kind,
                    "method": rep.method_label,
                    "g_part_ab": round_percent(rep.g_part_ab),
                    "g_part_ba": round_percent(rep.g_part_ba),
                    "g_comp": round_percent(rep.g_comp),
                }
                for rep in tables.reports
            ],
            "verdicts": [
                {
                    "pair": list(v.pair),
                    "metric": v.metric,
                    "method_alpha": v.method_alpha,
                    "method_beta": v.method_beta,
                    "verdict": v.verdict,
                }
                for v in tables.verdicts
            ],
            "negative_transfer": [
                {
                    "pair": list(row.pair),
                    "metric": row.metric,
                    "tl_method": row.tl_method,
                    "baseline": row.flag.baseline,
                    "forward": row.flag.forward,
                    "backward": row.flag.backward,
                }
                for row in tables.negative_transfer
            ],
        }
        (out / "generalization.json").write_text(
            json.dumps(payload, indent=2) + "\n", encoding="utf-8"
        )

    if "text" in formats:
        (out / "generalization.txt").write_text(_text_tables(tables), encoding="utf-8")

    return tables


# ---------------------------------------------------------------------------
# configuration files


CONFIG_SCHEMA_VERSION = "1"
_SCALAR_KEYS = (
    "schema_version",
    "methods",
    "components_k",
    "nu",
    "detector_kernel",
    "detector_gamma",
    "tca_kernel",
    "tca_gamma",
    "tca_mu",
    "normalize",
    "seed",
)
_DOMAIN_PARTS = ("train", "test", "labels")


@dataclass(frozen=True)
class HarnessConfig:
    scenarios: tuple[ScenarioConfig, ...]
    domain_files: dict[str, dict[str, Path]]


def _parse_kernel(kind: str, gamma_text: str | None, where: str) -> KernelSpec:
    if kind == "linear":
        if gamma_text is not None:
            raise ConfigError(f"{where}: linear kernel takes no gamma")
        return KernelSpec("linear")
    if kind == "rbf":
        if gamma_text is None or gamma_text == MEDIAN_HEURISTIC:
            return KernelSpec("rbf", MEDIAN_HEURISTIC)
        try:
            return KernelSpec("rbf", float(gamma_text))
        except ValueError as exc:
            raise ConfigError(f"{where}: bad gamma {gamma_text!r}") from exc
    raise ConfigError(f"{where}: unknown kernel {kind!r}")


def _parse_bool(text: str, where: str) -> bool:
    if text in ("true", "false"):
        return text == "true"
    raise ConfigError(f"{where}: expected true or false, got {text!r}")


def load_config(path) -> HarnessConfig:
    """Parse the flat key=value config format (fail-fast on unknown keys)."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc

    scalars: dict[str, str] = {}
    domain_files: dict[str, dict[str, Path]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key.startswith("domain."):
            parts = key.split(".")
            if len(parts) != 3 or parts[2] not in _DOMAIN_PARTS:
                raise ConfigError(
                    f"{path}:{lineno}: domain keys look like domain.<name>.<train|test|labels>"
                )
            _, name, part = parts
            entry = domain_files.setdefault(name, {})
            if part in entry:
                raise ConfigError(f"{path}:{lineno}: duplicate key {key}")
            entry[part] = (path.parent / value).resolve()
        elif key in _SCALAR_KEYS:
            if key in scalars:
                raise ConfigError(f"{path}:{lineno}: duplicate key {key}")
            scalars[key] = value
        else:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")

    if scalars.get("schema_version") != CONFIG_SCHEMA_VERSION:
        raise ConfigError(
            f"{path}: schema_version = {CONFIG_SCHEMA_VERSION} is required, "
            f"got {scalars.get('schema_version')!r}"
        )
    methods = tuple(m.strip() for m in scalars.get("methods", "raw,pca,tca").split(","))
    for m in methods:
        if m not in METHODS:
            raise ConfigError(f"{path}: unknown method {m!r} in methods")
    if len(set(methods)) != len(methods):
        raise ConfigError(f"{path}: methods lists a method twice")

    for name, entry in domain_files.items():
        missing = [p for p in _DOMAIN_PARTS if p not in entry]
        if missing:
            raise ConfigError(f"{path}: domain {name!r} is missing keys {missing}")

    try:
        base = ScenarioConfig(
            method=methods[0],
            components_k=int(scalars.get("components_k", "80")),
            nu=float(scalars.get("nu", "0.25")),
            detector_kernel=_parse_kernel(
                scalars.get("detector_kernel", "linear"),
                scalars.get("detector_gamma"),
                f"{path}: detector_kernel",
            ),
            tca_kernel=_parse_kernel(
                scalars.get("tca_kernel", "rbf"),
                scalars.get("tca_gamma"),
                f"{path}: tca_kernel",
            ),
            tca_mu=float(scalars.get("tca_mu", "1.0")),
            normalize=_parse_bool(scalars.get("normalize", "false"), f"{path}: normalize"),
            seed=int(scalars.get("seed", "0")),
        )
    except ValueError as exc:
        raise ConfigError(f"{path}: bad numeric value: {exc}") from exc

    scenarios = tuple(replace(base, method=m) for m in methods)
    return HarnessConfig(scenarios=scenarios, domain_files=domain_files)


def load_domains(domain_files: dict[str, dict[str, Path]]) -> tuple[list[DomainDataset], dict[str, float]]:
    """Load every configured domain; returns datasets plus per-domain load times (ms)."""
    domains = []
    load_ms = {}
    for name, entry in domain_files.items():
        t0 = time.perf_counter()
        domains.append(
            DomainDataset(
                name=name,
                train=load_features(entry["train"]),
                test=load_features(entry["test"]),
                test_labels=load_labels(entry["labels"]),
            )
        )
        load_ms[name] = (time.perf_counter() - t0) * 1e3
    return domains, load_ms
