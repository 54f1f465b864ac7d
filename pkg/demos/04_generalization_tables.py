"""Generalization tables from published benchmark values.

Feeds the bundled per-run AUC/EER values (seven video-surveillance
domains, three methods) through the records importer and derives the
partial/complete generalization tables, the three-inequality method
verdicts, and the negative-transfer flags.

The same flow is available from the shell:

    cdfg import-paper --input data/published_anomaly_metrics.csv --out out/
    cdfg tables --records out/records.csv --out out/
"""

import tempfile
from pathlib import Path

from cdfg import emit_generalization_tables, import_paper_tables

data = Path(__file__).resolve().parent.parent / "data" / "published_anomaly_metrics.csv"
out = Path(tempfile.mkdtemp(prefix="cdfg-tables-"))

records = import_paper_tables(data)
print(f"imported {len(records)} per-run records from {data.name}")

tables = emit_generalization_tables(records, out)
print(f"wrote CSV/JSON/text tables to {out}\n")

print("directional generalization, water-surveillance block (AUC %):")
for rep in tables.reports:
    if rep.metric_kind == "auc" and rep.pair[0] in ("Canoe", "Boat-River"):
        a, b = rep.pair
        print(f"  {a:>10} <-> {b:<10} {rep.method_label:>4}: "
              f"{rep.g_part_ab:6.2f} / {rep.g_part_ba:6.2f}  complete {rep.g_comp:6.2f}")

print("\nmethod verdicts where the transfer map wins the complete value only")
print("(one direction compensates the other, the case to watch for):")
for v in tables.verdicts:
    if v.verdict.endswith("complete_only"):
        print(f"  ({v.pair[0]}, {v.pair[1]}) [{v.metric}] "
              f"{v.method_alpha} vs {v.method_beta}: {v.verdict}")

print("\nnegative transfer against the no-transfer baselines (AUC):")
for row in tables.negative_transfer:
    if row.metric != "auc" or row.flag.baseline != "raw":
        continue
    a, b = row.pair
    if row.flag.forward:
        print(f"  {a} -> {b}: transfer map generalizes worse than {row.flag.baseline}")
    if row.flag.backward:
        print(f"  {b} -> {a}: transfer map generalizes worse than {row.flag.baseline}")
