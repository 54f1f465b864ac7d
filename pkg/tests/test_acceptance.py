"""Acceptance suite: one test per release criterion, each printing a
pass/fail line (run with ``pytest -s tests/test_acceptance.py``).

The closure criteria feed the published per-run AUC/EER values through the
real external surfaces (`import-paper`, then `tables`) and compare every
emitted partial/complete generalization cell against the published
reference tables, frozen here with their printed decimal precision.  Cells
printed with two decimals are checked at +/-0.01; cells the source printed
at one decimal are checked at half their printed resolution (+/-0.05).

One input cell, (Belleview -> Ped1) under the transfer method, is
reconstructed (58.36 AUC / 42.71 EER): the published per-run row there
duplicates another row and contradicts the derived tables, which are
mutually consistent and pin these values.
"""

import time
from pathlib import Path

import numpy as np
import pytest

from cdfg.cli import main as cli_main
from cdfg.data import make_synthetic_pair
from cdfg.harness import ScenarioConfig, run_pair
from cdfg.kernels import KernelSpec, sym_eig_desc
from cdfg.ocsvm import ScoreSeries, dual_objective, ocsvm_fit, ocsvm_score
from cdfg.pca import pca_fit
from cdfg.roc import auc, eer, roc

from test_ocsvm import qp_oracle
from test_roc import oracle_auc, oracle_eer, oracle_roc

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
PUBLISHED_CSV = DATA_DIR / "published_anomaly_metrics.csv"

# Published partial-generalization reference: (source, target) -> method -> (auc, eer)
PUBLISHED_GPART = {
    ("Boat-River", "Canoe"): {"raw": ("29.51", "24.1"), "pca": ("20.74", "22.46"), "tca": ("8.51", "6.36")},
    ("Boat-Sea", "Canoe"): {"raw": ("37.78", "33.5"), "pca": ("11.57", "8.67"), "tca": ("6.13", "11.84")},
    ("Canoe", "Boat-River"): {"raw": ("29.39", "24.1"), "pca": ("13.55", "9.91"), "tca": ("10.55", "6.39")},
    ("Boat-Sea", "Boat-River"): {"raw": ("9.55", "10.68"), "pca": ("35.05", "28.14"), "tca": ("3.5", "11.36")},
    ("Canoe", "Boat-Sea"): {"raw": ("37.63", "33.5"), "pca": ("19.42", "13.29"), "tca": ("15.33", "12.7")},
    ("Boat-River", "Boat-Sea"): {"raw": ("8.04", "9.4"), "pca": ("18.81", "18.32"), "tca": ("3.64", "12.51")},
    ("Ped2", "Ped1"): {"raw": ("29.52", "25.2"), "pca": ("8.77", "5.0"), "tca": ("13.77", "8.44")},
    ("Belleview", "Ped1"): {"raw": ("17.14", "17.28"), "pca": ("25.58", "20.82"), "tca": ("14.27", "10.47")},
    ("Ped1", "Ped2"): {"raw": ("29.27", "25.15"), "pca": ("14.51", "10.97"), "tca": ("4.12", "1.14")},
    ("Belleview", "Ped2"): {"raw": ("11.97", "7.21"), "pca": ("18.92", "16.75"), "tca": ("7.47", "5.77")},
    ("Ped1", "Belleview"): {"raw": ("17.76", "17.95"), "pca": ("15.24", "10.28"), "tca": ("5.45", "4.43")},
    ("Ped2", "Belleview"): {"raw": ("11.61", "7.21"), "pca": ("5.18", "3.5"), "tca": ("8.92", "5.86")},
}

# Published complete-generalization reference: unordered pair -> method -> (auc, eer)
PUBLISHED_GCOMP = {
    ("Canoe", "Boat-River"): {"raw": ("29.45", "24.1"), "pca": ("17.14", "16.18"), "tca": ("9.53", "6.37")},
    ("Canoe", "Boat-Sea"): {"raw": ("37.70", "33.5"), "pca": ("15.49", "10.98"), "tca": ("10.73", "12.27")},
    ("Boat-River", "Boat-Sea"): {"raw": ("8.79", "10.04"), "pca": ("26.93", "23.23"), "tca": ("3.57", "11.93")},
    ("Ped1", "Ped2"): {"raw": ("29.4", "25.2"), "pca": ("11.6", "7.99"), "tca": ("8.95", "4.79")},
    ("Ped1", "Belleview"): {"raw": ("17.5", "17.6"), "pca": ("20.4", "15.6"), "tca": ("9.86", "7.45")},
    ("Ped2", "Belleview"): {"raw": ("11.79", "7.21"), "pca": ("12.05", "10.12"), "tca": ("8.19", "5.82")},
}

# Published negative-transfer partial values (Train against the urban domains)
PUBLISHED_NEGATIVE_GPART = {
    ("Train", "Ped1"): {"raw": ("0.55", "4.55"), "pca": ("2.98", "3.12"), "tca": ("19.14", "17.81")},
    ("Train", "Ped2"): {"raw": ("27.84", "21.51"), "pca": ("4.1", "0.95"), "tca": ("1.77", "1.04")},
    ("Train", "Belleview"): {"raw": ("15.13", "14.28"), "pca": ("3.31", "6.47"), "tca": ("16.77", "17.12")},
    ("Ped1", "Train"): {"raw": ("3.11", "4.67"), "pca": ("13.71", "10.99"), "tca": ("8.96", "4.28")},
    ("Ped2", "Train"): {"raw": ("26.21", "20.41"), "pca": ("0.23", "4.87"), "tca": ("18.6", "9.42")},
    ("Belleview", "Train"): {"raw": ("15.06", "13.37"), "pca": ("0.09", "0.08"), "tca": ("13.77", "13.65")},
}

PUBLISHED_NEGATIVE_GCOMP = {
    ("Train", "Ped1"): {"raw": ("1.83", "4.61"), "pca": ("8.35", "7.06"), "tca": ("14.1", "11.0")},
    ("Train", "Ped2"): {"raw": ("27.0", "21.0"), "pca": ("2.17", "2.91"), "tca": ("10.2", "5.23")},
    ("Train", "Belleview"): {"raw": ("15.1", "13.8"), "pca": ("1.7", "3.28"), "tca": ("15.3", "15.4")},
}


def tolerance(printed: str) -> float:
    decimals = len(printed.split(".")[1]) if "." in printed else 0
    return (0.01 if decimals >= 2 else 0.5 * 10**-decimals) + 1e-9


def report(name: str, failures: list) -> None:
    if failures:
        print(f"[FAIL] {name}: {len(failures)} deviation(s), first: {failures[0]}")
    else:
        print(f"[PASS] {name}")
    assert not failures, f"{name}: {failures[:5]}"


@pytest.fixture(scope="module")
def emitted(tmp_path_factory):
    """Published values pushed through the real import-paper -> tables flow."""
    base = tmp_path_factory.mktemp("closure")
    t0 = time.perf_counter()
    assert cli_main(["import-paper", "--input", str(PUBLISHED_CSV), "--out", str(base)]) == 0
    assert cli_main(
        ["tables", "--records", str(base / "records.csv"), "--out", str(base)]
    ) == 0
    elapsed = time.perf_counter() - t0

    gen = {}
    for line in (base / "generalization.csv").read_text().splitlines()[1:]:
        a, b, method, metric, g_ab, g_ba, g_comp = line.split(",")
        gen[(a, b, method, metric)] = (float(g_ab), float(g_ba), float(g_comp))
    verdicts = [line.split(",") for line in (base / "verdicts.csv").read_text().splitlines()[1:]]
    neg = {}
    for line in (base / "negative_transfer.csv").read_text().splitlines()[1:]:
        s, t, metric, tl, baseline, flagged = line.split(",")
        neg[(s, t, metric, tl, baseline)] = flagged == "True"
    return {"gen": gen, "verdicts": verdicts, "neg": neg, "elapsed": elapsed}


def directed_gpart(gen, source, target, method, metric):
    if (source, target, method, metric) in gen:
        return gen[(source, target, method, metric)][0]
    return gen[(target, source, method, metric)][1]


def pair_gcomp(gen, a, b, method, metric):
    key = (a, b, method, metric) if (a, b, method, metric) in gen else (b, a, method, metric)
    return gen[key][2]


def test_partial_generalization_closure(emitted):
    failures = []
    for (s, t), row in PUBLISHED_GPART.items():
        for method, cells in row.items():
            for metric, printed in zip(("auc", "eer"), cells):
                got = directed_gpart(emitted["gen"], s, t, method, metric)
                if abs(got - float(printed)) > tolerance(printed):
                    failures.append((s, t, method, metric, printed, got))
    if emitted["elapsed"] >= 1.0:
        failures.append(("runtime", emitted["elapsed"]))
    report("partial-generalization closure (every cell, import+tables < 1 s)", failures)


def test_complete_generalization_closure(emitted):
    failures = []
    for (a, b), row in PUBLISHED_GCOMP.items():
        for method, cells in row.items():
            for metric, printed in zip(("auc", "eer"), cells):
                got = pair_gcomp(emitted["gen"], a, b, method, metric)
                if abs(got - float(printed)) > tolerance(printed):
                    failures.append((a, b, method, metric, printed, got))
    spot = pair_gcomp(emitted["gen"], "Boat-River", "Boat-Sea", "tca", "auc")
    if abs(spot - 3.57) > 0.01 + 1e-9:
        failures.append(("spot", "Boat-River/Boat-Sea", spot))
    spot = pair_gcomp(emitted["gen"], "Ped1", "Ped2", "tca", "auc")
    if abs(spot - 8.95) > 0.01 + 1e-9:
        failures.append(("spot", "Ped1/Ped2", spot))
    report("complete-generalization closure (every cell)", failures)


def test_negative_transfer_closure(emitted):
    failures = []
    for (s, t), row in PUBLISHED_NEGATIVE_GPART.items():
        for method, cells in row.items():
            for metric, printed in zip(("auc", "eer"), cells):
                got = directed_gpart(emitted["gen"], s, t, method, metric)
                if abs(got - float(printed)) > tolerance(printed):
                    failures.append((s, t, method, metric, printed, got))
    for (a, b), row in PUBLISHED_NEGATIVE_GCOMP.items():
        for method, cells in row.items():
            for metric, printed in zip(("auc", "eer"), cells):
                got = pair_gcomp(emitted["gen"], a, b, method, metric)
                if abs(got - float(printed)) > tolerance(printed):
                    failures.append((a, b, method, metric, printed, got))
    neg = emitted["neg"]
    expectations = [
        ("Train", "Ped1", True),
        ("Train", "Belleview", True),
        ("Train", "Ped2", False),
    ]
    for s, t, expected in expectations:
        got = neg[(s, t, "auc", "tca", "raw")]
        if got is not expected:
            failures.append(("negative-transfer flag", s, t, expected, got))
    report("negative-transfer closure (cells + tca-vs-raw flags)", failures)


def test_compensation_verdicts(emitted):
    flagged_pairs = {
        (a, b)
        for a, b, metric, alpha, beta, verdict in emitted["verdicts"]
        if verdict == "tca_complete_only"
    }
    failures = []
    if flagged_pairs != {("Ped1", "Ped2"), ("Ped2", "Belleview")}:
        failures.append(("pairs with tca compensation verdict", sorted(flagged_pairs)))
    report("compensation verdicts on exactly two pairs", failures)


def test_synthetic_transfer_direction():
    t0 = time.perf_counter()
    raw_aucs, tca_aucs = [], []
    for seed in range(10):
        pair = make_synthetic_pair(
            seed=seed, n_train=200, n_test=200, dims=8, shift=3.0, anomaly_offset=6.0
        )
        raw_aucs.append(run_pair(ScenarioConfig(method="raw", components_k=2, nu=0.25), pair).auc)
        tca_aucs.append(run_pair(ScenarioConfig(method="tca", components_k=2, nu=0.25), pair).auc)
    elapsed = time.perf_counter() - t0
    failures = []
    if not np.median(tca_aucs) > np.median(raw_aucs):
        failures.append(("medians", np.median(tca_aucs), np.median(raw_aucs)))
    if elapsed >= 60.0:
        failures.append(("runtime", elapsed))
    report(
        f"synthetic transfer direction (tca median {np.median(tca_aucs):.2f} > "
        f"raw median {np.median(raw_aucs):.2f}, {elapsed:.1f} s)",
        failures,
    )


def test_metric_oracles():
    rng = np.random.default_rng(2024)
    failures = []
    checked = 0
    while checked < 1000:
        n = int(rng.integers(2, 16))
        if rng.random() < 0.5:
            scores = rng.integers(0, 5, n).astype(float)  # heavy ties
        else:
            scores = rng.standard_normal(n)
        labels = np.where(rng.random(n) < 0.5, 1, -1)
        if not ((labels == 1).any() and (labels == -1).any()):
            continue
        checked += 1
        series = ScoreSeries(scores=scores, labels=labels)
        curve = roc(series)
        if not np.array_equal(curve.points, oracle_roc(scores, labels)):
            failures.append(("roc", scores, labels))
            continue
        if abs(auc(curve) - oracle_auc(scores, labels)) > 1e-12:
            failures.append(("auc", scores, labels))
        if abs(eer(curve) - oracle_eer(curve.points)) > 1e-9:
            failures.append(("eer", scores, labels))
    report("metric oracles (1000 series vs exhaustive enumeration)", failures)


def test_detector_nu_property_and_qp_oracle():
    failures = []
    rng = np.random.default_rng(4)
    x = rng.standard_normal((400, 6))
    model = ocsvm_fit(x, nu=0.25, kernel=KernelSpec("rbf", "median-heuristic"))
    outlier_fraction = float(np.mean(ocsvm_score(model, x) > 0))
    sv_fraction = float(np.mean(model.alphas > 1e-8))
    if not outlier_fraction <= 0.28:
        failures.append(("outlier fraction", outlier_fraction))
    if not sv_fraction >= 0.22:
        failures.append(("support fraction", sv_fraction))
    from cdfg.kernels import gram

    lin = KernelSpec("linear")
    for seed in (1, 2, 3):
        pts = np.random.default_rng(seed).standard_normal((8, 2)) + np.array([2.0, 1.0])
        q = gram(lin, pts, pts)
        got = dual_objective(q, ocsvm_fit(pts, nu=0.25, kernel=lin).alphas)
        want = dual_objective(q, qp_oracle(q, nu=0.25))
        if abs(got - want) > 1e-4:
            failures.append(("qp objective", seed, got, want))
    report(
        f"detector nu-property (outliers {outlier_fraction:.3f} <= 0.28, "
        f"support {sv_fraction:.3f} >= 0.22) and qp oracle",
        failures,
    )


def test_projection_and_eigen_contracts():
    failures = []
    rng = np.random.default_rng(7)
    m = rng.standard_normal((200, 200))
    m = (m + m.T) / 2
    w, v = sym_eig_desc(m)
    norm = np.linalg.norm(m, 2)
    if np.abs(v.T @ v - np.eye(200)).max() > 1e-8:
        failures.append(("orthonormality", np.abs(v.T @ v - np.eye(200)).max()))
    residual = np.linalg.norm(m @ v - v * w, axis=0).max()
    if residual > 1e-7 * norm:
        failures.append(("eigen residual", residual))
    recon = np.abs(v @ np.diag(w) @ v.T - m).max()
    if recon > 1e-6 * norm:
        failures.append(("reconstruction", recon))

    x = rng.standard_normal((80, 4096))
    model = pca_fit(x, k=79)
    if np.abs(model.components.T @ model.components - np.eye(79)).max() > 1e-8:
        failures.append(("pca orthonormality",))
    if not model.cumulative_variance >= 0.999:
        failures.append(("pca cumulative variance", model.cumulative_variance))
    report(
        f"projection/eigen contracts (variance {model.cumulative_variance:.6f} >= 0.999)",
        failures,
    )


def test_run_determinism(tmp_path):
    synth = tmp_path / "synth"
    assert cli_main(["synth", "--out", str(synth), "--seed", "11", "--n-train", "40",
                     "--n-test", "40", "--dims", "4"]) == 0
    outs = []
    for name in ("one", "two"):
        out = tmp_path / name
        assert cli_main(["run", "--config", str(synth / "synth.cfg"), "--out", str(out)]) == 0
        assert cli_main(["tables", "--records", str(out / "records.csv"),
                         "--out", str(out / "tables")]) == 0
        outs.append(out)
    failures = []
    for rel in ("records.csv", "records.json", "tables/generalization.csv",
                "tables/generalization.json", "tables/verdicts.csv",
                "tables/negative_transfer.csv", "tables/generalization.txt"):
        if (outs[0] / rel).read_bytes() != (outs[1] / rel).read_bytes():
            failures.append(("differs", rel))
    report("byte-identical outputs across repeated runs", failures)
