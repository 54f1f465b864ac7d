"""Cross-domain feature-space generalization metrics and method comparison.

A classifier trained on domain A is evaluated twice: on A's own test set
and on domain B's test set, both as AUC or EER percentages.  The partial
generalization for the A -> B direction is the absolute difference of the
two risks; the complete generalization of the (A, B) pair is the mean of
the two directional values.  Lower is better: small values mean the
detector performs consistently across the domain gap.

Because both metrics are absolute differences, replacing every risk value
v by 100 - v changes nothing, so whether AUC or 1 - AUC is treated as the
"risk" is immaterial.

Two methods are compared through three strict inequalities: each partial
direction and the complete value.  A method can win the complete
comparison while losing one direction (one partial value compensating the
other); that outcome gets its own verdict so it is never mistaken for a
clean sweep.  Exact ties make an inequality inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from .errors import ConfigError, DataError

METRIC_KINDS = ("auc", "eer")


def round_percent(value: float, ndigits: int = 2) -> float:
    """Round half-up at `ndigits` decimals, as the published tables do."""
    q = Decimal(1).scaleb(-ndigits)
    return float(Decimal(repr(float(value))).quantize(q, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class RiskValue:
    """A test-set risk estimate: metric kind, percent value, and provenance."""

    metric_kind: str
    value: float
    classifier_origin: str
    evaluated_on: str

    def __post_init__(self):
        if self.metric_kind not in METRIC_KINDS:
            raise ConfigError(f"metric_kind must be one of {METRIC_KINDS}, got {self.metric_kind!r}")
        if not np.isfinite(self.value) or not 0.0 <= self.value <= 100.0:
            raise DataError(f"risk value must be a percent in [0, 100], got {self.value!r}")


@dataclass(frozen=True)
class GeneralizationReport:
    """Both partial directions plus the complete value for one domain pair."""

    pair: tuple[str, str]
    metric_kind: str
    g_part_ab: float
    g_part_ba: float
    g_comp: float
    method_label: str

    def __post_init__(self):
        if self.metric_kind not in METRIC_KINDS:
            raise ConfigError(f"metric_kind must be one of {METRIC_KINDS}, got {self.metric_kind!r}")
        for name in ("g_part_ab", "g_part_ba", "g_comp"):
            v = getattr(self, name)
            if not np.isfinite(v) or v < 0.0:
                raise DataError(f"{name} must be a nonnegative finite value, got {v!r}")
        if abs(self.g_comp - (self.g_part_ab + self.g_part_ba) / 2.0) > 0.005:
            raise DataError(
                f"g_comp {self.g_comp} is not the mean of the partial values "
                f"({self.g_part_ab}, {self.g_part_ba})"
            )


@dataclass(frozen=True)
class MeaningfulnessCheck:
    """Preconditions for comparing generalization values across methods."""

    same_bias: bool
    same_descriptors: bool
    no_test_leakage: bool

    @property
    def ok(self) -> bool:
        return self.same_bias and self.same_descriptors and self.no_test_leakage

    def require(self) -> None:
        if not self.ok:
            failed = [
                name
                for name, value in (
                    ("same_bias", self.same_bias),
                    ("same_descriptors", self.same_descriptors),
                    ("no_test_leakage", self.no_test_leakage),
                )
                if not value
            ]
            raise ConfigError(f"generalization comparison is not meaningful: {failed} failed")


def g_part(risk_on_origin: RiskValue, risk_on_other: RiskValue) -> float:
    """Partial generalization: |risk at home - risk on the other domain|."""
    if risk_on_origin.metric_kind != risk_on_other.metric_kind:
        raise ConfigError(
            f"mixed metric kinds: {risk_on_origin.metric_kind} vs {risk_on_other.metric_kind}"
        )
    if risk_on_origin.classifier_origin != risk_on_other.classifier_origin:
        raise ConfigError(
            f"mixed classifier origins: {risk_on_origin.classifier_origin!r} "
            f"vs {risk_on_other.classifier_origin!r}"
        )
    if risk_on_origin.evaluated_on == risk_on_other.evaluated_on:
        raise ConfigError(
            f"both risks are evaluated on {risk_on_origin.evaluated_on!r}; "
            "the second must come from the other domain"
        )
    return abs(risk_on_origin.value - risk_on_other.value)


def g_comp(g_ab: float, g_ba: float) -> float:
    """Complete generalization: the mean of the two directional values."""
    return (g_ab + g_ba) / 2.0


def make_report(
    pair: tuple[str, str], metric_kind: str, method_label: str, g_part_ab: float, g_part_ba: float
) -> GeneralizationReport:
    return GeneralizationReport(
        pair=tuple(pair),
        metric_kind=metric_kind,
        g_part_ab=g_part_ab,
        g_part_ba=g_part_ba,
        g_comp=g_comp(g_part_ab, g_part_ba),
        method_label=method_label,
    )


def _win(a: float, b: float) -> int:
    """-1 if the first method's value is strictly lower, +1 if the second's, 0 on a tie."""
    if a < b:
        return -1
    if b < a:
        return 1
    return 0


def compare_methods(alpha: GeneralizationReport, beta: GeneralizationReport) -> str:
    """Evaluate the three strict inequalities between two methods.

    Returns ``<label>_full`` for a sweep of all three, ``<label>_partial_ab``
    or ``<label>_partial_ba`` for a directional win whose opposite direction
    ties, ``<label>_complete_only`` for the compensation case (complete win
    while the other method wins a direction), and ``inconclusive`` when the
    complete comparison ties.
    """
    if alpha.pair != beta.pair:
        raise ConfigError(f"mismatched pairs: {alpha.pair} vs {beta.pair}")
    if alpha.metric_kind != beta.metric_kind:
        raise ConfigError(f"mismatched metric kinds: {alpha.metric_kind} vs {beta.metric_kind}")
    if alpha.method_label == beta.method_label:
        raise ConfigError(f"both reports carry method {alpha.method_label!r}")

    w_ab = _win(alpha.g_part_ab, beta.g_part_ab)
    w_ba = _win(alpha.g_part_ba, beta.g_part_ba)
    w_comp = _win(alpha.g_comp, beta.g_comp)
    if w_comp == 0:
        return "inconclusive"
    winner, sign = (alpha, -1) if w_comp == -1 else (beta, 1)
    if w_ab == sign and w_ba == sign:
        return f"{winner.method_label}_full"
    if w_ab == sign and w_ba == 0:
        return f"{winner.method_label}_partial_ab"
    if w_ba == sign and w_ab == 0:
        return f"{winner.method_label}_partial_ba"
    return f"{winner.method_label}_complete_only"


@dataclass(frozen=True)
class NegativeTransferFlag:
    """Per-baseline outcome: True where the baseline generalizes strictly better."""

    baseline: str
    forward: bool  # pair[0] -> pair[1] direction
    backward: bool


def detect_negative_transfer(
    tl_report: GeneralizationReport, baseline_reports: list[GeneralizationReport]
) -> list[NegativeTransferFlag]:
    """Flag directions where a no-transfer baseline beats the transfer method.

    A direction is flagged when the baseline's partial value is strictly
    lower than the transfer method's in that direction.
    """
    if not baseline_reports:
        raise ConfigError("need at least one baseline report")
    flags = []
    for base in baseline_reports:
        if base.pair != tl_report.pair:
            raise ConfigError(f"mismatched pairs: {base.pair} vs {tl_report.pair}")
        if base.metric_kind != tl_report.metric_kind:
            raise ConfigError(
                f"mismatched metric kinds: {base.metric_kind} vs {tl_report.metric_kind}"
            )
        flags.append(
            NegativeTransferFlag(
                baseline=base.method_label,
                forward=base.g_part_ab < tl_report.g_part_ab,
                backward=base.g_part_ba < tl_report.g_part_ba,
            )
        )
    return flags
