"""Vulnerability Detection Loss: finding matching and the VDL ratio.

A defined VDL is 100 x (baseline - matched) / baseline.  When the
baseline has zero findings the ratio is UNDEFINED, represented as None
and never coerced to 0 or 100.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..scan.report import ScanReport

# (no filter) first, then the four severities, then the two projections
SEVERITY_FILTERS: tuple[str | None, ...] = (
    None,
    "Low",
    "Medium",
    "High",
    "Critical",
    "Warning",
    "Error",
)


@dataclass(frozen=True)
class VdlRecord:
    project_id: str
    config_label: str  # sorted effective acronyms, "+"-joined
    seed: int
    severity_filter: str | None  # None = overall
    baseline_count: int
    matched_count: int
    vdl_percent: float | None  # None = UNDEFINED

    @property
    def plugin_count(self) -> int:
        return self.config_label.count("+") + 1 if self.config_label else 0

    @property
    def defined(self) -> bool:
        return self.vdl_percent is not None


def match_findings(baseline: ScanReport, variant: ScanReport) -> int:
    """Per-rule multiset intersection: sum of min(count_b, count_v)."""
    variant_counts = variant.rule_counts
    return sum(
        min(count, variant_counts.get(rule_id, 0))
        for rule_id, count in baseline.rule_counts.items()
    )


def compute_vdl(
    baseline: ScanReport,
    variant: ScanReport,
    severity_filter: str | None = None,
    *,
    config_label: str = "",
    seed: int = 0,
) -> VdlRecord:
    """Match after filtering BOTH reports by the same severity view."""
    base = baseline.filtered(severity_filter)
    var = variant.filtered(severity_filter)
    baseline_count = len(base.findings)
    matched = match_findings(base, var)
    if baseline_count > 0:
        vdl = 100.0 * (baseline_count - matched) / baseline_count
    else:
        vdl = None
    return VdlRecord(
        project_id=baseline.project_id,
        config_label=config_label or variant.variant_id,
        seed=seed,
        severity_filter=severity_filter,
        baseline_count=baseline_count,
        matched_count=matched,
        vdl_percent=vdl,
    )
