"""Finding and report records."""

from __future__ import annotations

from dataclasses import dataclass

from ..js.source import SourceSpan
from .rules import SEVERITY_ORDER, Severity, severity_passes


@dataclass(frozen=True)
class Finding:
    rule_id: str
    severity: Severity
    span: SourceSpan
    message: str
    taint_path: tuple[SourceSpan, ...] | None = None
    file: str = ""


def finding_sort_key(finding: Finding) -> tuple:
    return (finding.file, finding.span.sort_key(), finding.rule_id)


@dataclass(frozen=True)
class ScanReport:
    project_id: str
    variant_id: str
    findings: tuple[Finding, ...]

    @property
    def rule_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for f in self.findings:
            counts[f.rule_id] = counts.get(f.rule_id, 0) + 1
        return dict(sorted(counts.items()))

    @property
    def severity_counts(self) -> dict[str, int]:
        counts = {sev.value: 0 for sev in SEVERITY_ORDER}
        for f in self.findings:
            counts[f.severity.value] += 1
        return counts

    def filtered(self, severity_filter: str | None) -> "ScanReport":
        """Report restricted to one severity or projection level."""
        if severity_filter is None:
            return self
        kept = tuple(f for f in self.findings if severity_passes(f.severity, severity_filter))
        return ScanReport(self.project_id, self.variant_id, kept)
