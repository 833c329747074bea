"""External findings adapter: strict JSON ingestion and canonical emit.

The wire format is fixed so reports from other scanners can be compared
with native ones:

    {
      "tool": string,
      "project": string,
      "variant": string,
      "findings": [
        {"rule_id": string, "severity": "Low"|"Medium"|"High"|"Critical",
         "file": string, "line": integer >= 1, "message": string}
      ]
    }

Validation is strict: unknown keys are rejected, severities are
case-exact, and the error names the JSON path of the first violation.
Emit produces the canonical serialization, so ingest -> emit is
bit-stable on canonical input.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..js import SourceSpan
from ..scan.report import Finding, ScanReport
from ..scan.rules import Severity

_TOP_KEYS = ("tool", "project", "variant", "findings")
_FINDING_KEYS = ("rule_id", "severity", "file", "line", "message")
_SEVERITY_VALUES = tuple(s.value for s in Severity)


class SchemaError(ValueError):
    """Invalid external report; ``path`` points at the first violation."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _require_str(value: object, path: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(path, f"expected string, got {type(value).__name__}")
    return value


def _check_keys(obj: dict, allowed: tuple[str, ...], path: str) -> None:
    for key in allowed:
        if key not in obj:
            raise SchemaError(f"{path}.{key}", "missing required key")
    unknown = sorted(set(obj) - set(allowed))
    if unknown:
        raise SchemaError(f"{path}.{unknown[0]}", "unknown key")


def _parse_finding(obj: object, path: str) -> Finding:
    if not isinstance(obj, dict):
        raise SchemaError(path, f"expected object, got {type(obj).__name__}")
    _check_keys(obj, _FINDING_KEYS, path)
    rule_id = _require_str(obj["rule_id"], f"{path}.rule_id")
    severity = obj["severity"]
    if severity not in _SEVERITY_VALUES:
        raise SchemaError(
            f"{path}.severity",
            f"expected one of {list(_SEVERITY_VALUES)}, got {severity!r}",
        )
    file = _require_str(obj["file"], f"{path}.file")
    line = obj["line"]
    if isinstance(line, bool) or not isinstance(line, int) or line < 1:
        raise SchemaError(f"{path}.line", f"expected integer >= 1, got {line!r}")
    message = _require_str(obj["message"], f"{path}.message")
    span = SourceSpan(file_id=0, start_line=line, start_col=1, end_line=line, end_col=1)
    return Finding(
        rule_id=rule_id,
        severity=Severity(severity),
        span=span,
        message=message,
        file=file,
    )


def parse_external_report(payload: object) -> tuple[str, ScanReport]:
    """Validate a decoded JSON document; returns (tool, report)."""
    if not isinstance(payload, dict):
        raise SchemaError("$", f"expected object, got {type(payload).__name__}")
    _check_keys(payload, _TOP_KEYS, "$")
    tool = _require_str(payload["tool"], "$.tool")
    project = _require_str(payload["project"], "$.project")
    variant = _require_str(payload["variant"], "$.variant")
    findings = payload["findings"]
    if not isinstance(findings, list):
        raise SchemaError("$.findings", f"expected array, got {type(findings).__name__}")
    parsed = tuple(
        _parse_finding(item, f"$.findings[{idx}]") for idx, item in enumerate(findings)
    )
    return tool, ScanReport(project_id=project, variant_id=variant, findings=parsed)


def ingest_external_report(path: str | Path) -> ScanReport:
    """Load and validate one external report file."""
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"not valid JSON: {exc}") from exc
    _, report = parse_external_report(payload)
    return report


def emit_external_report(report: ScanReport, tool: str) -> str:
    """Canonical serialization of a report in the external schema."""
    payload = {
        "tool": tool,
        "project": report.project_id,
        "variant": report.variant_id,
        "findings": [
            {
                "rule_id": f.rule_id,
                "severity": f.severity.value,
                "file": f.file,
                "line": f.span.start_line,
                "message": f.message,
            }
            for f in report.findings
        ],
    }
    return json.dumps(payload, indent=2) + "\n"
