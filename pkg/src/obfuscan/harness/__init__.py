"""Evaluation harness: projects, variants, VDL, aggregation, detection."""

from .boxstats import (
    CSV_HEADER,
    GROUP_MODES,
    BoxplotStats,
    UnknownGroupMode,
    aggregate,
    boxplot_stats,
    render_aggregate_csv,
    undefined_count,
)
from .detect import FLAG_NAMES, DetectionResult, detect_obfuscation
from .evaluation import (
    CSV_NAMES,
    REPORT_NAME,
    SUMMARY_NAME,
    EvaluationResult,
    VariantFailure,
    evaluate,
    scan_project,
)
from .external import (
    SchemaError,
    emit_external_report,
    ingest_external_report,
    parse_external_report,
)
from .projects import (
    DEFAULT_EXCLUDE,
    DEFAULT_INCLUDE,
    NoFilesMatched,
    ParseFailures,
    Project,
    glob_match,
    ingest_project,
)
from .variants import BASELINE_LABEL, Variant, generate_variants, variant_label, write_variant
from .vdl import SEVERITY_FILTERS, VdlRecord, compute_vdl, match_findings

__all__ = [
    "CSV_HEADER",
    "GROUP_MODES",
    "BoxplotStats",
    "UnknownGroupMode",
    "aggregate",
    "boxplot_stats",
    "render_aggregate_csv",
    "undefined_count",
    "FLAG_NAMES",
    "DetectionResult",
    "detect_obfuscation",
    "CSV_NAMES",
    "REPORT_NAME",
    "SUMMARY_NAME",
    "EvaluationResult",
    "VariantFailure",
    "evaluate",
    "scan_project",
    "SchemaError",
    "emit_external_report",
    "ingest_external_report",
    "parse_external_report",
    "DEFAULT_EXCLUDE",
    "DEFAULT_INCLUDE",
    "NoFilesMatched",
    "ParseFailures",
    "Project",
    "glob_match",
    "ingest_project",
    "BASELINE_LABEL",
    "Variant",
    "generate_variants",
    "variant_label",
    "write_variant",
    "SEVERITY_FILTERS",
    "VdlRecord",
    "compute_vdl",
    "match_findings",
]
