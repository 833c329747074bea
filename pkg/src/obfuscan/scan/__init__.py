"""Miniature rule-based static analyzer: patterns, CFGs, and taint."""

from __future__ import annotations

from .cfg import ENTRY, EXIT, Cfg, CfgNode, build_cfg
from .engine import match_pattern, scan, scan_files, taint_scopes
from .patterns import callee_matches, member_path, path_matches, terminal_name
from .report import Finding, ScanReport, finding_sort_key
from .rules import (
    FILTER_VALUES,
    PROJECTIONS,
    SEVERITY_ORDER,
    Rule,
    RuleKind,
    RulesetError,
    Severity,
    SinkSpec,
    TaintSpec,
    default_ruleset,
    load_ruleset,
    severity_passes,
)
from .taint import taint_analyze

__all__ = [
    "ENTRY",
    "EXIT",
    "Cfg",
    "CfgNode",
    "FILTER_VALUES",
    "Finding",
    "PROJECTIONS",
    "Rule",
    "RuleKind",
    "RulesetError",
    "ScanReport",
    "SEVERITY_ORDER",
    "Severity",
    "SinkSpec",
    "TaintSpec",
    "build_cfg",
    "callee_matches",
    "default_ruleset",
    "finding_sort_key",
    "load_ruleset",
    "match_pattern",
    "member_path",
    "path_matches",
    "scan",
    "scan_files",
    "severity_passes",
    "taint_analyze",
    "taint_scopes",
    "terminal_name",
]
