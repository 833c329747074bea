"""Scan orchestration: pattern matching plus taint passes over every scope."""

from __future__ import annotations

import re

from ..js import ast
from .patterns import member_path, terminal_name
from .report import Finding, ScanReport, finding_sort_key
from .rules import Rule, RuleKind, default_ruleset
from .taint import taint_analyze


def _callee_findings(rule: Rule, program: ast.Node, names: set[str], file: str) -> list[Finding]:
    out = []
    for node in ast.walk(program):
        if isinstance(node, (ast.Call, ast.New)):
            name = terminal_name(node.callee)
            if name in names:
                out.append(_finding(rule, node.span, file))
    return out


def _callee_path_findings(rule: Rule, program: ast.Node, path: str, file: str) -> list[Finding]:
    out = []
    for node in ast.walk(program):
        if isinstance(node, (ast.Call, ast.New)) and member_path(node.callee) == path:
            out.append(_finding(rule, node.span, file))
    return out


def _member_assign_findings(rule: Rule, program: ast.Node, name: str, file: str) -> list[Finding]:
    out = []
    for node in ast.walk(program):
        if (
            isinstance(node, ast.Assign)
            and isinstance(node.target, ast.Member)
            and terminal_name(node.target) == name
            and not isinstance(node.value, ast.Literal)
        ):
            out.append(_finding(rule, node.span, file))
    return out


def _is_base64_secret(value: str, min_len: int) -> bool:
    return len(value) >= min_len and re.fullmatch(r"[A-Za-z0-9+/=]+", value) is not None


def _secret_findings(rule: Rule, program: ast.Node, matcher: dict, file: str) -> list[Finding]:
    value_re = re.compile(matcher["value_regex"])
    name_re = re.compile(matcher["name_regex"])
    min_len = matcher["base64_min_len"]
    spans = {}

    def bound_name(node: ast.Node) -> str | None:
        if isinstance(node, ast.Declarator):
            return node.name
        if isinstance(node, ast.Assign):
            if isinstance(node.target, ast.Identifier):
                return node.target.name
            if isinstance(node.target, ast.Member):
                return terminal_name(node.target)
        if isinstance(node, ast.ObjectProperty):
            return node.key
        return None

    for node in ast.walk(program):
        # clause 1: any string literal that looks like an inline credential
        if isinstance(node, ast.Literal) and type(node.value) is str:
            if value_re.search(node.value):
                spans.setdefault(node.span.sort_key(), node.span)
        # clause 2: long base64-alphabet literal bound to a secret-ish name
        name = bound_name(node)
        if name is None or name_re.search(name) is None:
            continue
        value = node.init if isinstance(node, ast.Declarator) else node.value
        if (
            isinstance(value, ast.Literal)
            and type(value.value) is str
            and _is_base64_secret(value.value, min_len)
        ):
            spans.setdefault(value.span.sort_key(), value.span)

    return [_finding(rule, span, file) for _, span in sorted(spans.items())]


def _finding(rule: Rule, span, file: str) -> Finding:
    return Finding(
        rule_id=rule.id,
        severity=rule.severity,
        span=span,
        message=rule.description or rule.id,
        taint_path=None,
        file=file,
    )


def match_pattern(rule: Rule, program: ast.Node, file: str = "") -> list[Finding]:
    if rule.kind is not RuleKind.PATTERN:
        raise TypeError(f"rule {rule.id} is not a pattern rule")
    matcher = rule.matcher
    kind = matcher["type"]
    if kind == "callee":
        return _callee_findings(rule, program, set(matcher["names"]), file)
    if kind == "callee_path":
        return _callee_path_findings(rule, program, matcher["path"], file)
    if kind == "member_assign":
        return _member_assign_findings(rule, program, matcher["name"], file)
    if kind == "secret":
        return _secret_findings(rule, program, matcher, file)
    raise ValueError(f"unknown pattern matcher type {kind!r}")


def taint_scopes(program: ast.Program) -> list[ast.Node]:
    return [program, *ast.iter_functions(program)]


def scan(
    program: ast.Program,
    ruleset: list[Rule] | None = None,
    project_id: str = "",
    variant_id: str = "",
    file: str = "",
) -> ScanReport:
    """Run every rule over one parsed file; findings sorted by location then rule."""
    rules = ruleset if ruleset is not None else default_ruleset()
    findings: list[Finding] = []
    for rule in rules:
        if rule.kind is RuleKind.PATTERN:
            findings.extend(match_pattern(rule, program, file))
        else:
            for scope in taint_scopes(program):
                findings.extend(taint_analyze(scope, rule, file))
    findings.sort(key=finding_sort_key)
    return ScanReport(project_id=project_id, variant_id=variant_id, findings=tuple(findings))


def scan_files(
    parsed: list[tuple[str, ast.Program]],
    ruleset: list[Rule] | None = None,
    project_id: str = "",
    variant_id: str = "",
) -> ScanReport:
    """Scan (relative path, program) pairs and merge into one project report."""
    rules = ruleset if ruleset is not None else default_ruleset()
    findings: list[Finding] = []
    for path, program in parsed:
        findings.extend(scan(program, rules, project_id, variant_id, file=path).findings)
    findings.sort(key=finding_sort_key)
    return ScanReport(project_id=project_id, variant_id=variant_id, findings=tuple(findings))
