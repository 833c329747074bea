"""Rule definitions, severities, and ruleset loading."""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path


class Severity(str, Enum):
    LOW = "Low"
    MEDIUM = "Medium"
    HIGH = "High"
    CRITICAL = "Critical"

    @property
    def projection(self) -> str:
        """Two-level view: Low/Medium -> Warning, High/Critical -> Error."""
        return "Warning" if self in (Severity.LOW, Severity.MEDIUM) else "Error"


SEVERITY_ORDER = (Severity.LOW, Severity.MEDIUM, Severity.HIGH, Severity.CRITICAL)
PROJECTIONS = ("Warning", "Error")

# Legal severity_filter values: a severity name or a projection name.
FILTER_VALUES = tuple(s.value for s in SEVERITY_ORDER) + PROJECTIONS


def severity_passes(severity: Severity, severity_filter: str | None) -> bool:
    if severity_filter is None:
        return True
    return severity.value == severity_filter or severity.projection == severity_filter


class RuleKind(str, Enum):
    PATTERN = "pattern"
    TAINT = "taint"


@dataclass(frozen=True)
class SinkSpec:
    """A call that consumes tainted data at one argument position.

    ``callee`` with a dot is matched against the full callee path;
    without a dot it matches a bare identifier or terminal member name.
    """

    callee: str
    arg: int = 0


@dataclass(frozen=True)
class TaintSpec:
    sources: tuple[str, ...]
    sinks: tuple[SinkSpec, ...]
    sanitizers: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.sources or not self.sinks:
            raise RulesetError("taint spec needs sources and sinks")


@dataclass(frozen=True)
class Rule:
    id: str
    kind: RuleKind
    severity: Severity
    matcher: dict | TaintSpec
    description: str = ""


class RulesetError(ValueError):
    pass


_SOURCES = ("req.query.*", "req.body.*", "process.argv")
_SANITIZERS = ("sanitize", "escapeHtml")

SECRET_VALUE_REGEX = r"(?i)(api[_-]?key|secret|passw(or)?d)[=:].{4,}"
SECRET_NAME_REGEX = r"(?i)key|token|secret"
SECRET_BASE64_MIN_LEN = 20


def default_ruleset() -> list[Rule]:
    return [
        Rule(
            id="js-eval-usage",
            kind=RuleKind.PATTERN,
            severity=Severity.HIGH,
            matcher={"type": "callee", "names": ["eval"]},
            description="call to eval()",
        ),
        Rule(
            id="js-new-function",
            kind=RuleKind.PATTERN,
            severity=Severity.HIGH,
            matcher={"type": "callee", "names": ["Function"]},
            description="dynamic code via Function constructor",
        ),
        Rule(
            id="js-innerhtml-assign",
            kind=RuleKind.PATTERN,
            severity=Severity.MEDIUM,
            matcher={"type": "member_assign", "name": "innerHTML"},
            description="innerHTML assigned a non-literal value",
        ),
        Rule(
            id="js-hardcoded-secret",
            kind=RuleKind.PATTERN,
            severity=Severity.HIGH,
            matcher={
                "type": "secret",
                "value_regex": SECRET_VALUE_REGEX,
                "name_regex": SECRET_NAME_REGEX,
                "base64_min_len": SECRET_BASE64_MIN_LEN,
            },
            description="hardcoded credential material",
        ),
        Rule(
            id="js-document-write",
            kind=RuleKind.PATTERN,
            severity=Severity.LOW,
            matcher={"type": "callee_path", "path": "document.write"},
            description="call to document.write()",
        ),
        Rule(
            id="js-sqli-taint",
            kind=RuleKind.TAINT,
            severity=Severity.CRITICAL,
            matcher=TaintSpec(
                sources=_SOURCES,
                sinks=(SinkSpec("db.query", 0), SinkSpec("db.run", 0)),
                sanitizers=_SANITIZERS,
            ),
            description="untrusted data reaches a database query",
        ),
        Rule(
            id="js-cmdi-taint",
            kind=RuleKind.TAINT,
            severity=Severity.CRITICAL,
            matcher=TaintSpec(
                sources=_SOURCES,
                sinks=(SinkSpec("exec", 0),),
                sanitizers=_SANITIZERS,
            ),
            description="untrusted data reaches a command execution",
        ),
        Rule(
            id="js-xss-taint",
            kind=RuleKind.TAINT,
            severity=Severity.HIGH,
            matcher=TaintSpec(
                sources=_SOURCES,
                sinks=(SinkSpec("res.send", 0),),
                sanitizers=_SANITIZERS,
            ),
            description="untrusted data echoed to the response",
        ),
    ]


_PATTERN_TYPES = ("callee", "callee_path", "member_assign", "secret")


def _rule_from_json(obj: dict, where: str) -> Rule:
    try:
        rule_id = obj["id"]
        kind = RuleKind(obj["kind"])
        severity = Severity(obj["severity"])
        matcher_obj = obj["matcher"]
    except KeyError as exc:
        raise RulesetError(f"{where}: missing field {exc}") from None
    except ValueError as exc:
        raise RulesetError(f"{where}: {exc}") from None

    matcher: dict | TaintSpec
    if kind is RuleKind.TAINT:
        try:
            matcher = TaintSpec(
                sources=tuple(matcher_obj["sources"]),
                sinks=tuple(SinkSpec(s["callee"], int(s.get("arg", 0))) for s in matcher_obj["sinks"]),
                sanitizers=tuple(matcher_obj.get("sanitizers", ())),
            )
        except (KeyError, TypeError) as exc:
            raise RulesetError(f"{where}: bad taint matcher ({exc})") from None
    else:
        if matcher_obj.get("type") not in _PATTERN_TYPES:
            raise RulesetError(f"{where}: unknown pattern type {matcher_obj.get('type')!r}")
        matcher = dict(matcher_obj)
    return Rule(rule_id, kind, severity, matcher, obj.get("description", ""))


def load_ruleset(path: str | Path) -> list[Rule]:
    """Load rules from a JSON file: ``{"rules": [{id, kind, severity, matcher, ...}]}``."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or not isinstance(data.get("rules"), list):
        raise RulesetError("ruleset must be an object with a 'rules' array")
    rules = [_rule_from_json(obj, f"rules[{i}]") for i, obj in enumerate(data["rules"])]
    ids = [r.id for r in rules]
    if len(ids) != len(set(ids)):
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        raise RulesetError(f"duplicate rule ids: {dupes}")
    return rules
