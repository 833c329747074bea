"""Code size and complexity metrics.

Halstead classification is notoriously tool-dependent, so the table used
here is frozen:

operators
    all Binary, Unary, and Assign operators (one per node); each call,
    new, and member access (dot or index form); the statement keywords
    if, while (do-while counts as its while), for, return, switch
operands
    every Identifier and Literal node

Everything else (declaration keywords, braces, commas, property-name
strings, conditional ``?:``) contributes nothing.  A function's counts
cover its own body only; nested functions are measured separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .js import SourceFile, ast, tokenize


class EmptyInput(ValueError):
    """Raised when an aggregate is requested over zero files."""


@dataclass(frozen=True)
class FunctionMetrics:
    name: str
    cyclomatic: int
    halstead_length: int


@dataclass(frozen=True)
class FileMetrics:
    path: str
    sloc: int
    functions: tuple[FunctionMetrics, ...]


@dataclass(frozen=True)
class Aggregate:
    minimum: float
    average: float
    maximum: float
    stddev: float


@dataclass(frozen=True)
class ProjectMetrics:
    files: tuple[FileMetrics, ...]
    sloc: Aggregate
    cyclomatic: Aggregate | None
    halstead_length: Aggregate | None


def _own_nodes(fn: ast.Node) -> Iterator[ast.Node]:
    """Nodes of one function's body; nested function bodies excluded."""
    body = fn.body if isinstance(fn, ast.Program) else fn.body.body
    stack: list[ast.Node] = list(body)
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, (ast.FunctionDecl, ast.FunctionExpr)):
            continue
        stack.extend(ast.iter_children(node))


_DECISION_STMTS = (ast.If, ast.While, ast.DoWhile, ast.For)
_OPERATOR_EXPRS = (ast.Binary, ast.Unary, ast.Assign, ast.Call, ast.New, ast.Member)
_KEYWORD_STMTS = (ast.If, ast.While, ast.DoWhile, ast.For, ast.Return, ast.Switch)


def cyclomatic_complexity(fn: ast.Node) -> int:
    """1 + decision points (if/while/do-while/for/case/?:/&&/||)."""
    count = 1
    for node in _own_nodes(fn):
        if isinstance(node, _DECISION_STMTS):
            count += 1
        elif isinstance(node, ast.SwitchCase):
            count += node.test is not None
        elif isinstance(node, ast.Conditional):
            count += 1
        elif isinstance(node, ast.Binary):
            count += node.op in ("&&", "||")
    return count


def halstead_length(fn: ast.Node) -> int:
    """N = total operator occurrences + total operand occurrences."""
    total = 0
    for node in _own_nodes(fn):
        if isinstance(node, _OPERATOR_EXPRS):
            total += 1
        elif isinstance(node, _KEYWORD_STMTS):
            total += 1
        elif isinstance(node, (ast.Identifier, ast.Literal)):
            total += 1
    return total


def _function_name(fn: ast.Node, position: int) -> str:
    if getattr(fn, "name", None):
        return fn.name
    return f"<anonymous#{position}>"


def compute_metrics(file: SourceFile, program: ast.Program) -> FileMetrics:
    """Physical SLOC plus per-function CC and Halstead length."""
    lines = {tok.span.start_line for tok in tokenize(file.content) if tok.kind != "eof"}
    functions = tuple(
        FunctionMetrics(
            name=_function_name(fn, idx),
            cyclomatic=cyclomatic_complexity(fn),
            halstead_length=halstead_length(fn),
        )
        for idx, fn in enumerate(ast.iter_functions(program))
    )
    return FileMetrics(path=file.path, sloc=len(lines), functions=functions)


def _aggregate(values: Iterable[float]) -> Aggregate:
    arr = np.asarray(list(values), dtype=float)
    return Aggregate(
        minimum=float(arr.min()),
        average=float(arr.mean()),
        maximum=float(arr.max()),
        stddev=float(arr.std()),  # population stddev, divide by N
    )


def aggregate_metrics(files: Sequence[FileMetrics]) -> ProjectMetrics:
    """Pool per-file SLOC and project-wide per-function values."""
    if not files:
        raise EmptyInput("no files to aggregate")
    functions = [fn for f in files for fn in f.functions]
    return ProjectMetrics(
        files=tuple(files),
        sloc=_aggregate(f.sloc for f in files),
        cyclomatic=_aggregate(fn.cyclomatic for fn in functions) if functions else None,
        halstead_length=_aggregate(fn.halstead_length for fn in functions) if functions else None,
    )


_TABLE_ROWS = (
    ("Global Physical SLOC", "sloc"),
    ("CC per function Avg", "cyclomatic"),
    ("Halstead Length per function", "halstead_length"),
)
_TABLE_HEADER = ("Metric", "Min", "Avg", "Max", "Std. Dev.")


def render_metrics_table(project: ProjectMetrics, title: str = "") -> str:
    """Fixed-layout summary table (Min/Avg/Max/Std. Dev. per metric)."""
    rows: list[tuple[str, ...]] = [_TABLE_HEADER]
    for label, attr in _TABLE_ROWS:
        agg = getattr(project, attr)
        if agg is None:
            rows.append((label, "-", "-", "-", "-"))
        else:
            rows.append(
                (
                    label,
                    f"{agg.minimum:.2f}",
                    f"{agg.average:.2f}",
                    f"{agg.maximum:.2f}",
                    f"{agg.stddev:.2f}",
                )
            )
    widths = [max(len(row[col]) for row in rows) for col in range(5)]
    lines = [title] if title else []
    for row in rows:
        label = row[0].ljust(widths[0])
        cells = [row[col].rjust(widths[col]) for col in range(1, 5)]
        lines.append("  ".join([label, *cells]).rstrip())
    return "\n".join(lines) + "\n"
