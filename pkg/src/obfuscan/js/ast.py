"""AST node types for the JavaScript subset.

Nodes compare by identity (useful for maps during transformation); use
``structural_eq`` for shape comparison. Spans are carried for diagnostics
and are never part of structural equality.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .source import SYNTHETIC_SPAN, SourceSpan


@dataclass(eq=False)
class Node:
    pass


# --- expressions -----------------------------------------------------------


@dataclass(eq=False)
class Identifier(Node):
    name: str
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class Literal(Node):
    # float | str | bool | None (null). Booleans must be tested before
    # numbers when dispatching: bool is an int subclass in Python.
    value: object
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class ArrayLiteral(Node):
    elements: list[Node]
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class ObjectProperty(Node):
    key: str
    value: Node
    quoted: bool = False
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class ObjectLiteral(Node):
    properties: list[ObjectProperty]
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class FunctionExpr(Node):
    name: Optional[str]
    params: list[str]
    body: "Block"
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class Unary(Node):
    op: str  # ! - + typeof
    operand: Node
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class Binary(Node):
    op: str  # + - * / % < <= > >= === !== && ||
    left: Node
    right: Node
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class Assign(Node):
    op: str  # = += -= *= /= %=
    target: Node  # Identifier or Member
    value: Node
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class Conditional(Node):
    test: Node
    consequent: Node
    alternate: Node
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class Call(Node):
    callee: Node
    args: list[Node]
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class New(Node):
    callee: Node
    args: list[Node]
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class Member(Node):
    """Either ``obj.name`` (computed=False) or ``obj[index]`` (computed=True)."""

    obj: Node
    computed: bool
    name: Optional[str] = None
    index: Optional[Node] = None
    span: SourceSpan = SYNTHETIC_SPAN


# --- statements ------------------------------------------------------------


@dataclass(eq=False)
class Declarator(Node):
    name: str
    init: Optional[Node]
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class VarDecl(Node):
    kind: str  # var | let | const
    declarators: list[Declarator]
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class Block(Node):
    body: list[Node]
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class FunctionDecl(Node):
    name: str
    params: list[str]
    body: Block
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class If(Node):
    test: Node
    consequent: Block
    alternate: Optional[Union[Block, "If"]] = None
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class While(Node):
    test: Node
    body: Block
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class DoWhile(Node):
    body: Block
    test: Node
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class For(Node):
    init: Optional[Node]  # VarDecl or expression
    test: Optional[Node]
    update: Optional[Node]
    body: Block
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class SwitchCase(Node):
    test: Optional[Node]  # None == default
    body: list[Node]
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class Switch(Node):
    discriminant: Node
    cases: list[SwitchCase]
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class Return(Node):
    argument: Optional[Node] = None
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class Break(Node):
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class Continue(Node):
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class ExprStmt(Node):
    expression: Node
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class EmptyStmt(Node):
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class DebuggerStmt(Node):
    span: SourceSpan = SYNTHETIC_SPAN


@dataclass(eq=False)
class Program(Node):
    body: list[Node]
    span: SourceSpan = SYNTHETIC_SPAN
    # Layout/guard bookkeeping, never part of structural equality.
    compact: bool = field(default=False, compare=False)
    requires_compact: bool = field(default=False, compare=False)


# --- traversal and comparison ----------------------------------------------

_SKIP_FIELDS = frozenset({"span", "compact", "requires_compact"})


def child_fields(node: Node) -> list[tuple[str, object]]:
    return [
        (f.name, getattr(node, f.name))
        for f in dataclasses.fields(node)
        if f.name not in _SKIP_FIELDS
    ]


def iter_children(node: Node) -> Iterator[Node]:
    for _, value in child_fields(node):
        if isinstance(value, Node):
            yield value
        elif isinstance(value, list):
            for item in value:
                if isinstance(item, Node):
                    yield item


def walk(node: Node) -> Iterator[Node]:
    """Pre-order traversal over ``node`` and all descendants."""
    stack = [node]
    while stack:
        current = stack.pop()
        yield current
        children = list(iter_children(current))
        stack.extend(reversed(children))


def structural_eq(a: Node, b: Node) -> bool:
    """Shape equality, ignoring spans, trivia, and layout flags."""
    if type(a) is not type(b):
        return False
    for (name, va), (_, vb) in zip(child_fields(a), child_fields(b)):
        if isinstance(va, Node) or isinstance(vb, Node):
            if not (isinstance(va, Node) and isinstance(vb, Node) and structural_eq(va, vb)):
                return False
        elif isinstance(va, list) and isinstance(vb, list):
            if len(va) != len(vb):
                return False
            for ia, ib in zip(va, vb):
                if isinstance(ia, Node) or isinstance(ib, Node):
                    if not (isinstance(ia, Node) and isinstance(ib, Node) and structural_eq(ia, ib)):
                        return False
                elif ia != ib:
                    return False
        else:
            # Literal values need type-aware comparison: True == 1.0 in Python.
            if isinstance(a, Literal) and name == "value":
                if not _literal_value_eq(va, vb):
                    return False
            elif va != vb:
                return False
    return True


def _literal_value_eq(va: object, vb: object) -> bool:
    if isinstance(va, bool) or isinstance(vb, bool):
        return isinstance(va, bool) and isinstance(vb, bool) and va == vb
    if va is None or vb is None:
        return va is None and vb is None
    if type(va) is not type(vb):
        return False
    return va == vb


def collect_names(program: Node) -> set[str]:
    """Every identifier-ish name in the tree; used for fresh-name generation."""
    names: set[str] = set()
    for node in walk(program):
        if isinstance(node, Identifier):
            names.add(node.name)
        elif isinstance(node, Declarator):
            names.add(node.name)
        elif isinstance(node, (FunctionDecl, FunctionExpr)):
            if node.name:
                names.add(node.name)
            names.update(node.params)
        elif isinstance(node, Member) and not node.computed and node.name:
            names.add(node.name)
        elif isinstance(node, ObjectProperty):
            names.add(node.key)
    return names


def iter_functions(root: Node) -> Iterator[Node]:
    """All FunctionDecl/FunctionExpr nodes under ``root`` (pre-order)."""
    for node in walk(root):
        if isinstance(node, (FunctionDecl, FunctionExpr)):
            yield node
