"""Obfuscation detection heuristics.

Five shape flags, one per detectable technique; the score is the
fraction raised.  The heuristics read source spans, so they are meant
for programs parsed from concrete text (files or rendered output), not
for freshly transformed in-memory trees whose nodes carry synthetic
spans.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..js import ast, walk

FLAG_NAMES = ("CMP", "CFF", "DP", "SA", "SS")


@dataclass(frozen=True)
class DetectionResult:
    score: float
    flags: tuple[tuple[str, bool], ...]

    @property
    def raised(self) -> tuple[str, ...]:
        return tuple(name for name, up in self.flags if up)

    def flag(self, name: str) -> bool:
        return dict(self.flags)[name]


def _flag_compact(program: ast.Program) -> bool:
    """Two or more top-level statements sharing one physical line."""
    lines = {stmt.span.start_line for stmt in program.body if stmt.span.start_line > 0}
    return len(program.body) >= 2 and len(lines) == 1


def _flag_dispatcher(program: ast.Program) -> bool:
    """A while loop testing a variable that a direct-child switch dispatches on."""
    for node in walk(program):
        if not isinstance(node, ast.While):
            continue
        test_names = {n.name for n in walk(node.test) if isinstance(n, ast.Identifier)}
        for stmt in node.body.body:
            if (
                isinstance(stmt, ast.Switch)
                and isinstance(stmt.discriminant, ast.Identifier)
                and stmt.discriminant.name in test_names
            ):
                return True
    return False


def _flag_debugger(program: ast.Program) -> bool:
    return any(isinstance(node, ast.DebuggerStmt) for node in walk(program))


def _is_string_table(node: ast.Node) -> bool:
    return (
        isinstance(node, ast.ArrayLiteral)
        and len(node.elements) >= 2
        and all(
            isinstance(el, ast.Literal) and isinstance(el.value, str)
            for el in node.elements
        )
    )


def _returns_modular_index(fn: ast.Node) -> bool:
    for node in walk(fn.body):
        if isinstance(node, (ast.FunctionDecl, ast.FunctionExpr)):
            continue
        if (
            isinstance(node, ast.Return)
            and isinstance(node.argument, ast.Member)
            and node.argument.computed
            and node.argument.index is not None
            and any(
                isinstance(sub, ast.Binary) and sub.op == "%"
                for sub in walk(node.argument.index)
            )
        ):
            return True
    return False


def _flag_string_table(program: ast.Program) -> bool:
    """An all-string array plus a decoder returning a modular index."""
    has_table = any(
        _is_string_table(decl.init)
        for node in walk(program)
        if isinstance(node, ast.VarDecl)
        for decl in node.declarators
        if decl.init is not None
    )
    if not has_table:
        return False
    return any(
        _returns_modular_index(fn)
        for fn in walk(program)
        if isinstance(fn, (ast.FunctionDecl, ast.FunctionExpr))
    )


def _concat_leaves(node: ast.Node) -> list[ast.Node]:
    if isinstance(node, ast.Binary) and node.op == "+":
        return _concat_leaves(node.left) + _concat_leaves(node.right)
    return [node]


def _flag_concat_chain(program: ast.Program) -> bool:
    """A + chain of three or more leaves, every leaf a string literal."""
    for node in walk(program):
        if not (isinstance(node, ast.Binary) and node.op == "+"):
            continue
        leaves = _concat_leaves(node)
        if len(leaves) >= 3 and all(
            isinstance(leaf, ast.Literal) and isinstance(leaf.value, str)
            for leaf in leaves
        ):
            return True
    return False


_FLAG_CHECKS = {
    "CMP": _flag_compact,
    "CFF": _flag_dispatcher,
    "DP": _flag_debugger,
    "SA": _flag_string_table,
    "SS": _flag_concat_chain,
}


def detect_obfuscation(program: ast.Program) -> DetectionResult:
    flags = tuple((name, _FLAG_CHECKS[name](program)) for name in FLAG_NAMES)
    score = sum(up for _, up in flags) / len(FLAG_NAMES)
    return DetectionResult(score=score, flags=flags)
