"""Syntactic matchers shared by pattern rules and taint analysis."""

from __future__ import annotations

from ..js import ast


def member_path(node: ast.Node) -> str | None:
    """Fold a member chain into ``a.b.c`` form.

    Dot access and computed access with a string-literal index both fold;
    any other shape (calls, non-literal indexes) yields None.
    """
    if isinstance(node, ast.Identifier):
        return node.name
    if isinstance(node, ast.Member):
        base = member_path(node.obj)
        if base is None:
            return None
        if not node.computed:
            return f"{base}.{node.name}"
        if isinstance(node.index, ast.Literal) and type(node.index.value) is str:
            return f"{base}.{node.index.value}"
        return None
    return None


def terminal_name(node: ast.Node) -> str | None:
    """The last identifier of a callee: ``f`` for f(...), ``g`` for a.b.g(...)."""
    if isinstance(node, ast.Identifier):
        return node.name
    if isinstance(node, ast.Member):
        if not node.computed:
            return node.name
        if isinstance(node.index, ast.Literal) and type(node.index.value) is str:
            return node.index.value
    return None


def path_matches(pattern: str, path: str) -> bool:
    """Source patterns: ``a.b.*`` matches anything strictly under a.b; otherwise exact."""
    if pattern.endswith(".*"):
        return path.startswith(pattern[:-1]) and len(path) > len(pattern) - 1
    return path == pattern


def callee_matches(pattern: str, callee: ast.Node) -> bool:
    """Dotted patterns compare against the folded path, plain ones against the terminal name."""
    if "." in pattern:
        return member_path(callee) == pattern
    return terminal_name(callee) == pattern
