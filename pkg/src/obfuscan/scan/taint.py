"""Single-pass, source-order taint analysis.

The pass walks one scope (the program top level, or one function body,
nested functions excluded) in textual order exactly once: no fixpoint, no
back-edge iteration.  Taint therefore only flows forward in the text, does
not survive non-sanitizer call boundaries, and cannot follow a computed
member access whose index is not a literal.  Those blind spots are the
point: they model the lightweight engines whose detections collapse once
statement order or string literals are rewritten.
"""

from __future__ import annotations

from ..js import ast
from ..js.source import SourceSpan
from .patterns import callee_matches, member_path, path_matches
from .report import Finding
from .rules import Rule, TaintSpec

Chain = tuple[SourceSpan, ...]


def _walk_no_functions(root: ast.Node):
    """Pre-order walk that never enters a function (a separate taint scope)."""
    if isinstance(root, (ast.FunctionExpr, ast.FunctionDecl)):
        return
    stack = [root]
    while stack:
        node = stack.pop()
        yield node
        for child in ast.iter_children(node):
            if not isinstance(child, (ast.FunctionExpr, ast.FunctionDecl)):
                stack.append(child)


class _TaintPass:
    def __init__(self, spec: TaintSpec, rule: Rule, file: str) -> None:
        self.spec = spec
        self.rule = rule
        self.file = file
        self.state: dict[str, Chain] = {}
        self.findings: list[Finding] = []

    # -- expression taint ---------------------------------------------------

    def taint_of(self, expr: ast.Node | None) -> Chain | None:
        if expr is None:
            return None
        if isinstance(expr, ast.Identifier):
            if any(path_matches(p, expr.name) for p in self.spec.sources):
                return (expr.span,)
            return self.state.get(expr.name)
        if isinstance(expr, ast.Member):
            path = member_path(expr)
            if path is not None and any(path_matches(p, path) for p in self.spec.sources):
                return (expr.span,)
            if expr.computed and not isinstance(expr.index, ast.Literal):
                return None
            return self.taint_of(expr.obj)
        if isinstance(expr, ast.Binary):
            return self.taint_of(expr.left) or self.taint_of(expr.right)
        if isinstance(expr, ast.Unary):
            return self.taint_of(expr.operand)
        if isinstance(expr, ast.Conditional):
            return (
                self.taint_of(expr.test)
                or self.taint_of(expr.consequent)
                or self.taint_of(expr.alternate)
            )
        if isinstance(expr, ast.Assign):
            return self.taint_of(expr.value)
        if isinstance(expr, ast.ArrayLiteral):
            for element in expr.elements:
                chain = self.taint_of(element)
                if chain:
                    return chain
            return None
        if isinstance(expr, ast.ObjectLiteral):
            for prop in expr.properties:
                chain = self.taint_of(prop.value)
                if chain:
                    return chain
            return None
        # calls and news block propagation; sanitizers clear by the same rule
        return None

    # -- sinks --------------------------------------------------------------

    def check_sinks(self, expr: ast.Node | None) -> None:
        """Flag sink calls anywhere inside ``expr`` (nested functions excluded)."""
        if expr is None:
            return
        for node in _walk_no_functions(expr):
            if not isinstance(node, ast.Call):
                continue
            for sink in self.spec.sinks:
                if not callee_matches(sink.callee, node.callee):
                    continue
                if sink.arg >= len(node.args):
                    continue
                chain = self.taint_of(node.args[sink.arg])
                if chain:
                    self.findings.append(
                        Finding(
                            rule_id=self.rule.id,
                            severity=self.rule.severity,
                            span=node.span,
                            message=self.rule.description or self.rule.id,
                            taint_path=chain + (node.span,),
                            file=self.file,
                        )
                    )

    # -- statements, in source order ----------------------------------------

    def assign_effect(self, target: ast.Node, value: ast.Node, span: SourceSpan) -> None:
        if not isinstance(target, ast.Identifier):
            return
        chain = self.taint_of(value)
        if chain:
            self.state[target.name] = chain + (span,)
        else:
            self.state.pop(target.name, None)

    def visit_expression(self, expr: ast.Node) -> None:
        self.check_sinks(expr)
        if isinstance(expr, ast.Assign):
            self.assign_effect(expr.target, expr.value, expr.span)

    def visit_stmt(self, stmt: ast.Node) -> None:
        if isinstance(stmt, ast.VarDecl):
            for decl in stmt.declarators:
                if decl.init is None:
                    self.state.pop(decl.name, None)
                    continue
                self.check_sinks(decl.init)
                chain = self.taint_of(decl.init)
                if chain:
                    self.state[decl.name] = chain + (decl.span,)
                else:
                    self.state.pop(decl.name, None)
        elif isinstance(stmt, ast.ExprStmt):
            self.visit_expression(stmt.expression)
        elif isinstance(stmt, ast.Block):
            self.visit_stmts(stmt.body)
        elif isinstance(stmt, ast.If):
            self.check_sinks(stmt.test)
            self.visit_stmt(stmt.consequent)
            if stmt.alternate is not None:
                self.visit_stmt(stmt.alternate)
        elif isinstance(stmt, ast.While):
            self.check_sinks(stmt.test)
            self.visit_stmt(stmt.body)
        elif isinstance(stmt, ast.DoWhile):
            self.visit_stmt(stmt.body)
            self.check_sinks(stmt.test)
        elif isinstance(stmt, ast.For):
            if isinstance(stmt.init, ast.VarDecl):
                self.visit_stmt(stmt.init)
            elif stmt.init is not None:
                self.visit_expression(stmt.init)
            self.check_sinks(stmt.test)
            if stmt.update is not None:
                self.visit_expression(stmt.update)
            self.visit_stmt(stmt.body)
        elif isinstance(stmt, ast.Switch):
            self.check_sinks(stmt.discriminant)
            for case in stmt.cases:
                self.check_sinks(case.test)
                self.visit_stmts(case.body)
        elif isinstance(stmt, ast.Return):
            self.check_sinks(stmt.argument)
        # FunctionDecl bodies are separate scopes; jumps carry no data

    def visit_stmts(self, stmts: list[ast.Node]) -> None:
        for stmt in stmts:
            self.visit_stmt(stmt)


def scope_body(scope: ast.Node) -> list[ast.Node]:
    if isinstance(scope, ast.Program):
        return scope.body
    return scope.body.body


def taint_analyze(scope: ast.Node, rule: Rule, file: str = "") -> list[Finding]:
    """Run one taint rule over one scope (Program, FunctionDecl, or FunctionExpr)."""
    spec = rule.matcher
    if not isinstance(spec, TaintSpec):
        raise TypeError(f"rule {rule.id} is not a taint rule")
    run = _TaintPass(spec, rule, file)
    run.visit_stmts(scope_body(scope))
    return run.findings
