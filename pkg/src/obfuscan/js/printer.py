"""Pretty and compact printers.

Both printers guarantee that re-parsing the output yields a structurally
equal tree. Pretty output uses one statement per line with 2-space indent;
compact output is a single line with spaces only where two adjacent tokens
would otherwise fuse.
"""

from __future__ import annotations

import math
import re

from . import ast

_IDENT_CHARS = frozenset("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_$")

# Expression precedence tiers; higher binds tighter.
_PREC_ASSIGN = 2
_PREC_CONDITIONAL = 3
_PREC_OR = 4
_PREC_AND = 5
_PREC_EQUALITY = 9
_PREC_RELATIONAL = 10
_PREC_ADDITIVE = 12
_PREC_MULTIPLICATIVE = 13
_PREC_UNARY = 14
_PREC_POSTFIX = 17
_PREC_PRIMARY = 20

_BINARY_PREC = {
    "||": _PREC_OR,
    "&&": _PREC_AND,
    "===": _PREC_EQUALITY,
    "!==": _PREC_EQUALITY,
    "<": _PREC_RELATIONAL,
    "<=": _PREC_RELATIONAL,
    ">": _PREC_RELATIONAL,
    ">=": _PREC_RELATIONAL,
    "+": _PREC_ADDITIVE,
    "-": _PREC_ADDITIVE,
    "*": _PREC_MULTIPLICATIVE,
    "/": _PREC_MULTIPLICATIVE,
    "%": _PREC_MULTIPLICATIVE,
}

_IDENT_KEY_RE = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*\Z")


def print_pretty(program: ast.Program) -> str:
    writer = _Writer(pretty=True)
    for stmt in program.body:
        writer.statement(stmt)
    return writer.finish()


def print_compact(program: ast.Program) -> str:
    writer = _Writer(pretty=False)
    for stmt in program.body:
        writer.statement(stmt)
    return writer.finish()


def render(program: ast.Program) -> str:
    """Source form the program is meant to ship in."""
    return print_compact(program) if program.compact else print_pretty(program)


def format_number(value: float) -> str:
    """JS-style numeric display: integral values drop the fraction."""
    if math.isnan(value):
        return "NaN"
    if value == math.inf:
        return "Infinity"
    if value == -math.inf:
        return "-Infinity"
    if value == 0:
        return "0"
    if value == int(value) and abs(value) < 1e21:
        return str(int(value))
    text = repr(value)
    return re.sub(r"e([+-])0(\d)", r"e\g<1>\g<2>", text)


def quote_string(value: str) -> str:
    out = ['"']
    for ch in value:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20:
            out.append(f"\\x{ord(ch):02X}")
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


class _Writer:
    def __init__(self, pretty: bool):
        self.pretty = pretty
        self.parts: list[str] = []
        self.indent = 0
        self.inline_depth = 0  # >0 while inside a function-expression body

    # --- low-level emission ---

    def emit(self, text: str) -> None:
        if not text:
            return
        if self.parts:
            prev = self.parts[-1]
            if prev and prev[-1] in _IDENT_CHARS and text[0] in _IDENT_CHARS:
                self.parts.append(" ")
        self.parts.append(text)

    def space(self) -> None:
        # Readability space; dropped in compact mode.
        if self.pretty and self.parts and not self.parts[-1].endswith((" ", "\n")):
            self.parts.append(" ")

    def newline(self) -> None:
        if not self.pretty:
            return
        if self.inline_depth:
            self.space()
        else:
            self.parts.append("\n" + "  " * self.indent)

    def finish(self) -> str:
        text = "".join(self.parts)
        if self.pretty:
            text = "\n".join(line.rstrip() for line in text.split("\n"))
            text = text.strip("\n")
            if text:
                text += "\n"
        return text

    # --- statements ---

    def statement(self, node: ast.Node) -> None:
        self.newline()
        method = getattr(self, f"_stmt_{type(node).__name__}", None)
        if method is None:
            raise TypeError(f"not a statement node: {type(node).__name__}")
        method(node)

    def _stmt_VarDecl(self, node: ast.VarDecl) -> None:
        self.var_decl_head(node)
        self.emit(";")

    def var_decl_head(self, node: ast.VarDecl) -> None:
        self.emit(node.kind)
        for i, decl in enumerate(node.declarators):
            if i:
                self.emit(",")
                self.space()
            self.emit(decl.name)
            if decl.init is not None:
                self.space()
                self.emit("=")
                self.space()
                self.expression(decl.init, _PREC_ASSIGN)

    def _stmt_FunctionDecl(self, node: ast.FunctionDecl) -> None:
        self.emit("function")
        self.emit(node.name)
        self.params(node.params)
        self.space()
        self.block(node.body)

    def _stmt_Block(self, node: ast.Block) -> None:
        self.block(node)

    def _stmt_If(self, node: ast.If) -> None:
        self.emit("if")
        self.space()
        self.emit("(")
        self.expression(node.test, 0)
        self.emit(")")
        self.space()
        self.block(node.consequent)
        if node.alternate is not None:
            self.space()
            self.emit("else")
            if isinstance(node.alternate, ast.If):
                self.space()
                self._stmt_If(node.alternate)
            else:
                self.space()
                self.block(node.alternate)

    def _stmt_While(self, node: ast.While) -> None:
        self.emit("while")
        self.space()
        self.emit("(")
        self.expression(node.test, 0)
        self.emit(")")
        self.space()
        self.block(node.body)

    def _stmt_DoWhile(self, node: ast.DoWhile) -> None:
        self.emit("do")
        self.space()
        self.block(node.body)
        self.space()
        self.emit("while")
        self.space()
        self.emit("(")
        self.expression(node.test, 0)
        self.emit(")")
        self.emit(";")

    def _stmt_For(self, node: ast.For) -> None:
        self.emit("for")
        self.space()
        self.emit("(")
        if isinstance(node.init, ast.VarDecl):
            self.var_decl_head(node.init)
        elif node.init is not None:
            self.expression(node.init, 0)
        self.emit(";")
        if node.test is not None:
            self.space()
            self.expression(node.test, 0)
        self.emit(";")
        if node.update is not None:
            self.space()
            self.expression(node.update, 0)
        self.emit(")")
        self.space()
        self.block(node.body)

    def _stmt_Switch(self, node: ast.Switch) -> None:
        self.emit("switch")
        self.space()
        self.emit("(")
        self.expression(node.discriminant, 0)
        self.emit(")")
        self.space()
        self.emit("{")
        self.indent += 1
        for case in node.cases:
            self.newline()
            if case.test is None:
                self.emit("default")
                self.emit(":")
            else:
                self.emit("case")
                self.space()
                self.expression(case.test, _PREC_ASSIGN)
                self.emit(":")
            self.indent += 1
            for stmt in case.body:
                self.statement(stmt)
            self.indent -= 1
        self.indent -= 1
        self.newline()
        self.emit("}")

    def _stmt_Return(self, node: ast.Return) -> None:
        self.emit("return")
        if node.argument is not None:
            self.space()
            self.expression(node.argument, 0)
        self.emit(";")

    def _stmt_Break(self, node: ast.Break) -> None:
        self.emit("break")
        self.emit(";")

    def _stmt_Continue(self, node: ast.Continue) -> None:
        self.emit("continue")
        self.emit(";")

    def _stmt_ExprStmt(self, node: ast.ExprStmt) -> None:
        # A statement starting with "{" or "function" would reparse as a
        # block or declaration; parenthesize to keep the expression reading.
        if _starts_ambiguously(node.expression):
            self.emit("(")
            self.expression(node.expression, 0)
            self.emit(")")
        else:
            self.expression(node.expression, 0)
        self.emit(";")

    def _stmt_EmptyStmt(self, node: ast.EmptyStmt) -> None:
        self.emit(";")

    def _stmt_DebuggerStmt(self, node: ast.DebuggerStmt) -> None:
        self.emit("debugger")
        self.emit(";")

    def block(self, node: ast.Block) -> None:
        if not node.body:
            self.emit("{")
            self.emit("}")
            return
        self.emit("{")
        self.indent += 1
        for stmt in node.body:
            self.statement(stmt)
        self.indent -= 1
        self.newline()
        self.emit("}")

    def params(self, params: list[str]) -> None:
        self.emit("(")
        for i, param in enumerate(params):
            if i:
                self.emit(",")
                self.space()
            self.emit(param)
        self.emit(")")

    # --- expressions ---

    def expression(self, node: ast.Node, min_prec: int) -> None:
        prec = _node_prec(node)
        if prec < min_prec:
            self.emit("(")
            self.expression(node, 0)
            self.emit(")")
            return
        method = getattr(self, f"_expr_{type(node).__name__}", None)
        if method is None:
            raise TypeError(f"not an expression node: {type(node).__name__}")
        method(node)

    def _expr_Identifier(self, node: ast.Identifier) -> None:
        self.emit(node.name)

    def _expr_Literal(self, node: ast.Literal) -> None:
        value = node.value
        if isinstance(value, bool):
            self.emit("true" if value else "false")
        elif value is None:
            self.emit("null")
        elif isinstance(value, float):
            self.emit(format_number(value))
        else:
            self.emit(quote_string(value))

    def _expr_ArrayLiteral(self, node: ast.ArrayLiteral) -> None:
        self.emit("[")
        for i, element in enumerate(node.elements):
            if i:
                self.emit(",")
                self.space()
            self.expression(element, _PREC_ASSIGN)
        self.emit("]")

    def _expr_ObjectLiteral(self, node: ast.ObjectLiteral) -> None:
        self.emit("{")
        for i, prop in enumerate(node.properties):
            if i:
                self.emit(",")
            self.space()
            if prop.quoted or not _IDENT_KEY_RE.match(prop.key):
                self.emit(quote_string(prop.key))
            else:
                self.emit(prop.key)
            self.emit(":")
            self.space()
            self.expression(prop.value, _PREC_ASSIGN)
        if node.properties:
            self.space()
        self.emit("}")

    def _expr_FunctionExpr(self, node: ast.FunctionExpr) -> None:
        self.emit("function")
        if node.name:
            self.emit(node.name)
        self.params(node.params)
        self.space()
        self.inline_block(node.body)

    def inline_block(self, node: ast.Block) -> None:
        # Function-expression bodies print inline so expressions stay on
        # one line even in pretty mode.
        if not node.body:
            self.emit("{")
            self.emit("}")
            return
        self.inline_depth += 1
        try:
            self.emit("{")
            for stmt in node.body:
                self.statement(stmt)
            self.space()
            self.emit("}")
        finally:
            self.inline_depth -= 1

    def _expr_Unary(self, node: ast.Unary) -> None:
        self.emit(node.op)
        if node.op == "typeof":
            self.space()
        self.expression(node.operand, _PREC_UNARY)

    def _expr_Binary(self, node: ast.Binary) -> None:
        prec = _BINARY_PREC[node.op]
        self.expression(node.left, prec)
        self.space()
        self.emit(node.op)
        self.space()
        self.expression(node.right, prec + 1)

    def _expr_Assign(self, node: ast.Assign) -> None:
        self.expression(node.target, _PREC_POSTFIX)
        self.space()
        self.emit(node.op)
        self.space()
        self.expression(node.value, _PREC_ASSIGN)

    def _expr_Conditional(self, node: ast.Conditional) -> None:
        self.expression(node.test, _PREC_CONDITIONAL + 1)
        self.space()
        self.emit("?")
        self.space()
        self.expression(node.consequent, _PREC_ASSIGN)
        self.space()
        self.emit(":")
        self.space()
        self.expression(node.alternate, _PREC_ASSIGN)

    def _expr_Call(self, node: ast.Call) -> None:
        self.expression(node.callee, _PREC_POSTFIX)
        self.args(node.args)

    def _expr_New(self, node: ast.New) -> None:
        self.emit("new")
        self.expression(node.callee, _PREC_POSTFIX + 1)
        self.args(node.args)

    def _expr_Member(self, node: ast.Member) -> None:
        self.expression(node.obj, _PREC_POSTFIX)
        if node.computed:
            self.emit("[")
            self.expression(node.index, 0)
            self.emit("]")
        else:
            self.emit(".")
            self.emit(node.name)

    def args(self, args: list[ast.Node]) -> None:
        self.emit("(")
        for i, arg in enumerate(args):
            if i:
                self.emit(",")
                self.space()
            self.expression(arg, _PREC_ASSIGN)
        self.emit(")")


def _starts_ambiguously(node: ast.Node) -> bool:
    current = node
    while True:
        if isinstance(current, (ast.ObjectLiteral, ast.FunctionExpr)):
            return True
        if isinstance(current, ast.Binary):
            current = current.left
        elif isinstance(current, ast.Assign):
            current = current.target
        elif isinstance(current, ast.Conditional):
            current = current.test
        elif isinstance(current, ast.Call):
            current = current.callee
        elif isinstance(current, ast.Member):
            current = current.obj
        else:
            return False


def _node_prec(node: ast.Node) -> int:
    if isinstance(node, ast.Assign):
        return _PREC_ASSIGN
    if isinstance(node, ast.Conditional):
        return _PREC_CONDITIONAL
    if isinstance(node, ast.Binary):
        return _BINARY_PREC[node.op]
    if isinstance(node, ast.Unary):
        return _PREC_UNARY
    if isinstance(node, (ast.Call, ast.Member)):
        return _PREC_POSTFIX
    if isinstance(node, ast.New):
        return _PREC_POSTFIX + 1
    return _PREC_PRIMARY
