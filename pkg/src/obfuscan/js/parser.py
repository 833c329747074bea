"""Recursive-descent parser for the JavaScript subset.

Semicolons are required statement terminators; there is no automatic
semicolon insertion. Loop and conditional bodies must be blocks (an
``else`` may chain another ``if``). Only strict equality (===, !==) is in
the grammar; == and != tokenize but do not parse.
"""

from __future__ import annotations

from . import ast
from .errors import ParseError
from .lexer import Token, tokenize
from .source import SourceSpan, merge_spans

_ASSIGN_OPS = ("=", "+=", "-=", "*=", "/=", "%=")
_EQUALITY_OPS = ("===", "!==")
_RELATIONAL_OPS = ("<", "<=", ">", ">=")
_ADDITIVE_OPS = ("+", "-")
_MULTIPLICATIVE_OPS = ("*", "/", "%")
_UNARY_OPS = ("!", "-", "+", "typeof")


def parse_source(source: str, file_id: int = 0) -> ast.Program:
    return parse(tokenize(source, file_id))


def parse(tokens: list[Token]) -> ast.Program:
    program = _Parser(tokens).parse_program()
    _check_jump_placement(program)
    return program


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    # --- token plumbing ---

    def peek(self, offset: int = 0) -> Token:
        i = min(self.pos + offset, len(self.tokens) - 1)
        return self.tokens[i]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def at(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind in ("punct", "kw") and tok.text == text

    def eat(self, text: str) -> Token | None:
        if self.at(text):
            return self.advance()
        return None

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if not self.at(text):
            got = tok.text if tok.kind != "eof" else "end of input"
            raise ParseError(f"unexpected {got!r}", tok.span, expected=(repr(text),))
        return self.advance()

    def expect_ident(self) -> Token:
        tok = self.peek()
        if tok.kind != "ident":
            got = tok.text if tok.kind != "eof" else "end of input"
            raise ParseError(f"unexpected {got!r}", tok.span, expected=("identifier",))
        return self.advance()

    # --- statements ---

    def parse_program(self) -> ast.Program:
        body: list[ast.Node] = []
        first = self.peek().span
        while self.peek().kind != "eof":
            body.append(self.parse_statement())
        span = merge_spans(first, body[-1].span) if body else first
        return ast.Program(body=body, span=span)

    def parse_statement(self) -> ast.Node:
        tok = self.peek()
        if tok.kind == "kw":
            handler = _STATEMENT_DISPATCH.get(tok.text)
            if handler is not None:
                return handler(self)
        if self.at("{"):
            return self.parse_block()
        if self.at(";"):
            semi = self.advance()
            return ast.EmptyStmt(span=semi.span)
        expr = self.parse_expression()
        semi = self.expect(";")
        return ast.ExprStmt(expression=expr, span=merge_spans(expr.span, semi.span))

    def parse_block(self) -> ast.Block:
        open_tok = self.expect("{")
        body: list[ast.Node] = []
        while not self.at("}"):
            if self.peek().kind == "eof":
                raise ParseError("unexpected end of input", self.peek().span, expected=("'}'",))
            body.append(self.parse_statement())
        close_tok = self.expect("}")
        return ast.Block(body=body, span=merge_spans(open_tok.span, close_tok.span))

    def parse_var_decl(self, *, end_semicolon: bool = True) -> ast.VarDecl:
        kw = self.advance()  # var | let | const
        declarators = [self.parse_declarator()]
        while self.eat(","):
            declarators.append(self.parse_declarator())
        end_span = declarators[-1].span
        if end_semicolon:
            end_span = self.expect(";").span
        return ast.VarDecl(kind=kw.text, declarators=declarators, span=merge_spans(kw.span, end_span))

    def parse_declarator(self) -> ast.Declarator:
        name = self.expect_ident()
        init = None
        end_span = name.span
        if self.eat("="):
            init = self.parse_assignment()
            end_span = init.span
        return ast.Declarator(name=name.text, init=init, span=merge_spans(name.span, end_span))

    def parse_function_decl(self) -> ast.FunctionDecl:
        kw = self.expect("function")
        name = self.expect_ident()
        params = self.parse_params()
        body = self.parse_block()
        return ast.FunctionDecl(
            name=name.text, params=params, body=body, span=merge_spans(kw.span, body.span)
        )

    def parse_params(self) -> list[str]:
        self.expect("(")
        params: list[str] = []
        if not self.at(")"):
            params.append(self.expect_ident().text)
            while self.eat(","):
                params.append(self.expect_ident().text)
        self.expect(")")
        return params

    def parse_if(self) -> ast.If:
        kw = self.expect("if")
        self.expect("(")
        test = self.parse_expression()
        self.expect(")")
        consequent = self.parse_block()
        alternate: ast.Block | ast.If | None = None
        end_span = consequent.span
        if self.eat("else"):
            if self.at("if"):
                alternate = self.parse_if()
            else:
                alternate = self.parse_block()
            end_span = alternate.span
        return ast.If(test=test, consequent=consequent, alternate=alternate,
                      span=merge_spans(kw.span, end_span))

    def parse_while(self) -> ast.While:
        kw = self.expect("while")
        self.expect("(")
        test = self.parse_expression()
        self.expect(")")
        body = self.parse_block()
        return ast.While(test=test, body=body, span=merge_spans(kw.span, body.span))

    def parse_do_while(self) -> ast.DoWhile:
        kw = self.expect("do")
        body = self.parse_block()
        self.expect("while")
        self.expect("(")
        test = self.parse_expression()
        self.expect(")")
        semi = self.expect(";")
        return ast.DoWhile(body=body, test=test, span=merge_spans(kw.span, semi.span))

    def parse_for(self) -> ast.For:
        kw = self.expect("for")
        self.expect("(")
        init: ast.Node | None = None
        if self.at(";"):
            self.advance()
        elif self.peek().kind == "kw" and self.peek().text in ("var", "let", "const"):
            init = self.parse_var_decl(end_semicolon=False)
            self.expect(";")
        else:
            init = self.parse_expression()
            self.expect(";")
        test = None if self.at(";") else self.parse_expression()
        self.expect(";")
        update = None if self.at(")") else self.parse_expression()
        self.expect(")")
        body = self.parse_block()
        return ast.For(init=init, test=test, update=update, body=body,
                       span=merge_spans(kw.span, body.span))

    def parse_switch(self) -> ast.Switch:
        kw = self.expect("switch")
        self.expect("(")
        discriminant = self.parse_expression()
        self.expect(")")
        self.expect("{")
        cases: list[ast.SwitchCase] = []
        seen_default = False
        while not self.at("}"):
            tok = self.peek()
            if self.eat("case"):
                test = self.parse_expression()
                colon = self.expect(":")
                body = self.parse_case_body()
                end = body[-1].span if body else colon.span
                cases.append(ast.SwitchCase(test=test, body=body, span=merge_spans(tok.span, end)))
            elif self.eat("default"):
                if seen_default:
                    raise ParseError("duplicate default clause", tok.span)
                seen_default = True
                colon = self.expect(":")
                body = self.parse_case_body()
                end = body[-1].span if body else colon.span
                cases.append(ast.SwitchCase(test=None, body=body, span=merge_spans(tok.span, end)))
            else:
                got = tok.text if tok.kind != "eof" else "end of input"
                raise ParseError(f"unexpected {got!r}", tok.span,
                                 expected=("'case'", "'default'", "'}'"))
        close = self.expect("}")
        return ast.Switch(discriminant=discriminant, cases=cases, span=merge_spans(kw.span, close.span))

    def parse_case_body(self) -> list[ast.Node]:
        body: list[ast.Node] = []
        while not (self.at("case") or self.at("default") or self.at("}")):
            if self.peek().kind == "eof":
                raise ParseError("unexpected end of input", self.peek().span, expected=("'}'",))
            body.append(self.parse_statement())
        return body

    def parse_return(self) -> ast.Return:
        kw = self.expect("return")
        argument = None if self.at(";") else self.parse_expression()
        semi = self.expect(";")
        return ast.Return(argument=argument, span=merge_spans(kw.span, semi.span))

    def parse_break(self) -> ast.Break:
        kw = self.expect("break")
        semi = self.expect(";")
        return ast.Break(span=merge_spans(kw.span, semi.span))

    def parse_continue(self) -> ast.Continue:
        kw = self.expect("continue")
        semi = self.expect(";")
        return ast.Continue(span=merge_spans(kw.span, semi.span))

    def parse_debugger(self) -> ast.DebuggerStmt:
        kw = self.expect("debugger")
        semi = self.expect(";")
        return ast.DebuggerStmt(span=merge_spans(kw.span, semi.span))

    # --- expressions ---

    def parse_expression(self) -> ast.Node:
        return self.parse_assignment()

    def parse_assignment(self) -> ast.Node:
        left = self.parse_conditional()
        tok = self.peek()
        if tok.kind == "punct" and tok.text in _ASSIGN_OPS:
            if not isinstance(left, (ast.Identifier, ast.Member)):
                raise ParseError("invalid assignment target", left.span)
            self.advance()
            value = self.parse_assignment()
            return ast.Assign(op=tok.text, target=left, value=value,
                              span=merge_spans(left.span, value.span))
        return left

    def parse_conditional(self) -> ast.Node:
        test = self.parse_binary(0)
        if self.eat("?"):
            consequent = self.parse_assignment()
            self.expect(":")
            alternate = self.parse_assignment()
            return ast.Conditional(test=test, consequent=consequent, alternate=alternate,
                                   span=merge_spans(test.span, alternate.span))
        return test

    _BINARY_LEVELS: tuple[tuple[str, ...], ...] = (
        ("||",),
        ("&&",),
        _EQUALITY_OPS,
        _RELATIONAL_OPS,
        _ADDITIVE_OPS,
        _MULTIPLICATIVE_OPS,
    )

    def parse_binary(self, level: int) -> ast.Node:
        if level >= len(self._BINARY_LEVELS):
            return self.parse_unary()
        ops = self._BINARY_LEVELS[level]
        left = self.parse_binary(level + 1)
        while True:
            tok = self.peek()
            if tok.kind == "punct" and tok.text in ops:
                self.advance()
                right = self.parse_binary(level + 1)
                left = ast.Binary(op=tok.text, left=left, right=right,
                                  span=merge_spans(left.span, right.span))
            else:
                return left

    def parse_unary(self) -> ast.Node:
        tok = self.peek()
        if (tok.kind == "punct" and tok.text in ("!", "-", "+")) or (
            tok.kind == "kw" and tok.text == "typeof"
        ):
            self.advance()
            operand = self.parse_unary()
            return ast.Unary(op=tok.text, operand=operand, span=merge_spans(tok.span, operand.span))
        return self.parse_postfix()

    def parse_postfix(self) -> ast.Node:
        expr = self.parse_primary()
        while True:
            if self.at("."):
                self.advance()
                name = self.expect_ident()
                expr = ast.Member(obj=expr, computed=False, name=name.text,
                                  span=merge_spans(expr.span, name.span))
            elif self.at("["):
                self.advance()
                index = self.parse_expression()
                close = self.expect("]")
                expr = ast.Member(obj=expr, computed=True, index=index,
                                  span=merge_spans(expr.span, close.span))
            elif self.at("("):
                args, close = self.parse_args()
                expr = ast.Call(callee=expr, args=args, span=merge_spans(expr.span, close.span))
            else:
                return expr

    def parse_args(self) -> tuple[list[ast.Node], Token]:
        self.expect("(")
        args: list[ast.Node] = []
        if not self.at(")"):
            args.append(self.parse_assignment())
            while self.eat(","):
                args.append(self.parse_assignment())
        close = self.expect(")")
        return args, close

    def parse_primary(self) -> ast.Node:
        tok = self.peek()
        if tok.kind == "num" or tok.kind == "str":
            self.advance()
            return ast.Literal(value=tok.value, span=tok.span)
        if tok.kind == "kw":
            if tok.text == "true":
                self.advance()
                return ast.Literal(value=True, span=tok.span)
            if tok.text == "false":
                self.advance()
                return ast.Literal(value=False, span=tok.span)
            if tok.text == "null":
                self.advance()
                return ast.Literal(value=None, span=tok.span)
            if tok.text == "function":
                return self.parse_function_expr()
            if tok.text == "new":
                return self.parse_new()
        if tok.kind == "ident":
            self.advance()
            return ast.Identifier(name=tok.text, span=tok.span)
        if self.at("("):
            self.advance()
            expr = self.parse_expression()
            self.expect(")")
            return expr
        if self.at("["):
            return self.parse_array_literal()
        if self.at("{"):
            return self.parse_object_literal()
        got = tok.text if tok.kind != "eof" else "end of input"
        raise ParseError(f"unexpected {got!r}", tok.span, expected=("expression",))

    def parse_function_expr(self) -> ast.FunctionExpr:
        kw = self.expect("function")
        name = None
        if self.peek().kind == "ident":
            name = self.advance().text
        params = self.parse_params()
        body = self.parse_block()
        return ast.FunctionExpr(name=name, params=params, body=body,
                                span=merge_spans(kw.span, body.span))

    def parse_new(self) -> ast.New:
        kw = self.expect("new")
        callee: ast.Node = self.parse_primary()
        while True:
            if self.at("."):
                self.advance()
                name = self.expect_ident()
                callee = ast.Member(obj=callee, computed=False, name=name.text,
                                    span=merge_spans(callee.span, name.span))
            elif self.at("["):
                self.advance()
                index = self.parse_expression()
                close = self.expect("]")
                callee = ast.Member(obj=callee, computed=True, index=index,
                                    span=merge_spans(callee.span, close.span))
            else:
                break
        args, close = self.parse_args()
        return ast.New(callee=callee, args=args, span=merge_spans(kw.span, close.span))

    def parse_array_literal(self) -> ast.ArrayLiteral:
        open_tok = self.expect("[")
        elements: list[ast.Node] = []
        if not self.at("]"):
            elements.append(self.parse_assignment())
            while self.eat(","):
                elements.append(self.parse_assignment())
        close = self.expect("]")
        return ast.ArrayLiteral(elements=elements, span=merge_spans(open_tok.span, close.span))

    def parse_object_literal(self) -> ast.ObjectLiteral:
        open_tok = self.expect("{")
        properties: list[ast.ObjectProperty] = []
        if not self.at("}"):
            properties.append(self.parse_object_property())
            while self.eat(","):
                properties.append(self.parse_object_property())
        close = self.expect("}")
        return ast.ObjectLiteral(properties=properties, span=merge_spans(open_tok.span, close.span))

    def parse_object_property(self) -> ast.ObjectProperty:
        tok = self.peek()
        if tok.kind == "ident" or tok.kind == "kw":
            key, quoted = tok.text, False
        elif tok.kind == "str":
            key, quoted = tok.value, True
        else:
            raise ParseError("invalid object key", tok.span, expected=("identifier", "string"))
        self.advance()
        self.expect(":")
        value = self.parse_assignment()
        return ast.ObjectProperty(key=key, value=value, quoted=quoted,
                                  span=merge_spans(tok.span, value.span))


_STATEMENT_DISPATCH = {
    "var": _Parser.parse_var_decl,
    "let": _Parser.parse_var_decl,
    "const": _Parser.parse_var_decl,
    "function": _Parser.parse_function_decl,
    "if": _Parser.parse_if,
    "while": _Parser.parse_while,
    "do": _Parser.parse_do_while,
    "for": _Parser.parse_for,
    "switch": _Parser.parse_switch,
    "return": _Parser.parse_return,
    "break": _Parser.parse_break,
    "continue": _Parser.parse_continue,
    "debugger": _Parser.parse_debugger,
}


def _check_jump_placement(program: ast.Program) -> None:
    """break needs a loop or switch; continue needs a loop."""

    def visit(node: ast.Node, in_loop: bool, in_switch: bool) -> None:
        if isinstance(node, ast.Break):
            if not (in_loop or in_switch):
                raise ParseError("'break' outside loop or switch", node.span)
            return
        if isinstance(node, ast.Continue):
            if not in_loop:
                raise ParseError("'continue' outside loop", node.span)
            return
        if isinstance(node, (ast.FunctionDecl, ast.FunctionExpr)):
            visit(node.body, False, False)
            return
        if isinstance(node, (ast.While, ast.DoWhile, ast.For)):
            for child in ast.iter_children(node):
                visit(child, True, in_switch)
            return
        if isinstance(node, ast.Switch):
            for child in ast.iter_children(node):
                visit(child, in_loop, True)
            return
        for child in ast.iter_children(node):
            visit(child, in_loop, in_switch)

    visit(program, False, False)
